use goeritz::colorings::{enumerate_dehn_mod_m, fox_group, phi_map, DehnColoring};
use goeritz::diagram::{Diagram, Host, Placement};
use goeritz::library::{self, LIBRARY};
use goeritz::linalg::{
    brute_force_solution_count, kernel_structure, smith_normal_form, solution_count_mod_m, FgAbelianGroup, IntMatrix,
};
use goeritz::shading::{both_shadings, ShadedDiagram};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

proptest! {
    #[test]
    fn snf_identity(m in small_matrix()) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&(s.u() * &m) * s.v()), s.d());
        prop_assert_eq!(s.u().determinant().magnitude().clone(), 1u32.into());
        prop_assert_eq!(s.v().determinant().magnitude().clone(), 1u32.into());
        let f = s.factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == 0.into());
        }
    }

    #[test]
    fn snf_count_matches_brute_force(m in small_matrix(), q in 2u64..=6) {
        if let Some(n) = brute_force_solution_count(&m, q, 20_000) {
            prop_assert_eq!(solution_count_mod_m(&m, q), BigUint::from(n));
            let k = kernel_structure(&m, &FgAbelianGroup::cyclic(q));
            prop_assert_eq!(k.order(), Some(BigUint::from(n)));
        }
    }

    #[test]
    fn group_display_round_trips(orders in prop::collection::vec(2u64..=30, 0..5), free in 0usize..3) {
        let g = FgAbelianGroup::from_summands(orders.clone(), free);
        let again: FgAbelianGroup = g.to_string().parse().unwrap();
        prop_assert_eq!(&again, &g);
        let order: u64 = orders.iter().product();
        if free == 0 {
            prop_assert_eq!(g.order(), Some(BigUint::from(order)));
        }
    }

    #[test]
    fn relabeled_edges_keep_the_matrix(idx in 0..LIBRARY.len(), shift in 1u64..50) {
        let e = &LIBRARY[idx];
        let src = e.diagram().to_source();
        let relabeled = relabel(&src, shift);
        let a = e.diagram().realize().unwrap();
        let b = Diagram::parse(&relabeled).unwrap().realize().unwrap();
        for (s, t) in both_shadings(&a).into_iter().zip(both_shadings(&b)) {
            prop_assert_eq!(
                ShadedDiagram::new(&a, s).goeritz_matrix(),
                ShadedDiagram::new(&b, t).goeritz_matrix()
            );
        }
    }

    #[test]
    fn random_nestings_round_trip_and_agree(hosts in prop::collection::vec((0usize..4, 0usize..2), 4)) {
        // four free loops with random forest placements
        let d = library::get("unlink-4").unwrap().diagram();
        let mut placements = Vec::new();
        for (child, &(h, f)) in hosts.iter().enumerate() {
            if h < child {
                placements.push(Placement { child, host: Host::Face { piece: h, face: f } });
            }
        }
        let v = d.with_placements(placements);
        prop_assert!(v.validate().ok);
        prop_assert_eq!(Diagram::parse(&v.to_source()).unwrap(), v.clone());
        let pd = v.realize().unwrap();
        let z3 = FgAbelianGroup::cyclic(3);
        for s in both_shadings(&pd) {
            prop_assert_eq!(fox_group(&pd, &s, &z3), z3.power(4));
        }
    }

    #[test]
    fn goeritz_is_a_laplacian(idx in 0..LIBRARY.len(), flip in any::<bool>()) {
        let pd = LIBRARY[idx].diagram().realize().unwrap();
        let s = both_shadings(&pd)[usize::from(flip)].clone();
        let g = ShadedDiagram::new(&pd, s).goeritz_matrix().matrix;
        prop_assert!(g.is_symmetric());
        for i in 0..g.rows() {
            let sum: num_bigint::BigInt = g.row(i).iter().sum();
            prop_assert_eq!(sum, 0.into());
        }
    }

    #[test]
    fn phi_is_additive(i in 0usize..200, j in 0usize..200, name in prop::sample::select(vec!["trefoil", "hopf", "figure-eight"])) {
        let d = library::get(name).unwrap().diagram().realize().unwrap();
        let all: Vec<DehnColoring> = enumerate_dehn_mod_m(&d, 3).unwrap();
        let (x, y) = (&all[i % all.len()], &all[j % all.len()]);
        let lhs = phi_map(&d, &x.add(y)).unwrap();
        let rhs = phi_map(&d, x).unwrap().add(&phi_map(&d, y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

/// Adds `shift` to every edge label, keeping the source otherwise intact.
fn relabel(src: &str, shift: u64) -> String {
    let mut out = String::new();
    for line in src.lines() {
        if !line.starts_with("piece") {
            out += line;
            out.push('\n');
            continue;
        }
        let words: Vec<String> = line
            .split(' ')
            .map(|w| match w.parse::<u64>() {
                Ok(n) => (n + shift).to_string(),
                Err(_) => w.to_string(),
            })
            .collect();
        out += &words.join(" ");
        out.push('\n');
    }
    out
}

#[test]
fn emitted_library_sources_reparse() {
    for e in LIBRARY {
        let d = e.diagram();
        assert_eq!(Diagram::parse(&d.to_source()).unwrap(), d, "{}", e.name);
    }
}
