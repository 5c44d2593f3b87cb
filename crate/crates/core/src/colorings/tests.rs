use std::collections::BTreeMap;

use super::*;
use crate::library;
use crate::linalg::kernel_basis_mod_m;
use crate::shading::both_shadings;

fn lib(name: &str) -> PlanarDiagram {
    library::get(name).unwrap().diagram().realize().unwrap()
}

fn shaded(d: &PlanarDiagram) -> ShadedDiagram<'_> {
    let [s, _] = both_shadings(d);
    ShadedDiagram::new(d, s)
}

#[test]
fn fox_matrix_shapes() {
    let t = lib("trefoil");
    let f = fox_matrix(&t);
    assert_eq!(f.shape(), (3, 3));
    for i in 0..3 {
        let mut row: Vec<i64> = f.row(i).iter().map(|x| x.try_into().unwrap()).collect();
        row.sort();
        assert_eq!(row, vec![-2, 1, 1]);
    }
    assert_eq!(fox_matrix(&lib("unknot-0x")).shape(), (0, 1));

    // both under-ends of each Hopf crossing lie on one arc
    let h = fox_matrix(&lib("hopf"));
    for i in 0..2 {
        let mut row: Vec<i64> = h.row(i).iter().map(|x| x.try_into().unwrap()).collect();
        row.sort();
        assert_eq!(row, vec![-2, 2]);
    }
}

#[test]
fn dehn_matrix_shapes() {
    assert_eq!(dehn_matrix(&lib("unknot-0x")).shape(), (0, 2));
    let t = lib("trefoil");
    assert_eq!(dehn_matrix(&t).shape(), (3, 5));
    assert_eq!(solution_count_mod_m(&dehn_matrix(&t), 3), BigUint::from(27u32));
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_fox_mod_m(&lib("trefoil"), 3).unwrap().len(), 9);
    assert_eq!(enumerate_fox_mod_m(&lib("hopf"), 3).unwrap().len(), 3);
    for m in 2..7 {
        assert_eq!(enumerate_fox_mod_m(&lib("unknot-0x"), m).unwrap().len() as u64, m);
    }
    // constants are always there
    let h = enumerate_fox_mod_m(&lib("hopf"), 3).unwrap();
    assert!(h.iter().all(|f| f.values.iter().all(|&x| x == f.values[0])));
}

#[test]
fn enumeration_cap() {
    let w = lib("whitehead");
    match enumerate_dehn_mod_m(&w, 9) {
        Err(ColoringError::CapExceeded { assignments, snf_count, .. }) => {
            assert_eq!(assignments, "4782969");
            assert_eq!(snf_count, solution_count_mod_m(&dehn_matrix(&w), 9).to_string());
        }
        other => panic!("expected cap error, got {other:?}"),
    }
    assert!(enumerate_fox_mod_m_capped(&lib("trefoil"), 3, 26).is_err());
    assert_eq!(enumerate_fox_mod_m_capped(&lib("trefoil"), 3, 27).unwrap().len(), 9);
}

#[test]
fn groups() {
    let t = lib("trefoil");
    let [s, sbar] = both_shadings(&t);
    let z3 = FgAbelianGroup::cyclic(3);
    assert_eq!(fox_group(&t, &s, &z3), "Z/3 + Z/3".parse().unwrap());
    assert_eq!(fox_group(&t, &sbar, &z3), "Z/3 + Z/3".parse().unwrap());
    assert_eq!(dehn_group(&t, &s, &z3), "Z/3^3".parse().unwrap());

    let u = lib("unlink-3");
    let z5 = FgAbelianGroup::cyclic(5);
    for s in both_shadings(&u) {
        assert_eq!(fox_group(&u, &s, &z5), z5.power(3));
    }

    let f = lib("unknot-0x");
    for s in both_shadings(&f) {
        assert_eq!(dehn_group(&f, &s, &FgAbelianGroup::cyclic(7)), FgAbelianGroup::cyclic(7).power(2));
    }
}

#[test]
fn torus_and_whitehead_agree() {
    let t = lib("torus-2-8");
    let w = lib("whitehead");
    let specs = ["Z", "Z/2", "Z/4", "Z/8", "Z/9", "Z/2 + Z/4", "Z + Z/8"];
    for spec in specs {
        let a: FgAbelianGroup = spec.parse().unwrap();
        for (st, sw) in both_shadings(&t).into_iter().zip(both_shadings(&w)) {
            assert_eq!(fox_group(&t, &st, &a), fox_group(&w, &sw, &a), "{spec}");
        }
    }
}

#[test]
fn phi_examples() {
    let t = lib("trefoil");
    let [s, _] = both_shadings(&t);
    let c = phi_map(&t, &DehnColoring::constant(&t, 5, 2)).unwrap();
    assert_eq!(c, FoxColoring::constant(&t, 5, 4));
    let cb = phi_map(&t, &DehnColoring::checkerboard(&s, 5, 1, 3)).unwrap();
    assert_eq!(cb, FoxColoring::constant(&t, 5, 4));

    let mut bad = DehnColoring::constant(&t, 5, 0);
    bad.values[0] = 1;
    assert!(matches!(phi_map(&t, &bad), Err(ColoringError::InconsistentDehn(_))));

    let all = enumerate_dehn_mod_m(&t, 3).unwrap();
    for x in all.iter().step_by(4) {
        for y in all.iter().step_by(5) {
            let lhs = phi_map(&t, &x.add(y)).unwrap();
            let rhs = phi_map(&t, x).unwrap().add(&phi_map(&t, y).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn lift_examples() {
    let t = lib("trefoil");
    let base = t.unbounded_face();
    let zero = lift_fox_to_dehn(&t, &FoxColoring::constant(&t, 3, 0), base, 0).unwrap();
    assert_eq!(zero, DehnColoring::constant(&t, 3, 0));

    // constant c alternates between 0 and c
    let [s, _] = both_shadings(&t);
    let d = lift_fox_to_dehn(&t, &FoxColoring::constant(&t, 7, 4), base, 0).unwrap();
    assert_eq!(d, DehnColoring::checkerboard(&s, 7, 0, 4));

    let f = FoxColoring::new(3, vec![0, 1, 2]);
    assert!(f.is_valid(&t));
    let d = lift_fox_to_dehn(&t, &f, base, 0).unwrap();
    assert!(d.is_valid(&t));
    assert_eq!(phi_map(&t, &d).unwrap(), f);

    let bad = FoxColoring::new(5, vec![0, 1, 2]);
    assert!(matches!(lift_fox_to_dehn(&t, &bad, base, 0), Err(ColoringError::InconsistentFox(_))));
}

#[test]
fn v_map_examples() {
    let t = lib("trefoil");
    let sd = shaded(&t);
    let v = v_map(&sd, &DehnColoring::constant(&t, 3, 2)).unwrap();
    assert_eq!(v.entries, vec![2, 2]);
    let v = v_map(&sd, &DehnColoring::checkerboard(sd.shading(), 3, 1, 2)).unwrap();
    assert_eq!(v.entries, vec![1, 1]);
    for dc in enumerate_dehn_mod_m(&t, 3).unwrap() {
        v_map(&sd, &dc).unwrap();
    }
    let mut bad = DehnColoring::constant(&t, 3, 0);
    bad.values[1] = 1;
    assert!(v_map(&sd, &bad).is_err());
}

#[test]
fn extend_examples() {
    let t = lib("trefoil");
    let sd = shaded(&t);
    let zero = extend_kernel_to_dehn(&sd, &ModVector::zeros(3, 2), &BTreeMap::new()).unwrap();
    assert_eq!(zero, DehnColoring::constant(&t, 3, 0));

    for vv in kernel_basis_mod_m(&sd.goeritz_matrix().matrix, 3) {
        let dc = extend_kernel_to_dehn(&sd, &vv, &BTreeMap::new()).unwrap();
        assert!(dc.is_valid(&t));
        assert_eq!(v_map(&sd, &dc).unwrap(), vv);
    }

    // G = [[-3, 3], [3, -3]] so (0, 1) is not a kernel vector mod 5
    let err = extend_kernel_to_dehn(&sd, &ModVector::new(5, vec![0, 1]), &BTreeMap::new());
    assert!(matches!(err, Err(ColoringError::NotInKernel { .. })));
}

#[test]
fn extend_with_seeds_on_unlink() {
    let u = lib("unlink-2");
    let sd = shaded(&u);
    assert_eq!(sd.beta(), 2);
    let shaded_faces = sd.shading().shaded_faces();
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..4 {
        for b in 0..4 {
            for x in 0..4 {
                let seeds = BTreeMap::from([(shaded_faces[0], a), (shaded_faces[1], b)]);
                let dc = extend_kernel_to_dehn(&sd, &ModVector::new(4, vec![x]), &seeds).unwrap();
                seen.insert(dc);
            }
        }
    }
    // m^2 seeds times |ker| = 4 gives every Dehn coloring
    assert_eq!(seen.len(), 64);
    assert_eq!(enumerate_dehn_mod_m(&u, 4).unwrap().len(), 64);

    let bad = BTreeMap::from([(sd.shading().unshaded_faces()[0], 1)]);
    assert!(matches!(
        extend_kernel_to_dehn(&sd, &ModVector::new(4, vec![0]), &bad),
        Err(ColoringError::BadSeed { .. })
    ));
}

#[test]
fn index_examples() {
    let f = lib("unknot-0x");
    let ub = f.unbounded_face();
    assert_eq!(face_component_index(&f, ub, 0), 0);
    assert_eq!(face_component_index(&f, 1 - ub, 0), 1);

    let h = lib("hopf");
    let idx = index_vectors(&h);
    assert!(idx[h.unbounded_face()].iter().all(|&b| b == 0));
    // the central bigon is the face whose neighbours are all bounded
    let center = (0..h.face_count())
        .find(|&g| g != h.unbounded_face() && !h.neighbors(g).contains(&h.unbounded_face()))
        .unwrap();
    assert_eq!(idx[center], vec![1, 1]);
}

#[test]
fn exponent2_examples() {
    let cases = [("trefoil", 1, 1), ("torus-2-8", 2, 2), ("unlink-3", 1, 3)];
    for (name, dim, mu) in cases {
        let d = lib(name);
        let r = exponent2_kernel_check(&shaded(&d), DEFAULT_ENUM_CAP);
        assert!(r.pass, "{name}: {r:?}");
        assert_eq!(r.kernel_dim, dim, "{name}");
        assert_eq!(r.fox_count, (1u64 << mu).to_string(), "{name}");
    }
}

#[test]
fn report_counts() {
    let t = lib("trefoil");
    let sd = shaded(&t);
    let r = ColoringReport::new(&sd, &FgAbelianGroup::integers(), &[3, 4], DEFAULT_ENUM_CAP);
    assert_eq!(r.beta, 1);
    assert_eq!(r.counts[&3].fox, "9");
    assert_eq!(r.counts[&3].fox_enumerated, Some(9));
    assert_eq!(r.counts[&3].dehn_enumerated, Some(27));
    assert_eq!(r.counts[&4].fox, "4");
}

#[test]
fn verify_trefoil_and_split_union() {
    let opts = VerifyOptions { moduli: vec![2, 3, 4, 5], ..Default::default() };
    let recs = verify_theorems("trefoil", &lib("trefoil"), &opts);
    assert!(recs.iter().all(|r| r.pass), "{recs:#?}");
    let fox3 = recs.iter().find(|r| r.check == "fox_count" && r.m == Some(3)).unwrap();
    assert_eq!(fox3.actual, "9");

    let opts = VerifyOptions { moduli: vec![3], ..Default::default() };
    let recs = verify_theorems("trefoil-hopf", &lib("trefoil-hopf"), &opts);
    assert!(recs.iter().all(|r| r.pass), "{recs:#?}");
    let split = recs.iter().find(|r| r.check == "split_product").unwrap();
    assert_eq!(split.actual, "27");
}

#[test]
fn renesting_variants_are_valid() {
    let src = library::get("trefoil-nested-in-trefoil").unwrap().diagram();
    let vs = renesting_variants(&src);
    assert!(vs.len() >= 5);
    for v in vs {
        assert!(v.validate().ok);
        assert_ne!(v, src);
    }
    assert!(renesting_variants(&library::get("trefoil").unwrap().diagram()).is_empty());
}
