//! Mod-2 face/component indices and the exponent-2 description of the
//! Goeritz kernel.

use std::collections::VecDeque;

use serde::Serialize;

use super::{count_fox_mod_m, enumerate_fox_mod_m_capped, fox_matrix, FoxColoring};
use crate::diagram::PlanarDiagram;
use crate::linalg::{rank_mod_p, residue, solution_count_mod_m};
use crate::shading::{FaceId, ShadedDiagram};

/// `index[f][i]`: parity of the number of times a path from the unbounded
/// face to `f` crosses component `i`.
pub fn index_vectors(d: &PlanarDiagram) -> Vec<Vec<u8>> {
    let mu = d.component_count();
    let n = d.face_count();
    let mut adj: Vec<Vec<(FaceId, usize)>> = vec![Vec::new(); n];
    for e in d.edges() {
        adj[e.faces.0].push((e.faces.1, e.component));
        adj[e.faces.1].push((e.faces.0, e.component));
    }
    let mut idx: Vec<Option<Vec<u8>>> = vec![None; n];
    let root = d.unbounded_face();
    idx[root] = Some(vec![0; mu]);
    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        let here = idx[f].clone().unwrap();
        for &(g, k) in &adj[f] {
            let mut there = here.clone();
            there[k] ^= 1;
            match &idx[g] {
                None => {
                    idx[g] = Some(there);
                    queue.push_back(g);
                }
                Some(prev) => assert_eq!(prev, &there, "index of face {g} depends on the path"),
            }
        }
    }
    idx.into_iter().map(|v| v.expect("faces are connected")).collect()
}

pub fn face_component_index(d: &PlanarDiagram, face: FaceId, component: usize) -> u8 {
    index_vectors(d)[face][component]
}

/// Outcome of the mod-2 checks for one shading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exponent2Report {
    pub mu: usize,
    pub beta: usize,
    pub kernel_dim: usize,
    pub expected_dim: usize,
    /// Number of Fox colorings mod 2, expected `2^μ`.
    pub fox_count: String,
    /// Every component indicator is a Fox coloring, and every enumerated
    /// coloring is constant on components.
    pub fox_component_constant: bool,
    pub generators_in_kernel: bool,
    pub span_dim: usize,
    pub pass: bool,
}

/// Over `Z/2`: Fox colorings are the component-constant maps, the Goeritz
/// kernel is spanned by the all-ones vector and the component index vectors,
/// and its dimension is `μ − β + 1`.
pub fn exponent2_kernel_check(sd: &ShadedDiagram<'_>, cap: u64) -> Exponent2Report {
    let d = sd.diagram();
    let mu = d.component_count();
    let beta = sd.beta();

    let arc_component: Vec<usize> = d.arcs().iter().map(|a| d.edges()[a.edges[0]].component).collect();
    let indicators_ok = (0..mu).all(|k| {
        let f = FoxColoring::new(2, arc_component.iter().map(|&c| u64::from(c == k)).collect());
        f.is_valid(d)
    });
    let enumerated_ok = match enumerate_fox_mod_m_capped(d, 2, cap) {
        Ok(all) => all.iter().all(|f| {
            f.values.iter().zip(&arc_component).all(|(&x, &c)| {
                let first = arc_component.iter().position(|&k| k == c).unwrap();
                x == f.values[first]
            })
        }),
        Err(_) => true,
    };
    let fox_count = match count_fox_mod_m(d, 2, cap) {
        Ok(n) => n.into(),
        Err(_) => solution_count_mod_m(&fox_matrix(d), 2),
    };
    let fox_ok = fox_count == num_bigint::BigUint::from(2u32).pow(mu as u32);

    let g = sd.goeritz_matrix();
    let n = g.face_order.len();
    let g2: Vec<Vec<u64>> = (0..n).map(|i| g.matrix.row(i).iter().map(|x| residue(x, 2)).collect()).collect();
    let kernel_dim = n - rank_mod_p(&g2, 2);

    let index = index_vectors(d);
    let mut gens = vec![vec![1u64; n]];
    for k in 0..mu {
        gens.push(g.face_order.iter().map(|&f| u64::from(index[f][k])).collect());
    }
    let generators_in_kernel = gens.iter().all(|v| g.matrix.mul_vec_mod(v, 2).iter().all(|&x| x == 0));
    let span_dim = rank_mod_p(&gens, 2);

    let expected_dim = mu + 1 - beta;
    let fox_component_constant = indicators_ok && enumerated_ok;
    Exponent2Report {
        mu,
        beta,
        kernel_dim,
        expected_dim,
        fox_count: fox_count.to_string(),
        fox_component_constant,
        generators_in_kernel,
        span_dim,
        pass: fox_ok
            && fox_component_constant
            && generators_in_kernel
            && span_dim == kernel_dim
            && kernel_dim == expected_dim,
    }
}
