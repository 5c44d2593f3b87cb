//! Exhaustive enumeration of colorings by direct relation checks.
//!
//! Values are assigned in variable order and each crossing relation is tested
//! as soon as its last variable is set, so a failing prefix is not extended.

use num_bigint::BigUint;

use super::{dehn_matrix, fox_matrix, ColoringError, DehnColoring, FoxColoring};
use crate::diagram::PlanarDiagram;
use crate::linalg::solution_count_mod_m;

/// Largest `m^n` search space the enumerators accept by default.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

type Relation = Vec<(usize, i64)>;

fn fox_relations(d: &PlanarDiagram) -> Vec<Relation> {
    d.crossings()
        .iter()
        .map(|c| {
            let a = c.arcs(d);
            vec![(a[0], 1), (a[2], 1), (a[1], -2)]
        })
        .collect()
}

fn dehn_relations(d: &PlanarDiagram) -> Vec<Relation> {
    d.crossings()
        .iter()
        .map(|c| {
            let q = c.quadrant_faces;
            vec![(q[0], 1), (q[1], 1), (q[2], -1), (q[3], -1)]
        })
        .collect()
}

struct Search {
    modulus: u64,
    // relations to test once variable i is set
    checks: Vec<Vec<Relation>>,
    values: Vec<u64>,
}

impl Search {
    fn new(vars: usize, relations: Vec<Relation>, modulus: u64) -> Self {
        let mut checks = vec![Vec::new(); vars];
        for r in relations {
            let last = r.iter().map(|&(v, _)| v).max().expect("nonempty relation");
            checks[last].push(r);
        }
        Search { modulus, checks, values: vec![0; vars] }
    }

    fn holds(&self, r: &Relation) -> bool {
        let m = self.modulus as i64;
        r.iter().map(|&(v, c)| c * self.values[v] as i64).sum::<i64>().rem_euclid(m) == 0
    }

    fn run(&mut self, level: usize, visit: &mut dyn FnMut(&[u64])) {
        if level == self.values.len() {
            visit(&self.values);
            return;
        }
        for x in 0..self.modulus {
            self.values[level] = x;
            if self.checks[level].iter().all(|r| self.holds(r)) {
                self.run(level + 1, visit);
            }
        }
    }
}

fn within_cap(
    kind: &'static str,
    vars: usize,
    modulus: u64,
    cap: u64,
    snf: impl FnOnce() -> BigUint,
) -> Result<(), ColoringError> {
    if modulus < 2 {
        return Err(ColoringError::BadModulus(modulus));
    }
    let total = BigUint::from(modulus).pow(vars as u32);
    if total > BigUint::from(cap) {
        return Err(ColoringError::CapExceeded {
            kind,
            modulus,
            assignments: total.to_string(),
            cap,
            snf_count: snf().to_string(),
        });
    }
    Ok(())
}

fn search(vars: usize, relations: Vec<Relation>, modulus: u64, visit: &mut dyn FnMut(&[u64])) {
    Search::new(vars, relations, modulus).run(0, visit);
}

pub fn enumerate_fox_mod_m_capped(d: &PlanarDiagram, m: u64, cap: u64) -> Result<Vec<FoxColoring>, ColoringError> {
    within_cap("Fox", d.arc_count(), m, cap, || solution_count_mod_m(&fox_matrix(d), m))?;
    let mut out = Vec::new();
    search(d.arc_count(), fox_relations(d), m, &mut |v| out.push(FoxColoring { modulus: m, values: v.to_vec() }));
    Ok(out)
}

pub fn enumerate_dehn_mod_m_capped(d: &PlanarDiagram, m: u64, cap: u64) -> Result<Vec<DehnColoring>, ColoringError> {
    within_cap("Dehn", d.face_count(), m, cap, || solution_count_mod_m(&dehn_matrix(d), m))?;
    let mut out = Vec::new();
    search(d.face_count(), dehn_relations(d), m, &mut |v| out.push(DehnColoring { modulus: m, values: v.to_vec() }));
    Ok(out)
}

/// Every Fox coloring mod `m`, constants included, in lexicographic order.
pub fn enumerate_fox_mod_m(d: &PlanarDiagram, m: u64) -> Result<Vec<FoxColoring>, ColoringError> {
    enumerate_fox_mod_m_capped(d, m, DEFAULT_ENUM_CAP)
}

/// Every Dehn coloring mod `m`, in lexicographic order.
pub fn enumerate_dehn_mod_m(d: &PlanarDiagram, m: u64) -> Result<Vec<DehnColoring>, ColoringError> {
    enumerate_dehn_mod_m_capped(d, m, DEFAULT_ENUM_CAP)
}

pub fn count_fox_mod_m(d: &PlanarDiagram, m: u64, cap: u64) -> Result<u64, ColoringError> {
    within_cap("Fox", d.arc_count(), m, cap, || solution_count_mod_m(&fox_matrix(d), m))?;
    let mut n = 0;
    search(d.arc_count(), fox_relations(d), m, &mut |_| n += 1);
    Ok(n)
}

pub fn count_dehn_mod_m(d: &PlanarDiagram, m: u64, cap: u64) -> Result<u64, ColoringError> {
    within_cap("Dehn", d.face_count(), m, cap, || solution_count_mod_m(&dehn_matrix(d), m))?;
    let mut n = 0;
    search(d.face_count(), dehn_relations(d), m, &mut |_| n += 1);
    Ok(n)
}
