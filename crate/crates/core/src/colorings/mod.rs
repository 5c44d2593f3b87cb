//! Fox and Dehn colorings, the maps between them, and the coloring groups
//! computed from the Goeritz matrix.
//!
//! A Fox coloring assigns a residue to every arc so that at each crossing
//! `f(a0) + f(a2) = 2·f(a1)`, where `a0`, `a2` are the under-strand arcs and
//! `a1` the over-strand. A Dehn coloring assigns residues to faces so that
//! `d(q0) + d(q1) = d(q2) + d(q3)` around every crossing.

mod enumerate;
mod index;
mod verify;

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::PlanarDiagram;
use crate::linalg::{kernel_structure, smith_normal_form, solution_count_mod_m, FgAbelianGroup, IntMatrix, ModVector};
use crate::shading::{FaceId, ShadedDiagram, Shading, TaitColor};

pub use enumerate::{
    count_dehn_mod_m, count_fox_mod_m, enumerate_dehn_mod_m, enumerate_dehn_mod_m_capped, enumerate_fox_mod_m,
    enumerate_fox_mod_m_capped, DEFAULT_ENUM_CAP,
};
pub use index::{exponent2_kernel_check, face_component_index, index_vectors, Exponent2Report};
pub use verify::{renesting_variants, verify_theorems, CheckRecord, VerifyOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error(
        "{kind} enumeration mod {modulus} needs {assignments} assignments, over the cap of {cap}; \
         the SNF count is {snf_count}"
    )]
    CapExceeded { kind: &'static str, modulus: u64, assignments: String, cap: u64, snf_count: String },
    #[error("Dehn coloring violates the relation at {0}")]
    InconsistentDehn(String),
    #[error("Fox coloring violates the relation at {0}")]
    InconsistentFox(String),
    #[error("vector is not in the kernel: conflict at crossing {crossing}")]
    NotInKernel { crossing: usize },
    #[error("seed face {face}: {reason}")]
    BadSeed { face: FaceId, reason: &'static str },
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

/// Arc-valued coloring over `Z/m`, indexed by arc id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FoxColoring {
    pub modulus: u64,
    pub values: Vec<u64>,
}

/// Face-valued coloring over `Z/m`, indexed by face id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DehnColoring {
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl FoxColoring {
    pub fn new(modulus: u64, values: Vec<u64>) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let values = values.into_iter().map(|x| x % modulus).collect();
        FoxColoring { modulus, values }
    }

    pub fn constant(d: &PlanarDiagram, modulus: u64, c: u64) -> Self {
        Self::new(modulus, vec![c; d.arc_count()])
    }

    /// First crossing whose relation fails, if any.
    pub fn violation(&self, d: &PlanarDiagram) -> Option<usize> {
        let m = self.modulus;
        d.crossings().iter().position(|c| {
            let a = c.arcs(d);
            (self.values[a[0]] + self.values[a[2]]) % m != (2 * self.values[a[1]]) % m
        })
    }

    pub fn is_valid(&self, d: &PlanarDiagram) -> bool {
        self.values.len() == d.arc_count() && self.violation(d).is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        Self { modulus: m, values: self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % m).collect() }
    }
}

impl DehnColoring {
    pub fn new(modulus: u64, values: Vec<u64>) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let values = values.into_iter().map(|x| x % modulus).collect();
        DehnColoring { modulus, values }
    }

    pub fn constant(d: &PlanarDiagram, modulus: u64, c: u64) -> Self {
        Self::new(modulus, vec![c; d.face_count()])
    }

    /// `α` on unshaded faces and `β` on shaded ones.
    pub fn checkerboard(s: &Shading, modulus: u64, alpha: u64, beta: u64) -> Self {
        Self::new(modulus, s.sigma().iter().map(|&x| if x == 0 { alpha } else { beta }).collect())
    }

    pub fn violation(&self, d: &PlanarDiagram) -> Option<usize> {
        let m = self.modulus;
        d.crossings().iter().position(|c| {
            let q = c.quadrant_faces.map(|f| self.values[f]);
            (q[0] + q[1]) % m != (q[2] + q[3]) % m
        })
    }

    pub fn is_valid(&self, d: &PlanarDiagram) -> bool {
        self.values.len() == d.face_count() && self.violation(d).is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        Self { modulus: m, values: self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % m).collect() }
    }
}

/// Fox relation matrix: one row per crossing, one column per arc.
pub fn fox_matrix(d: &PlanarDiagram) -> IntMatrix {
    let mut m = IntMatrix::zeros(d.crossing_count(), d.arc_count());
    for c in d.crossings() {
        let a = c.arcs(d);
        m[(c.id, a[0])] += 1;
        m[(c.id, a[2])] += 1;
        m[(c.id, a[1])] -= 2;
    }
    m
}

/// Dehn relation matrix: one row per crossing, one column per face.
pub fn dehn_matrix(d: &PlanarDiagram) -> IntMatrix {
    let mut m = IntMatrix::zeros(d.crossing_count(), d.face_count());
    for c in d.crossings() {
        let q = c.quadrant_faces;
        m[(c.id, q[0])] += 1;
        m[(c.id, q[1])] += 1;
        m[(c.id, q[2])] -= 1;
        m[(c.id, q[3])] -= 1;
    }
    m
}

/// `ker_A G(D,s) ⊕ A^{β−1}`.
pub fn fox_group(d: &PlanarDiagram, s: &Shading, coeffs: &FgAbelianGroup) -> FgAbelianGroup {
    let sd = ShadedDiagram::new(d, s.clone());
    let beta = sd.beta();
    kernel_structure(&sd.goeritz_matrix().matrix, coeffs).direct_sum(&coeffs.power(beta - 1))
}

/// `ker_A G(D,s) ⊕ A^β`.
pub fn dehn_group(d: &PlanarDiagram, s: &Shading, coeffs: &FgAbelianGroup) -> FgAbelianGroup {
    let sd = ShadedDiagram::new(d, s.clone());
    let beta = sd.beta();
    kernel_structure(&sd.goeritz_matrix().matrix, coeffs).direct_sum(&coeffs.power(beta))
}

/// Predicted `|F_{Z/m}|` and `|D_{Z/m}|` from the Goeritz matrix.
pub fn predicted_counts(sd: &ShadedDiagram<'_>, modulus: u64) -> (BigUint, BigUint) {
    let kernel = solution_count_mod_m(&sd.goeritz_matrix().matrix, modulus);
    let beta = sd.beta();
    let fox = &kernel * BigUint::from(modulus).pow(beta as u32 - 1);
    let dehn = &fox * modulus;
    (fox, dehn)
}

/// `φ(d)(a) = d(F) + d(F')` for the faces on either side of arc `a`.
pub fn phi_map(d: &PlanarDiagram, dc: &DehnColoring) -> Result<FoxColoring, ColoringError> {
    check_len(d.face_count(), dc.values.len())?;
    let m = dc.modulus;
    let mut values = vec![None; d.arc_count()];
    for e in d.edges() {
        let v = (dc.values[e.faces.0] + dc.values[e.faces.1]) % m;
        match values[e.arc] {
            None => values[e.arc] = Some(v),
            Some(w) if w == v => {}
            Some(_) => return Err(ColoringError::InconsistentDehn(format!("arc {}", e.arc))),
        }
    }
    Ok(FoxColoring { modulus: m, values: values.into_iter().map(|v| v.unwrap_or(0)).collect() })
}

/// A Dehn coloring `d` with `φ(d) = f` and `d(base) = α0`, built by walking
/// the face adjacency graph with `d(F') = f(a) − d(F)`.
pub fn lift_fox_to_dehn(
    d: &PlanarDiagram,
    f: &FoxColoring,
    base: FaceId,
    alpha0: u64,
) -> Result<DehnColoring, ColoringError> {
    check_len(d.arc_count(), f.values.len())?;
    let m = f.modulus;
    let n = d.face_count();
    let mut adj: Vec<Vec<(FaceId, usize)>> = vec![Vec::new(); n];
    for e in d.edges() {
        adj[e.faces.0].push((e.faces.1, e.arc));
        adj[e.faces.1].push((e.faces.0, e.arc));
    }
    let mut val: Vec<Option<u64>> = vec![None; n];
    val[base] = Some(alpha0 % m);
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        let vx = val[x].unwrap();
        for &(y, arc) in &adj[x] {
            let want = (f.values[arc] + m - vx) % m;
            match val[y] {
                None => {
                    val[y] = Some(want);
                    queue.push_back(y);
                }
                Some(vy) if vy == want => {}
                Some(_) => return Err(ColoringError::InconsistentFox(format!("faces {x} and {y} across arc {arc}"))),
            }
        }
    }
    Ok(DehnColoring { modulus: m, values: val.into_iter().map(|v| v.expect("faces are connected")).collect() })
}

/// Restriction of a Dehn coloring to the unshaded faces, in matrix order.
pub fn v_map(sd: &ShadedDiagram<'_>, dc: &DehnColoring) -> Result<ModVector, ColoringError> {
    let d = sd.diagram();
    check_len(d.face_count(), dc.values.len())?;
    if let Some(c) = dc.violation(d) {
        return Err(ColoringError::InconsistentDehn(format!("crossing {c}")));
    }
    restrict_to_kernel(&sd.shading().unshaded_faces(), &sd.goeritz_matrix().matrix, dc)
}

pub(crate) fn restrict_to_kernel(
    unshaded: &[FaceId],
    g: &IntMatrix,
    dc: &DehnColoring,
) -> Result<ModVector, ColoringError> {
    let v: Vec<u64> = unshaded.iter().map(|&f| dc.values[f]).collect();
    if g.mul_vec_mod(&v, dc.modulus).iter().any(|&x| x != 0) {
        return Err(ColoringError::InconsistentDehn("the Goeritz kernel".into()));
    }
    Ok(ModVector::new(dc.modulus, v))
}

/// Extends a kernel vector on the unshaded faces to a Dehn coloring.
///
/// Shaded faces are filled along the shaded Tait graph using the crossing
/// relation. Each Tait component takes its value from `seeds` when one of its
/// faces is listed there, and 0 at its lowest face otherwise.
pub fn extend_kernel_to_dehn(
    sd: &ShadedDiagram<'_>,
    vv: &ModVector,
    seeds: &BTreeMap<FaceId, u64>,
) -> Result<DehnColoring, ColoringError> {
    let d = sd.diagram();
    let s = sd.shading();
    let m = vv.modulus;
    let unshaded = s.unshaded_faces();
    check_len(unshaded.len(), vv.len())?;

    let mut val: Vec<Option<u64>> = vec![None; d.face_count()];
    for (&f, &x) in unshaded.iter().zip(&vv.entries) {
        val[f] = Some(x % m);
    }

    let tait = sd.tait_graph(TaitColor::Shaded);
    let (comp, ncomp) = tait.components();
    let pos = |f: FaceId| tait.vertices.binary_search(&f).ok();
    let mut start: Vec<Option<(FaceId, u64)>> = vec![None; ncomp];
    for (&f, &x) in seeds {
        let p = pos(f).ok_or(ColoringError::BadSeed { face: f, reason: "not a shaded face" })?;
        if start[comp[p]].is_some() {
            return Err(ColoringError::BadSeed { face: f, reason: "second seed in one Tait component" });
        }
        start[comp[p]] = Some((f, x % m));
    }
    for (p, &f) in tait.vertices.iter().enumerate() {
        if start[comp[p]].is_none() {
            start[comp[p]] = Some((f, 0));
        }
    }

    // crossing relation with shaded quadrants a < b reads d(b) = d(a) + rest
    let mut adj: Vec<Vec<(FaceId, usize, bool)>> = vec![Vec::new(); d.face_count()];
    for e in &tait.edges {
        adj[e.ends.0].push((e.ends.1, e.crossing, true));
        adj[e.ends.1].push((e.ends.0, e.crossing, false));
    }
    let rest = |crossing: usize| {
        let c = &d.crossings()[crossing];
        let signs = [1i64, 1, -1, -1];
        let shaded_q0 = s.is_shaded(c.quadrant_faces[0]);
        let (ua, ub) = if shaded_q0 { (1, 3) } else { (0, 2) };
        let mut r = 0i64;
        for q in [ua, ub] {
            r += signs[q] * val_unshaded(&unshaded, vv, c.quadrant_faces[q]) as i64;
        }
        r.rem_euclid(m as i64) as u64
    };

    for (f, x) in start.into_iter().flatten() {
        val[f] = Some(x);
        let mut queue = VecDeque::from([f]);
        while let Some(a) = queue.pop_front() {
            let va = val[a].unwrap();
            for &(b, crossing, forward) in &adj[a] {
                let r = rest(crossing);
                let want = if forward { (va + r) % m } else { (va + m - r) % m };
                match val[b] {
                    None => {
                        val[b] = Some(want);
                        queue.push_back(b);
                    }
                    Some(vb) if vb == want => {}
                    Some(_) => return Err(ColoringError::NotInKernel { crossing }),
                }
            }
        }
    }
    let dc = DehnColoring { modulus: m, values: val.into_iter().map(|v| v.expect("every face reached")).collect() };
    debug_assert!(dc.is_valid(d));
    Ok(dc)
}

fn val_unshaded(unshaded: &[FaceId], vv: &ModVector, f: FaceId) -> u64 {
    vv.entries[unshaded.binary_search(&f).expect("unshaded face")]
}

fn check_len(expected: usize, got: usize) -> Result<(), ColoringError> {
    if expected == got {
        Ok(())
    } else {
        Err(ColoringError::WrongLength { expected, got })
    }
}

/// Counts for one modulus: predicted from the Goeritz matrix, and by
/// enumeration when within the cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModCounts {
    pub kernel: String,
    pub fox: String,
    pub dehn: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fox_enumerated: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dehn_enumerated: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Coloring groups of a shaded diagram over one coefficient group.
#[derive(Clone, Debug, Serialize)]
pub struct ColoringReport {
    pub coefficients: FgAbelianGroup,
    pub kernel: FgAbelianGroup,
    pub fox_group: FgAbelianGroup,
    pub dehn_group: FgAbelianGroup,
    pub beta: usize,
    pub counts: BTreeMap<u64, ModCounts>,
}

impl ColoringReport {
    pub fn new(sd: &ShadedDiagram<'_>, coeffs: &FgAbelianGroup, moduli: &[u64], cap: u64) -> Self {
        let d = sd.diagram();
        let g = sd.goeritz_matrix().matrix;
        let snf = smith_normal_form(&g);
        let beta = sd.beta();
        let kernel = crate::linalg::kernel_from_snf(&snf, g.cols(), coeffs);
        let counts = moduli
            .iter()
            .map(|&m| {
                let k = crate::linalg::count_from_snf(&snf, g.cols(), m);
                let fox = &k * BigUint::from(m).pow(beta as u32 - 1);
                let dehn = &fox * m;
                let fe = count_fox_mod_m(d, m, cap).ok();
                let de = count_dehn_mod_m(d, m, cap).ok();
                let note = (fe.is_none() || de.is_none()).then(|| format!("enumeration over the cap of {cap} skipped"));
                (
                    m,
                    ModCounts {
                        kernel: k.to_string(),
                        fox: fox.to_string(),
                        dehn: dehn.to_string(),
                        fox_enumerated: fe,
                        dehn_enumerated: de,
                        note,
                    },
                )
            })
            .collect();
        ColoringReport {
            coefficients: coeffs.clone(),
            fox_group: kernel.direct_sum(&coeffs.power(beta - 1)),
            dehn_group: kernel.direct_sum(&coeffs.power(beta)),
            kernel,
            beta,
            counts,
        }
    }
}

#[cfg(test)]
mod tests;
