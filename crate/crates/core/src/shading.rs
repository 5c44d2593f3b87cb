//! Checkerboard shadings, Tait graphs, Goeritz indices and the unreduced
//! Goeritz matrix.
//!
//! Quadrant `q` of a crossing sits between positions `q` and `q + 1`, so
//! `q0`/`q2` are the quadrants immediately counterclockwise of the two
//! under-strand darts. With [`EtaConvention::Standard`] a crossing has index
//! `+1` when `q0` and `q2` are unshaded and `-1` otherwise.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{PlanarCrossing, PlanarDiagram};
use crate::linalg::IntMatrix;

pub type FaceId = usize;

/// Orientation of the Goeritz index rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EtaConvention {
    /// `η = +1` iff the quadrants counterclockwise of the under-strand darts
    /// are unshaded.
    #[default]
    Standard,
    /// The opposite rule. Negates every index; only useful to show that the
    /// golden matrices pin the orientation.
    Reversed,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShadingError {
    #[error("face {0} does not exist")]
    UnknownFace(FaceId),
    #[error("face {0} is shaded")]
    FaceShaded(FaceId),
    #[error("face {face} has no boundary curve {curve}")]
    UnknownCurve { face: FaceId, curve: usize },
}

/// A checkerboard 2-coloring of the faces: `sigma[f]` is 1 when `f` is
/// shaded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Shading {
    sigma: Vec<u8>,
    reference: (FaceId, u8),
}

impl Shading {
    pub fn sigma(&self) -> &[u8] {
        &self.sigma
    }

    pub fn reference(&self) -> (FaceId, u8) {
        self.reference
    }

    pub fn is_shaded(&self, f: FaceId) -> bool {
        self.sigma[f] == 1
    }

    /// The other checkerboard shading.
    pub fn complement(&self) -> Shading {
        Shading {
            sigma: self.sigma.iter().map(|s| 1 - s).collect(),
            reference: (self.reference.0, 1 - self.reference.1),
        }
    }

    /// Unshaded faces in ascending id order; this is the Goeritz row order.
    pub fn unshaded_faces(&self) -> Vec<FaceId> {
        (0..self.sigma.len()).filter(|&f| self.sigma[f] == 0).collect()
    }

    pub fn shaded_faces(&self) -> Vec<FaceId> {
        (0..self.sigma.len()).filter(|&f| self.sigma[f] == 1).collect()
    }
}

/// The unique checkerboard shading with `sigma(ref_face) = ref_value`.
pub fn checkerboard_shade(d: &PlanarDiagram, ref_face: FaceId, ref_value: u8) -> Result<Shading, ShadingError> {
    let n = d.face_count();
    if ref_face >= n {
        return Err(ShadingError::UnknownFace(ref_face));
    }
    let mut sigma = vec![u8::MAX; n];
    let mut adj = vec![Vec::new(); n];
    for e in d.edges() {
        adj[e.faces.0].push(e.faces.1);
        adj[e.faces.1].push(e.faces.0);
    }
    sigma[ref_face] = ref_value & 1;
    let mut queue = VecDeque::from([ref_face]);
    while let Some(f) = queue.pop_front() {
        for &g in &adj[f] {
            if sigma[g] == u8::MAX {
                sigma[g] = 1 - sigma[f];
                queue.push_back(g);
            } else {
                assert_ne!(sigma[g], sigma[f], "faces {f} and {g} share an edge but got the same shade");
            }
        }
    }
    assert!(sigma.iter().all(|&s| s <= 1), "face adjacency graph is disconnected");
    Ok(Shading { sigma, reference: (ref_face, ref_value & 1) })
}

/// Both shadings, the one with the unbounded face unshaded first.
pub fn both_shadings(d: &PlanarDiagram) -> [Shading; 2] {
    let s = checkerboard_shade(d, d.unbounded_face(), 0).expect("unbounded face exists");
    let t = s.complement();
    [s, t]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TaitColor {
    Shaded,
    Unshaded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TaitEdge {
    pub crossing: usize,
    pub ends: (FaceId, FaceId),
    pub eta: i8,
}

/// Checkerboard graph on the faces of one color, one edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaitGraph {
    pub color: TaitColor,
    pub vertices: Vec<FaceId>,
    pub edges: Vec<TaitEdge>,
}

impl TaitGraph {
    pub fn component_count(&self) -> usize {
        self.components().1
    }

    /// Component index of each vertex (by position in `vertices`), and the
    /// number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let pos = |f: FaceId| self.vertices.binary_search(&f).expect("edge end is a vertex");
        let mut uf = crate::diagram::UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(pos(e.ends.0), pos(e.ends.1));
        }
        uf.classes()
    }
}

/// A diagram together with a shading and an index convention.
#[derive(Clone, Debug)]
pub struct ShadedDiagram<'a> {
    diagram: &'a PlanarDiagram,
    shading: Shading,
    convention: EtaConvention,
}

impl<'a> ShadedDiagram<'a> {
    pub fn new(diagram: &'a PlanarDiagram, shading: Shading) -> Self {
        assert_eq!(shading.sigma.len(), diagram.face_count(), "shading belongs to another diagram");
        ShadedDiagram { diagram, shading, convention: EtaConvention::Standard }
    }

    pub fn with_convention(mut self, convention: EtaConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn diagram(&self) -> &'a PlanarDiagram {
        self.diagram
    }

    pub fn shading(&self) -> &Shading {
        &self.shading
    }

    pub fn convention(&self) -> EtaConvention {
        self.convention
    }

    /// Same diagram with the other shading.
    pub fn reversed(&self) -> Self {
        ShadedDiagram { diagram: self.diagram, shading: self.shading.complement(), convention: self.convention }
    }

    /// Goeritz index of a crossing.
    pub fn eta(&self, crossing: usize) -> i8 {
        let c = &self.diagram.crossings()[crossing];
        let q0_unshaded = !self.shading.is_shaded(c.quadrant_faces[0]);
        let standard = if q0_unshaded { 1 } else { -1 };
        match self.convention {
            EtaConvention::Standard => standard,
            EtaConvention::Reversed => -standard,
        }
    }

    pub fn etas(&self) -> Vec<i8> {
        (0..self.diagram.crossing_count()).map(|c| self.eta(c)).collect()
    }

    /// Quadrants of the given color at a crossing: `[0, 2]` or `[1, 3]`.
    fn quadrants(&self, c: &PlanarCrossing, shaded: bool) -> [usize; 2] {
        if self.shading.is_shaded(c.quadrant_faces[0]) == shaded {
            [0, 2]
        } else {
            [1, 3]
        }
    }

    pub fn tait_graph(&self, color: TaitColor) -> TaitGraph {
        let shaded = color == TaitColor::Shaded;
        let vertices = if shaded { self.shading.shaded_faces() } else { self.shading.unshaded_faces() };
        let edges = self
            .diagram
            .crossings()
            .iter()
            .map(|c| {
                let [a, b] = self.quadrants(c, shaded);
                TaitEdge { crossing: c.id, ends: (c.quadrant_faces[a], c.quadrant_faces[b]), eta: self.eta(c.id) }
            })
            .collect();
        TaitGraph { color, vertices, edges }
    }

    /// Number of components of the shaded Tait graph.
    pub fn beta(&self) -> usize {
        self.tait_graph(TaitColor::Shaded).component_count()
    }

    /// Row/column index of each unshaded face in the Goeritz matrix.
    pub fn matrix_index(&self, face: FaceId) -> Option<usize> {
        self.shading.unshaded_faces().binary_search(&face).ok()
    }

    pub fn goeritz_matrix(&self) -> GoeritzMatrix {
        let face_order = self.shading.unshaded_faces();
        let n = face_order.len();
        let idx = |f: FaceId| face_order.binary_search(&f).unwrap();
        let mut m = IntMatrix::zeros(n, n);
        for c in self.diagram.crossings() {
            let [a, b] = self.quadrants(c, false);
            let (i, j) = (idx(c.quadrant_faces[a]), idx(c.quadrant_faces[b]));
            if i == j {
                continue;
            }
            let eta = BigInt::from(self.eta(c.id));
            m[(i, j)] -= &eta;
            m[(j, i)] -= &eta;
            m[(i, i)] += &eta;
            m[(j, j)] += &eta;
        }
        GoeritzMatrix { matrix: m, face_order }
    }

    /// `ρ(γ)` for boundary curve `curve` of unshaded face `face`.
    pub fn boundary_rho(&self, face: FaceId, curve: usize) -> Result<RhoVector, ShadingError> {
        let faces = self.diagram.faces();
        let f = faces.get(face).ok_or(ShadingError::UnknownFace(face))?;
        if self.shading.is_shaded(face) {
            return Err(ShadingError::FaceShaded(face));
        }
        if curve >= f.boundary_curves.len() {
            return Err(ShadingError::UnknownCurve { face, curve });
        }
        let order = self.shading.unshaded_faces();
        let idx = |g: FaceId| order.binary_search(&g).unwrap();
        let i = idx(face);
        let mut entries = vec![BigInt::zero(); order.len()];
        for c in self.diagram.crossings() {
            let [a, b] = self.quadrants(c, false);
            for (mine, other) in [(a, b), (b, a)] {
                if c.quadrant_faces[mine] != face || c.quadrant_curves[mine] != curve {
                    continue;
                }
                let j = idx(c.quadrant_faces[other]);
                if j != i {
                    let eta = BigInt::from(self.eta(c.id));
                    entries[j] -= &eta;
                    entries[i] += &eta;
                }
            }
        }
        Ok(RhoVector { face, curve, entries })
    }

    /// All `ρ(γ)` vectors, for every boundary curve of every unshaded face.
    pub fn all_rho(&self) -> Vec<RhoVector> {
        self.shading
            .unshaded_faces()
            .into_iter()
            .flat_map(|f| (0..self.diagram.faces()[f].boundary_curves.len()).map(move |k| (f, k)))
            .map(|(f, k)| self.boundary_rho(f, k).unwrap())
            .collect()
    }

    /// Matrix index pairs `(i, j)`, `i ≠ j`, of unshaded faces meeting at a
    /// crossing where only one shaded face is incident.
    pub fn single_shaded_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in self.diagram.crossings() {
            let [sa, sb] = self.quadrants(c, true);
            if c.quadrant_faces[sa] != c.quadrant_faces[sb] {
                continue;
            }
            let [ua, ub] = self.quadrants(c, false);
            let (i, j) =
                (self.matrix_index(c.quadrant_faces[ua]).unwrap(), self.matrix_index(c.quadrant_faces[ub]).unwrap());
            if i != j {
                out.push((i.min(j), i.max(j)));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn report(&self) -> GoeritzReport {
        let g = self.goeritz_matrix();
        GoeritzReport {
            face_order: g.face_order.clone(),
            matrix: g.matrix,
            eta: self.etas(),
            beta: self.beta(),
            sigma: self.shading.sigma.clone(),
        }
    }
}

/// Unreduced Goeritz matrix with rows and columns indexed by `face_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoeritzMatrix {
    pub matrix: IntMatrix,
    pub face_order: Vec<FaceId>,
}

/// `ρ(γ)` for one boundary curve of an unshaded face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoVector {
    pub face: FaceId,
    pub curve: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub entries: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<serde_json::Value> = v.iter().map(crate::linalg::bigint_json).collect();
    vals.serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct GoeritzReport {
    pub face_order: Vec<FaceId>,
    pub matrix: IntMatrix,
    pub eta: Vec<i8>,
    pub beta: usize,
    pub sigma: Vec<u8>,
}

pub fn goeritz_matrix(d: &PlanarDiagram, s: &Shading) -> GoeritzMatrix {
    ShadedDiagram::new(d, s.clone()).goeritz_matrix()
}

pub fn beta_count(d: &PlanarDiagram, s: &Shading) -> usize {
    ShadedDiagram::new(d, s.clone()).beta()
}

pub fn goeritz_index(d: &PlanarDiagram, s: &Shading, crossing: usize) -> i8 {
    ShadedDiagram::new(d, s.clone()).eta(crossing)
}

pub fn tait_graph(d: &PlanarDiagram, s: &Shading, color: TaitColor) -> TaitGraph {
    ShadedDiagram::new(d, s.clone()).tait_graph(color)
}

pub fn boundary_rho(d: &PlanarDiagram, s: &Shading, face: FaceId, curve: usize) -> Result<RhoVector, ShadingError> {
    ShadedDiagram::new(d, s.clone()).boundary_rho(face, curve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Diagram;

    fn realize(text: &str) -> PlanarDiagram {
        Diagram::parse(text).unwrap().realize().unwrap()
    }

    // triangle face outside, as in the usual picture
    const TREFOIL: &str = "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 } outer K.face(1)";

    #[test]
    fn free_loop_shading() {
        let d = realize("piece U { O }");
        let s = checkerboard_shade(&d, d.unbounded_face(), 0).unwrap();
        assert_eq!(s.sigma(), &[0, 1]);
        let sd = ShadedDiagram::new(&d, s);
        assert_eq!(sd.beta(), 1);
        assert_eq!(sd.goeritz_matrix().matrix, IntMatrix::zeros(1, 1));
    }

    #[test]
    fn trefoil_shadings_and_tait_graphs() {
        let d = realize(TREFOIL);
        let s = checkerboard_shade(&d, d.unbounded_face(), 0).unwrap();
        assert_eq!(s.unshaded_faces().len(), 2);
        assert_eq!(s.shaded_faces().len(), 3);
        let flipped = checkerboard_shade(&d, d.unbounded_face(), 1).unwrap();
        assert_eq!(flipped, s.complement());

        let sd = ShadedDiagram::new(&d, s);
        let shaded = sd.tait_graph(TaitColor::Shaded);
        assert_eq!(shaded.vertices.len(), 3);
        // a 3-cycle: every crossing joins two distinct petals
        assert!(shaded.edges.iter().all(|e| e.ends.0 != e.ends.1));
        let mut pairs: Vec<_> = shaded.edges.iter().map(|e| (e.ends.0.min(e.ends.1), e.ends.0.max(e.ends.1))).collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 3);
        let unshaded = sd.tait_graph(TaitColor::Unshaded);
        assert_eq!(unshaded.vertices.len(), 2);
        assert_eq!(unshaded.edges.len(), 3);
        assert_eq!(sd.beta(), 1);
    }

    #[test]
    fn reversing_the_shading_negates_eta() {
        let d = realize(TREFOIL);
        let [s, t] = both_shadings(&d);
        let a = ShadedDiagram::new(&d, s);
        let b = ShadedDiagram::new(&d, t);
        for c in 0..3 {
            assert_eq!(a.eta(c), -b.eta(c));
        }
        let r = a.clone().with_convention(EtaConvention::Reversed);
        assert_eq!(r.etas(), b.etas());
    }

    #[test]
    fn goeritz_is_a_signed_laplacian() {
        let d = realize(TREFOIL);
        for s in both_shadings(&d) {
            let g = ShadedDiagram::new(&d, s).goeritz_matrix().matrix;
            assert!(g.is_symmetric());
            for i in 0..g.rows() {
                assert!(g.row(i).iter().sum::<BigInt>().is_zero());
            }
        }
    }

    #[test]
    fn rho_of_connected_boundary_is_the_row() {
        let d = realize(TREFOIL);
        for s in both_shadings(&d) {
            let sd = ShadedDiagram::new(&d, s);
            let g = sd.goeritz_matrix();
            for (i, &f) in g.face_order.iter().enumerate() {
                let rho = sd.boundary_rho(f, 0).unwrap();
                assert_eq!(rho.entries, g.matrix.row(i).to_vec());
            }
        }
    }

    #[test]
    fn rho_errors() {
        let d = realize(TREFOIL);
        let [s, _] = both_shadings(&d);
        let sd = ShadedDiagram::new(&d, s.clone());
        let shaded = s.shaded_faces()[0];
        assert_eq!(sd.boundary_rho(shaded, 0), Err(ShadingError::FaceShaded(shaded)));
        let u = s.unshaded_faces()[0];
        assert_eq!(sd.boundary_rho(u, 5), Err(ShadingError::UnknownCurve { face: u, curve: 5 }));
        assert_eq!(sd.boundary_rho(99, 0), Err(ShadingError::UnknownFace(99)));
    }

    #[test]
    fn unlink_matrix_is_zero() {
        let d = realize("piece A { O } piece B { O } piece C { O }");
        // interiors shaded
        let s = checkerboard_shade(&d, d.unbounded_face(), 0).unwrap();
        let sd = ShadedDiagram::new(&d, s);
        assert_eq!(sd.beta(), 3);
        assert_eq!(sd.goeritz_matrix().matrix, IntMatrix::zeros(1, 1));
        let r = sd.reversed();
        assert_eq!(r.beta(), 1);
        assert_eq!(r.goeritz_matrix().matrix, IntMatrix::zeros(3, 3));
    }
}
