use serde::Serialize;

use super::{Diagram, Host, PieceBody, PieceMap, UnionFind};

pub type FaceId = usize;
pub type EdgeId = usize;
pub type DartId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DartKind {
    /// End of an edge at a crossing, `position` counterclockwise.
    Crossing { crossing: usize, position: u8 },
    /// Side of a free loop: 0 outside, 1 inside.
    LoopSide { piece: usize, side: u8 },
}

/// One connected component of a face boundary: a dart orbit of one piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCurve {
    pub piece: usize,
    pub local_face: usize,
    pub darts: Vec<DartId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    pub boundary_curves: Vec<BoundaryCurve>,
    pub is_unbounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub id: EdgeId,
    pub piece: usize,
    /// Label from the source; `None` for a free loop.
    pub label: Option<u64>,
    pub darts: (DartId, DartId),
    /// Faces on the two sides (left and right of the first dart).
    pub faces: (FaceId, FaceId),
    pub arc: usize,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub id: usize,
    pub edges: Vec<EdgeId>,
    pub free_loop: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkComponent {
    pub id: usize,
    pub edges: Vec<EdgeId>,
}

/// Two faces sharing an edge, labeled by the arc and link component of that
/// edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceAdjacency {
    pub faces: (FaceId, FaceId),
    pub edge: EdgeId,
    pub arc: usize,
    pub component: usize,
}

/// A crossing with global ids. Quadrant `q` lies between positions `q` and
/// `q + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarCrossing {
    pub id: usize,
    pub piece: usize,
    pub edges: [EdgeId; 4],
    pub quadrant_faces: [FaceId; 4],
    /// Boundary curve (index into the face's `boundary_curves`) that owns
    /// each quadrant corner.
    pub quadrant_curves: [usize; 4],
}

impl PlanarCrossing {
    /// Arc through each position; 0 and 2 are the under-strand ends.
    pub fn arcs(&self, d: &PlanarDiagram) -> [usize; 4] {
        self.edges.map(|e| d.edges[e].arc)
    }
}

/// A validated diagram with faces, arcs and link components.
///
/// Immutable once built; faces are ordered by their smallest global dart,
/// where global dart ids run over the pieces in order.
#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    source: Diagram,
    darts: Vec<DartKind>,
    dart_face: Vec<FaceId>,
    crossings: Vec<PlanarCrossing>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    arcs: Vec<Arc>,
    components: Vec<LinkComponent>,
    unbounded: FaceId,
}

impl PlanarDiagram {
    pub(super) fn build(d: &Diagram) -> Self {
        let maps: Vec<PieceMap> = d.pieces.iter().map(|p| PieceMap::build(p).expect("validated")).collect();

        // global darts
        let mut dart_offset = Vec::with_capacity(maps.len());
        let mut crossing_offset = Vec::with_capacity(maps.len());
        let mut darts = Vec::new();
        let mut n_crossings = 0;
        for (pi, (piece, map)) in d.pieces.iter().zip(&maps).enumerate() {
            dart_offset.push(darts.len());
            crossing_offset.push(n_crossings);
            match piece.body {
                PieceBody::FreeLoop => {
                    darts.push(DartKind::LoopSide { piece: pi, side: 0 });
                    darts.push(DartKind::LoopSide { piece: pi, side: 1 });
                }
                PieceBody::Crossings(_) => {
                    for ld in 0..map.dart_count() {
                        darts.push(DartKind::Crossing { crossing: n_crossings + ld / 4, position: (ld % 4) as u8 });
                    }
                }
            }
            n_crossings += piece.crossing_count();
        }

        // merge local faces across placements
        let mut face_offset = Vec::with_capacity(maps.len());
        let mut n_local = 0;
        for m in &maps {
            face_offset.push(n_local);
            n_local += m.face_count();
        }
        let mut uf = UnionFind::new(n_local);
        let outer = |pi: usize| face_offset[pi] + d.pieces[pi].outer_face.unwrap_or(0);
        let hosts = d.hosts();
        let mut top: Option<usize> = None;
        for (pi, host) in hosts.iter().enumerate() {
            match *host {
                Host::Top => match top {
                    None => top = Some(outer(pi)),
                    Some(t) => uf.union(t, outer(pi)),
                },
                Host::Face { piece, face } => uf.union(face_offset[piece] + face, outer(pi)),
            }
        }
        // order merged classes by smallest global dart
        let mut class_min = vec![usize::MAX; n_local];
        for (pi, m) in maps.iter().enumerate() {
            for (lf, orbit) in m.orbits.iter().enumerate() {
                let root = uf.find(face_offset[pi] + lf);
                let min_dart = dart_offset[pi] + orbit.iter().min().unwrap();
                class_min[root] = class_min[root].min(min_dart);
            }
        }
        let mut roots: Vec<usize> = (0..n_local).filter(|&x| uf.find(x) == x).collect();
        roots.sort_by_key(|&r| class_min[r]);
        let mut face_of_root = vec![usize::MAX; n_local];
        for (id, &r) in roots.iter().enumerate() {
            face_of_root[r] = id;
        }
        let mut faces: Vec<Face> =
            (0..roots.len()).map(|id| Face { id, boundary_curves: Vec::new(), is_unbounded: false }).collect();
        let mut dart_face = vec![0; darts.len()];
        let mut dart_curve = vec![0; darts.len()];
        for (pi, m) in maps.iter().enumerate() {
            for (lf, orbit) in m.orbits.iter().enumerate() {
                let f = face_of_root[uf.find(face_offset[pi] + lf)];
                let curve_idx = faces[f].boundary_curves.len();
                let global: Vec<DartId> = orbit.iter().map(|&x| dart_offset[pi] + x).collect();
                for &g in &global {
                    dart_face[g] = f;
                    dart_curve[g] = curve_idx;
                }
                faces[f].boundary_curves.push(BoundaryCurve { piece: pi, local_face: lf, darts: global });
            }
        }
        let unbounded = face_of_root[uf.find(top.expect("at least one top-level piece"))];
        faces[unbounded].is_unbounded = true;

        // edges
        let mut edges: Vec<Edge> = Vec::new();
        let mut dart_edge = vec![0; darts.len()];
        for (pi, (piece, m)) in d.pieces.iter().zip(&maps).enumerate() {
            let off = dart_offset[pi];
            match piece.body {
                PieceBody::FreeLoop => {
                    let id = edges.len();
                    dart_edge[off] = id;
                    dart_edge[off + 1] = id;
                    edges.push(Edge {
                        id,
                        piece: pi,
                        label: None,
                        darts: (off, off + 1),
                        faces: (dart_face[off], dart_face[off + 1]),
                        arc: 0,
                        component: 0,
                    });
                }
                PieceBody::Crossings(_) => {
                    for &(label, a, b) in &m.edges {
                        let id = edges.len();
                        let (ga, gb) = (off + a, off + b);
                        dart_edge[ga] = id;
                        dart_edge[gb] = id;
                        // left of a leaving its crossing is quadrant p, right is p - 1
                        let right = off + (a & !3) + ((a + 3) & 3);
                        edges.push(Edge {
                            id,
                            piece: pi,
                            label: Some(label),
                            darts: (ga, gb),
                            faces: (dart_face[ga], dart_face[right]),
                            arc: 0,
                            component: 0,
                        });
                    }
                }
            }
        }

        let mut crossings = Vec::with_capacity(n_crossings);
        for (pi, piece) in d.pieces.iter().enumerate() {
            for ci in 0..piece.crossing_count() {
                let base = dart_offset[pi] + 4 * ci;
                crossings.push(PlanarCrossing {
                    id: crossing_offset[pi] + ci,
                    piece: pi,
                    edges: std::array::from_fn(|p| dart_edge[base + p]),
                    quadrant_faces: std::array::from_fn(|q| dart_face[base + q]),
                    quadrant_curves: std::array::from_fn(|q| dart_curve[base + q]),
                });
            }
        }

        // arcs: continue straight through over-passes
        let mut arc_uf = UnionFind::new(edges.len());
        let mut comp_uf = UnionFind::new(edges.len());
        for c in &crossings {
            arc_uf.union(c.edges[1], c.edges[3]);
            comp_uf.union(c.edges[1], c.edges[3]);
            comp_uf.union(c.edges[0], c.edges[2]);
        }
        let (arc_of, n_arcs) = arc_uf.classes();
        let (comp_of, n_comps) = comp_uf.classes();
        let mut arcs: Vec<Arc> = (0..n_arcs).map(|id| Arc { id, edges: Vec::new(), free_loop: false }).collect();
        let mut components: Vec<LinkComponent> =
            (0..n_comps).map(|id| LinkComponent { id, edges: Vec::new() }).collect();
        for e in &mut edges {
            e.arc = arc_of[e.id];
            e.component = comp_of[e.id];
            arcs[e.arc].edges.push(e.id);
            arcs[e.arc].free_loop = e.label.is_none();
            components[e.component].edges.push(e.id);
        }

        PlanarDiagram { source: d.clone(), darts, dart_face, crossings, edges, faces, arcs, components, unbounded }
    }

    pub fn source(&self) -> &Diagram {
        &self.source
    }

    pub fn darts(&self) -> &[DartKind] {
        &self.darts
    }

    pub fn dart_face(&self, dart: DartId) -> FaceId {
        self.dart_face[dart]
    }

    pub fn crossings(&self) -> &[PlanarCrossing] {
        &self.crossings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn link_components(&self) -> &[LinkComponent] {
        &self.components
    }

    pub fn unbounded_face(&self) -> FaceId {
        self.unbounded
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Number of link components `μ`.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Arcs that never pass under anything: free loops and closed
    /// components lying entirely on top.
    pub fn closed_arc_count(&self) -> usize {
        let mut under = vec![false; self.arcs.len()];
        for c in &self.crossings {
            under[self.edges[c.edges[0]].arc] = true;
            under[self.edges[c.edges[2]].arc] = true;
        }
        under.iter().filter(|&&u| !u).count()
    }

    /// One adjacency per edge.
    pub fn face_adjacency(&self) -> Vec<FaceAdjacency> {
        self.edges
            .iter()
            .map(|e| FaceAdjacency { faces: e.faces, edge: e.id, arc: e.arc, component: e.component })
            .collect()
    }

    /// Faces that share an edge with `face`, with multiplicity.
    pub fn neighbors(&self, face: FaceId) -> Vec<FaceId> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.faces.0 == face {
                out.push(e.faces.1);
            }
            if e.faces.1 == face {
                out.push(e.faces.0);
            }
        }
        out
    }
}
