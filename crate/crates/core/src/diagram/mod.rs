//! Link diagrams as planar combinatorial maps.
//!
//! A diagram is a list of connected [`Piece`]s, each either a rotation system
//! on 4-valent crossings or a crossing-free circle, plus [`Placement`]s saying
//! which face of which piece a split piece sits inside. Crossing entries are
//! listed counterclockwise; positions 0 and 2 are the ends of the
//! under-strand.

mod parse;
mod planar;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use parse::{parse_diagram, ParseError};
pub use planar::{
    Arc, BoundaryCurve, DartKind, Edge, Face, FaceAdjacency, LinkComponent, PlanarCrossing, PlanarDiagram,
};

pub type EdgeLabel = u64;

/// One crossing, edge labels counterclockwise with `edges[0]` and `edges[2]`
/// on the under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [EdgeLabel; 4],
}

impl Crossing {
    pub fn new(a: EdgeLabel, b: EdgeLabel, c: EdgeLabel, d: EdgeLabel) -> Self {
        Crossing { edges: [a, b, c, d] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceBody {
    Crossings(Vec<Crossing>),
    FreeLoop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub name: String,
    pub body: PieceBody,
    /// Local face that faces the host; defaults to face 0.
    pub outer_face: Option<usize>,
}

impl Piece {
    pub fn crossings(name: impl Into<String>, crossings: Vec<Crossing>) -> Self {
        Piece { name: name.into(), body: PieceBody::Crossings(crossings), outer_face: None }
    }

    pub fn free_loop(name: impl Into<String>) -> Self {
        Piece { name: name.into(), body: PieceBody::FreeLoop, outer_face: None }
    }

    pub fn crossing_count(&self) -> usize {
        match &self.body {
            PieceBody::Crossings(c) => c.len(),
            PieceBody::FreeLoop => 0,
        }
    }

    pub fn is_free_loop(&self) -> bool {
        matches!(self.body, PieceBody::FreeLoop)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Host {
    /// Side by side in the unbounded face.
    Top,
    /// Inside local face `face` of piece `piece`.
    Face { piece: usize, face: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub child: usize,
    pub host: Host,
}

/// A parsed link diagram. Derived structure lives in [`PlanarDiagram`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pieces: Vec<Piece>,
    placements: Vec<Placement>,
}

impl Diagram {
    /// Assembles a diagram without checking it; see [`Diagram::validate`].
    pub fn from_parts(pieces: Vec<Piece>, placements: Vec<Placement>) -> Self {
        Diagram { pieces, placements }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_diagram(text)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn piece_index(&self, name: &str) -> Option<usize> {
        self.pieces.iter().position(|p| p.name == name)
    }

    pub fn crossing_count(&self) -> usize {
        self.pieces.iter().map(Piece::crossing_count).sum()
    }

    pub fn free_loop_count(&self) -> usize {
        self.pieces.iter().filter(|p| p.is_free_loop()).count()
    }

    /// Host of each piece, `Top` when unplaced.
    pub fn hosts(&self) -> Vec<Host> {
        let mut hosts = vec![Host::Top; self.pieces.len()];
        for p in &self.placements {
            if let Some(h) = hosts.get_mut(p.child) {
                *h = p.host;
            }
        }
        hosts
    }

    /// Same pieces, different nesting.
    pub fn with_placements(&self, placements: Vec<Placement>) -> Self {
        Diagram { pieces: self.pieces.clone(), placements }
    }

    /// Every piece moved to the top level, side by side.
    pub fn flattened(&self) -> Self {
        self.with_placements(Vec::new())
    }

    /// The sub-diagram made of a single piece.
    pub fn piece_diagram(&self, index: usize) -> Self {
        let mut piece = self.pieces[index].clone();
        piece.outer_face = None;
        Diagram { pieces: vec![piece], placements: Vec::new() }
    }

    /// Disjoint union with `other` placed side by side; piece names of
    /// `other` are suffixed on collision.
    pub fn split_union(&self, other: &Diagram) -> Self {
        let offset = self.pieces.len();
        let mut pieces = self.pieces.clone();
        for p in &other.pieces {
            let mut p = p.clone();
            while pieces.iter().any(|q| q.name == p.name) {
                p.name.push('\'');
            }
            pieces.push(p);
        }
        let mut placements = self.placements.clone();
        placements.extend(other.placements.iter().map(|pl| Placement {
            child: pl.child + offset,
            host: match pl.host {
                Host::Top => Host::Top,
                Host::Face { piece, face } => Host::Face { piece: piece + offset, face },
            },
        }));
        Diagram { pieces, placements }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_diagram(self)
    }

    /// Validates and computes faces, arcs and components.
    pub fn realize(&self) -> Result<PlanarDiagram, DiagramError> {
        let report = self.validate();
        if !report.ok {
            return Err(DiagramError::Invalid(report));
        }
        Ok(PlanarDiagram::build(self))
    }

    /// Renders the diagram in the text format accepted by [`parse_diagram`].
    pub fn to_source(&self) -> String {
        parse::emit(self)
    }
}

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("invalid diagram: {0}")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IssueCode {
    EmptyDiagram,
    EdgeLabelCount,
    DisconnectedPiece,
    GenusNonzero,
    UnknownPiece,
    UnknownHostFace,
    DuplicatePlacement,
    PlacementCycle,
}

impl fmt::Display for IssueCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        f.write_str(s.as_str().unwrap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub code: IssueCode,
    pub message: String,
    pub location: String,
}

/// Per-piece counts used by the Euler check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceStats {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub errors: Vec<Issue>,
    pub pieces: Vec<PieceStats>,
}

impl ValidationReport {
    pub fn has(&self, code: IssueCode) -> bool {
        self.errors.iter().any(|e| e.code == code)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        let msgs: Vec<String> =
            self.errors.iter().map(|e| format!("{} at {}: {}", e.code, e.location, e.message)).collect();
        f.write_str(&msgs.join("; "))
    }
}

/// Local combinatorial map of one piece.
///
/// Crossing darts are numbered `4·crossing + position`; a free loop has dart
/// 0 on its outside and dart 1 on its inside. Faces are orbits of
/// `d ↦ rot⁻¹(opposite(d))`: the face to the left of dart `(c, p)` leaving
/// its crossing is the quadrant between positions `p` and `p+1`. Local face
/// ids are ordered by their smallest dart.
#[derive(Clone, Debug)]
pub(crate) struct PieceMap {
    pub face_of_dart: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    /// `(label, first dart, second dart)` ordered by first dart.
    pub edges: Vec<(EdgeLabel, usize, usize)>,
}

impl PieceMap {
    pub fn dart_count(&self) -> usize {
        self.face_of_dart.len()
    }

    pub fn face_count(&self) -> usize {
        self.orbits.len()
    }

    /// Builds the map, or reports labels that do not occur exactly twice.
    pub fn build(piece: &Piece) -> Result<Self, Vec<(EdgeLabel, usize)>> {
        let crossings = match &piece.body {
            PieceBody::FreeLoop => {
                return Ok(PieceMap {
                    face_of_dart: vec![0, 1],
                    orbits: vec![vec![0], vec![1]],
                    edges: vec![(0, 0, 1)],
                })
            }
            PieceBody::Crossings(c) => c,
        };
        let mut seen: BTreeMap<EdgeLabel, Vec<usize>> = BTreeMap::new();
        for (ci, c) in crossings.iter().enumerate() {
            for (p, &label) in c.edges.iter().enumerate() {
                seen.entry(label).or_default().push(4 * ci + p);
            }
        }
        let bad: Vec<(EdgeLabel, usize)> =
            seen.iter().filter(|(_, d)| d.len() != 2).map(|(&l, d)| (l, d.len())).collect();
        if !bad.is_empty() {
            return Err(bad);
        }
        let n = 4 * crossings.len();
        let mut opposite = vec![0; n];
        let mut edges = Vec::with_capacity(seen.len());
        for (&label, darts) in &seen {
            opposite[darts[0]] = darts[1];
            opposite[darts[1]] = darts[0];
            edges.push((label, darts[0], darts[1]));
        }
        edges.sort_by_key(|e| e.1);

        let next = |d: usize| {
            let o = opposite[d];
            (o & !3) | ((o + 3) & 3)
        };
        let mut face_of_dart = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            let mut d = start;
            while face_of_dart[d] == usize::MAX {
                face_of_dart[d] = id;
                orbit.push(d);
                d = next(d);
            }
            orbits.push(orbit);
        }
        Ok(PieceMap { face_of_dart, orbits, edges })
    }

    /// Whether the crossings form one connected graph.
    pub fn is_connected(&self) -> bool {
        let v = self.dart_count() / 4;
        if v <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(v);
        for &(_, a, b) in &self.edges {
            uf.union(a / 4, b / 4);
        }
        uf.count() == 1
    }
}

pub fn validate_diagram(d: &Diagram) -> ValidationReport {
    let mut errors = Vec::new();
    let mut stats = Vec::new();
    let issue = |code, message: String, location: String| Issue { code, message, location };

    if d.pieces.is_empty() {
        errors.push(issue(IssueCode::EmptyDiagram, "diagram has no pieces".into(), "file".into()));
    }

    let mut maps = Vec::with_capacity(d.pieces.len());
    for piece in &d.pieces {
        let loc = format!("piece {}", piece.name);
        match PieceMap::build(piece) {
            Err(bad) => {
                for (label, count) in bad {
                    errors.push(issue(
                        IssueCode::EdgeLabelCount,
                        format!("edge label {label} occurs {count} times, expected 2"),
                        loc.clone(),
                    ));
                }
                maps.push(None);
            }
            Ok(map) => {
                if piece.is_free_loop() {
                    stats.push(PieceStats { name: piece.name.clone(), vertices: 0, edges: 0, faces: 2 });
                } else {
                    let v = piece.crossing_count();
                    let e = map.edges.len();
                    let f = map.face_count();
                    stats.push(PieceStats { name: piece.name.clone(), vertices: v, edges: e, faces: f });
                    if !map.is_connected() {
                        errors.push(issue(
                            IssueCode::DisconnectedPiece,
                            "crossings do not form a connected graph; split it into pieces".into(),
                            loc.clone(),
                        ));
                    } else if v as i64 - e as i64 + f as i64 != 2 {
                        errors.push(issue(
                            IssueCode::GenusNonzero,
                            format!("V - E + F = {v} - {e} + {f} = {}, expected 2", v as i64 - e as i64 + f as i64),
                            loc.clone(),
                        ));
                    }
                }
                if let Some(of) = piece.outer_face {
                    if of >= map.face_count() {
                        errors.push(issue(
                            IssueCode::UnknownHostFace,
                            format!("outer face {of} does not exist ({} faces)", map.face_count()),
                            loc.clone(),
                        ));
                    }
                }
                maps.push(Some(map));
            }
        }
    }

    let mut placed = vec![false; d.pieces.len()];
    for pl in &d.placements {
        let Some(child) = d.pieces.get(pl.child) else {
            errors.push(issue(IssueCode::UnknownPiece, format!("no piece #{}", pl.child), "placement".into()));
            continue;
        };
        let loc = format!("place {}", child.name);
        if std::mem::replace(&mut placed[pl.child], true) {
            errors.push(issue(IssueCode::DuplicatePlacement, "piece placed more than once".into(), loc.clone()));
        }
        if let Host::Face { piece, face } = pl.host {
            match maps.get(piece) {
                None => errors.push(issue(IssueCode::UnknownPiece, format!("no host piece #{piece}"), loc)),
                Some(Some(m)) if face >= m.face_count() => errors.push(issue(
                    IssueCode::UnknownHostFace,
                    format!("host {} has no face {face} ({} faces)", d.pieces[piece].name, m.face_count()),
                    loc,
                )),
                _ => {}
            }
        }
    }
    if let Some(name) = placement_cycle(d) {
        errors.push(issue(IssueCode::PlacementCycle, "placements form a cycle".into(), format!("place {name}")));
    }

    ValidationReport { ok: errors.is_empty(), errors, pieces: stats }
}

/// Name of a piece on a placement cycle, if any.
pub(crate) fn placement_cycle(d: &Diagram) -> Option<String> {
    let hosts = d.hosts();
    for start in 0..d.pieces.len() {
        let mut cur = start;
        for _ in 0..=d.pieces.len() {
            match hosts.get(cur) {
                Some(Host::Face { piece, .. }) if *piece < d.pieces.len() => cur = *piece,
                _ => break,
            }
            if cur == start {
                return Some(d.pieces[start].name.clone());
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so class representatives are minimal
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }

    /// Class index of every element, classes numbered by smallest member.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut ids = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            out[x] = ids[r];
        }
        (out, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        Diagram::parse("piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }").unwrap()
    }

    #[test]
    fn trefoil_euler() {
        let r = trefoil().validate();
        assert!(r.ok, "{r}");
        assert_eq!(r.pieces, vec![PieceStats { name: "K".into(), vertices: 3, edges: 6, faces: 5 }]);
    }

    #[test]
    fn transposed_crossing_has_genus_one() {
        // second crossing with positions 1 and 2 swapped
        let d = Diagram::parse("piece K { X 1 4 2 5 ; X 3 4 6 1 ; X 5 2 6 3 }").unwrap();
        let r = d.validate();
        assert!(!r.ok);
        assert!(r.has(IssueCode::GenusNonzero), "{r}");
        assert_eq!(r.pieces[0].faces, 3);
    }

    #[test]
    fn empty_diagram_rejected() {
        let d = Diagram::parse("# nothing here\n").unwrap();
        let r = d.validate();
        assert!(r.has(IssueCode::EmptyDiagram));
    }

    #[test]
    fn disconnected_piece_rejected() {
        let pieces = vec![Piece::crossings("K", vec![Crossing::new(1, 2, 2, 1), Crossing::new(3, 4, 4, 3)])];
        let r = Diagram::from_parts(pieces, vec![]).validate();
        assert!(r.has(IssueCode::DisconnectedPiece), "{r}");
    }

    #[test]
    fn programmatic_placement_errors() {
        let pieces = vec![Piece::free_loop("A"), Piece::free_loop("B")];
        let cyc = vec![
            Placement { child: 0, host: Host::Face { piece: 1, face: 1 } },
            Placement { child: 1, host: Host::Face { piece: 0, face: 1 } },
        ];
        assert!(Diagram::from_parts(pieces.clone(), cyc).validate().has(IssueCode::PlacementCycle));
        let bad = vec![Placement { child: 1, host: Host::Face { piece: 0, face: 7 } }];
        assert!(Diagram::from_parts(pieces, bad).validate().has(IssueCode::UnknownHostFace));
    }
}
