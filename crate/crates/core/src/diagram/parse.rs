//! Text format:
//!
//! ```text
//! # comment
//! piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }
//! piece U { O }
//! place U in K.face(2)
//! outer K.face(1)
//! ```
//!
//! `face(k)` refers to the piece-local face ids of [`super::PieceMap`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{placement_cycle, Crossing, Diagram, EdgeLabel, Host, Piece, PieceBody, PieceMap, Placement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("piece {piece}: edge label {label} occurs {count} times, expected 2")]
    EdgeLabelCount { piece: String, label: EdgeLabel, count: usize },
    #[error("duplicate piece name `{0}`")]
    DuplicatePiece(String),
    #[error("unknown piece `{name}` at {line}:{col}")]
    UnknownPiece { name: String, line: usize, col: usize },
    #[error("piece `{0}` is placed more than once")]
    DuplicatePlacement(String),
    #[error("piece `{piece}` has no face {face} ({available} faces)")]
    UnknownHostFace { piece: String, face: usize, available: usize },
    #[error("placements form a cycle through `{0}`")]
    PlacementCycle(String),
}

impl ParseError {
    /// Stable upper-case code, in the style of the validation issue codes.
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SYNTAX_ERROR",
            ParseError::EdgeLabelCount { .. } => "EDGE_LABEL_COUNT",
            ParseError::DuplicatePiece(_) => "DUPLICATE_PIECE",
            ParseError::UnknownPiece { .. } => "UNKNOWN_PIECE",
            ParseError::DuplicatePlacement(_) => "DUPLICATE_PLACEMENT",
            ParseError::UnknownHostFace { .. } => "UNKNOWN_HOST_FACE",
            ParseError::PlacementCycle(_) => "PLACEMENT_CYCLE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Punct(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line_no = li + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let col = i + 1;
            if "{};().".contains(c) {
                out.push(Token { tok: Tok::Punct(c), line: line_no, col });
                i += 1;
            } else if c.is_alphanumeric() || c == '_' || c == '-' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '-') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Word(chars[start..i].iter().collect()), line: line_no, col });
            } else {
                return Err(ParseError::Syntax { line: line_no, col, message: format!("unexpected character `{c}`") });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.col))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.here();
        Err(ParseError::Syntax { line, col, message: message.into() })
    }

    fn word(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        match self.peek() {
            Some(Token { tok: Tok::Word(w), line, col }) => {
                let r = (w.clone(), *line, *col);
                self.pos += 1;
                Ok(r)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Token { tok: Tok::Word(w), .. }) if w == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{kw}`")),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(Token { tok: Tok::Punct(p), .. }) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{c}`")),
        }
    }

    fn is_punct(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Punct(p), .. }) if *p == c)
    }

    fn number(&mut self, what: &str) -> Result<u64, ParseError> {
        let here = self.here();
        let (w, _, _) = self.word(what)?;
        w.parse().map_err(|_| ParseError::Syntax {
            line: here.0,
            col: here.1,
            message: format!("expected {what}, found `{w}`"),
        })
    }

    /// `NAME . face ( NUM )`
    fn face_ref(&mut self) -> Result<(String, usize, usize, usize), ParseError> {
        let (name, line, col) = self.word("piece name")?;
        self.punct('.')?;
        self.keyword("face")?;
        self.punct('(')?;
        let face = self.number("face id")? as usize;
        self.punct(')')?;
        Ok((name, line, col, face))
    }

    fn piece_body(&mut self) -> Result<PieceBody, ParseError> {
        self.punct('{')?;
        if matches!(self.peek(), Some(Token { tok: Tok::Word(w), .. }) if w == "O") {
            self.pos += 1;
            self.punct('}')?;
            return Ok(PieceBody::FreeLoop);
        }
        let mut crossings = Vec::new();
        loop {
            if self.is_punct('}') && !crossings.is_empty() {
                self.pos += 1;
                break;
            }
            self.keyword("X").or_else(|_| self.err("expected `X` or `O`"))?;
            let mut e = [0; 4];
            for slot in &mut e {
                *slot = self.number("edge label")?;
            }
            crossings.push(Crossing { edges: e });
            if self.is_punct(';') {
                self.pos += 1;
            } else if self.is_punct('}') {
                self.pos += 1;
                break;
            } else {
                return self.err("expected `;` or `}`");
            }
        }
        Ok(PieceBody::Crossings(crossings))
    }
}

pub fn parse_diagram(text: &str) -> Result<Diagram, ParseError> {
    let toks = tokenize(text)?;
    let end = (text.lines().count().max(1), text.lines().last().map_or(0, |l| l.chars().count()) + 1);
    let mut p = Parser { toks, pos: 0, end };

    let mut pieces: Vec<Piece> = Vec::new();
    // (child, host, host face, position of child name)
    let mut places: Vec<(String, Option<String>, usize, usize, usize)> = Vec::new();
    let mut outers: Vec<(String, usize, usize, usize)> = Vec::new();

    while p.peek().is_some() {
        let (kw, _, _) = p.word("`piece`, `place` or `outer`")?;
        match kw.as_str() {
            "piece" => {
                let (name, _, _) = p.word("piece name")?;
                if pieces.iter().any(|q| q.name == name) {
                    return Err(ParseError::DuplicatePiece(name));
                }
                let body = p.piece_body()?;
                pieces.push(Piece { name, body, outer_face: None });
            }
            "place" => {
                let (child, line, col) = p.word("piece name")?;
                p.keyword("in")?;
                if matches!(p.peek(), Some(Token { tok: Tok::Word(w), .. }) if w == "top") {
                    p.pos += 1;
                    places.push((child, None, 0, line, col));
                } else {
                    let (host, _, _, face) = p.face_ref()?;
                    places.push((child, Some(host), face, line, col));
                }
            }
            "outer" => outers.push(p.face_ref()?),
            other => {
                p.pos -= 1;
                return p.err(format!("expected `piece`, `place` or `outer`, found `{other}`"));
            }
        }
    }

    let mut maps = Vec::with_capacity(pieces.len());
    for piece in &pieces {
        match PieceMap::build(piece) {
            Ok(m) => maps.push(m),
            Err(bad) => {
                let (label, count) = bad[0];
                return Err(ParseError::EdgeLabelCount { piece: piece.name.clone(), label, count });
            }
        }
    }
    let index: BTreeMap<&str, usize> = pieces.iter().enumerate().map(|(i, q)| (q.name.as_str(), i)).collect();
    let lookup = |name: &str, line, col| {
        index.get(name).copied().ok_or_else(|| ParseError::UnknownPiece { name: name.to_string(), line, col })
    };
    let check_face = |piece: usize, face: usize| {
        let available = maps[piece].face_count();
        if face >= available {
            Err(ParseError::UnknownHostFace { piece: pieces[piece].name.clone(), face, available })
        } else {
            Ok(())
        }
    };

    let mut outer_faces = vec![None; pieces.len()];
    for (name, line, col, face) in &outers {
        let i = lookup(name, *line, *col)?;
        check_face(i, *face)?;
        outer_faces[i] = Some(*face);
    }

    let mut placements = Vec::new();
    let mut placed = vec![false; pieces.len()];
    for (child, host, face, line, col) in &places {
        let c = lookup(child, *line, *col)?;
        if std::mem::replace(&mut placed[c], true) {
            return Err(ParseError::DuplicatePlacement(child.clone()));
        }
        let host = match host {
            None => Host::Top,
            Some(h) => {
                let hi = lookup(h, *line, *col)?;
                check_face(hi, *face)?;
                Host::Face { piece: hi, face: *face }
            }
        };
        placements.push(Placement { child: c, host });
    }

    for (piece, of) in pieces.iter_mut().zip(outer_faces) {
        piece.outer_face = of;
    }
    let d = Diagram { pieces, placements };
    if let Some(name) = placement_cycle(&d) {
        return Err(ParseError::PlacementCycle(name));
    }
    Ok(d)
}

pub(super) fn emit(d: &Diagram) -> String {
    let mut s = String::new();
    for piece in &d.pieces {
        match &piece.body {
            PieceBody::FreeLoop => writeln!(s, "piece {} {{ O }}", piece.name).unwrap(),
            PieceBody::Crossings(cs) => {
                let body: Vec<String> = cs
                    .iter()
                    .map(|c| format!("X {} {} {} {}", c.edges[0], c.edges[1], c.edges[2], c.edges[3]))
                    .collect();
                writeln!(s, "piece {} {{ {} }}", piece.name, body.join(" ; ")).unwrap();
            }
        }
    }
    for piece in &d.pieces {
        if let Some(f) = piece.outer_face {
            writeln!(s, "outer {}.face({f})", piece.name).unwrap();
        }
    }
    for pl in &d.placements {
        let child = &d.pieces[pl.child].name;
        match pl.host {
            Host::Top => writeln!(s, "place {child} in top").unwrap(),
            Host::Face { piece, face } => {
                writeln!(s, "place {child} in {}.face({face})", d.pieces[piece].name).unwrap()
            }
        }
    }
    s
}
