//! Built-in diagrams.

use crate::diagram::Diagram;
use crate::linalg::IntMatrix;

pub struct LibraryEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
    /// Goeritz matrix expected with the unbounded face unshaded.
    pub golden: Option<&'static [&'static [i64]]>,
}

impl LibraryEntry {
    pub fn diagram(&self) -> Diagram {
        Diagram::parse(self.source).expect("library diagrams parse")
    }

    pub fn golden_matrix(&self) -> Option<IntMatrix> {
        self.golden.map(IntMatrix::from_rows)
    }
}

const TREFOIL: &str = "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\nouter K.face(1)\n";

pub static LIBRARY: &[LibraryEntry] = &[
    LibraryEntry { name: "unknot-0x", description: "crossing-free unknot", source: "piece U { O }\n", golden: None },
    LibraryEntry {
        name: "unknot-1x",
        description: "unknot with one kink",
        source: "piece C { X 1 2 2 1 }\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-2",
        description: "two free loops side by side",
        source: "piece A { O }\npiece B { O }\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-3",
        description: "three free loops side by side",
        source: "piece A { O }\npiece B { O }\npiece C { O }\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-4",
        description: "four free loops side by side",
        source: "piece A { O }\npiece B { O }\npiece C { O }\npiece D { O }\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-2-nested",
        description: "one free loop inside another",
        source: "piece A { O }\npiece B { O }\nplace B in A.face(1)\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-3-nested",
        description: "three concentric free loops",
        source: "piece A { O }\npiece B { O }\npiece C { O }\nplace B in A.face(1)\nplace C in B.face(1)\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-4-nested",
        description: "four concentric free loops",
        source: "piece A { O }\npiece B { O }\npiece C { O }\npiece D { O }\n\
                 place B in A.face(1)\nplace C in B.face(1)\nplace D in C.face(1)\n",
        golden: None,
    },
    LibraryEntry {
        name: "unlink-4-mixed",
        description: "two loops inside a third, one outside",
        source: "piece A { O }\npiece B { O }\npiece C { O }\npiece D { O }\n\
                 place B in A.face(1)\nplace C in A.face(1)\n",
        golden: None,
    },
    LibraryEntry { name: "trefoil", description: "standard trefoil", source: TREFOIL, golden: None },
    LibraryEntry {
        name: "figure-eight",
        description: "figure-eight knot",
        source: "piece F { X 4 2 5 1 ; X 8 6 1 5 ; X 6 3 7 4 ; X 2 7 3 8 }\n",
        golden: None,
    },
    LibraryEntry {
        name: "hopf",
        description: "Hopf link",
        source: "piece H { X 1 4 2 3 ; X 3 2 4 1 }\n",
        golden: None,
    },
    LibraryEntry {
        name: "torus-2-8",
        description: "(2,8) torus link, closure of an 8-crossing 2-braid",
        source: "piece T { X 9 1 8 16 ; X 10 2 1 9 ; X 11 3 2 10 ; X 12 4 3 11 ; \
                 X 13 5 4 12 ; X 14 6 5 13 ; X 15 7 6 14 ; X 16 8 7 15 }\nouter T.face(1)\n",
        golden: Some(&[&[-8, 8], &[8, -8]]),
    },
    LibraryEntry {
        name: "whitehead",
        description: "Whitehead link",
        source: "piece W { X 10 7 5 8 ; X 6 1 7 2 ; X 4 5 1 6 ; X 2 10 3 9 ; X 8 4 9 3 }\nouter W.face(5)\n",
        golden: Some(&[&[-3, 1, 2], &[1, -3, 2], &[2, 2, -4]]),
    },
    LibraryEntry {
        name: "trefoil-hopf",
        description: "split union of a trefoil and a Hopf link",
        source: "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\nouter K.face(1)\n\
                 piece H { X 1 4 2 3 ; X 3 2 4 1 }\n",
        golden: None,
    },
    LibraryEntry {
        name: "trefoil-nested-in-trefoil",
        description: "a trefoil drawn inside the central face of another",
        source: "piece A { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\nouter A.face(1)\n\
                 piece B { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\nouter B.face(1)\nplace B in A.face(3)\n",
        golden: None,
    },
    LibraryEntry {
        name: "kink-nested-in-trefoil",
        description: "a kinked unknot inside the central face of a trefoil",
        source: "piece A { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\nouter A.face(1)\n\
                 piece B { X 1 2 2 1 }\nplace B in A.face(3)\n",
        golden: None,
    },
];

pub fn get(name: &str) -> Option<&'static LibraryEntry> {
    LIBRARY.iter().find(|e| e.name == name)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    LIBRARY.iter().map(|e| e.name)
}
