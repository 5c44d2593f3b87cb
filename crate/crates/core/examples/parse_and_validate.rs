//! Parse a diagram, print its validation report and basic counts.
//!
//! cargo run --example parse_and_validate -- [file]

use goeritz::diagram::Diagram;

const DEFAULT: &str = "\
# trefoil with a kinked unknot in its central face
piece A { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }
outer A.face(1)
piece B { X 1 2 2 1 }
place B in A.face(3)
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable input"),
        None => DEFAULT.to_string(),
    };
    let d = match Diagram::parse(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("parse error [{}]: {e}", e.code());
            std::process::exit(1);
        }
    };
    let report = d.validate();
    println!("{report}");
    if !report.ok {
        std::process::exit(1);
    }
    let pd = d.realize().unwrap();
    println!("crossings {}", pd.crossing_count());
    println!("arcs      {}", pd.arc_count());
    println!("faces     {} (unbounded: {})", pd.face_count(), pd.unbounded_face());
    println!("components {}", pd.component_count());
    println!("\nnormalized source:\n{}", d.to_source());
}
