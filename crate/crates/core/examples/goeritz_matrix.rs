//! Goeritz matrices of a built-in diagram under both checkerboard shadings.
//!
//! cargo run --example goeritz_matrix -- whitehead

use goeritz::library;
use goeritz::shading::{both_shadings, ShadedDiagram, TaitColor};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "torus-2-8".into());
    let entry = library::get(&name).expect("known diagram name");
    let pd = entry.diagram().realize().unwrap();
    for (label, s) in ["unbounded unshaded", "unbounded shaded"].iter().zip(both_shadings(&pd)) {
        let sd = ShadedDiagram::new(&pd, s);
        let g = sd.goeritz_matrix();
        println!("{name}, {label}");
        println!("  eta        {:?}", sd.etas());
        println!("  face order {:?}", g.face_order);
        println!("  beta       {}", sd.beta());
        println!("  tait edges {}", sd.tait_graph(TaitColor::Unshaded).edges.len());
        for line in g.matrix.to_string().lines() {
            println!("    {line}");
        }
    }
    if let Some(golden) = entry.golden_matrix() {
        let [s, _] = both_shadings(&pd);
        let ok = ShadedDiagram::new(&pd, s).goeritz_matrix().matrix == golden;
        println!("golden matrix {}", if ok { "matches" } else { "differs" });
    }
}
