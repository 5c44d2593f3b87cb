//! Fox and Dehn coloring groups for several coefficient groups.
//!
//! cargo run --example coloring_groups -- trefoil-hopf "Z/3"

use goeritz::colorings::{dehn_group, fox_group};
use goeritz::library;
use goeritz::linalg::{kernel_structure, FgAbelianGroup};
use goeritz::shading::{both_shadings, ShadedDiagram};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "whitehead".into());
    let groups: Vec<String> = match args.next() {
        Some(g) => vec![g],
        None => ["Z", "Z/2", "Z/3", "Z/8", "Z + Z/4"].map(String::from).to_vec(),
    };
    let pd = library::get(&name).expect("known diagram name").diagram().realize().unwrap();
    for s in both_shadings(&pd) {
        let sd = ShadedDiagram::new(&pd, s.clone());
        let g = sd.goeritz_matrix().matrix;
        println!("{name}, sigma {:?}, beta {}", s.sigma(), sd.beta());
        for spec in &groups {
            let a: FgAbelianGroup = spec.parse().expect("group spec");
            println!(
                "  A = {spec:<8} ker G = {:<16} Fox = {:<20} Dehn = {}",
                kernel_structure(&g, &a).to_string(),
                fox_group(&pd, &s, &a).to_string(),
                dehn_group(&pd, &s, &a)
            );
        }
    }
}
