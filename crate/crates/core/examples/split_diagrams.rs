//! Split and nested diagrams: every way of re-nesting the pieces gives the
//! same coloring groups.

use goeritz::colorings::{fox_group, renesting_variants};
use goeritz::diagram::Diagram;
use goeritz::linalg::FgAbelianGroup;
use goeritz::shading::both_shadings;

fn main() {
    let src = Diagram::parse(
        "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\npiece U { O }\npiece H { X 1 4 2 3 ; X 3 2 4 1 }\n",
    )
    .unwrap();
    let a = FgAbelianGroup::cyclic(3);
    let base = fox_group(&src.realize().unwrap(), &both_shadings(&src.realize().unwrap())[0], &a);
    println!("side by side: Fox over Z/3 = {base}");
    for v in renesting_variants(&src) {
        let pd = v.realize().unwrap();
        let groups: Vec<String> = both_shadings(&pd).iter().map(|s| fox_group(&pd, s, &a).to_string()).collect();
        let placements: Vec<String> =
            v.to_source().lines().filter(|l| l.starts_with("place")).map(String::from).collect();
        println!("{:<40} {:?}", placements.join("; "), groups);
    }
}
