//! Brute-force enumeration of colorings compared with the predicted counts.

use goeritz::colorings::{count_dehn_mod_m, count_fox_mod_m, enumerate_fox_mod_m, predicted_counts, DEFAULT_ENUM_CAP};
use goeritz::library;
use goeritz::shading::{both_shadings, ShadedDiagram};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "trefoil".into());
    let pd = library::get(&name).expect("known diagram name").diagram().realize().unwrap();
    let [s, _] = both_shadings(&pd);
    let sd = ShadedDiagram::new(&pd, s);

    println!("{name}: mod-3 Fox colorings");
    for f in enumerate_fox_mod_m(&pd, 3).unwrap() {
        println!("  {:?}", f.values);
    }

    println!("\n m   fox(enum)  fox(pred)  dehn(enum)  dehn(pred)");
    for m in 2..=9 {
        let (fp, dp) = predicted_counts(&sd, m);
        let show = |r: Result<u64, _>| r.map(|n: u64| n.to_string()).unwrap_or_else(|_| "over cap".into());
        println!(
            "{m:>2}  {:>10} {:>10} {:>11} {:>11}",
            show(count_fox_mod_m(&pd, m, DEFAULT_ENUM_CAP)),
            fp,
            show(count_dehn_mod_m(&pd, m, DEFAULT_ENUM_CAP)),
            dp
        );
    }
}
