//! Runs the full identity checks over the built-in library.

use goeritz::colorings::{verify_theorems, VerifyOptions};
use goeritz::library::LIBRARY;

fn main() {
    let opts = VerifyOptions { moduli: (2..=6).collect(), ..VerifyOptions::default() };
    let mut failed = 0;
    for e in LIBRARY {
        let pd = e.diagram().realize().unwrap();
        let records = verify_theorems(e.name, &pd, &opts);
        let bad: Vec<_> = records.iter().filter(|r| !r.pass).collect();
        println!("{:<28} {:>4} checks, {} failed", e.name, records.len(), bad.len());
        for r in &bad {
            println!("  FAIL {} m={:?} {}: expected {} got {}", r.check, r.m, r.shading, r.expected, r.actual);
        }
        failed += bad.len();
    }
    std::process::exit(i32::from(failed > 0));
}
