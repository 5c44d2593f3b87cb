//! Mod-2 component index vectors and the exponent-2 kernel check.

use goeritz::colorings::{exponent2_kernel_check, index_vectors, DEFAULT_ENUM_CAP};
use goeritz::library;
use goeritz::shading::{both_shadings, ShadedDiagram};

fn main() {
    for name in ["hopf", "whitehead", "trefoil-hopf", "unlink-4-mixed"] {
        let pd = library::get(name).unwrap().diagram().realize().unwrap();
        println!("{name} (mu = {})", pd.component_count());
        for (f, idx) in index_vectors(&pd).iter().enumerate() {
            println!("  face {f:>2}: {idx:?}");
        }
        for s in both_shadings(&pd) {
            let r = exponent2_kernel_check(&ShadedDiagram::new(&pd, s.clone()), DEFAULT_ENUM_CAP);
            println!(
                "  sigma {:?}: dim ker = {} expected {} span {} -> {}",
                s.sigma(),
                r.kernel_dim,
                r.expected_dim,
                r.span_dim,
                if r.pass { "ok" } else { "FAIL" }
            );
        }
    }
}
