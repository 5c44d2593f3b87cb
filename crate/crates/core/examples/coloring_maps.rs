//! The maps between Dehn colorings, Fox colorings and the Goeritz kernel.

use std::collections::BTreeMap;

use goeritz::colorings::{enumerate_dehn_mod_m, extend_kernel_to_dehn, lift_fox_to_dehn, phi_map, v_map};
use goeritz::library;
use goeritz::shading::{both_shadings, ShadedDiagram};

fn main() {
    let m = 5;
    let pd = library::get("figure-eight").unwrap().diagram().realize().unwrap();
    let [s, _] = both_shadings(&pd);
    let sd = ShadedDiagram::new(&pd, s.clone());
    let dehn = enumerate_dehn_mod_m(&pd, m).unwrap();
    println!("figure-eight has {} Dehn colorings mod {m}", dehn.len());

    let dc = dehn.iter().find(|d| d.values.iter().collect::<std::collections::BTreeSet<_>>().len() > 2).unwrap();
    println!("Dehn coloring   {:?}", dc.values);

    let fox = phi_map(&pd, dc).unwrap();
    println!("phi             {:?}", fox.values);
    let back = lift_fox_to_dehn(&pd, &fox, 0, dc.values[0]).unwrap();
    println!("lift of phi     {:?} (same: {})", back.values, &back == dc);

    let v = v_map(&sd, dc).unwrap();
    println!("restriction v   {:?} on faces {:?}", v.entries, s.unshaded_faces());
    let seeds: BTreeMap<usize, u64> = s.shaded_faces().into_iter().take(1).map(|f| (f, dc.values[f])).collect();
    let ext = extend_kernel_to_dehn(&sd, &v, &seeds).unwrap();
    println!("extension       {:?} (same: {})", ext.values, &ext == dc);
}
