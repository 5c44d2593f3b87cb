//! Smith normal form and kernel structure of an integer matrix.

use goeritz::linalg::{kernel_structure, smith_normal_form, solution_count_mod_m, FgAbelianGroup, IntMatrix};

fn main() {
    let g = IntMatrix::from_rows(&[[-3i64, 1, 2], [1, -3, 2], [2, 2, -4]]);
    let s = smith_normal_form(&g);
    println!("M =\n{g}");
    println!("U·M·V = D with D =\n{}", s.d());
    println!(
        "invariant factors {:?}, rank {}",
        s.factors().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        s.rank()
    );
    println!("det U = {}, det V = {}", s.u().determinant(), s.v().determinant());

    for spec in ["Z", "Z/2", "Z/4", "Z/8", "Z/2 + Z/4", "Z + Z/6"] {
        let a: FgAbelianGroup = spec.parse().unwrap();
        println!("ker over {spec:<10} = {}", kernel_structure(&g, &a));
    }
    for m in 2..=12 {
        println!("solutions mod {m:>2}: {}", solution_count_mod_m(&g, m));
    }
}
