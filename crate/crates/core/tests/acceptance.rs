//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use goeritz::colorings::{
    count_dehn_mod_m, count_fox_mod_m, enumerate_dehn_mod_m, enumerate_fox_mod_m, exponent2_kernel_check,
    extend_kernel_to_dehn, fox_group, lift_fox_to_dehn, phi_map, renesting_variants, v_map, DEFAULT_ENUM_CAP,
};
use goeritz::diagram::PlanarDiagram;
use goeritz::library::{self, LIBRARY};
use goeritz::linalg::{
    kernel_basis_mod_m, kernel_structure, smith_normal_form, solution_count_mod_m, FgAbelianGroup, IntMatrix,
};
use goeritz::shading::{both_shadings, ShadedDiagram};
use num_bigint::BigUint;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn realize(name: &str) -> PlanarDiagram {
    library::get(name).expect("library entry").diagram().realize().expect("valid")
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["goeritz"];
    full.extend_from_slice(args);
    let code = goeritz::cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases: [(&str, &[&[i64]]); 2] =
        [("torus-2-8", &[&[-8, 8], &[8, -8]]), ("whitehead", &[&[-3, 1, 2], &[1, -3, 2], &[2, 2, -4]])];
    for (name, want) in cases {
        let (code, out) = run_cli(&["invariants", name]);
        ensure(code == 0, || format!("invariants {name} exited {code}"))?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let got: Vec<Vec<i64>> = serde_json::from_value(v["goeritz"]["matrix"].clone()).map_err(|e| e.to_string())?;
        let want: Vec<Vec<i64>> = want.iter().map(|r| r.to_vec()).collect();
        ensure(got == want, || format!("{name}: got {got:?}, want {want:?}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("torus-2-8 and whitehead matrices exact under the standard index rule".into())
}

/// Laplace expansion, kept separate from the library's elimination code.
fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from gcds of k×k minors.
fn determinantal_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    let mut prev = 1i64;
    let mut out = Vec::new();
    for k in 1..=n {
        let mut g = 0i64;
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                g = num_integer::gcd(g, det(&sub));
            }
        }
        if g == 0 {
            out.push(0);
            prev = 0;
        } else {
            out.push(g / prev);
            prev = g;
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let t = vec![vec![-8i64, 8], vec![8, -8]];
    let w = vec![vec![-3i64, 1, 2], vec![1, -3, 2], vec![2, 2, -4]];
    let gt = IntMatrix::from_rows(&t);
    let gw = IntMatrix::from_rows(&w);
    for (m, rows, want) in [(&gt, &t, vec![8i64, 0]), (&gw, &w, vec![1, 8, 0])] {
        let oracle = determinantal_factors(rows);
        ensure(oracle == want, || format!("minor oracle gave {oracle:?}, want {want:?}"))?;
        let snf: Vec<i64> = smith_normal_form(m).diag().iter().map(|x| x.try_into().unwrap()).collect();
        ensure(snf == want, || format!("SNF {snf:?}, want {want:?}"))?;
    }
    let mut specs: Vec<String> = vec!["Z".into()];
    specs.extend((2..=9).map(|m| format!("Z/{m}")));
    specs.extend(["Z/2 + Z/4".into(), "Z + Z/8".into()]);
    for spec in &specs {
        let a: FgAbelianGroup = spec.parse().map_err(|e| format!("{e}"))?;
        let (kt, kw) = (kernel_structure(&gt, &a), kernel_structure(&gw, &a));
        ensure(kt.is_isomorphic(&kw), || format!("over {spec}: {kt} vs {kw}"))?;
    }
    for m in 2..=16u64 {
        let (ct, cw) = (solution_count_mod_m(&gt, m), solution_count_mod_m(&gw, m));
        ensure(ct == cw, || format!("mod {m}: {ct} vs {cw}"))?;
        let brute = goeritz::linalg::brute_force_solution_count(&gw, m, 1 << 13).map(BigUint::from);
        ensure(brute.as_ref().is_none_or(|b| b == &cw), || format!("mod {m}: brute force {brute:?} vs {cw}"))?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("SNF diag(8,0) and diag(1,8,0); kernels agree over {} groups and m in 2..16", specs.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    let mut skipped = 0;
    for e in LIBRARY {
        let d = e.diagram().realize().unwrap();
        for m in 2..=9u64 {
            let fox = count_fox_mod_m(&d, m, DEFAULT_ENUM_CAP).ok();
            let dehn = count_dehn_mod_m(&d, m, DEFAULT_ENUM_CAP).ok();
            if let (Some(f), Some(dc)) = (fox, dehn) {
                ensure(dc == m * f, || format!("{} mod {m}: |D| {dc} vs m·|F| {}", e.name, m * f))?;
            }
            for s in both_shadings(&d) {
                let sd = ShadedDiagram::new(&d, s);
                let k = solution_count_mod_m(&sd.goeritz_matrix().matrix, m);
                let b = sd.beta() as u32;
                let pf = &k * BigUint::from(m).pow(b - 1);
                let pd = &k * BigUint::from(m).pow(b);
                match fox {
                    Some(f) => {
                        cells += 1;
                        ensure(BigUint::from(f) == pf, || format!("{} mod {m}: |F| {f} vs {pf}", e.name))?
                    }
                    None => skipped += 1,
                }
                match dehn {
                    Some(dc) => {
                        cells += 1;
                        ensure(BigUint::from(dc) == pd, || format!("{} mod {m}: |D| {dc} vs {pd}", e.name))?
                    }
                    None => skipped += 1,
                }
            }
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{cells} enumerated counts match, {skipped} cells over the cap"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let names = [
        ("unknot-0x", 1),
        ("unlink-2", 2),
        ("unlink-3", 3),
        ("unlink-4", 4),
        ("unlink-2-nested", 2),
        ("unlink-3-nested", 3),
        ("unlink-4-nested", 4),
        ("unlink-4-mixed", 4),
    ];
    for (name, mu) in names {
        let d = realize(name);
        ensure(d.crossing_count() == 0 && d.component_count() == mu, || format!("{name}: not a {mu}-loop unlink"))?;
        for s in both_shadings(&d) {
            let sd = ShadedDiagram::new(&d, s.clone());
            let n = s.unshaded_faces().len();
            ensure(n == mu + 1 - sd.beta(), || format!("{name}: n = {n}, beta = {}", sd.beta()))?;
            for m in 2..=9 {
                let a = FgAbelianGroup::cyclic(m);
                let g = fox_group(&d, &s, &a);
                ensure(g == a.power(mu), || format!("{name} over Z/{m}: {g}"))?;
            }
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok("side-by-side, nested and mixed unlinks give (Z/m)^mu".into())
}

fn criterion_5() -> Outcome {
    let mut checked = 0usize;
    for name in ["trefoil", "hopf", "figure-eight"] {
        let d = realize(name);
        for m in [2u64, 3, 5] {
            for f in enumerate_fox_mod_m(&d, m).map_err(|e| e.to_string())? {
                for base in 0..d.face_count() {
                    for a0 in 0..m {
                        let dc = lift_fox_to_dehn(&d, &f, base, a0).map_err(|e| format!("{name}: {e}"))?;
                        let back = phi_map(&d, &dc).map_err(|e| format!("{name}: {e}"))?;
                        ensure(back == f && dc.values[base] == a0, || format!("{name} mod {m}: lift of {f:?}"))?;
                        checked += 1;
                    }
                }
            }
            let dehns = enumerate_dehn_mod_m(&d, m).map_err(|e| e.to_string())?;
            for s in both_shadings(&d) {
                let sd = ShadedDiagram::new(&d, s);
                for dc in &dehns {
                    v_map(&sd, dc).map_err(|e| format!("{name} mod {m}: {e}"))?;
                    checked += 1;
                }
                for vv in kernel_basis_mod_m(&sd.goeritz_matrix().matrix, m) {
                    let dc = extend_kernel_to_dehn(&sd, &vv, &BTreeMap::new()).map_err(|e| e.to_string())?;
                    let back = v_map(&sd, &dc).map_err(|e| e.to_string())?;
                    ensure(back == vv, || format!("{name} mod {m}: v(u({:?})) = {:?}", vv.entries, back.entries))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} round trips, no failures"))
}

fn criterion_6() -> Outcome {
    let mut dots = 0usize;
    let mut pairs = 0usize;
    let names = [
        "trefoil-nested-in-trefoil",
        "kink-nested-in-trefoil",
        "unlink-2-nested",
        "unlink-3-nested",
        "unlink-4-nested",
        "unlink-4-mixed",
    ];
    for name in names {
        let d = realize(name);
        ensure(d.faces().iter().any(|f| f.boundary_curves.len() >= 2), || format!("{name}: no multi-curve face"))?;
        for s in both_shadings(&d) {
            let sd = ShadedDiagram::new(&d, s);
            let g = sd.goeritz_matrix().matrix;
            let rho = sd.all_rho();
            let single = sd.single_shaded_pairs();
            for m in 2..=9 {
                for v in kernel_basis_mod_m(&g, m) {
                    for r in &rho {
                        ensure(v.dot(&r.entries) == 0, || {
                            format!("{name} mod {m}: rho(face {}, curve {}) . {:?} != 0", r.face, r.curve, v.entries)
                        })?;
                        dots += 1;
                    }
                    for &(i, j) in &single {
                        ensure(v.entries[i] == v.entries[j], || format!("{name} mod {m}: v_{i} != v_{j}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    ensure(pairs > 0, || "no single-shaded crossings were exercised".into())?;
    Ok(format!("{dots} rho products and {pairs} coordinate equalities hold"))
}

fn criterion_7() -> Outcome {
    let mut n = 0;
    for e in LIBRARY {
        let d = e.diagram().realize().unwrap();
        for s in both_shadings(&d) {
            let r = exponent2_kernel_check(&ShadedDiagram::new(&d, s), DEFAULT_ENUM_CAP);
            ensure(r.pass, || format!("{}: {r:?}", e.name))?;
            n += 1;
        }
    }
    Ok(format!("{n} diagram/shading pairs satisfy dim = mu - beta + 1 and the index span"))
}

fn criterion_8() -> Outcome {
    let samples = ["Z", "Z/2", "Z/3", "Z/4", "Z/6", "Z/8", "Z/9", "Z/2 + Z/4", "Z + Z/8", "Z^2 + Z/3"];
    let groups: Vec<FgAbelianGroup> = samples.iter().map(|s| s.parse().unwrap()).collect();
    let mut comparisons = 0;
    for e in LIBRARY {
        let d = e.diagram().realize().unwrap();
        let [s, sbar] = both_shadings(&d);
        let variants: Vec<PlanarDiagram> =
            renesting_variants(&e.diagram()).iter().map(|v| v.realize().unwrap()).collect();
        for a in &groups {
            let base = fox_group(&d, &s, a);
            let rev = fox_group(&d, &sbar, a);
            ensure(base == rev, || format!("{} over {a}: {base} vs reversed {rev}", e.name))?;
            comparisons += 1;
            for v in &variants {
                for t in both_shadings(v) {
                    let g = fox_group(v, &t, a);
                    ensure(g == base, || format!("{} over {a}: re-nested {g} vs {base}", e.name))?;
                    comparisons += 1;
                }
            }
        }
    }
    Ok(format!("{comparisons} comparisons across {} coefficient groups", groups.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Goeritz golden values", criterion_1),
        ("torus/Whitehead kernel isomorphism", criterion_2),
        ("Fox and Dehn counts", criterion_3),
        ("unlink sanity", criterion_4),
        ("map round trips", criterion_5),
        ("boundary curve and single-shaded properties", criterion_6),
        ("exponent-2 kernel", criterion_7),
        ("shading and nesting invariance", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        match res {
            Ok(detail) => println!("criterion {}: PASS {title} ({detail}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {title} ({why}; {ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
