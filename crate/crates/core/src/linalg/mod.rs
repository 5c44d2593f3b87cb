//! Exact integer linear algebra: Smith normal form and the structure of
//! `ker_A M = {v ∈ A^cols : M·v = 0}` for finitely generated abelian `A`.

mod group;
mod matrix;
mod snf;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use group::{group_normal_form, groups_isomorphic, FgAbelianGroup, GroupSpecError};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfResult};

pub(crate) use group::big_pow;
pub(crate) use matrix::bigint_json;

/// A vector over `Z/m` with entries in `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModVector {
    pub modulus: u64,
    pub entries: Vec<u64>,
}

impl ModVector {
    pub fn new(modulus: u64, entries: Vec<u64>) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let entries = entries.into_iter().map(|x| x % modulus).collect();
        ModVector { modulus, entries }
    }

    pub fn zeros(modulus: u64, len: usize) -> Self {
        Self::new(modulus, vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % m).collect();
        ModVector { modulus: m, entries }
    }

    pub fn scale(&self, k: u64) -> Self {
        let m = self.modulus;
        let k = k % m;
        ModVector { modulus: m, entries: self.entries.iter().map(|&x| mul_mod(x, k, m)).collect() }
    }

    /// Dot product with an integer vector, reduced mod `m`.
    pub fn dot(&self, w: &[BigInt]) -> u64 {
        let s: BigInt = w.iter().zip(&self.entries).map(|(a, &x)| a * x).sum();
        s.mod_floor(&BigInt::from(self.modulus)).to_u64().unwrap()
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a mod m` for a big integer, as a residue in `0..m`.
pub(crate) fn residue(a: &BigInt, m: u64) -> u64 {
    a.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

fn gcd_with(d: &BigInt, m: u64) -> u64 {
    num_integer::gcd(residue(d, m), m)
}

/// Structure of `ker_A M` where `M` acts `A^cols → A^rows`.
///
/// With SNF diagonal `d_1, …, d_r`, the kernel is `⊕_i A[d_i] ⊕ A^{cols−r}`.
/// Over a direct sum of coefficient groups the kernel is the direct sum of
/// the kernels.
pub fn kernel_structure(m: &IntMatrix, coeffs: &FgAbelianGroup) -> FgAbelianGroup {
    kernel_from_snf(&smith_normal_form(m), m.cols(), coeffs)
}

pub(crate) fn kernel_from_snf(snf: &SnfResult, cols: usize, coeffs: &FgAbelianGroup) -> FgAbelianGroup {
    let nullity = cols - snf.rank();
    let mut out = coeffs.power(nullity);
    for d in snf.factors() {
        // Z[d] = 0 for d ≠ 0; cyclic summands contribute Z/gcd(d, m)
        let d = d.abs().to_biguint().unwrap();
        out = out.direct_sum(&torsion_part(coeffs, &d));
    }
    out
}

fn torsion_part(coeffs: &FgAbelianGroup, d: &BigUint) -> FgAbelianGroup {
    FgAbelianGroup::from_summands(coeffs.invariant_factors().to_vec(), 0).torsion(d)
}

/// Generating set of `{v ∈ (Z/m)^cols : M·v ≡ 0 (mod m)}` read off the SNF
/// column transform. Generators are independent in the sense that the kernel
/// is the internal direct sum of the cyclic subgroups they generate.
pub fn kernel_basis_mod_m(m: &IntMatrix, modulus: u64) -> Vec<ModVector> {
    kernel_basis_from_snf(&smith_normal_form(m), modulus)
}

pub(crate) fn kernel_basis_from_snf(snf: &SnfResult, modulus: u64) -> Vec<ModVector> {
    assert!(modulus >= 2, "modulus must be at least 2");
    let v = snf.v();
    let cols = v.rows();
    let column = |j: usize, scale: u64| {
        let entries = (0..cols).map(|i| mul_mod(residue(&v[(i, j)], modulus), scale, modulus)).collect();
        ModVector { modulus, entries }
    };
    let mut basis = Vec::new();
    for (j, d) in snf.factors().iter().enumerate() {
        let g = gcd_with(d, modulus);
        if g > 1 {
            basis.push(column(j, modulus / g));
        }
    }
    for j in snf.rank()..cols {
        basis.push(column(j, 1));
    }
    basis
}

/// `|ker_{Z/m} M| = ∏ gcd(d_i, m) · m^{cols − r}`.
pub fn solution_count_mod_m(m: &IntMatrix, modulus: u64) -> BigUint {
    count_from_snf(&smith_normal_form(m), m.cols(), modulus)
}

pub(crate) fn count_from_snf(snf: &SnfResult, cols: usize, modulus: u64) -> BigUint {
    assert!(modulus >= 2, "modulus must be at least 2");
    let torsion: BigUint = snf.factors().iter().map(|d| BigUint::from(gcd_with(d, modulus))).product();
    torsion * big_pow(modulus, cols - snf.rank())
}

/// Exhaustive count of `v ∈ (Z/m)^cols` with `M·v ≡ 0`, or `None` when
/// `m^cols` exceeds `cap`. Independent of the SNF path.
pub fn brute_force_solution_count(m: &IntMatrix, modulus: u64, cap: u64) -> Option<u64> {
    let cols = m.cols();
    let total = (modulus as u128).checked_pow(cols as u32)?;
    if total > cap as u128 {
        return None;
    }
    let rows: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).iter().map(|a| residue(a, modulus)).collect()).collect();
    let mut v = vec![0u64; cols];
    let mut count = 0u64;
    loop {
        let ok = rows
            .iter()
            .all(|r| r.iter().zip(&v).fold(0u64, |acc, (&a, &x)| (acc + mul_mod(a, x, modulus)) % modulus) == 0);
        if ok {
            count += 1;
        }
        if !odometer_step(&mut v, modulus) {
            return Some(count);
        }
    }
}

/// Advances `v` to the next vector of `(Z/m)^len`; false after the last.
pub(crate) fn odometer_step(v: &mut [u64], modulus: u64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < modulus {
            return true;
        }
        *x = 0;
    }
    false
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, pr);
        let inv = mod_inverse(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    let sub = mul_mod(f, a[rank][j], p);
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = num_integer::Integer::extended_gcd(&(a as i128), &(p as i128));
    e.x.rem_euclid(p as i128) as u64
}

/// JSON view of an SNF and kernel computation.
#[derive(Clone, Debug, Serialize)]
pub struct LinalgReport {
    pub snf_diag: Vec<serde_json::Value>,
    pub rank: usize,
    pub kernel: FgAbelianGroup,
    pub count_mod: BTreeMap<u64, String>,
}

impl LinalgReport {
    pub fn new(m: &IntMatrix, coeffs: &FgAbelianGroup, moduli: &[u64]) -> Self {
        let snf = smith_normal_form(m);
        LinalgReport {
            snf_diag: snf.diag().iter().map(bigint_json).collect(),
            rank: snf.rank(),
            kernel: kernel_from_snf(&snf, m.cols(), coeffs),
            count_mod: moduli.iter().map(|&q| (q, count_from_snf(&snf, m.cols(), q).to_string())).collect(),
        }
    }
}

/// Whether every entry is zero.
pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}
