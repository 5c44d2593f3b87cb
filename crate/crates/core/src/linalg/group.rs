use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;
use thiserror::Error;

/// A finitely generated abelian group `Z/m_1 ⊕ … ⊕ Z/m_k ⊕ Z^r` in
/// invariant-factor form: every `m_i ≥ 2` and `m_i | m_{i+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FgAbelianGroup {
    invariant_factors: Vec<u64>,
    free_rank: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupSpecError {
    #[error("empty group spec")]
    Empty,
    #[error("bad group term `{0}` (expected Z, Z^k, Z/m or Z/m^k)")]
    BadTerm(String),
    #[error("cyclic order must be at least 1, got `{0}`")]
    ZeroOrder(String),
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { invariant_factors: Vec::new(), free_rank: rank }
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// `Z/m`; `m = 1` gives the trivial group.
    pub fn cyclic(m: u64) -> Self {
        Self::from_summands([m], 0)
    }

    /// Canonical form of `⊕ Z/orders[i] ⊕ Z^free_rank`.
    ///
    /// Orders of 1 are dropped. Panics on an order of 0; free summands go in
    /// `free_rank`.
    pub fn from_summands(orders: impl IntoIterator<Item = u64>, free_rank: usize) -> Self {
        // prime -> exponents of its prime-power components
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for m in orders {
            assert!(m >= 1, "cyclic summand of order 0; use free_rank");
            for (p, e) in factorize(m) {
                primary.entry(p).or_default().push(e);
            }
        }
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            // largest power goes into the last (largest) invariant factor
            for (k, e) in exps.into_iter().enumerate() {
                factors[len - 1 - k] *= p.pow(e);
            }
        }
        FgAbelianGroup { invariant_factors: factors, free_rank }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite().then(|| self.invariant_factors.iter().map(|&m| BigUint::from(m)).product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_summands(
            self.invariant_factors.iter().chain(&other.invariant_factors).copied(),
            self.free_rank + other.free_rank,
        )
    }

    /// `A^k`; `A^0` is the trivial group.
    pub fn power(&self, k: usize) -> Self {
        let orders = (0..k).flat_map(|_| self.invariant_factors.iter().copied());
        Self::from_summands(orders, self.free_rank * k)
    }

    /// `m`-torsion subgroup `A[m] = {a : m·a = 0}`; `A[0] = A`.
    pub fn torsion(&self, m: &BigUint) -> Self {
        if m == &BigUint::from(0u32) {
            return self.clone();
        }
        let orders = self.invariant_factors.iter().map(|&k| gcd_big(m, k));
        Self::from_summands(orders, 0)
    }

    /// Exponent of the group (lcm of orders), `None` if there is a free part.
    pub fn exponent(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        Some(self.invariant_factors.last().copied().unwrap_or(1))
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self == other
    }
}

/// Isomorphism test on canonical forms.
pub fn groups_isomorphic(g1: &FgAbelianGroup, g2: &FgAbelianGroup) -> bool {
    g1.invariant_factors == g2.invariant_factors && g1.free_rank == g2.free_rank
}

/// Canonicalizes a list of cyclic summands plus a free rank.
pub fn group_normal_form(orders: &[u64], free_rank: usize) -> FgAbelianGroup {
    FgAbelianGroup::from_summands(orders.iter().copied(), free_rank)
}

fn gcd_big(a: &BigUint, b: u64) -> u64 {
    let r = a % b;
    let r = u64::try_from(r).expect("residue fits");
    num_integer::gcd(r, b)
}

/// Prime factorization by trial division.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut terms: Vec<String> = self.invariant_factors.iter().map(|m| format!("Z/{m}")).collect();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".into()),
            r => terms.push(format!("Z^{r}")),
        }
        f.write_str(&terms.join(" + "))
    }
}

/// Parses `Z^k + Z/m1 + Z/m2^j + …`; `0` denotes the trivial group.
impl FromStr for FgAbelianGroup {
    type Err = GroupSpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(GroupSpecError::Empty);
        }
        let mut orders = Vec::new();
        let mut free = 0usize;
        for raw in s.split('+') {
            let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            let bad = || GroupSpecError::BadTerm(raw.trim().to_string());
            if term == "0" {
                continue;
            }
            let rest = term.strip_prefix('Z').ok_or_else(bad)?;
            let (base, mult) = match rest.split_once('^') {
                Some((b, k)) => (b, k.parse::<usize>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            if base.is_empty() {
                free += mult;
            } else {
                let m: u64 = base.strip_prefix('/').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if m == 0 {
                    return Err(GroupSpecError::ZeroOrder(raw.trim().to_string()));
                }
                orders.extend(std::iter::repeat_n(m, mult));
            }
        }
        Ok(FgAbelianGroup::from_summands(orders, free))
    }
}

/// `m^k` as a big integer.
pub(crate) fn big_pow(m: u64, k: usize) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    BigUint::from(m).pow(k)
}
