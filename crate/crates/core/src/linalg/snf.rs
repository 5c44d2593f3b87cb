use std::cmp::min;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·M·V = D` with unimodular `U` and `V`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    diag: Vec<BigInt>,
    rank: usize,
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d_1 | d_2 | … | d_r` followed by zeros, of length
    /// `min(rows, cols)`.
    pub fn diag(&self) -> &[BigInt] {
        &self.diag
    }

    /// Nonzero diagonal entries.
    pub fn factors(&self) -> &[BigInt] {
        &self.diag[..self.rank]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The diagonal matrix `D`, same shape as the input.
    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }
}

/// Exact Smith normal form.
///
/// Pivot choice is deterministic: the smallest nonzero absolute value in the
/// remaining block, ties broken by lowest row-major index. Remainders that
/// appear while clearing the pivot row and column are swapped in the same way
/// (smallest absolute value, lowest index first).
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < min(rows, cols) {
        let Some((pi, pj)) = block_pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            reduce_cross(&mut a, &mut u, &mut v, t);
            // Every remaining entry must be a multiple of the pivot.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[(i, j)] % &a[(t, t)]).is_zero());
            match bad {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let diag: Vec<BigInt> = (0..min(rows, cols)).map(|i| a[(i, i)].clone()).collect();
    let rank = diag.iter().take_while(|x| !x.is_zero()).count();
    SnfResult { diag, rank, d: a, u, v }
}

fn block_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Clears row `t` and column `t` outside the pivot, swapping in smaller
/// remainders until both are zero.
fn reduce_cross(a: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    let (rows, cols) = a.shape();
    loop {
        for i in t + 1..rows {
            if a[(i, t)].is_zero() {
                continue;
            }
            let q = -(&a[(i, t)] / &a[(t, t)]);
            a.add_row_multiple(i, t, &q);
            u.add_row_multiple(i, t, &q);
        }
        for j in t + 1..cols {
            if a[(t, j)].is_zero() {
                continue;
            }
            let q = -(&a[(t, j)] / &a[(t, t)]);
            a.add_col_multiple(j, t, &q);
            v.add_col_multiple(j, t, &q);
        }

        // Smallest leftover in the pivot column, then the pivot row.
        let mut best: Option<(bool, usize, BigInt)> = None;
        for i in t + 1..rows {
            let x = &a[(i, t)];
            if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                best = Some((true, i, x.abs()));
            }
        }
        for j in t + 1..cols {
            let x = &a[(t, j)];
            if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                best = Some((false, j, x.abs()));
            }
        }
        match best {
            None => return,
            Some((true, i, _)) => {
                a.swap_rows(t, i);
                u.swap_rows(t, i);
            }
            Some((false, j, _)) => {
                a.swap_cols(t, j);
                v.swap_cols(t, j);
            }
        }
    }
}
