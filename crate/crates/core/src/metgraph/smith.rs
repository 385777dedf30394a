//! Diagonalization of integer matrices by unimodular row and column operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Returns the nonzero diagonal entries (absolute values) of a diagonal form
/// of `m`; their count is the rank. The entries need not form a divisibility
/// chain; [`super::AbelianGroup::from_cyclic`] normalizes them.
pub fn diagonal_form(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        // pivot: smallest nonzero magnitude in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = m[i][k].div_floor(&m[k][k]);
                let pivot = m[k][k..cols].to_vec();
                for (x, p) in m[i][k..cols].iter_mut().zip(&pivot) {
                    *x -= &q * p;
                }
                if !m[i][k].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = m[k][j].div_floor(&m[k][k]);
                for row in m.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] -= t;
                }
                if !m[k][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // move the smallest remaining entry of row/column k onto the pivot
            let mut best = (k, k);
            for i in k + 1..rows {
                if !m[i][k].is_zero() && m[i][k].abs() < m[best.0][best.1].abs() {
                    best = (i, k);
                }
            }
            for j in k + 1..cols {
                if !m[k][j].is_zero() && m[k][j].abs() < m[best.0][best.1].abs() {
                    best = (k, j);
                }
            }
            if best.0 != k {
                m.swap(k, best.0);
            } else if best.1 != k {
                for row in m.iter_mut() {
                    row.swap(k, best.1);
                }
            }
        }
        diag.push(m[k][k].abs());
        k += 1;
    }
    diag
}
