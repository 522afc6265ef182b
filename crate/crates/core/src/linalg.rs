//! Tiny exact dense linear solver (Gaussian elimination over the rationals).
//! Only used for closed-form fits, where systems stay well under 100x100.

use num::Zero;

use crate::rational::Rational;

/// Solve `A x = b` exactly. Returns `None` when the system is inconsistent.
/// When the solution is underdetermined the free variables are set to zero;
/// callers that need uniqueness should verify the fit downstream (all fits
/// here are re-checked against extra series coefficients anyway).
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Some(vec![]);
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for c in col..=cols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // inconsistent if any zero row has nonzero rhs
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }

    let mut x = vec![Rational::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[r][cols].clone();
    }
    Some(x)
}
