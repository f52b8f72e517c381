//! Elimination kernels: fraction-free Bareiss over Gaussian integers for
//! rank/nullspace of possibly large matrices, and plain Gauss-Jordan over
//! scalars for the small canonicalization and solving tasks.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::gint::GInt;
use crate::scalars::Scalar;

use super::matrix::ExactMatrix;

pub(crate) struct IntEchelon {
    pub rows: Vec<Vec<GInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

fn scalar_to_gint(v: &Scalar, scale: &BigInt) -> GInt {
    let lift = |q: &BigRational| -> BigInt {
        debug_assert!(scale.is_multiple_of(q.denom()));
        q.numer() * (scale / q.denom())
    };
    GInt::new(lift(v.re()), lift(v.im()))
}

fn gint_to_scalar(v: &GInt) -> Scalar {
    Scalar::from_parts(
        BigRational::from_integer(v.re.clone()),
        BigRational::from_integer(v.im.clone()),
    )
}

/// Bareiss fraction-free echelon form. Each row is first scaled to Gaussian
/// integer entries (rank and nullspace are unaffected); the one-step
/// Bareiss update keeps all intermediate values integral, with deterministic
/// first-nonzero pivoting in column order.
pub(crate) fn bareiss_echelon(m: &ExactMatrix) -> IntEchelon {
    let cols = m.cols();
    let mut rows: Vec<Vec<GInt>> = (0..m.rows())
        .map(|r| {
            let mut scale = BigInt::one();
            for c in 0..cols {
                let v = m.get(r, c);
                scale = scale.lcm(v.re().denom());
                scale = scale.lcm(v.im().denom());
            }
            (0..cols).map(|c| scalar_to_gint(m.get(r, c), &scale)).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = GInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let piv = rows[r][c].clone();
        let (pivot_row, below) = {
            let (head, tail) = rows.split_at_mut(r + 1);
            (&head[r], tail)
        };
        for row in below.iter_mut() {
            let lead = core::mem::replace(&mut row[c], GInt::zero());
            for j in c + 1..cols {
                let t1 = if row[j].is_zero() {
                    GInt::zero()
                } else {
                    piv.mul(&row[j])
                };
                let t2 = if lead.is_zero() || pivot_row[j].is_zero() {
                    GInt::zero()
                } else {
                    lead.mul(&pivot_row[j])
                };
                let num = t1.sub(&t2);
                row[j] = if num.is_zero() {
                    GInt::zero()
                } else {
                    num.exact_div(&prev)
                };
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    IntEchelon { rows, pivots, cols }
}

/// Back-substitutes one nullspace vector per free column from a Bareiss
/// echelon form. The vectors span the exact right nullspace.
pub(crate) fn nullspace_from_echelon(ech: &IntEchelon) -> Vec<Vec<Scalar>> {
    let rank = ech.pivots.len();
    let mut is_pivot = vec![false; ech.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..ech.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(crate::scalars::Field::Q); ech.cols];
        v[f] = Scalar::one(crate::scalars::Field::Q);
        for r in (0..rank).rev() {
            let p = ech.pivots[r];
            if p > f {
                continue;
            }
            let mut acc = Scalar::zero(crate::scalars::Field::Q);
            for j in p + 1..ech.cols {
                if ech.rows[r][j].is_zero() || v[j].is_zero() {
                    continue;
                }
                acc = acc + gint_to_scalar(&ech.rows[r][j]) * &v[j];
            }
            v[p] = (-acc)
                .div(&gint_to_scalar(&ech.rows[r][p]))
                .expect("pivot entries are nonzero");
        }
        out.push(v);
    }
    out
}

/// In-place reduced row echelon form over scalars; returns pivot columns.
/// After the call, rows `0..pivots.len()` hold the canonical basis and all
/// later rows are zero.
pub(crate) fn rref(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in 0..cols {
                if rows[r][j].is_zero() {
                    continue;
                }
                let delta = &factor * &rows[r][j];
                rows[i][j] = &rows[i][j] - &delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Gauss-Jordan inverse; `None` when singular.
pub(crate) fn invert(m: &ExactMatrix) -> Option<ExactMatrix> {
    let n = m.rows();
    let field = m.field();
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row: Vec<Scalar> = m.row(r).to_vec();
            for c in 0..n {
                row.push(if r == c {
                    Scalar::one(field)
                } else {
                    Scalar::zero(field)
                });
            }
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.len() < n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
        return None;
    }
    Some(ExactMatrix::from_rows(
        rows.into_iter().map(|row| row[n..].to_vec()).collect(),
    ))
}

/// One solution of `m x = b` (free variables zero); `None` if inconsistent.
pub(crate) fn solve(m: &ExactMatrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols = m.cols();
    let field = m.field();
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|r| {
            let mut row: Vec<Scalar> = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Scalar::zero(field); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][cols].clone();
    }
    Some(x)
}
