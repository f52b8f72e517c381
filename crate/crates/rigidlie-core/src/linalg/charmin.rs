//! Characteristic polynomial by Faddeev-LeVerrier and minimal polynomial by
//! Krylov iteration. Both are exact over Q and Q(i).

use alloc::vec::Vec;

use crate::scalars::{Polynomial, Scalar};

use super::elim;
use super::matrix::ExactMatrix;
use super::LinalgError;

impl ExactMatrix {
    /// Monic characteristic polynomial det(T*I - M) via the
    /// Faddeev-LeVerrier recurrence; the division by the step index is exact
    /// in characteristic zero.
    pub fn charpoly(&self) -> Result<Polynomial, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let n = self.rows();
        let field = self.field();
        let mut coeffs = vec![Scalar::zero(field); n + 1];
        coeffs[n] = Scalar::one(field);
        let mut aux = self.clone();
        for k in 1..=n {
            let c = (-aux.trace())
                .div(&Scalar::from_int(k as i64))
                .expect("k > 0");
            coeffs[n - k] = c.clone();
            if k < n {
                let shifted = aux.add(&ExactMatrix::identity(n, field).scale(&c));
                aux = self.mul(&shifted);
            }
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Monic minimal polynomial: least common multiple of the minimal
    /// polynomials of the basis vectors under the Krylov iteration
    /// v, Mv, M^2 v, ...
    pub fn minpoly(&self) -> Result<Polynomial, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let n = self.rows();
        let field = self.field();
        if n == 0 {
            return Ok(Polynomial::one(field));
        }
        let mut result = Polynomial::one(field);
        for j in 0..n {
            if result.degree() == Some(n) {
                break; // cannot exceed the characteristic degree
            }
            let mut vectors: Vec<Vec<Scalar>> = Vec::new();
            let mut reduced: Vec<Vec<Scalar>> = Vec::new();
            let mut v = vec![Scalar::zero(field); n];
            v[j] = Scalar::one(field);
            loop {
                let mut candidate = reduced.clone();
                candidate.push(v.clone());
                let pivots = elim::rref(&mut candidate);
                if pivots.len() == reduced.len() {
                    break; // v depends on the earlier iterates
                }
                candidate.truncate(pivots.len());
                reduced = candidate;
                vectors.push(v.clone());
                v = self.mul_vec(&v);
            }
            // Express the first dependent iterate in the independent ones.
            let d = vectors.len();
            let krylov = ExactMatrix::from_fn(n, d, |r, c| vectors[c][r].clone());
            let coeffs = krylov
                .solve(&v)
                .expect("dependent Krylov vector lies in the span");
            let mut poly = vec![Scalar::zero(field); d + 1];
            for (k, c) in coeffs.into_iter().enumerate() {
                poly[k] = -c;
            }
            poly[d] = Scalar::one(field);
            result = result.lcm(&Polynomial::from_coeffs(poly));
        }
        Ok(result)
    }
}

/// Evaluates a polynomial at a square matrix (Horner form).
pub fn poly_eval_matrix(p: &Polynomial, m: &ExactMatrix) -> ExactMatrix {
    assert!(m.is_square(), "polynomial evaluation needs a square matrix");
    let n = m.rows();
    let field = m.field();
    let mut acc = ExactMatrix::zeros(n, n, field);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m);
        if !c.is_zero() {
            acc = acc.add(&ExactMatrix::identity(n, field).scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn charpoly_of_zero_and_identity() {
        let z = ExactMatrix::zeros(4, 4, Field::Q);
        assert_eq!(z.charpoly().unwrap(), Polynomial::from_int_coeffs(&[0, 0, 0, 0, 1]));
        let id = ExactMatrix::identity(3, Field::Q);
        // (T-1)^3 = T^3 - 3T^2 + 3T - 1
        assert_eq!(
            id.charpoly().unwrap(),
            Polynomial::from_int_coeffs(&[-1, 3, -3, 1])
        );
        assert_eq!(id.minpoly().unwrap(), Polynomial::from_int_coeffs(&[-1, 1]));
    }

    #[test]
    fn cayley_hamilton_small() {
        let a = m(&[&[2, -1, 0], &[3, 0, 5], &[1, 1, 1]]);
        let p = a.charpoly().unwrap();
        assert!(poly_eval_matrix(&p, &a).is_zero());
    }

    #[test]
    fn minpoly_divides_charpoly() {
        // Jordan-type block structure: minpoly T^2, charpoly T^3.
        let a = m(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(a.minpoly().unwrap(), Polynomial::from_int_coeffs(&[0, 0, 1]));
        let c = a.charpoly().unwrap();
        let (_, r) = c.divrem(&a.minpoly().unwrap()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn minpoly_mixed_eigen_structure() {
        // diag(J_3(0), 1, 1): minpoly T^3 (T - 1), charpoly T^3 (T-1)^2.
        let a = m(&[
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 1],
        ]);
        let expected = Polynomial::from_int_coeffs(&[0, 0, 0, 1])
            .mul(&Polynomial::from_int_coeffs(&[-1, 1]));
        assert_eq!(a.minpoly().unwrap(), expected);
        assert!(poly_eval_matrix(&a.minpoly().unwrap(), &a).is_zero());
    }

    #[test]
    fn non_square_is_rejected() {
        let a = ExactMatrix::zeros(2, 3, Field::Q);
        assert!(matches!(a.charpoly(), Err(LinalgError::NotSquare { .. })));
        assert!(matches!(a.minpoly(), Err(LinalgError::NotSquare { .. })));
    }
}
