use alloc::vec::Vec;

use crate::scalars::{Field, Scalar};

use super::elim;
use super::matrix::ExactMatrix;

/// A linear subspace given by a reduced row-echelon basis; the echelon form
/// makes equality of subspaces plain equality of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
}

impl Subspace {
    /// Span of the given vectors inside an ambient space.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        let mut rows = vectors;
        let pivots = elim::rref(&mut rows);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: ExactMatrix::from_rows(rows),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::zeros(0, ambient, Field::Q),
        }
    }

    pub fn full(ambient: usize, field: Field) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::identity(ambient, field),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_row(&self, k: usize) -> &[Scalar] {
        self.basis.row(k)
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.dim()).map(|k| self.basis.row(k))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rem: Vec<Scalar> = v.to_vec();
        for row in self.basis_rows() {
            let p = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if rem[p].is_zero() {
                continue;
            }
            let factor = rem[p].clone();
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                rem[j] = &rem[j] - &(&factor * x);
            }
        }
        rem.iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_rows().all(|row| other.contains(row))
    }

    /// Sum of subspaces (span of the union of bases).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows: Vec<Vec<Scalar>> = self.basis_rows().map(<[Scalar]>::to_vec).collect();
        rows.extend(other.basis_rows().map(<[Scalar]>::to_vec));
        Subspace::from_spanning(self.ambient, rows)
    }

    /// Intersection: solve for combinations of the two bases that agree.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let pa = self.dim();
        let pb = other.dim();
        // Columns: a-coefficients then b-coefficients; rows: ambient coords.
        let m = ExactMatrix::from_fn(self.ambient, pa + pb, |r, c| {
            if c < pa {
                self.basis.get(c, r).clone()
            } else {
                -other.basis.get(c - pa, r)
            }
        });
        let (_, ns) = m.rank_and_nullspace();
        let vectors: Vec<Vec<Scalar>> = ns
            .basis_rows()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(Field::Q); self.ambient];
                for (k, alpha) in coeffs.iter().take(pa).enumerate() {
                    if alpha.is_zero() {
                        continue;
                    }
                    for (j, x) in self.basis.row(k).iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        v[j] = &v[j] + &(alpha * x);
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[i64]) -> Vec<Scalar> {
        entries.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_basis_is_order_independent() {
        let a = Subspace::from_spanning(3, vec![v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let b = Subspace::from_spanning(3, vec![v(&[0, 0, 2]), v(&[2, 2, 2])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_spanning(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_spanning(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 5, 0])));
        assert!(!c.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn sum_and_inclusion() {
        let a = Subspace::from_spanning(3, vec![v(&[1, 0, 0])]);
        let b = Subspace::from_spanning(3, vec![v(&[0, 1, 0])]);
        let s = a.sum(&b);
        assert_eq!(s.dim(), 2);
        assert!(a.is_subspace_of(&s));
        assert!(b.is_subspace_of(&s));
        assert!(!s.is_subspace_of(&a));
    }
}
