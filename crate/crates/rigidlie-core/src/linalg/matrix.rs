use alloc::vec::Vec;
use core::fmt;

use crate::scalars::{Field, Scalar};

use super::elim;
use super::subspace::Subspace;
use super::LinalgError;

/// Dense matrix with exact scalar entries, row-major storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = ExactMatrix::zeros(n, n, field);
        for k in 0..n {
            m.set(k, k, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        ExactMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Square matrix with the given diagonal.
    pub fn from_diag(diag: Vec<Scalar>) -> Self {
        let n = diag.len();
        let field = diag
            .iter()
            .fold(Field::Q, |acc, v| acc.join(v.field()));
        let mut m = ExactMatrix::zeros(n, n, field);
        for (k, v) in diag.into_iter().enumerate() {
            m.set(k, k, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    /// Smallest field of the tower containing every entry.
    pub fn field(&self) -> Field {
        if self.data.iter().any(|v| !v.is_real()) {
            Field::QI
        } else {
            Field::Q
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let field = self.field().join(other.field());
        ExactMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Scalar::zero(field);
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + a * other.get(k, c);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length must match columns");
        let field = self.field();
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(field);
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(r, k);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    acc = acc + a * x;
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.field());
        for k in 0..self.rows.min(self.cols) {
            acc = acc + self.get(k, k);
        }
        acc
    }

    pub fn commutes_with(&self, other: &ExactMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Rank together with a canonical (reduced row-echelon) basis of the
    /// right nullspace. Elimination is fraction-free Bareiss with the first
    /// nonzero entry in column order as pivot, so results are reproducible.
    ///
    /// Total on any shape; a matrix with no rows has rank 0 and full
    /// nullspace.
    pub fn rank_and_nullspace(&self) -> (usize, Subspace) {
        let ech = elim::bareiss_echelon(self);
        let vectors = elim::nullspace_from_echelon(&ech);
        let rank = ech.pivots.len();
        let ns = Subspace::from_spanning(self.cols, vectors);
        debug_assert_eq!(rank + ns.dim(), self.cols);
        (rank, ns)
    }

    pub fn rank(&self) -> usize {
        elim::bareiss_echelon(self).pivots.len()
    }

    /// Inverse of a square matrix; a singular input yields an error carrying
    /// a nonzero kernel vector as witness.
    pub fn invert(&self) -> Result<ExactMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        match elim::invert(self) {
            Some(inv) => Ok(inv),
            None => {
                let (_, ns) = self.rank_and_nullspace();
                let witness = ns.basis_row(0).to_vec();
                Err(LinalgError::Singular {
                    kernel_witness: witness,
                })
            }
        }
    }

    /// One exact solution of `self * x = b`, with free variables set to
    /// zero; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "right-hand side length must match rows");
        elim::solve(self, b)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_identity_and_zero() {
        let (rank, ns) = ExactMatrix::identity(3, Field::Q).rank_and_nullspace();
        assert_eq!((rank, ns.dim()), (3, 0));
        let (rank, ns) = ExactMatrix::zeros(2, 2, Field::Q).rank_and_nullspace();
        assert_eq!((rank, ns.dim()), (0, 2));
    }

    #[test]
    fn root_equation_matrix_rank() {
        // Five equations x_i + x_j = x_k in six unknowns, as rows of
        // (+1, +1, -1) patterns; rank 5 with one-dimensional nullspace.
        let rows: &[&[i64]] = &[
            &[1, 1, -1, 0, 0, 0],
            &[1, 0, 1, -1, 0, 0],
            &[1, 0, 0, 0, 1, -1],
            &[0, 1, 1, 0, -1, 0],
            &[0, 1, 0, 1, 0, -1],
        ];
        let (rank, ns) = m(rows).rank_and_nullspace();
        assert_eq!(rank, 5);
        assert_eq!(ns.dim(), 1);
        // Basis vector is proportional to (1,2,3,4,5,6).
        let v = ns.basis_row(0);
        let scale = v[0].inv().unwrap();
        let ints: Vec<Scalar> = v.iter().map(|x| x * &scale).collect();
        let expected: Vec<Scalar> = (1..=6).map(Scalar::from_int).collect();
        assert_eq!(ints, expected);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let a = m(&[&[2, 4, 6], &[1, 2, 3]]);
        let (rank, ns) = a.rank_and_nullspace();
        assert_eq!(rank, 1);
        assert_eq!(ns.dim(), 2);
        for r in 0..ns.dim() {
            let v = ns.basis_row(r);
            assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_and_singular_witness() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.invert().unwrap();
        assert_eq!(a.mul(&inv), ExactMatrix::identity(2, Field::Q));

        let s = m(&[&[1, 2], &[2, 4]]);
        match s.invert() {
            Err(LinalgError::Singular { kernel_witness }) => {
                assert!(s.mul_vec(&kernel_witness).iter().all(Scalar::is_zero));
                assert!(kernel_witness.iter().any(|v| !v.is_zero()));
            }
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let x = a
            .solve(&[Scalar::from_int(3), Scalar::from_int(1)])
            .unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(1)]);

        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b.solve(&[Scalar::from_int(0), Scalar::from_int(1)]).is_none());
    }

    #[test]
    fn gaussian_entries_eliminate_exactly() {
        let a = ExactMatrix::from_rows(vec![
            vec![Scalar::i(), Scalar::one(Field::QI)],
            vec![Scalar::one(Field::QI), Scalar::i()],
        ]);
        // Rows are proportional? (i, 1) and (1, i): 1 * i = i, i * i = -1 != 1.
        assert_eq!(a.rank(), 2);
        let inv = a.invert().unwrap();
        assert_eq!(a.mul(&inv), ExactMatrix::identity(2, Field::QI));
    }
}
