//! Lie algebras given by structure constants: bracket evaluation, Jacobi
//! validation, adjoint operators, characteristic series, scalar extension
//! and base change.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{ExactMatrix, LinalgError, Subspace};
use crate::scalars::{Field, Scalar};

/// A finite-dimensional algebra over Q or Q(i) with antisymmetric product
/// table `[e_i, e_j] = sum coeff * e_k`, stored sparsely on pairs `i < j`
/// (0-based). Whether the Jacobi identity holds is checked by [`validate`],
/// not assumed.
///
/// [`validate`]: LieAlgebra::validate
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    field: Field,
    table: BTreeMap<(usize, usize), Vec<(Scalar, usize)>>,
    name: Option<String>,
    basis_names: Vec<String>,
}

/// A nonzero Jacobi sum J(e_i, e_j, e_k), reported per basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiDefect {
    pub triple: (usize, usize, usize),
    pub defect: Vec<Scalar>,
}

/// Which characteristic series to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Nilpotency/solvability verdict; class and length count the steps until
/// the respective series vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesVerdict {
    Nilpotent { class: usize },
    Solvable { length: usize },
    Neither,
}

/// Dimensions of a characteristic series until stabilization, plus the
/// global verdict for the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
    pub verdict: SeriesVerdict,
}

/// Structural errors in bracket tables and operations on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieAlgError {
    IndexOutOfRange { index: usize, dim: usize },
    SelfBracket { index: usize },
    DimensionMismatch { expected: usize, got: usize },
    AlreadyComplex,
    NotRational,
    NotClosed,
    Linalg(LinalgError),
}

impl fmt::Display for LieAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieAlgError::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            LieAlgError::SelfBracket { index } => {
                write!(f, "nonzero bracket [e_{index}, e_{index}] is not antisymmetric")
            }
            LieAlgError::DimensionMismatch { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            LieAlgError::AlreadyComplex => write!(f, "already complex"),
            LieAlgError::NotRational => write!(f, "operation requires a rational algebra"),
            LieAlgError::NotClosed => write!(f, "subspace is not closed under the bracket"),
            LieAlgError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LieAlgError {}

impl From<LinalgError> for LieAlgError {
    fn from(e: LinalgError) -> Self {
        LieAlgError::Linalg(e)
    }
}

impl LieAlgebra {
    /// An algebra with no brackets yet (abelian until brackets are added).
    pub fn new(dim: usize, field: Field) -> Self {
        LieAlgebra {
            dim,
            field,
            table: BTreeMap::new(),
            name: None,
            basis_names: (1..=dim).map(|k| alloc::format!("X{k}")).collect(),
        }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(String::from(name));
        self
    }

    /// Adds `[e_i, e_j] = sum coeff * e_k` (0-based indices), canonicalizing
    /// to `i < j` storage with a sign flip when needed. Terms accumulate
    /// onto any existing entry for the pair.
    pub fn add_bracket(
        &mut self,
        i: usize,
        j: usize,
        terms: &[(Scalar, usize)],
    ) -> Result<(), LieAlgError> {
        for &(_, k) in terms {
            if k >= self.dim {
                return Err(LieAlgError::IndexOutOfRange { index: k, dim: self.dim });
            }
        }
        if i >= self.dim {
            return Err(LieAlgError::IndexOutOfRange { index: i, dim: self.dim });
        }
        if j >= self.dim {
            return Err(LieAlgError::IndexOutOfRange { index: j, dim: self.dim });
        }
        if terms.iter().all(|(c, _)| c.is_zero()) {
            return Ok(());
        }
        if i == j {
            return Err(LieAlgError::SelfBracket { index: i });
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        let entry = self.table.entry((a, b)).or_default();
        for (c, k) in terms {
            let c = if flip { -c } else { c.clone() };
            let c = c.promote(self.field);
            match entry.iter_mut().find(|(_, t)| t == k) {
                Some((acc, _)) => *acc = &*acc + &c,
                None => entry.push((c, *k)),
            }
        }
        entry.retain(|(c, _)| !c.is_zero());
        entry.sort_by_key(|&(_, k)| k);
        if entry.is_empty() {
            self.table.remove(&(a, b));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn basis_name(&self, k: usize) -> &str {
        &self.basis_names[k]
    }

    pub fn set_basis_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
    }

    /// Canonical sparse table, pairs `i < j` with sorted nonzero terms.
    pub fn table(&self) -> &BTreeMap<(usize, usize), Vec<(Scalar, usize)>> {
        &self.table
    }

    /// `[e_i, e_j]` as a coefficient vector, any index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        if i == j {
            return out;
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        if let Some(terms) = self.table.get(&(a, b)) {
            for (c, k) in terms {
                out[*k] = if flip { -c } else { c.clone() };
            }
        }
        out
    }

    /// Bilinear extension of the bracket to coefficient vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for ((i, j), terms) in &self.table {
            // [x, y] picks up (x_i y_j - x_j y_i) * [e_i, e_j].
            let a = &x[*i] * &y[*j];
            let b = &x[*j] * &y[*i];
            let coeff = a - b;
            if coeff.is_zero() {
                continue;
            }
            for (c, k) in terms {
                out[*k] = &out[*k] + &(&coeff * c);
            }
        }
        out
    }

    /// Jacobi sums for every basis triple i < j < k; the table is a Lie
    /// algebra law exactly when the returned list is empty.
    pub fn validate(&self) -> Vec<JacobiDefect> {
        let mut defects = Vec::new();
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sum = self.bracket(&self.basis_vector(i), &self.bracket_basis(j, k));
                    let t2 = self.bracket(&self.basis_vector(j), &self.bracket_basis(k, i));
                    let t3 = self.bracket(&self.basis_vector(k), &self.bracket_basis(i, j));
                    for (s, (a, b)) in sum.iter_mut().zip(t2.into_iter().zip(t3)) {
                        *s = &*s + &a + b;
                    }
                    if sum.iter().any(|v| !v.is_zero()) {
                        defects.push(JacobiDefect {
                            triple: (i, j, k),
                            defect: sum,
                        });
                    }
                }
            }
        }
        defects
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.field); self.dim];
        v[k] = Scalar::one(self.field);
        v
    }

    /// Adjoint operator of a coefficient vector: column j is `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<ExactMatrix, LieAlgError> {
        if x.len() != self.dim {
            return Err(LieAlgError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = ExactMatrix::zeros(self.dim, self.dim, self.field);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis_vector(j));
            for (r, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> ExactMatrix {
        self.ad(&self.basis_vector(i)).expect("basis vector has the right length")
    }

    fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for x in a.basis_rows() {
            for y in b.basis_rows() {
                vectors.push(self.bracket(x, y));
            }
        }
        Subspace::from_spanning(self.dim, vectors)
    }

    fn series_dims(&self, kind: SeriesKind) -> Vec<usize> {
        let full = Subspace::full(self.dim, self.field);
        let mut dims = vec![self.dim];
        let mut current = full.clone();
        loop {
            let next = match kind {
                SeriesKind::LowerCentral => self.bracket_span(&full, &current),
                SeriesKind::Derived => self.bracket_span(&current, &current),
            };
            if next.dim() == current.dim() {
                break;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            current = next;
        }
        dims
    }

    /// Characteristic series dimensions until stabilization. The verdict is
    /// global: nilpotent when the lower central series vanishes, else
    /// solvable when the derived series does.
    pub fn series(&self, kind: SeriesKind) -> SeriesReport {
        let dims = self.series_dims(kind);
        let lc = match kind {
            SeriesKind::LowerCentral => dims.clone(),
            SeriesKind::Derived => self.series_dims(SeriesKind::LowerCentral),
        };
        let verdict = if lc.last() == Some(&0) {
            SeriesVerdict::Nilpotent { class: lc.len() - 1 }
        } else {
            let dv = match kind {
                SeriesKind::Derived => dims.clone(),
                SeriesKind::LowerCentral => self.series_dims(SeriesKind::Derived),
            };
            if dv.last() == Some(&0) {
                SeriesVerdict::Solvable { length: dv.len() - 1 }
            } else {
                SeriesVerdict::Neither
            }
        };
        SeriesReport { kind, dims, verdict }
    }

    pub fn is_solvable(&self) -> bool {
        !matches!(
            self.series(SeriesKind::Derived).verdict,
            SeriesVerdict::Neither
        )
    }

    pub fn is_nilpotent(&self) -> bool {
        matches!(
            self.series(SeriesKind::LowerCentral).verdict,
            SeriesVerdict::Nilpotent { .. }
        )
    }

    /// The same table viewed over Q(i).
    pub fn complexify(&self) -> Result<LieAlgebra, LieAlgError> {
        if self.field == Field::QI {
            return Err(LieAlgError::AlreadyComplex);
        }
        let mut out = LieAlgebra {
            dim: self.dim,
            field: Field::QI,
            table: self
                .table
                .iter()
                .map(|(k, terms)| {
                    (
                        *k,
                        terms
                            .iter()
                            .map(|(c, t)| (c.clone().promote(Field::QI), *t))
                            .collect(),
                    )
                })
                .collect(),
            name: self.name.clone(),
            basis_names: self.basis_names.clone(),
        };
        if let Some(n) = &mut out.name {
            n.push_str(" (x) C");
        }
        Ok(out)
    }

    /// The law transported along `P`: new basis vectors are the columns of
    /// `P` in old coordinates, so the new table is `P^{-1} [P e_i, P e_j]`.
    /// Equality of the resulting table with another algebra's certifies an
    /// isomorphism.
    pub fn base_change(&self, p: &ExactMatrix) -> Result<LieAlgebra, LieAlgError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(LieAlgError::DimensionMismatch {
                expected: self.dim,
                got: p.rows(),
            });
        }
        let p_inv = p.invert()?;
        let field = self.field.join(p.field());
        let mut out = LieAlgebra::new(self.dim, field);
        out.basis_names = self.basis_names.clone();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let u = p.col(i);
                let v = p.col(j);
                let w = self.bracket_in(field, &u, &v);
                let w = p_inv.mul_vec(&w);
                let terms: Vec<(Scalar, usize)> = w
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c, k))
                    .collect();
                out.add_bracket(i, j, &terms)?;
            }
        }
        Ok(out)
    }

    /// Bracket with the promotion field chosen by the caller (needed when a
    /// rational algebra is transported along a complex matrix).
    fn bracket_in(&self, field: Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(field); self.dim];
        for ((i, j), terms) in &self.table {
            let a = &x[*i] * &y[*j];
            let b = &x[*j] * &y[*i];
            let coeff = a - b;
            if coeff.is_zero() {
                continue;
            }
            for (c, k) in terms {
                out[*k] = &out[*k] + &(&coeff * c);
            }
        }
        out
    }

    /// Structure constants of a bracket-closed subspace in its echelon
    /// basis. Errors when the subspace is not closed.
    pub fn subalgebra_on(&self, sub: &Subspace) -> Result<LieAlgebra, LieAlgError> {
        assert_eq!(sub.ambient_dim(), self.dim);
        let m = sub.dim();
        let basis = ExactMatrix::from_fn(self.dim, m, |r, c| sub.basis_row(c)[r].clone());
        let mut out = LieAlgebra::new(m, self.field);
        for i in 0..m {
            for j in i + 1..m {
                let w = self.bracket(sub.basis_row(i), sub.basis_row(j));
                if w.iter().all(Scalar::is_zero) {
                    continue;
                }
                let coeffs = basis.solve(&w).ok_or(LieAlgError::NotClosed)?;
                let terms: Vec<(Scalar, usize)> = coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c, k))
                    .collect();
                out.add_bracket(i, j, &terms)?;
            }
        }
        Ok(out)
    }

    /// The center: common kernel of all adjoint operators.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(0);
        }
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            let ad = self.ad_basis(j);
            for r in 0..self.dim {
                rows.push(ad.row(r).to_vec());
            }
        }
        let stacked = ExactMatrix::from_rows(rows);
        let (_, ns) = stacked.rank_and_nullspace();
        ns
    }

    /// The derived subalgebra [g, g] as a subspace.
    pub fn derived_subspace(&self) -> Subspace {
        let full = Subspace::full(self.dim, self.field);
        self.bracket_span(&full, &full)
    }
}

/// Structural equality of canonical tables (name and labels ignored).
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.field == other.field && self.table == other.table
    }
}

impl Eq for LieAlgebra {}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg() -> LieAlgebra {
        let mut g = LieAlgebra::new(3, Field::Q);
        g.add_bracket(0, 1, &[(Scalar::from_int(1), 2)]).unwrap();
        g
    }

    #[test]
    fn abelian_validates_and_is_nilpotent() {
        let g = LieAlgebra::new(4, Field::Q);
        assert!(g.validate().is_empty());
        let report = g.series(SeriesKind::LowerCentral);
        assert_eq!(report.dims, vec![4, 0]);
        assert_eq!(report.verdict, SeriesVerdict::Nilpotent { class: 1 });
    }

    #[test]
    fn non_jacobi_table_is_reported() {
        // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e2 has Jacobi defect e3 at (1,2,3).
        let mut g = LieAlgebra::new(3, Field::Q);
        g.add_bracket(0, 1, &[(Scalar::from_int(1), 2)]).unwrap();
        g.add_bracket(0, 2, &[(Scalar::from_int(1), 1)]).unwrap();
        g.add_bracket(1, 2, &[(Scalar::from_int(1), 1)]).unwrap();
        let defects = g.validate();
        assert_eq!(defects.len(), 1);
        assert_eq!(defects[0].triple, (0, 1, 2));
        let mut expected = vec![Scalar::zero(Field::Q); 3];
        expected[2] = Scalar::from_int(1);
        assert_eq!(defects[0].defect, expected);
    }

    #[test]
    fn bracket_flips_sign() {
        let g = heisenberg();
        let f = g.bracket_basis(0, 1);
        let b = g.bracket_basis(1, 0);
        assert_eq!(f[2], Scalar::from_int(1));
        assert_eq!(b[2], Scalar::from_int(-1));
    }

    #[test]
    fn ad_of_central_element_is_zero() {
        let g = heisenberg();
        let ad = g.ad_basis(2);
        assert!(ad.is_zero());
        assert_eq!(g.center().dim(), 1);
    }

    #[test]
    fn out_of_range_is_structural_error() {
        let mut g = LieAlgebra::new(2, Field::Q);
        assert_eq!(
            g.add_bracket(0, 1, &[(Scalar::from_int(1), 5)]),
            Err(LieAlgError::IndexOutOfRange { index: 5, dim: 2 })
        );
    }

    #[test]
    fn complexify_preserves_table() {
        let g = heisenberg();
        let gc = g.complexify().unwrap();
        assert_eq!(gc.field(), Field::QI);
        assert_eq!(gc.table().len(), g.table().len());
        assert!(gc.validate().is_empty());
        assert_eq!(gc.complexify(), Err(LieAlgError::AlreadyComplex));
    }

    #[test]
    fn base_change_roundtrip_is_identity() {
        let g = heisenberg();
        let p = ExactMatrix::from_rows(vec![
            vec![Scalar::from_int(1), Scalar::from_int(1), Scalar::from_int(0)],
            vec![Scalar::from_int(0), Scalar::from_int(1), Scalar::from_int(2)],
            vec![Scalar::from_int(0), Scalar::from_int(0), Scalar::from_int(1)],
        ]);
        let h = g.base_change(&p).unwrap();
        let back = h.base_change(&p.invert().unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn singular_base_change_reports_kernel() {
        let g = heisenberg();
        let p = ExactMatrix::zeros(3, 3, Field::Q);
        match g.base_change(&p) {
            Err(LieAlgError::Linalg(LinalgError::Singular { kernel_witness })) => {
                assert_eq!(kernel_witness.len(), 3);
            }
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn heisenberg_series() {
        let g = heisenberg();
        let lc = g.series(SeriesKind::LowerCentral);
        assert_eq!(lc.dims, vec![3, 1, 0]);
        assert_eq!(lc.verdict, SeriesVerdict::Nilpotent { class: 2 });
        let dv = g.series(SeriesKind::Derived);
        assert_eq!(dv.dims, vec![3, 1, 0]);
    }
}
