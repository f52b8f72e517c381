//! The derivation algebra as the nullspace of the Leibniz system, the
//! semisimplicity trichotomy for a single rational matrix, and a bounded
//! search for commuting R-diagonalizable tori.

use alloc::vec::Vec;
use core::fmt;

use crate::liealg::LieAlgebra;
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::{Field, Scalar, ScalarsError};

/// Canonical basis of Der(g), each element an n x n matrix satisfying the
/// Leibniz identity on all basis pairs.
#[derive(Clone, Debug)]
pub struct DerivationBasis {
    pub basis: Vec<ExactMatrix>,
}

impl DerivationBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// How a single rational matrix diagonalizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemisimplicityClass {
    RDiagonalizable,
    CDiagonalizableOnly,
    NotSemisimple,
}

impl fmt::Display for SemisimplicityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemisimplicityClass::RDiagonalizable => write!(f, "R-diagonalizable"),
            SemisimplicityClass::CDiagonalizableOnly => write!(f, "C-diagonalizable only"),
            SemisimplicityClass::NotSemisimple => write!(f, "not semisimple"),
        }
    }
}

/// Failure of the Leibniz identity at one basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizDefect {
    pub pair: (usize, usize),
    pub defect: Vec<Scalar>,
}

/// Outcome of the bounded torus search. The search is a heuristic over a
/// finite integer grid: the rank found is attained, but maximality beyond
/// the searched grid is not claimed.
#[derive(Clone, Debug)]
pub struct TorusReport {
    pub generators: Vec<ExactMatrix>,
    pub classifications: Vec<SemisimplicityClass>,
    pub rank_over_r: usize,
    pub height: u32,
    pub candidates_searched: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivationsError {
    DimensionMismatch { expected: usize, got: usize },
    NotSquare,
    /// Semisimplicity classification works on rational matrices.
    NotRational,
    Scalars(ScalarsError),
}

impl fmt::Display for DerivationsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationsError::DimensionMismatch { expected, got } => {
                write!(f, "expected a {expected}x{expected} matrix, got {got} rows")
            }
            DerivationsError::NotSquare => write!(f, "matrix must be square"),
            DerivationsError::NotRational => {
                write!(f, "semisimplicity classification requires rational entries")
            }
            DerivationsError::Scalars(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DerivationsError {}

impl From<ScalarsError> for DerivationsError {
    fn from(e: ScalarsError) -> Self {
        DerivationsError::Scalars(e)
    }
}

/// Solves the Leibniz identity `D[x,y] = [Dx,y] + [x,Dy]` on all basis
/// pairs as a linear system in the n^2 matrix unknowns; the nullspace basis
/// comes back echelonized with unknowns ordered row-major.
pub fn derivation_algebra(g: &LieAlgebra) -> DerivationBasis {
    let n = g.dim();
    let field = g.field();
    let unknowns = n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(unknowns * n * (n - 1) / 2);
    // Cache of all basis brackets.
    let bracket: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|i| (0..n).map(|j| g.bracket_basis(i, j)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            for t in 0..n {
                let mut row = vec![Scalar::zero(field); unknowns];
                // D[e_i, e_j] picks up the structure constants of the pair.
                for (b, c) in bracket[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        row[t * n + b] = &row[t * n + b] + c;
                    }
                }
                // -[D e_i, e_j] and -[e_i, D e_j].
                for a in 0..n {
                    let c1 = &bracket[a][j][t];
                    if !c1.is_zero() {
                        row[a * n + i] = &row[a * n + i] - c1;
                    }
                    let c2 = &bracket[i][a][t];
                    if !c2.is_zero() {
                        row[a * n + j] = &row[a * n + j] - c2;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        // No constraints (abelian): every matrix is a derivation.
        let mut basis = Vec::with_capacity(unknowns);
        for a in 0..n {
            for b in 0..n {
                let mut m = ExactMatrix::zeros(n, n, field);
                m.set(a, b, Scalar::one(field));
                basis.push(m);
            }
        }
        return DerivationBasis { basis };
    }
    let (_, ns) = ExactMatrix::from_rows(rows).rank_and_nullspace();
    let basis = ns
        .basis_rows()
        .map(|v| ExactMatrix::from_fn(n, n, |a, b| v[a * n + b].clone()))
        .collect();
    DerivationBasis { basis }
}

/// Leibniz defects of a candidate matrix, one entry per failing basis pair;
/// empty exactly when `m` is a derivation.
pub fn is_derivation(
    g: &LieAlgebra,
    m: &ExactMatrix,
) -> Result<Vec<LeibnizDefect>, DerivationsError> {
    let n = g.dim();
    if m.rows() != n || m.cols() != n {
        return Err(DerivationsError::DimensionMismatch {
            expected: n,
            got: m.rows(),
        });
    }
    let mut defects = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.mul_vec(&g.bracket_basis(i, j));
            let di = m.col(i);
            let dj = m.col(j);
            let r1 = g.bracket(&di, &g.basis_vector(j));
            let r2 = g.bracket(&g.basis_vector(i), &dj);
            let defect: Vec<Scalar> = lhs
                .into_iter()
                .zip(r1.into_iter().zip(r2))
                .map(|(l, (a, b))| l - a - b)
                .collect();
            if defect.iter().any(|v| !v.is_zero()) {
                defects.push(LeibnizDefect { pair: (i, j), defect });
            }
        }
    }
    Ok(defects)
}

/// Classifies a rational square matrix by its minimal polynomial: not
/// semisimple when the minimal polynomial has a repeated root, otherwise
/// R-diagonalizable exactly when all its roots are real.
pub fn semisimplicity_class(m: &ExactMatrix) -> Result<SemisimplicityClass, DerivationsError> {
    if !m.is_square() {
        return Err(DerivationsError::NotSquare);
    }
    if m.field() != Field::Q {
        return Err(DerivationsError::NotRational);
    }
    let mp = m.minpoly().map_err(|_| DerivationsError::NotSquare)?;
    let deriv = mp.derivative();
    let g = mp.gcd(&deriv);
    if g.degree() != Some(0) {
        return Ok(SemisimplicityClass::NotSemisimple);
    }
    let real_roots = mp.sturm_real_root_count()?;
    if Some(real_roots) == mp.degree() {
        Ok(SemisimplicityClass::RDiagonalizable)
    } else {
        Ok(SemisimplicityClass::CDiagonalizableOnly)
    }
}

fn is_nilpotent_matrix(m: &ExactMatrix) -> bool {
    let mp = m.minpoly().expect("square");
    mp.coeffs().iter().rev().skip(1).all(Scalar::is_zero)
}

/// Bounded search for a maximal set of pairwise-commuting,
/// R-diagonalizable integer combinations of the non-nilpotent derivation
/// basis elements, with coefficients bounded by `height`. Ties between
/// maximal sets go to the earliest in enumeration order, so the result is
/// deterministic; nothing beyond the searched grid is claimed.
pub fn torus_search(g: &LieAlgebra, der: &DerivationBasis, height: u32) -> TorusReport {
    assert!(height >= 1, "height must be at least 1");
    let n = g.dim();
    let active: Vec<&ExactMatrix> = der
        .basis
        .iter()
        .filter(|m| !is_nilpotent_matrix(m))
        .collect();
    let m = active.len();

    let mut candidates: Vec<ExactMatrix> = Vec::new();
    if m > 0 {
        let h = height as i64;
        let mut coeffs = vec![-h; m];
        'outer: loop {
            if canonical_coefficients(&coeffs) {
                let mut acc = ExactMatrix::zeros(n, n, g.field());
                for (c, b) in coeffs.iter().zip(&active) {
                    if *c != 0 {
                        acc = acc.add(&b.scale(&Scalar::from_int(*c)));
                    }
                }
                candidates.push(acc);
            }
            // Odometer increment, last coordinate fastest.
            for k in (0..m).rev() {
                if coeffs[k] < h {
                    coeffs[k] += 1;
                    continue 'outer;
                }
                coeffs[k] = -h;
            }
            break;
        }
    }

    let searched = candidates.len();
    let mut rdiag: Vec<Option<bool>> = vec![None; candidates.len()];
    let mut is_rdiag = |idx: usize, cands: &[ExactMatrix], cache: &mut Vec<Option<bool>>| -> bool {
        if let Some(v) = cache[idx] {
            return v;
        }
        let v = matches!(
            semisimplicity_class(&cands[idx]),
            Ok(SemisimplicityClass::RDiagonalizable)
        );
        cache[idx] = Some(v);
        v
    };

    // Depth-first search for the largest independent commuting family.
    let mut best: Vec<usize> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        cands: &[ExactMatrix],
        rdiag: &mut Vec<Option<bool>>,
        check: &mut impl FnMut(usize, &[ExactMatrix], &mut Vec<Option<bool>>) -> bool,
        start: usize,
        span: &Subspace,
        stack: &mut Vec<usize>,
        best: &mut Vec<usize>,
        n: usize,
    ) {
        if stack.len() > best.len() {
            *best = stack.clone();
        }
        if best.len() == n {
            return; // cannot beat the ambient bound
        }
        for idx in start..cands.len() {
            if !stack.iter().all(|&s| cands[s].commutes_with(&cands[idx])) {
                continue;
            }
            let flat: Vec<Scalar> = cands[idx].entries().cloned().collect();
            if span.contains(&flat) {
                continue;
            }
            if !check(idx, cands, rdiag) {
                continue;
            }
            let new_span = span.sum(&Subspace::from_spanning(flat.len(), vec![flat]));
            stack.push(idx);
            dfs(cands, rdiag, check, idx + 1, &new_span, stack, best, n);
            stack.pop();
        }
    }
    if !candidates.is_empty() {
        dfs(
            &candidates,
            &mut rdiag,
            &mut is_rdiag,
            0,
            &Subspace::zero(n * n),
            &mut stack,
            &mut best,
            n,
        );
    }

    let generators: Vec<ExactMatrix> = best.iter().map(|&i| candidates[i].clone()).collect();
    let classifications = generators
        .iter()
        .map(|g| semisimplicity_class(g).expect("selected generators are rational and square"))
        .collect();
    TorusReport {
        rank_over_r: generators.len(),
        generators,
        classifications,
        height,
        candidates_searched: searched,
    }
}

/// Primitive vectors with positive leading sign, to quotient out scaling.
fn canonical_coefficients(c: &[i64]) -> bool {
    let first = match c.iter().find(|&&v| v != 0) {
        None => return false,
        Some(v) => *v,
    };
    if first < 0 {
        return false;
    }
    let mut g = 0u64;
    for &v in c {
        g = gcd_u64(g, v.unsigned_abs());
    }
    g == 1
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn heisenberg_derivations_have_dimension_six() {
        let mut g = LieAlgebra::new(3, Field::Q);
        g.add_bracket(0, 1, &[(Scalar::from_int(1), 2)]).unwrap();
        let der = derivation_algebra(&g);
        assert_eq!(der.dim(), 6);
        for d in &der.basis {
            assert!(is_derivation(&g, d).unwrap().is_empty());
        }
    }

    #[test]
    fn abelian_derivations_are_all_matrices() {
        let g = LieAlgebra::new(3, Field::Q);
        assert_eq!(derivation_algebra(&g).dim(), 9);
    }

    #[test]
    fn named_derivations_pass() {
        for key in ["N6_6", "N6_7"] {
            let entry = catalog::catalog_get(key).unwrap();
            for (name, m) in &entry.named_derivations {
                assert!(
                    is_derivation(&entry.algebra, m).unwrap().is_empty(),
                    "{key}.{name}"
                );
            }
        }
    }

    #[test]
    fn identity_is_not_a_derivation_of_n6_6() {
        let entry = catalog::catalog_get("N6_6").unwrap();
        let id = ExactMatrix::identity(6, Field::Q);
        let defects = is_derivation(&entry.algebra, &id).unwrap();
        assert!(!defects.is_empty());
        assert_eq!(defects[0].pair, (0, 1));
        // id [X1,X2] - [X1,X2] - [X1,X2] = -X3.
        assert_eq!(defects[0].defect[2], Scalar::from_int(-1));
    }

    #[test]
    fn semisimplicity_trichotomy() {
        let entry = catalog::catalog_get("N6_6").unwrap();
        assert_eq!(
            semisimplicity_class(&entry.named_derivations["f1_1"]).unwrap(),
            SemisimplicityClass::RDiagonalizable
        );
        assert_eq!(
            semisimplicity_class(&entry.named_derivations["f1_2"]).unwrap(),
            SemisimplicityClass::CDiagonalizableOnly
        );
        let mut jordan = ExactMatrix::zeros(2, 2, Field::Q);
        jordan.set(0, 1, Scalar::from_int(1));
        assert_eq!(
            semisimplicity_class(&jordan).unwrap(),
            SemisimplicityClass::NotSemisimple
        );
    }

    #[test]
    fn scalar_derivation_of_one_dimensional_abelian() {
        let g = LieAlgebra::new(1, Field::Q);
        let der = derivation_algebra(&g);
        let report = torus_search(&g, &der, 3);
        assert_eq!(report.rank_over_r, 1);
    }

    #[test]
    fn ads_are_derivations_for_catalog_entries() {
        for entry in catalog::all_entries() {
            for i in 0..entry.algebra.dim() {
                let ad = entry.algebra.ad_basis(i);
                assert!(
                    is_derivation(&entry.algebra, &ad).unwrap().is_empty(),
                    "{} ad(X{})",
                    entry.key,
                    i + 1
                );
            }
        }
    }
}
