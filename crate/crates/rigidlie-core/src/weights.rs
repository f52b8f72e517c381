//! Constructive triangularization of solvable algebras: a full flag
//! stabilized by every adjoint operator, the weight functionals read off the
//! diagonal, and from these the nilradical and the complete-solvability
//! test.

use alloc::vec::Vec;
use core::fmt;

use crate::liealg::{LieAlgebra, LieAlgError};
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::{Field, Polynomial, Scalar, ScalarsError};

/// A flag basis (columns) in which every adjoint operator is upper
/// triangular, together with the weight functionals: `weights[j]` lists the
/// values of the j-th diagonal entry on the original basis vectors.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    flag_basis: ExactMatrix,
    weights: Vec<Vec<Scalar>>,
}

impl WeightSystem {
    pub fn flag_basis(&self) -> &ExactMatrix {
        &self.flag_basis
    }

    pub fn weights(&self) -> &[Vec<Scalar>] {
        &self.weights
    }

    /// Value of the j-th weight functional on a coefficient vector.
    pub fn weight_of(&self, j: usize, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero(Field::Q);
        for (c, w) in x.iter().zip(&self.weights[j]) {
            if c.is_zero() || w.is_zero() {
                continue;
            }
            acc = acc + c * w;
        }
        acc
    }
}

/// Verdict of the complete-solvability test, with a witness basis element
/// whose adjoint operator has a non-real eigenvalue when the answer is no.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteSolvability {
    pub completely_solvable: bool,
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightsError {
    /// Triangularization is only defined for solvable algebras.
    NotSolvable,
    /// An adjoint operator's characteristic polynomial does not split over
    /// the working field; carries the offending basis index and the factor.
    NonSplit { basis_index: usize, factor: Polynomial },
    /// The complete-solvability test takes a rational algebra.
    NotRational,
    Scalars(ScalarsError),
    LieAlg(LieAlgError),
}

impl fmt::Display for WeightsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightsError::NotSolvable => {
                write!(f, "Lie's theorem requires solvability")
            }
            WeightsError::NonSplit { basis_index, factor } => write!(
                f,
                "characteristic polynomial of ad(X{}) does not split over the working field; non-split factor {}",
                basis_index + 1,
                factor
            ),
            WeightsError::NotRational => {
                write!(f, "complete solvability is a question about rational algebras")
            }
            WeightsError::Scalars(e) => write!(f, "{e}"),
            WeightsError::LieAlg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for WeightsError {}

impl From<ScalarsError> for WeightsError {
    fn from(e: ScalarsError) -> Self {
        WeightsError::Scalars(e)
    }
}

impl From<LieAlgError> for WeightsError {
    fn from(e: LieAlgError) -> Self {
        WeightsError::LieAlg(e)
    }
}

/// Builds a full invariant flag for a solvable algebra by repeatedly
/// extracting a common eigenvector of the induced quotient operators.
///
/// The common-eigenvector search intersects eigenspaces of the generators
/// in basis order, backtracking over eigenvalue choices and recursing on
/// the first nonzero intersection, so flag bases are reproducible.
pub fn triangularize(g: &LieAlgebra) -> Result<WeightSystem, WeightsError> {
    if !g.is_solvable() {
        return Err(WeightsError::NotSolvable);
    }
    let n = g.dim();
    let field = g.field();
    let ads: Vec<ExactMatrix> = (0..n).map(|i| g.ad_basis(i)).collect();

    // Every operator must split over the working field; eigenvalues of the
    // quotient operators are among the roots found here.
    let mut candidates: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for (i, ad) in ads.iter().enumerate() {
        let mp = ad.minpoly().expect("ad operators are square");
        let fr = mp.roots_in_field(field)?;
        if !fr.splits() {
            return Err(WeightsError::NonSplit {
                basis_index: i,
                factor: fr.remainder,
            });
        }
        candidates.push(fr.roots.into_iter().map(|(r, _)| r).collect());
    }

    let mut flag: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    let mut weights: Vec<Vec<Scalar>> = Vec::with_capacity(n);

    while flag.len() < n {
        let k = flag.len();
        let transform = completed_basis(&flag, n, field);
        let inverse = transform.invert().expect("completed basis is invertible");
        let quotients: Vec<ExactMatrix> = ads
            .iter()
            .map(|ad| {
                let conj = inverse.mul(&ad.mul(&transform));
                ExactMatrix::from_fn(n - k, n - k, |r, c| conj.get(k + r, k + c).clone())
            })
            .collect();

        let w = common_eigenvector(&quotients, &candidates, n - k)
            .expect("a solvable algebra with split spectra has a common eigenvector");

        let mut lambda = Vec::with_capacity(n);
        let pos = w.iter().position(|v| !v.is_zero()).expect("nonzero vector");
        for q in &quotients {
            let image = q.mul_vec(&w);
            let value = image[pos].div(&w[pos]).expect("pivot coefficient nonzero");
            debug_assert!(
                image
                    .iter()
                    .zip(&w)
                    .all(|(im, wv)| *im == &value * wv),
                "candidate is not an eigenvector"
            );
            lambda.push(value);
        }
        weights.push(lambda);

        // Lift the quotient eigenvector to original coordinates.
        let mut padded = vec![Scalar::zero(field); n];
        padded[k..].clone_from_slice(&w);
        flag.push(transform.mul_vec(&padded));
    }

    let flag_basis = ExactMatrix::from_fn(n, n, |r, c| flag[c][r].clone());
    Ok(WeightSystem {
        flag_basis,
        weights,
    })
}

/// Completes flag vectors (as columns) to an invertible matrix using the
/// first standard basis vectors that extend the span.
fn completed_basis(flag: &[Vec<Scalar>], n: usize, field: Field) -> ExactMatrix {
    let mut cols: Vec<Vec<Scalar>> = flag.to_vec();
    let mut span = Subspace::from_spanning(n, cols.clone());
    for m in 0..n {
        if cols.len() == n {
            break;
        }
        let mut e = vec![Scalar::zero(field); n];
        e[m] = Scalar::one(field);
        if !span.contains(&e) {
            cols.push(e.clone());
            span = span.sum(&Subspace::from_spanning(n, vec![e]));
        }
    }
    assert_eq!(cols.len(), n, "flag vectors must be independent");
    ExactMatrix::from_fn(n, n, |r, c| cols[c][r].clone())
}

/// Depth-first search for a joint eigenvector of all operators, trying
/// eigenvalue candidates in canonical order.
fn common_eigenvector(
    ops: &[ExactMatrix],
    candidates: &[Vec<Scalar>],
    dim: usize,
) -> Option<Vec<Scalar>> {
    fn rec(
        ops: &[ExactMatrix],
        candidates: &[Vec<Scalar>],
        idx: usize,
        space: Subspace,
        dim: usize,
    ) -> Option<Vec<Scalar>> {
        if idx == ops.len() {
            return Some(space.basis_row(0).to_vec());
        }
        let op = &ops[idx];
        if op.is_zero() {
            // Every vector is an eigenvector for the eigenvalue 0.
            return rec(ops, candidates, idx + 1, space, dim);
        }
        let field = op.field();
        for lambda in &candidates[idx] {
            let shifted = op.sub(&ExactMatrix::identity(dim, field).scale(lambda));
            let (_, eigenspace) = shifted.rank_and_nullspace();
            if eigenspace.dim() == 0 {
                continue;
            }
            let meet = space.intersect(&eigenspace);
            if meet.dim() == 0 {
                continue;
            }
            if let Some(found) = rec(ops, candidates, idx + 1, meet, dim) {
                return Some(found);
            }
        }
        None
    }
    if dim == 0 {
        return None;
    }
    rec(
        ops,
        candidates,
        0,
        Subspace::full(dim, ops.first().map_or(Field::Q, ExactMatrix::field)),
        dim,
    )
}

/// The nilradical as the common kernel of all weight functionals. For a
/// rational algebra whose spectra only split over Q(i), the weights of the
/// complexification are used and the kernel is cut out over Q by real and
/// imaginary parts.
pub fn nilradical(g: &LieAlgebra) -> Result<Subspace, WeightsError> {
    let ws = match triangularize(g) {
        Ok(ws) => ws,
        Err(WeightsError::NonSplit { .. }) if g.field() == Field::Q => {
            triangularize(&g.complexify()?)?
        }
        Err(e) => return Err(e),
    };
    let n = g.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for lambda in ws.weights() {
        if lambda.iter().all(Scalar::is_zero) {
            continue;
        }
        rows.push(lambda.iter().map(|v| Scalar::from_rational(v.re().clone())).collect());
        if lambda.iter().any(|v| !v.is_real()) {
            rows.push(lambda.iter().map(|v| Scalar::from_rational(v.im().clone())).collect());
        }
    }
    let kernel = if rows.is_empty() {
        Subspace::full(n, g.field())
    } else {
        let (_, ns) = ExactMatrix::from_rows(rows).rank_and_nullspace();
        ns
    };

    // The kernel must be a nilpotent ideal containing the derived algebra;
    // these are theorems about the construction, checked outright.
    assert!(
        g.derived_subspace().is_subspace_of(&kernel),
        "nilradical must contain the derived algebra"
    );
    for j in 0..n {
        for b in kernel.basis_rows() {
            let v = g.bracket(&g.basis_vector(j), b);
            assert!(kernel.contains(&v), "nilradical must be an ideal");
        }
    }
    let restricted = g.subalgebra_on(&kernel)?;
    assert!(
        restricted.is_nilpotent(),
        "nilradical must be nilpotent"
    );
    Ok(kernel)
}

/// Whether every adjoint operator of the rational algebra `g` has all
/// eigenvalues real. Decided exactly: the eigenvalues of `ad x` are the
/// weight values of the complexification, so checking the weights on a
/// basis settles the quantifier over all of `g`.
pub fn is_completely_solvable(g: &LieAlgebra) -> Result<CompleteSolvability, WeightsError> {
    if g.field() != Field::Q {
        return Err(WeightsError::NotRational);
    }
    if !g.is_solvable() {
        return Err(WeightsError::NotSolvable);
    }
    let ws = triangularize(&g.complexify()?)?;
    for i in 0..g.dim() {
        let has_complex = ws.weights().iter().any(|lambda| !lambda[i].is_real());
        if has_complex {
            return Ok(CompleteSolvability {
                completely_solvable: false,
                witness: Some(i),
            });
        }
    }
    Ok(CompleteSolvability {
        completely_solvable: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::liealg::LieAlgebra;

    fn is_upper_triangular(m: &ExactMatrix) -> bool {
        (0..m.rows()).all(|r| (0..r).all(|c| m.get(r, c).is_zero()))
    }

    #[test]
    fn triangularize_requires_solvability() {
        // sl2 is not solvable: [e,f]=h, [h,e]=2e, [h,f]=-2f.
        let mut g = LieAlgebra::new(3, Field::Q);
        g.add_bracket(0, 1, &[(Scalar::from_int(1), 2)]).unwrap();
        g.add_bracket(2, 0, &[(Scalar::from_int(2), 0)]).unwrap();
        g.add_bracket(2, 1, &[(Scalar::from_int(-2), 1)]).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(triangularize(&g).unwrap_err(), WeightsError::NotSolvable);
    }

    #[test]
    fn nilpotent_weights_vanish() {
        let g = catalog::catalog_get("N6_6").unwrap().algebra;
        let ws = triangularize(&g).unwrap();
        assert!(ws
            .weights()
            .iter()
            .all(|lambda| lambda.iter().all(Scalar::is_zero)));
    }

    #[test]
    fn flag_triangularizes_all_ad_operators() {
        for key in ["N6_7", "g2hat_r8_22_normal"] {
            let g = catalog::catalog_get(key).unwrap().algebra;
            let ws = triangularize(&g).unwrap();
            let t = ws.flag_basis();
            let tinv = t.invert().unwrap();
            for i in 0..g.dim() {
                let conj = tinv.mul(&g.ad_basis(i).mul(t));
                assert!(is_upper_triangular(&conj), "{key}, ad(X{})", i + 1);
                for j in 0..g.dim() {
                    assert_eq!(conj.get(j, j), &ws.weights()[j][i], "{key} diagonal");
                }
            }
        }
    }

    #[test]
    fn g2hat_weight_multiset() {
        let g = catalog::catalog_get("g2hat_r8_22_normal").unwrap().algebra;
        let ws = triangularize(&g).unwrap();
        // Pairs (lambda(X7), lambda(X8)) on the six nilradical positions,
        // plus two zero pairs for the torus directions.
        let mut pairs: Vec<(Scalar, Scalar)> = ws
            .weights()
            .iter()
            .map(|l| (l[6].clone(), l[7].clone()))
            .collect();
        pairs.sort();
        let expected: Vec<(Scalar, Scalar)> = [
            (0, 0),
            (0, 0),
            (1, 0),
            (1, 1),
            (1, 1),
            (1, 1),
            (1, 2),
            (1, 2),
        ]
        .iter()
        .map(|&(a, b)| (Scalar::from_int(a), Scalar::from_int(b)))
        .collect();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn g1hat_needs_complexification_and_gets_gaussian_weights() {
        let g = catalog::catalog_get("g1hat_r8_22_2").unwrap().algebra;
        match triangularize(&g) {
            Err(WeightsError::NonSplit { factor, .. }) => {
                assert_eq!(factor, Polynomial::from_int_coeffs(&[1, 0, 1]));
            }
            other => panic!("expected a non-split failure over Q, got {other:?}"),
        }
        let ws = triangularize(&g.complexify().unwrap()).unwrap();
        let mut pairs: Vec<(Scalar, Scalar)> = ws
            .weights()
            .iter()
            .map(|l| (l[6].clone(), l[7].clone()))
            .collect();
        pairs.sort();
        let i = Scalar::i;
        let mut expected = vec![
            (Scalar::from_int(0), Scalar::from_int(0)),
            (Scalar::from_int(0), Scalar::from_int(0)),
            (Scalar::from_int(1), i()),
            (Scalar::from_int(1), -i()),
            (Scalar::from_int(2), Scalar::from_int(0)),
            (Scalar::from_int(3), i()),
            (Scalar::from_int(3), -i()),
            (Scalar::from_int(4), Scalar::from_int(0)),
        ];
        expected.sort();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn nilradicals_have_expected_dimension() {
        for entry in catalog::all_entries() {
            let nr = nilradical(&entry.algebra).unwrap();
            assert_eq!(nr.dim(), entry.expectations.nilradical_dim, "{}", entry.key);
        }
    }

    #[test]
    fn complete_solvability_matches_catalog() {
        for entry in catalog::all_entries() {
            let verdict = is_completely_solvable(&entry.algebra).unwrap();
            assert_eq!(
                Some(verdict.completely_solvable),
                entry.expectations.completely_solvable,
                "{}",
                entry.key
            );
        }
    }

    #[test]
    fn witnesses_are_x8() {
        for key in ["g1hat_r8_22_2", "r8_29_2"] {
            let g = catalog::catalog_get(key).unwrap().algebra;
            let verdict = is_completely_solvable(&g).unwrap();
            assert!(!verdict.completely_solvable);
            assert_eq!(verdict.witness, Some(7), "{key} witness should be X8");
        }
    }

    #[test]
    fn complete_solvability_rejects_complex_input() {
        let g = catalog::catalog_get("N6_6").unwrap().algebra;
        let gc = g.complexify().unwrap();
        assert_eq!(
            is_completely_solvable(&gc).unwrap_err(),
            WeightsError::NotRational
        );
    }
}
