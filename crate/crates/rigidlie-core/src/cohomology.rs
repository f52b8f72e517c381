//! Chevalley-Eilenberg cochain complex with adjoint coefficients, up to the
//! degree needed for H^0, H^1 and H^2, and the sufficient rigidity
//! certificate H^2 = 0.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::derivations;
use crate::liealg::LieAlgebra;
use crate::linalg::ExactMatrix;
use crate::scalars::Scalar;

/// Exact dimensions and ranks of the low-degree complex. `h2 == 0` is
/// sufficient for rigidity, not necessary, so the certificate is a one-way
/// verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub rank_d0: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub rigid_certificate: bool,
    /// Cross-check against the independently solved Leibniz system:
    /// `dim Der(g) = n - h0 + h1`.
    pub der_consistency: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyError {
    DegreeOutOfRange { k: usize },
}

impl fmt::Display for CohomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyError::DegreeOutOfRange { k } => {
                write!(f, "coboundary degree {k} out of range (0..=2)")
            }
        }
    }
}

impl core::error::Error for CohomologyError {}

/// Rigidity verdict from the cohomological criterion alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityVerdict {
    /// H^2(g, g) = 0: rigid by the sufficient criterion.
    AlgebraicallyRigid,
    /// H^2(g, g) != 0: the criterion is silent, no conclusion either way.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub cohomology: CohomologyReport,
    pub verdict: RigidityVerdict,
}

fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Matrix of the Chevalley-Eilenberg differential d^k: C^k -> C^{k+1} with
/// adjoint coefficients,
///
///   (d phi)(x_0..x_k) = sum_i (-1)^i [x_i, phi(.. x_i ..)]
///                     + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], .. x_i .. x_j ..),
///
/// on the basis ordered lexicographically by (index tuple, target).
pub fn coboundary_matrix(g: &LieAlgebra, k: usize) -> Result<ExactMatrix, CohomologyError> {
    if k > 2 {
        return Err(CohomologyError::DegreeOutOfRange { k });
    }
    let n = g.dim();
    let field = g.field();
    let col_tuples = increasing_tuples(n, k);
    let row_tuples = increasing_tuples(n, k + 1);
    let col_rank: BTreeMap<&[usize], usize> = col_tuples
        .iter()
        .enumerate()
        .map(|(r, t)| (t.as_slice(), r))
        .collect();

    let mut m = ExactMatrix::zeros(row_tuples.len() * n, col_tuples.len() * n, field);
    let sign = |e: usize| -> Scalar { Scalar::from_int(if e % 2 == 0 { 1 } else { -1 }) };

    for (r_rank, tuple) in row_tuples.iter().enumerate() {
        // First sum: [x_i, phi(tuple minus i)] hits every target coordinate.
        for (i, &xi) in tuple.iter().enumerate() {
            let mut rest = tuple.clone();
            rest.remove(i);
            let Some(&c_rank) = col_rank.get(rest.as_slice()) else {
                continue;
            };
            let s = sign(i);
            for t in 0..n {
                let col = c_rank * n + t;
                let v = g.bracket_basis(xi, t);
                for (u, coeff) in v.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let row = r_rank * n + u;
                    let cur = m.get(row, col).clone();
                    m.set(row, col, cur + &s * coeff);
                }
            }
        }
        // Second sum: phi([x_i,x_j], tuple minus i,j), landing on the
        // cochain's own target coordinate.
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                let w = g.bracket_basis(tuple[i], tuple[j]);
                if w.iter().all(Scalar::is_zero) {
                    continue;
                }
                let mut rest = tuple.clone();
                rest.remove(j);
                rest.remove(i);
                let s_ij = sign(i + j);
                for (b, coeff) in w.iter().enumerate() {
                    if coeff.is_zero() || rest.contains(&b) {
                        continue;
                    }
                    let pos = rest.iter().filter(|&&x| x < b).count();
                    let mut sorted = rest.clone();
                    sorted.insert(pos, b);
                    let Some(&c_rank) = col_rank.get(sorted.as_slice()) else {
                        continue;
                    };
                    let total = &s_ij * &sign(pos) * coeff;
                    for t in 0..n {
                        let col = c_rank * n + t;
                        let row = r_rank * n + t;
                        let cur = m.get(row, col).clone();
                        m.set(row, col, cur + &total);
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Dimensions of H^0, H^1, H^2 by exact rank computations, with the
/// derivation-dimension cross-check filled in.
pub fn cohomology_dims(g: &LieAlgebra) -> CohomologyReport {
    let n = g.dim();
    let c1 = n * n;
    let c2 = n * binom2(n);
    let d0 = coboundary_matrix(g, 0).expect("degree 0 in range");
    let d1 = coboundary_matrix(g, 1).expect("degree 1 in range");
    let d2 = coboundary_matrix(g, 2).expect("degree 2 in range");
    let rank_d0 = d0.rank();
    let rank_d1 = d1.rank();
    let rank_d2 = d2.rank();
    let h0 = n - rank_d0;
    let h1 = (c1 - rank_d1) - rank_d0;
    let h2 = (c2 - rank_d2) - rank_d1;
    let der_dim = derivations::derivation_algebra(g).dim();
    CohomologyReport {
        h0,
        h1,
        h2,
        rank_d0,
        rank_d1,
        rank_d2,
        rigid_certificate: h2 == 0,
        der_consistency: Some(der_dim == n - h0 + h1),
    }
}

/// The Nijenhuis-Richardson style certificate: `AlgebraicallyRigid` when
/// H^2 vanishes, `Inconclusive` otherwise. H^2 is unchanged under scalar
/// extension, so the verdict is the same over Q and over Q(i).
pub fn rigidity_certificate(g: &LieAlgebra) -> RigidityReport {
    let cohomology = cohomology_dims(g);
    let verdict = if cohomology.h2 == 0 {
        RigidityVerdict::AlgebraicallyRigid
    } else {
        RigidityVerdict::Inconclusive
    };
    RigidityReport { cohomology, verdict }
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::LieAlgebra;
    use crate::scalars::Field;

    fn heisenberg() -> LieAlgebra {
        let mut g = LieAlgebra::new(3, Field::Q);
        g.add_bracket(0, 1, &[(Scalar::from_int(1), 2)]).unwrap();
        g
    }

    #[test]
    fn degree_bound_is_enforced() {
        let g = heisenberg();
        assert!(matches!(
            coboundary_matrix(&g, 3),
            Err(CohomologyError::DegreeOutOfRange { k: 3 })
        ));
    }

    #[test]
    fn abelian_differentials_vanish() {
        let g = LieAlgebra::new(3, Field::Q);
        for k in 0..=2 {
            assert!(coboundary_matrix(&g, k).unwrap().is_zero());
        }
    }

    #[test]
    fn dimensions_follow_the_binomials() {
        let g = catalog_g2hat();
        let d1 = coboundary_matrix(&g, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (224, 64));
        let d2 = coboundary_matrix(&g, 2).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (448, 224));
    }

    fn catalog_g2hat() -> LieAlgebra {
        crate::catalog::catalog_get("g2hat_r8_22_normal").unwrap().algebra
    }

    #[test]
    fn d_squared_is_zero_for_heisenberg() {
        let g = heisenberg();
        let d0 = coboundary_matrix(&g, 0).unwrap();
        let d1 = coboundary_matrix(&g, 1).unwrap();
        let d2 = coboundary_matrix(&g, 2).unwrap();
        assert!(d1.mul(&d0).is_zero());
        assert!(d2.mul(&d1).is_zero());
    }

    #[test]
    fn abelian_two_dimensional_h2() {
        // For the abelian plane every 2-cochain is closed and nothing is a
        // coboundary: h2 = dim C^2 = 2.
        let g = LieAlgebra::new(2, Field::Q);
        let report = cohomology_dims(&g);
        assert_eq!((report.h0, report.h1, report.h2), (2, 4, 2));
        assert!(!report.rigid_certificate);
        assert_eq!(report.der_consistency, Some(true));
        assert_eq!(
            rigidity_certificate(&g).verdict,
            RigidityVerdict::Inconclusive
        );
    }

    #[test]
    fn h0_is_the_center_dimension() {
        let g = heisenberg();
        let report = cohomology_dims(&g);
        assert_eq!(report.h0, g.center().dim());
        assert_eq!(report.der_consistency, Some(true));
    }
}
