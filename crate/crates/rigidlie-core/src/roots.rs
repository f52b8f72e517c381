//! The linear system of roots attached to a regular torus vector: one
//! equation x_i + x_j = x_k per nonzero structure constant among the
//! nilradical eigen-coordinates, its rank test against dim n - 1, and
//! integer bases of its solution space.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::derivations::TorusReport;
use crate::liealg::{LieAlgebra, LieAlgError};
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::{Field, Polynomial, Scalar};
use crate::weights::{self, WeightsError};

/// One root equation `x_i + x_j = x_k` over eigen-coordinate indices
/// (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootEquation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// The structure constant that produced an equation.
#[derive(Clone, Debug)]
pub struct EquationSource {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Scalar,
}

/// Root system of a regular vector: equations among the first `nil_dim`
/// eigen-coordinates (the nilradical part of the eigenbasis); the torus
/// coordinates carry no equations.
#[derive(Clone, Debug)]
pub struct RootSystem {
    /// Ambient variable count, dim g - 1 by convention.
    pub num_vars: usize,
    /// Number of nilradical eigen-coordinates; all equations live here.
    pub nil_dim: usize,
    pub equations: Vec<RootEquation>,
    /// Sources aligned with `equations`.
    pub provenance: Vec<Vec<EquationSource>>,
    /// Columns: the ordered eigenbasis (nilradical first, kernel last).
    pub eigenbasis: ExactMatrix,
    /// Eigenvalue of ad(X) on each eigenbasis column.
    pub eigenvalues: Vec<Scalar>,
}

/// Outcome of the necessary rank criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTest {
    pub rank: usize,
    pub expected: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootsError {
    EmptyTorus,
    /// ad(X) has an eigenvalue outside the working field.
    NonSplit { factor: Polynomial },
    /// ad(X) is not diagonalizable: a repeated root of the minimal
    /// polynomial.
    Defective { eigenvalue: Scalar },
    /// A torus generator is not an inner derivation, so it names no element.
    NotInner,
    Weights(WeightsError),
    LieAlg(LieAlgError),
}

impl fmt::Display for RootsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsError::EmptyTorus => write!(f, "torus has no generators"),
            RootsError::NonSplit { factor } => write!(
                f,
                "ad(X) is not diagonalizable over the working field; non-split factor {factor} (rerun over Q(i))"
            ),
            RootsError::Defective { eigenvalue } => write!(
                f,
                "ad(X) is not diagonalizable: eigenvalue {eigenvalue} is defective"
            ),
            RootsError::NotInner => write!(f, "torus generator is not an inner derivation"),
            RootsError::Weights(e) => write!(f, "{e}"),
            RootsError::LieAlg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RootsError {}

impl From<WeightsError> for RootsError {
    fn from(e: WeightsError) -> Self {
        RootsError::Weights(e)
    }
}

impl From<LieAlgError> for RootsError {
    fn from(e: LieAlgError) -> Self {
        RootsError::LieAlg(e)
    }
}

/// Recovers algebra elements from inner-derivation torus generators by
/// solving `ad(x) = D` for each generator.
pub fn torus_elements_from_report(
    g: &LieAlgebra,
    report: &TorusReport,
) -> Result<Vec<Vec<Scalar>>, RootsError> {
    let n = g.dim();
    let field = g.field();
    // Columns of the big system: vectorized ad(e_i).
    let ads: Vec<ExactMatrix> = (0..n).map(|i| g.ad_basis(i)).collect();
    let system = ExactMatrix::from_fn(n * n, n, |r, c| {
        let (row, col) = (r / n, r % n);
        ads[c].get(row, col).clone()
    });
    let mut out = Vec::with_capacity(report.generators.len());
    for gen in &report.generators {
        let mut rhs = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                rhs.push(gen.get(r, c).clone().promote(field));
            }
        }
        let x = system.solve(&rhs).ok_or(RootsError::NotInner)?;
        out.push(x);
    }
    Ok(out)
}

/// A torus element minimizing dim ker ad(X), searched over the given
/// elements and integer combinations with coefficients bounded by `height`;
/// ties go to the earliest candidate.
pub fn regular_vector(
    g: &LieAlgebra,
    torus_elements: &[Vec<Scalar>],
    height: u32,
) -> Result<Vec<Scalar>, RootsError> {
    if torus_elements.is_empty() {
        return Err(RootsError::EmptyTorus);
    }
    let n = g.dim();
    let m = torus_elements.len();
    let h = height as i64;
    let mut best: Option<(usize, Vec<Scalar>)> = None;
    let mut consider = |x: Vec<Scalar>, best: &mut Option<(usize, Vec<Scalar>)>| {
        if x.iter().all(Scalar::is_zero) {
            return;
        }
        let ad = g.ad(&x).expect("element has the right length");
        let kernel_dim = n - ad.rank();
        match best {
            Some((k, _)) if *k <= kernel_dim => {}
            _ => *best = Some((kernel_dim, x)),
        }
    };
    for t in torus_elements {
        consider(t.clone(), &mut best);
    }
    if m > 1 {
        let mut coeffs = vec![-h; m];
        'outer: loop {
            if canonical(&coeffs) && !is_unit_vector(&coeffs) {
                let mut x = vec![Scalar::zero(g.field()); n];
                for (c, t) in coeffs.iter().zip(torus_elements) {
                    if *c == 0 {
                        continue;
                    }
                    let s = Scalar::from_int(*c);
                    for (xv, tv) in x.iter_mut().zip(t) {
                        *xv = &*xv + &(&s * tv);
                    }
                }
                consider(x, &mut best);
            }
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
    Ok(best.expect("at least one nonzero candidate").1)
}

fn canonical(c: &[i64]) -> bool {
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

fn is_unit_vector(c: &[i64]) -> bool {
    c.iter().filter(|&&v| v != 0).count() == 1 && c.iter().all(|&v| v == 0 || v == 1)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Builds the root system of `g` at the vector `x`: diagonalize ad(x) over
/// the algebra's field (refusing with the obstruction when impossible),
/// order the eigenbasis with the nilradical first and ker ad(x) last, and
/// read one equation per nonzero structure constant inside the nilradical
/// block.
pub fn root_system(g: &LieAlgebra, x: &[Scalar]) -> Result<RootSystem, RootsError> {
    let n = g.dim();
    let field = g.field();
    let ad = g.ad(x)?;
    let mp = ad.minpoly().expect("ad is square");
    let fr = mp.roots_in_field(field).map_err(WeightsError::Scalars)?;
    if !fr.splits() {
        return Err(RootsError::NonSplit { factor: fr.remainder });
    }
    if let Some((r, _)) = fr.roots.iter().find(|(_, m)| *m > 1) {
        return Err(RootsError::Defective {
            eigenvalue: r.clone(),
        });
    }

    let nil = weights::nilradical(g)?;
    let zero = Scalar::zero(field);
    // Nonzero eigenvalues in canonical order, zero last.
    let mut lambdas: Vec<Scalar> = fr.roots.iter().map(|(r, _)| r.clone()).collect();
    lambdas.retain(|l| !l.is_zero());
    if fr.roots.iter().any(|(r, _)| r.is_zero()) {
        lambdas.push(zero.clone());
    }

    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    let mut eigenvalues: Vec<Scalar> = Vec::with_capacity(n);
    let mut torus_part: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for l in &lambdas {
        let shifted = ad.sub(&ExactMatrix::identity(n, field).scale(l));
        let (_, eigenspace) = shifted.rank_and_nullspace();
        let nil_part = eigenspace.intersect(&nil);
        for row in nil_part.basis_rows() {
            columns.push(row.to_vec());
            eigenvalues.push(l.clone());
        }
        // Eigenvectors transverse to the nilradical (torus directions) are
        // appended after all nilradical coordinates.
        if nil_part.dim() < eigenspace.dim() {
            let mut span = nil_part.clone();
            for row in eigenspace.basis_rows() {
                if span.contains(row) {
                    continue;
                }
                torus_part.push((row.to_vec(), l.clone()));
                span = span.sum(&Subspace::from_spanning(n, vec![row.to_vec()]));
            }
        }
    }
    let nil_dim = columns.len();
    assert_eq!(nil_dim, nil.dim(), "ad(X) must restrict to the nilradical");
    for (v, l) in torus_part {
        columns.push(v);
        eigenvalues.push(l);
    }
    assert_eq!(columns.len(), n, "eigenbasis must fill the space");

    let eigenbasis = ExactMatrix::from_fn(n, n, |r, c| columns[c][r].clone());
    let transported = g.base_change(&eigenbasis)?;

    let mut merged: BTreeMap<RootEquation, Vec<EquationSource>> = BTreeMap::new();
    for ((a, b), terms) in transported.table() {
        if *a >= nil_dim || *b >= nil_dim {
            continue;
        }
        for (coeff, k) in terms {
            assert!(
                *k < nil_dim,
                "brackets of nilradical eigenvectors stay in the nilradical"
            );
            let eq = RootEquation { i: *a, j: *b, k: *k };
            merged.entry(eq).or_default().push(EquationSource {
                i: *a,
                j: *b,
                k: *k,
                coeff: coeff.clone(),
            });
        }
    }
    let mut equations = Vec::with_capacity(merged.len());
    let mut provenance = Vec::with_capacity(merged.len());
    for (eq, sources) in merged {
        equations.push(eq);
        provenance.push(sources);
    }
    Ok(RootSystem {
        num_vars: n.saturating_sub(1),
        nil_dim,
        equations,
        provenance,
        eigenbasis,
        eigenvalues,
    })
}

impl RootSystem {
    /// Integer coefficient matrix of the equations over the nilradical
    /// variables; coefficients merge when indices coincide.
    pub fn coefficient_matrix(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.equations.len(), self.nil_dim, Field::Q);
        for (r, eq) in self.equations.iter().enumerate() {
            let bump = |m: &mut ExactMatrix, c: usize, delta: i64| {
                let cur = m.get(r, c).clone();
                m.set(r, c, cur + Scalar::from_int(delta));
            };
            bump(&mut m, eq.i, 1);
            bump(&mut m, eq.j, 1);
            bump(&mut m, eq.k, -1);
        }
        m
    }
}

/// The necessary rank criterion: a rigid law must satisfy
/// rank(S) = nil_dim - 1 at every regular vector. Failure refutes that
/// necessary condition; it does not by itself certify anything else.
pub fn rank_test(system: &RootSystem, nil_dim: usize) -> RankTest {
    let rank = system.coefficient_matrix().rank();
    let expected = nil_dim.saturating_sub(1);
    RankTest {
        rank,
        expected,
        pass: rank == expected,
    }
}

/// Basis of the rational solution space of the system, cleared to coprime
/// integer vectors with positive leading entry.
pub fn integer_solution_basis(system: &RootSystem) -> Vec<Vec<BigInt>> {
    let m = system.coefficient_matrix();
    let (_, ns) = m.rank_and_nullspace();
    ns.basis_rows()
        .map(|row| {
            let mut lcm = BigInt::one();
            for v in row {
                lcm = lcm.lcm(v.re().denom());
            }
            let mut ints: Vec<BigInt> = row
                .iter()
                .map(|v| v.re().numer() * (&lcm / v.re().denom()))
                .collect();
            let mut g = BigInt::zero();
            for v in &ints {
                g = g.gcd(v);
            }
            if !g.is_zero() && !g.is_one() {
                for v in &mut ints {
                    *v /= &g;
                }
            }
            if ints.iter().find(|v| !v.is_zero()).is_some_and(Signed::is_negative) {
                for v in &mut ints {
                    *v = -v.clone();
                }
            }
            ints
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn int_vec(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn g2hat_system_matches_expected_equations() {
        let g = catalog::catalog_get("g2hat_r8_22_normal").unwrap().algebra;
        let x7 = g.basis_vector(6);
        let rs = root_system(&g, &x7).unwrap();
        assert_eq!(rs.nil_dim, 6);
        assert_eq!(rs.num_vars, 7);
        let expected = [
            RootEquation { i: 0, j: 1, k: 2 },
            RootEquation { i: 0, j: 2, k: 3 },
            RootEquation { i: 0, j: 4, k: 5 },
            RootEquation { i: 1, j: 2, k: 4 },
            RootEquation { i: 1, j: 3, k: 5 },
        ];
        assert_eq!(rs.equations, expected);
        let test = rank_test(&rs, rs.nil_dim);
        assert!(test.pass);
        assert_eq!(test.rank, 5);
        let basis = integer_solution_basis(&rs);
        assert_eq!(basis, vec![int_vec(&[1, 2, 3, 4, 5, 6])]);
    }

    #[test]
    fn eigenvalue_assignment_solves_the_system() {
        let g = catalog::catalog_get("g2hat_r8_22_normal").unwrap().algebra;
        let rs = root_system(&g, &g.basis_vector(6)).unwrap();
        for eq in &rs.equations {
            let lhs = &rs.eigenvalues[eq.i] + &rs.eigenvalues[eq.j];
            assert_eq!(lhs, rs.eigenvalues[eq.k]);
        }
    }

    #[test]
    fn g1hat_x8_is_refused_over_q() {
        let g = catalog::catalog_get("g1hat_r8_22_2").unwrap().algebra;
        match root_system(&g, &g.basis_vector(7)) {
            Err(RootsError::NonSplit { factor }) => {
                assert_eq!(factor, Polynomial::from_int_coeffs(&[1, 0, 1]));
            }
            other => panic!("expected refusal naming T^2+1, got {other:?}"),
        }
    }

    #[test]
    fn g1hat_x7_system_has_corank_one() {
        let g = catalog::catalog_get("g1hat_r8_22_2").unwrap().algebra;
        let rs = root_system(&g, &g.basis_vector(6)).unwrap();
        assert_eq!(rs.nil_dim, 6);
        let t = rank_test(&rs, rs.nil_dim);
        assert!(t.pass, "rank {} vs expected {}", t.rank, t.expected);
        assert_eq!(integer_solution_basis(&rs).len(), 1);
    }

    #[test]
    fn regular_vector_of_g2hat_has_minimal_kernel() {
        let g = catalog::catalog_get("g2hat_r8_22_normal").unwrap().algebra;
        let torus = vec![g.basis_vector(6), g.basis_vector(7)];
        let x = regular_vector(&g, &torus, 3).unwrap();
        let ad = g.ad(&x).unwrap();
        assert_eq!(g.dim() - ad.rank(), 2);
        // X7 itself attains the minimum and comes first in search order.
        assert_eq!(x, g.basis_vector(6));
    }

    #[test]
    fn empty_torus_is_an_error() {
        let g = catalog::catalog_get("g2hat_r8_22_normal").unwrap().algebra;
        assert!(matches!(
            regular_vector(&g, &[], 3),
            Err(RootsError::EmptyTorus)
        ));
    }

    #[test]
    fn heisenberg_with_diagonal_torus() {
        // Heisenberg plus a grading element: single equation x1+x2=x3.
        let mut g = LieAlgebra::new(4, Field::Q);
        g.add_bracket(0, 1, &[(Scalar::from_int(1), 2)]).unwrap();
        g.add_bracket(3, 0, &[(Scalar::from_int(1), 0)]).unwrap();
        g.add_bracket(3, 1, &[(Scalar::from_int(1), 1)]).unwrap();
        g.add_bracket(3, 2, &[(Scalar::from_int(2), 2)]).unwrap();
        assert!(g.validate().is_empty());
        let rs = root_system(&g, &g.basis_vector(3)).unwrap();
        assert_eq!(rs.nil_dim, 3);
        assert_eq!(rs.equations, vec![RootEquation { i: 0, j: 1, k: 2 }]);
        let t = rank_test(&rs, rs.nil_dim);
        assert_eq!((t.rank, t.expected, t.pass), (1, 2, false));
    }

    #[test]
    fn empty_system_has_standard_basis_solutions() {
        let g = LieAlgebra::new(1, Field::Q);
        // Degenerate: abelian of dimension 1, regular vector is the basis
        // vector, no equations.
        let rs = root_system(&g, &g.basis_vector(0)).unwrap();
        assert_eq!(rs.equations.len(), 0);
        let basis = integer_solution_basis(&rs);
        assert_eq!(basis.len(), rs.nil_dim);
    }
}
