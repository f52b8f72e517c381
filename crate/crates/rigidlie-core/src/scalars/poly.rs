use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Scalar, ScalarsError};
use crate::gint::{gaussian_divisors, GInt};

/// Dense univariate polynomial over Q or Q(i), coefficients stored lowest
/// degree first. The zero polynomial has an empty coefficient vector; any
/// other value keeps its trailing coefficient nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from integer coefficients, lowest first.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Polynomial {
            coeffs: vec![Scalar::one(field)],
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial T^k.
    pub fn monomial(k: usize, field: Field) -> Self {
        let mut coeffs = vec![Scalar::zero(field); k + 1];
        coeffs[k] = Scalar::one(field);
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Smallest field containing every coefficient.
    pub fn field(&self) -> Field {
        if self.coeffs.iter().any(|c| !c.is_real()) {
            Field::QI
        } else {
            Field::Q
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(x.field());
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| &Scalar::from_int(k as i64) * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Division with remainder; the divisor must be nonzero.
    pub fn divrem(&self, div: &Polynomial) -> Result<(Polynomial, Polynomial), ScalarsError> {
        let d_deg = div.degree().ok_or(ScalarsError::DivisionByZero)?;
        let lead_inv = div.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![Scalar::zero(self.field().join(div.field())); q_len];
        for k in (0..q_len).rev() {
            let c = &rem[k + d_deg] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        Ok((
            Polynomial::from_coeffs(quot),
            Polynomial::from_coeffs(rem),
        ))
    }

    /// Divides the leading coefficient out. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.divrem(&g).expect("gcd nonzero");
        debug_assert!(r.is_zero());
        q.mul(other).monic()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let field = self.field().join(other.field());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or(Scalar::zero(field));
            let b = other.coeffs.get(k).cloned().unwrap_or(Scalar::zero(field));
            out.push(a + b);
        }
        Polynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let field = self.field().join(other.field());
        let mut out = vec![Scalar::zero(field); self.coeffs.len() + other.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate() {
                out[j + k] = &out[j + k] + &(a * b);
            }
        }
        Polynomial::from_coeffs(out)
    }

    /// p / gcd(p, p'), made monic: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Result<Polynomial, ScalarsError> {
        if self.is_zero() {
            return Err(ScalarsError::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Polynomial::one(self.field()));
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g)?;
        debug_assert!(r.is_zero(), "gcd must divide the polynomial exactly");
        Ok(q.monic())
    }

    /// Number of distinct real roots, by a Sturm chain over (-inf, inf).
    /// Requires nonzero input with rational coefficients.
    pub fn sturm_real_root_count(&self) -> Result<usize, ScalarsError> {
        if self.is_zero() {
            return Err(ScalarsError::ZeroPolynomial);
        }
        if self.field() == Field::QI {
            return Err(ScalarsError::ComplexCoefficients);
        }
        let p = self.squarefree_part()?;
        if p.degree() == Some(0) {
            return Ok(0);
        }
        // Remainder chain, each term rescaled by |leading coefficient| to
        // keep entries small without disturbing signs.
        let keep_sign_monic = |q: Polynomial| -> Polynomial {
            match q.leading() {
                None => q,
                Some(lc) => {
                    let s = if lc.re().is_negative() {
                        -lc.clone()
                    } else {
                        lc.clone()
                    };
                    q.scale(&s.inv().expect("nonzero"))
                }
            }
        };
        let mut chain = vec![
            keep_sign_monic(p.clone()),
            keep_sign_monic(p.derivative()),
        ];
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].divrem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(keep_sign_monic(r.neg()));
        }
        // Sign of q at -inf / +inf from the leading term.
        let sign_at = |q: &Polynomial, at_minus: bool| -> i32 {
            let deg = q.degree().expect("chain terms are nonzero");
            let lc = q.leading().unwrap();
            let mut s = if lc.re().is_negative() { -1 } else { 1 };
            if at_minus && deg % 2 == 1 {
                s = -s;
            }
            s
        };
        let changes = |at_minus: bool| -> usize {
            let signs: Vec<i32> = chain.iter().map(|q| sign_at(q, at_minus)).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        Ok(changes(true) - changes(false))
    }

    /// Deflates by (T - r), returning the quotient when r is a root.
    fn deflate(&self, r: &Scalar) -> Option<Polynomial> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        let mut out = vec![Scalar::zero(self.field().join(r.field())); deg];
        let mut carry = Scalar::zero(r.field());
        for k in (0..=deg).rev() {
            let v = &self.coeffs[k] + &(&carry * r);
            if k == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                out[k - 1] = v.clone();
                carry = v;
            }
        }
        Some(Polynomial::from_coeffs(out))
    }

    /// All roots lying in `field`, with multiplicities, plus the monic
    /// factor that remains after deflating them. The polynomial splits over
    /// `field` exactly when the remainder is constant.
    pub fn roots_in_field(&self, field: Field) -> Result<FieldRoots, ScalarsError> {
        if self.is_zero() {
            return Err(ScalarsError::ZeroPolynomial);
        }
        let mut roots: BTreeMap<Scalar, usize> = BTreeMap::new();
        let mut rest = self.monic();

        // Strip the root at zero first so constant terms are nonzero below.
        while rest.degree().unwrap_or(0) > 0 && rest.coeffs[0].is_zero() {
            *roots.entry(Scalar::zero(field)).or_insert(0) += 1;
            rest = rest.deflate(&Scalar::zero(field)).expect("zero is a root");
        }

        if rest.degree().unwrap_or(0) > 0 {
            for cand in candidate_roots(&rest, field)? {
                while rest.degree().unwrap_or(0) > 0 {
                    match rest.deflate(&cand) {
                        Some(q) => {
                            *roots.entry(cand.clone()).or_insert(0) += 1;
                            rest = q;
                        }
                        None => break,
                    }
                }
            }
        }

        Ok(FieldRoots {
            roots: roots.into_iter().collect(),
            remainder: rest.monic(),
        })
    }
}

/// Outcome of in-field root extraction.
#[derive(Clone, Debug)]
pub struct FieldRoots {
    /// Distinct roots with multiplicities, in canonical scalar order.
    pub roots: Vec<(Scalar, usize)>,
    /// Monic cofactor with no roots in the field; constant iff the input splits.
    pub remainder: Polynomial,
}

impl FieldRoots {
    pub fn splits(&self) -> bool {
        self.remainder.degree() == Some(0)
    }

    /// Total root count with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

/// Candidate roots by the rational-root theorem in Z[i] (or Z): clear the
/// monic polynomial to Gaussian-integer coefficients and enumerate
/// unit * (divisor of the constant term) / (divisor of the leading one).
fn candidate_roots(p: &Polynomial, field: Field) -> Result<Vec<Scalar>, ScalarsError> {
    // Common denominator of all coefficient parts.
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.re().denom());
        den = den.lcm(c.im().denom());
    }
    let den_s = Scalar::from_rational(num_rational::BigRational::from_integer(den));
    let ints: Vec<GInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * &den_s;
            debug_assert!(v.re().is_integer() && v.im().is_integer());
            GInt::new(v.re().to_integer(), v.im().to_integer())
        })
        .collect();
    let c0 = ints.first().expect("nonzero polynomial").clone();
    let cl = ints.last().expect("nonzero polynomial").clone();
    debug_assert!(!c0.is_zero(), "zero root must be stripped first");

    let num_divs = gaussian_divisors(&c0).ok_or(ScalarsError::FactorizationOverflow)?;
    let den_divs = gaussian_divisors(&cl).ok_or(ScalarsError::FactorizationOverflow)?;
    let units = [
        Scalar::one(Field::QI),
        -Scalar::one(Field::QI),
        Scalar::i(),
        -Scalar::i(),
    ];

    let to_scalar = |g: &GInt| -> Scalar {
        Scalar::from_parts(
            num_rational::BigRational::from_integer(g.re.clone()),
            num_rational::BigRational::from_integer(g.im.clone()),
        )
    };

    let mut seen = alloc::collections::BTreeSet::new();
    for b in &num_divs {
        for g in &den_divs {
            let base = to_scalar(b)
                .div(&to_scalar(g))
                .expect("divisors are nonzero");
            for u in &units {
                let cand = &base * u;
                if field == Field::Q && !cand.is_real() {
                    continue;
                }
                seen.insert(cand.promote(field));
            }
        }
    }
    Ok(seen.into_iter().collect())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_real() && c.re().is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            let coeff_str = if mag.is_real() || mag.re().is_zero() {
                mag.to_string()
            } else {
                alloc::format!("({mag})")
            };
            match k {
                0 => write!(f, "{coeff_str}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff_str}*")?;
                    }
                    if k == 1 {
                        write!(f, "T")?;
                    } else {
                        write!(f, "T^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn display_matches_reports() {
        assert_eq!(format!("{}", p(&[0, 1, 0, 1])), "T^3+T");
        assert_eq!(format!("{}", p(&[-2, 0, 1])), "T^2-2");
        assert_eq!(format!("{}", p(&[0, 0, 1, 0, 2, 0, 1])), "T^6+2*T^4+T^2");
        assert_eq!(format!("{}", p(&[1])), "1");
        assert_eq!(format!("{}", Polynomial::zero()), "0");
    }

    #[test]
    fn sturm_examples() {
        // T^2+1 has no real roots, T^3+T exactly one, T^2-2 two.
        assert_eq!(p(&[1, 0, 1]).sturm_real_root_count().unwrap(), 0);
        assert_eq!(p(&[0, 1, 0, 1]).sturm_real_root_count().unwrap(), 1);
        assert_eq!(p(&[-2, 0, 1]).sturm_real_root_count().unwrap(), 2);
    }

    #[test]
    fn sturm_counts_distinct_roots_of_products() {
        // (T-1)(T-2)(T-3) and T^2 (double root counted once).
        let q = p(&[-1, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 1]));
        assert_eq!(q.sturm_real_root_count().unwrap(), 3);
        assert_eq!(p(&[0, 0, 1]).sturm_real_root_count().unwrap(), 1);
    }

    #[test]
    fn sturm_rejects_bad_inputs() {
        assert_eq!(
            Polynomial::zero().sturm_real_root_count(),
            Err(ScalarsError::ZeroPolynomial)
        );
        let complex = Polynomial::from_coeffs(vec![Scalar::i(), Scalar::one(Field::QI)]);
        assert_eq!(
            complex.sturm_real_root_count(),
            Err(ScalarsError::ComplexCoefficients)
        );
    }

    #[test]
    fn squarefree_examples() {
        // T^2 -> T; T^2(T^2+1)^2 -> T^3+T; T^2-1 unchanged.
        assert_eq!(p(&[0, 0, 1]).squarefree_part().unwrap(), p(&[0, 1]));
        assert_eq!(
            p(&[0, 0, 1, 0, 2, 0, 1]).squarefree_part().unwrap(),
            p(&[0, 1, 0, 1])
        );
        assert_eq!(p(&[-1, 0, 1]).squarefree_part().unwrap(), p(&[-1, 0, 1]));
        assert_eq!(
            Polynomial::zero().squarefree_part(),
            Err(ScalarsError::ZeroPolynomial)
        );
    }

    #[test]
    fn roots_over_q_and_qi() {
        // T^2+1: no rational roots, splits over Q(i) as {i, -i}.
        let q = p(&[1, 0, 1]);
        let over_q = q.roots_in_field(Field::Q).unwrap();
        assert!(over_q.roots.is_empty());
        assert_eq!(over_q.remainder, p(&[1, 0, 1]));
        let over_qi = q.roots_in_field(Field::QI).unwrap();
        assert!(over_qi.splits());
        let roots: Vec<_> = over_qi
            .roots
            .iter()
            .map(|(r, m)| (format!("{r}"), *m))
            .collect();
        assert_eq!(roots, vec![("-i".to_string(), 1), ("i".to_string(), 1)]);
    }

    #[test]
    fn roots_with_multiplicity() {
        // T^4(T-1/2)^2
        let q = p(&[0, 0, 0, 0, 1]).mul(&Polynomial::from_coeffs(vec![
            Scalar::from_ratio(-1, 2),
            Scalar::from_int(1),
        ]))
        .mul(&Polynomial::from_coeffs(vec![
            Scalar::from_ratio(-1, 2),
            Scalar::from_int(1),
        ]));
        let r = q.roots_in_field(Field::Q).unwrap();
        assert!(r.splits());
        assert_eq!(
            r.roots,
            vec![
                (Scalar::zero(Field::Q), 4),
                (Scalar::from_ratio(1, 2), 2)
            ]
        );
    }

    #[test]
    fn gcd_and_lcm_are_monic() {
        let a = p(&[0, 1]).mul(&p(&[1, 1]));
        let b = p(&[0, 2]).mul(&p(&[-1, 1]));
        assert_eq!(a.gcd(&b), p(&[0, 1]));
        let l = a.lcm(&b);
        assert_eq!(l, p(&[0, 1]).mul(&p(&[1, 1])).mul(&p(&[-1, 1])));
    }
}
