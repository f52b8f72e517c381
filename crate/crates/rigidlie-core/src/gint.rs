//! Gaussian integers over `BigInt`, used by the fraction-free elimination
//! kernel and by divisor enumeration for root finding.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of Z[i]. Plain integers are the `im == 0` case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GInt { re, im }
    }

    pub fn from_int(re: BigInt) -> Self {
        GInt {
            re,
            im: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        GInt::from_int(BigInt::zero())
    }

    pub fn one() -> Self {
        GInt::from_int(BigInt::one())
    }

    pub fn i() -> Self {
        GInt::new(BigInt::zero(), BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GInt::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn neg(&self) -> Self {
        GInt::new(-self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        GInt::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GInt::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GInt::from_int(&self.re * &o.re);
        }
        GInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    /// Exact division in Z[i]. Panics if `d` does not divide `self`;
    /// callers rely on algebraic identities (Bareiss, divisor tests)
    /// to guarantee divisibility.
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero Gaussian integer");
        if self.is_zero() {
            return GInt::zero();
        }
        if self.im.is_zero() && d.im.is_zero() {
            let (q, r) = self.re.div_rem(&d.re);
            assert!(r.is_zero(), "non-exact integer division in elimination");
            return GInt::from_int(q);
        }
        let num = self.mul(&d.conj());
        let den = d.norm();
        let (qr, rr) = num.re.div_rem(&den);
        let (qi, ri) = num.im.div_rem(&den);
        assert!(
            rr.is_zero() && ri.is_zero(),
            "non-exact Gaussian division in elimination"
        );
        GInt::new(qr, qi)
    }

    /// True when `d` divides `self` in Z[i].
    pub fn divisible_by(&self, d: &Self) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        let num = self.mul(&d.conj());
        let den = d.norm();
        num.re.mod_floor(&den).is_zero() && num.im.mod_floor(&den).is_zero()
    }
}

/// All divisors of `z` up to multiplication by units, via factoring the
/// norm. Intended for the small constant/leading coefficients that occur
/// in minimal polynomials; returns `None` if the norm resists trial
/// division (never the case at the scales this crate targets).
pub(crate) fn gaussian_divisors(z: &GInt) -> Option<Vec<GInt>> {
    assert!(!z.is_zero());
    let mut primes: Vec<(GInt, u32)> = Vec::new();
    let mut rest = z.clone();

    let norm = z.norm();
    let rational_factors = factor_natural(norm)?;
    for (p, _) in rational_factors {
        let p_mod_4 = (&p % BigInt::from(4u32))
            .to_u32_digits()
            .1
            .first()
            .copied()
            .unwrap_or(0);
        if p == BigInt::from(2u32) {
            let pi = GInt::new(BigInt::one(), BigInt::one());
            let e = strip_factor(&mut rest, &pi);
            if e > 0 {
                primes.push((pi, e));
            }
        } else if p_mod_4 == 3 {
            let pi = GInt::from_int(p.clone());
            let e = strip_factor(&mut rest, &pi);
            if e > 0 {
                primes.push((pi, e));
            }
        } else {
            // p = a^2 + b^2 splits; find a representation by brute force.
            let (a, b) = sum_of_two_squares(&p)?;
            for pi in [GInt::new(a.clone(), b.clone()), GInt::new(a, -b)] {
                let e = strip_factor(&mut rest, &pi);
                if e > 0 {
                    primes.push((pi, e));
                }
            }
        }
    }

    let mut divisors = vec![GInt::one()];
    for (pi, e) in &primes {
        let mut extended = Vec::with_capacity(divisors.len() * (*e as usize + 1));
        for d in &divisors {
            let mut cur = d.clone();
            extended.push(cur.clone());
            for _ in 0..*e {
                cur = cur.mul(pi);
                extended.push(cur.clone());
            }
        }
        divisors = extended;
    }
    Some(divisors)
}

fn strip_factor(z: &mut GInt, pi: &GInt) -> u32 {
    let mut e = 0;
    while z.divisible_by(pi) {
        *z = z.exact_div(pi);
        e += 1;
    }
    e
}

/// Trial-division factorization of a nonnegative integer. Gives up (returns
/// `None`) past 10^7 candidate divisors, which bounds composite leftovers
/// by 10^14.
fn factor_natural(mut n: BigInt) -> Option<Vec<(BigInt, u32)>> {
    assert!(!n.is_negative());
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_zero() || n.is_one() {
        return Some(out);
    }
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e2 = 0;
    while n.is_even() {
        n /= 2;
        e2 += 1;
    }
    push(BigInt::from(2u32), e2);
    let mut d = BigInt::from(3u32);
    let limit = BigInt::from(10_000_000u64);
    while &d * &d <= n {
        if d > limit {
            return None;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&d);
            if r.is_zero() {
                n = q;
                e += 1;
            } else {
                break;
            }
        }
        push(d.clone(), e);
        d += 2;
    }
    if n > BigInt::one() {
        push(n, 1);
    }
    Some(out)
}

/// Writes a prime p = 1 (mod 4) as a^2 + b^2 by brute force.
fn sum_of_two_squares(p: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut a = BigInt::one();
    while &a * &a * 2 <= *p {
        let b2 = p - &a * &a;
        let b = b2.sqrt();
        if &b * &b == b2 {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GInt {
        GInt::new(BigInt::from(re), BigInt::from(im))
    }

    #[test]
    fn exact_division_round_trips() {
        let a = g(7, -3);
        let b = g(2, 5);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b), a);
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn divisors_of_two() {
        // 2 = -i (1+i)^2; divisors up to units: 1, (1+i), 2.
        let divs = gaussian_divisors(&g(2, 0)).unwrap();
        assert_eq!(divs.len(), 3);
        for d in &divs {
            assert!(g(2, 0).divisible_by(d));
        }
    }

    #[test]
    fn divisors_of_five() {
        // 5 = (2+i)(2-i): divisors 1, 2+i, 2-i, 5 up to units.
        let divs = gaussian_divisors(&g(5, 0)).unwrap();
        assert_eq!(divs.len(), 4);
    }
}
