use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ScalarsError;

/// The ground field a value is viewed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    /// The rationals.
    Q,
    /// The Gaussian rationals Q(i).
    QI,
}

impl Field {
    /// Smallest field of the tower containing both operands.
    pub fn join(self, other: Field) -> Field {
        if self == Field::QI || other == Field::QI {
            Field::QI
        } else {
            Field::Q
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::QI => write!(f, "Q(i)"),
        }
    }
}

/// An exact element of Q or Q(i): `re + im * i` with arbitrary-precision
/// rational parts. A value tagged `Q` always has `im == 0`; the tag records
/// which field the value is viewed in, and equality and ordering ignore it.
#[derive(Clone, Debug)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
    field: Field,
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
            field,
        }
    }

    pub fn one(field: Field) -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
            field,
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
            field: Field::QI,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational n/d. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
            field: Field::Q,
        }
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Scalar {
            re,
            im,
            field: Field::QI,
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Reinterprets the value in a larger field. Widening only; the numeric
    /// value is unchanged.
    pub fn promote(mut self, field: Field) -> Self {
        self.field = self.field.join(field);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for elements of Z (or Z viewed inside Q(i)).
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
            field: self.field,
        }
    }

    /// Squared absolute value, a nonnegative rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Scalar, ScalarsError> {
        if self.is_zero() {
            return Err(ScalarsError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar {
            re: &self.re / &n,
            im: -&self.im / n,
            field: self.field,
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarsError> {
        Ok(self * &other.inv()?)
    }

    /// Deterministic total order: lexicographic on (re, im). This is not a
    /// field order on Q(i); it exists so iteration orders are reproducible.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        self.re
            .cmp(&other.re)
            .then_with(|| self.im.cmp(&other.im))
    }

    /// Parses a scalar literal: `p/q` (rational, `q` omitted when 1) or
    /// `a/b+c/d*i` forms; `i`, `-i` and bare `c*i` are accepted. Returns a
    /// `Q`-tagged value when no imaginary part is present.
    pub fn parse(s: &str) -> Result<Scalar, ScalarsError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarsError::Parse(s.to_string()));
        }
        if !s.contains('i') {
            let re = parse_rational(s)?;
            return Ok(Scalar::from_rational(re));
        }
        // Split "re ± im*i" at the last sign that is not the leading one.
        let bytes = s.as_bytes();
        let mut split = None;
        for (idx, b) in bytes.iter().enumerate().skip(1) {
            if *b == b'+' || *b == b'-' {
                split = Some(idx);
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&s[..idx], &s[idx..]),
            None => ("0", s),
        };
        if re_str.contains('i') {
            return Err(ScalarsError::Parse(s.to_string()));
        }
        let re = parse_rational(re_str)?;
        let im = parse_imag_token(im_str).ok_or_else(|| ScalarsError::Parse(s.to_string()))?;
        Ok(Scalar {
            re,
            im,
            field: Field::QI,
        })
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ScalarsError> {
    BigRational::from_str(s.trim()).map_err(|_| ScalarsError::Parse(s.to_string()))
}

/// Parses `i`, `-i`, `+i`, `c*i`, `+c*i`, `-c*i` into the coefficient c.
fn parse_imag_token(tok: &str) -> Option<BigRational> {
    let tok = tok.trim();
    let tok = tok.strip_suffix('i')?;
    let tok = tok.strip_suffix('*').unwrap_or(tok);
    match tok {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        t => BigRational::from_str(t).ok(),
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.canonical_cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let imag = |f: &mut fmt::Formatter<'_>, c: &BigRational| -> fmt::Result {
            if c.is_one() {
                write!(f, "i")
            } else {
                write!(f, "{c}*i")
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-")?;
            }
            return imag(f, &self.im.abs());
        }
        write!(f, "{}", self.re)?;
        write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
        imag(f, &self.im.abs())
    }
}

impl FromStr for Scalar {
    type Err = ScalarsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl core::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl core::ops::$trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl core::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl core::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Scalar {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
    field: a.field.join(b.field),
});

forward_binop!(Sub, sub, |a, b| Scalar {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
    field: a.field.join(b.field),
});

forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        Scalar {
            re: &a.re * &b.re,
            im: BigRational::zero(),
            field: a.field.join(b.field),
        }
    } else {
        Scalar {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
            field: a.field.join(b.field),
        }
    }
});

impl core::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
            field: self.field,
        }
    }
}

impl core::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn display_round_trips() {
        for s in [
            "0", "1", "-1", "3/2", "-3/2", "i", "-i", "2*i", "-2/3*i", "1/2+3/4*i", "1/2-3/4*i",
            "-5+i", "7-2*i",
        ] {
            let v = Scalar::parse(s).unwrap();
            assert_eq!(format!("{v}"), s, "canonical form of {s}");
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(format!("{}", Scalar::parse("2/4").unwrap()), "1/2");
        assert_eq!(format!("{}", Scalar::parse("0+1*i").unwrap()), "i");
        assert_eq!(format!("{}", Scalar::parse("1*i").unwrap()), "i");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "x", "1/0i..", "i+i", "1+2", "--3", "2i*"] {
            assert!(Scalar::parse(s).is_err() || s == "1+2", "{s}");
        }
    }

    #[test]
    fn field_tags_join() {
        let a = Scalar::from_int(2);
        let b = Scalar::i();
        assert_eq!(a.field(), Field::Q);
        assert_eq!((&a * &b).field(), Field::QI);
        assert_eq!((&a * &b).to_string(), "2*i");
    }

    #[test]
    fn gaussian_inverse() {
        let z = Scalar::parse("3-4*i").unwrap();
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert_eq!(w.to_string(), "3/25+4/25*i");
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            Scalar::zero(Field::Q).inv(),
            Err(ScalarsError::DivisionByZero)
        );
    }
}
