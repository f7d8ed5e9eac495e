//! Gaussian rationals.
//!
//! A [`Scalar`] is `re + im·i` with both parts held as reduced
//! [`BigRational`]s, so equality is structural. The textual form accepted by
//! [`str::parse`] and produced by [`Display`](core::fmt::Display) is
//!
//! ```text
//! rational ::= "-"? digits ("/" nonzero-digits)?
//! complex  ::= rational | rational sign rational "i" | rational "i" | "i" | "-i"
//! ```
//!
//! Whitespace is ignored. Printing is canonical: lowest terms, zero parts
//! suppressed, a unit imaginary part written as `i` / `-i` only when the real
//! part is zero (so `1+1i`, never `1+i`).

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::gaussian(0, 1)
    }

    /// `re + im·i` with integer parts.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Self::gaussian(v, 0)
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from(&self.re * &rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Panics on division by zero, like the integer types.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.recip().expect("division by zero scalar");
        self * &inv
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write_rational(f, &self.re),
            (true, false) => {
                if self.im.is_one() {
                    f.write_str("i")
                } else if (-&self.im).is_one() {
                    f.write_str("-i")
                } else {
                    write_rational(f, &self.im)?;
                    f.write_str("i")
                }
            }
            (false, false) => {
                write_rational(f, &self.re)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                write_rational(f, &self.im.abs())?;
                f.write_str("i")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal `{literal}`: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: &'static str,
}

fn parse_rational(s: &str) -> Result<BigRational, &'static str> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return Err("expected digits");
    }
    let mut numer: BigInt = num.parse().map_err(|_| "expected digits")?;
    if neg {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| "expected digits")?,
        Some(_) => return Err("expected denominator digits"),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err("zero denominator");
    }
    Ok(BigRational::new(numer, denom))
}

/// Coefficient of `i`: empty means 1, `-` means -1.
fn parse_imag(s: &str) -> Result<BigRational, &'static str> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(s.strip_prefix('+').unwrap_or(s)),
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason| ParseScalarError {
            literal: s.to_string(),
            reason,
        };
        if compact.is_empty() {
            return Err(err("empty literal"));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return parse_rational(&compact).map(Scalar::from).map_err(err);
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k]).map_err(err)?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = parse_imag(im).map_err(err)?;
        Ok(Scalar { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(-1, -2));
        assert_eq!(Scalar::ratio(3, -6).to_string(), "-1/2");
        assert_eq!(Scalar::one() + Scalar::ratio(1, 2), Scalar::ratio(3, 2));
    }

    #[test]
    fn printing() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::gaussian(1, 1).to_string(), "1+1i");
        assert_eq!(Scalar::gaussian(-3, -2).to_string(), "-3-2i");
        let z = Scalar::new(Scalar::ratio(3, 2).re.clone(), Scalar::ratio(-1, 2).re.clone());
        assert_eq!(z.to_string(), "3/2-1/2i");
        assert_eq!(format!("{}", Scalar::gaussian(0, -7)), "-7i");
    }

    #[test]
    fn parsing() {
        assert_eq!(p("7"), Scalar::from(7));
        assert_eq!(p(" -3 / 6 "), Scalar::ratio(-1, 2));
        assert_eq!(p("i"), Scalar::i());
        assert_eq!(p("-i"), -Scalar::i());
        assert_eq!(p("2i"), Scalar::gaussian(0, 2));
        assert_eq!(p("-1/2i"), Scalar::new(BigRational::zero(), Scalar::ratio(-1, 2).re.clone()));
        assert_eq!(p("1+1i"), Scalar::gaussian(1, 1));
        assert_eq!(p("1 - 2i"), Scalar::gaussian(1, -2));
        assert_eq!(p("-1-i"), Scalar::gaussian(-1, -1));
        assert_eq!(p("1/2+3/4i").to_string(), "1/2+3/4i");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "1/0", "abc", "1/", "/2", "1+", "--1", "1+2", "i1", "1.5"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn field_ops() {
        let z = Scalar::gaussian(1, 2);
        let w = z.recip().unwrap();
        assert!((&z * &w).is_one());
        assert_eq!(w.to_string(), "1/5-2/5i");
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from(-1));
        assert!(Scalar::zero().recip().is_none());
    }

    proptest::proptest! {
        #[test]
        fn display_parse_round_trip(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let z = Scalar::new(Scalar::ratio(a, b).re.clone(), Scalar::ratio(c, d).re.clone());
            proptest::prop_assert_eq!(z.to_string().parse::<Scalar>().unwrap(), z);
        }
    }
}
