//! Exact arbitrary-precision rational arithmetic.
//!
//! Every coordinate and every comparison in this crate flows through
//! [`Rational`], so geometric predicates (collinearity, tangency, hull
//! turns) are decided without rounding error. Values are kept in canonical
//! form at all times: reduced to lowest terms with a positive denominator,
//! so equal values always have equal representations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Errors from parsing or arithmetic on [`Rational`] values.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    /// The token does not match `[-]digits`, `[-]digits.digits`, or
    /// `[-]digits/digits`.
    #[error("malformed rational token `{0}`")]
    MalformedToken(String),
    /// A zero denominator, either in a `p/q` token or in a division.
    #[error("division by zero")]
    DivisionByZero,
}

/// An exact signed rational number in canonical form.
///
/// Canonical means `gcd(|numerator|, denominator) = 1` and `denominator > 0`;
/// the invariant is re-established after every operation, so `==` compares
/// values and serialization is deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator`, reducing to canonical form.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self, NumericError> {
        if denominator.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn from_int(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numerator / denominator` from machine integers; panics if `denominator` is zero.
    pub fn from_ratio(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        ))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Sign as `-1`, `0`, or `+1`.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    /// Exact division; errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Nearest double, for plotting and reporting only; never used in a
    /// decision.
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            let n = self.0.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.0.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
}

/// Parses `[-]digits`, `[-]digits.digits`, or `[-]digits/digits`.
///
/// Decimal tokens are expanded exactly over a power of ten, so `0.1`
/// means one tenth, not the nearest double.
impl FromStr for Rational {
    type Err = NumericError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let malformed = || NumericError::MalformedToken(token.to_string());
        let (negative, body) = match token.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, token),
        };

        let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        let magnitude = if let Some((num, den)) = body.split_once('/') {
            if !all_digits(num) || !all_digits(den) {
                return Err(malformed());
            }
            let den: BigInt = den.parse().map_err(|_| malformed())?;
            if den.is_zero() {
                return Err(NumericError::DivisionByZero);
            }
            BigRational::new(num.parse().map_err(|_| malformed())?, den)
        } else if let Some((int_part, frac_part)) = body.split_once('.') {
            if !all_digits(int_part) || !all_digits(frac_part) {
                return Err(malformed());
            }
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let int_part: BigInt = int_part.parse().map_err(|_| malformed())?;
            let frac_part: BigInt = frac_part.parse().map_err(|_| malformed())?;
            BigRational::new(int_part * &scale + frac_part, scale)
        } else {
            if !all_digits(body) {
                return Err(malformed());
            }
            BigRational::from_integer(body.parse().map_err(|_| malformed())?)
        };

        Ok(Rational(if negative { -magnitude } else { magnitude }))
    }
}

/// Canonical serialization: `p/q`, or just `p` when the denominator is one.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

/// Panics on a zero divisor; use [`Rational::checked_div`] for the fallible form.
impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_exact_decimals() {
        assert_eq!(rat("0.5"), Rational::from_ratio(1, 2));
        assert_eq!(rat("0.1"), Rational::from_ratio(1, 10));
        assert_eq!(rat("-0.25"), Rational::from_ratio(-1, 4));
        assert_eq!(rat("3.000"), Rational::from_int(3));
    }

    #[test]
    fn parses_fractions_canonically() {
        assert_eq!(rat("2/6"), Rational::from_ratio(1, 3));
        assert_eq!(rat("-4/8"), Rational::from_ratio(-1, 2));
        assert_eq!(rat("2/6").to_string(), "1/3");
    }

    #[test]
    fn parses_integers() {
        assert_eq!(rat("-3"), Rational::from_int(-3));
        assert_eq!(rat("-3").to_string(), "-3");
        assert_eq!(rat("007"), Rational::from_int(7));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for bad in ["", "-", "1.", ".5", "1/", "/2", "+3", "1e3", "1/-2", "1.2.3", "a"] {
            assert!(
                matches!(bad.parse::<Rational>(), Err(NumericError::MalformedToken(_))),
                "token {bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn rejects_zero_denominator() {
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(NumericError::DivisionByZero)
        );
        assert_eq!(
            rat("1").checked_div(&Rational::zero()),
            Err(NumericError::DivisionByZero)
        );
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(&rat("1/2") + &rat("1/3"), rat("5/6"));
        assert_eq!(&rat("1/2") * &Rational::zero(), Rational::zero());
        assert_eq!(&rat("1/2") - &rat("1/3"), rat("1/6"));
        assert_eq!(&rat("5/6") / &rat("5/3"), rat("1/2"));
    }

    #[test]
    fn comparison_is_exact_beyond_double_precision() {
        // 0.7 and 0.700000000001 collapse to different doubles only barely;
        // the exact order must hold regardless of magnitude.
        assert_eq!(
            rat("7/10").cmp(&rat("700000000001/1000000000000")),
            Ordering::Less
        );
        let tiny = Rational::new(BigInt::from(1), BigInt::from(2).pow(200)).unwrap();
        assert!((&rat("1") - &tiny) < rat("1"));
    }

    #[test]
    fn results_stay_canonical() {
        let sum = &rat("1/6") + &rat("1/6");
        assert_eq!(sum.numerator(), &BigInt::from(1));
        assert_eq!(sum.denominator(), &BigInt::from(3));
        let neg = &rat("1/3") - &rat("2/3");
        assert!(neg.denominator().is_positive());
        assert_eq!(neg.to_string(), "-1/3");
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["0", "-3", "1/3", "-7/22", "355/113"] {
            let r = rat(s);
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
