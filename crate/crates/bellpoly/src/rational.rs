//! Exact rational scalars.
//!
//! [`Rational`] wraps an arbitrary-precision `num_rational::BigRational` and
//! keeps it canonically reduced at all times: positive denominator,
//! `gcd(|numerator|, denominator) = 1`. Equality is therefore syntactic, which
//! is what makes exact polynomial comparison meaningful downstream.
//!
//! The text form is `p/q` with no whitespace; integers print without the
//! `/1`. This is the rendering used in golden files and JSON documents, so it
//! must stay byte-stable.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always stored in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `numer/denom` in lowest terms.
    ///
    /// Panics if `denom` is zero; a rational with zero denominator is not a
    /// value of this type.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let d = denom.into();
        assert!(!d.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(numer.into(), d))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// `self^exp` for a signed integer exponent; `0^0 = 1`.
    ///
    /// Returns `None` for a negative power of zero.
    pub fn pow(&self, exp: i64) -> Option<Self> {
        if exp == 0 {
            return Some(Rational::one());
        }
        if self.is_zero() && exp < 0 {
            return None;
        }
        let mag = self.0.pow(
            exp.unsigned_abs()
                .try_into()
                .expect("exponent magnitude fits u32 range"),
        );
        Some(if exp < 0 {
            Rational(mag.recip())
        } else {
            Rational(mag)
        })
    }

    /// Exact `2^eta` for any signed `eta`.
    pub fn two_pow(eta: i64) -> Self {
        Rational::from_int(2)
            .pow(eta)
            .expect("2^eta is always defined")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
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

/// Parses `p`, `-p`, or `p/q`. No whitespace, no decimal points.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_owned());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational::from_int(n))
            }
            Some((ns, ds)) => {
                let n = BigInt::from_str(ns).map_err(|_| bad())?;
                let d = BigInt::from_str(ds).map_err(|_| bad())?;
                if d.is_zero() || d.is_negative() || ds.starts_with('+') {
                    // Canonical input form only: positive plain denominator.
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational (expected `p` or `p/q`): {:?}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! binop {
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
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
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

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}
