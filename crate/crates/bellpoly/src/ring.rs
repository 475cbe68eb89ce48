//! The coefficient-ring abstraction shared by the series engine.
//!
//! Generating functions in this crate live over two rings: plain [`Rational`]
//! scalars for base factors, and bivariate polynomials for the full families.
//! [`Ring`] is the minimal interface both expose; series code is written once
//! against it.

use crate::rational::Rational;

/// A commutative ring with exact arithmetic and rational scalar action.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Scalar action of the rationals.
    fn scale(&self, k: &Rational) -> Self;

    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn scale(&self, k: &Rational) -> Self {
        self * k
    }

    fn try_inv(&self) -> Option<Self> {
        self.recip()
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}
