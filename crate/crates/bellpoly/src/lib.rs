//! Exact construction of Bell, Apostol-type, and mixed Bell/Apostol
//! polynomial families from their exponential generating functions, plus
//! mechanical verification of the summation, correlation and derivative
//! identities that connect them.
//!
//! Everything is computed over arbitrary-precision rationals; every equality
//! this crate checks is an exact polynomial equality, never a numeric
//! comparison with a tolerance.
//!
//! The crate is organized bottom-up:
//!
//! - [`rational`] / [`combinatorics`]: exact scalars — rationals, binomials,
//!   factorials, Stirling numbers and polynomials of the second kind;
//! - [`bipoly`]: the sparse polynomial ring `ℚ[X1, X2]` every family lives in;
//! - [`series`]: truncated Laurent series over a pluggable coefficient ring,
//!   the engine behind every generating function;
//! - [`families`]: builders for the polynomial families themselves;
//! - [`identities`]: one verifier per identity, each comparing both sides as
//!   exact polynomials over a parameter grid;
//! - [`cli`]: the `bellpoly` command-line front end (`table`, `eval`,
//!   `verify`, `reduce`).
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability.

pub mod bipoly;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod families;
pub mod identities;
pub mod rational;
pub mod render;
pub mod ring;
pub mod series;

pub use bipoly::{BiPoly, Var};
pub use error::{Error, Result};
pub use rational::Rational;
pub use ring::Ring;
pub use series::LaurentSeries;

#[cfg(test)]
mod send_sync {
    // Every value type is immutable after construction and safe to share or
    // move across threads; pin that here so a future RefCell doesn't sneak in.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn value_types_are_send_and_sync() {
        assert_send_sync::<crate::Rational>();
        assert_send_sync::<crate::BiPoly>();
        assert_send_sync::<crate::LaurentSeries<crate::Rational>>();
        assert_send_sync::<crate::LaurentSeries<crate::BiPoly>>();
        assert_send_sync::<crate::families::FamilySpec>();
        assert_send_sync::<crate::families::PolyTable>();
        assert_send_sync::<crate::identities::VerifyReport>();
    }
}
