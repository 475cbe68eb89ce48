//! Truncated formal Laurent series over a pluggable coefficient ring.
//!
//! A [`LaurentSeries`] knows its coefficients `c_v, ..., c_N` for an exact
//! window: `v` is the valuation (tight: `c_v != 0` unless the series is zero
//! up to its order) and `N` is the truncation order. Coefficients above `N`
//! are *unknown*, not zero, and every operation propagates the guaranteed
//! order explicitly — the result's order is the minimum order to which the
//! inputs determine it. Silent truncation is the classic series bug; here the
//! bookkeeping is part of the value.
//!
//! Division by series of positive valuation is supported (the valuation of
//! the result goes negative), which is exactly what the Bernoulli-type
//! denominators need.
//!
//! Everything here is formal: an equality between two series means equality
//! of coefficients on the guaranteed window, and no analytic question (radius
//! of convergence, where a generating function converges as a function) is
//! ever asked or answered.

use std::fmt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::Ring;

/// A truncated Laurent series `sum_{k=v}^{N} c_k t^k` with ring coefficients.
///
/// Representation invariants:
/// - `coeffs[i]` is the coefficient of `t^(val + i)` and `coeffs` spans
///   exactly `val ..= order`;
/// - if any known coefficient is nonzero, `coeffs[0] != 0`;
/// - the zero-up-to-order series is stored with empty `coeffs` and
///   `val == order + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries<C: Ring> {
    val: i64,
    coeffs: Vec<C>,
    order: i64,
}

impl<C: Ring> LaurentSeries<C> {
    /// The series with every coefficient up to `order` known to be zero.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            val: order + 1,
            coeffs: Vec::new(),
            order,
        }
    }

    /// The constant series 1, known up to `order`.
    pub fn one(order: i64) -> Self {
        LaurentSeries::constant(C::one(), order)
    }

    pub fn constant(c: C, order: i64) -> Self {
        LaurentSeries::from_coeffs(0, vec![c], order)
    }

    /// The monomial `t^exp`, known up to `order`.
    pub fn monomial(exp: i64, order: i64) -> Self {
        LaurentSeries::from_coeffs(exp, vec![C::one()], order)
    }

    /// Builds a series from coefficients `c_val, c_val+1, ...`; coefficients
    /// past the end of `coeffs` and up to `order` are taken as known zeros,
    /// anything beyond `order` is discarded.
    pub fn from_coeffs(val: i64, mut coeffs: Vec<C>, order: i64) -> Self {
        let window = (order - val + 1).max(0) as usize;
        coeffs.truncate(window);
        coeffs.resize(window, C::zero());
        let mut s = LaurentSeries { val, coeffs, order };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.val += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.val = self.order + 1;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Truncation order `N`: coefficients of `t^k` are known exactly for all
    /// `k <= N`.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// The coefficient of `t^k`.
    ///
    /// Panics if `k` exceeds the truncation order: that coefficient was never
    /// computed and reading it would silently fabricate a zero.
    pub fn coeff(&self, k: i64) -> C {
        assert!(
            k <= self.order,
            "coefficient of t^{k} requested beyond truncation order {}",
            self.order
        );
        if k < self.val {
            C::zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    /// Restricts the guaranteed window to `new_order` (never extends it).
    pub fn truncate(&self, new_order: i64) -> Self {
        if new_order >= self.order {
            return self.clone();
        }
        LaurentSeries::from_coeffs(self.val, self.coeffs.clone(), new_order)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        if order < self.val && order < rhs.val {
            return LaurentSeries::zero(order);
        }
        let val = self.val.min(rhs.val);
        let mut coeffs = Vec::with_capacity((order - val + 1).max(0) as usize);
        for k in val..=order {
            let mut c = if k >= self.val && k <= self.order {
                self.coeff(k)
            } else {
                C::zero()
            };
            if k >= rhs.val && k <= rhs.order {
                c.add_assign(&rhs.coeff(k));
            }
            coeffs.push(c);
        }
        LaurentSeries::from_coeffs(val, coeffs, order)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
            order: self.order,
        }
    }

    /// Coefficient-wise rational scaling.
    pub fn scale(&self, k: &Rational) -> Self {
        let mut s = LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
            order: self.order,
        };
        s.normalize();
        s
    }

    /// Coefficient-wise multiplication by a fixed ring element.
    pub fn scale_coeff(&self, k: &C) -> Self {
        let mut s = LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
            order: self.order,
        };
        s.normalize();
        s
    }

    /// Exact truncated product. The result is guaranteed to
    /// `min(N_a + v_b, N_b + v_a)`: beyond that, unknown coefficients of one
    /// factor would contribute.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = (self.order + rhs.val).min(rhs.order + self.val);
        let start = self.val + rhs.val;
        if start > order {
            return LaurentSeries::zero(order);
        }
        let len = (order - start + 1) as usize;
        let mut coeffs = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i as i64 > order - start {
                break;
            }
            if a.is_zero() {
                continue;
            }
            let max_j = (order - start) as usize - i;
            for (j, b) in rhs.coeffs.iter().enumerate().take(max_j + 1) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j].add_assign(&a.mul(b));
            }
        }
        LaurentSeries::from_coeffs(start, coeffs, order)
    }

    /// Multiplicative inverse by the shifted geometric recursion on the unit
    /// part: if `s = t^v (u_0 + u_1 t + ...)` then
    /// `w_0 = u_0^{-1}`, `w_n = -u_0^{-1} sum_{i=1..n} u_i w_{n-i}`,
    /// and `s^{-1} = t^{-v} (w_0 + w_1 t + ...)`.
    ///
    /// The result is guaranteed to order `N - 2v`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let u0_inv = self.coeffs[0]
            .try_inv()
            .ok_or(Error::NonInvertibleCoefficient)?;
        let rel_order = (self.order - self.val) as usize;
        let mut w: Vec<C> = Vec::with_capacity(rel_order + 1);
        w.push(u0_inv.clone());
        for n in 1..=rel_order {
            let mut acc = C::zero();
            for i in 1..=n.min(self.coeffs.len() - 1) {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc.add_assign(&self.coeffs[i].mul(&w[n - i]));
            }
            w.push(acc.mul(&u0_inv).neg());
        }
        Ok(LaurentSeries::from_coeffs(
            -self.val,
            w,
            self.order - 2 * self.val,
        ))
    }

    /// Series exponential `sum_k s^k / k!`, computed through the differential
    /// recurrence `n y_n = sum_{k>=1} k s_k y_{n-k}`.
    ///
    /// Requires valuation >= 1 so that the sum is coefficient-finite; the
    /// constant term of the result is 1 and the order matches the input's.
    pub fn exp(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(LaurentSeries::one(self.order));
        }
        if self.val < 1 {
            return Err(Error::PositiveValuationRequired {
                valuation: self.val,
            });
        }
        let order = self.order;
        if order < 0 {
            return Ok(LaurentSeries::zero(order));
        }
        let mut y: Vec<C> = Vec::with_capacity(order as usize + 1);
        y.push(C::one());
        for n in 1..=order {
            let mut acc = C::zero();
            let k_hi = n.min(self.order);
            let mut k = self.val;
            while k <= k_hi {
                let s_k = self.coeff(k);
                if !s_k.is_zero() {
                    acc.add_assign(&s_k.mul(&y[(n - k) as usize]).scale(&Rational::from(k)));
                }
                k += 1;
            }
            y.push(acc.scale(&Rational::from(n).recip().expect("n >= 1")));
        }
        Ok(LaurentSeries::from_coeffs(0, y, order))
    }

    /// `s^exp` by square-and-multiply; `s^0` is 1 at the same order.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return LaurentSeries::one(self.order);
        }
        let mut base = self.clone();
        let mut acc: Option<LaurentSeries<C>> = None;
        let mut e = exp;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.expect("exp >= 1")
    }

    /// Formal derivative `d/dt`; the guaranteed order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs: Vec<C> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from(self.val + i as i64)))
            .collect();
        LaurentSeries::from_coeffs(self.val - 1, coeffs, self.order - 1)
    }

    /// The EGF-normalized coefficient `n! * c_n`.
    ///
    /// Fails with [`Error::NegativeValuation`] when the series has a pole
    /// (it is not a power series, so EGF coefficients are meaningless) and
    /// with [`Error::OrderExceeded`] when `n` lies beyond the guaranteed
    /// window.
    pub fn egf_coeff(&self, n: i64) -> Result<C> {
        assert!(n >= 0, "EGF coefficient index must be nonnegative");
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(Error::NegativeValuation { valuation: v });
            }
        }
        if n > self.order {
            return Err(Error::OrderExceeded {
                requested: n,
                order: self.order,
            });
        }
        let fact = Rational::from(crate::combinatorics::factorial(n as usize));
        Ok(self.coeff(n).scale(&fact))
    }

    /// Maps every coefficient into another ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentSeries<D> {
        let mut s = LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order,
        };
        s.normalize();
        s
    }

    /// True when all coefficients both series guarantee up to `order` agree.
    pub fn agrees_to(&self, rhs: &Self, order: i64) -> bool {
        assert!(
            order <= self.order && order <= rhs.order,
            "agreement order exceeds a guaranteed window"
        );
        let lo = self.val.min(rhs.val);
        (lo..=order).all(|k| self.coeff(k) == rhs.coeff(k))
    }
}

impl LaurentSeries<Rational> {
    /// `e^t` up to `order`.
    pub fn exp_t(order: i64) -> Self {
        LaurentSeries::monomial(1, order)
            .exp()
            .expect("t has valuation 1")
    }

    /// `e^t - 1` up to `order` (valuation 1).
    pub fn expm1(order: i64) -> Self {
        Self::exp_t(order).sub(&LaurentSeries::one(order))
    }

    /// Lifts scalar coefficients into constant bivariate polynomials.
    pub fn lift(&self) -> LaurentSeries<BiPoly> {
        self.map_coeffs(|c| BiPoly::constant(c.clone()))
    }
}

impl fmt::Display for LaurentSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for k in self.val..=self.order {
            if self.is_zero() {
                break;
            }
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if !wrote {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                let t = if k == 1 {
                    "t".to_owned()
                } else {
                    format!("t^{k}")
                };
                if mag.is_one() {
                    write!(f, "{t}")?;
                } else {
                    write!(f, "{mag}*{t}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::BiPoly;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn t(order: i64) -> LaurentSeries<Rational> {
        LaurentSeries::monomial(1, order)
    }

    #[test]
    fn monomial_product_valuations() {
        let tt = t(8).mul(&t(8));
        assert_eq!(tt.valuation(), Some(2));
        assert_eq!(tt.coeff(2), q("1"));
        assert_eq!(tt.order(), 9);
    }

    #[test]
    fn additive_identity() {
        let s = LaurentSeries::from_coeffs(0, vec![q("1"), q("-2"), q("1/3")], 6);
        assert_eq!(s.add(&LaurentSeries::zero(6)), s);
    }

    #[test]
    fn one_minus_t_squared() {
        let a = LaurentSeries::from_coeffs(0, vec![q("1"), q("1")], 8);
        let b = LaurentSeries::from_coeffs(0, vec![q("1"), q("-1")], 8);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0), q("1"));
        assert_eq!(p.coeff(1), q("0"));
        assert_eq!(p.coeff(2), q("-1"));
        for k in 3..=p.order() {
            assert_eq!(p.coeff(k), q("0"));
        }
    }

    #[test]
    fn geometric_inverse() {
        // 1/(1-t) = 1 + t + t^2 + ...
        let s = LaurentSeries::from_coeffs(0, vec![q("1"), q("-1")], 10);
        let inv = s.inv().unwrap();
        for k in 0..=10 {
            assert_eq!(inv.coeff(k), q("1"), "t^{k}");
        }
        assert!(s.mul(&inv).agrees_to(&LaurentSeries::one(10), 10));
    }

    #[test]
    fn inverse_of_t_has_negative_valuation() {
        let inv = t(5).inv().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert_eq!(inv.coeff(-1), q("1"));
        assert_eq!(inv.order(), 3);
    }

    #[test]
    fn inverse_of_expm1_is_bernoulli_over_t() {
        // 1/(e^t - 1) = t^-1 (1 - t/2 + t^2/12 - ...) = t^-1 sum B_n t^n / n!
        let s = LaurentSeries::expm1(12);
        let inv = s.inv().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert_eq!(inv.coeff(-1), q("1"));
        assert_eq!(inv.coeff(0), q("-1/2"));
        assert_eq!(inv.coeff(1), q("1/12"));
        assert_eq!(inv.coeff(2), q("0"));
        // the real oracle: multiply back and get 1 on the whole window
        let back = s.mul(&inv);
        assert!(back.agrees_to(&LaurentSeries::one(back.order()), back.order()));
    }

    #[test]
    fn inv_of_zero_is_zero_division() {
        let z = LaurentSeries::<Rational>::zero(4);
        assert_eq!(z.inv(), Err(Error::ZeroDivision));
    }

    #[test]
    fn inv_requires_invertible_leading_coeff() {
        let s = LaurentSeries::from_coeffs(0, vec![BiPoly::x1()], 4);
        assert_eq!(s.inv(), Err(Error::NonInvertibleCoefficient));
    }

    #[test]
    fn exp_of_zero() {
        let z = LaurentSeries::<Rational>::zero(7);
        assert_eq!(z.exp().unwrap(), LaurentSeries::one(7));
    }

    #[test]
    fn exp_of_t() {
        let e = t(9).exp().unwrap();
        for k in 0..=9 {
            let expect = Rational::from(crate::combinatorics::factorial(k as usize))
                .recip()
                .unwrap();
            assert_eq!(e.coeff(k), expect);
        }
    }

    #[test]
    fn exp_rejects_constant_term() {
        let s = LaurentSeries::from_coeffs(0, vec![q("1"), q("1")], 5);
        assert_eq!(
            s.exp(),
            Err(Error::PositiveValuationRequired { valuation: 0 })
        );
    }

    #[test]
    fn exp_of_bell_argument() {
        // exp(X2 (e^t - 1)): the t^2 coefficient is (X2 + X2^2)/2.
        let arg = LaurentSeries::expm1(6).lift().scale_coeff(&BiPoly::x2());
        let e = arg.exp().unwrap();
        let c2 = e.coeff(2);
        let expect = BiPoly::from_terms([((0, 1), q("1/2")), ((0, 2), q("1/2"))]);
        assert_eq!(c2, expect);
    }

    #[test]
    fn pow_examples() {
        let s = LaurentSeries::from_coeffs(0, vec![q("2"), q("-3")], 6);
        assert_eq!(s.pow(0), LaurentSeries::one(6));

        assert_eq!(t(9).pow(3).valuation(), Some(3));

        let one_plus_t = LaurentSeries::from_coeffs(0, vec![q("1"), q("1")], 6);
        let sq = one_plus_t.pow(2);
        assert_eq!(sq.coeff(0), q("1"));
        assert_eq!(sq.coeff(1), q("2"));
        assert_eq!(sq.coeff(2), q("1"));
    }

    #[test]
    fn pow_matches_iterated_mul() {
        let s = LaurentSeries::from_coeffs(1, vec![q("1"), q("-1/2"), q("1/3")], 9);
        let mut it = LaurentSeries::one(9);
        for e in 1..=5u32 {
            it = it.mul(&s);
            assert_eq!(s.pow(e), it, "exponent {e}");
        }
    }

    fn bell_numbers(n_max: usize) -> Vec<Rational> {
        // recurrence B_{n+1} = sum_k C(n,k) B_k
        let mut b = vec![Rational::one()];
        for n in 0..n_max {
            let mut next = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                next += &(&Rational::from(crate::combinatorics::binomial(n, k)) * bk);
            }
            b.push(next);
        }
        b
    }

    #[test]
    fn egf_coefficients() {
        let e = LaurentSeries::exp_t(8);
        for n in 0..=8 {
            assert_eq!(e.egf_coeff(n).unwrap(), q("1"));
        }

        // e^(e^t - 1) generates the Bell numbers; cross-checked against the
        // recurrence oracle.
        let bell = LaurentSeries::expm1(8).exp().unwrap();
        let oracle = bell_numbers(8);
        assert_eq!(bell.egf_coeff(4).unwrap(), q("15"));
        for n in 0..=8 {
            assert_eq!(bell.egf_coeff(n).unwrap(), oracle[n as usize], "n={n}");
        }

        assert_eq!(t(3).egf_coeff(1).unwrap(), q("1"));
    }

    #[test]
    fn egf_coeff_errors() {
        let pole = t(5).inv().unwrap();
        assert_eq!(
            pole.egf_coeff(0),
            Err(Error::NegativeValuation { valuation: -1 })
        );

        assert_eq!(
            t(5).egf_coeff(6),
            Err(Error::OrderExceeded {
                requested: 6,
                order: 5
            })
        );
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn coeff_beyond_order_panics() {
        let s = t(4);
        let _ = s.coeff(5);
    }

    #[test]
    fn truncate_zero_window() {
        let s = LaurentSeries::from_coeffs(2, vec![q("5")], 6);
        let cut = s.truncate(1);
        assert!(cut.is_zero());
        assert_eq!(cut.order(), 1);
    }

    #[test]
    fn derivative_of_exp_is_product_rule() {
        let s = LaurentSeries::from_coeffs(1, vec![q("1"), q("1/2"), q("-2")], 10);
        let e = s.exp().unwrap();
        let lhs = e.derivative();
        let rhs = s.derivative().mul(&e);
        assert_eq!(lhs, rhs);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Rational> {
            (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
        }

        fn series(min_val: i64) -> impl Strategy<Value = LaurentSeries<Rational>> {
            (
                min_val..=min_val + 2,
                proptest::collection::vec(rational(), 1..6),
            )
                .prop_map(|(val, coeffs)| {
                    let order = val + 7;
                    LaurentSeries::from_coeffs(val, coeffs, order)
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn mul_commutes(a in series(-2), b in series(-2)) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn mul_associates(a in series(-1), b in series(-1), c in series(-1)) {
                let l = a.mul(&b).mul(&c);
                let r = a.mul(&b.mul(&c));
                let order = l.order().min(r.order());
                prop_assert!(l.agrees_to(&r, order));
            }

            #[test]
            fn mul_distributes(a in series(0), b in series(0), c in series(0)) {
                let l = a.mul(&b.add(&c));
                let r = a.mul(&b).add(&a.mul(&c));
                let order = l.order().min(r.order());
                prop_assert!(l.agrees_to(&r, order));
            }

            #[test]
            fn inv_round_trip(mut a in series(0)) {
                // force a unit at valuation 0
                a = LaurentSeries::one(a.order()).add(&a.shift(1).truncate(a.order()));
                let inv = a.inv().unwrap();
                let back = inv.inv().unwrap();
                let order = back.order();
                prop_assert!(a.agrees_to(&back, order));
                let prod = a.mul(&inv);
                prop_assert!(prod.agrees_to(&LaurentSeries::one(prod.order()), prod.order()));
            }

            #[test]
            fn exp_is_homomorphism(a in series(1), b in series(1)) {
                let sum = a.add(&b);
                let l = sum.exp().unwrap();
                let r = a.exp().unwrap().mul(&b.exp().unwrap());
                let order = l.order().min(r.order());
                prop_assert!(l.agrees_to(&r, order));
            }

            #[test]
            fn exp_derivative_rule(a in series(1)) {
                let e = a.exp().unwrap();
                let lhs = e.derivative();
                let rhs = a.derivative().mul(&e);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
