//! Combinatorial scalars: binomials, factorials, falling factorials and
//! Stirling numbers/polynomials of the second kind.
//!
//! All values are arbitrary-precision integers (or exact ring elements for
//! the falling factorial); nothing here is approximated or memoized across
//! calls, so every function is a pure value computation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::rational::Rational;
use crate::ring::Ring;

/// The binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!`.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// The falling factorial `(x)_k = x (x-1) (x-2) ... (x-k+1)` in any ring with
/// rational scalars; the empty product `(x)_0` is the ring identity.
pub fn falling_factorial<R: Ring>(x: &R, k: usize) -> R {
    let mut acc = R::one();
    for i in 0..k {
        let shifted = x.sub(&R::one().scale(&Rational::from(i as i64)));
        acc = acc.mul(&shifted);
    }
    acc
}

/// Triangular table of Stirling numbers of the second kind `S2(m, n)` for
/// `0 <= n <= m <= max_m`, filled by the bounded recurrence
/// `S2(m, n) = n·S2(m-1, n) + S2(m-1, n-1)` with `S2(0, 0) = 1`.
#[derive(Debug, Clone)]
pub struct Stirling2Table {
    rows: Vec<Vec<BigInt>>,
}

impl Stirling2Table {
    pub fn new(max_m: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_m + 1);
        rows.push(vec![BigInt::one()]);
        for m in 1..=max_m {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            for n in 0..=m {
                let stay = if n < m {
                    BigInt::from(n) * &prev[n]
                } else {
                    BigInt::zero()
                };
                let split = if n >= 1 {
                    prev[n - 1].clone()
                } else {
                    BigInt::zero()
                };
                row.push(stay + split);
            }
            rows.push(row);
        }
        Stirling2Table { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S2(m, n)`; zero when `n > m`.
    pub fn get(&self, m: usize, n: usize) -> BigInt {
        if n > m {
            BigInt::zero()
        } else {
            self.rows[m][n].clone()
        }
    }
}

/// The Stirling number of the second kind `S2(m, n)`.
pub fn stirling2(m: usize, n: usize) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    Stirling2Table::new(m).get(m, n)
}

/// The Stirling polynomial of the second kind
/// `S2(m, n; X1) = sum_j C(m, j) S2(j, n) X1^(m-j)`, the EGF-normalized
/// `t^m` coefficient of `(e^t - 1)^n / n! · e^(t·X1)`.
///
/// At `X1 = 0` only the `j = m` term survives and the value degenerates to
/// `S2(m, n)`.
pub fn stirling2_poly(m: usize, n: usize) -> BiPoly {
    let table = Stirling2Table::new(m);
    let mut out = BiPoly::zero();
    for j in n..=m {
        let c = binomial(m, j) * table.get(j, n);
        out.add_term((m - j) as u32, 0, Rational::from(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::LaurentSeries;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(4, 6), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..=64usize {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal fails at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(20), "2432902008176640000".parse().unwrap());
    }

    #[test]
    fn falling_factorial_rational() {
        let five = Rational::from(5);
        assert_eq!(falling_factorial(&five, 3), Rational::from(60));
        assert_eq!(falling_factorial(&five, 0), Rational::one());
        assert_eq!(falling_factorial(&Rational::from(-7), 0), Rational::one());
    }

    #[test]
    fn falling_factorial_poly() {
        // (X1)_2 = X1^2 - X1
        let expect = BiPoly::from_terms([((2, 0), Rational::one()), ((1, 0), Rational::from(-1))]);
        assert_eq!(falling_factorial(&BiPoly::x1(), 2), expect);
    }

    #[test]
    fn stirling2_recurrence_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for m in 0..=12 {
            assert_eq!(stirling2(m, m), BigInt::from(1), "diagonal at {m}");
        }
        assert_eq!(stirling2(3, 0), BigInt::from(0));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
    }

    // Independent oracle: S2(m, n) = m! [t^m] (e^t - 1)^n / n!.
    fn stirling2_via_series(m: usize, n: usize) -> BigInt {
        let order = m as i64;
        let expm1 = LaurentSeries::<Rational>::expm1(order);
        let num = expm1
            .pow(n as u32)
            .scale(&Rational::from(factorial(n)).recip().unwrap());
        let c = num.egf_coeff(order.min(m as i64)).unwrap();
        assert!(c.is_integer());
        c.numer().clone()
    }

    #[test]
    fn stirling2_matches_egf_oracle() {
        for m in 0..=9 {
            for n in 0..=m {
                assert_eq!(stirling2(m, n), stirling2_via_series(m, n), "({m},{n})");
            }
        }
    }

    // Independent oracle: S2(m, n; x1) = m! [t^m] (e^t - 1)^n / n! · e^(t x1),
    // computed with bivariate-polynomial series coefficients.
    fn stirling2_poly_via_series(m: usize, n: usize) -> BiPoly {
        let order = m as i64;
        let expm1 = LaurentSeries::<Rational>::expm1(order)
            .pow(n as u32)
            .scale(&Rational::from(factorial(n)).recip().unwrap())
            .lift();
        let e_x1t = LaurentSeries::from_coeffs(1, vec![BiPoly::x1()], order)
            .exp()
            .unwrap();
        expm1.mul(&e_x1t).egf_coeff(m as i64).unwrap()
    }

    #[test]
    fn stirling2_poly_matches_series_oracle() {
        for m in 0..=8 {
            for n in 0..=m {
                assert_eq!(
                    stirling2_poly(m, n),
                    stirling2_poly_via_series(m, n),
                    "({m},{n})"
                );
            }
        }
    }

    #[test]
    fn stirling2_poly_examples() {
        // S2(2, 1; X1) = 2 X1 + 1
        let expect = BiPoly::from_terms([((1, 0), Rational::from(2)), ((0, 0), Rational::one())]);
        assert_eq!(stirling2_poly(2, 1), expect);
        // S2(0, 0; X1) = 1
        assert_eq!(stirling2_poly(0, 0), BiPoly::one());
    }

    #[test]
    fn stirling2_poly_at_zero_is_stirling2() {
        for m in 0..=12 {
            for n in 0..=m {
                let at_zero = stirling2_poly(m, n).eval(&Rational::zero(), &Rational::zero());
                assert_eq!(at_zero, Rational::from(stirling2(m, n)), "({m},{n})");
            }
        }
    }

    #[test]
    fn stirling_falling_factorial_collapse() {
        // sum_n S2(m, n) (x)_n = x^m, symbolically in X1, for m <= 12.
        for m in 0..=12usize {
            let table = Stirling2Table::new(m);
            let mut lhs = BiPoly::zero();
            for n in 0..=m {
                let ff = falling_factorial(&BiPoly::x1(), n);
                lhs.scaled_add_assign(&ff, &Rational::from(table.get(m, n)));
            }
            let rhs = BiPoly::monomial(m as u32, 0, Rational::one());
            assert_eq!(lhs, rhs, "collapse fails at m={m}");
        }
    }
}
