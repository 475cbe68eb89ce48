//! The truncated Laurent series engine: arithmetic, inversion through a
//! zero of the denominator, exponentials, and EGF coefficient extraction.
//!
//! ```bash
//! cargo run -p bellpoly --example series_toolkit
//! ```

use bellpoly::{LaurentSeries, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    // Geometric series: 1/(1 - t).
    let one_minus_t = LaurentSeries::from_coeffs(0, vec![q("1"), q("-1")], 10);
    let geo = one_minus_t.inv().unwrap();
    println!("1/(1-t)      = {geo}");

    // Inverting a series with a zero at t = 0 drops the valuation below
    // zero; the order bookkeeping tracks exactly how far the result is
    // trustworthy.
    let expm1 = LaurentSeries::expm1(10);
    let inv = expm1.inv().unwrap();
    println!("1/(e^t - 1)  = {inv}");
    println!(
        "  valuation {} and order {} (two orders paid for the inversion)",
        inv.valuation().unwrap(),
        inv.order()
    );

    // Multiply back: the product is 1 on the whole guaranteed window.
    let back = expm1.mul(&inv);
    println!("  check (e^t - 1) * inverse = {back}");

    // The Bernoulli numbers fall out of t/(e^t - 1).
    let bern = LaurentSeries::monomial(1, 12).mul(&inv);
    print!("B_0..B_8     =");
    for n in 0..=8 {
        print!(" {}", bern.egf_coeff(n).unwrap());
    }
    println!();

    // exp demands valuation >= 1: a constant term would need e^c.
    let bad = LaurentSeries::from_coeffs(0, vec![q("1"), q("1")], 6);
    println!("exp(1 + t)   -> {}", bad.exp().unwrap_err());

    // The EGF of the Bell numbers: e^(e^t - 1).
    let bell = LaurentSeries::expm1(10).exp().unwrap();
    print!("Bell numbers =");
    for n in 0..=10 {
        print!(" {}", bell.egf_coeff(n).unwrap());
    }
    println!();

    // Asking beyond the guaranteed order is an error, not a silent zero.
    println!(
        "coefficient 11 of an order-10 series -> {}",
        bell.egf_coeff(11).unwrap_err()
    );
}
