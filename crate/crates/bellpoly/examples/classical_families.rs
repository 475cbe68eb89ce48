//! Euler, Bernoulli and Genocchi polynomials — classical, order-alpha, and
//! Apostol-generalized — all as specializations of one unified base factor,
//! cross-checked against their directly built generating functions.
//!
//! ```bash
//! cargo run -p bellpoly --example classical_families
//! ```

use bellpoly::families::{
    apostol_bernoulli, apostol_bernoulli_direct, apostol_euler, apostol_genocchi,
    classical_order_poly, ClassicalKind,
};
use bellpoly::Rational;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    let one = Rational::one();

    println!("Euler polynomials E_n(X1):");
    for n in 0..=4 {
        println!("  n={n}: {}", apostol_euler(n, 1, &one).unwrap());
    }

    println!("\nBernoulli polynomials B_n(X1):");
    for n in 0..=4 {
        println!("  n={n}: {}", apostol_bernoulli(n, 1, &one).unwrap());
    }

    println!("\nGenocchi polynomials G_n(X1):");
    for n in 0..=4 {
        println!("  n={n}: {}", apostol_genocchi(n, 1, &one).unwrap());
    }

    // Higher order: the base factor raised to alpha.
    println!(
        "\nEuler of order 3, n = 2: {}",
        classical_order_poly(ClassicalKind::Euler, 2, 3).unwrap()
    );

    // Apostol generalization: a rational lambda twists the denominator.
    let lambda = q("-1/2");
    println!("\nApostol-Bernoulli at lambda = -1/2:");
    for n in 0..=3 {
        println!("  n={n}: {}", apostol_bernoulli(n, 1, &lambda).unwrap());
    }

    // Two independent routes to the same family: the unified-base reduction
    // (-1)^alpha F(x; -lambda; 0, 1) against the EGF (t/(lambda e^t - 1))^alpha
    // built from scratch.
    for n in 0..=8 {
        let via_reduction = apostol_bernoulli(n, 2, &lambda).unwrap();
        let direct = apostol_bernoulli_direct(n, 2, &lambda).unwrap();
        assert_eq!(via_reduction, direct);
    }
    println!("\nreduction route == direct EGF route for alpha=2, lambda=-1/2, n <= 8");
}
