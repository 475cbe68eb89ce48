//! Stirling numbers and polynomials of the second kind, and the
//! falling-factorial identity that connects them to plain powers.
//!
//! ```bash
//! cargo run -p bellpoly --example stirling_numbers
//! ```

use bellpoly::combinatorics::{falling_factorial, stirling2_poly, Stirling2Table};
use bellpoly::{BiPoly, Rational};

fn main() {
    // The triangle S2(m, n) from the recurrence
    // S2(m, n) = n S2(m-1, n) + S2(m-1, n-1).
    let table = Stirling2Table::new(8);
    println!("S2(m, n) for m <= 8:");
    for m in 0..=8 {
        print!("  m={m}:");
        for n in 0..=m {
            print!(" {}", table.get(m, n));
        }
        println!();
    }

    // Stirling polynomials: S2(m, n; x1) interpolates between the numbers
    // (at x1 = 0) and the binomial-weighted rows.
    println!("\nStirling polynomials S2(m, 2; X1):");
    for m in 2..=5 {
        println!("  m={m}: {}", stirling2_poly(m, 2));
    }

    // sum_n S2(m, n) (x)_n = x^m: partition the falling-factorial basis
    // back into powers.
    println!("\nfalling-factorial collapse, m = 4:");
    let mut acc = BiPoly::zero();
    for n in 0..=4 {
        let ff = falling_factorial(&BiPoly::x1(), n);
        println!(
            "  S2(4,{n}) * (X1)_{n} = {}",
            ff.scale(&Rational::from(table.get(4, n)))
        );
        acc.scaled_add_assign(&ff, &Rational::from(table.get(4, n)));
    }
    println!("  sum = {acc}");
}
