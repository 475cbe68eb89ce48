//! The Bell polynomial family: bivariate, classical (exponential), and the
//! Bell numbers, with the slice/evaluation chain connecting them.
//!
//! ```bash
//! cargo run -p bellpoly --example bell_polynomials
//! ```

use bellpoly::families::{bell_bivariate, bell_classical, bell_number};
use bellpoly::Rational;

fn main() {
    println!("bivariate Bell polynomials B_n(X1, X2):");
    for n in 0..=4 {
        println!("  n={n}: {}", bell_bivariate(n));
    }

    // X1 = 0 slices off the pure exponential part.
    println!("\nclassical Bell polynomials B_n(X2) = B_n(0, X2):");
    for n in 0..=4 {
        let slice = bell_bivariate(n).eval_x1(&Rational::zero());
        let classical = bell_classical(n);
        assert_eq!(slice, classical);
        println!("  n={n}: {classical}");
    }

    // X2 = 1 evaluates down to the Bell numbers.
    print!("\nBell numbers B_n = B_n(1):");
    for n in 0..=10 {
        print!(" {}", bell_number(n));
    }
    println!();

    // The defining EGF identity in action: B_n(a + b, c) expands binomially
    // in the first argument.
    let a = Rational::from(2);
    let n = 5;
    let shifted = bell_bivariate(n).shift_x1(&a);
    println!("\nB_{n}(2 + X1, X2) = {shifted}");
}
