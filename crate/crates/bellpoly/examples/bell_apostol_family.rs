//! The mixed Bell/Apostol-type family itself: tables over `(X1, X2)`,
//! numbers, the singular lambda = -1 boundary, and machine-readable output.
//!
//! ```bash
//! cargo run -p bellpoly --example bell_apostol_family
//! ```

use bellpoly::families::{bell_apostol_number, build_table, FamilyKind, FamilySpec};
use bellpoly::render::{render_table, OutputFormat};
use bellpoly::Rational;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    // The headline family at the Genocchi slot (eta = delta = 1).
    let spec = FamilySpec::new(FamilyKind::BellApostolType)
        .with_alpha(1)
        .with_lambda(q("1"))
        .with_eta(1)
        .with_delta(1);
    let table = build_table(&spec, 4).unwrap();
    print!("{}", render_table(&table, OutputFormat::Text));

    // lambda = -1 with delta >= 1: the denominator vanishes at t = 0 but the
    // t^delta numerator cancels it — this is the Bernoulli-type boundary and
    // it goes through the same valuation-aware inversion as everything else.
    let spec = FamilySpec::new(FamilyKind::BellApostolType)
        .with_alpha(1)
        .with_lambda(q("-1"))
        .with_eta(0)
        .with_delta(1);
    let table = build_table(&spec, 4).unwrap();
    println!();
    print!("{}", render_table(&table, OutputFormat::Text));

    // Same parameters with delta = 0 have an honest pole: no table exists.
    let singular = FamilySpec::new(FamilyKind::BellApostolType)
        .with_alpha(1)
        .with_lambda(q("-1"))
        .with_eta(0)
        .with_delta(0);
    println!(
        "\ndelta = 0 at lambda = -1: {}",
        build_table(&singular, 4).unwrap_err()
    );

    // Numbers: X1 = 0, X2 = 1.
    print!("\nmixed numbers at alpha=1, lambda=3, eta=1, delta=0:");
    for n in 0..=6 {
        print!(" {}", bell_apostol_number(n, 1, &q("3"), 1, 0).unwrap());
    }
    println!();

    // The same table as a deterministic JSON document (sorted keys,
    // graded-lex term order, rationals as "p/q" strings).
    let spec = FamilySpec::new(FamilyKind::BellApostolType)
        .with_alpha(2)
        .with_lambda(q("-1/2"))
        .with_eta(0)
        .with_delta(1);
    let table = build_table(&spec, 2).unwrap();
    println!("\n{}", render_table(&table, OutputFormat::Json));
}
