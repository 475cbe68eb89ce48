//! Mechanical verification of the family's identities over a parameter
//! grid, including the two deliberately failing "as printed" forms that
//! document where the printed statements disagree with their proofs.
//!
//! ```bash
//! cargo run -p bellpoly --example verify_theorems
//! ```

use bellpoly::identities::{
    run_suite, verify_theorem, AlphaParam, Grid, GridPoint, Status, TheoremId,
};
use bellpoly::Rational;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() {
    // A compact grid: every identity in the suite, three lambdas including
    // the singular -1, both small exponent slots.
    let grid = Grid {
        alphas: vec![0, 1, 2],
        alpha_pairs: vec![(0, 0), (1, 1), (2, 1)],
        lambdas: vec![q("1"), q("-1/2"), q("-1")],
        etas: vec![0, 1],
        deltas: vec![0, 1],
    };
    let n_max = 8;
    let reports = run_suite(&TheoremId::MAIN_SUITE, &grid, n_max);

    let mut pass = 0;
    let mut skip = 0;
    for r in &reports {
        match r.status {
            Status::Pass => pass += 1,
            Status::Skip => skip += 1,
            Status::Fail => {
                println!("FAIL {} at {}", r.theorem, r.point);
                if let Some(f) = &r.first_failure {
                    println!("  n = {}\n  lhs = {}\n  rhs = {}", f.n, f.lhs, f.rhs);
                }
            }
        }
    }
    println!(
        "suite over {} checks: pass={pass} skip={skip} fail={}",
        reports.len(),
        reports.len() - pass - skip
    );

    // Singular parameter combinations are skipped, with the reason recorded.
    let singular = reports
        .iter()
        .find(|r| r.status == Status::Skip)
        .expect("grid contains lambda=-1, delta=0 points");
    println!(
        "\nexample skip: {} at {} ({})",
        singular.theorem,
        singular.point,
        singular.note.as_deref().unwrap_or("")
    );

    // The printed form of theorem 3.3 differs from its proof; the checker
    // sees the difference immediately.
    let printed = verify_theorem(
        TheoremId::Thm3_3Printed,
        &GridPoint {
            alpha: AlphaParam::Single(1),
            lambda: q("1"),
            eta: 1,
            delta: 0,
        },
        6,
    );
    println!("\nprinted 3.3 RHS: {:?}", printed.status);
    if let Some(f) = printed.first_failure {
        println!(
            "  first failure at n={}: lhs {} vs rhs {}",
            f.n, f.lhs, f.rhs
        );
    }

    // Same for the printed index of theorem 4.7.
    let printed = verify_theorem(
        TheoremId::Thm4_7Printed,
        &GridPoint {
            alpha: AlphaParam::Single(0),
            lambda: q("1"),
            eta: 0,
            delta: 0,
        },
        6,
    );
    println!("printed 4.7 index: {:?}", printed.status);
}
