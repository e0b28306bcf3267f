//! Run every identity suite and print one line per check.
//!
//! Each suite verifies an exact-rational identity from the theory:
//!
//! * prop22 — class weights n!/|Aut| sum to the labeled point count.
//! * thm31 — the Euler characteristic equals the closed product, and the
//!   telescoping step chi(q, r+1) = -chi(q, r)/(q^{r+1} - 1).
//! * lemma32 — the factorial tail sums collapse to a single closed term.
//! * groth — distinct-column point counts: brute force vs recursion.
//! * yk — stratification of point counts by the position of the last
//!   pivot column.
//! * beta — beta invariants of projective geometries and their product
//!   relation with chi.
//!
//! Run with: `cargo run --release --example verify_identities`

use matroid_euler::euler::suite_all;
use matroid_euler::exact::rat_str;
use matroid_euler::DEFAULT_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut all_ok = true;
    for suite in suite_all(DEFAULT_CAP)? {
        let passed = suite.checks.iter().filter(|c| c.ok()).count();
        println!("suite {}: {}/{} checks passed", suite.name, passed, suite.checks.len());
        for check in &suite.checks {
            if !check.ok() {
                println!("  FAIL {}: {} != {}", check.label, rat_str(&check.lhs), rat_str(&check.rhs));
                all_ok = false;
            }
        }
    }
    if all_ok {
        println!("\nall identities verified");
        Ok(())
    } else {
        Err("some identities failed".into())
    }
}
