//! Euler-characteristic sums over odd primes, truncated at a chosen number
//! of elements.
//!
//! Over F_p a simple rank-r matroid has at most (p^r - 1)/(p - 1) elements
//! (the points of the projective space PG(r-1, p)). Once the truncation
//! reaches that bound the class sum is complete. The complete sum over
//! isomorphism classes need not equal the closed product
//! prod 1/(1 - p^i) when p > 2: the product counts distinct-column
//! Grassmannian points, which for odd p include configurations with
//! parallel (scalar-multiple) columns that simple matroids exclude.
//!
//! Run with: `cargo run --release --example odd_prime_chi [p] [r] [n_max]`
//! (defaults: p=3, r=2, n_max=4)

use matroid_euler::euler::{chi_closed, chi_p_partial, simple_rank_r_bound};
use matroid_euler::exact::rat_str;
use matroid_euler::gf::PrimeField;
use matroid_euler::DEFAULT_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let r: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let n_max: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let field = PrimeField::new(p)?;
    let bound = simple_rank_r_bound(p as u64, r);
    println!("simple rank-{r} matroids over F_{p} have at most {bound} elements\n");

    let report = chi_p_partial(field, r, n_max, DEFAULT_CAP)?;
    println!("{:>3}  {:>14}  {:>14}", "n", "sum 1/|Aut|", "term");
    for term in &report.terms {
        println!("{:>3}  {:>14}  {:>14}", term.n, rat_str(&term.count), rat_str(&term.term));
    }
    println!(
        "\nsum through n = {n_max}: {} ({})",
        rat_str(&report.total),
        if report.complete { "complete: bound reached" } else { "truncated" },
    );

    let closed = chi_closed(p as u64, r);
    println!("closed product prod 1/(1 - {p}^i): {}", rat_str(&closed));
    if report.complete && report.total != closed {
        println!(
            "the two differ for p = {p} > 2: the product also counts \
             distinct-column configurations with parallel columns",
        );
    }
    Ok(())
}
