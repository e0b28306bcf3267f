//! Counting Grassmannian points whose reduced row-echelon matrix has
//! distinct, nonzero columns — two independent ways.
//!
//! * brute:     iterate every point of Gr(r, n; F_q) and test the columns.
//! * recursive: an exact recursion on (r, n) that never materializes points.
//!
//! The counts |Gr^dc(r, n; q)| feed the Euler-characteristic sum
//! sum_n (-1)^n |Gr^dc(r, n; q)| / n!. Note that "distinct columns" is
//! weaker than simplicity when q > 2: over F_3 two distinct columns can
//! still be parallel, so |Gr^dc(2, 3; 3)| = 7 while only 4 of those points
//! realize the simple matroid U_{2,3}.
//!
//! Run with: `cargo run --release --example count_points [q] [r] [n_max]`
//! (defaults: q=2, r=3, n_max=8)

use matroid_euler::gf::PrimeField;
use matroid_euler::grassmann::{grdc_brute_count, grdc_count_table, grdc_recursive_count};
use matroid_euler::DEFAULT_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let r: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let n_max: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(8);

    let field = PrimeField::new(q as u32).ok();

    println!("{:>3} {:>3} {:>4}  {:>12}  {:>12}", "q", "r", "n", "recursive", "brute");
    for n in r as u64..=n_max {
        let rec = grdc_recursive_count(r, n, q);
        let brute = match field {
            Some(f) => match grdc_brute_count(f, r as usize, n as usize, DEFAULT_CAP) {
                Ok(c) => {
                    assert_eq!(c, rec, "count mismatch at n={n}");
                    c.to_string()
                }
                Err(e) => format!("({e})"),
            },
            None => "(q not prime)".into(),
        };
        println!("{q:>3} {r:>3} {n:>4}  {rec:>12}  {brute:>12}");
    }

    // The same table in one call, as CSV.
    println!("\nCSV:\n{}", grdc_count_table(r, q, n_max).to_csv());
    Ok(())
}
