//! Enumerate isomorphism classes of simple rank-r matroids on n elements
//! that are realizable over a prime field F_p.
//!
//! Over F_2 the enumeration walks GL_r(F_2)-orbits of spanning point sets in
//! the projective space PG(r-1, 2); over odd primes it scans Grassmannian
//! points and deduplicates by canonical form. Both report |Aut| and the
//! number of labeled representatives (n! / |Aut|).
//!
//! Run with: `cargo run --example enumerate_classes [r] [n] [p]`
//! (defaults: r=3, n=5, p=2)

use matroid_euler::gf::PrimeField;
use matroid_euler::matroid::{
    enumerate_binary_classes, enumerate_fp_classes, iso_classes_to_csv, iso_classes_to_json,
};
use matroid_euler::DEFAULT_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let r: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let p: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);

    let classes = if p == 2 {
        enumerate_binary_classes(r, n)?
    } else {
        enumerate_fp_classes(PrimeField::new(p)?, r, n, DEFAULT_CAP)?
    };

    println!("rank {r}, {n} elements, field F_{p}: {} class(es)\n", classes.len());
    for (i, class) in classes.iter().enumerate() {
        println!(
            "class {}: |Aut| = {}, labeled = {}, bases = {:?}",
            i + 1,
            class.aut_order,
            class.labeled_count,
            class.representative.bases_as_sets(),
        );
    }

    println!("\nCSV:\n{}", iso_classes_to_csv(&classes));
    println!("JSON:\n{}", iso_classes_to_json(&classes));
    Ok(())
}
