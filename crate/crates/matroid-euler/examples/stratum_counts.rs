//! Counting the Grassmannian points that realize a fixed matroid.
//!
//! For a rank-r matroid M on n elements and a prime p, the realization
//! stratum is the set of points of Gr(r, n; F_p) whose reduced row-echelon
//! matrix has column matroid M. Over F_2 the echelon matrix is determined
//! by the matroid, so every realizable binary matroid has exactly one
//! point; over larger fields a stratum can carry many points.
//!
//! Run with: `cargo run --example stratum_counts`

use matroid_euler::gf::PrimeField;
use matroid_euler::matroid::{pg_matroid, stratum_count, Matroid};
use matroid_euler::DEFAULT_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u23 = Matroid::uniform(2, 3)?;
    println!("strata of U_{{2,3}} (rank 2, 3 elements):");
    for p in [2u32, 3, 5, 7] {
        let count = stratum_count(&u23, PrimeField::new(p)?, DEFAULT_CAP)?;
        println!("  over F_{p}: {count} point(s)");
    }
    println!("  (echelon form [I | v] with both entries of v nonzero: (p-1)^2 points)");

    let fano = pg_matroid(3)?;
    let f2 = PrimeField::new(2)?;
    println!("\nFano plane over F_2: {} point(s)", stratum_count(&fano, f2, DEFAULT_CAP)?);

    let u24 = Matroid::uniform(2, 4)?;
    println!("\nU_{{2,4}} (not binary):");
    for p in [2u32, 3] {
        let count = stratum_count(&u24, PrimeField::new(p)?, DEFAULT_CAP)?;
        println!("  over F_{p}: {count} point(s)");
    }

    println!("\nevery simple binary matroid of rank 2 has a one-point stratum over F_2:");
    for n in 2..=3usize {
        for class_rep in matroid_euler::matroid::enumerate_binary_classes(2, n)? {
            let m = class_rep.representative;
            let count = stratum_count(&m, f2, DEFAULT_CAP)?;
            println!("  n={n}, bases {:?}: {count}", m.bases_as_sets());
        }
    }
    Ok(())
}
