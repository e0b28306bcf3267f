//! Plücker coordinates versus direct rank computation.
//!
//! A full-rank r x n matrix over F_p determines a Plücker vector: one
//! maximal-minor determinant per r-subset of columns. A column subset is a
//! basis of the column matroid exactly when its Plücker coordinate is
//! nonzero. This example checks that equivalence on every full-rank matrix
//! of a small shape, with the two sides computed by unrelated code paths.
//!
//! Run with: `cargo run --example plucker_basis_check [p] [r] [n]`
//! (defaults: p=3, r=2, n=4)

use matroid_euler::gf::{GFMatrix, PrimeField};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let r: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let field = PrimeField::new(p)?;
    let cells = r * n;
    let total = (p as u64).pow(cells as u32);
    assert!(total <= 1 << 22, "matrix space too large; pick smaller p, r, n");

    let mut full_rank = 0u64;
    let mut comparisons = 0u64;
    for code in 0..total {
        let mut data = vec![0u8; cells];
        let mut c = code;
        for cell in data.iter_mut() {
            *cell = (c % p as u64) as u8;
            c /= p as u64;
        }
        let a = GFMatrix::new(field, r, n, data)?;
        if a.rank() < r {
            continue;
        }
        full_rank += 1;
        let plucker = a.plucker()?;
        for (subset, &coord) in plucker.coords() {
            // Subsets are 1-based; rebuild the minor and rank it directly.
            let minor: Vec<Vec<u8>> = (0..r)
                .map(|i| subset.iter().map(|&j| a.get(i, j - 1)).collect())
                .collect();
            let direct = GFMatrix::from_rows(field, &minor)?.rank() == r;
            assert_eq!(coord != 0, direct, "mismatch at matrix {code}, subset {subset:?}");
            comparisons += 1;
        }
    }

    println!("field F_{p}, matrices {r}x{n}: {full_rank} full-rank out of {total}");
    println!("{comparisons} subset comparisons, all agree:");
    println!("  (plucker coordinate != 0)  <=>  (columns are a basis)");
    Ok(())
}
