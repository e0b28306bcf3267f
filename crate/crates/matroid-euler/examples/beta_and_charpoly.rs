//! Characteristic polynomials, beta invariants, and the product identity
//! tying the beta invariant of projective space to the Euler characteristic.
//!
//! For the rank-r binary projective geometry PG(r-1, 2) the characteristic
//! polynomial factors as prod_{i=0..r-1} (t - 2^i), the beta invariant is
//! prod_{i=1..r-1} (2^i - 1), and
//!
//!     beta(PG(r, 2)) * chi(B(r)) = (-1)^r .
//!
//! Run with: `cargo run --example beta_and_charpoly`

use matroid_euler::euler::chi_closed;
use matroid_euler::exact::{rat_str, BigRat};
use matroid_euler::matroid::{pg_matroid, Matroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u23 = Matroid::uniform(2, 3)?;
    println!("U_{{2,3}}: chi_M(t) = {}", u23.characteristic_polynomial()?);
    println!("          beta = {}", u23.beta_invariant()?);

    for rank in 1..=4u32 {
        let pg = pg_matroid(rank)?;
        let poly = pg.characteristic_polynomial()?;
        println!("\nPG({}, 2) on {} point(s):", rank - 1, pg.n());
        println!("  chi_M(t) = {poly}");
        println!("  chi_M(1) = {} (t - 1 divides chi_M whenever the rank is >= 1)", poly.eval(&1.into()));
        println!("  beta     = {}", pg.beta_invariant()?);
    }

    println!("\nbeta(PG(r, 2)) * chi(B(r)) = (-1)^r:");
    for r in 1..=3u32 {
        let beta = pg_matroid(r + 1)?.beta_invariant()?;
        let chi = chi_closed(2, r);
        let product = BigRat::from_integer(beta.clone()) * &chi;
        println!(
            "  r={r}: {} * {} = {}",
            beta,
            rat_str(&chi),
            rat_str(&product),
        );
        let expected = if r % 2 == 0 { 1 } else { -1 };
        assert_eq!(product, BigRat::from_integer(expected.into()));
    }
    Ok(())
}
