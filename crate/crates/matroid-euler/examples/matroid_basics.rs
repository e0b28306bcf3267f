//! Constructing matroids and querying their basic invariants.
//!
//! Run with: `cargo run --example matroid_basics`

use matroid_euler::gf::{GFMatrix, PrimeField};
use matroid_euler::matroid::Matroid;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A matroid from an explicit list of bases: the uniform matroid U_{2,3}.
    let u23 = Matroid::from_bases(3, &[[1, 2], [1, 3], [2, 3]])?;
    println!("U_{{2,3}}: n={} rank={} bases={:?}", u23.n(), u23.rank(), u23.bases_as_sets());
    println!("  basis exchange holds: {}", u23.satisfies_basis_exchange());
    println!("  simple: {}", u23.is_simple());
    println!("  rank of {{1}}: {}", u23.rank_of(&[1]));
    println!("  rank of {{1,2,3}}: {}", u23.rank_of(&[1, 2, 3]));

    // The same matroid from a matrix over F_2 (columns are the elements).
    let f2 = PrimeField::new(2)?;
    let a = GFMatrix::from_rows(f2, &[vec![1, 0, 1], vec![0, 1, 1]])?;
    let from_matrix = Matroid::from_matrix(&a)?;
    println!("matrix route gives the same matroid: {}", from_matrix == u23);

    // Automorphisms and a canonical relabeling.
    println!("  |Aut(U_{{2,3}})| = {}", u23.aut_order()?);
    println!("  Aut inside the alternating group: {}", u23.is_alternating()?);
    let relabeled = u23.relabel(&[3, 1, 2])?;
    println!(
        "  canonical form is relabeling-invariant: {}",
        relabeled.canonical_form()? == u23.canonical_form()?
    );

    // Serialization round trip.
    let json = u23.to_json();
    println!("JSON: {json}");
    let back = Matroid::from_json(&json)?;
    println!("round trip equal: {}", back == u23);

    // Construction checks shape (equal-size, in-range sets); the exchange
    // axiom is a separate predicate so that near-matroids can be inspected.
    let not_a_matroid = Matroid::from_bases(4, &[[1, 2], [3, 4]])?;
    println!(
        "{{12, 34}} satisfies basis exchange: {}",
        not_a_matroid.satisfies_basis_exchange()
    );

    Ok(())
}
