//! Exact enumeration of simple matroids realizable over prime fields, built
//! around the correspondence between full-rank matrices in reduced row-echelon
//! form and points of the Grassmannian `Gr(r, n; F_p)`.
//!
//! The headline quantity is the virtual Euler characteristic of the family of
//! simple binary matroids of rank `r`,
//!
//! ```text
//! chi(B(r)) = sum over classes Q of (-1)^{n(Q)} / |Aut(Q)|,
//! ```
//!
//! which this crate computes three independent ways and checks against the
//! closed form `prod_{i=1..r} 1/(1 - 2^i)`:
//!
//! * [`euler::chi_enumerated`] — enumerate isomorphism classes directly and
//!   sum `(-1)^n / |Aut|`,
//! * [`euler::chi_via_counts`] — count distinct-column Grassmannian points via
//!   an exact recursion and sum `(-1)^n count / n!`,
//! * [`euler::chi_closed`] — evaluate the closed-form product.
//!
//! All arithmetic is exact (`BigInt` / `BigRat`); there is no floating point
//! anywhere.
//!
//! ```
//! use matroid_euler::euler;
//!
//! let report = euler::chi_enumerated(3).unwrap();
//! assert_eq!(report.total, euler::chi_closed(2, 3));
//! assert_eq!(report.total.to_string(), "-1/21");
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `matroid-euler` binary exposes the same operations as subcommands.

pub mod cli;
pub mod euler;
pub mod exact;
pub mod gf;
pub mod grassmann;
pub mod matroid;

pub(crate) mod subsets;

use exact::BigInt;

/// Default ceiling on brute-force enumeration sizes (number of subspaces).
pub const DEFAULT_CAP: u64 = 100_000_000;

/// Environment variable consulted by the CLI for a default enumeration cap.
pub const CAP_ENV_VAR: &str = "MATROID_EULER_CAP";

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("enumeration of {needed} items exceeds cap {cap}; raise the cap to proceed")]
    CapExceeded { needed: BigInt, cap: u64 },

    #[error("{what} is limited to {limit}, got {got}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("search for {what} exceeded its node budget; input too symmetric/large")]
    SearchBudget { what: &'static str },

    #[error("{0} is not a prime in the supported range 2..=31")]
    BadModulus(u32),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed JSON input: {0}")]
    Json(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
