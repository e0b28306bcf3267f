//! The virtual Euler characteristic of simple binary matroids, computed
//! three deliberately independent ways, plus exact verifiers for every
//! supporting identity.
//!
//! The three routes never share counting code:
//!
//! 1. [`chi_enumerated`] — enumerate isomorphism classes by linear-group
//!    orbits and sum `(-1)^n / |Aut(Q)|`;
//! 2. [`chi_via_counts`] — sum `(-1)^n / n!` times the recursive
//!    distinct-column point counts of the Grassmannian;
//! 3. [`chi_closed`] — evaluate the closed product
//!    `prod_{i=1}^{r} 1 / (1 - q^i)`.
//!
//! All three agree exactly (as rationals) for every feasible input; the
//! verification suites in this module re-derive each step of that agreement.

use num_traits::{One, Zero};

use crate::exact::{factorial, neg_one_pow, rat_str, BigInt, BigRat};
use crate::gf::PrimeField;
use crate::grassmann::{
    conf_count, grdc_brute_count, grdc_count_table, grdc_recursive_count, yk_partition,
};
use crate::matroid::{enumerate_binary_classes, enumerate_fp_classes, pg_matroid};
use crate::{Error, Result};

/// Which route produced a [`ChiReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiMethod {
    /// Isomorphism-class enumeration, `sum (-1)^n / |Aut|`.
    Enumerated,
    /// Point counts divided by `n!`.
    ViaCounts,
    /// Closed product formula.
    Closed,
    /// Class enumeration over an odd prime field, truncated at some `n_max`.
    Partial,
}

impl ChiMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ChiMethod::Enumerated => "enumerated",
            ChiMethod::ViaCounts => "via_counts",
            ChiMethod::Closed => "closed",
            ChiMethod::Partial => "partial",
        }
    }
}

impl std::fmt::Display for ChiMethod {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(self.as_str())
    }
}

/// One summand of a characteristic computation at a fixed number of
/// elements: `count` is either a class-weight sum `sum 1/|Aut|` or a point
/// count, and `term` is the signed contribution to the total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTerm {
    pub n: u64,
    pub count: BigRat,
    pub term: BigRat,
}

/// Exact virtual Euler characteristic with its per-`n` breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub q: u64,
    pub r: u32,
    pub method: ChiMethod,
    /// False when the sum was truncated before the last contributing `n`.
    pub complete: bool,
    pub terms: Vec<ChiTerm>,
    pub total: BigRat,
}

impl ChiReport {
    pub fn to_json(&self) -> String {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "n": t.n,
                    "count": rat_str(&t.count),
                    "term": rat_str(&t.term),
                })
            })
            .collect();
        let v = serde_json::json!({
            "q": self.q,
            "r": self.r,
            "method": self.method.as_str(),
            "complete": self.complete,
            "terms": terms,
            "total": rat_str(&self.total),
        });
        serde_json::to_string_pretty(&v).expect("serialization cannot fail")
    }
}

/// Closed product `prod_{i=1}^{r} 1 / (1 - q^i)`.
pub fn chi_closed(q: u64, r: u32) -> BigRat {
    assert!(q >= 2 && r >= 1, "chi_closed needs q >= 2, r >= 1");
    let one = BigInt::one();
    let mut acc = BigRat::one();
    for i in 1..=r {
        acc /= BigRat::from_integer(&one - BigInt::from(q).pow(i));
    }
    acc
}

/// Characteristic by isomorphism-class enumeration over `F_2`:
/// `sum_{n=r}^{2^r - 1} (-1)^n sum_{classes Q} 1 / |Aut(Q)|`.
pub fn chi_enumerated(r: u32) -> Result<ChiReport> {
    if r < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let n_max = (1u64 << r) - 1;
    let mut terms = Vec::new();
    let mut total = BigRat::zero();
    for n in r as u64..=n_max {
        let classes = enumerate_binary_classes(r as usize, n as usize)?;
        let count: BigRat = classes
            .iter()
            .map(|c| BigRat::new(BigInt::one(), c.aut_order.clone()))
            .sum();
        let term = neg_one_pow(n) * &count;
        total += &term;
        terms.push(ChiTerm { n, count, term });
    }
    Ok(ChiReport { q: 2, r, method: ChiMethod::Enumerated, complete: true, terms, total })
}

/// Characteristic from distinct-column point counts:
/// `sum_{n=r}^{q^r - 1} (-1)^n |Gr^dc(r, n; q)| / n!`, counts by the exact
/// recursion (no enumeration).
pub fn chi_via_counts(q: u64, r: u32) -> ChiReport {
    assert!(q >= 2 && r >= 1, "chi_via_counts needs q >= 2, r >= 1");
    let n_max = q.checked_pow(r).expect("q^r overflows u64") - 1;
    let table = grdc_count_table(r, q, n_max);
    let mut terms = Vec::new();
    let mut total = BigRat::zero();
    let mut nfact = factorial(r as u64);
    for row in &table.rows {
        if row.n > r as u64 {
            nfact *= BigInt::from(row.n);
        }
        let count = BigRat::from_integer(row.count.clone());
        let term = neg_one_pow(row.n) * &count / BigRat::from_integer(nfact.clone());
        total += &term;
        terms.push(ChiTerm { n: row.n, count, term });
    }
    ChiReport { q, r, method: ChiMethod::ViaCounts, complete: true, terms, total }
}

/// Largest number of elements of a simple rank-`r` matroid over `F_p`: the
/// point count of the projective space, `(p^r - 1) / (p - 1)`.
pub fn simple_rank_r_bound(p: u64, r: u32) -> u64 {
    (p.checked_pow(r).expect("p^r overflows u64") - 1) / (p - 1)
}

/// Partial characteristic over an arbitrary prime field by brute class
/// enumeration up to `n_max` elements. The report is `complete` exactly when
/// `n_max` reaches the projective bound `(p^r - 1)/(p - 1)`, past which no
/// simple rank-`r` class exists.
pub fn chi_p_partial(field: PrimeField, r: u32, n_max: u64, cap: u64) -> Result<ChiReport> {
    if r < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let p = field.p() as u64;
    let mut terms = Vec::new();
    let mut total = BigRat::zero();
    for n in r as u64..=n_max {
        let classes = enumerate_fp_classes(field, r as usize, n as usize, cap)?;
        let count: BigRat = classes
            .iter()
            .map(|c| BigRat::new(BigInt::one(), c.aut_order.clone()))
            .sum();
        let term = neg_one_pow(n) * &count;
        total += &term;
        terms.push(ChiTerm { n, count, term });
    }
    let complete = n_max >= simple_rank_r_bound(p, r);
    Ok(ChiReport { q: p, r, method: ChiMethod::Partial, complete, terms, total })
}

/// Both sides of the factorial tail-sum identity at `N = q^(r+1)`:
/// `lhs = sum_{n=k}^{N-1} (-1)^n / n! prod_{j=k+1}^{n} (N - j)` and
/// `rhs = (-1)^k / ((N - 1) (k-1)!)`. Defined for `k >= 1`; the two sides
/// agree for `1 <= k <= N - 1`.
pub fn factorial_tail_sum(q: u64, r: u32, k: u64) -> Result<(BigRat, BigRat)> {
    if q < 2 {
        return Err(Error::InvalidArgument("q must be at least 2".into()));
    }
    if k == 0 {
        return Err(Error::InvalidArgument(
            "k must be at least 1 ((k-1)! is undefined at k = 0)".into(),
        ));
    }
    let big_n = q.checked_pow(r + 1).expect("q^(r+1) overflows u64");
    let rhs = BigRat::new(
        neg_one_pow(k).to_integer(),
        (BigInt::from(big_n) - 1) * factorial(k - 1),
    );
    let mut lhs = BigRat::zero();
    if k < big_n {
        // term(k) = (-1)^k / k!; term(n) = term(n-1) * (-(N - n) / n).
        let mut term = neg_one_pow(k) / BigRat::from_integer(factorial(k));
        lhs += &term;
        for n in k + 1..=big_n - 1 {
            term *= BigRat::new(-BigInt::from(big_n - n), BigInt::from(n));
            lhs += &term;
        }
    }
    Ok((lhs, rhs))
}

/// One verified identity: a human-readable label and both exact sides.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: BigRat,
    pub rhs: BigRat,
}

impl IdentityCheck {
    fn new(label: String, lhs: BigRat, rhs: BigRat) -> Self {
        IdentityCheck { label, lhs, rhs }
    }

    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A named batch of identity checks.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(IdentityCheck::ok)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "label": c.label,
                    "lhs": rat_str(&c.lhs),
                    "rhs": rat_str(&c.rhs),
                    "ok": c.ok(),
                })
            })
            .collect();
        serde_json::json!({
            "suite": self.name,
            "ok": self.all_ok(),
            "checks": checks,
        })
    }
}

/// Optional restriction of a verification suite's default grid.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteFilter {
    pub q: Option<u64>,
    pub r: Option<u32>,
}

impl SuiteFilter {
    pub fn none() -> Self {
        SuiteFilter::default()
    }

    fn keep_q(&self, q: u64) -> bool {
        self.q.is_none_or(|want| want == q)
    }

    fn keep_r(&self, r: u32) -> bool {
        self.r.is_none_or(|want| want == r)
    }
}

/// Class-weight sum versus labeled point count at one `(r, n)` over `F_2`:
/// `sum_classes 1/|Aut| = |Gr^dc(r, n; F_2)| / n!`. The left side comes from
/// orbit enumeration, the right from brute-force Grassmannian enumeration.
pub fn verify_class_point_identity(r: u32, n: u64, cap: u64) -> Result<IdentityCheck> {
    let classes = enumerate_binary_classes(r as usize, n as usize)?;
    let lhs: BigRat = classes
        .iter()
        .map(|c| BigRat::new(BigInt::one(), c.aut_order.clone()))
        .sum();
    let field = PrimeField::new(2).expect("2 is prime");
    let points = grdc_brute_count(field, r as usize, n as usize, cap)?;
    let rhs = BigRat::new(points, factorial(n));
    Ok(IdentityCheck::new(
        format!("class weights = points/n! (r={r}, n={n})"),
        lhs,
        rhs,
    ))
}

/// Beta-invariant relation at rank `r`:
/// `beta(PG(r, 2)) * chi(2, r) = (-1)^r`, with beta computed from the
/// characteristic polynomial of the full projective geometry.
pub fn verify_beta_relation(r: u32) -> Result<IdentityCheck> {
    let beta = pg_matroid(r + 1)?.beta_invariant()?;
    let lhs = BigRat::from_integer(beta) * chi_closed(2, r);
    let rhs = neg_one_pow(r as u64);
    Ok(IdentityCheck::new(
        format!("beta(PG({r},2)) * chi = (-1)^{r}"),
        lhs,
        rhs,
    ))
}

/// Suite `prop22`: the class-weight/point-count identity over the grid
/// `r <= 3`, `r <= n <= min(2^r - 1, 7)`.
pub fn suite_class_point(cap: u64, filter: &SuiteFilter) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for r in 1..=3u32 {
        if !filter.keep_r(r) {
            continue;
        }
        let n_hi = std::cmp::min((1u64 << r) - 1, 7);
        for n in r as u64..=n_hi {
            checks.push(verify_class_point_identity(r, n, cap)?);
        }
    }
    Ok(SuiteReport { name: "prop22", checks })
}

/// Suite `thm31`: the point-count characteristic equals the closed product
/// for `q` in `{2,3,4,5,7,8,9}` (non-prime prime-powers included) and
/// `r` in `{1,2,3}`, plus the telescoping step
/// `chi(q, r+1) = -1/(q^(r+1) - 1) * chi(q, r)` for `q` in `{2,3}`,
/// `r` in `{1,2}`.
pub fn suite_product_formula(filter: &SuiteFilter) -> SuiteReport {
    let mut checks = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        if !filter.keep_q(q) {
            continue;
        }
        for r in 1..=3u32 {
            if !filter.keep_r(r) {
                continue;
            }
            checks.push(IdentityCheck::new(
                format!("chi via counts = closed product (q={q}, r={r})"),
                chi_via_counts(q, r).total,
                chi_closed(q, r),
            ));
        }
    }
    for q in [2u64, 3] {
        if !filter.keep_q(q) {
            continue;
        }
        for r in 1..=2u32 {
            if !filter.keep_r(r) {
                continue;
            }
            let step = BigRat::new(BigInt::from(-1), BigInt::from(q).pow(r + 1) - 1);
            checks.push(IdentityCheck::new(
                format!("telescoping chi(q={q}, r={}) = -chi(q={q}, r={r})/(q^{} - 1)", r + 1, r + 1),
                chi_via_counts(q, r + 1).total,
                step * chi_via_counts(q, r).total,
            ));
        }
    }
    SuiteReport { name: "thm31", checks }
}

/// Suite `lemma32`: the factorial tail-sum identity, exhaustively over
/// `q` in `{2,3}`, `r` in `{0,1,2}`, and every `k` in `1..=q^(r+1) - 1`.
pub fn suite_tail_sum(filter: &SuiteFilter) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for q in [2u64, 3] {
        if !filter.keep_q(q) {
            continue;
        }
        for r in 0..=2u32 {
            if !filter.keep_r(r) {
                continue;
            }
            let big_n = q.pow(r + 1);
            for k in 1..=big_n - 1 {
                let (lhs, rhs) = factorial_tail_sum(q, r, k)?;
                checks.push(IdentityCheck::new(
                    format!("tail sum (q={q}, r={r}, k={k})"),
                    lhs,
                    rhs,
                ));
            }
        }
    }
    Ok(SuiteReport { name: "lemma32", checks })
}

/// Suite `groth`: recursive distinct-column counts equal brute-force
/// enumeration counts for `p` in `{2,3}`, `r` in `{2,3}`, `n <= 8`.
pub fn suite_count_equivalence(cap: u64, filter: &SuiteFilter) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for p in [2u32, 3] {
        if !filter.keep_q(p as u64) {
            continue;
        }
        let field = PrimeField::new(p).expect("small primes");
        for r in 2..=3u32 {
            if !filter.keep_r(r) {
                continue;
            }
            for n in r as u64..=8 {
                let brute = grdc_brute_count(field, r as usize, n as usize, cap)?;
                let recursive = grdc_recursive_count(r, n, p as u64);
                checks.push(IdentityCheck::new(
                    format!("recursive count = brute count (p={p}, r={r}, n={n})"),
                    BigRat::from_integer(recursive),
                    BigRat::from_integer(brute),
                ));
            }
        }
    }
    Ok(SuiteReport { name: "groth", checks })
}

/// Suite `yk`: the last-pivot partition of the distinct-column locus
/// factors as `|Y_k| = |Gr^dc(rank-1, k-1)| * conf(n-k, q^rank, k+1)`, for
/// `(rank, n, p)` in `{(2,3,2), (2,4,3), (3,5,2)}`, plus the strata summing
/// to the recursive total.
pub fn suite_stratification(cap: u64, filter: &SuiteFilter) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for (rank, n, p) in [(2u32, 3u64, 2u64), (2, 4, 3), (3, 5, 2)] {
        if !filter.keep_q(p) || !filter.keep_r(rank) {
            continue;
        }
        let field = PrimeField::new(p as u32).expect("small primes");
        let strata = yk_partition(field, rank as usize, n as usize, cap)?;
        let ambient = BigInt::from(p).pow(rank);
        let mut sum = BigInt::zero();
        for (&k, size) in &strata {
            sum += size;
            let lower = grdc_recursive_count(rank - 1, k - 1, p);
            let expected = lower * conf_count(n - k, &ambient, k + 1);
            checks.push(IdentityCheck::new(
                format!("stratum size at last pivot k={k} (p={p}, rank={rank}, n={n})"),
                BigRat::from_integer(size.clone()),
                BigRat::from_integer(expected),
            ));
        }
        checks.push(IdentityCheck::new(
            format!("strata sum to distinct-column total (p={p}, rank={rank}, n={n})"),
            BigRat::from_integer(sum),
            BigRat::from_integer(grdc_recursive_count(rank, n, p)),
        ));
    }
    Ok(SuiteReport { name: "yk", checks })
}

/// Suite `beta`: for `r` in `{1,2,3}`, the beta invariant of the full
/// projective geometry equals `prod_{i=1}^{r} (2^i - 1)` and satisfies
/// `beta * chi = (-1)^r`.
pub fn suite_beta(filter: &SuiteFilter) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for r in 1..=3u32 {
        if !filter.keep_r(r) {
            continue;
        }
        let beta = pg_matroid(r + 1)?.beta_invariant()?;
        let product: BigInt = (1..=r).map(|i| BigInt::from(2u64).pow(i) - 1).product();
        checks.push(IdentityCheck::new(
            format!("beta(PG({r},2)) = prod (2^i - 1), i=1..{r}"),
            BigRat::from_integer(beta),
            BigRat::from_integer(product),
        ));
        checks.push(verify_beta_relation(r)?);
    }
    Ok(SuiteReport { name: "beta", checks })
}

/// Every verification suite at its default grid.
pub fn suite_all(cap: u64) -> Result<Vec<SuiteReport>> {
    let filter = SuiteFilter::none();
    Ok(vec![
        suite_class_point(cap, &filter)?,
        suite_product_formula(&filter),
        suite_tail_sum(&filter)?,
        suite_count_equivalence(cap, &filter)?,
        suite_stratification(cap, &filter)?,
        suite_beta(&filter)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_rat, rat};

    #[test]
    fn chi_closed_values() {
        assert_eq!(chi_closed(2, 1), rat(-1, 1));
        assert_eq!(chi_closed(2, 3), rat(-1, 21));
        assert_eq!(chi_closed(2, 4), rat(1, 315));
        assert_eq!(chi_closed(3, 2), rat(1, 16));
        assert_eq!(chi_closed(2, 2), rat(1, 3));
    }

    #[test]
    fn chi_enumerated_small_ranks() {
        let r1 = chi_enumerated(1).unwrap();
        assert_eq!(r1.total, rat(-1, 1));
        assert_eq!(r1.terms.len(), 1);
        assert_eq!(r1.terms[0].count, rat(1, 1));

        let r2 = chi_enumerated(2).unwrap();
        assert_eq!(r2.total, rat(1, 3));
        // n = 2: U_{2,2} with aut 2; n = 3: U_{2,3} with aut 6.
        assert_eq!(r2.terms[0].count, rat(1, 2));
        assert_eq!(r2.terms[1].count, rat(1, 6));

        let r3 = chi_enumerated(3).unwrap();
        assert_eq!(r3.total, rat(-1, 21));
        let counts: Vec<BigRat> = r3.terms.iter().map(|t| t.count.clone()).collect();
        // Aut orders by n: {6}, {6, 24}, {8}, {24}, {168}.
        assert_eq!(
            counts,
            vec![rat(1, 6), rat(1, 6) + rat(1, 24), rat(1, 8), rat(1, 24), rat(1, 168)]
        );
    }

    #[test]
    fn chi_via_counts_examples() {
        assert_eq!(chi_via_counts(2, 2).total, rat(1, 3));
        assert_eq!(chi_via_counts(3, 1).total, rat(-1, 2));
        assert_eq!(chi_via_counts(2, 3).total, rat(-1, 21));

        // Term structure for (3, 1): -1 + 1/2.
        let rep = chi_via_counts(3, 1);
        assert_eq!(rep.terms.len(), 2);
        assert_eq!(rep.terms[0].term, rat(-1, 1));
        assert_eq!(rep.terms[1].term, rat(1, 2));
        assert!(rep.complete);
    }

    #[test]
    fn three_routes_agree_for_binary() {
        for r in 1..=3u32 {
            let a = chi_enumerated(r).unwrap().total;
            let b = chi_via_counts(2, r).total;
            let c = chi_closed(2, r);
            assert_eq!(a, b, "r={r}");
            assert_eq!(b, c, "r={r}");
        }
    }

    #[test]
    fn tail_sum_examples() {
        let (lhs, rhs) = factorial_tail_sum(2, 1, 2).unwrap();
        assert_eq!(lhs, rat(1, 3));
        assert_eq!(rhs, rat(1, 3));

        let (lhs, rhs) = factorial_tail_sum(2, 1, 3).unwrap();
        assert_eq!(lhs, rat(-1, 6));
        assert_eq!(rhs, rat(-1, 6));

        let (lhs, rhs) = factorial_tail_sum(2, 1, 1).unwrap();
        assert_eq!(lhs, rat(-1, 3));
        assert_eq!(rhs, rat(-1, 3));

        assert!(factorial_tail_sum(2, 1, 0).is_err());
    }

    #[test]
    fn class_point_identity_examples() {
        let c = verify_class_point_identity(3, 7, 1 << 22).unwrap();
        assert!(c.ok());
        assert_eq!(c.lhs, rat(1, 168));
        assert_eq!(c.rhs, rat(30, 5040));

        let c = verify_class_point_identity(2, 3, 1 << 22).unwrap();
        assert!(c.ok());
        assert_eq!(c.lhs, rat(1, 6));

        let c = verify_class_point_identity(1, 1, 1 << 22).unwrap();
        assert!(c.ok());
        assert_eq!(c.lhs, rat(1, 1));
    }

    #[test]
    fn beta_relation_holds() {
        for r in 1..=3u32 {
            let c = verify_beta_relation(r).unwrap();
            assert!(c.ok(), "r={r}: {} != {}", c.lhs, c.rhs);
        }
        assert_eq!(verify_beta_relation(2).unwrap().lhs, rat(1, 1));
        assert_eq!(verify_beta_relation(3).unwrap().lhs, rat(-1, 1));
    }

    #[test]
    fn chi_p_partial_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let rep = chi_p_partial(f3, 1, 1, 1 << 22).unwrap();
        assert_eq!(rep.total, rat(-1, 1));
        assert!(rep.complete);

        let rep = chi_p_partial(f3, 2, 4, 1 << 22).unwrap();
        assert_eq!(rep.total, rat(3, 8));
        assert!(rep.complete, "bound (3^2 - 1)/2 = 4 is reached");
        assert_ne!(rep.total, chi_closed(3, 2));

        let truncated = chi_p_partial(f3, 2, 3, 1 << 22).unwrap();
        assert!(!truncated.complete);
        assert_eq!(truncated.total, rat(1, 3));

        let f2 = PrimeField::new(2).unwrap();
        let rep = chi_p_partial(f2, 2, 3, 1 << 22).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.total, chi_enumerated(2).unwrap().total);
    }

    #[test]
    fn projective_bound_values() {
        assert_eq!(simple_rank_r_bound(2, 3), 7);
        assert_eq!(simple_rank_r_bound(3, 2), 4);
        assert_eq!(simple_rank_r_bound(3, 1), 1);
        assert_eq!(simple_rank_r_bound(5, 2), 6);
    }

    #[test]
    fn suites_pass_on_small_grids() {
        let cap = 1 << 22;
        let filter = SuiteFilter::none();
        let s = suite_class_point(cap, &filter).unwrap();
        assert!(s.all_ok());
        assert_eq!(s.name, "prop22");
        assert_eq!(s.checks.len(), 1 + 2 + 5); // r=1: n=1; r=2: n=2,3; r=3: n=3..7

        let s = suite_product_formula(&filter);
        assert!(s.all_ok());
        assert_eq!(s.checks.len(), 21 + 4);

        let s = suite_tail_sum(&filter).unwrap();
        assert!(s.all_ok());
        assert_eq!(s.checks.len(), (1 + 3 + 7) + (2 + 8 + 26));

        // Count equivalence restricted to p = 2 stays fast.
        let s = suite_count_equivalence(cap, &SuiteFilter { q: Some(2), r: None }).unwrap();
        assert!(s.all_ok());
        assert_eq!(s.checks.len(), 7 + 6); // r=2: n=2..8; r=3: n=3..8

        let s = suite_stratification(cap, &filter).unwrap();
        assert!(s.all_ok());

        let s = suite_beta(&filter).unwrap();
        assert!(s.all_ok());
        assert_eq!(s.checks.len(), 6);
    }

    #[test]
    fn suite_filters_restrict_grids() {
        let filter = SuiteFilter { q: Some(2), r: Some(1) };
        let s = suite_tail_sum(&filter).unwrap();
        assert_eq!(s.checks.len(), 3); // q=2, r=1: k in 1..=3
        assert!(s.all_ok());

        let s = suite_product_formula(&SuiteFilter { q: Some(9), r: Some(2) });
        assert_eq!(s.checks.len(), 1);
        assert!(s.all_ok());
    }

    #[test]
    fn report_json_shape() {
        let rep = chi_via_counts(2, 2);
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["q"], 2);
        assert_eq!(v["r"], 2);
        assert_eq!(v["method"], "via_counts");
        assert_eq!(v["complete"], true);
        assert_eq!(v["total"], "1/3");
        assert_eq!(v["terms"][0]["n"], 2);
        assert_eq!(v["terms"][0]["count"], "1");
        assert_eq!(v["terms"][0]["term"], "1/2");
        assert_eq!(parse_rat(v["total"].as_str().unwrap()).unwrap(), rat(1, 3));

        let s = suite_beta(&SuiteFilter::none()).unwrap();
        let v = s.to_json();
        assert_eq!(v["suite"], "beta");
        assert_eq!(v["ok"], true);
        assert_eq!(v["checks"][0]["lhs"], "1");
    }
}
