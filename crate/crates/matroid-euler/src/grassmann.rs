//! Points of the Grassmannian `Gr(r, n; F_q)` as full-rank matrices in
//! reduced row-echelon form, and exact counts of the distinct-column locus
//! (subspaces whose RREF has pairwise-distinct nonzero columns).
//!
//! Counting comes in two deliberately independent flavors:
//!
//! * brute force — enumerate every RREF and test the column predicate;
//! * closed recursion — rank 1 is the falling product `(q-2)(q-3)...(q-n)`,
//!   and rank `r+1` counts split by the last pivot column `k` into a
//!   rank-`r` count times a configuration count of the remaining columns.
//!
//! The two must agree everywhere; the verification suites check that.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::exact::{exact_div, falling_product, int, BigInt};
use crate::gf::{GFMatrix, PrimeField};
use crate::subsets::combinations;
use crate::{Error, Result};

/// A point of `Gr(r, n; F_p)`: a full-rank matrix in RREF, with its 1-based
/// pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceRref {
    matrix: GFMatrix,
    pivots: Vec<usize>,
}

impl SubspaceRref {
    /// Wrap a matrix, verifying it is its own RREF with full row rank.
    pub fn from_matrix(matrix: GFMatrix) -> Result<Self> {
        let reduced = matrix.rref();
        if reduced.rank != matrix.nrows() {
            return Err(Error::RankDeficient { rank: reduced.rank, rows: matrix.nrows() });
        }
        if reduced.matrix != matrix {
            return Err(Error::InvalidArgument("matrix is not in RREF".into()));
        }
        Ok(SubspaceRref { matrix, pivots: reduced.pivots })
    }

    fn new_unchecked(matrix: GFMatrix, pivots: Vec<usize>) -> Self {
        SubspaceRref { matrix, pivots }
    }

    pub fn matrix(&self) -> &GFMatrix {
        &self.matrix
    }

    /// 1-based pivot columns, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// Gaussian binomial `[n choose r]_q`: the number of `r`-dimensional
/// subspaces of `F_q^n`. Zero when `r > n`.
pub fn gaussian_binomial(r: u32, n: u32, q: u64) -> BigInt {
    assert!(q >= 2, "gaussian_binomial needs q >= 2");
    if r > n {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    exact_div(&num, &den)
}

/// Scans every RREF with a fixed pivot set by running an odometer over the
/// free entries; the scratch matrix is updated in place.
struct PivotScan {
    scratch: GFMatrix,
    free: Vec<(usize, usize)>,
    values: Vec<u8>,
    started: bool,
    done: bool,
    last_pivot: usize,
}

impl PivotScan {
    /// `pivots0` are 0-based, strictly increasing.
    fn new(field: PrimeField, n: usize, pivots0: &[usize]) -> Self {
        let r = pivots0.len();
        let mut scratch = GFMatrix::zero(field, r, n);
        for (i, &pj) in pivots0.iter().enumerate() {
            scratch.set(i, pj, 1);
        }
        // Row-major free positions: in row i, non-pivot columns right of the
        // i-th pivot.
        let mut free = Vec::new();
        for (i, &pj) in pivots0.iter().enumerate() {
            for j in pj + 1..n {
                if !pivots0.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let values = vec![0u8; free.len()];
        PivotScan {
            scratch,
            free,
            values,
            started: false,
            done: false,
            last_pivot: pivots0.last().map_or(0, |&pj| pj + 1),
        }
    }

    /// Advance to the next matrix; the first call lands on the all-zero free
    /// assignment. Returns `false` when the pivot set is exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let p = self.scratch.field().p() as u8;
        // Odometer: last free position cycles fastest.
        let mut idx = self.free.len();
        loop {
            if idx == 0 {
                self.done = true;
                return false;
            }
            idx -= 1;
            let (i, j) = self.free[idx];
            if self.values[idx] + 1 < p {
                self.values[idx] += 1;
                self.scratch.set(i, j, self.values[idx]);
                return true;
            }
            self.values[idx] = 0;
            self.scratch.set(i, j, 0);
        }
    }

    fn matrix(&self) -> &GFMatrix {
        &self.scratch
    }

    /// 1-based last pivot column.
    fn last_pivot(&self) -> usize {
        self.last_pivot
    }
}

/// Deterministic stream over all of `Gr(r, n; F_p)`: pivot sets in
/// lexicographic order, free entries in odometer order. Errors with
/// [`Error::CapExceeded`] if the total count exceeds `cap`.
pub fn subspaces(field: PrimeField, r: usize, n: usize, cap: u64) -> Result<SubspaceIter> {
    assert!(r >= 1 && n >= 1, "subspaces needs r, n >= 1");
    let total = gaussian_binomial(r as u32, n as u32, field.p() as u64);
    if total > int(0) + BigInt::from(cap) {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    let pivot_sets: Vec<Vec<usize>> = combinations(n, r).collect();
    Ok(SubspaceIter { field, n, pivot_sets, next_set: 0, scan: None })
}

pub struct SubspaceIter {
    field: PrimeField,
    n: usize,
    pivot_sets: Vec<Vec<usize>>,
    next_set: usize,
    scan: Option<PivotScan>,
}

impl Iterator for SubspaceIter {
    type Item = SubspaceRref;

    fn next(&mut self) -> Option<SubspaceRref> {
        loop {
            if self.scan.is_none() {
                if self.next_set == self.pivot_sets.len() {
                    return None;
                }
                self.scan = Some(PivotScan::new(self.field, self.n, &self.pivot_sets[self.next_set]));
            }
            let scan = self.scan.as_mut().unwrap();
            if scan.advance() {
                let pivots = self.pivot_sets[self.next_set].iter().map(|&c| c + 1).collect();
                return Some(SubspaceRref::new_unchecked(scan.matrix().clone(), pivots));
            }
            self.scan = None;
            self.next_set += 1;
        }
    }
}

/// Brute-force count of the distinct-column locus in `Gr(r, n; F_p)`:
/// enumerate every RREF and keep those whose columns are pairwise distinct
/// and nonzero. Partitioned by pivot set, so it parallelizes; the result does
/// not depend on the worker count.
pub fn grdc_brute_count(field: PrimeField, r: usize, n: usize, cap: u64) -> Result<BigInt> {
    assert!(r >= 1 && n >= 1, "grdc_brute_count needs r, n >= 1");
    let total = gaussian_binomial(r as u32, n as u32, field.p() as u64);
    if total > BigInt::from(cap) {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    let pivot_sets: Vec<Vec<usize>> = combinations(n, r).collect();
    let count: u64 = pivot_sets
        .par_iter()
        .map(|ps| {
            let mut local = 0u64;
            let mut scan = PivotScan::new(field, n, ps);
            while scan.advance() {
                if scan.matrix().columns_distinct_nonzero() {
                    local += 1;
                }
            }
            local
        })
        .sum();
    Ok(BigInt::from(count))
}

/// Rank-1 distinct-column count: `(q-2)(q-3)...(q-n)`, the number of ways to
/// fill the non-pivot entries of `[1, a_2, ..., a_n]` with distinct values
/// outside `{0, 1}`. Equals 1 at `n = 1` and 0 for all `n > q - 1`.
pub fn grdc_r1_count(n: u64, q: u64) -> BigInt {
    assert!(n >= 1 && q >= 2, "grdc_r1_count needs n >= 1, q >= 2");
    falling_product(&BigInt::from(q), 1, n)
}

/// Distinct-column counts for rank `r` over `F_q`, for every
/// `n = r ..= min(n_max, q^r - 1)`, via the last-pivot recursion
///
/// ```text
/// G_{r+1}(n) = sum_{k=r+1}^{n} G_r(k-1) * prod_{j=k+1}^{n} (q^{r+1} - j),
/// ```
///
/// evaluated incrementally as `S(n) = S(n-1) * (q^{r+1} - n) + G_r(n-1)`.
fn levels_upto(r: u32, q: u64, n_max: u64) -> Vec<BigInt> {
    assert!(r >= 1 && q >= 2);
    let level_cap = |rr: u32| -> u64 {
        // min(n_max, q^rr - 1) without overflowing u64.
        let bound = BigInt::from(q).pow(rr) - 1;
        if bound <= BigInt::from(n_max) {
            u64::try_from(bound).expect("bound fits by comparison")
        } else {
            n_max
        }
    };

    // Level 1: G(1) = 1, G(n) = G(n-1) * (q - n).
    let mut cur: Vec<BigInt> = Vec::new();
    let top = level_cap(1);
    if top >= 1 {
        cur.push(BigInt::one());
        for n in 2..=top {
            let prev = cur.last().unwrap().clone();
            cur.push(prev * (BigInt::from(q) - BigInt::from(n)));
        }
    }

    for level in 2..=r {
        let qq = BigInt::from(q).pow(level);
        let lower_start = (level - 1) as u64; // cur[0] is G_{level-1}(level-1)
        let lower = |n: u64, table: &[BigInt]| -> BigInt {
            if n < lower_start || (n - lower_start) as usize >= table.len() {
                BigInt::zero()
            } else {
                table[(n - lower_start) as usize].clone()
            }
        };
        let mut next: Vec<BigInt> = Vec::new();
        let top = level_cap(level);
        let start = level as u64;
        if top >= start {
            next.push(lower(start - 1, &cur)); // empty product term
            for n in start + 1..=top {
                let s = next.last().unwrap() * (&qq - BigInt::from(n)) + lower(n - 1, &cur);
                next.push(s);
            }
        }
        cur = next;
    }
    cur
}

/// Distinct-column count of `Gr(r, n; F_q)` by the exact recursion. Returns 0
/// outside the feasible window `r <= n <= q^r - 1`. Works for any integer
/// `q >= 2`, prime power or not.
pub fn grdc_recursive_count(r: u32, n: u64, q: u64) -> BigInt {
    assert!(r >= 1 && q >= 2, "grdc_recursive_count needs r >= 1, q >= 2");
    if n < r as u64 || BigInt::from(n) > BigInt::from(q).pow(r) - 1 {
        return BigInt::zero();
    }
    let table = levels_upto(r, q, n);
    table[(n - r as u64) as usize].clone()
}

/// One `(q, r, n, count)` row of a count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub q: u64,
    pub r: u32,
    pub n: u64,
    pub count: BigInt,
}

/// Table of distinct-column Grassmannian counts: the CSV form is
/// `q,r,n,count` with one header line, LF endings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,r,n,count\n");
        for row in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", row.q, row.r, row.n, row.count));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "q": row.q,
                    "r": row.r,
                    "n": row.n,
                    "count": row.count.to_string(),
                })
            })
            .collect::<Vec<_>>())
    }
}

/// Recursive counts for `n = r ..= n_max` (rows beyond `q^r - 1` are zero).
pub fn grdc_count_table(r: u32, q: u64, n_max: u64) -> CountTable {
    let table = levels_upto(r, q, n_max);
    let mut rows = Vec::new();
    for n in r as u64..=n_max {
        let idx = (n - r as u64) as usize;
        let count = table.get(idx).cloned().unwrap_or_else(BigInt::zero);
        rows.push(CountRow { q, r, n, count });
    }
    CountTable { rows }
}

/// Number of ordered `m`-tuples of distinct points in an `ambient`-point
/// space avoiding `excluded` fixed points:
/// `prod_{i=0}^{m-1} (ambient - excluded - i)`; zero by pigeonhole when
/// `excluded + m > ambient`.
pub fn conf_count(m: u64, ambient: &BigInt, excluded: u64) -> BigInt {
    let avail = ambient - BigInt::from(excluded);
    if avail < BigInt::from(m) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= &avail - BigInt::from(i);
    }
    acc
}

/// Partition of the distinct-column locus of `Gr(r1, n; F_p)` by the last
/// pivot column `k` (1-based). Every `k` in `r1..=n` is present in the map,
/// including zero strata.
pub fn yk_partition(
    field: PrimeField,
    r1: usize,
    n: usize,
    cap: u64,
) -> Result<BTreeMap<u64, BigInt>> {
    assert!(r1 >= 1 && n >= r1, "yk_partition needs 1 <= r1 <= n");
    let total = gaussian_binomial(r1 as u32, n as u32, field.p() as u64);
    if total > BigInt::from(cap) {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    let mut map: BTreeMap<u64, BigInt> =
        (r1 as u64..=n as u64).map(|k| (k, BigInt::zero())).collect();
    for ps in combinations(n, r1) {
        let mut scan = PivotScan::new(field, n, &ps);
        let mut local = 0u64;
        while scan.advance() {
            if scan.matrix().columns_distinct_nonzero() {
                local += 1;
            }
        }
        *map.get_mut(&(scan.last_pivot() as u64)).unwrap() += BigInt::from(local);
    }
    Ok(map)
}
