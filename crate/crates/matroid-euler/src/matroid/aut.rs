//! Backtracking search over ground-set relabelings: automorphism group
//! order, parity of automorphisms, and the canonical (lexicographically
//! least) form. Searches assign images one element at a time, prune with
//! basis-degree invariants and partial basis checks, and abort with
//! [`Error::SearchBudget`] if the tree grows past a fixed node budget.

use super::Matroid;
use crate::exact::{binomial, factorial, BigInt};
use crate::subsets::combinations;
use crate::{Error, Result};

const MAX_N: usize = 12;
const NODE_BUDGET: u64 = 20_000_000;

fn check_size(m: &Matroid, what: &'static str) -> Result<()> {
    if m.n() > MAX_N {
        return Err(Error::SizeLimit { what, limit: MAX_N, got: m.n() });
    }
    Ok(())
}

fn is_uniform(m: &Matroid) -> bool {
    BigInt::from(m.num_bases()) == binomial(m.n() as i64, m.rank() as i64)
}

/// Per-element and per-pair basis counts; cheap isomorphism invariants used
/// to rule out candidate images before the exact basis checks run.
struct Degrees {
    deg: Vec<u32>,
    codeg: Vec<Vec<u32>>,
}

impl Degrees {
    fn of(m: &Matroid) -> Degrees {
        let n = m.n();
        let mut deg = vec![0u32; n];
        let mut codeg = vec![vec![0u32; n]; n];
        for &b in m.bases() {
            let elems: Vec<usize> = (0..n).filter(|&e| b & (1 << e) != 0).collect();
            for (i, &e) in elems.iter().enumerate() {
                deg[e] += 1;
                for &f in &elems[i + 1..] {
                    codeg[e][f] += 1;
                    codeg[f][e] += 1;
                }
            }
        }
        Degrees { deg, codeg }
    }
}

struct AutSearch<'a> {
    m: &'a Matroid,
    degrees: Degrees,
    img: Vec<usize>,
    used: u64,
    nodes: u64,
    /// Each found automorphism is reported here; returning `false` aborts.
    visit: &'a mut dyn FnMut(&[usize]) -> bool,
}

impl AutSearch<'_> {
    /// Extend the partial map `img[0..depth]` by all consistent images of
    /// element `depth`. Returns `Ok(false)` when the visitor aborted.
    fn run(&mut self, depth: usize) -> Result<bool> {
        let n = self.m.n();
        if depth == n {
            return Ok((self.visit)(&self.img));
        }
        for cand in 0..n {
            if self.used & (1 << cand) != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > NODE_BUDGET {
                return Err(Error::SearchBudget { what: "automorphism search" });
            }
            if !self.candidate_consistent(depth, cand) {
                continue;
            }
            self.img[depth] = cand;
            self.used |= 1 << cand;
            let keep_going = self.run(depth + 1)?;
            self.used &= !(1 << cand);
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn candidate_consistent(&self, depth: usize, cand: usize) -> bool {
        let d = &self.degrees;
        if d.deg[cand] != d.deg[depth] {
            return false;
        }
        for prev in 0..depth {
            if d.codeg[cand][self.img[prev]] != d.codeg[depth][prev] {
                return false;
            }
        }
        // Exact condition on the assigned prefix: r-subsets through `depth`
        // must map bases to bases and non-bases to non-bases.
        let r = self.m.rank();
        if depth + 1 < r {
            return true;
        }
        for comb in combinations(depth, r - 1) {
            let mut dom = 1u64 << depth;
            let mut image = 1u64 << cand;
            for &e in &comb {
                dom |= 1 << e;
                image |= 1 << self.img[e];
            }
            if self.m.is_basis(dom) != self.m.is_basis(image) {
                return false;
            }
        }
        true
    }
}

fn search_automorphisms(m: &Matroid, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<()> {
    let mut search = AutSearch {
        m,
        degrees: Degrees::of(m),
        img: vec![0; m.n()],
        used: 0,
        nodes: 0,
        visit,
    };
    search.run(0)?;
    Ok(())
}

pub(super) fn aut_order(m: &Matroid) -> Result<BigInt> {
    check_size(m, "automorphism search ground set")?;
    if is_uniform(m) {
        return Ok(factorial(m.n() as u64));
    }
    let mut count: u64 = 0;
    search_automorphisms(m, &mut |_| {
        count += 1;
        true
    })?;
    Ok(BigInt::from(count))
}

fn is_odd_permutation(img: &[usize]) -> bool {
    let n = img.len();
    let mut seen = vec![false; n];
    let mut cycles = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = img[at];
        }
    }
    (n - cycles) % 2 == 1
}

pub(super) fn is_alternating(m: &Matroid) -> Result<bool> {
    const MAX_N_PARITY: usize = 10;
    if m.n() > MAX_N_PARITY {
        return Err(Error::SizeLimit {
            what: "alternating-group check ground set",
            limit: MAX_N_PARITY,
            got: m.n(),
        });
    }
    if is_uniform(m) {
        // Aut = S_n, which contains odd permutations once n >= 2.
        return Ok(m.n() == 1);
    }
    let mut all_even = true;
    search_automorphisms(m, &mut |img| {
        if is_odd_permutation(img) {
            all_even = false;
            return false;
        }
        true
    })?;
    Ok(all_even)
}

/// Outcome of comparing a branch's partial basis list against the prefix of
/// the best complete list found so far.
enum PrefixCmp {
    Better,
    Tie,
    Worse,
}

struct CanonSearch<'a> {
    m: &'a Matroid,
    /// `chosen[k]` = original element relabeled to `k` (both 0-based).
    chosen: Vec<usize>,
    chosen_mask: u64,
    /// Original element -> new label for the assigned prefix.
    new_label: Vec<usize>,
    best: Vec<u64>,
    nodes: u64,
}

impl CanonSearch<'_> {
    /// Sorted masks, in new labels, of the bases contained in the chosen set.
    fn partial_list(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &b in self.m.bases() {
            if b & !self.chosen_mask != 0 {
                continue;
            }
            let mut rel = 0u64;
            let mut rest = b;
            while rest != 0 {
                let e = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                rel |= 1 << self.new_label[e];
            }
            out.push(rel);
        }
        out.sort_unstable();
        out
    }

    /// Compare against the best list restricted to masks below `2^(k+1)`,
    /// where `k+1` elements have been chosen. Any completion of this branch
    /// extends `partial` only with masks >= `2^(k+1)`, so the comparison
    /// decides the whole subtree when it is strict.
    fn compare_prefix(&self, partial: &[u64], k: usize) -> PrefixCmp {
        let bound = 1u64 << (k + 1);
        let best_prefix_len = self.best.partition_point(|&b| b < bound);
        let bp = &self.best[..best_prefix_len];
        for (a, b) in partial.iter().zip(bp.iter()) {
            if a < b {
                return PrefixCmp::Better;
            }
            if a > b {
                return PrefixCmp::Worse;
            }
        }
        match partial.len().cmp(&bp.len()) {
            std::cmp::Ordering::Greater => PrefixCmp::Better,
            std::cmp::Ordering::Equal => PrefixCmp::Tie,
            std::cmp::Ordering::Less => PrefixCmp::Worse,
        }
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        let n = self.m.n();
        if depth == n {
            let full = self.partial_list();
            if full < self.best {
                self.best = full;
            }
            return Ok(());
        }
        for cand in 0..n {
            if self.chosen_mask & (1 << cand) != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > NODE_BUDGET {
                return Err(Error::SearchBudget { what: "canonical form search" });
            }
            self.chosen.push(cand);
            self.chosen_mask |= 1 << cand;
            self.new_label[cand] = depth;
            let partial = self.partial_list();
            let verdict = self.compare_prefix(&partial, depth);
            if !matches!(verdict, PrefixCmp::Worse) {
                self.run(depth + 1)?;
            }
            self.chosen.pop();
            self.chosen_mask &= !(1 << cand);
        }
        Ok(())
    }
}

pub(super) fn canonical_form(m: &Matroid) -> Result<Matroid> {
    check_size(m, "canonical form ground set")?;
    let (n, r) = (m.n(), m.rank());
    if m.num_bases() == 1 {
        // The single basis can always be relabeled to {1, ..., r}.
        return Matroid::from_masks(n, vec![(1u64 << r) - 1]);
    }
    if is_uniform(m) {
        // Every relabeling fixes the full r-subset family.
        return Ok(m.clone());
    }
    let mut search = CanonSearch {
        m,
        chosen: Vec::with_capacity(n),
        chosen_mask: 0,
        new_label: vec![0; n],
        best: m.bases().to_vec(),
        nodes: 0,
    };
    search.run(0)?;
    Matroid::from_masks(n, search.best)
}
