//! Isomorphism classes of simple matroids realizable over a prime field.
//!
//! Binary classes come from a fast combinatorial route: a simple binary
//! matroid of rank `r` on `n` elements is exactly an `n`-subset of the
//! `2^r - 1` nonzero vectors of `F_2^r` that spans, two subsets give
//! isomorphic matroids iff they lie in one `GL_r(F_2)` orbit, and the
//! automorphism group is the set stabilizer. So we sweep subset bitmasks in
//! increasing order, flood-fill each orbit with group generators, and read
//! automorphism orders off orbit sizes. Classes over odd primes fall back to
//! enumerating Grassmannian points and deduplicating by canonical form.

use std::collections::BTreeMap;

use super::{glq_order, Matroid};
use crate::exact::{exact_div, factorial, BigInt};
use crate::gf::{GFMatrix, PrimeField};
use crate::grassmann::subspaces;
use crate::subsets::masks_of_weight;
use crate::{Error, Result};

/// One isomorphism class of simple rank-`r` matroids on `n` labeled
/// elements: a representative, the automorphism group order, and the number
/// of labeled matroids in the class (`n! / aut_order`).
#[derive(Clone, Debug)]
pub struct IsoClass {
    pub representative: Matroid,
    pub aut_order: BigInt,
    pub labeled_count: BigInt,
}

impl IsoClass {
    pub fn n(&self) -> usize {
        self.representative.n()
    }

    pub fn rank(&self) -> usize {
        self.representative.rank()
    }
}

/// The two standard generators of `GL_r(F_2)` as permutations of the nonzero
/// vectors `1..2^r - 1` (a cyclic basis rotation and the transvection adding
/// coordinate 1 to coordinate 2); index 0 is unused. For `r = 1` the group
/// is trivial.
fn gl2_generators(r: usize) -> Vec<Vec<u16>> {
    let size = 1usize << r;
    if r == 1 {
        return vec![vec![0, 1]];
    }
    let mut rotate = vec![0u16; size];
    let mut transvect = vec![0u16; size];
    for v in 1..size {
        rotate[v] = (((v << 1) | (v >> (r - 1))) & (size - 1)) as u16;
        transvect[v] = (v ^ ((v & 1) << 1)) as u16;
    }
    vec![rotate, transvect]
}

/// Image of a point-subset bitmask (bit `v-1` = vector `v`) under a vector
/// permutation.
fn apply_point_perm(mask: u64, perm: &[u16]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize + 1;
        rest &= rest - 1;
        out |= 1 << (perm[v] - 1);
    }
    out
}

/// Does the set of vectors in `mask` span `F_2^r`? Gaussian elimination on
/// the vector values themselves.
fn spans_f2(mask: u64, r: usize) -> bool {
    let mut pivot = [0u32; 6];
    let mut rank = 0usize;
    let mut rest = mask;
    while rest != 0 {
        let mut v = rest.trailing_zeros() + 1;
        rest &= rest - 1;
        while v != 0 {
            let lead = (31 - v.leading_zeros()) as usize;
            if pivot[lead] == 0 {
                pivot[lead] = v;
                rank += 1;
                break;
            }
            v ^= pivot[lead];
        }
        if rank == r {
            return true;
        }
    }
    false
}

/// Matroid of the columns listed by a point-subset bitmask, columns in
/// increasing vector order.
fn matroid_of_points(mask: u64, r: usize) -> Result<Matroid> {
    let field = PrimeField::new(2).expect("2 is prime");
    let n = mask.count_ones() as usize;
    let mut a = GFMatrix::zero(field, r, n);
    let mut rest = mask;
    let mut j = 0usize;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize + 1;
        rest &= rest - 1;
        for i in 0..r {
            if v & (1 << i) != 0 {
                a.set(i, j, 1);
            }
        }
        j += 1;
    }
    Matroid::from_matrix(&a)
}

/// All isomorphism classes of simple binary matroids of rank `r` on `n`
/// elements, ordered by their least point subset. The representative is the
/// matroid of that least subset (columns in increasing vector order), not
/// the generic canonical form — apply [`Matroid::canonical_form`] if the
/// relabeling-minimal form is needed.
pub fn enumerate_binary_classes(r: usize, n: usize) -> Result<Vec<IsoClass>> {
    if r < 1 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    if r > 4 {
        return Err(Error::SizeLimit { what: "binary class enumeration rank", limit: 4, got: r });
    }
    let points = (1usize << r) - 1;
    if n < r || n > points {
        return Ok(Vec::new());
    }
    let generators = gl2_generators(r);
    let group_order = glq_order(r as u32, 2);
    let nfact = factorial(n as u64);
    let mut visited = vec![false; 1usize << points];
    let mut classes = Vec::new();
    let mut stack: Vec<u64> = Vec::new();

    for seed in masks_of_weight(points as u32, n as u32) {
        if visited[seed as usize] {
            continue;
        }
        visited[seed as usize] = true;
        stack.push(seed);
        let mut orbit_size = 0u64;
        while let Some(mask) = stack.pop() {
            orbit_size += 1;
            for perm in &generators {
                let image = apply_point_perm(mask, perm);
                if !visited[image as usize] {
                    visited[image as usize] = true;
                    stack.push(image);
                }
            }
        }
        if !spans_f2(seed, r) {
            continue;
        }
        // Orbit-stabilizer: |Aut| = |GL_r(F_2)| / orbit size, and the class
        // holds one labeled matroid per relabeling coset: n! / |Aut|.
        let aut_order = exact_div(&group_order, &BigInt::from(orbit_size));
        let labeled_count = exact_div(&nfact, &aut_order);
        classes.push(IsoClass {
            representative: matroid_of_points(seed, r)?,
            aut_order,
            labeled_count,
        });
    }
    Ok(classes)
}

/// All isomorphism classes of simple rank-`r` matroids on `n` elements
/// realizable over the given prime field, by brute enumeration of
/// Grassmannian points and canonical-form deduplication. Representatives are
/// canonical forms; classes are ordered by them.
pub fn enumerate_fp_classes(
    field: PrimeField,
    r: usize,
    n: usize,
    cap: u64,
) -> Result<Vec<IsoClass>> {
    if n > 12 {
        return Err(Error::SizeLimit { what: "field class enumeration ground set", limit: 12, got: n });
    }
    let nfact = factorial(n as u64);
    let mut by_canon: BTreeMap<Vec<u64>, IsoClass> = BTreeMap::new();
    for s in subspaces(field, r, n, cap)? {
        if !s.matrix().columns_distinct_nonzero() {
            continue;
        }
        let m = Matroid::from_matrix(s.matrix())?;
        // Distinct nonzero columns is simplicity over F_2 but only necessary
        // over odd primes, where scalar multiples are parallel elements.
        if field.p() != 2 && !m.is_simple() {
            continue;
        }
        let canon = m.canonical_form()?;
        let key = canon.bases().to_vec();
        if by_canon.contains_key(&key) {
            continue;
        }
        let aut_order = canon.aut_order()?;
        let labeled_count = exact_div(&nfact, &aut_order);
        by_canon.insert(key, IsoClass { representative: canon, aut_order, labeled_count });
    }
    Ok(by_canon.into_values().collect())
}

/// CSV table of classes: `r,n,class_index,aut_order,labeled_count,num_bases`
/// with `class_index` 1-based in listing order.
pub fn iso_classes_to_csv(classes: &[IsoClass]) -> String {
    let mut out = String::from("r,n,class_index,aut_order,labeled_count,num_bases\n");
    for (idx, c) in classes.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.rank(),
            c.n(),
            idx + 1,
            c.aut_order,
            c.labeled_count,
            c.representative.num_bases()
        ));
    }
    out
}

/// JSON array of classes with the representative's bases inlined.
pub fn iso_classes_to_json(classes: &[IsoClass]) -> String {
    let items: Vec<serde_json::Value> = classes
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            serde_json::json!({
                "r": c.rank(),
                "n": c.n(),
                "class_index": idx + 1,
                "aut_order": c.aut_order.to_string(),
                "labeled_count": c.labeled_count.to_string(),
                "num_bases": c.representative.num_bases(),
                "bases": c.representative.bases_as_sets(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::Value::Array(items)).expect("serialization cannot fail")
}
