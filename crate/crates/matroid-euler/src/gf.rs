//! Dense matrices over prime fields `F_p` (p <= 31): reduced row-echelon
//! form, determinants, Plücker coordinates, and the distinct-nonzero-column
//! predicates that carve the open stratum out of the Grassmannian.
//!
//! Row/column *accessors* are 0-based like any Rust container; everything
//! user-facing (pivot lists, Plücker index sets) is reported 1-based.

mod bits;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::subsets::combinations;
use crate::{Error, Result};

pub(crate) use bits::BitMatrix;

const SMALL_PRIMES: [u32; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

/// A prime field `F_p` with `2 <= p <= 31`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if SMALL_PRIMES.contains(&p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::BadModulus(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p - b as u32) % self.p) as u8
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            (self.p - a as u32) as u8
        }
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // p is tiny; Fermat is plenty.
        let mut acc = 1u32;
        for _ in 0..self.p - 2 {
            acc = acc * a as u32 % self.p;
        }
        acc as u8
    }
}

/// Dense row-major matrix over a prime field. Entries are residues in
/// `[0, p)`; the shape is fixed at construction (at least 1x1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GFMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of row reduction: the RREF matrix, its rank, and the 1-based pivot
/// columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: GFMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    p: u32,
    rows: Vec<Vec<u8>>,
}

impl GFMatrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix shape {rows}x{cols} must be at least 1x1"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "matrix data length {} does not match shape {rows}x{cols}",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v as u32 >= field.p()) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} is not a residue mod {}",
                field.p()
            )));
        }
        Ok(GFMatrix { field, rows, cols, data })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u8>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        GFMatrix::new(field, r, c, rows.concat())
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut data = vec![0u8; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        GFMatrix { field, rows: n, cols: n, data }
    }

    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        GFMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    /// Set entry at 0-based `(i, j)`; the value must already be reduced.
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!((v as u32) < self.field.p());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Matrix product `self * rhs`.
    pub fn mat_mul(&self, rhs: &GFMatrix) -> Result<GFMatrix> {
        if self.field != rhs.field || self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.field.p();
        let mut out = GFMatrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u32;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = (out.get(i, j) as u32 + a * rhs.get(k, j) as u32) % p;
                    out.set(i, j, v as u8);
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn to_bits(&self) -> BitMatrix {
        debug_assert_eq!(self.field.p(), 2);
        debug_assert!(self.cols <= 64);
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (j, &v)| m | ((v as u64) << j))
            })
            .collect();
        BitMatrix::new(rows, self.cols)
    }

    pub(crate) fn from_bits(field: PrimeField, bits: &BitMatrix) -> GFMatrix {
        debug_assert_eq!(field.p(), 2);
        let mut out = GFMatrix::zero(field, bits.rows.len(), bits.cols);
        for (i, &row) in bits.rows.iter().enumerate() {
            for j in 0..bits.cols {
                out.set(i, j, ((row >> j) & 1) as u8);
            }
        }
        out
    }

    /// Reduced row-echelon form. Unique for a given row space; pivots are
    /// 1-based column indices. Over GF(2) this runs on bit-packed rows.
    pub fn rref(&self) -> Rref {
        if self.field.p() == 2 && self.cols <= 64 {
            let mut bits = self.to_bits();
            let pivots0 = bits.rref_in_place();
            return Rref {
                matrix: GFMatrix::from_bits(self.field, &bits),
                rank: pivots0.len(),
                pivots: pivots0.iter().map(|&c| c + 1).collect(),
            };
        }
        self.rref_generic()
    }

    /// Generic-field elimination; kept callable so the GF(2) fast path can be
    /// cross-checked against it.
    pub(crate) fn rref_generic(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(src) = (row..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            if src != row {
                for j in 0..m.cols {
                    let (a, b) = (m.get(row, j), m.get(src, j));
                    m.set(row, j, b);
                    m.set(src, j, a);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in 0..m.cols {
                m.set(row, j, f.mul(inv, m.get(row, j)));
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col) == 0 {
                    continue;
                }
                let factor = m.get(i, col);
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col + 1);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        if self.field.p() == 2 && self.cols <= 64 {
            return self.to_bits().rank();
        }
        self.rref_generic().rank
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<u8> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.field.p() == 2 && self.cols <= 64 {
            return Ok(self.to_bits().det());
        }
        Ok(self.det_generic())
    }

    pub(crate) fn det_generic(&self) -> u8 {
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det: u8 = 1;
        for col in 0..n {
            let Some(src) = (col..n).find(|&i| m.get(i, col) != 0) else {
                return 0;
            };
            if src != col {
                for j in 0..n {
                    let (a, b) = (m.get(col, j), m.get(src, j));
                    m.set(col, j, b);
                    m.set(src, j, a);
                }
                det = f.neg(det);
            }
            let pivot = m.get(col, col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for i in col + 1..n {
                if m.get(i, col) == 0 {
                    continue;
                }
                let factor = f.mul(m.get(i, col), inv);
                for j in col..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// All maximal-minor determinants of a full-row-rank matrix, keyed by the
    /// 1-based column subsets.
    pub fn plucker(&self) -> Result<PluckerVector> {
        if self.cols > 12 {
            return Err(Error::SizeLimit { what: "plucker columns", limit: 12, got: self.cols });
        }
        if self.rank() != self.rows {
            return Err(Error::RankDeficient { rank: self.rank(), rows: self.rows });
        }
        let mut coords = BTreeMap::new();
        for comb in combinations(self.cols, self.rows) {
            let mut sub = GFMatrix::zero(self.field, self.rows, self.rows);
            for (jj, &j) in comb.iter().enumerate() {
                for i in 0..self.rows {
                    sub.set(i, jj, self.get(i, j));
                }
            }
            let key: Vec<usize> = comb.iter().map(|&j| j + 1).collect();
            coords.insert(key, sub.det()?);
        }
        Ok(PluckerVector { r: self.rows, n: self.cols, field: self.field, coords })
    }

    /// Direct check that all columns are nonzero and pairwise distinct (the
    /// defining condition of the distinct-column stratum). Scalar multiples
    /// count as distinct.
    pub fn columns_distinct_nonzero(&self) -> bool {
        let p = self.field.p() as u64;
        // Code each column as a base-p integer when that fits a u64.
        let bits_per = 64 - (p - 1).leading_zeros() as usize;
        if self.rows * bits_per <= 64 {
            let mut codes = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                let mut code = 0u64;
                for i in 0..self.rows {
                    code = code * p + self.get(i, j) as u64;
                }
                if code == 0 {
                    return false;
                }
                codes.push(code);
            }
            for a in 0..codes.len() {
                for b in a + 1..codes.len() {
                    if codes[a] == codes[b] {
                        return false;
                    }
                }
            }
            return true;
        }
        for j in 0..self.cols {
            if (0..self.rows).all(|i| self.get(i, j) == 0) {
                return false;
            }
            for jj in j + 1..self.cols {
                if (0..self.rows).all(|i| self.get(i, j) == self.get(i, jj)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        let dto = MatrixJson {
            p: self.field.p(),
            rows: (0..self.rows).map(|i| self.row(i).to_vec()).collect(),
        };
        serde_json::to_string(&dto).expect("matrix serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<GFMatrix> {
        let dto: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        let field = PrimeField::new(dto.p)?;
        GFMatrix::from_rows(field, &dto.rows)
    }
}

/// Plücker coordinate vector of a full-row-rank `r x n` matrix; coordinates
/// are indexed by sorted 1-based `r`-subsets of the columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    r: usize,
    n: usize,
    field: PrimeField,
    coords: BTreeMap<Vec<usize>, u8>,
}

impl PluckerVector {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinate for a sorted 1-based `r`-subset.
    pub fn coord(&self, subset: &[usize]) -> u8 {
        *self
            .coords
            .get(subset)
            .unwrap_or_else(|| panic!("no Plücker coordinate for {subset:?}"))
    }

    pub fn coords(&self) -> &BTreeMap<Vec<usize>, u8> {
        &self.coords
    }

    /// Decide membership in the distinct-column stratum from Plücker data
    /// alone (no access to the matrix).
    ///
    /// Column `i` is nonzero iff some coordinate through `i` is nonzero.
    /// Columns `i < j` are distinct iff either some coordinate through both is
    /// nonzero (an invertible minor cannot repeat a column), or some pair
    /// `p_{I+i}`, `p_{I+j}` breaks the sign-adjusted equality
    /// `p_{I+j} = (-1)^m p_{I+i}` that equal columns force, where `m` counts
    /// elements of `I` strictly between `i` and `j` (the column shuffle
    /// crosses `m` positions).
    pub fn distinct_columns(&self) -> bool {
        let f = self.field;
        for i in 1..=self.n {
            let others: Vec<usize> = (1..=self.n).filter(|&e| e != i).collect();
            let nonzero = combinations(others.len(), self.r - 1).any(|c| {
                let mut key: Vec<usize> = c.iter().map(|&t| others[t]).collect();
                key.push(i);
                key.sort_unstable();
                self.coord(&key) != 0
            });
            if !nonzero {
                return false;
            }
        }
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let others: Vec<usize> =
                    (1..=self.n).filter(|&e| e != i && e != j).collect();
                let mut distinct = false;
                if self.r >= 2 {
                    distinct = combinations(others.len(), self.r - 2).any(|c| {
                        let mut key: Vec<usize> = c.iter().map(|&t| others[t]).collect();
                        key.push(i);
                        key.push(j);
                        key.sort_unstable();
                        self.coord(&key) != 0
                    });
                }
                if !distinct {
                    distinct = combinations(others.len(), self.r - 1).any(|c| {
                        let set: Vec<usize> = c.iter().map(|&t| others[t]).collect();
                        let m = set.iter().filter(|&&e| i < e && e < j).count();
                        let mut with_i = set.clone();
                        with_i.push(i);
                        with_i.sort_unstable();
                        let mut with_j = set;
                        with_j.push(j);
                        with_j.sort_unstable();
                        let lhs = self.coord(&with_j);
                        let rhs = if m % 2 == 0 {
                            self.coord(&with_i)
                        } else {
                            f.neg(self.coord(&with_i))
                        };
                        lhs != rhs
                    });
                }
                if !distinct {
                    return false;
                }
            }
        }
        true
    }
}
