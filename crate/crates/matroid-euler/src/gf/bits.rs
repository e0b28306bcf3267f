//! Bit-packed matrices over GF(2): one `u64` word per row, row operations are
//! single XORs. Semantics must match the generic path in `gf` exactly; the
//! cross-tests live there.

/// Row-bitmask matrix over GF(2); bit `j` of `rows[i]` is entry `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    pub rows: Vec<u64>,
    pub cols: usize,
}

impl BitMatrix {
    pub fn new(rows: Vec<u64>, cols: usize) -> Self {
        debug_assert!(cols <= 64);
        debug_assert!(rows.iter().all(|&r| cols == 64 || r < (1u64 << cols)));
        BitMatrix { rows, cols }
    }

    /// In-place reduction to RREF; returns 0-based pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(src) = (row..self.rows.len()).find(|&i| self.rows[i] & bit != 0) else {
                continue;
            };
            self.rows.swap(row, src);
            let pivot_row = self.rows[row];
            for (i, r) in self.rows.iter_mut().enumerate() {
                if i != row && *r & bit != 0 {
                    *r ^= pivot_row;
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref_in_place().len()
    }

    /// Determinant of a square bit matrix: 1 iff full rank.
    pub fn det(self) -> u8 {
        let n = self.rows.len();
        debug_assert_eq!(n, self.cols);
        u8::from(self.rank() == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_swap_matrix() {
        let mut m = BitMatrix::new(vec![0b10, 0b01], 2);
        let pivots = m.rref_in_place();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rows, vec![0b01, 0b10]);
    }

    #[test]
    fn singular_det_is_zero() {
        assert_eq!(BitMatrix::new(vec![0b11, 0b11], 2).det(), 0);
        assert_eq!(BitMatrix::new(vec![0b01, 0b10], 2).det(), 1);
    }
}
