//! Small subset-iteration helpers shared by the matrix and matroid code.

/// Lexicographic `k`-combinations of `0..n` (0-based indices).
pub(crate) struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

pub(crate) fn combinations(n: usize, k: usize) -> Combinations {
    let state = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    Combinations { n, k, state }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.state.as_ref()?.clone();
        // Advance: rightmost index that can still move right.
        let state = self.state.as_mut().unwrap();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if state[i] + (self.k - i) < self.n {
                state[i] += 1;
                for j in i + 1..self.k {
                    state[j] = state[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

/// Bitmasks of `0..2^n` with exactly `k` bits set, ascending (Gosper's hack).
pub(crate) fn masks_of_weight(n: u32, k: u32) -> impl Iterator<Item = u64> {
    let end: u64 = 1 << n;
    let start: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    std::iter::successors(Some(start), move |&m| {
        if m == 0 {
            return None; // only the empty set has weight 0
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        Some((((r ^ m) >> 2) / c) | r)
    })
    .take_while(move |&m| m < end)
}
