//! Balanced parentheses with a range-min excess tree.
//!
//! `1` = `(`, `0` = `)`. `excess(p)` is the excess *after* reading position
//! `p` (0-based). Leaves of the min tree cover `BLK` positions.

use crate::bits::BitSeq;

const BLK: usize = 256;

const fn byte_tables() -> ([i8; 256], [i8; 256]) {
    let mut delta = [0i8; 256];
    let mut minp = [0i8; 256];
    let mut x = 0;
    while x < 256 {
        let mut e = 0i8;
        let mut m = i8::MAX;
        let mut k = 0;
        while k < 8 {
            e += if (x >> k) & 1 == 1 { 1 } else { -1 };
            if e < m {
                m = e;
            }
            k += 1;
        }
        delta[x] = e;
        minp[x] = m;
        x += 1;
    }
    (delta, minp)
}

const TABLES: ([i8; 256], [i8; 256]) = byte_tables();
const DELTA: [i8; 256] = TABLES.0;
const MINP: [i8; 256] = TABLES.1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bp {
    bits: BitSeq,
    /// Segment tree of block minima, `leaves` leaves starting at index `leaves`.
    tree: Vec<i32>,
    leaves: usize,
}

impl Bp {
    pub fn new(bits: BitSeq) -> Self {
        let n = bits.len();
        let nblk = n.div_ceil(BLK).max(1);
        let leaves = nblk.next_power_of_two();
        let mut tree = vec![i32::MAX; 2 * leaves];
        let mut e = 0i32;
        for p in 0..n {
            e += if bits.get(p) { 1 } else { -1 };
            let leaf = leaves + p / BLK;
            tree[leaf] = tree[leaf].min(e);
        }
        for i in (1..leaves).rev() {
            tree[i] = tree[2 * i].min(tree[2 * i + 1]);
        }
        Bp { bits, tree, leaves }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &BitSeq {
        &self.bits
    }

    #[inline]
    pub fn excess(&self, p: usize) -> i32 {
        2 * self.bits.rank1(p + 1) as i32 - (p + 1) as i32
    }

    #[inline]
    fn byte_at(&self, b: usize) -> usize {
        ((self.bits.words()[b / 8] >> (8 * (b % 8))) & 0xff) as usize
    }

    /// First `q` in `[from, to)` with `excess(q) <= target`, given `e = excess(from - 1)`.
    fn scan_fwd(&self, from: usize, to: usize, mut e: i32, target: i32) -> Option<usize> {
        let mut p = from;
        while p < to {
            if p % 8 == 0 && p + 8 <= to {
                let b = self.byte_at(p / 8);
                if e + (MINP[b] as i32) > target {
                    e += DELTA[b] as i32;
                    p += 8;
                    continue;
                }
            }
            e += if self.bits.get(p) { 1 } else { -1 };
            if e <= target {
                return Some(p);
            }
            p += 1;
        }
        None
    }

    /// Last `t` in `[from, to)` with `excess(t) <= target`, given `e = excess(to - 1)`.
    fn scan_bwd(&self, from: usize, to: usize, mut e: i32, target: i32) -> Option<usize> {
        let mut p = to; // exclusive; e = excess(p - 1)
        while p > from {
            if p % 8 == 0 && p >= from + 8 {
                let b = self.byte_at(p / 8 - 1);
                let before = e - DELTA[b] as i32;
                if before + (MINP[b] as i32) > target {
                    e = before;
                    p -= 8;
                    continue;
                }
            }
            if e <= target {
                return Some(p - 1);
            }
            e -= if self.bits.get(p - 1) { 1 } else { -1 };
            p -= 1;
        }
        None
    }

    /// First block index `> b` whose minimum is `<= target`.
    fn next_block(&self, b: usize, target: i32) -> Option<usize> {
        let mut i = self.leaves + b;
        // climb until a right sibling subtree qualifies
        loop {
            if i == 1 {
                return None;
            }
            if i % 2 == 0 && self.tree[i + 1] <= target {
                i += 1;
                break;
            }
            i /= 2;
        }
        while i < self.leaves {
            i = if self.tree[2 * i] <= target { 2 * i } else { 2 * i + 1 };
        }
        Some(i - self.leaves)
    }

    /// Last block index `< b` whose minimum is `<= target`.
    fn prev_block(&self, b: usize, target: i32) -> Option<usize> {
        let mut i = self.leaves + b;
        loop {
            if i == 1 {
                return None;
            }
            if i % 2 == 1 && self.tree[i - 1] <= target {
                i -= 1;
                break;
            }
            i /= 2;
        }
        while i < self.leaves {
            i = if self.tree[2 * i + 1] <= target { 2 * i + 1 } else { 2 * i };
        }
        Some(i - self.leaves)
    }

    /// Smallest `q > p` with `excess(q) = excess(p) + d`, for `d < 0`.
    pub fn fwd_search(&self, p: usize, d: i32) -> Option<usize> {
        debug_assert!(d < 0);
        let e = self.excess(p);
        let target = e + d;
        let n = self.len();
        let b = p / BLK;
        let end = ((b + 1) * BLK).min(n);
        if let Some(q) = self.scan_fwd(p + 1, end, e, target) {
            return Some(q);
        }
        let nb = self.next_block(b, target)?;
        let start = nb * BLK;
        let q = self.scan_fwd(start, (start + BLK).min(n), self.excess_before(start), target);
        debug_assert!(q.is_some());
        q
    }

    /// Largest `t < p` with `excess(t) <= excess(p) + d` (`d <= 0`); `None` stands
    /// for the virtual position −1 (excess 0) when `excess(p) + d >= 0`.
    pub fn bwd_search(&self, p: usize, d: i32) -> Option<usize> {
        let target = self.excess(p) + d;
        let b = p / BLK;
        let start = b * BLK;
        if p > start {
            if let Some(t) = self.scan_bwd(start, p, self.excess(p - 1), target) {
                return Some(t);
            }
        }
        let pb = self.prev_block(b, target)?;
        let s = pb * BLK;
        let e = (s + BLK).min(self.len());
        self.scan_bwd(s, e, self.excess(e - 1), target)
    }

    #[inline]
    fn excess_before(&self, p: usize) -> i32 {
        if p == 0 {
            0
        } else {
            self.excess(p - 1)
        }
    }

    /// Matching `)` of the `(` at `o`.
    pub fn find_close(&self, o: usize) -> usize {
        self.fwd_search(o, -1).expect("unbalanced parentheses")
    }

    /// Matching `(` of the `)` at `c`.
    pub fn find_open(&self, c: usize) -> usize {
        match self.bwd_search(c, 0) {
            Some(t) => t + 1,
            None => 0,
        }
    }

    /// End (exclusive) of the maximal balanced run starting at `p + 1`, i.e. the
    /// first position where the excess drops below `excess(p)`, or `len`.
    pub fn enclosing_end(&self, p: usize) -> usize {
        self.fwd_search(p, -1).unwrap_or(self.len())
    }

    /// Leftmost position of the minimum excess in `[i, j]`.
    pub fn range_min(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < self.len());
        let bi = i / BLK;
        let bj = j / BLK;
        let mut best = (i32::MAX, usize::MAX);
        let scan = |from: usize, to: usize, best: &mut (i32, usize)| {
            let mut e = self.excess_before(from);
            let mut p = from;
            while p < to {
                if p % 8 == 0 && p + 8 <= to {
                    let b = self.byte_at(p / 8);
                    if e + (MINP[b] as i32) >= best.0 {
                        e += DELTA[b] as i32;
                        p += 8;
                        continue;
                    }
                }
                e += if self.bits.get(p) { 1 } else { -1 };
                if e < best.0 {
                    *best = (e, p);
                }
                p += 1;
            }
        };
        if bi == bj {
            scan(i, j + 1, &mut best);
            return best.1;
        }
        scan(i, (bi + 1) * BLK, &mut best);
        if bi + 1 < bj {
            let (m, blk) = self.min_blocks(bi + 1, bj - 1);
            if m < best.0 {
                let s = blk * BLK;
                scan(s, (s + BLK).min(self.len()), &mut best);
            }
        }
        scan(bj * BLK, j + 1, &mut best);
        best.1
    }

    /// Minimum over blocks `[a, b]` and the leftmost block attaining it.
    fn min_blocks(&self, a: usize, b: usize) -> (i32, usize) {
        let mut m = i32::MAX;
        let (mut lo, mut hi) = (a + self.leaves, b + self.leaves + 1);
        while lo < hi {
            if lo & 1 == 1 {
                m = m.min(self.tree[lo]);
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                m = m.min(self.tree[hi]);
            }
            lo /= 2;
            hi /= 2;
        }
        // leftmost leaf in [a, b] with value m
        let mut blk = a;
        while blk <= b {
            // climb to the largest aligned node starting at blk inside [a, b]
            let mut i = blk + self.leaves;
            let mut span = 1;
            while i % 2 == 0 && blk + 2 * span - 1 <= b {
                i /= 2;
                span *= 2;
            }
            if self.tree[i] == m {
                while i < self.leaves {
                    i = if self.tree[2 * i] == m { 2 * i } else { 2 * i + 1 };
                }
                return (m, i - self.leaves);
            }
            blk += span;
        }
        unreachable!("minimum must be attained")
    }

    /// Bits of the parenthesis payload plus directories and the min tree.
    pub fn report_bits(&self) -> usize {
        self.bits.report_bits() + 32 * self.tree.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_bp(rng: &mut ChaCha8Rng, pairs: usize) -> Vec<bool> {
        // random Dyck word by random walk with forced closure
        let mut v = Vec::new();
        let (mut open, mut left) = (0usize, pairs);
        while left > 0 || open > 0 {
            if left > 0 && (open == 0 || rng.gen_bool(0.5)) {
                v.push(true);
                open += 1;
                left -= 1;
            } else {
                v.push(false);
                open -= 1;
            }
        }
        v
    }

    #[test]
    fn searches_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for pairs in [1, 3, 100, 700, 3000] {
            let v = random_bp(&mut rng, pairs);
            let bp = Bp::new(BitSeq::from_bools(v.iter().copied()));
            let ex: Vec<i32> = v
                .iter()
                .scan(0, |e, &b| {
                    *e += if b { 1 } else { -1 };
                    Some(*e)
                })
                .collect();
            for p in 0..v.len() {
                assert_eq!(bp.excess(p), ex[p]);
                if v[p] {
                    let c = bp.find_close(p);
                    assert!(!v[c] && ex[c] == ex[p] - 1 && (p + 1..c).all(|q| ex[q] >= ex[p]));
                    assert_eq!(bp.find_open(c), p);
                }
            }
            for _ in 0..500 {
                let i = rng.gen_range(0..v.len());
                let j = rng.gen_range(i..v.len());
                let m = (i..=j).min_by_key(|&q| (ex[q], q)).unwrap();
                assert_eq!(bp.range_min(i, j), m, "{i} {j}");
            }
        }
    }
}
