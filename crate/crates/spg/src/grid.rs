//! The point set `{(x, Π[x])}` as a wavelet matrix: one bit sequence per
//! level of the y-value bits, most significant first.

use crate::bits::{ceil_log2, BitSeq};
use crate::core::Permutation;
use crate::error::{check_vertex, Result};
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGrid {
    n: usize,
    levels: Vec<BitSeq>,
    zeros: Vec<usize>,
}

impl PermGrid {
    pub fn new(pi_inv: &Permutation) -> Self {
        let n = pi_inv.len();
        let depth = ceil_log2(n) as usize;
        let mut cur: Vec<usize> = pi_inv.values().iter().map(|&y| y - 1).collect();
        let mut levels = Vec::with_capacity(depth);
        let mut zeros = Vec::with_capacity(depth);
        for l in 0..depth {
            let shift = depth - 1 - l;
            let bits = BitSeq::from_bools(cur.iter().map(|&v| (v >> shift) & 1 == 1));
            zeros.push(bits.count_zeros());
            levels.push(bits);
            let (z, o): (Vec<usize>, Vec<usize>) = cur.iter().partition(|&&v| (v >> shift) & 1 == 0);
            cur = z.into_iter().chain(o).collect();
        }
        PermGrid { n, levels, zeros }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn depth(&self) -> usize {
        self.levels.len()
    }

    /// `Π[x]`.
    pub fn y_for_x(&self, x: usize) -> Result<usize> {
        check_vertex(x, self.n)?;
        let mut p = x - 1;
        let mut v = 0;
        for (l, b) in self.levels.iter().enumerate() {
            v <<= 1;
            if b.get(p) {
                v |= 1;
                p = self.zeros[l] + b.rank1(p);
            } else {
                p = b.rank0(p);
            }
        }
        Ok(v + 1)
    }

    /// `Π⁻¹(y)`, the column holding row `y`.
    pub fn x_for_y(&self, y: usize) -> Result<usize> {
        check_vertex(y, self.n)?;
        let v = y - 1;
        let d = self.depth();
        // start of v's run in the bottom order
        let mut p = 0;
        for (l, b) in self.levels.iter().enumerate() {
            p = if (v >> (d - 1 - l)) & 1 == 1 { self.zeros[l] + b.rank1(p) } else { b.rank0(p) };
        }
        Ok(self.lift(p, v) + 1)
    }

    /// Map a bottom-order position holding value `v` back to its original index.
    fn lift(&self, mut p: usize, v: usize) -> usize {
        let d = self.depth();
        for l in (0..d).rev() {
            let b = &self.levels[l];
            p = if (v >> (d - 1 - l)) & 1 == 1 {
                b.select1(p - self.zeros[l] + 1).unwrap() - 1
            } else {
                b.select0(p + 1).unwrap() - 1
            };
        }
        p
    }

    /// Points with x in `[lo, hi)` (0-based) and value `< bound`.
    fn count_less(&self, mut lo: usize, mut hi: usize, bound: usize) -> usize {
        if bound >= 1 << self.depth() {
            return hi - lo;
        }
        let d = self.depth();
        let mut acc = 0;
        for (l, b) in self.levels.iter().enumerate() {
            let (r0l, r0h) = (b.rank0(lo), b.rank0(hi));
            if (bound >> (d - 1 - l)) & 1 == 1 {
                acc += r0h - r0l;
                lo = self.zeros[l] + (lo - r0l);
                hi = self.zeros[l] + (hi - r0h);
            } else {
                lo = r0l;
                hi = r0h;
            }
        }
        acc
    }

    fn clamp(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> Option<(usize, usize, usize, usize)> {
        let (x1, y1) = (x1.max(1), y1.max(1));
        let (x2, y2) = (x2.min(self.n), y2.min(self.n));
        (x1 <= x2 && y1 <= y2).then_some((x1, x2, y1, y2))
    }

    /// `|P ∩ [x1, x2] × [y1, y2]|`; bounds are clamped to `1..=n`.
    pub fn count(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> usize {
        match self.clamp(x1, x2, y1, y2) {
            None => 0,
            Some((x1, x2, y1, y2)) => self.count_less(x1 - 1, x2, y2) - self.count_less(x1 - 1, x2, y1 - 1),
        }
    }

    /// The points of the rectangle, sorted by x.
    pub fn report(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> Vec<GridPoint> {
        let mut out = Vec::new();
        if let Some((x1, x2, y1, y2)) = self.clamp(x1, x2, y1, y2) {
            self.collect(0, x1 - 1, x2, 0, y1 - 1, y2 - 1, &mut out);
        }
        out.sort_by_key(|p| p.x);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn collect(&self, l: usize, lo: usize, hi: usize, prefix: usize, ylo: usize, yhi: usize, out: &mut Vec<GridPoint>) {
        if lo >= hi {
            return;
        }
        let d = self.depth();
        let span = 1usize << (d - l);
        let (vmin, vmax) = (prefix << (d - l), (prefix << (d - l)) + span - 1);
        if vmax < ylo || vmin > yhi {
            return;
        }
        if l == d {
            for p in lo..hi {
                out.push(GridPoint { x: self.lift(p, prefix) + 1, y: prefix + 1 });
            }
            return;
        }
        let b = &self.levels[l];
        let (r0l, r0h) = (b.rank0(lo), b.rank0(hi));
        self.collect(l + 1, r0l, r0h, prefix << 1, ylo, yhi, out);
        let z = self.zeros[l];
        self.collect(l + 1, z + lo - r0l, z + hi - r0h, (prefix << 1) | 1, ylo, yhi, out);
    }

    pub fn report_bits(&self) -> usize {
        self.levels.iter().map(BitSeq::report_bits).sum::<usize>() + 64 * self.zeros.len()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_u64(w, self.n as u64)?;
        write_u64(w, self.levels.len() as u64)?;
        for b in &self.levels {
            b.write_to(w)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let n = read_u64(r)? as usize;
        let d = read_u64(r)? as usize;
        let mut levels = Vec::with_capacity(d);
        for _ in 0..d {
            levels.push(BitSeq::read_from(r)?);
        }
        let zeros = levels.iter().map(BitSeq::count_zeros).collect();
        Ok(PermGrid { n, levels, zeros })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::pi_inverse_from_pi;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eleven_examples() {
        let p = pi_inverse_from_pi(&[5, 7, 2, 6, 1, 11, 8, 10, 4, 3, 9]).unwrap();
        let g = PermGrid::new(&p);
        assert_eq!(g.count(1, 2, 10, 11), 0);
        assert_eq!(g.count(1, 11, 1, 11), 11);
        assert_eq!(g.count(4, 11, 1, 10), 7);
        assert_eq!(g.report(1, 10, 11, 11), vec![GridPoint { x: 9, y: 11 }]);
        assert_eq!(g.report(3, 2, 1, 11), vec![]);
        assert_eq!(g.report(1, 11, 1, 11).len(), 11);
        assert_eq!(g.y_for_x(3), Ok(10));
        assert_eq!(g.x_for_y(1), Ok(5));
        for x in 1..=11 {
            assert_eq!(g.x_for_y(g.y_for_x(x).unwrap()), Ok(x));
        }
        assert!(g.y_for_x(12).is_err());
    }

    #[test]
    fn random_rectangles_vs_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [1usize, 2, 3, 17, 64, 500, 2048] {
            let mut v: Vec<usize> = (1..=n).collect();
            v.shuffle(&mut rng);
            let g = PermGrid::new(&Permutation::new(v.clone()).unwrap());
            assert!((1..=n).all(|x| g.y_for_x(x) == Ok(v[x - 1])));
            for _ in 0..300 {
                let (x1, x2) = (rng.gen_range(0..=n + 1), rng.gen_range(0..=n + 1));
                let (y1, y2) = (rng.gen_range(0..=n + 1), rng.gen_range(0..=n + 1));
                let want: Vec<GridPoint> = (x1.max(1)..=x2.min(n))
                    .filter(|&x| v[x - 1] >= y1 && v[x - 1] <= y2)
                    .map(|x| GridPoint { x, y: v[x - 1] })
                    .collect();
                assert_eq!(g.count(x1, x2, y1, y2), want.len());
                assert_eq!(g.report(x1, x2, y1, y2), want);
            }
        }
    }

    #[test]
    fn space_and_round_trip() {
        let n = 1 << 12;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(&mut rng);
        let g = PermGrid::new(&Permutation::new(v).unwrap());
        let lg = ceil_log2(n);
        assert!(g.report_bits() as f64 <= 1.25 * (n * lg as usize) as f64);
        let mut buf = Vec::new();
        g.write_to(&mut buf).unwrap();
        assert_eq!(PermGrid::read_from(&mut buf.as_slice()).unwrap(), g);
    }
}
