//! Distance oracle for proper interval graphs in O(n) bits.
//!
//! Vertices are left-endpoint ranks `1..=m`. With `R(v)` / `L(v)` the largest /
//! smallest neighbor (or `v` itself), neighborhoods are the ranges
//! `[L(v), R(v)]`. Each component is cut into BFS levels from its leftmost
//! vertex; levels are contiguous ranges and cliques, and `L` maps level `d`
//! into level `d - 1`. For `u < v` in one component with `Δ = level(v) -
//! level(u) > 0`, `dist(u, v)` is `Δ` if the `Δ`-fold `L`-jump from `v` lands
//! at or before `u`, and `Δ + 1` otherwise.
//!
//! The jump is a level-ancestor query on the forest `parent = L`. The default
//! [`PioMode::Succinct`] keeps monotone "skip maps" from level `d` to level
//! `d - 2^k` for `k >= 2` and every `2^k`-th level (with an offset chosen to
//! minimize space); a query climbs in `O(log Δ)` rank/select steps.
//! [`PioMode::Table`] stores the DFS preorder of that forest instead
//! (`⌈lg m⌉` bits per vertex) and answers in O(1).

use crate::bits::{ceil_log2, BitSeq, PackedInts};
use crate::error::{check_vertex, Error, Result};
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PioMode {
    #[default]
    Succinct,
    Table,
}

/// One closed interval; ties between equal endpoints are broken by `tiebreak`
/// (a smaller tiebreak puts both endpoints earlier), as if the interval were
/// `[left - (n - t)ε, right + tε]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
    pub tiebreak: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SkipLevel {
    k: u32,
    /// first level stored for this k
    d0: usize,
    /// size of the target level of the first stored level
    t0: usize,
    sizes: BitSeq,
    maps: BitSeq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Jumps {
    Skip { off: usize, levels: Vec<SkipLevel> },
    Table { pre: PackedInts },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperIntervalOracle {
    m: usize,
    /// unary reach: for t = 1..=m, a one per vertex w with R(w) = t, then a zero
    reach: BitSeq,
    /// level start marks over vertices
    level_start: BitSeq,
    /// component marks over levels (1 = level 0 of a component)
    comp_start: BitSeq,
    jumps: Jumps,
}

impl ProperIntervalOracle {
    /// Build from intervals; vertex `i` is the interval with the `i`-th smallest
    /// left endpoint. Returns the oracle and, for each vertex, the input index.
    pub fn build_from_intervals(intervals: &[Interval], mode: PioMode) -> Result<(Self, Vec<usize>)> {
        let m = intervals.len();
        let mut by_left: Vec<usize> = (0..m).collect();
        by_left.sort_by_key(|&i| (intervals[i].left, intervals[i].tiebreak));
        let mut by_right: Vec<usize> = (0..m).collect();
        by_right.sort_by_key(|&i| (intervals[i].right, intervals[i].tiebreak));
        for (a, b) in by_left.iter().zip(&by_right) {
            if a != b {
                // a starts no later than b but ends later: a contains b
                return Err(Error::Containment { outer: *a, inner: *b });
            }
        }
        for &i in &by_left {
            if intervals[i].left > intervals[i].right {
                return Err(Error::Format(format!("interval {i} has left > right")));
            }
        }
        let mut reach = vec![0; m + 1];
        let mut j = 0;
        for i in 1..=m {
            let r = intervals[by_left[i - 1]].right;
            j = j.max(i);
            while j < m && intervals[by_left[j]].left <= r {
                j += 1;
            }
            reach[i] = j;
        }
        Ok((Self::from_reach(&reach[1..], mode)?, by_left))
    }

    /// Build from `R(1..=m)` (1-based values, `R(v) >= v`, nondecreasing).
    pub fn from_reach(r: &[usize], mode: PioMode) -> Result<Self> {
        let m = r.len();
        for (i, &x) in r.iter().enumerate() {
            if x < i + 1 || x > m || (i > 0 && x < r[i - 1]) {
                return Err(Error::Format(format!("reach {x} at {} is not monotone", i + 1)));
            }
        }
        let mut bits = Vec::with_capacity(2 * m);
        let mut w = 0;
        for t in 1..=m {
            while w < m && r[w] == t {
                bits.push(true);
                w += 1;
            }
            bits.push(false);
        }
        let reach = BitSeq::from_bools(bits);
        // L(v) = min w with R(w) >= v
        let mut lft = vec![0usize; m + 1];
        let mut w = 1;
        for v in 1..=m {
            while r[w - 1] < v {
                w += 1;
            }
            lft[v] = w;
        }
        // levels
        let mut starts = vec![false; m];
        let mut comp_marks = Vec::new();
        let mut level_of = vec![0usize; m + 1];
        let mut s = 1;
        while s <= m {
            let mut lo = s;
            let mut hi = s;
            let mut first = true;
            loop {
                starts[lo - 1] = true;
                comp_marks.push(first);
                first = false;
                for v in lo..=hi {
                    level_of[v] = comp_marks.len() - 1;
                }
                let next = r[hi - 1];
                if next == hi {
                    break;
                }
                lo = hi + 1;
                hi = next;
            }
            s = hi + 1;
        }
        let level_start = BitSeq::from_bools(starts);
        let comp_start = BitSeq::from_bools(comp_marks);
        let jumps = match mode {
            PioMode::Table => Jumps::Table { pre: preorder(m, &lft) },
            PioMode::Succinct => skip_maps(m, &lft, &level_of, &level_start, &comp_start),
        };
        Ok(ProperIntervalOracle { m, reach, level_start, comp_start, jumps })
    }

    pub fn n(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> PioMode {
        match self.jumps {
            Jumps::Skip { .. } => PioMode::Succinct,
            Jumps::Table { .. } => PioMode::Table,
        }
    }

    #[inline]
    fn r_of(&self, w: usize) -> usize {
        let i = self.reach.select1(w).unwrap();
        i - w + 1
    }

    #[inline]
    fn l_of(&self, v: usize) -> usize {
        if v == 1 {
            1
        } else {
            self.reach.select0(v - 1).unwrap() + 2 - v
        }
    }

    #[inline]
    fn level(&self, w: usize) -> usize {
        self.level_start.rank1(w) - 1
    }

    #[inline]
    fn level_first(&self, d: usize) -> usize {
        self.level_start.select1(d + 1).unwrap()
    }

    #[inline]
    fn comp_id(&self, d: usize) -> usize {
        self.comp_start.rank1(d + 1)
    }

    /// BFS level of `v` from the leftmost vertex of its component.
    pub fn level_in_component(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.m)?;
        let d = self.level(v);
        let base = self.comp_start.select1(self.comp_id(d)).unwrap() - 1;
        Ok(d - base)
    }

    /// Largest and smallest neighbor-or-self of `v`.
    pub fn reach(&self, v: usize) -> Result<(usize, usize)> {
        check_vertex(v, self.m)?;
        Ok((self.l_of(v), self.r_of(v)))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        check_vertex(u, self.m)?;
        check_vertex(v, self.m)?;
        let (u, v) = (u.min(v), u.max(v));
        Ok(u != v && self.r_of(u) >= v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        let (l, r) = self.reach(v)?;
        Ok(r - l)
    }

    /// Neighbors of `v`: the inclusive range `[L(v), R(v)]` with `v` itself removed.
    pub fn neighbor_range(&self, v: usize) -> Result<std::ops::RangeInclusive<usize>> {
        let (l, r) = self.reach(v)?;
        Ok(l..=r)
    }

    /// Does the `(level(v) - level(u))`-fold `L`-jump from `v` land at or before `u`?
    fn jump_reaches(&self, u: usize, v: usize, du: usize, dv: usize) -> bool {
        match &self.jumps {
            Jumps::Table { pre } => {
                let last = u + 1 > self.m || self.level(u + 1) != du;
                last || pre.get(v - 1) < pre.get(u)
            }
            Jumps::Skip { off, levels } => {
                let mut w = v;
                let mut x = dv;
                while x > du {
                    let diff = x - du;
                    let mut step = None;
                    for s in levels.iter().rev() {
                        let span = 1usize << s.k;
                        if span <= diff && (x + off) % span == 0 {
                            step = Some(s);
                            break;
                        }
                    }
                    match step {
                        Some(s) => {
                            let j = (x - s.d0) >> s.k;
                            let pre_j = if j == 0 { 0 } else { s.sizes.select0(j).unwrap() - j };
                            let t_j = if j == 0 { 0 } else { s.t0 + if j == 1 { 0 } else { s.sizes.select0(j - 1).unwrap() - (j - 1) } };
                            let start = pre_j + t_j;
                            let i = w - self.level_first(x);
                            let pos = s.maps.select1(pre_j + i + 1).unwrap() - 1;
                            let f = pos - start - i;
                            x -= 1 << s.k;
                            w = self.level_first(x) + f;
                        }
                        None => {
                            w = self.l_of(w);
                            x -= 1;
                        }
                    }
                }
                w <= u
            }
        }
    }

    /// Exact hop distance; `None` when `u` and `v` lie in different components.
    pub fn dist(&self, u: usize, v: usize) -> Result<Option<u32>> {
        check_vertex(u, self.m)?;
        check_vertex(v, self.m)?;
        if u == v {
            return Ok(Some(0));
        }
        let (u, v) = (u.min(v), u.max(v));
        let (du, dv) = (self.level(u), self.level(v));
        if self.comp_id(du) != self.comp_id(dv) {
            return Ok(None);
        }
        let delta = (dv - du) as u32;
        if delta == 0 {
            return Ok(Some(1));
        }
        Ok(Some(if self.jump_reaches(u, v, du, dv) { delta } else { delta + 1 }))
    }

    /// Next vertex after `u` on a shortest path to `v` (the farthest neighbor toward `v`).
    pub fn spath_first(&self, u: usize, v: usize) -> Result<usize> {
        match self.dist(u, v)? {
            None => Err(Error::Unreachable { u, v }),
            Some(0) => Err(Error::Unreachable { u, v }),
            Some(_) => {
                let (l, r) = self.reach(u)?;
                Ok(if u < v { if r >= v { v } else { r } } else if l <= v { v } else { l })
            }
        }
    }

    pub fn report_bits(&self) -> usize {
        let base = self.reach.report_bits() + self.level_start.report_bits() + self.comp_start.report_bits();
        base + match &self.jumps {
            Jumps::Table { pre } => pre.report_bits(),
            Jumps::Skip { levels, .. } => levels
                .iter()
                .map(|s| s.sizes.report_bits() + s.maps.report_bits() + 3 * 64)
                .sum::<usize>(),
        }
    }

    /// Serialized form: mode tag and the unary reach sequence; everything else is rebuilt.
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        write_u64(w, matches!(self.mode(), PioMode::Table) as u64)?;
        self.reach.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mode = if read_u64(r)? == 1 { PioMode::Table } else { PioMode::Succinct };
        let reach = BitSeq::read_from(r)?;
        let m = reach.count_ones();
        if reach.len() != 2 * m {
            return Err(Error::Format("reach sequence is not unary".into()));
        }
        let rr: Vec<usize> = (1..=m).map(|w| reach.select1(w).unwrap() - w + 1).collect();
        Self::from_reach(&rr, mode)
    }
}

/// DFS preorder of the forest `parent = L` with children in ascending order.
fn preorder(m: usize, lft: &[usize]) -> PackedInts {
    let mut pre = PackedInts::new(m, ceil_log2(m.max(2)));
    // children of p: the contiguous range {w > p : L(w) = p}
    let mut first_child = vec![0usize; m + 2];
    let mut last_child = vec![0usize; m + 2];
    for w in 1..=m {
        let p = lft[w];
        if p != w {
            if first_child[p] == 0 {
                first_child[p] = w;
            }
            last_child[p] = w;
        }
    }
    let mut counter = 0u64;
    // roots pushed in descending order so they pop in ascending order
    let mut stack: Vec<usize> = (1..=m).rev().filter(|&w| lft[w] == w).collect();
    while let Some(x) = stack.pop() {
        pre.set(x - 1, counter);
        counter += 1;
        if first_child[x] != 0 {
            for c in (first_child[x]..=last_child[x]).rev() {
                stack.push(c);
            }
        }
    }
    pre
}

fn skip_maps(m: usize, lft: &[usize], level_of: &[usize], level_start: &BitSeq, comp_start: &BitSeq) -> Jumps {
    let h = comp_start.len();
    let first = |d: usize| level_start.select1(d + 1).unwrap();
    let size = |d: usize| level_start.select1(d + 2).unwrap_or(m + 1) - first(d);
    let base = |d: usize| comp_start.select1(comp_start.rank1(d + 1)).unwrap() - 1;
    let kmax = if h > 1 { usize::BITS - 1 - (h - 1).leading_zeros() } else { 0 };
    let ks: Vec<u32> = (2..=kmax).collect();
    if ks.is_empty() {
        return Jumps::Skip { off: 0, levels: Vec::new() };
    }
    let sizes: Vec<usize> = (0..h).map(size).collect();
    let first_stored = |k: u32, off: usize| {
        let span = 1usize << k;
        let mut d = span;
        while (d + off) % span != 0 {
            d += 1;
        }
        d
    };
    let cost = |off: usize| -> usize {
        ks.iter()
            .map(|&k| {
                let span = 1usize << k;
                let mut d = first_stored(k, off);
                let mut c = 0;
                while d < h {
                    c += 2 * sizes[d] + sizes[d - span] + 1;
                    d += span;
                }
                c
            })
            .sum()
    };
    let off = (0..64.min(h)).min_by_key(|&o| (cost(o), o)).unwrap();
    // jump tables at build time: anc[k][w] = 2^k-fold L-ancestor (clamped at roots)
    let mut anc: Vec<usize> = lft.to_vec();
    let mut levels = Vec::new();
    for k in 1..=kmax {
        anc = (0..=m).map(|w| if w == 0 { 0 } else { anc[anc[w]] }).collect();
        if k < 2 {
            continue;
        }
        let span = 1usize << k;
        let d0 = first_stored(k, off);
        let mut size_bits = Vec::new();
        let mut map_bits = Vec::new();
        let mut d = d0;
        while d < h {
            let t = d - span;
            let crosses = t < base(d);
            size_bits.extend(std::iter::repeat(true).take(sizes[d]));
            size_bits.push(false);
            let mut prev = 0;
            for w in first(d)..first(d) + sizes[d] {
                let f = if crosses { 0 } else { anc[w] - first(t) };
                debug_assert!(crosses || level_of[anc[w]] == t);
                map_bits.extend(std::iter::repeat(false).take(f - prev));
                map_bits.push(true);
                prev = f;
            }
            map_bits.extend(std::iter::repeat(false).take(sizes[t] - prev));
            d += span;
        }
        let t0 = if d0 < h { sizes[d0 - span] } else { 0 };
        levels.push(SkipLevel { k, d0, t0, sizes: BitSeq::from_bools(size_bits), maps: BitSeq::from_bools(map_bits) });
    }
    Jumps::Skip { off, levels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::ReferenceGraph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Random proper interval graph as a reach array.
    pub(crate) fn random_reach(rng: &mut ChaCha8Rng, m: usize, spread: usize) -> Vec<usize> {
        let mut r = Vec::with_capacity(m);
        let mut cur = 1;
        for v in 1..=m {
            cur = cur.max(v).max((v + rng.gen_range(0..=spread)).min(m).min(cur + rng.gen_range(0..=spread)));
            if rng.gen_bool(0.03) {
                cur = cur.max(v);
            }
            r.push(cur);
        }
        r
    }

    fn reference(r: &[usize]) -> ReferenceGraph {
        let mut e = Vec::new();
        for (i, &x) in r.iter().enumerate() {
            for j in i + 2..=x {
                e.push((i + 1, j));
            }
        }
        ReferenceGraph::from_edges(r.len(), e)
    }

    fn check_all(r: &[usize], mode: PioMode) {
        let o = ProperIntervalOracle::from_reach(r, mode).unwrap();
        let g = reference(r);
        let m = r.len();
        for u in 1..=m {
            let d = g.bfs_all(u).unwrap();
            assert_eq!(o.degree(u).unwrap(), g.degree(u));
            for v in 1..=m {
                assert_eq!(o.dist(u, v).unwrap(), d[v], "{r:?} {u} {v} {mode:?}");
                assert_eq!(o.adjacent(u, v).unwrap(), g.adjacent(u, v));
                if let Some(k) = d[v] {
                    if k >= 1 {
                        let w = o.spath_first(u, v).unwrap();
                        assert!(g.adjacent(u, w));
                        assert_eq!(o.dist(w, v).unwrap(), Some(k - 1));
                    }
                    if u < v {
                        let lu = o.level_in_component(u).unwrap();
                        let lv = o.level_in_component(v).unwrap();
                        if lv > lu {
                            let delta = (lv - lu) as u32;
                            assert!(k == delta || k == delta + 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eleven_vertex_ga() {
        // A = {1, 3, 9} with intervals [b-(v), b+(v)]
        let iv = [
            Interval { left: 5, right: 7, tiebreak: 1 },
            Interval { left: 5, right: 11, tiebreak: 3 },
            Interval { left: 11, right: 11, tiebreak: 9 },
        ];
        for mode in [PioMode::Succinct, PioMode::Table] {
            let (o, order) = ProperIntervalOracle::build_from_intervals(&iv, mode).unwrap();
            assert_eq!(order, vec![0, 1, 2]);
            assert_eq!(o.dist(1, 3).unwrap(), Some(2));
            assert_eq!(o.dist(2, 2).unwrap(), Some(0));
            assert_eq!(o.neighbor_range(2).unwrap(), 1..=3);
            assert_eq!(o.spath_first(1, 3).unwrap(), 2);
            assert_eq!(o.spath_first(3, 1).unwrap(), 2);
            assert!(o.dist(4, 1).is_err());
        }
    }

    #[test]
    fn trivial_instances() {
        let (o, _) = ProperIntervalOracle::build_from_intervals(
            &[Interval { left: 0, right: 1, tiebreak: 1 }],
            PioMode::Succinct,
        )
        .unwrap();
        assert_eq!(o.degree(1).unwrap(), 0);
        let disjoint: Vec<Interval> =
            (0..5).map(|i| Interval { left: 3 * i, right: 3 * i + 1, tiebreak: i as usize }).collect();
        let (o, _) = ProperIntervalOracle::build_from_intervals(&disjoint, PioMode::Succinct).unwrap();
        assert_eq!(o.dist(1, 5).unwrap(), None);
        assert_eq!(o.degree(3).unwrap(), 0);
        assert!(o.spath_first(1, 2).is_err());
    }

    #[test]
    fn containment_rejected() {
        let iv = [Interval { left: 0, right: 10, tiebreak: 1 }, Interval { left: 2, right: 3, tiebreak: 2 }];
        assert!(matches!(
            ProperIntervalOracle::build_from_intervals(&iv, PioMode::Succinct),
            Err(Error::Containment { .. })
        ));
        // equal intervals are fine after tie-breaking
        let iv = [Interval { left: 0, right: 1, tiebreak: 2 }, Interval { left: 0, right: 1, tiebreak: 1 }];
        let (o, order) = ProperIntervalOracle::build_from_intervals(&iv, PioMode::Succinct).unwrap();
        assert_eq!(order, vec![1, 0]);
        assert!(o.adjacent(1, 2).unwrap());
    }

    #[test]
    fn random_vs_bfs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for it in 0..1000 {
            let m = rng.gen_range(1..=if it < 900 { 60 } else { 200 });
            let spread = rng.gen_range(1..=6);
            let r = random_reach(&mut rng, m, spread);
            let mode = if it % 2 == 0 { PioMode::Succinct } else { PioMode::Table };
            check_all(&r, mode);
        }
    }

    #[test]
    fn long_paths_use_skips() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for m in [300, 1000] {
            let r = random_reach(&mut rng, m, 2);
            let a = ProperIntervalOracle::from_reach(&r, PioMode::Succinct).unwrap();
            let b = ProperIntervalOracle::from_reach(&r, PioMode::Table).unwrap();
            let g = reference(&r);
            for u in (1..=m).step_by(7) {
                let d = g.bfs_all(u).unwrap();
                for v in 1..=m {
                    assert_eq!(a.dist(u, v).unwrap(), d[v]);
                    assert_eq!(b.dist(u, v).unwrap(), d[v]);
                }
            }
        }
    }

    #[test]
    fn space_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for spread in [1, 2, 5, 40] {
            let m = 1 << 14;
            let mut r = random_reach(&mut rng, m, spread);
            // force connectivity
            for v in 0..m - 1 {
                r[v] = r[v].max(v + 2);
            }
            let o = ProperIntervalOracle::from_reach(&r, PioMode::Succinct).unwrap();
            assert!(o.report_bits() <= 8 * m, "{} bits for m={m}", o.report_bits());
        }
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let r = random_reach(&mut rng, 100, 3);
        for mode in [PioMode::Succinct, PioMode::Table] {
            let o = ProperIntervalOracle::from_reach(&r, mode).unwrap();
            let mut buf = Vec::new();
            o.write_to(&mut buf).unwrap();
            assert_eq!(ProperIntervalOracle::read_from(&mut buf.as_slice()).unwrap(), o);
        }
    }
}
