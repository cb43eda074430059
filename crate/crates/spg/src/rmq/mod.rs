//! Range-maximum / range-minimum index over a virtual value sequence.
//!
//! Positions are grouped into blocks of `c` values; the Cartesian tree of
//! the block maxima (leftmost maximum at the root) is kept as a balanced
//! parenthesis sequence of the form `( left ) right`, so that the `k`-th
//! `(` is the node of preorder rank `k` and the `k`-th `)` is the node of
//! inorder rank `k`, i.e. block `k`. Values are never stored: every query
//! takes the [`ValueAccessor`] it was built from.

mod bp;

pub use bp::Bp;

use crate::bits::BitSeq;
use crate::error::{Error, Result};
use crate::ser::{read_u64, write_u64};
use std::cell::Cell;

/// A read-only sequence of values, 1-based. Sentinels `i64::MIN` / `i64::MAX`
/// stand for −∞ / +∞.
pub trait ValueAccessor {
    fn len(&self) -> usize;
    fn value_at(&self, i: usize) -> i64;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl ValueAccessor for [i64] {
    fn len(&self) -> usize {
        <[i64]>::len(self)
    }
    fn value_at(&self, i: usize) -> i64 {
        self[i - 1]
    }
}

impl ValueAccessor for Vec<i64> {
    fn len(&self) -> usize {
        <[i64]>::len(self)
    }
    fn value_at(&self, i: usize) -> i64 {
        self[i - 1]
    }
}

/// Wraps an accessor and counts `value_at` calls.
pub struct Counting<'a, S: ValueAccessor + ?Sized> {
    pub inner: &'a S,
    pub probes: Cell<usize>,
}

impl<'a, S: ValueAccessor + ?Sized> Counting<'a, S> {
    pub fn new(inner: &'a S) -> Self {
        Counting { inner, probes: Cell::new(0) }
    }
}

impl<S: ValueAccessor + ?Sized> ValueAccessor for Counting<'_, S> {
    fn len(&self) -> usize {
        self.inner.len()
    }
    fn value_at(&self, i: usize) -> i64 {
        self.probes.set(self.probes.get() + 1);
        self.inner.value_at(i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Max,
    Min,
}

/// Work counters of one iteration step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StepStats {
    pub blocks_scanned: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmqIndex {
    n: usize,
    c: usize,
    orient: Orientation,
    tree: Bp,
}

/// Block size for a given ε, `⌈1/ε⌉`.
pub fn block_size(eps: f64) -> usize {
    assert!(eps > 0.0 && eps <= 1.0, "epsilon must lie in (0, 1]");
    (1.0 / eps).ceil() as usize
}

pub const DEFAULT_EPS: f64 = 0.25;

impl RmqIndex {
    pub fn build<S: ValueAccessor + ?Sized>(src: &S, orient: Orientation, eps: f64) -> Self {
        Self::build_with_block(src, orient, block_size(eps))
    }

    pub fn build_with_block<S: ValueAccessor + ?Sized>(src: &S, orient: Orientation, c: usize) -> Self {
        let n = src.len();
        let k = n.div_ceil(c);
        let key = |v: i64| if orient == Orientation::Max { v } else { !v };
        let maxima: Vec<i64> = (0..k)
            .map(|b| (b * c + 1..=((b + 1) * c).min(n)).map(|i| key(src.value_at(i))).max().unwrap())
            .collect();
        // Cartesian tree, ties keep the earlier element as ancestor
        let mut left = vec![usize::MAX; k];
        let mut right = vec![usize::MAX; k];
        let mut stack: Vec<usize> = Vec::new();
        for i in 0..k {
            let mut last = usize::MAX;
            while let Some(&t) = stack.last() {
                if maxima[t] < maxima[i] {
                    last = t;
                    stack.pop();
                } else {
                    break;
                }
            }
            left[i] = last;
            if let Some(&t) = stack.last() {
                right[t] = i;
            }
            stack.push(i);
        }
        let mut bits = Vec::with_capacity(2 * k);
        // iterative "( L ) R" emission
        enum Step {
            Node(usize),
            Close,
        }
        let mut todo = Vec::new();
        if let Some(&root) = stack.first() {
            todo.push(Step::Node(root));
        }
        while let Some(s) = todo.pop() {
            match s {
                Step::Node(x) => {
                    bits.push(true);
                    if right[x] != usize::MAX {
                        todo.push(Step::Node(right[x]));
                    }
                    todo.push(Step::Close);
                    if left[x] != usize::MAX {
                        todo.push(Step::Node(left[x]));
                    }
                }
                Step::Close => bits.push(false),
            }
        }
        RmqIndex { n, c, orient, tree: Bp::new(BitSeq::from_bools(bits)) }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn block_size(&self) -> usize {
        self.c
    }

    pub fn orientation(&self) -> Orientation {
        self.orient
    }

    pub fn report_bits(&self) -> usize {
        self.tree.report_bits()
    }

    pub fn write_to<W: std::io::Write>(&self, w: &mut W) -> Result<()> {
        write_u64(w, self.n as u64)?;
        write_u64(w, self.c as u64)?;
        write_u64(w, (self.orient == Orientation::Min) as u64)?;
        self.tree.bits().write_to(w)
    }

    pub fn read_from<R: std::io::Read>(r: &mut R) -> Result<Self> {
        let n = read_u64(r)? as usize;
        let c = read_u64(r)? as usize;
        let orient = if read_u64(r)? == 1 { Orientation::Min } else { Orientation::Max };
        let bits = BitSeq::read_from(r)?;
        if c == 0 || bits.len() != 2 * n.div_ceil(c) {
            return Err(Error::Format("rmq tree size does not match n and c".into()));
        }
        Ok(RmqIndex { n, c, orient, tree: Bp::new(bits) })
    }

    #[inline]
    fn key(&self, v: i64) -> i64 {
        match self.orient {
            Orientation::Max => v,
            Orientation::Min => !v,
        }
    }

    // --- block tree navigation (nodes: preorder p, inorder = block index x) ---

    fn open_of_pre(&self, p: usize) -> usize {
        self.tree.bits().select1(p + 1).unwrap() - 1
    }

    fn close_of_block(&self, x: usize) -> usize {
        self.tree.bits().select0(x + 1).unwrap() - 1
    }

    fn block_of_pre(&self, p: usize) -> usize {
        let c = self.tree.find_close(self.open_of_pre(p));
        self.tree.bits().rank0(c)
    }

    fn pre_of_block(&self, x: usize) -> usize {
        let o = self.tree.find_open(self.close_of_block(x));
        self.tree.bits().rank1(o)
    }

    /// (left subtree size, right subtree size) of block `x`.
    fn subtree_sizes(&self, x: usize) -> (usize, usize) {
        let c = self.close_of_block(x);
        let o = self.tree.find_open(c);
        let e = self.tree.enclosing_end(c);
        ((c - o - 1) / 2, (e - c - 1) / 2)
    }

    fn lca_blocks(&self, a: usize, b: usize) -> usize {
        let p = self.tree.range_min(self.close_of_block(a), self.close_of_block(b));
        self.tree.bits().rank0(p)
    }

    fn block_range(&self, b: usize) -> (usize, usize) {
        (b * self.c + 1, ((b + 1) * self.c).min(self.n))
    }

    /// Leftmost maximum key in `[lo, hi]`.
    fn scan<S: ValueAccessor + ?Sized>(&self, src: &S, lo: usize, hi: usize, st: &mut StepStats) -> (usize, i64) {
        st.blocks_scanned += 1;
        let mut best = (lo, self.key(src.value_at(lo)));
        for i in lo + 1..=hi {
            let k = self.key(src.value_at(i));
            if k > best.1 {
                best = (i, k);
            }
        }
        best
    }

    fn check_range(&self, l: usize, r: usize) -> Result<()> {
        if l == 0 || l > r || r > self.n {
            return Err(Error::BadRange { l, r });
        }
        Ok(())
    }

    fn arg_inner<S: ValueAccessor + ?Sized>(&self, src: &S, l: usize, r: usize, st: &mut StepStats) -> (usize, i64) {
        let (bl, br) = ((l - 1) / self.c, (r - 1) / self.c);
        if bl == br {
            return self.scan(src, l, r, st);
        }
        let mut best = self.scan(src, l, self.block_range(bl).1, st);
        if bl + 1 < br {
            let w = self.lca_blocks(bl + 1, br - 1);
            let (lo, hi) = self.block_range(w);
            let cand = self.scan(src, lo, hi, st);
            if cand.1 > best.1 {
                best = cand;
            }
        }
        let cand = self.scan(src, self.block_range(br).0, r, st);
        if cand.1 > best.1 {
            best = cand;
        }
        best
    }

    /// Leftmost position of the extremum (max or min per orientation) in `[l, r]`.
    pub fn range_arg<S: ValueAccessor + ?Sized>(&self, src: &S, l: usize, r: usize) -> Result<usize> {
        self.check_range(l, r)?;
        Ok(self.arg_inner(src, l, r, &mut StepStats::default()).0)
    }

    /// First index of the threshold iteration: the range extremum if it passes `y`
    /// (`value >= y` for max indexes, `value <= y` for min indexes).
    pub fn first<S: ValueAccessor + ?Sized>(&self, src: &S, l: usize, r: usize, y: i64) -> Result<Option<usize>> {
        self.check_range(l, r)?;
        let (i0, k) = self.arg_inner(src, l, r, &mut StepStats::default());
        Ok((k >= self.key(y)).then_some(i0))
    }

    /// Next index after `i` in the iteration over `{j in [l, r] : value passes y}`.
    ///
    /// Order: the range extremum first, then the remaining indices in preorder
    /// of the block tree restricted to `[l, r]`, index order inside a block.
    pub fn next<S: ValueAccessor + ?Sized>(&self, src: &S, l: usize, r: usize, y: i64, i: usize) -> Result<Option<usize>> {
        self.next_traced(src, l, r, y, i, &mut StepStats::default())
    }

    pub fn next_traced<S: ValueAccessor + ?Sized>(
        &self,
        src: &S,
        l: usize,
        r: usize,
        y: i64,
        i: usize,
        st: &mut StepStats,
    ) -> Result<Option<usize>> {
        self.check_range(l, r)?;
        let ky = self.key(y);
        if i < l || i > r || self.key(src.value_at(i)) < ky {
            return Err(Error::BadRange { l: i, r: i });
        }
        let (i0, _) = self.arg_inner(src, l, r, st);
        let (bl, br) = ((l - 1) / self.c, (r - 1) / self.c);
        let w = self.lca_blocks(bl, br);
        let wpre = self.pre_of_block(w);
        let (wl, wr) = self.subtree_sizes(w);
        let wend = wpre + 1 + wl + wr;
        let mut p = if i == i0 {
            wpre
        } else {
            let b = (i - 1) / self.c;
            let hi = self.block_range(b).1.min(r);
            if i < hi {
                st.blocks_scanned += 1;
                for j in i + 1..=hi {
                    if j != i0 && self.key(src.value_at(j)) >= ky {
                        return Ok(Some(j));
                    }
                }
            }
            // b holds i, so its block maximum passes and its subtree is entered
            self.pre_of_block(b) + 1
        };
        while p < wend {
            let x = self.block_of_pre(p);
            let (sl, sr) = self.subtree_sizes(x);
            if x < bl {
                let hi = x + sr;
                p = if hi < bl { p + 1 + sl + sr } else { self.pre_of_block(self.lca_blocks(bl, hi.min(br))) };
                continue;
            }
            if x > br {
                let lo = x - sl;
                p = if lo > br { p + 1 + sl + sr } else { self.pre_of_block(self.lca_blocks(lo.max(bl), br)) };
                continue;
            }
            let (lo, hi) = self.block_range(x);
            st.blocks_scanned += 1;
            let mut block_max = i64::MIN;
            for j in lo..=hi {
                let k = self.key(src.value_at(j));
                block_max = block_max.max(k);
                if j >= l && j <= r && j != i0 && k >= ky {
                    return Ok(Some(j));
                }
            }
            p += if block_max < ky { 1 + sl + sr } else { 1 };
        }
        Ok(None)
    }

    /// Convenience: all passing indices in iteration order.
    pub fn report<S: ValueAccessor + ?Sized>(&self, src: &S, l: usize, r: usize, y: i64) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = self.first(src, l, r, y)?;
        while let Some(i) = cur {
            out.push(i);
            cur = self.next(src, l, r, y, i)?;
        }
        Ok(out)
    }
}
