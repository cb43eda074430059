//! Bipartite permutation graphs in `2n + o(n)` bits.
//!
//! Every non-isolated vertex is either a prefix maximum of Π (part A) or a
//! suffix minimum (part B), never both, so `Bx = !Ax` and `By = !Ay` and the
//! two bit vectors `Ax`, `Ay` determine Π: the A-values and the B-values are
//! each increasing. Isolated vertices must occupy the top ids `n-w+1..=n`
//! (where `Π[v] = v`); [`canonical_relabeling`] moves them there.
//!
//! A-vertices only have larger neighbors (all in B), B-vertices only smaller
//! ones (all in A), and each neighborhood is a contiguous run of the other
//! part. Distances come from walking greedy extremal steps, or in O(1) from
//! the optional interval-graph oracles.

use crate::bits::BitSeq;
use crate::cascade::{Cascade, ComplementBits, Oracles};
use crate::core::Permutation;
use crate::error::{check_vertex, Error, Result};
use crate::pio::PioMode;
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

pub const MAGIC: &[u8; 5] = b"SPBP1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePermGraph {
    n: usize,
    /// isolated vertices, ids `n - w + 1 ..= n`
    w: usize,
    ax: BitSeq,
    ay: BitSeq,
    oracles: Option<Oracles>,
}

/// Bits used: the two bit vectors themselves, their rank/select directories,
/// and the optional distance oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BpgSpace {
    pub payload: usize,
    pub directories: usize,
    pub oracles: usize,
}

/// Relabel so that isolated vertices get the largest ids, keeping the relative
/// order of all other vertices. Returns the new `Π` and `old_id[new_id - 1]`.
pub fn canonical_relabeling(pi_inv: &Permutation) -> (Permutation, Vec<usize>) {
    let n = pi_inv.len();
    let iso = isolated_flags(pi_inv.values());
    let mut old: Vec<usize> = (1..=n).filter(|&v| !iso[v - 1]).collect();
    let core = old.len();
    // compress Π of the non-isolated vertices to ranks 1..=core
    let mut rows: Vec<usize> = old.iter().map(|&v| pi_inv.at(v)).collect();
    rows.sort_unstable();
    let vals: Vec<usize> = old
        .iter()
        .map(|&v| rows.binary_search(&pi_inv.at(v)).unwrap() + 1)
        .chain(core + 1..=n)
        .collect();
    old.extend((1..=n).filter(|&v| iso[v - 1]));
    (Permutation::new(vals).expect("relabeling is a bijection"), old)
}

fn isolated_flags(vals: &[usize]) -> Vec<bool> {
    let n = vals.len();
    let mut pre = vec![false; n];
    let mut best = 0;
    for (i, &y) in vals.iter().enumerate() {
        if y > best {
            best = y;
            pre[i] = true;
        }
    }
    let mut best = usize::MAX;
    let mut out = vec![false; n];
    for i in (0..n).rev() {
        if vals[i] < best {
            best = vals[i];
            out[i] = pre[i];
        }
    }
    out
}

impl BipartitePermGraph {
    /// Build the plain `2n`-bit structure.
    pub fn build(pi_inv: &Permutation) -> Result<Self> {
        Self::build_inner(pi_inv, false)
    }

    /// Build with interval-graph oracles attached for O(1) distances.
    pub fn build_with_oracles(pi_inv: &Permutation) -> Result<Self> {
        Self::build_inner(pi_inv, true)
    }

    fn build_inner(pi_inv: &Permutation, oracles: bool) -> Result<Self> {
        let vals = pi_inv.values();
        let n = vals.len();
        let mut ax = vec![false; n];
        let mut best = 0;
        for (i, &y) in vals.iter().enumerate() {
            if y > best {
                best = y;
                ax[i] = true;
            }
        }
        let mut bx = vec![false; n];
        let mut best = usize::MAX;
        for i in (0..n).rev() {
            if vals[i] < best {
                best = vals[i];
                bx[i] = true;
            }
        }
        // a vertex in neither part is the middle of a decreasing triple: a triangle
        if let Some(v) = (0..n).find(|&i| !ax[i] && !bx[i]) {
            return Err(Error::NotBipartite(v + 1));
        }
        let iso: Vec<bool> = (0..n).map(|i| ax[i] && bx[i]).collect();
        let w = iso.iter().rev().take_while(|&&b| b).count();
        if let Some(v) = (0..n - w).find(|&i| iso[i]) {
            return Err(Error::IsolatedNotTop { vertex: v + 1 });
        }
        let m = n - w;
        let mut ay = vec![false; m];
        for i in 0..m {
            if ax[i] {
                ay[vals[i] - 1] = true;
            }
        }
        let ax = BitSeq::from_bools(ax[..m].iter().copied());
        let ay = BitSeq::from_bools(ay);
        let oracles = if oracles {
            Some(Oracles::build(&ComplementBits { ax: &ax, ay: &ay }, PioMode::Succinct)?)
        } else {
            None
        };
        Ok(BipartitePermGraph { n, w, ax, ay, oracles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.w
    }

    fn m(&self) -> usize {
        self.n - self.w
    }

    pub fn is_a(&self, v: usize) -> Result<bool> {
        check_vertex(v, self.n)?;
        Ok(v > self.m() || self.ax.get(v - 1))
    }

    pub fn is_b(&self, v: usize) -> Result<bool> {
        check_vertex(v, self.n)?;
        Ok(v > self.m() || !self.ax.get(v - 1))
    }

    /// `Π[v]`, decoded from `Ax` and `Ay`.
    pub fn pi_inv(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.n)?;
        Ok(self.pi(v))
    }

    #[inline]
    fn pi(&self, v: usize) -> usize {
        if v > self.m() {
            v
        } else if self.ax.get(v - 1) {
            self.ay.select1(self.ax.rank1(v)).unwrap()
        } else {
            self.ay.select0(self.ax.rank0(v)).unwrap()
        }
    }

    // A / B vertices by rank and back
    fn a_sel(&self, k: usize) -> usize {
        self.ax.select1(k).unwrap()
    }
    fn b_sel(&self, k: usize) -> usize {
        self.ax.select0(k).unwrap()
    }

    /// Neighbors of `v` as a range of ranks in the opposite part.
    fn nbr_ranks(&self, v: usize) -> (bool, usize, usize) {
        if v > self.m() {
            return (true, 1, 0);
        }
        let pv = self.pi(v);
        if self.ax.get(v - 1) {
            // B-vertices after v with Π below Π[v]
            let lo = self.ax.rank0(v) + 1;
            let hi = (pv - self.ay.rank1(pv)).min(self.ax.count_zeros());
            (false, lo, hi)
        } else {
            // A-vertices before v with Π above Π[v]
            let lo = self.ay.rank1(pv - 1) + 1;
            let hi = self.ax.rank1(v);
            (true, lo, hi)
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        let (pu, pv) = (self.pi(u), self.pi(v));
        Ok((u < v && pu > pv) || (u > v && pu < pv))
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Result<impl Iterator<Item = usize> + '_> {
        check_vertex(v, self.n)?;
        let (in_a, lo, hi) = self.nbr_ranks(v);
        Ok((lo..=hi).map(move |k| if in_a { self.a_sel(k) } else { self.b_sel(k) }))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.n)?;
        let (_, lo, hi) = self.nbr_ranks(v);
        Ok((hi + 1).saturating_sub(lo))
    }

    /// The neighbor of `u` reaching farthest toward `v` (no adjacency check).
    fn greedy(&self, u: usize, v: usize) -> Option<usize> {
        let (in_a, lo, hi) = self.nbr_ranks(u);
        if lo > hi {
            return None;
        }
        let k = if u < v { hi } else { lo };
        Some(if in_a { self.a_sel(k) } else { self.b_sel(k) })
    }

    pub fn spath_first(&self, u: usize, v: usize) -> Result<usize> {
        match self.distance(u, v)? {
            Some(d) if d >= 1 => Ok(if d == 1 { v } else { self.greedy(u, v).unwrap() }),
            _ => Err(Error::Unreachable { u, v }),
        }
    }

    fn walk(&self, u: usize, v: usize) -> Option<u32> {
        let (mut cur, mut back2, mut back1) = (u, 0usize, 0usize);
        let mut d = 0;
        loop {
            if cur == v {
                return Some(d);
            }
            if self.adjacent(cur, v).unwrap() {
                return Some(d + 1);
            }
            let nxt = self.greedy(cur, v)?;
            // a stalled walk bounces between the same two vertices
            if nxt == back1 || nxt == back2 {
                return None;
            }
            back2 = back1;
            back1 = cur;
            cur = nxt;
            d += 1;
        }
    }

    /// Exact distance: O(1) with oracles, otherwise O(distance).
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        Ok(match &self.oracles {
            Some(_) if u == v => Some(0),
            Some(_) if u > self.m() || v > self.m() => None,
            Some(or) => {
                let q = Cascade { bits: &ComplementBits { ax: &self.ax, ay: &self.ay }, or };
                q.distance(u, self.pi(u), v, self.pi(v)).0
            }
            None => self.walk(u, v),
        })
    }

    pub fn spath(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let mut out = vec![u];
        let mut cur = u;
        while cur != v {
            cur = self.spath_first(cur, v)?;
            out.push(cur);
        }
        Ok(out)
    }

    fn alternating(&self, first_a: bool) -> Option<Vec<usize>> {
        let (k, s) = (self.ax.count_ones(), self.ax.count_zeros());
        let (p, q) = if first_a { (k, s) } else { (s, k) };
        if p != q && p != q + 1 {
            return None;
        }
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let r = i / 2 + 1;
            let from_a = (i % 2 == 0) == first_a;
            let v = if from_a { self.a_sel(r) } else { self.b_sel(r) };
            if let Some(&prev) = out.last() {
                if !self.adjacent(prev, v).unwrap() {
                    return None;
                }
            }
            out.push(v);
        }
        Some(out)
    }

    /// A Hamiltonian path, if one exists.
    pub fn hamiltonian_path(&self) -> Option<Vec<usize>> {
        if self.n == 1 {
            return Some(vec![1]);
        }
        if self.w > 0 || self.n == 0 {
            return None;
        }
        self.alternating(true).or_else(|| self.alternating(false))
    }

    /// A Hamiltonian cycle, if one exists.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<usize>> {
        let k = self.ax.count_ones();
        if self.w > 0 || k < 2 || k != self.ax.count_zeros() {
            return None;
        }
        self.hamiltonian_path()?;
        let a: Vec<usize> = (1..=k).map(|i| self.a_sel(i)).collect();
        let b: Vec<usize> = (1..=k).map(|i| self.b_sel(i)).collect();
        let adj = |x: usize, y: usize| self.adjacent(x, y).unwrap();
        for i in 0..k - 1 {
            // a_i, b_i, a_{i+1}, b_{i+1} must close a 4-cycle
            if !(adj(a[i], b[i]) && adj(b[i], a[i + 1]) && adj(a[i + 1], b[i + 1]) && adj(a[i], b[i + 1])) {
                return None;
            }
        }
        // a ladder: up one rail, across the top rung, down the other rail
        let rail = |i: usize, start_b: bool| if (i % 2 == 0) == start_b { b[i] } else { a[i] };
        let mut cyc = vec![a[0]];
        cyc.extend((0..k).map(|i| rail(i, true)));
        cyc.extend((1..k).rev().map(|i| rail(i, false)));
        Some(cyc)
    }

    pub fn space(&self) -> BpgSpace {
        let payload = self.ax.len() + self.ay.len();
        BpgSpace {
            payload,
            directories: self.ax.report_bits() + self.ay.report_bits() - payload,
            oracles: self.oracles.as_ref().map_or(0, |c| c.report_bits()),
        }
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(MAGIC)?;
        write_u64(w, self.n as u64)?;
        write_u64(w, self.w as u64)?;
        self.ax.write_to(w)?;
        self.ay.write_to(w)?;
        match &self.oracles {
            None => write_u64(w, 0),
            Some(c) => {
                write_u64(w, 1)?;
                c.write_to(w)
            }
        }
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let n = read_u64(r)? as usize;
        let w = read_u64(r)? as usize;
        let ax = BitSeq::read_from(r)?;
        let ay = BitSeq::read_from(r)?;
        if w > n || ax.len() != n - w || ay.len() != n - w || ax.count_ones() != ay.count_ones() {
            return Err(Error::Format("bit vector sizes disagree".into()));
        }
        let oracles = match read_u64(r)? {
            0 => None,
            _ => Some(Oracles::read_from(r)?),
        };
        Ok(BipartitePermGraph { n, w, ax, ay, oracles })
    }
}
