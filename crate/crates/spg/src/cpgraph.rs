//! Circular permutation graphs through the thrice-unrolled graph G₃.
//!
//! A chord `v` runs from position `v` on the outer circle to position `Π[v]`
//! on the inner one, winding normally (`N`), forward (`F`) or backward (`B`).
//! Each chord gets up to three copies on a `3n × 3n` grid: `ℓ_v` at `x = v`,
//! `c_v` at `x = v + n`, `r_v` at `x = v + 2n`; `ℓ_v` is missing for type `B`
//! and `r_v` for type `F`. Two chords intersect iff some of their copies form
//! an inversion involving a center copy, so neighborhoods come from threshold
//! iteration around `c_v`, and distances are minima over copy pairs of the
//! permutation-graph distance on G₃.

use crate::bits::{ceil_log2, PackedInts};
use crate::cascade::{DistanceCase, DistanceCore};
use crate::core::{Permutation, ReferenceGraph};
use crate::error::{check_vertex, Error, Result};
use crate::pio::PioMode;
use crate::rmq::{Orientation, RmqIndex, ValueAccessor, DEFAULT_EPS};
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

pub const MAGIC: &[u8; 5] = b"SPCP1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChordType {
    /// normal
    N,
    /// forward
    F,
    /// backward
    B,
}

impl ChordType {
    fn code(self) -> u64 {
        match self {
            ChordType::N => 0,
            ChordType::F => 1,
            ChordType::B => 2,
        }
    }

    fn from_code(c: u64) -> Self {
        match c {
            1 => ChordType::F,
            2 => ChordType::B,
            _ => ChordType::N,
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'N' | 'n' => Ok(ChordType::N),
            'F' | 'f' => Ok(ChordType::F),
            'B' | 'b' => Ok(ChordType::B),
            _ => Err(Error::Format(format!("chord type {c:?} is not one of N, F, B"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            ChordType::N => 'N',
            ChordType::F => 'F',
            ChordType::B => 'B',
        }
    }
}

/// Parse a string over `NFB`.
pub fn parse_types(s: &str) -> Result<Vec<ChordType>> {
    s.chars().filter(|c| !c.is_whitespace()).map(ChordType::from_char).collect()
}

pub fn types_to_string(t: &[ChordType]) -> String {
    t.iter().map(|c| c.as_char()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChordCopy {
    Left,
    Center,
    Right,
}

/// A diagram is valid iff no two chords cross more than once. For `u < v`
/// that rules out, numbered as reported:
/// 1. inversion with `t(u) = F`, `t(v) = N`;
/// 2. inversion with `t(u) = N`, `t(v) = B`;
/// 3. non-inversion with `{t(u), t(v)} = {F, B}`;
/// 4. inversion with `t(u) = F`, `t(v) = B` (three crossings).
///
/// The error names the first offending pair by `v`, with an extreme `u`.
pub fn validate(pi_inv: &Permutation, t: &[ChordType]) -> Result<()> {
    match first_violation(pi_inv.values(), t)? {
        None => Ok(()),
        Some((u, v, rule)) => Err(Error::InvalidChordTypes { u, v, rule }),
    }
}

pub(crate) fn first_violation(pi: &[usize], t: &[ChordType]) -> Result<Option<(usize, usize, u8)>> {
    if pi.len() != t.len() {
        return Err(Error::LengthMismatch(pi.len(), t.len()));
    }
    // (value, vertex) of prefix extrema per class
    let mut max_f = (0, 0);
    let mut max_n = (0, 0);
    let mut min_f = (usize::MAX, 0);
    let mut min_b = (usize::MAX, 0);
    for (i, (&p, &ty)) in pi.iter().zip(t).enumerate() {
        let v = i + 1;
        match ty {
            ChordType::N if max_f.0 > p => return Ok(Some((max_f.1, v, 1))),
            ChordType::B if max_n.0 > p => return Ok(Some((max_n.1, v, 2))),
            ChordType::B if min_f.0 < p => return Ok(Some((min_f.1, v, 3))),
            ChordType::B if max_f.0 > p => return Ok(Some((max_f.1, v, 4))),
            ChordType::F if min_b.0 < p => return Ok(Some((min_b.1, v, 3))),
            _ => {}
        }
        match ty {
            ChordType::N => max_n = max_n.max((p, v)),
            ChordType::F => {
                max_f = max_f.max((p, v));
                min_f = min_f.min((p, v));
            }
            ChordType::B => min_b = min_b.min((p, v)),
        }
    }
    Ok(None)
}

/// Brute-force circular permutation graph: chords on a cylinder, adjacent iff
/// their lifts cross. Returns `None` for an invalid diagram (two chords that
/// cross twice).
pub fn reference_cpg(pi_inv: &Permutation, t: &[ChordType]) -> Option<ReferenceGraph> {
    let n = pi_inv.len() as i64;
    let lift = |v: usize| -> i64 {
        let p = pi_inv.at(v) as i64;
        match t[v - 1] {
            ChordType::N => p,
            ChordType::F => p + n,
            ChordType::B => p - n,
        }
    };
    let mut edges = Vec::new();
    for u in 1..=pi_inv.len() {
        for v in u + 1..=pi_inv.len() {
            let (pu, pv) = (lift(u), lift(v));
            let crossings = (-2..=2)
                .filter(|k| {
                    let dx = u as i64 - v as i64 - k * n;
                    let dy = pu - pv - k * n;
                    (dx < 0) != (dy < 0)
                })
                .count();
            if crossings > 1 {
                return None;
            }
            if crossings == 1 {
                edges.push((u, v));
            }
        }
    }
    Some(ReferenceGraph::from_edges(pi_inv.len(), edges))
}

/// Values of G₃ by x, with a sentinel where a copy is missing.
struct YSeq<'a> {
    n: usize,
    pi: &'a PackedInts,
    t: &'a PackedInts,
    missing: i64,
}

fn y_of(n: usize, p: usize, ty: ChordType, copy: ChordCopy) -> Option<usize> {
    use ChordType::*;
    match (copy, ty) {
        (ChordCopy::Left, N) => Some(p),
        (ChordCopy::Left, F) => Some(p + n),
        (ChordCopy::Left, B) => None,
        (ChordCopy::Center, N) => Some(p + n),
        (ChordCopy::Center, F) => Some(p + 2 * n),
        (ChordCopy::Center, B) => Some(p),
        (ChordCopy::Right, N) => Some(p + 2 * n),
        (ChordCopy::Right, B) => Some(p + n),
        (ChordCopy::Right, F) => None,
    }
}

const COPIES: [ChordCopy; 3] = [ChordCopy::Left, ChordCopy::Center, ChordCopy::Right];

impl ValueAccessor for YSeq<'_> {
    fn len(&self) -> usize {
        3 * self.n
    }
    fn value_at(&self, x: usize) -> i64 {
        let (k, v) = ((x - 1) / self.n, (x - 1) % self.n);
        let p = self.pi.get(v) as usize + 1;
        let ty = ChordType::from_code(self.t.get(v));
        y_of(self.n, p, ty, COPIES[k]).map_or(self.missing, |y| y as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularPermGraph {
    n: usize,
    pi: PackedInts,
    types: PackedInts,
    rmq_max: RmqIndex,
    rmq_min: RmqIndex,
    core: DistanceCore,
}

impl CircularPermGraph {
    pub fn build(pi_inv: &Permutation, t: &[ChordType]) -> Result<Self> {
        validate(pi_inv, t)?;
        let n = pi_inv.len();
        let raw: Vec<u64> = pi_inv.values().iter().map(|&y| y as u64 - 1).collect();
        let pi = PackedInts::from_slice(&raw, ceil_log2(n).max(1));
        let codes: Vec<u64> = t.iter().map(|c| c.code()).collect();
        let types = PackedInts::from_slice(&codes, 2);
        let (rmq_max, rmq_min, pts) = {
            let hi = YSeq { n, pi: &pi, t: &types, missing: i64::MIN };
            let lo = YSeq { n, pi: &pi, t: &types, missing: i64::MAX };
            let pts: Vec<Option<usize>> = (1..=3 * n)
                .map(|x| {
                    let y = hi.value_at(x);
                    (y != i64::MIN).then_some(y as usize)
                })
                .collect();
            (
                RmqIndex::build(&hi, Orientation::Max, DEFAULT_EPS),
                RmqIndex::build(&lo, Orientation::Min, DEFAULT_EPS),
                pts,
            )
        };
        let core = DistanceCore::build(&pts, 3 * n, PioMode::Succinct)?;
        Ok(CircularPermGraph { n, pi, types, rmq_max, rmq_min, core })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn seq(&self, missing: i64) -> YSeq<'_> {
        YSeq { n: self.n, pi: &self.pi, t: &self.types, missing }
    }

    pub fn chord_type(&self, v: usize) -> Result<ChordType> {
        check_vertex(v, self.n)?;
        Ok(ChordType::from_code(self.types.get(v - 1)))
    }

    pub fn pi(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.n)?;
        Ok(self.pi.get(v - 1) as usize + 1)
    }

    /// y-coordinate of a copy of `v` on G₃, `None` if the copy does not exist.
    pub fn y_coord(&self, copy: ChordCopy, v: usize) -> Result<Option<usize>> {
        let p = self.pi(v)?;
        Ok(y_of(self.n, p, self.chord_type(v)?, copy))
    }

    fn x_of(&self, copy: ChordCopy, v: usize) -> usize {
        match copy {
            ChordCopy::Left => v,
            ChordCopy::Center => v + self.n,
            ChordCopy::Right => v + 2 * self.n,
        }
    }

    fn vertex_of(&self, x: usize) -> usize {
        (x - 1) % self.n + 1
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Ok(false);
        }
        let (u, v) = (u.min(v), u.max(v));
        let y = |c, w| self.y_coord(c, w).unwrap();
        let gt = |a: Option<usize>, b: Option<usize>| matches!((a, b), (Some(a), Some(b)) if a > b);
        Ok(gt(y(ChordCopy::Center, u), y(ChordCopy::Center, v))
            || gt(y(ChordCopy::Left, v), y(ChordCopy::Center, u))
            || gt(y(ChordCopy::Center, v), y(ChordCopy::Right, u)))
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        check_vertex(v, self.n)?;
        let n = self.n;
        let yc = self.y_coord(ChordCopy::Center, v)?.unwrap() as i64;
        let xc = v + n;
        let mut out = Vec::new();
        let hi = self.seq(i64::MIN);
        if let Some(mut cur) = self.rmq_max.first(&hi, 1, xc - 1, yc + 1)? {
            loop {
                out.push(self.vertex_of(cur));
                match self.rmq_max.next(&hi, 1, xc - 1, yc + 1, cur)? {
                    Some(x) => cur = x,
                    None => break,
                }
            }
        }
        let lo = self.seq(i64::MAX);
        if xc < 3 * n {
            if let Some(mut cur) = self.rmq_min.first(&lo, xc + 1, 3 * n, yc - 1)? {
                loop {
                    out.push(self.vertex_of(cur));
                    match self.rmq_min.next(&lo, xc + 1, 3 * n, yc - 1, cur)? {
                        Some(x) => cur = x,
                        None => break,
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// Existing copies of `v` as (x, y) on G₃.
    fn copies(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        COPIES.iter().filter_map(move |&c| self.y_coord(c, v).unwrap().map(|y| (self.x_of(c, v), y)))
    }

    /// The copy pair realizing the distance.
    fn best_pair(&self, u: usize, v: usize) -> Option<(u32, (usize, usize), (usize, usize))> {
        let q = self.core.q();
        let mut best: Option<(u32, (usize, usize), (usize, usize))> = None;
        for a in self.copies(u) {
            for b in self.copies(v) {
                if let (Some(d), _) = q.distance(a.0, a.1, b.0, b.1) {
                    if best.map_or(true, |bb| d < bb.0) {
                        best = Some((d, a, b));
                    }
                }
            }
        }
        best
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Ok(Some(0));
        }
        Ok(self.best_pair(u, v).map(|b| b.0))
    }

    /// Shortest path, mapped back from G₃ to chord ids.
    pub fn spath(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Ok(vec![u]);
        }
        let (_, a, b) = self.best_pair(u, v).ok_or(Error::Unreachable { u, v })?;
        let path = self.core.q().spath(a.0, a.1, b.0, b.1)?;
        Ok(path.into_iter().map(|x| self.vertex_of(x)).collect())
    }

    /// How the distance of the best copy pair was decided.
    pub fn distance_case(&self, u: usize, v: usize) -> Result<DistanceCase> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Ok(DistanceCase::Same);
        }
        Ok(match self.best_pair(u, v) {
            None => DistanceCase::Unreachable,
            Some((_, a, b)) => self.core.q().distance(a.0, a.1, b.0, b.1).1,
        })
    }

    /// Bits per component.
    pub fn space_report(&self) -> Vec<(&'static str, usize)> {
        vec![
            ("pi", self.pi.report_bits()),
            ("types", self.types.report_bits()),
            ("rmq_max", self.rmq_max.report_bits()),
            ("rmq_min", self.rmq_min.report_bits()),
            ("ab_bits", self.core.bits.report_bits()),
            ("oracles", self.core.or.report_bits()),
        ]
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(MAGIC)?;
        write_u64(w, self.n as u64)?;
        self.pi.write_to(w)?;
        self.types.write_to(w)?;
        self.rmq_max.write_to(w)?;
        self.rmq_min.write_to(w)?;
        self.core.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let n = read_u64(r)? as usize;
        let pi = PackedInts::read_from(r)?;
        let types = PackedInts::read_from(r)?;
        let rmq_max = RmqIndex::read_from(r)?;
        let rmq_min = RmqIndex::read_from(r)?;
        let core = DistanceCore::read_from(r)?;
        if pi.len() != n || types.len() != n || rmq_max.len() != 3 * n || core.bits.ax.len() != 3 * n {
            return Err(Error::Format("component sizes disagree".into()));
        }
        Ok(CircularPermGraph { n, pi, types, rmq_max, rmq_min, core })
    }
}
