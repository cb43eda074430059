//! Succinct ordered permutation graphs.
//!
//! Two backends share the distance machinery of [`crate::cascade`]:
//!
//! * `Array`: Π packed in `n⌈lg n⌉` bits plus a max- and a min-RMQ index;
//!   O(1) adjacency, neighbor streaming by threshold iteration.
//! * `Grid`: Π as a wavelet matrix; O(log n) adjacency and counted degrees.
//!
//! Binary layout (all integers u64 little-endian): magic `SPGR1`, `n`,
//! backend tag (0 array, 1 grid), then for the array backend the packed Π,
//! the max index and the min index, for the grid backend the wavelet matrix;
//! finally `Ax`, `Bx`, `Ay`, `By` and the two interval-graph oracles.

use crate::bits::{ceil_log2, PackedInts};
use crate::cascade::DistanceCore;
pub use crate::cascade::{DistanceCase, ExtremalNeighbors};
use crate::core::Permutation;
use crate::error::{check_vertex, Error, Result};
use crate::grid::PermGrid;
use crate::pio::PioMode;
use crate::rmq::{Orientation, RmqIndex, ValueAccessor, DEFAULT_EPS};
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

pub const MAGIC: &[u8; 5] = b"SPGR1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    #[default]
    Array,
    Grid,
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "array" => Ok(Backend::Array),
            "grid" => Ok(Backend::Grid),
            _ => Err(Error::Format(format!("unknown backend {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Config {
    pub backend: Backend,
    pub eps: f64,
    pub pio: PioMode,
}

impl Default for Config {
    fn default() -> Self {
        Config { backend: Backend::Array, eps: DEFAULT_EPS, pio: PioMode::Succinct }
    }
}

/// Packed Π as a 1-based value sequence.
pub(crate) struct PiAccess<'a>(pub &'a PackedInts);

impl ValueAccessor for PiAccess<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }
    #[inline]
    fn value_at(&self, i: usize) -> i64 {
        self.0.get(i - 1) as i64 + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Store {
    Array { pi: PackedInts, rmq_max: RmqIndex, rmq_min: RmqIndex },
    Grid { grid: PermGrid },
}

/// Bits per component.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpaceReport {
    pub parts: Vec<(&'static str, usize)>,
}

impl SpaceReport {
    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.1).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccinctPermGraph {
    n: usize,
    store: Store,
    core: DistanceCore,
}

/// Stream of neighbors produced by [`SuccinctPermGraph::neighbors_minus`] and friends.
pub struct NeighborIter<'a> {
    inner: IterInner<'a>,
}

enum IterInner<'a> {
    Rmq { idx: &'a RmqIndex, pi: PiAccess<'a>, l: usize, r: usize, y: i64, cur: Option<usize>, started: bool },
    List(std::vec::IntoIter<usize>),
}

impl Iterator for NeighborIter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        match &mut self.inner {
            IterInner::List(it) => it.next(),
            IterInner::Rmq { idx, pi, l, r, y, cur, started } => {
                if *l > *r {
                    return None;
                }
                let nxt = if !*started {
                    *started = true;
                    idx.first(pi, *l, *r, *y).unwrap()
                } else {
                    match *cur {
                        None => None,
                        Some(i) => idx.next(pi, *l, *r, *y, i).unwrap(),
                    }
                };
                *cur = nxt;
                nxt
            }
        }
    }
}

impl SuccinctPermGraph {
    pub fn build(pi_inv: &Permutation, backend: Backend) -> Result<Self> {
        Self::build_with(pi_inv, &Config { backend, ..Config::default() })
    }

    pub fn build_with(pi_inv: &Permutation, cfg: &Config) -> Result<Self> {
        let n = pi_inv.len();
        let vals = pi_inv.values();
        let store = match cfg.backend {
            Backend::Array => {
                let raw: Vec<u64> = vals.iter().map(|&y| y as u64 - 1).collect();
                let pi = PackedInts::from_slice(&raw, ceil_log2(n).max(1));
                let acc = PiAccess(&pi);
                let rmq_max = RmqIndex::build(&acc, Orientation::Max, cfg.eps);
                let rmq_min = RmqIndex::build(&acc, Orientation::Min, cfg.eps);
                Store::Array { pi, rmq_max, rmq_min }
            }
            Backend::Grid => Store::Grid { grid: PermGrid::new(pi_inv) },
        };
        let pts: Vec<Option<usize>> = vals.iter().map(|&y| Some(y)).collect();
        let core = DistanceCore::build(&pts, n, cfg.pio)?;
        Ok(SuccinctPermGraph { n, store, core })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn backend(&self) -> Backend {
        match self.store {
            Store::Array { .. } => Backend::Array,
            Store::Grid { .. } => Backend::Grid,
        }
    }

    /// `Π[v] = π⁻¹(v)`.
    pub fn pi(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.n)?;
        Ok(self.pi_unchecked(v))
    }

    #[inline]
    fn pi_unchecked(&self, v: usize) -> usize {
        match &self.store {
            Store::Array { pi, .. } => pi.get(v - 1) as usize + 1,
            Store::Grid { grid } => grid.y_for_x(v).unwrap(),
        }
    }

    pub fn is_a(&self, v: usize) -> Result<bool> {
        check_vertex(v, self.n)?;
        Ok(self.core.bits.ax.get(v - 1))
    }

    pub fn is_b(&self, v: usize) -> Result<bool> {
        check_vertex(v, self.n)?;
        Ok(self.core.bits.bx.get(v - 1))
    }

    pub fn is_isolated(&self, v: usize) -> Result<bool> {
        check_vertex(v, self.n)?;
        Ok(self.core.q().isolated(v))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        let (pu, pv) = (self.pi_unchecked(u), self.pi_unchecked(v));
        Ok((u < v && pu > pv) || (u > v && pu < pv))
    }

    fn list_iter(v: Vec<usize>) -> NeighborIter<'static> {
        NeighborIter { inner: IterInner::List(v.into_iter()) }
    }

    /// Neighbors smaller than `v` (array backend: in threshold-iteration order;
    /// grid backend: ascending).
    pub fn neighbors_minus(&self, v: usize) -> Result<NeighborIter<'_>> {
        check_vertex(v, self.n)?;
        let pv = self.pi_unchecked(v);
        Ok(match &self.store {
            Store::Array { pi, rmq_max, .. } => NeighborIter {
                inner: IterInner::Rmq {
                    idx: rmq_max,
                    pi: PiAccess(pi),
                    l: 1,
                    r: v - 1,
                    y: pv as i64 + 1,
                    cur: None,
                    started: false,
                },
            },
            Store::Grid { grid } => Self::list_iter(grid.report(1, v - 1, pv + 1, self.n).into_iter().map(|p| p.x).collect()),
        })
    }

    /// Neighbors larger than `v`.
    pub fn neighbors_plus(&self, v: usize) -> Result<NeighborIter<'_>> {
        check_vertex(v, self.n)?;
        let pv = self.pi_unchecked(v);
        Ok(match &self.store {
            Store::Array { pi, rmq_min, .. } => NeighborIter {
                inner: IterInner::Rmq {
                    idx: rmq_min,
                    pi: PiAccess(pi),
                    l: v + 1,
                    r: self.n,
                    y: pv as i64 - 1,
                    cur: None,
                    started: false,
                },
            },
            Store::Grid { grid } => Self::list_iter(
                if pv == 1 { Vec::new() } else { grid.report(v + 1, self.n, 1, pv - 1).into_iter().map(|p| p.x).collect() },
            ),
        })
    }

    /// Neighbors of `v` in the complement graph that are smaller than `v`.
    pub fn neighbors_minus_complement(&self, v: usize) -> Result<NeighborIter<'_>> {
        check_vertex(v, self.n)?;
        let pv = self.pi_unchecked(v);
        Ok(match &self.store {
            Store::Array { pi, rmq_min, .. } => NeighborIter {
                inner: IterInner::Rmq {
                    idx: rmq_min,
                    pi: PiAccess(pi),
                    l: 1,
                    r: v - 1,
                    y: pv as i64 - 1,
                    cur: None,
                    started: false,
                },
            },
            Store::Grid { grid } => Self::list_iter(
                if pv == 1 { Vec::new() } else { grid.report(1, v - 1, 1, pv - 1).into_iter().map(|p| p.x).collect() },
            ),
        })
    }

    /// All neighbors, ascending.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = self.neighbors_minus(v)?.chain(self.neighbors_plus(v)?).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Smallest x in `[x1, x2]` whose point has y in `[y1, y2]`.
    fn grid_first(grid: &PermGrid, x1: usize, x2: usize, y1: usize, y2: usize) -> Option<usize> {
        if x1 > x2 || y1 > y2 || grid.count(x1, x2, y1, y2) == 0 {
            return None;
        }
        let (mut lo, mut hi) = (x1, x2);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if grid.count(x1, mid, y1, y2) > 0 {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }

    /// Cursor-style neighbor iteration: all of `N⁻(u)` first, then `N⁺(u)`.
    /// Pass `None` to start and the previously returned vertex to continue.
    pub fn next_neighbor(&self, u: usize, w: Option<usize>) -> Result<Option<usize>> {
        check_vertex(u, self.n)?;
        if let Some(w) = w {
            if !self.adjacent(u, w)? {
                return Err(Error::NotNeighbor(w, u));
            }
        }
        let pu = self.pi_unchecked(u);
        match &self.store {
            Store::Array { pi, rmq_max, rmq_min } => {
                let acc = PiAccess(pi);
                let ymax = pu as i64 + 1;
                let ymin = pu as i64 - 1;
                if w.map_or(true, |w| w < u) && u > 1 {
                    let nxt = match w {
                        None => rmq_max.first(&acc, 1, u - 1, ymax)?,
                        Some(w) => rmq_max.next(&acc, 1, u - 1, ymax, w)?,
                    };
                    if nxt.is_some() {
                        return Ok(nxt);
                    }
                }
                if u == self.n {
                    return Ok(None);
                }
                match w {
                    Some(w) if w > u => rmq_min.next(&acc, u + 1, self.n, ymin, w),
                    _ => rmq_min.first(&acc, u + 1, self.n, ymin),
                }
            }
            Store::Grid { grid } => {
                let n = self.n;
                let start = w.map_or(1, |w| w + 1);
                if start < u {
                    if let Some(x) = Self::grid_first(grid, start, u - 1, pu + 1, n) {
                        return Ok(Some(x));
                    }
                }
                Ok(Self::grid_first(grid, start.max(u + 1), n, 1, pu - 1))
            }
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        check_vertex(v, self.n)?;
        let pv = self.pi_unchecked(v);
        Ok(match &self.store {
            Store::Grid { grid } => grid.count(1, v - 1, pv + 1, self.n) + grid.count(v + 1, self.n, 1, pv - 1),
            Store::Array { .. } => self.neighbors_minus(v)?.count() + self.neighbors_plus(v)?.count(),
        })
    }

    pub fn extremal(&self, v: usize) -> Result<ExtremalNeighbors> {
        check_vertex(v, self.n)?;
        Ok(self.core.q().extremal(v, self.pi_unchecked(v)))
    }

    /// Exact distance; `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        Ok(self.distance_case(u, v)?.0)
    }

    /// Distance together with the branch of the cascade that decided it.
    pub fn distance_case(&self, u: usize, v: usize) -> Result<(Option<u32>, DistanceCase)> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        Ok(self.core.q().distance(u, self.pi_unchecked(u), v, self.pi_unchecked(v)))
    }

    pub fn spath_first(&self, u: usize, v: usize) -> Result<usize> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        self.core.q().spath_first(u, self.pi_unchecked(u), v, self.pi_unchecked(v))
    }

    pub fn spath(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        self.core.q().spath(u, self.pi_unchecked(u), v, self.pi_unchecked(v))
    }

    pub fn space_report(&self) -> SpaceReport {
        let mut parts = Vec::new();
        match &self.store {
            Store::Array { pi, rmq_max, rmq_min } => {
                parts.push(("pi", pi.report_bits()));
                parts.push(("rmq_max", rmq_max.report_bits()));
                parts.push(("rmq_min", rmq_min.report_bits()));
            }
            Store::Grid { grid } => parts.push(("grid", grid.report_bits())),
        }
        let c = &self.core;
        parts.push(("ax", c.bits.ax.report_bits()));
        parts.push(("bx", c.bits.bx.report_bits()));
        parts.push(("ay", c.bits.ay.report_bits()));
        parts.push(("by", c.bits.by.report_bits()));
        parts.push(("ga", c.or.ga.report_bits()));
        parts.push(("gb", c.or.gb.report_bits()));
        SpaceReport { parts }
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(MAGIC)?;
        write_u64(w, self.n as u64)?;
        match &self.store {
            Store::Array { pi, rmq_max, rmq_min } => {
                write_u64(w, 0)?;
                pi.write_to(w)?;
                rmq_max.write_to(w)?;
                rmq_min.write_to(w)?;
            }
            Store::Grid { grid } => {
                write_u64(w, 1)?;
                grid.write_to(w)?;
            }
        }
        self.core.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let n = read_u64(r)? as usize;
        let store = match read_u64(r)? {
            0 => Store::Array {
                pi: PackedInts::read_from(r)?,
                rmq_max: RmqIndex::read_from(r)?,
                rmq_min: RmqIndex::read_from(r)?,
            },
            1 => Store::Grid { grid: PermGrid::read_from(r)? },
            t => return Err(Error::Format(format!("unknown backend tag {t}"))),
        };
        let core = DistanceCore::read_from(r)?;
        let ok = match &store {
            Store::Array { pi, rmq_max, rmq_min } => pi.len() == n && rmq_max.len() == n && rmq_min.len() == n,
            Store::Grid { grid } => grid.n() == n,
        };
        if !ok || core.bits.ax.len() != n {
            return Err(Error::Format("component sizes disagree".into()));
        }
        Ok(SuccinctPermGraph { n, store, core })
    }
}
