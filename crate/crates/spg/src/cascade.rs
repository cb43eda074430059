//! Extremal neighbors and the four-case distance cascade.
//!
//! Works on a point set `{(x, y)}` in a `u × u` universe with distinct x and
//! distinct y; columns or rows without a point are allowed (they simply hold
//! zeros in the bit vectors). A = points that are prefix maxima in y, B =
//! suffix minima. Callers supply `y` for the endpoints of a query; for
//! intermediate A/B points it is recovered from the bit vectors.
//!
//! The four bit vectors are read through [`AbView`], so structures that can
//! derive B from A (bipartite graphs) need not store them twice.

use crate::bits::BitSeq;
use crate::error::{Error, Result};
use crate::pio::{Interval, PioMode, ProperIntervalOracle};
use std::io::{Read, Write};

/// Which branch of the cascade decided a distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceCase {
    Same,
    Adjacent,
    Two,
    Three,
    /// via the interval graphs of A or B
    Four,
    Unreachable,
}

/// `a⁻, a⁺, b⁻, b⁺` of a vertex. Always defined for a valid graph: vertex 1 is
/// in A, vertex n in B, and the extreme values of Π sit in A and B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalNeighbors {
    pub a_minus: usize,
    pub a_plus: usize,
    pub b_minus: usize,
    pub b_plus: usize,
}

/// Rank (over a prefix of length `i`) and select (1-based result) on `Ax`, `Bx`, `Ay`, `By`.
pub(crate) trait AbView {
    fn ax_get(&self, x: usize) -> bool;
    fn bx_get(&self, x: usize) -> bool;
    fn ax_rank(&self, i: usize) -> usize;
    fn bx_rank(&self, i: usize) -> usize;
    fn ay_rank(&self, i: usize) -> usize;
    fn by_rank(&self, i: usize) -> usize;
    fn ax_sel(&self, k: usize) -> Option<usize>;
    fn bx_sel(&self, k: usize) -> Option<usize>;
    fn ay_sel(&self, k: usize) -> Option<usize>;
    fn by_sel(&self, k: usize) -> Option<usize>;
    fn a_count(&self) -> usize;
    fn b_count(&self) -> usize;
}

/// Four explicit bit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FourBits {
    pub ax: BitSeq,
    pub bx: BitSeq,
    pub ay: BitSeq,
    pub by: BitSeq,
}

impl FourBits {
    /// `points[x - 1] = Some(y)`; `universe` bounds both coordinates.
    pub fn build(points: &[Option<usize>], universe: usize) -> Self {
        let mut ax = vec![false; universe];
        let mut bx = vec![false; universe];
        let mut ay = vec![false; universe];
        let mut by = vec![false; universe];
        let mut best = 0;
        for (i, p) in points.iter().enumerate() {
            if let Some(y) = *p {
                if y > best {
                    best = y;
                    ax[i] = true;
                    ay[y - 1] = true;
                }
            }
        }
        let mut best = usize::MAX;
        for (i, p) in points.iter().enumerate().rev() {
            if let Some(y) = *p {
                if y < best {
                    best = y;
                    bx[i] = true;
                    by[y - 1] = true;
                }
            }
        }
        FourBits {
            ax: BitSeq::from_bools(ax),
            bx: BitSeq::from_bools(bx),
            ay: BitSeq::from_bools(ay),
            by: BitSeq::from_bools(by),
        }
    }

    pub fn report_bits(&self) -> usize {
        [&self.ax, &self.bx, &self.ay, &self.by].iter().map(|b| b.report_bits()).sum()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        for b in [&self.ax, &self.bx, &self.ay, &self.by] {
            b.write_to(w)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let ax = BitSeq::read_from(r)?;
        let bx = BitSeq::read_from(r)?;
        let ay = BitSeq::read_from(r)?;
        let by = BitSeq::read_from(r)?;
        Ok(FourBits { ax, bx, ay, by })
    }
}

impl AbView for FourBits {
    fn ax_get(&self, x: usize) -> bool {
        self.ax.get(x - 1)
    }
    fn bx_get(&self, x: usize) -> bool {
        self.bx.get(x - 1)
    }
    fn ax_rank(&self, i: usize) -> usize {
        self.ax.rank1(i)
    }
    fn bx_rank(&self, i: usize) -> usize {
        self.bx.rank1(i)
    }
    fn ay_rank(&self, i: usize) -> usize {
        self.ay.rank1(i)
    }
    fn by_rank(&self, i: usize) -> usize {
        self.by.rank1(i)
    }
    fn ax_sel(&self, k: usize) -> Option<usize> {
        self.ax.select1(k)
    }
    fn bx_sel(&self, k: usize) -> Option<usize> {
        self.bx.select1(k)
    }
    fn ay_sel(&self, k: usize) -> Option<usize> {
        self.ay.select1(k)
    }
    fn by_sel(&self, k: usize) -> Option<usize> {
        self.by.select1(k)
    }
    fn a_count(&self) -> usize {
        self.ax.count_ones()
    }
    fn b_count(&self) -> usize {
        self.bx.count_ones()
    }
}

/// B stored implicitly as the complement of A (no vertex in both parts).
pub(crate) struct ComplementBits<'a> {
    pub ax: &'a BitSeq,
    pub ay: &'a BitSeq,
}

impl AbView for ComplementBits<'_> {
    fn ax_get(&self, x: usize) -> bool {
        self.ax.get(x - 1)
    }
    fn bx_get(&self, x: usize) -> bool {
        !self.ax.get(x - 1)
    }
    fn ax_rank(&self, i: usize) -> usize {
        self.ax.rank1(i)
    }
    fn bx_rank(&self, i: usize) -> usize {
        self.ax.rank0(i)
    }
    fn ay_rank(&self, i: usize) -> usize {
        self.ay.rank1(i)
    }
    fn by_rank(&self, i: usize) -> usize {
        self.ay.rank0(i)
    }
    fn ax_sel(&self, k: usize) -> Option<usize> {
        self.ax.select1(k)
    }
    fn bx_sel(&self, k: usize) -> Option<usize> {
        self.ax.select0(k)
    }
    fn ay_sel(&self, k: usize) -> Option<usize> {
        self.ay.select1(k)
    }
    fn by_sel(&self, k: usize) -> Option<usize> {
        self.ay.select0(k)
    }
    fn a_count(&self) -> usize {
        self.ax.count_ones()
    }
    fn b_count(&self) -> usize {
        self.ax.count_zeros()
    }
}

/// The interval graphs of A and B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Oracles {
    pub ga: ProperIntervalOracle,
    pub gb: ProperIntervalOracle,
}

impl Oracles {
    pub fn build<V: AbView>(bits: &V, mode: PioMode) -> Result<Self> {
        let empty = Oracles {
            ga: ProperIntervalOracle::from_reach(&[], mode)?,
            gb: ProperIntervalOracle::from_reach(&[], mode)?,
        };
        let c = Cascade { bits, or: &empty };
        let a_iv: Vec<Interval> = (1..=bits.a_count())
            .map(|k| {
                let a = bits.ax_sel(k).unwrap();
                let e = c.extremal(a, c.pi_a(a));
                Interval { left: e.b_minus as i64, right: e.b_plus as i64, tiebreak: a }
            })
            .collect();
        let b_iv: Vec<Interval> = (1..=bits.b_count())
            .map(|k| {
                let b = bits.bx_sel(k).unwrap();
                let e = c.extremal(b, c.pi_b(b));
                Interval { left: e.a_minus as i64, right: e.a_plus as i64, tiebreak: b }
            })
            .collect();
        let (ga, oa) = ProperIntervalOracle::build_from_intervals(&a_iv, mode)?;
        let (gb, ob) = ProperIntervalOracle::build_from_intervals(&b_iv, mode)?;
        debug_assert!(oa.iter().enumerate().all(|(i, &j)| i == j));
        debug_assert!(ob.iter().enumerate().all(|(i, &j)| i == j));
        Ok(Oracles { ga, gb })
    }

    pub fn report_bits(&self) -> usize {
        self.ga.report_bits() + self.gb.report_bits()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        self.ga.write_to(w)?;
        self.gb.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let ga = ProperIntervalOracle::read_from(r)?;
        let gb = ProperIntervalOracle::read_from(r)?;
        Ok(Oracles { ga, gb })
    }
}

const NONE: usize = usize::MAX;

/// Query engine over a bit view and its oracles.
pub(crate) struct Cascade<'a, V: AbView> {
    pub bits: &'a V,
    pub or: &'a Oracles,
}

impl<V: AbView> Cascade<'_, V> {
    #[inline]
    fn or_none(k: usize, s: Option<usize>) -> usize {
        if k == 0 {
            NONE
        } else {
            s.unwrap_or(NONE)
        }
    }

    #[inline]
    pub fn a_plus(&self, v: usize) -> usize {
        let k = self.bits.ax_rank(v);
        Self::or_none(k, self.bits.ax_sel(k.max(1)))
    }

    #[inline]
    pub fn a_minus(&self, pv: usize) -> usize {
        self.bits.ax_sel(self.bits.ay_rank(pv - 1) + 1).unwrap_or(NONE)
    }

    #[inline]
    pub fn b_plus(&self, pv: usize) -> usize {
        let k = self.bits.by_rank(pv);
        Self::or_none(k, self.bits.bx_sel(k.max(1)))
    }

    #[inline]
    pub fn b_minus(&self, v: usize) -> usize {
        self.bits.bx_sel(self.bits.bx_rank(v - 1) + 1).unwrap_or(NONE)
    }

    /// y-value of an A point.
    #[inline]
    pub fn pi_a(&self, a: usize) -> usize {
        self.bits.ay_sel(self.bits.ax_rank(a)).unwrap()
    }

    /// y-value of a B point.
    #[inline]
    pub fn pi_b(&self, b: usize) -> usize {
        self.bits.by_sel(self.bits.bx_rank(b)).unwrap()
    }

    pub fn extremal(&self, v: usize, pv: usize) -> ExtremalNeighbors {
        ExtremalNeighbors {
            a_minus: self.a_minus(pv),
            a_plus: self.a_plus(v),
            b_minus: self.b_minus(v),
            b_plus: self.b_plus(pv),
        }
    }

    #[inline]
    pub fn isolated(&self, v: usize) -> bool {
        self.bits.ax_get(v) && self.bits.bx_get(v)
    }

    #[inline]
    fn adj(u: usize, pu: usize, v: usize, pv: usize) -> bool {
        (u < v && pu > pv) || (u > v && pu < pv)
    }

    fn d_ga(&self, x: usize, y: usize) -> Option<u32> {
        if x == NONE || y == NONE || !self.bits.ax_get(x) || !self.bits.ax_get(y) {
            return None;
        }
        self.or.ga.dist(self.bits.ax_rank(x), self.bits.ax_rank(y)).ok().flatten()
    }

    fn d_gb(&self, x: usize, y: usize) -> Option<u32> {
        if x == NONE || y == NONE || !self.bits.bx_get(x) || !self.bits.bx_get(y) {
            return None;
        }
        self.or.gb.dist(self.bits.bx_rank(x), self.bits.bx_rank(y)).ok().flatten()
    }

    /// Distance between points `u` and `v` with y-values `pu`, `pv`.
    pub fn distance(&self, u: usize, pu: usize, v: usize, pv: usize) -> (Option<u32>, DistanceCase) {
        if u == v {
            return (Some(0), DistanceCase::Same);
        }
        let (u, pu, v, pv) = if u < v { (u, pu, v, pv) } else { (v, pv, u, pu) };
        if self.isolated(u) || self.isolated(v) {
            return (None, DistanceCase::Unreachable);
        }
        if pu > pv {
            return (Some(1), DistanceCase::Adjacent);
        }
        let apu = self.a_plus(u);
        let bpu = self.b_plus(pu);
        let amv = self.a_minus(pv);
        let bmv = self.b_minus(v);
        if amv <= apu || bmv <= bpu {
            return (Some(2), DistanceCase::Two);
        }
        let bp_apu = self.b_plus(self.pi_a(apu));
        let ap_bpu = self.a_plus(bpu);
        if amv <= ap_bpu || bmv <= bp_apu {
            return (Some(3), DistanceCase::Three);
        }
        let cands = [
            self.d_gb(bpu, bmv).map(|d| 2 + 2 * d),
            self.d_gb(bp_apu, bmv).map(|d| 3 + 2 * d),
            self.d_ga(apu, amv).map(|d| 2 + 2 * d),
            self.d_ga(ap_bpu, amv).map(|d| 3 + 2 * d),
        ];
        match cands.iter().flatten().min() {
            Some(&d) => (Some(d), DistanceCase::Four),
            None => (None, DistanceCase::Unreachable),
        }
    }

    /// y-value of an A or B point.
    pub fn pi_ab(&self, w: usize) -> usize {
        if self.bits.ax_get(w) {
            self.pi_a(w)
        } else {
            self.pi_b(w)
        }
    }

    /// Next vertex after `u` on a shortest path to `v`: `v` itself when adjacent,
    /// otherwise one of `a⁺(u), b⁺(u)` (for `u < v`) or `a⁻(u), b⁻(u)` (for `u > v`).
    pub fn spath_first(&self, u: usize, pu: usize, v: usize, pv: usize) -> Result<usize> {
        let (d, _) = self.distance(u, pu, v, pv);
        let d = match d {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::Unreachable { u, v }),
        };
        if d == 1 {
            return Ok(v);
        }
        let cands = if u < v { [self.a_plus(u), self.b_plus(pu)] } else { [self.a_minus(pu), self.b_minus(u)] };
        for w in cands {
            if w == NONE || w == u {
                continue;
            }
            let pw = self.pi_ab(w);
            if Self::adj(u, pu, w, pw) && self.distance(w, pw, v, pv).0 == Some(d - 1) {
                return Ok(w);
            }
        }
        unreachable!("no extremal neighbor of {u} lies on a shortest path to {v}")
    }

    /// Full path `u … v`; y-values are needed for the endpoints only.
    pub fn spath(&self, u: usize, pu: usize, v: usize, pv: usize) -> Result<Vec<usize>> {
        let mut out = vec![u];
        let (mut w, mut pw) = (u, pu);
        while w != v {
            let next = self.spath_first(w, pw, v, pv)?;
            pw = if next == v { pv } else { self.pi_ab(next) };
            w = next;
            out.push(w);
        }
        Ok(out)
    }
}

/// Explicit bit vectors plus oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DistanceCore {
    pub bits: FourBits,
    pub or: Oracles,
}

impl DistanceCore {
    pub fn build(points: &[Option<usize>], universe: usize, mode: PioMode) -> Result<Self> {
        let bits = FourBits::build(points, universe);
        let or = Oracles::build(&bits, mode)?;
        Ok(DistanceCore { bits, or })
    }

    pub fn q(&self) -> Cascade<'_, FourBits> {
        Cascade { bits: &self.bits, or: &self.or }
    }

    pub fn report_bits(&self) -> usize {
        self.bits.report_bits() + self.or.report_bits()
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        self.bits.write_to(w)?;
        self.or.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let bits = FourBits::read_from(r)?;
        let or = Oracles::read_from(r)?;
        Ok(DistanceCore { bits, or })
    }
}
