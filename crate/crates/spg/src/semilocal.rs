//! Semi-local distance labels: vertex `v` carries `(v, Π[v])`; everything else
//! lives in a small shared [`GlobalPart`]. Queries take exactly two labels and
//! the global part, so no third label can ever be consulted.
//!
//! Labels file layout: magic `SPLB1`, `n` (u64 LE), then a packed array of `2n`
//! integers of width `⌈lg n⌉`, holding `x-1, y-1` per vertex. Labels are not
//! self-delimiting; `n` is carried alongside.
//!
//! Global blob: magic `SPSG1`, `n`, then the A/B bit vectors and the two
//! interval oracles.

use crate::bits::{ceil_log2, PackedInts};
use crate::cascade::{DistanceCore, DistanceCase};
use crate::core::Permutation;
use crate::error::{Error, Result};
use crate::pio::PioMode;
use crate::ser::{read_u64, write_u64};
use std::io::{Read, Write};

const LABELS_MAGIC: &[u8; 5] = b"SPLB1";
const GLOBAL_MAGIC: &[u8; 5] = b"SPSG1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalPart {
    n: usize,
    core: DistanceCore,
}

/// Labels for all vertices (index `v-1`) and the shared part.
pub fn encode(pi_inv: &Permutation) -> Result<(Vec<VertexLabel>, GlobalPart)> {
    let n = pi_inv.len();
    let points: Vec<Option<usize>> = pi_inv.values().iter().map(|&y| Some(y)).collect();
    let core = DistanceCore::build(&points, n, PioMode::Succinct)?;
    let labels = (1..=n).map(|x| VertexLabel { x, y: pi_inv.at(x) }).collect();
    Ok((labels, GlobalPart { n, core }))
}

/// Bits per label.
pub fn label_bits(n: usize) -> usize {
    2 * ceil_log2(n) as usize
}

/// Adjacency needs only the two labels.
pub fn adjacent_labels(lu: VertexLabel, lv: VertexLabel) -> bool {
    (lu.x < lv.x && lu.y > lv.y) || (lu.x > lv.x && lu.y < lv.y)
}

impl GlobalPart {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn report_bits(&self) -> usize {
        self.core.report_bits()
    }

    fn check(&self, l: VertexLabel) -> Result<()> {
        if l.x == 0 || l.x > self.n || l.y == 0 || l.y > self.n {
            return Err(Error::LabelMismatch(l.x.max(l.y), self.n));
        }
        Ok(())
    }

    pub fn distance_case(&self, lu: VertexLabel, lv: VertexLabel) -> Result<(Option<u32>, DistanceCase)> {
        self.check(lu)?;
        self.check(lv)?;
        Ok(self.core.q().distance(lu.x, lu.y, lv.x, lv.y))
    }

    /// `None` when unreachable.
    pub fn distance_labels(&self, lu: VertexLabel, lv: VertexLabel) -> Result<Option<u32>> {
        Ok(self.distance_case(lu, lv)?.0)
    }

    /// Label of the next hop from `lu` towards `lv`; intermediate hops are A/B
    /// vertices, whose y is read back from the bit vectors.
    pub fn spath_first_labels(&self, lu: VertexLabel, lv: VertexLabel) -> Result<VertexLabel> {
        self.check(lu)?;
        self.check(lv)?;
        let q = self.core.q();
        let w = q.spath_first(lu.x, lu.y, lv.x, lv.y)?;
        Ok(if w == lv.x { lv } else { VertexLabel { x: w, y: q.pi_ab(w) } })
    }

    pub fn spath_labels(&self, lu: VertexLabel, lv: VertexLabel) -> Result<Vec<VertexLabel>> {
        let mut out = vec![lu];
        let mut w = lu;
        while w.x != lv.x {
            w = self.spath_first_labels(w, lv)?;
            out.push(w);
        }
        Ok(out)
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(GLOBAL_MAGIC)?;
        write_u64(w, self.n as u64)?;
        self.core.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != GLOBAL_MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let n = read_u64(r)? as usize;
        let core = DistanceCore::read_from(r)?;
        if core.bits.ax.len() != n {
            return Err(Error::Format("component sizes disagree".into()));
        }
        Ok(GlobalPart { n, core })
    }
}

/// Packs labels at exactly `2⌈lg n⌉` bits each.
pub fn write_labels<W: Write>(labels: &[VertexLabel], w: &mut W) -> Result<()> {
    let n = labels.len();
    let width = ceil_log2(n);
    let mut vals = Vec::with_capacity(2 * n);
    for l in labels {
        if l.x == 0 || l.x > n || l.y == 0 || l.y > n {
            return Err(Error::LabelMismatch(l.x.max(l.y), n));
        }
        vals.push((l.x - 1) as u64);
        vals.push((l.y - 1) as u64);
    }
    w.write_all(LABELS_MAGIC)?;
    write_u64(w, n as u64)?;
    PackedInts::from_slice(&vals, width).write_to(w)
}

pub fn read_labels<R: Read>(r: &mut R) -> Result<Vec<VertexLabel>> {
    let mut magic = [0u8; 5];
    r.read_exact(&mut magic)?;
    if &magic != LABELS_MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let n = read_u64(r)? as usize;
    let p = PackedInts::read_from(r)?;
    if p.len() != 2 * n || p.width() != ceil_log2(n) {
        return Err(Error::Format("label array size".into()));
    }
    Ok((0..n)
        .map(|i| VertexLabel { x: p.get(2 * i) as usize + 1, y: p.get(2 * i + 1) as usize + 1 })
        .collect())
}
