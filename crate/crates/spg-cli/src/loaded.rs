//! A structure read from disk (binary) or built on the fly from a text file.

use spg::bpgraph::BipartitePermGraph;
use spg::cpgraph::CircularPermGraph;
use spg::format::GraphFile;
use spg::pgraph::{Backend, SuccinctPermGraph};
use spg::{Error, Result};
use std::path::Path;

pub enum Loaded {
    Perm(SuccinctPermGraph),
    Bip(BipartitePermGraph),
    Circ(CircularPermGraph),
}

/// How to build from a text file.
#[derive(Clone, Copy, Debug)]
pub struct BuildOpts {
    pub backend: Backend,
    pub bipartite: bool,
    pub oracles: bool,
}

impl Loaded {
    pub fn from_text(g: &GraphFile, o: BuildOpts) -> Result<Self> {
        Ok(match &g.types {
            Some(t) => Loaded::Circ(CircularPermGraph::build(&g.pi_inv, t)?),
            None if o.bipartite && o.oracles => Loaded::Bip(BipartitePermGraph::build_with_oracles(&g.pi_inv)?),
            None if o.bipartite => Loaded::Bip(BipartitePermGraph::build(&g.pi_inv)?),
            None => Loaded::Perm(SuccinctPermGraph::build(&g.pi_inv, o.backend)?),
        })
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = bytes;
        match bytes.get(..5) {
            Some(b"SPGR1") => Ok(Loaded::Perm(SuccinctPermGraph::read_from(&mut r)?)),
            Some(b"SPBP1") => Ok(Loaded::Bip(BipartitePermGraph::read_from(&mut r)?)),
            Some(b"SPCP1") => Ok(Loaded::Circ(CircularPermGraph::read_from(&mut r)?)),
            _ => Err(Error::Format("not a structure file".into())),
        }
    }

    /// Binary structures are recognized by their magic; anything else is
    /// parsed as a text graph file and built with `o`.
    pub fn open(path: &Path, o: BuildOpts) -> Result<Self> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        if let Ok(l) = Self::from_bytes(&bytes) {
            return Ok(l);
        }
        let text = String::from_utf8(bytes).map_err(|_| Error::Format("neither a structure nor a text graph".into()))?;
        Self::from_text(&text.parse()?, o)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::new();
        match self {
            Loaded::Perm(g) => g.write_to(&mut buf)?,
            Loaded::Bip(g) => g.write_to(&mut buf)?,
            Loaded::Circ(g) => g.write_to(&mut buf)?,
        }
        std::fs::write(path, buf).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Perm(_) => "permutation",
            Loaded::Bip(_) => "bipartite",
            Loaded::Circ(_) => "circular",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Loaded::Perm(g) => g.n(),
            Loaded::Bip(g) => g.n(),
            Loaded::Circ(g) => g.n(),
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        match self {
            Loaded::Perm(g) => g.adjacent(u, v),
            Loaded::Bip(g) => g.adjacent(u, v),
            Loaded::Circ(g) => g.adjacent(u, v),
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        match self {
            Loaded::Perm(g) => g.degree(v),
            Loaded::Bip(g) => g.degree(v),
            Loaded::Circ(g) => g.degree(v),
        }
    }

    /// Ascending.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        match self {
            Loaded::Perm(g) => g.neighbors(v),
            Loaded::Bip(g) => Ok(g.neighbors(v)?.collect()),
            Loaded::Circ(g) => g.neighbors(v),
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        match self {
            Loaded::Perm(g) => g.distance(u, v),
            Loaded::Bip(g) => g.distance(u, v),
            Loaded::Circ(g) => g.distance(u, v),
        }
    }

    /// `None` when unreachable.
    pub fn spath(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        if self.distance(u, v)?.is_none() {
            return Ok(None);
        }
        Ok(Some(match self {
            Loaded::Perm(g) => g.spath(u, v)?,
            Loaded::Bip(g) => g.spath(u, v)?,
            Loaded::Circ(g) => g.spath(u, v)?,
        }))
    }

    /// Next hop towards `v`; `u` itself when `u == v`.
    pub fn first(&self, u: usize, v: usize) -> Result<Option<usize>> {
        match self.distance(u, v)? {
            None => Ok(None),
            Some(0) => Ok(Some(u)),
            Some(_) => Ok(Some(match self {
                Loaded::Perm(g) => g.spath_first(u, v)?,
                Loaded::Bip(g) => g.spath_first(u, v)?,
                Loaded::Circ(g) => g.spath(u, v)?[1],
            })),
        }
    }

    /// Per-component bit counts.
    pub fn space(&self) -> Vec<(&'static str, usize)> {
        match self {
            Loaded::Perm(g) => g.space_report().parts,
            Loaded::Bip(g) => {
                let s = g.space();
                vec![("payload", s.payload), ("directories", s.directories), ("oracles", s.oracles)]
            }
            Loaded::Circ(g) => g.space_report(),
        }
    }

    /// `(|A|, |B|)` where defined.
    pub fn ab_counts(&self) -> Option<(usize, usize)> {
        let n = self.n();
        match self {
            Loaded::Perm(g) => Some((
                (1..=n).filter(|&v| g.is_a(v).unwrap()).count(),
                (1..=n).filter(|&v| g.is_b(v).unwrap()).count(),
            )),
            Loaded::Bip(g) => Some((
                (1..=n).filter(|&v| g.is_a(v).unwrap()).count(),
                (1..=n).filter(|&v| g.is_b(v).unwrap()).count(),
            )),
            Loaded::Circ(_) => None,
        }
    }
}
