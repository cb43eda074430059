//! Plain permutation model and brute-force reference oracles.
//!
//! Vertices are 1-based. A graph is given by `pi_inv`, the array with
//! `pi_inv[v] = π⁻¹(v)`; `{u, v}` is an edge iff `(u - v)(pi_inv[u] - pi_inv[v]) < 0`.

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A bijection on `1..=n`, stored 1-based (`values[0]` is position 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (i, &x) in values.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {x} at position {} outside 1..={n}", i + 1),
                });
            }
            if seen[x] {
                return Err(Error::InvalidPermutation { n, reason: format!("value {x} repeated") });
            }
            seen[x] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    pub fn reversed(n: usize) -> Self {
        Permutation { values: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.values.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// `Π'[i] = n + 1 - Π[i]`; the graph of the result is the complement.
    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation { values: self.values.iter().map(|&x| n + 1 - x).collect() }
    }
}

/// Build `Π = π⁻¹` from `π` given as its value sequence.
pub fn pi_inverse_from_pi(pi: &[usize]) -> Result<Permutation> {
    Ok(Permutation::new(pi.to_vec())?.inverse())
}

/// Explicit adjacency lists (sorted), for testing and small inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceGraph {
    adj: Vec<Vec<usize>>,
}

impl ReferenceGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
            a.dedup();
        }
        ReferenceGraph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `source`; index 0 unused, `None` = unreachable.
    pub fn bfs_all(&self, source: usize) -> Result<Vec<Option<u32>>> {
        let n = self.n();
        crate::error::check_vertex(source, n)?;
        let mut dist = vec![None; n + 1];
        dist[source] = Some(0);
        let mut q = VecDeque::from([source]);
        while let Some(x) = q.pop_front() {
            let d = dist[x].unwrap() + 1;
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d);
                    q.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// Full distance matrix, row `u` at index `u` (1-based, row 0 empty).
    pub fn all_pairs(&self) -> Vec<Vec<Option<u32>>> {
        let mut rows = vec![Vec::new()];
        for s in 1..=self.n() {
            rows.push(self.bfs_all(s).unwrap());
        }
        rows
    }
}

/// O(n²) construction straight from the inversion definition.
pub fn build_reference(pi_inv: &Permutation) -> ReferenceGraph {
    let n = pi_inv.len();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if pi_inv.at(u) > pi_inv.at(v) {
                edges.push((u, v));
            }
        }
    }
    ReferenceGraph::from_edges(n, edges)
}

/// Number of inversions, O(n log n) with a Fenwick tree.
pub fn inversions_count(pi_inv: &Permutation) -> u64 {
    let n = pi_inv.len();
    let mut fen = vec![0u32; n + 1];
    let mut inv = 0u64;
    for (seen, &x) in pi_inv.values().iter().enumerate() {
        // count earlier values <= x
        let mut i = x;
        let mut le = 0u64;
        while i > 0 {
            le += fen[i] as u64;
            i &= i - 1;
        }
        inv += seen as u64 - le;
        let mut i = x;
        while i <= n {
            fen[i] += 1;
            i += i & i.wrapping_neg();
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn eleven() -> Permutation {
        pi_inverse_from_pi(&[5, 7, 2, 6, 1, 11, 8, 10, 4, 3, 9]).unwrap()
    }

    #[test]
    fn eleven_edges() {
        let p = eleven();
        assert_eq!(p.values(), &[5, 3, 10, 9, 1, 4, 2, 7, 11, 8, 6]);
        let g = build_reference(&p);
        assert_eq!(g.edge_count(), 24);
        assert!(g.adjacent(1, 2) && g.adjacent(3, 11) && !g.adjacent(1, 3));
        assert_eq!(inversions_count(&p), 24);
        assert_eq!(g.bfs_all(5).unwrap()[9], Some(3));
    }

    #[test]
    fn trivial_graphs() {
        let id = build_reference(&Permutation::identity(6));
        assert_eq!(id.edge_count(), 0);
        assert!(id.bfs_all(1).unwrap()[2..].iter().all(Option::is_none));
        let k = build_reference(&Permutation::reversed(6));
        assert_eq!(k.edge_count(), 15);
        assert_eq!(inversions_count(&Permutation::reversed(6)), 15);
        let d = k.bfs_all(1).unwrap();
        assert!(d[2..].iter().all(|&x| x == Some(1)));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(build_reference(&Permutation::identity(3)).bfs_all(4).is_err());
    }

    #[test]
    fn complement_graph() {
        let p = eleven();
        let g = build_reference(&p);
        let h = build_reference(&p.complement());
        for u in 1..=11 {
            for v in 1..=11 {
                if u != v {
                    assert_ne!(g.adjacent(u, v), h.adjacent(u, v));
                }
            }
        }
    }
}
