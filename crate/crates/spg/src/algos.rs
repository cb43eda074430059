//! Clique, coloring, independent set and all-pairs routines run straight on a
//! [`SuccinctPermGraph`].
//!
//! Orienting every edge from the smaller to the larger id gives a transitive
//! orientation, so `1..=n` is a topological order and longest paths are a
//! single forward pass. The same holds for the complement with
//! `neighbors_minus_complement`.
//!
//! The all-pairs routines assume the graph is already built; building from an
//! ordered input is O(n), so reporting `k` distances costs O(n + k).

use crate::error::{check_vertex, Result};
use crate::pgraph::{NeighborIter, SuccinctPermGraph};

/// Longest-path layering: `colors[v-1]` is the layer of `v`, `clique` realizes
/// the maximum (ascending ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueColoring {
    pub colors: Vec<usize>,
    pub omega: usize,
    pub clique: Vec<usize>,
}

fn longest_paths<'g, F>(n: usize, mut preds: F) -> Result<CliqueColoring>
where
    F: FnMut(usize) -> Result<NeighborIter<'g>>,
{
    // working memory: colors plus one predecessor per vertex
    let mut colors = vec![0usize; n];
    let mut pred = vec![0usize; n];
    let mut best = 0usize;
    for v in 1..=n {
        let (mut l, mut p) = (1, 0);
        for u in preds(v)? {
            let c = colors[u - 1] + 1;
            if c > l || (c == l && p != 0 && u < p) {
                l = c;
                p = u;
            }
        }
        colors[v - 1] = l;
        pred[v - 1] = p;
        if best == 0 || l > colors[best - 1] {
            best = v;
        }
    }
    let mut clique = Vec::new();
    let mut v = best;
    while v != 0 {
        clique.push(v);
        v = pred[v - 1];
    }
    clique.reverse();
    Ok(CliqueColoring { omega: clique.len(), colors, clique })
}

/// Maximum clique and a minimum proper coloring (they have the same size).
pub fn max_clique_min_coloring(g: &SuccinctPermGraph) -> CliqueColoring {
    longest_paths(g.n(), |v| g.neighbors_minus(v)).expect("vertex ids in range")
}

/// Maximum independent set (`clique`) and a minimum clique cover (`colors`
/// is the cover class of each vertex).
pub fn max_independent_set_min_clique_cover(g: &SuccinctPermGraph) -> CliqueColoring {
    longest_paths(g.n(), |v| g.neighbors_minus_complement(v)).expect("vertex ids in range")
}

/// One distance per requested pair; `None` means unreachable.
pub fn apsp_pairs(g: &SuccinctPermGraph, pairs: &[(usize, usize)]) -> Result<Vec<Option<u32>>> {
    pairs.iter().map(|&(u, v)| g.distance(u, v)).collect()
}

/// Streams every row of the distance matrix: `f(u, row)` with `row[v-1]` the
/// distance from `u` to `v`.
pub fn apsp_rows<F: FnMut(usize, &[Option<u32>])>(g: &SuccinctPermGraph, mut f: F) {
    let n = g.n();
    let mut row = vec![None; n];
    for u in 1..=n {
        for (v, slot) in row.iter_mut().enumerate() {
            *slot = g.distance(u, v + 1).expect("in range");
        }
        f(u, &row);
    }
}

/// Full distance matrix, `m[u-1][v-1]`.
pub fn apsp(g: &SuccinctPermGraph) -> Vec<Vec<Option<u32>>> {
    let mut out = Vec::with_capacity(g.n());
    apsp_rows(g, |_, r| out.push(r.to_vec()));
    out
}

/// Shortest paths for the given pairs; `None` marks an unreachable pair.
pub fn spath_pairs(g: &SuccinctPermGraph, pairs: &[(usize, usize)]) -> Result<Vec<Option<Vec<usize>>>> {
    let n = g.n();
    pairs
        .iter()
        .map(|&(u, v)| {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            Ok(match g.distance(u, v)? {
                None => None,
                Some(_) => Some(g.spath(u, v)?),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{build_reference, pi_inverse_from_pi, Permutation, ReferenceGraph};
    use crate::gen::random_permutation;
    use crate::pgraph::Backend;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn eleven() -> Permutation {
        pi_inverse_from_pi(&[5, 7, 2, 6, 1, 11, 8, 10, 4, 3, 9]).unwrap()
    }

    /// Largest subset where `want(adjacent)` holds for every pair.
    fn brute_best(r: &ReferenceGraph, want: bool) -> usize {
        let n = r.n();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            if vs.len() <= best {
                continue;
            }
            let ok = vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| r.adjacent(a, b) == want));
            if ok {
                best = vs.len();
            }
        }
        best
    }

    fn check(g: &SuccinctPermGraph, r: &ReferenceGraph) {
        let n = g.n();
        let cc = max_clique_min_coloring(g);
        let is = max_independent_set_min_clique_cover(g);
        assert_eq!(cc.omega, brute_best(r, true));
        assert_eq!(is.omega, brute_best(r, false));
        for (u, v) in r.edges() {
            assert_ne!(cc.colors[u - 1], cc.colors[v - 1]);
        }
        for u in 1..=n {
            for v in u + 1..=n {
                if !r.adjacent(u, v) {
                    assert_ne!(is.colors[u - 1], is.colors[v - 1]);
                }
            }
        }
        if n > 0 {
            assert_eq!(*cc.colors.iter().max().unwrap(), cc.omega);
            assert_eq!(*is.colors.iter().max().unwrap(), is.omega);
        }
        for (i, &a) in cc.clique.iter().enumerate() {
            for &b in &cc.clique[i + 1..] {
                assert!(r.adjacent(a, b));
            }
        }
        for (i, &a) in is.clique.iter().enumerate() {
            for &b in &is.clique[i + 1..] {
                assert!(!r.adjacent(a, b));
            }
        }
    }

    #[test]
    fn eleven_and_trivial() {
        let g = SuccinctPermGraph::build(&eleven(), Backend::Array).unwrap();
        let r = build_reference(&eleven());
        check(&g, &r);
        assert_eq!(max_clique_min_coloring(&g).omega, 4);
        assert_eq!(apsp_pairs(&g, &[(5, 9), (1, 2), (4, 4)]).unwrap(), vec![Some(3), Some(1), Some(0)]);
        assert!(apsp_pairs(&g, &[(0, 1)]).is_err());
        let p = spath_pairs(&g, &[(5, 9), (1, 2)]).unwrap();
        assert_eq!(p[0].as_ref().unwrap().len(), 4);
        assert_eq!(p[1].as_deref(), Some(&[1, 2][..]));

        let id = SuccinctPermGraph::build(&Permutation::identity(5), Backend::Array).unwrap();
        let cc = max_clique_min_coloring(&id);
        assert_eq!((cc.omega, cc.colors), (1, vec![1; 5]));
        assert_eq!(max_independent_set_min_clique_cover(&id).omega, 5);
        let m = apsp(&id);
        assert!((0..5).all(|u| (0..5).all(|v| m[u][v] == if u == v { Some(0) } else { None })));
        assert_eq!(spath_pairs(&id, &[(1, 2)]).unwrap(), vec![None]);

        let k = SuccinctPermGraph::build(&Permutation::reversed(6), Backend::Grid).unwrap();
        let cc = max_clique_min_coloring(&k);
        assert_eq!((cc.omega, cc.colors), (6, (1..=6).collect()));
        let is = max_independent_set_min_clique_cover(&k);
        assert_eq!((is.omega, is.colors), (1, vec![1; 6]));

        let empty = SuccinctPermGraph::build(&Permutation::identity(0), Backend::Array).unwrap();
        assert_eq!(max_clique_min_coloring(&empty).omega, 0);
    }

    #[test]
    fn random_vs_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..100 {
            let n = rng.gen_range(1..=12);
            let p = random_permutation(&mut rng, n);
            let b = if i % 2 == 0 { Backend::Array } else { Backend::Grid };
            check(&SuccinctPermGraph::build(&p, b).unwrap(), &build_reference(&p));
        }
    }

    #[test]
    fn apsp_matches_bfs() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let n = rng.gen_range(1..=200);
            let p = random_permutation(&mut rng, n);
            let g = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
            let bfs = build_reference(&p).all_pairs();
            let m = apsp(&g);
            for u in 1..=n {
                assert_eq!(&m[u - 1][..], &bfs[u][1..]);
            }
            let pairs: Vec<(usize, usize)> = (0..50).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
            for (path, &(u, v)) in spath_pairs(&g, &pairs).unwrap().iter().zip(&pairs) {
                match path {
                    None => assert_eq!(bfs[u][v], None),
                    Some(p) => {
                        assert_eq!(p.len() as u32 - 1, bfs[u][v].unwrap());
                        assert!(p.windows(2).all(|w| g.adjacent(w[0], w[1]).unwrap()));
                    }
                }
            }
        }
    }
}
