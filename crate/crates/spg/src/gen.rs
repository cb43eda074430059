//! Seeded random instances.

use crate::bpgraph::canonical_relabeling;
use crate::core::Permutation;
use crate::cpgraph::{first_violation, ChordType};
use rand::seq::SliceRandom;
use rand::Rng;

/// Uniform random permutation of `1..=n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle keeps a permutation")
}

/// Random bipartite permutation graph: two increasing row sequences shuffled
/// together, then relabeled so isolated vertices take the top ids.
pub fn random_bipartite<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let rows_a: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
    let rows_b: Vec<usize> = {
        let mut mark = vec![false; n + 1];
        for &y in &rows_a {
            mark[y] = true;
        }
        (1..=n).filter(|&y| !mark[y]).collect()
    };
    let mut take_a: Vec<bool> = std::iter::repeat(true)
        .take(rows_a.len())
        .chain(std::iter::repeat(false).take(rows_b.len()))
        .collect();
    take_a.shuffle(rng);
    let (mut ia, mut ib) = (0, 0);
    let vals: Vec<usize> = take_a
        .iter()
        .map(|&a| {
            if a {
                ia += 1;
                rows_a[ia - 1]
            } else {
                ib += 1;
                rows_b[ib - 1]
            }
        })
        .collect();
    canonical_relabeling(&Permutation::new(vals).expect("merge of a partition")).0
}

/// Random valid circular instance: a random permutation, each chord `F` or `B`
/// with probability `p_wind / 2` each, then violators demoted to `N` until the
/// diagram is valid.
pub fn random_circular<R: Rng + ?Sized>(rng: &mut R, n: usize, p_wind: f64) -> (Permutation, Vec<ChordType>) {
    let p = random_permutation(rng, n);
    let mut t: Vec<ChordType> = (0..n)
        .map(|_| {
            let x: f64 = rng.gen();
            if x < p_wind / 2.0 {
                ChordType::F
            } else if x < p_wind {
                ChordType::B
            } else {
                ChordType::N
            }
        })
        .collect();
    while let Some((u, v, rule)) = first_violation(p.values(), &t).expect("lengths agree") {
        // demote an endpoint that is not N
        let w = match rule {
            1 => u,
            2 => v,
            _ => {
                if rng.gen_bool(0.5) {
                    u
                } else {
                    v
                }
            }
        };
        t[w - 1] = ChordType::N;
    }
    (p, t)
}
