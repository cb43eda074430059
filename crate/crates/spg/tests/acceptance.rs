//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p spg --test acceptance`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spg::algos;
use spg::bits::{ceil_log2, BitSeq};
use spg::bpgraph::{canonical_relabeling, BipartitePermGraph};
use spg::core::{build_reference, pi_inverse_from_pi, Permutation, ReferenceGraph};
use spg::cpgraph::{reference_cpg, ChordType, CircularPermGraph};
use spg::gen::{random_bipartite, random_circular, random_permutation};
use spg::grid::PermGrid;
use spg::pgraph::{Backend, DistanceCase, SuccinctPermGraph};
use spg::pio::{PioMode, ProperIntervalOracle};
use spg::rmq::{Orientation, RmqIndex, DEFAULT_EPS};
use spg::semilocal;
use std::collections::BTreeSet;
use std::hint::black_box;
use std::panic;
use std::time::Instant;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn eleven() -> Permutation {
    pi_inverse_from_pi(&[5, 7, 2, 6, 1, 11, 8, 10, 4, 3, 9]).unwrap()
}

fn lg(n: usize) -> usize {
    ceil_log2(n) as usize
}

/// Checks every query of `g` against the reference graph and BFS.
fn check_pgraph(g: &SuccinctPermGraph, r: &ReferenceGraph) -> Result<(), String> {
    let n = r.n();
    for u in 1..=n {
        let bfs = r.bfs_all(u).unwrap();
        ensure!(g.degree(u).unwrap() == r.degree(u), "degree({u})");
        ensure!(g.neighbors(u).unwrap() == r.neighbors(u), "neighbors({u})");
        let minus: BTreeSet<usize> = g.neighbors_minus(u).unwrap().collect();
        let plus: BTreeSet<usize> = g.neighbors_plus(u).unwrap().collect();
        ensure!(minus.iter().all(|&w| w < u) && plus.iter().all(|&w| w > u), "minus/plus split at {u}");
        ensure!(minus.len() + plus.len() == r.degree(u), "minus/plus sizes at {u}");
        let mut cursor = Vec::new();
        let mut w = None;
        while let Some(x) = g.next_neighbor(u, w).unwrap() {
            cursor.push(x);
            w = Some(x);
        }
        cursor.sort_unstable();
        ensure!(cursor == r.neighbors(u), "next_neighbor scan at {u}");
        for v in 1..=n {
            ensure!(g.adjacent(u, v).unwrap() == r.adjacent(u, v), "adjacent({u},{v})");
            let d = g.distance(u, v).unwrap();
            ensure!(d == bfs[v], "distance({u},{v}) = {d:?}, BFS {:?}", bfs[v]);
            if let Some(d) = d {
                let p = g.spath(u, v).unwrap();
                ensure!(p.len() as u32 == d + 1 && p[0] == u && p[p.len() - 1] == v, "spath({u},{v}) shape");
                ensure!(p.windows(2).all(|w| r.adjacent(w[0], w[1])), "spath({u},{v}) not a path");
            }
        }
    }
    Ok(())
}

fn c1_oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for i in 0..200 {
        let n = rng.gen_range(1..=200);
        let p = random_permutation(&mut rng, n);
        let r = build_reference(&p);
        let b = if i % 2 == 0 { Backend::Array } else { Backend::Grid };
        check_pgraph(&SuccinctPermGraph::build(&p, b).unwrap(), &r).map_err(|e| format!("instance {i} (n={n}, {b:?}): {e}"))?;
    }
    let secs = t.elapsed().as_secs_f64();
    ensure!(secs < 60.0, "took {secs:.1}s (limit 60s)");
    Ok(format!("200 instances, both backends alternating, {secs:.1}s"))
}

fn c2_eleven_goldens() -> Outcome {
    for b in [Backend::Array, Backend::Grid] {
        let g = SuccinctPermGraph::build(&eleven(), b).unwrap();
        let a: Vec<usize> = (1..=11).filter(|&v| g.is_a(v).unwrap()).collect();
        let bb: Vec<usize> = (1..=11).filter(|&v| g.is_b(v).unwrap()).collect();
        ensure!(a == [1, 3, 9], "A = {a:?}");
        ensure!(bb == [5, 7, 11], "B = {bb:?}");
        let e5 = g.extremal(5).unwrap();
        let e1 = g.extremal(1).unwrap();
        ensure!((e5.a_minus, e5.a_plus) == (1, 3), "a-(5), a+(5) = {}, {}", e5.a_minus, e5.a_plus);
        ensure!((e1.b_minus, e1.b_plus) == (5, 7), "b-(1), b+(1) = {}, {}", e1.b_minus, e1.b_plus);
        ensure!(g.degree(3).unwrap() == 7, "deg(3)");
        let dc = g.distance_case(5, 9).unwrap();
        ensure!(dc == (Some(3), DistanceCase::Three), "dist/case(5,9) = {dc:?}");
    }
    Ok("A={1,3,9} B={5,7,11} a-(5)=1 a+(5)=3 b-(1)=5 b+(1)=7 deg(3)=7 dist(5,9)=3 via case 3".into())
}

fn c3_space_budgets() -> Outcome {
    let n = 1usize << 16;
    let l = lg(n);
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let p = random_permutation(&mut rng, n);

    let pg = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
    let pg_bits = pg.space_report().total();
    ensure!(pg_bits <= n * l + 24 * n, "pgraph {pg_bits} > n lg n + 24n");
    let pg_c = (pg_bits - n * l) as f64 / n as f64;

    let bp = BipartitePermGraph::build(&random_bipartite(&mut rng, n)).unwrap();
    let s = bp.space();
    let m = n - bp.isolated_count();
    ensure!(s.payload == 2 * m && s.payload <= 2 * n, "bpgraph payload {} for {m} non-isolated vertices", s.payload);
    ensure!(2 * s.directories <= n, "bpgraph directories {} > 0.5n", s.directories);

    let (cp, ct) = random_circular(&mut rng, n, 0.3);
    let cg = CircularPermGraph::build(&cp, &ct).unwrap();
    let cg_bits: usize = cg.space_report().iter().map(|x| x.1).sum();
    ensure!(cg_bits <= n * l + 32 * n, "cpgraph {cg_bits} > n lg n + 32n");
    let cg_c = (cg_bits - n * l) as f64 / n as f64;

    let (_, global) = semilocal::encode(&p).unwrap();
    let sl = global.report_bits();
    ensure!(sl <= 16 * n, "semilocal global {sl} > 16n");

    Ok(format!(
        "n=2^16: pgraph n lg n + {pg_c:.2}n (target 7.17n); bpgraph payload {:.3}n + dirs {:.3}n (target 2n); \
         cpgraph n lg n + {cg_c:.2}n; semilocal global {:.2}n (target O(n))",
        s.payload as f64 / n as f64,
        s.directories as f64 / n as f64,
        sl as f64 / n as f64
    ))
}

fn c4_cascade_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let mut hits = [0usize; 6];
    let mut samples = 0;
    while samples < 100_000 {
        let n = rng.gen_range(2..=300);
        // alternate uniform graphs with sparse ones, where long distances occur
        let p = if samples % 200 == 0 { random_permutation(&mut rng, n) } else { sparse_permutation(&mut rng, n) };
        let g = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
        let r = build_reference(&p);
        for _ in 0..20 {
            let u = rng.gen_range(1..=n);
            let bfs = r.bfs_all(u).unwrap();
            for _ in 0..5 {
                let v = rng.gen_range(1..=n);
                let (d, case) = g.distance_case(u, v).unwrap();
                ensure!(d == bfs[v], "n={n} ({u},{v}): {case:?} says {d:?}, BFS {:?}", bfs[v]);
                hits[case as usize] += 1;
                samples += 1;
            }
        }
    }
    Ok(format!(
        "{samples} samples: same {} adj {} two {} three {} four {} unreachable {}",
        hits[0], hits[1], hits[2], hits[3], hits[4], hits[5]
    ))
}

/// Identity with a few short-range swaps: long induced paths, many far pairs.
fn sparse_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..=4)).min(n - 1);
        v.swap(i, j);
    }
    Permutation::new(v).unwrap()
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn is_bipartite(r: &ReferenceGraph) -> bool {
    let n = r.n();
    let mut side = vec![0u8; n + 1];
    for s in 1..=n {
        if side[s] != 0 {
            continue;
        }
        side[s] = 1;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in r.neighbors(x) {
                if side[y] == 0 {
                    side[y] = 3 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// Exhaustive Hamiltonian path / cycle existence by subset DP.
fn brute_ham(r: &ReferenceGraph) -> (bool, bool) {
    let n = r.n();
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n]; // dp[mask] bit v: a path covering mask ends at v
    let mut from0 = vec![0u32; 1 << n]; // same, restricted to paths starting at vertex 0
    for v in 0..n {
        dp[1 << v] |= 1 << v;
    }
    from0[1] = 1;
    for mask in 1..=full {
        for v in 0..n {
            for tab in [&mut dp, &mut from0] {
                if tab[mask] >> v & 1 == 0 {
                    continue;
                }
                for &w in r.neighbors(v + 1) {
                    let w = w - 1;
                    if mask >> w & 1 == 0 {
                        tab[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    let path = dp[full] != 0;
    let cycle = n >= 3 && r.neighbors(1).iter().any(|&w| from0[full] >> (w - 1) & 1 == 1);
    (path, cycle)
}

fn valid_ham(r: &ReferenceGraph, p: &[usize], closed: bool) -> bool {
    let n = r.n();
    let mut seen = p.to_vec();
    seen.sort_unstable();
    seen == (1..=n).collect::<Vec<_>>()
        && p.windows(2).all(|w| r.adjacent(w[0], w[1]))
        && (!closed || r.adjacent(p[0], p[n - 1]))
}

fn c5_bpg_hamiltonicity() -> Outcome {
    let mut graphs = 0;
    for n in 1..=8 {
        let mut a: Vec<usize> = (1..=n).collect();
        loop {
            let p = Permutation::new(a.clone()).unwrap();
            if is_bipartite(&build_reference(&p)) {
                let (q, _) = canonical_relabeling(&p);
                let r = build_reference(&q);
                let g = BipartitePermGraph::build(&q).unwrap();
                let (bp, bc) = brute_ham(&r);
                let hp = g.hamiltonian_path();
                let hc = g.hamiltonian_cycle();
                ensure!(hp.is_some() == bp, "path existence differs on Π={:?}", q.values());
                ensure!(hc.is_some() == bc, "cycle existence differs on Π={:?}", q.values());
                ensure!(hp.map_or(true, |x| valid_ham(&r, &x, false)), "bad path on Π={:?}", q.values());
                ensure!(hc.map_or(true, |x| valid_ham(&r, &x, true)), "bad cycle on Π={:?}", q.values());
                graphs += 1;
            }
            if !next_permutation(&mut a) {
                break;
            }
        }
    }
    let p4 = BipartitePermGraph::build(&Permutation::new(vec![3, 1, 4, 2]).unwrap()).unwrap();
    ensure!(p4.hamiltonian_path().is_some() && p4.hamiltonian_cycle().is_none(), "P4 golden");
    let c4 = BipartitePermGraph::build(&Permutation::new(vec![3, 4, 1, 2]).unwrap()).unwrap();
    ensure!(c4.hamiltonian_path().is_some() && c4.hamiltonian_cycle().is_some(), "C4 golden");
    Ok(format!("{graphs} bipartite instances with n<=8 match exhaustive search; P4/C4 goldens"))
}

fn c6_cpg() -> Outcome {
    use ChordType::*;
    let p = pi_inverse_from_pi(&[4, 1, 6, 3, 2, 7, 5]).unwrap();
    let t = vec![N, B, N, N, N, N, N];
    let g = CircularPermGraph::build(&p, &t).unwrap();
    let mut edges = BTreeSet::new();
    for v in 1..=7 {
        for w in g.neighbors(v).unwrap() {
            edges.insert((v.min(w), v.max(w)));
        }
    }
    let want: BTreeSet<(usize, usize)> =
        [(1, 2), (1, 4), (3, 4), (3, 6), (5, 6), (5, 7), (2, 5), (2, 7)].into_iter().collect();
    ensure!(edges == want, "drawn edges differ: {edges:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    for i in 0..300 {
        let n = rng.gen_range(1..=60);
        let wind = rng.gen_range(0.0..0.8);
        let (p, t) = random_circular(&mut rng, n, wind);
        let r = reference_cpg(&p, &t).ok_or("generator produced an invalid diagram")?;
        let g = CircularPermGraph::build(&p, &t).unwrap();
        for u in 1..=n {
            ensure!(g.neighbors(u).unwrap() == r.neighbors(u), "instance {i}: neighbors({u})");
            let bfs = r.bfs_all(u).unwrap();
            for v in 1..=n {
                ensure!(g.adjacent(u, v).unwrap() == r.adjacent(u, v), "instance {i}: adjacent({u},{v})");
                ensure!(g.distance(u, v).unwrap() == bfs[v], "instance {i}: distance({u},{v})");
            }
        }
    }

    for _ in 0..50 {
        let n = rng.gen_range(1..=60);
        let p = random_permutation(&mut rng, n);
        let cg = CircularPermGraph::build(&p, &vec![N; n]).unwrap();
        let pg = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
        for u in 1..=n {
            ensure!(cg.neighbors(u).unwrap() == pg.neighbors(u).unwrap(), "all-N neighbors({u})");
            ensure!(cg.degree(u).unwrap() == pg.degree(u).unwrap(), "all-N degree({u})");
            for v in 1..=n {
                ensure!(cg.adjacent(u, v).unwrap() == pg.adjacent(u, v).unwrap(), "all-N adjacent");
                ensure!(cg.distance(u, v).unwrap() == pg.distance(u, v).unwrap(), "all-N distance({u},{v})");
            }
        }
    }
    Ok("7-chord edge set exact; 300 random diagrams (n<=60) match the chord oracle; all-N equals pgraph".into())
}

fn brute_best(r: &ReferenceGraph, want: bool) -> usize {
    let n = r.n();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if vs.len() > best && vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| r.adjacent(a, b) == want)) {
            best = vs.len();
        }
    }
    best
}

fn c7_algorithms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    for i in 0..100 {
        let n = rng.gen_range(1..=12);
        let p = random_permutation(&mut rng, n);
        let r = build_reference(&p);
        let g = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
        let cc = algos::max_clique_min_coloring(&g);
        let is = algos::max_independent_set_min_clique_cover(&g);
        ensure!(cc.omega == brute_best(&r, true), "instance {i}: omega");
        ensure!(is.omega == brute_best(&r, false), "instance {i}: MIS size");
        ensure!(r.edges().iter().all(|&(u, v)| cc.colors[u - 1] != cc.colors[v - 1]), "instance {i}: improper coloring");
        let used: BTreeSet<usize> = cc.colors.iter().copied().collect();
        ensure!(used.len() == cc.omega, "instance {i}: {} colors for omega {}", used.len(), cc.omega);
        ensure!(
            is.clique.iter().enumerate().all(|(k, &a)| is.clique[k + 1..].iter().all(|&b| !r.adjacent(a, b))),
            "instance {i}: MIS not independent"
        );
    }

    let n = 2048;
    let p = random_permutation(&mut rng, n);
    let g = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
    let t = Instant::now();
    let mut rows: Vec<Vec<Option<u32>>> = vec![Vec::new(); n + 1];
    let sample: BTreeSet<usize> = (0..20).map(|_| rng.gen_range(1..=n)).collect();
    let mut count = 0usize;
    algos::apsp_rows(&g, |u, row| {
        count += row.len();
        if sample.contains(&u) {
            rows[u] = row.to_vec();
        }
    });
    let secs = t.elapsed().as_secs_f64();
    ensure!(count == n * n, "APSP streamed {count} entries");
    ensure!(secs < 30.0, "APSP n=2048 took {secs:.1}s");
    let r = build_reference(&p);
    for &u in &sample {
        ensure!(rows[u][..] == r.bfs_all(u).unwrap()[1..], "APSP row {u} differs from BFS");
    }
    Ok(format!("100 instances vs exhaustive search; APSP n=2048 in {secs:.2}s, {} rows match BFS", sample.len()))
}

fn c8_semilocal() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    for i in 0..100 {
        let n = rng.gen_range(1..=200);
        let p = random_permutation(&mut rng, n);
        let (labels, global) = semilocal::encode(&p).unwrap();
        let g = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
        for u in 1..=n {
            for v in 1..=n {
                let d = global.distance_labels(labels[u - 1], labels[v - 1]).unwrap();
                ensure!(d == g.distance(u, v).unwrap(), "instance {i}: ({u},{v})");
            }
        }
    }
    // the query signature admits exactly two labels and the global part
    let _: fn(&semilocal::GlobalPart, semilocal::VertexLabel, semilocal::VertexLabel) -> spg::Result<Option<u32>> =
        semilocal::GlobalPart::distance_labels;
    let mut sizes = Vec::new();
    for k in [16, 18] {
        let n = 1usize << k;
        let (labels, global) = semilocal::encode(&random_permutation(&mut rng, n)).unwrap();
        let bits = global.report_bits();
        ensure!(bits < n * lg(n), "n=2^{k}: global {bits} >= n lg n");
        ensure!(labels.len() * semilocal::label_bits(n) == 2 * n * lg(n), "label bits");
        sizes.push(format!("2^{k}: {:.2}n", bits as f64 / n as f64));
    }
    Ok(format!("100 instances all pairs equal; global {}", sizes.join(", ")))
}

fn c9_primitives() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    // bit vectors
    let len = 1usize << 20;
    let bools: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.3)).collect();
    let bs = BitSeq::from_bools(bools.iter().copied());
    let mut prefix = vec![0usize; len + 1];
    let mut ones = Vec::new();
    let mut zeros = Vec::new();
    for (i, &b) in bools.iter().enumerate() {
        prefix[i + 1] = prefix[i] + b as usize;
        if b {
            ones.push(i + 1);
        } else {
            zeros.push(i + 1);
        }
    }
    for _ in 0..100_000 {
        let i = rng.gen_range(0..=len);
        ensure!(bs.rank1(i) == prefix[i], "rank1({i})");
        ensure!(bs.rank0(i) == i - prefix[i], "rank0({i})");
        let k = rng.gen_range(1..=ones.len() + 1);
        ensure!(bs.select1(k) == ones.get(k - 1).copied(), "select1({k})");
        let k = rng.gen_range(1..=zeros.len() + 1);
        ensure!(bs.select0(k) == zeros.get(k - 1).copied(), "select0({k})");
        if i < len {
            ensure!(bs.get(i) == bools[i], "get({i})");
        }
    }

    // RMQ and threshold iteration
    let mut rmq_queries = 0;
    for _ in 0..60 {
        let n = rng.gen_range(1..=4096);
        let vals: Vec<i64> = random_permutation(&mut rng, n).values().iter().map(|&x| x as i64).collect();
        for orient in [Orientation::Max, Orientation::Min] {
            let idx = RmqIndex::build(&vals, orient, DEFAULT_EPS);
            for _ in 0..100 {
                let l = rng.gen_range(1..=n);
                let r = rng.gen_range(l..=n);
                let slice = &vals[l - 1..r];
                let want = match orient {
                    Orientation::Max => slice.iter().enumerate().max_by_key(|&(i, &v)| (v, std::cmp::Reverse(i))),
                    Orientation::Min => slice.iter().enumerate().min_by_key(|&(i, &v)| (v, i)),
                }
                .map(|(i, _)| l + i)
                .unwrap();
                ensure!(idx.range_arg(&vals, l, r).unwrap() == want, "range_arg({l},{r}) {orient:?}");
                let y = rng.gen_range(0..=n as i64 + 1);
                let mut got = idx.report(&vals, l, r, y).unwrap();
                got.sort_unstable();
                let want: Vec<usize> = (l..=r)
                    .filter(|&j| match orient {
                        Orientation::Max => vals[j - 1] >= y,
                        Orientation::Min => vals[j - 1] <= y,
                    })
                    .collect();
                ensure!(got == want, "threshold report({l},{r},{y}) {orient:?}");
                rmq_queries += 1;
            }
        }
    }

    // wavelet grid
    let n = 3000;
    let p = random_permutation(&mut rng, n);
    let grid = PermGrid::new(&p);
    for _ in 0..10_000 {
        let (x1, x2) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let (y1, y2) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let want: Vec<(usize, usize)> = (x1..=x2).map(|x| (x, p.at(x))).filter(|&(_, y)| y1 <= y && y <= y2).collect();
        ensure!(grid.count(x1, x2, y1, y2) == want.len(), "count({x1},{x2},{y1},{y2})");
        let got: Vec<(usize, usize)> = grid.report(x1, x2, y1, y2).into_iter().map(|q| (q.x, q.y)).collect();
        ensure!(got == want, "report({x1},{x2},{y1},{y2})");
    }

    // proper interval oracles
    for i in 0..1000 {
        let m = rng.gen_range(1..=120);
        let spread = rng.gen_range(0..=8);
        let mut reach = Vec::with_capacity(m);
        let mut cur = 0;
        for v in 1..=m {
            cur = (v + rng.gen_range(0..=spread)).max(cur).min(m);
            reach.push(cur);
        }
        let mut edges = Vec::new();
        for (k, &x) in reach.iter().enumerate() {
            edges.extend((k + 2..=x).map(|j| (k + 1, j)));
        }
        let r = ReferenceGraph::from_edges(m, edges);
        let mode = if i % 2 == 0 { PioMode::Succinct } else { PioMode::Table };
        let o = ProperIntervalOracle::from_reach(&reach, mode).unwrap();
        for u in 1..=m {
            let bfs = r.bfs_all(u).unwrap();
            for v in 1..=m {
                ensure!(o.dist(u, v).unwrap() == bfs[v], "pio instance {i}: dist({u},{v})");
                ensure!(o.adjacent(u, v).unwrap() == r.adjacent(u, v), "pio instance {i}: adjacent({u},{v})");
            }
        }
    }
    Ok(format!("bits 2^20 x 1e5 ops; rmq {rmq_queries} ranges; 1e4 grid rectangles; 1000 interval graphs"))
}

fn c10_throughput() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut rows = Vec::new();
    let q = 200_000;
    for k in (10..=20).step_by(2) {
        let n = 1usize << k;
        let p = random_permutation(&mut rng, n);
        let g = SuccinctPermGraph::build(&p, Backend::Array).unwrap();
        let pairs: Vec<(usize, usize)> = (0..q).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
        let t = Instant::now();
        for &(u, v) in &pairs {
            black_box(g.distance(u, v).unwrap());
        }
        let dist_ns = t.elapsed().as_secs_f64() * 1e9 / q as f64;
        let t = Instant::now();
        for &(u, v) in &pairs {
            black_box(g.adjacent(u, v).unwrap());
        }
        let adj_ns = t.elapsed().as_secs_f64() * 1e9 / q as f64;
        // neighborhood scans: time per reported neighbor
        let t = Instant::now();
        let mut seen = 0usize;
        for &(u, _) in pairs.iter().take(50) {
            if seen >= 1 << 20 {
                break;
            }
            let mut w = None;
            while let Some(x) = g.next_neighbor(u, w).unwrap() {
                seen += 1;
                w = Some(x);
            }
        }
        let scan_ns = t.elapsed().as_secs_f64() * 1e9 / seen.max(1) as f64;
        rows.push(format!("2^{k}: dist {dist_ns:.0}ns adj {adj_ns:.0}ns scan {scan_ns:.0}ns/nbr"));
    }
    Ok(format!("soft, reported only | {}", rows.join(" | ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 oracle equivalence", c1_oracle_equivalence),
        ("2 eleven goldens", c2_eleven_goldens),
        ("3 space budgets", c3_space_budgets),
        ("4 cascade soundness", c4_cascade_soundness),
        ("5 bpg hamiltonicity", c5_bpg_hamiltonicity),
        ("6 cpg correctness", c6_cpg),
        ("7 algorithms", c7_algorithms),
        ("8 semi-local discipline", c8_semilocal),
        ("9 primitive suites", c9_primitives),
        ("10 throughput sanity", c10_throughput),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let res = panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS [{name}] ({secs:.1}s) {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] ({secs:.1}s) {why}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
