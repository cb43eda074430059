//! Timing and space table for `spg bench`.

use crate::loaded::Loaded;
use crate::Workload;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spg::algos;
use spg::{Error, Result};
use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

/// Largest adjacency list (in stored entries) the baseline will materialize.
const BASELINE_CAP: usize = 1 << 25;

/// CSR adjacency list with `u32` entries.
struct Csr {
    off: Vec<u64>,
    adj: Vec<u32>,
}

impl Csr {
    fn build(g: &Loaded) -> Result<Self> {
        let n = g.n();
        let mut off = vec![0u64];
        let mut adj = Vec::new();
        for v in 1..=n {
            adj.extend(g.neighbors(v)?.into_iter().map(|w| w as u32));
            off.push(adj.len() as u64);
        }
        Ok(Csr { off, adj })
    }

    fn bits(&self) -> usize {
        self.off.len() * 64 + self.adj.len() * 32
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.adj[self.off[v - 1] as usize..self.off[v] as usize]
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn run(out: &mut impl Write, g: &Loaded, workload: Workload, queries: usize, seed: u64) -> Result<()> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Format("empty graph".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: usize = g.space().iter().map(|p| p.1).sum();
    let degree_sum: usize = (1..=n).map(|v| g.degree(v)).sum::<Result<usize>>()?;
    writeln!(out, "kind {}", g.kind()).map_err(io)?;
    writeln!(out, "n {n}").map_err(io)?;
    writeln!(out, "m {}", degree_sum / 2).map_err(io)?;
    writeln!(out, "bits_per_vertex {:.3}", bits as f64 / n as f64).map_err(io)?;
    let csr = if degree_sum <= BASELINE_CAP { Some(Csr::build(g)?) } else { None };
    match &csr {
        Some(c) => writeln!(out, "baseline_bits_per_vertex {:.3}", c.bits() as f64 / n as f64),
        None => writeln!(
            out,
            "baseline_bits_per_vertex {:.3} (not materialized: {degree_sum} entries)",
            ((n + 1) * 64 + degree_sum * 32) as f64 / n as f64
        ),
    }
    .map_err(io)?;

    let pairs: Vec<(usize, usize)> = (0..queries).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
    match workload {
        Workload::Dist => {
            let t = Instant::now();
            for &(u, v) in &pairs {
                black_box(g.distance(u, v)?);
            }
            report(out, "dist", queries, t.elapsed().as_secs_f64())?;
        }
        Workload::Adjacent => {
            let t = Instant::now();
            for &(u, v) in &pairs {
                black_box(g.adjacent(u, v)?);
            }
            report(out, "adjacent", queries, t.elapsed().as_secs_f64())?;
            if let Some(c) = &csr {
                let t = Instant::now();
                for &(u, v) in &pairs {
                    black_box(c.row(u).binary_search(&(v as u32)).is_ok());
                }
                report(out, "baseline_adjacent", queries, t.elapsed().as_secs_f64())?;
            }
        }
        Workload::Nextneighbor => {
            let t = Instant::now();
            let mut seen = 0usize;
            for &(u, _) in &pairs {
                seen += scan(g, u)?;
            }
            let secs = t.elapsed().as_secs_f64();
            report(out, "nextneighbor_scan", queries, secs)?;
            writeln!(out, "neighbors_reported {seen}").map_err(io)?;
            writeln!(out, "ns_per_neighbor {:.1}", secs * 1e9 / seen.max(1) as f64).map_err(io)?;
            if let Some(c) = &csr {
                let t = Instant::now();
                let s: usize = pairs.iter().map(|&(u, _)| black_box(c.row(u)).iter().count()).sum();
                black_box(s);
                report(out, "baseline_scan", queries, t.elapsed().as_secs_f64())?;
            }
        }
        Workload::Apsp => {
            let pg = match g {
                Loaded::Perm(p) => p,
                _ => return Err(Error::Format("apsp needs a permutation graph".into())),
            };
            let t = Instant::now();
            let mut finite = 0usize;
            algos::apsp_rows(pg, |_, row| finite += row.iter().filter(|d| d.is_some()).count());
            let secs = t.elapsed().as_secs_f64();
            writeln!(out, "apsp_pairs {}", n * n).map_err(io)?;
            writeln!(out, "apsp_finite {finite}").map_err(io)?;
            writeln!(out, "apsp_seconds {secs:.3}").map_err(io)?;
            writeln!(out, "ns_per_pair {:.1}", secs * 1e9 / (n * n) as f64).map_err(io)?;
        }
    }
    Ok(())
}

/// Full neighborhood walk through the cursor interface where available.
fn scan(g: &Loaded, u: usize) -> Result<usize> {
    match g {
        Loaded::Perm(p) => {
            let mut k = 0;
            let mut w = None;
            while let Some(x) = p.next_neighbor(u, w)? {
                k += 1;
                w = Some(x);
            }
            Ok(k)
        }
        _ => Ok(black_box(g.neighbors(u)?).len()),
    }
}

fn report(out: &mut impl Write, name: &str, queries: usize, secs: f64) -> Result<()> {
    writeln!(out, "{name}_queries {queries}").map_err(io)?;
    writeln!(out, "{name}_ns_per_query {:.1}", secs * 1e9 / queries.max(1) as f64).map_err(io)
}
