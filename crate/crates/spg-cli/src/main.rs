//! `spg` — build, query, generate and benchmark succinct permutation graphs.
//!
//! Exit codes: 0 ok, 1 domain error (bad input, bad vertex, wrong structure
//! kind), 2 usage error.

mod bench;
mod loaded;

use clap::{Args, Parser, Subcommand, ValueEnum};
use loaded::{BuildOpts, Loaded};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spg::algos;
use spg::bits::ceil_log2;
use spg::format::GraphFile;
use spg::gen;
use spg::pgraph::{Backend, SuccinctPermGraph};
use spg::{Error, Result};
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spg", version, about = "Succinct permutation graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct BuildFlags {
    /// Neighborhood backend for permutation graphs.
    #[arg(long, default_value = "array", value_parser = parse_backend)]
    backend: Backend,
    /// Build the bipartite structure (isolated vertices must have the top ids).
    #[arg(long)]
    bipartite: bool,
    /// With --bipartite: attach distance oracles.
    #[arg(long)]
    oracles: bool,
}

impl BuildFlags {
    fn opts(self) -> BuildOpts {
        BuildOpts { backend: self.backend, bipartite: self.bipartite, oracles: self.oracles }
    }
}

fn parse_backend(s: &str) -> std::result::Result<Backend, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// random permutation graph
    #[value(name = "P")]
    P,
    /// bipartite permutation graph
    Bipartite,
    /// valid circular diagram
    Circular,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Workload {
    Dist,
    Adjacent,
    Nextneighbor,
    Apsp,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a structure from a text graph file and serialize it.
    Build {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// Print sizes and per-component bit counts.
    Stats {
        file: PathBuf,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// Answer queries (`adjacent u v`, `degree v`, `neighbors v`, `dist u v`,
    /// `spath u v`, `first u v`), one per line, from -q or stdin.
    Query {
        file: PathBuf,
        #[arg(short = 'q', long = "query")]
        queries: Vec<String>,
        /// Lines `u v`; prints one distance per line.
        #[arg(long)]
        pairs_file: Option<PathBuf>,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// Emit a random text graph file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Circular: probability that a chord winds.
        #[arg(long, default_value_t = 0.3)]
        wind: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximum clique and minimum coloring.
    Clique {
        file: PathBuf,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// Maximum independent set and minimum clique cover.
    Mis {
        file: PathBuf,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// All distances (row per vertex) or one per pair with --pairs-file.
    Apsp {
        file: PathBuf,
        #[arg(long)]
        pairs_file: Option<PathBuf>,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// Shortest paths for the pairs in --pairs-file.
    Spaths {
        file: PathBuf,
        #[arg(long)]
        pairs_file: PathBuf,
        #[command(flatten)]
        flags: BuildFlags,
    },
    /// Hamiltonian path and cycle of a bipartite structure.
    Ham {
        file: PathBuf,
    },
    /// Time a query workload and compare space with an adjacency list.
    Bench {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dist")]
        workload: Workload,
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        flags: BuildFlags,
    },
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn fmt_dist(d: Option<u32>) -> String {
    d.map_or_else(|| "inf".to_string(), |d| d.to_string())
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

fn read_pairs(path: &Path) -> Result<Vec<(usize, usize)>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let bad = || Error::Format(format!("line {}: expected `u v`", i + 1));
        if toks.len() != 2 {
            return Err(bad());
        }
        out.push((toks[0].parse().map_err(|_| bad())?, toks[1].parse().map_err(|_| bad())?));
    }
    Ok(out)
}

fn perm_only(g: Loaded) -> Result<SuccinctPermGraph> {
    match g {
        Loaded::Perm(g) => Ok(g),
        other => Err(Error::Format(format!("needs a permutation graph, got {}", other.kind()))),
    }
}

/// Answers one query line.
fn answer(g: &Loaded, line: &str) -> Result<String> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let ids = |k: usize| -> Result<Vec<usize>> {
        if toks.len() != k + 1 {
            return Err(Error::Format(format!("`{}` takes {k} vertex argument(s)", toks[0])));
        }
        toks[1..].iter().map(|t| t.parse().map_err(|_| Error::Format(format!("bad vertex id {t:?}")))).collect()
    };
    Ok(match toks.first().copied() {
        Some("adjacent") => {
            let a = ids(2)?;
            g.adjacent(a[0], a[1])?.to_string()
        }
        Some("degree") => g.degree(ids(1)?[0])?.to_string(),
        Some("neighbors") => join(g.neighbors(ids(1)?[0])?),
        Some("dist") => {
            let a = ids(2)?;
            fmt_dist(g.distance(a[0], a[1])?)
        }
        Some("spath") => {
            let a = ids(2)?;
            g.spath(a[0], a[1])?.map_or_else(|| "inf".to_string(), join)
        }
        Some("first") => {
            let a = ids(2)?;
            g.first(a[0], a[1])?.map_or_else(|| "inf".to_string(), |w| w.to_string())
        }
        Some(q) => return Err(Error::Format(format!("unknown query {q:?}"))),
        None => return Err(Error::Format("empty query".into())),
    })
}

fn print_stats(out: &mut impl Write, g: &Loaded) -> io::Result<()> {
    let n = g.n();
    writeln!(out, "kind {}", g.kind())?;
    writeln!(out, "n {n}")?;
    if let Some((a, b)) = g.ab_counts() {
        writeln!(out, "A {a}")?;
        writeln!(out, "B {b}")?;
    }
    let parts = g.space();
    let total: usize = parts.iter().map(|p| p.1).sum();
    for (name, bits) in &parts {
        writeln!(out, "bits.{name} {bits}")?;
    }
    writeln!(out, "bits.total {total}")?;
    writeln!(out, "baseline.n_ceil_lg_n {}", n * ceil_log2(n) as usize)?;
    if n > 0 {
        writeln!(out, "bits_per_vertex {:.3}", total as f64 / n as f64)?;
    }
    Ok(())
}

fn run(cmd: Cmd) -> Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cmd {
        Cmd::Build { input, output, flags } => {
            let text = std::fs::read_to_string(&input).map_err(|e| Error::Io(format!("{}: {e}", input.display())))?;
            let g = Loaded::from_text(&text.parse()?, flags.opts())?;
            g.save(&output)?;
            print_stats(&mut out, &g).map_err(io_err)?;
        }
        Cmd::Stats { file, flags } => print_stats(&mut out, &Loaded::open(&file, flags.opts())?).map_err(io_err)?,
        Cmd::Query { file, queries, pairs_file, flags } => {
            let g = Loaded::open(&file, flags.opts())?;
            if let Some(p) = pairs_file {
                for (u, v) in read_pairs(&p)? {
                    writeln!(out, "{}", fmt_dist(g.distance(u, v)?)).map_err(io_err)?;
                }
            } else if !queries.is_empty() {
                for q in &queries {
                    writeln!(out, "{}", answer(&g, q)?).map_err(io_err)?;
                }
            } else {
                for line in io::stdin().lock().lines() {
                    let line = line.map_err(io_err)?;
                    if line.trim().is_empty() || line.trim_start().starts_with('#') {
                        continue;
                    }
                    writeln!(out, "{}", answer(&g, &line)?).map_err(io_err)?;
                }
            }
        }
        Cmd::Gen { kind, n, seed, wind, output } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = match kind {
                GenKind::P => GraphFile::permutation(gen::random_permutation(&mut rng, n)),
                GenKind::Bipartite => GraphFile::permutation(gen::random_bipartite(&mut rng, n)),
                GenKind::Circular => {
                    let (p, t) = gen::random_circular(&mut rng, n, wind.clamp(0.0, 1.0));
                    GraphFile::circular(p, t)
                }
            };
            match output {
                Some(path) => std::fs::write(&path, g.to_string()).map_err(io_err)?,
                None => write!(out, "{g}").map_err(io_err)?,
            }
        }
        Cmd::Clique { file, flags } => {
            let r = algos::max_clique_min_coloring(&perm_only(Loaded::open(&file, flags.opts())?)?);
            writeln!(out, "omega {}", r.omega).map_err(io_err)?;
            writeln!(out, "clique {}", join(&r.clique)).map_err(io_err)?;
            writeln!(out, "colors {}", join(&r.colors)).map_err(io_err)?;
        }
        Cmd::Mis { file, flags } => {
            let r = algos::max_independent_set_min_clique_cover(&perm_only(Loaded::open(&file, flags.opts())?)?);
            writeln!(out, "alpha {}", r.omega).map_err(io_err)?;
            writeln!(out, "set {}", join(&r.clique)).map_err(io_err)?;
            writeln!(out, "cover {}", join(&r.colors)).map_err(io_err)?;
        }
        Cmd::Apsp { file, pairs_file, flags } => {
            let g = perm_only(Loaded::open(&file, flags.opts())?)?;
            match pairs_file {
                Some(p) => {
                    for d in algos::apsp_pairs(&g, &read_pairs(&p)?)? {
                        writeln!(out, "{}", fmt_dist(d)).map_err(io_err)?;
                    }
                }
                None => {
                    let mut res = Ok(());
                    algos::apsp_rows(&g, |_, row| {
                        if res.is_ok() {
                            res = writeln!(out, "{}", join(row.iter().map(|&d| fmt_dist(d))));
                        }
                    });
                    res.map_err(io_err)?;
                }
            }
        }
        Cmd::Spaths { file, pairs_file, flags } => {
            let g = perm_only(Loaded::open(&file, flags.opts())?)?;
            for p in algos::spath_pairs(&g, &read_pairs(&pairs_file)?)? {
                writeln!(out, "{}", p.map_or_else(|| "inf".to_string(), join)).map_err(io_err)?;
            }
        }
        Cmd::Ham { file } => {
            let opts = BuildOpts { backend: Backend::Array, bipartite: true, oracles: false };
            let g = match Loaded::open(&file, opts)? {
                Loaded::Bip(g) => g,
                other => return Err(Error::Format(format!("needs a bipartite graph, got {}", other.kind()))),
            };
            let show = |p: Option<Vec<usize>>| p.map_or_else(|| "none".to_string(), join);
            writeln!(out, "path {}", show(g.hamiltonian_path())).map_err(io_err)?;
            writeln!(out, "cycle {}", show(g.hamiltonian_cycle())).map_err(io_err)?;
        }
        Cmd::Bench { file, workload, queries, seed, flags } => {
            let g = Loaded::open(&file, flags.opts())?;
            bench::run(&mut out, &g, workload, queries, seed)?;
        }
    }
    out.flush().map_err(io_err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
