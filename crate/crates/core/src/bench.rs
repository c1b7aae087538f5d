//! Box-count and routing-time experiments on complete ternary trees, with CSV
//! output.

use std::hint::black_box;
use std::io::{Read, Write};
use std::time::Instant;

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cover::{cover_with, Algorithm, GcMode};
use crate::error::{Error, Result};
use crate::graph::{gen_ternary_tree, Graph};
use crate::routing::{bcr_route, build_supergraph, dijkstra_route};

/// Tree depths giving 13, 40, 121, 364, 1093 and 3280 nodes.
pub const DEFAULT_DEPTHS: [u32; 6] = [2, 3, 4, 5, 6, 7];

pub const CSV_HEADER: [&str; 9] = [
    "experiment",
    "algorithm",
    "n",
    "rb",
    "phase",
    "metric",
    "value",
    "reps",
    "seed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Experiment {
    Boxcount,
    Timing,
}

impl Experiment {
    pub fn as_str(self) -> &'static str {
        match self {
            Experiment::Boxcount => "boxcount",
            Experiment::Timing => "timing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchAlgorithm {
    Dijkstra,
    BcrGc,
    BcrMemb,
    BcrCiea,
}

impl BenchAlgorithm {
    pub const BCR: [BenchAlgorithm; 3] = [
        BenchAlgorithm::BcrGc,
        BenchAlgorithm::BcrMemb,
        BenchAlgorithm::BcrCiea,
    ];

    pub fn cover_algorithm(self) -> Option<Algorithm> {
        match self {
            BenchAlgorithm::Dijkstra => None,
            BenchAlgorithm::BcrGc => Some(Algorithm::Gc),
            BenchAlgorithm::BcrMemb => Some(Algorithm::Memb),
            BenchAlgorithm::BcrCiea => Some(Algorithm::Ciea),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BenchAlgorithm::Dijkstra => "dijkstra",
            BenchAlgorithm::BcrGc => "bcr_gc",
            BenchAlgorithm::BcrMemb => "bcr_memb",
            BenchAlgorithm::BcrCiea => "bcr_ciea",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Cover,
    Supergraph,
    Query,
    Total,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Cover => "cover",
            Phase::Supergraph => "supergraph",
            Phase::Query => "query",
            Phase::Total => "total",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Boxes,
    Microseconds,
}

impl Metric {
    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Boxes => "boxes",
            Metric::Microseconds => "microseconds",
        }
    }
}

/// One measurement row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub experiment: Experiment,
    pub algorithm: BenchAlgorithm,
    pub n: usize,
    #[serde(rename = "rb")]
    pub r_b: u32,
    /// Timing rows only.
    pub phase: Option<Phase>,
    pub metric: Metric,
    pub value: f64,
    pub reps: u32,
    pub seed: u64,
}

/// Box counts of GC, MEMB and CIEA on one graph.
pub fn boxcount_records(g: &Graph, r_b: u32, gc_mode: GcMode) -> Result<Vec<BenchRecord>> {
    BenchAlgorithm::BCR
        .iter()
        .map(|&alg| {
            let algorithm = alg.cover_algorithm().expect("BCR variant");
            let cover = cover_with(g, algorithm, r_b, gc_mode, None)?;
            Ok(BenchRecord {
                experiment: Experiment::Boxcount,
                algorithm: alg,
                n: g.node_count(),
                r_b,
                phase: None,
                metric: Metric::Boxes,
                value: cover.box_count() as f64,
                reps: 1,
                seed: 0,
            })
        })
        .collect()
}

/// Box counts on complete ternary trees of the given depths.
pub fn boxcount_suite(depths: &[u32], r_b: u32, gc_mode: GcMode) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &d in depths {
        out.extend(boxcount_records(&gen_ternary_tree(d)?, r_b, gc_mode)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimingConfig {
    pub depths: Vec<u32>,
    pub r_b: u32,
    /// Repetitions of each measured region; the fastest one counts.
    pub reps: u32,
    /// Number of sampled (s, t) queries per size.
    pub pairs: usize,
    pub seed: u64,
    pub gc_mode: GcMode,
}

impl Default for TimingConfig {
    fn default() -> Self {
        TimingConfig {
            depths: DEFAULT_DEPTHS.to_vec(),
            r_b: 1,
            reps: 100,
            pairs: 32,
            seed: 0,
            gc_mode: GcMode::Strict,
        }
    }
}

/// `count` uniformly random pairs of distinct nodes out of `n >= 2`.
pub fn sample_pairs(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    assert!(n >= 2, "need two nodes to sample a pair");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = rng.gen_range(0..n);
            let mut t = rng.gen_range(0..n - 1);
            if t >= s {
                t += 1;
            }
            (s, t)
        })
        .collect()
}

/// Fastest of `reps` runs of `f`, in microseconds.
fn fastest_micros<T>(reps: u32, mut f: impl FnMut() -> T) -> f64 {
    (0..reps)
        .map(|_| {
            let start = Instant::now();
            black_box(f());
            start.elapsed().as_secs_f64() * 1e6
        })
        .fold(f64::INFINITY, f64::min)
}

/// Timing rows for one graph: mean per-query Dijkstra time, and for each BCR
/// variant the cover, super-graph and mean per-query times plus their total
/// `cover + supergraph + pairs * query`.
///
/// Every measured region runs `reps` times and keeps its fastest run; query
/// times are then averaged over the sampled pairs. Graphs with fewer than two
/// nodes yield no rows.
pub fn timing_records(g: &Graph, cfg: &TimingConfig) -> Result<Vec<BenchRecord>> {
    if cfg.reps == 0 || cfg.pairs == 0 {
        return Err(Error::BenchConfig("reps and pairs must be at least 1".into()));
    }
    let n = g.node_count();
    if n < 2 {
        warn!("skipping timing on a graph with {n} node(s)");
        return Ok(Vec::new());
    }
    let pairs = sample_pairs(n, cfg.pairs, cfg.seed);
    let row = |algorithm, phase, value| BenchRecord {
        experiment: Experiment::Timing,
        algorithm,
        n,
        r_b: cfg.r_b,
        phase: Some(phase),
        metric: Metric::Microseconds,
        value,
        reps: cfg.reps,
        seed: cfg.seed,
    };
    let mean_query = |query: &dyn Fn(usize, usize) -> Result<()>| -> Result<f64> {
        let mut sum = 0.0;
        for &(s, t) in &pairs {
            query(s, t)?;
            sum += fastest_micros(cfg.reps, || query(s, t));
        }
        Ok(sum / pairs.len() as f64)
    };

    let mut out = Vec::new();
    let q = mean_query(&|s, t| dijkstra_route(g, s, t).map(drop))?;
    out.push(row(BenchAlgorithm::Dijkstra, Phase::Query, q));

    for alg in BenchAlgorithm::BCR {
        let algorithm = alg.cover_algorithm().expect("BCR variant");
        let cover = cover_with(g, algorithm, cfg.r_b, cfg.gc_mode, None)?;
        let cover_us = fastest_micros(cfg.reps, || cover_with(g, algorithm, cfg.r_b, cfg.gc_mode, None));
        let sg = build_supergraph(g, &cover)?;
        let super_us = fastest_micros(cfg.reps, || build_supergraph(g, &cover));
        let q = mean_query(&|s, t| bcr_route(&sg, s, t).map(drop))?;
        out.push(row(alg, Phase::Cover, cover_us));
        out.push(row(alg, Phase::Supergraph, super_us));
        out.push(row(alg, Phase::Query, q));
        out.push(row(
            alg,
            Phase::Total,
            cover_us + super_us + cfg.pairs as f64 * q,
        ));
    }
    Ok(out)
}

/// Timing rows on complete ternary trees of the configured depths.
pub fn timing_suite(cfg: &TimingConfig) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &d in &cfg.depths {
        out.extend(timing_records(&gen_ternary_tree(d)?, cfg)?);
    }
    Ok(out)
}

/// Formats like C's `%g`: six significant digits, trailing zeros dropped.
pub fn format_sig6(value: f64) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let sci = format!("{value:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (5 - exp) as usize;
    trim_zeros(&format!("{value:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Writes `records` as CSV with a header row, in input order.
pub fn write_csv<W: Write>(records: &[BenchRecord], sink: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record([
            r.experiment.as_str().to_string(),
            r.algorithm.as_str().to_string(),
            r.n.to_string(),
            r.r_b.to_string(),
            r.phase.map_or("", Phase::as_str).to_string(),
            r.metric.as_str().to_string(),
            format_sig6(r.value),
            r.reps.to_string(),
            r.seed.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

/// Parses CSV produced by [`write_csv`].
pub fn read_csv<R: Read>(source: R) -> Result<Vec<BenchRecord>> {
    let mut r = csv::Reader::from_reader(source);
    let header = r.headers().map_err(|e| Error::Io(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Io(format!("unexpected CSV header: {header:?}")));
    }
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Io(e.to_string())))
        .collect()
}
