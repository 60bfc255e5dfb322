//! Verification sweeps: visit spanning colorings of one shape, exactly or by
//! sampling, and record the minimum cover of each.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::components::decompose;
use crate::constructions::{random_spanning_coloring, random_spanning_coloring_walk};
use crate::cover::{min_cover_exact, Cover, CoverInstance};
use crate::error::{Error, Result};
use crate::harness::claims::{forensics, ClaimReport};
use crate::shape::Shape;

pub const DEFAULT_MAX_ENUM: f64 = 1e8;
const KEPT_EXAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Random { samples: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    None,
    /// Only colorings whose colors first appear in the order 1, 2, ..., k,
    /// i.e. the lexicographically least member of each color-permutation orbit.
    ColorCanonical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    Rejection { max_retries: u64 },
    Walk { steps: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    #[serde(skip)]
    pub shape: Shape,
    pub mode: Mode,
    pub seed: u64,
    pub symmetry: Symmetry,
    /// Covers larger than this are reported as violations.
    pub budget: usize,
    pub sampler: Sampler,
    pub max_enum: f64,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

impl SweepConfig {
    /// Exhaustive, no symmetry breaking, budget `k - r + 1` (at least 1).
    pub fn new(shape: Shape) -> Self {
        let budget = (shape.k() + 1).saturating_sub(shape.r()).max(1);
        Self {
            shape,
            mode: Mode::Exhaustive,
            seed: 0,
            symmetry: Symmetry::None,
            budget,
            sampler: Sampler::Rejection {
                max_retries: 1_000_000,
            },
            max_enum: DEFAULT_MAX_ENUM,
            threads: None,
        }
    }

    pub fn random(shape: Shape, samples: u64, seed: u64) -> Self {
        Self {
            mode: Mode::Random { samples },
            seed,
            ..Self::new(shape)
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn with_sampler(mut self, sampler: Sampler) -> Self {
        self.sampler = sampler;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub colors: Vec<u8>,
    pub min_cover: usize,
    pub cover: Cover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForensicRecord {
    pub colors: Vec<u8>,
    pub min_cover: usize,
    pub report: ClaimReport,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    /// Spanning colorings whose minimum cover was computed.
    pub visited: u64,
    /// Minimum cover size -> number of colorings.
    pub histogram: BTreeMap<usize, u64>,
    pub max_min_cover: Option<usize>,
    pub budget: usize,
    pub violations: u64,
    pub violation_examples: Vec<Violation>,
    /// Colorings with no (k - r + 1)-cover, on which the claim forensics ran.
    pub forensic_runs: u64,
    /// Forensic runs in which some claim conclusion failed.
    pub forensic_failures: u64,
    pub forensic_examples: Vec<ForensicRecord>,
}

impl SweepSummary {
    fn merge(&mut self, other: SweepSummary) {
        self.visited += other.visited;
        for (size, n) in other.histogram {
            *self.histogram.entry(size).or_default() += n;
        }
        self.max_min_cover = self.max_min_cover.max(other.max_min_cover);
        self.violations += other.violations;
        self.forensic_runs += other.forensic_runs;
        self.forensic_failures += other.forensic_failures;
        for v in other.violation_examples {
            if self.violation_examples.len() < KEPT_EXAMPLES {
                self.violation_examples.push(v);
            }
        }
        for f in other.forensic_examples {
            if self.forensic_examples.len() < KEPT_EXAMPLES {
                self.forensic_examples.push(f);
            }
        }
    }

    fn record(&mut self, coloring: &EdgeColoring) -> Result<()> {
        let shape = coloring.shape();
        let table = decompose(coloring);
        let instance = CoverInstance::new(&table);
        let cover = min_cover_exact(&instance, None)
            .cover()
            .expect("unbudgeted")
            .clone();
        let size = cover.len();
        self.visited += 1;
        *self.histogram.entry(size).or_default() += 1;
        self.max_min_cover = self.max_min_cover.max(Some(size));
        if size > self.budget {
            self.violations += 1;
            if self.violation_examples.len() < KEPT_EXAMPLES {
                self.violation_examples.push(Violation {
                    colors: coloring.colors().to_vec(),
                    min_cover: size,
                    cover: cover.clone(),
                });
            }
        }
        if let Some(t) = shape.k().checked_sub(shape.r()) {
            if size > t + 1 {
                self.forensic_runs += 1;
                let report = forensics(&table, &instance)?;
                if report.any_fails() {
                    self.forensic_failures += 1;
                    if self.forensic_examples.len() < KEPT_EXAMPLES {
                        self.forensic_examples.push(ForensicRecord {
                            colors: coloring.colors().to_vec(),
                            min_cover: size,
                            report,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Number of colorings an exhaustive sweep would consider before pruning.
pub fn enumeration_size(shape: &Shape, symmetry: Symmetry) -> f64 {
    let k = shape.k() as f64;
    let total = k.powf(shape.edge_count() as f64);
    match symmetry {
        Symmetry::None => total,
        Symmetry::ColorCanonical => total / (1..=shape.k()).map(|i| i as f64).product::<f64>(),
    }
}

pub fn sweep(config: &SweepConfig) -> Result<SweepSummary> {
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(|| run(config)),
        None => run(config),
    }
}

fn run(config: &SweepConfig) -> Result<SweepSummary> {
    let chunks = match config.mode {
        Mode::Exhaustive => exhaustive(config)?,
        Mode::Random { samples } => random(config, samples)?,
    };
    let mut summary = SweepSummary {
        budget: config.budget,
        ..SweepSummary::default()
    };
    for c in chunks {
        summary.merge(c);
    }
    Ok(summary)
}

fn random(config: &SweepConfig, samples: u64) -> Result<Vec<SweepSummary>> {
    const CHUNK: u64 = 256;
    let starts: Vec<u64> = (0..samples).step_by(CHUNK as usize).collect();
    starts
        .par_iter()
        .map(|&start| {
            let mut part = SweepSummary {
                budget: config.budget,
                ..SweepSummary::default()
            };
            for i in start..(start + CHUNK).min(samples) {
                let seed = config.seed.wrapping_add(i);
                let sample = match config.sampler {
                    Sampler::Rejection { max_retries } => {
                        random_spanning_coloring(&config.shape, seed, max_retries)?
                    }
                    Sampler::Walk { steps } => {
                        random_spanning_coloring_walk(&config.shape, seed, steps)?
                    }
                };
                part.record(&sample.coloring)?;
            }
            Ok(part)
        })
        .collect()
}

/// Depth-first assignment of edge colors in lexicographic edge order,
/// pruning branches in which some vertex can no longer see every color.
struct Enumerator {
    shape: Shape,
    edges: Vec<Vec<usize>>,
    k: usize,
    canonical: bool,
}

#[derive(Clone)]
struct State {
    colors: Vec<u8>,
    seen: Vec<u32>,
    missing: Vec<u32>,
    remaining: Vec<u32>,
    max_used: u8,
}

impl Enumerator {
    fn new(config: &SweepConfig) -> Self {
        let shape = config.shape.clone();
        let edges: Vec<Vec<usize>> = shape.edges().collect();
        Self {
            k: shape.k(),
            canonical: config.symmetry == Symmetry::ColorCanonical,
            edges,
            shape,
        }
    }

    fn root(&self) -> State {
        let n = self.shape.vertex_count();
        let remaining = (0..n)
            .map(|v| self.shape.degree(self.shape.part_of(v)) as u32)
            .collect();
        State {
            colors: Vec::with_capacity(self.edges.len()),
            seen: vec![0; n * self.k],
            missing: vec![self.k as u32; n],
            remaining,
            max_used: 0,
        }
    }

    fn feasible(&self, s: &State) -> bool {
        let left = self.edges.len() - s.colors.len();
        if self.canonical && self.k - s.max_used as usize > left {
            return false;
        }
        let depth = s.colors.len();
        let Some(last) = depth.checked_sub(1) else {
            return s.missing.iter().zip(&s.remaining).all(|(m, r)| m <= r);
        };
        self.edges[last]
            .iter()
            .all(|&v| s.missing[v] <= s.remaining[v])
    }

    fn push(&self, s: &mut State, c: u8) -> u8 {
        let e = s.colors.len();
        s.colors.push(c);
        for &v in &self.edges[e] {
            let slot = v * self.k + c as usize - 1;
            if s.seen[slot] == 0 {
                s.missing[v] -= 1;
            }
            s.seen[slot] += 1;
            s.remaining[v] -= 1;
        }
        let prev = s.max_used;
        s.max_used = s.max_used.max(c);
        prev
    }

    fn pop(&self, s: &mut State, prev_max: u8) {
        let c = s.colors.pop().expect("nonempty");
        let e = s.colors.len();
        for &v in &self.edges[e] {
            let slot = v * self.k + c as usize - 1;
            s.seen[slot] -= 1;
            if s.seen[slot] == 0 {
                s.missing[v] += 1;
            }
            s.remaining[v] += 1;
        }
        s.max_used = prev_max;
    }

    fn choices(&self, s: &State) -> u8 {
        if self.canonical {
            (s.max_used as usize + 1).min(self.k) as u8
        } else {
            self.k as u8
        }
    }

    /// Calls `leaf` on every feasible assignment of length `stop`.
    fn walk(
        &self,
        s: &mut State,
        stop: usize,
        leaf: &mut dyn FnMut(&State) -> Result<()>,
    ) -> Result<()> {
        if !self.feasible(s) {
            return Ok(());
        }
        if s.colors.len() == stop {
            return leaf(s);
        }
        for c in 1..=self.choices(s) {
            let prev = self.push(s, c);
            let r = self.walk(s, stop, leaf);
            self.pop(s, prev);
            r?;
        }
        Ok(())
    }
}

fn exhaustive(config: &SweepConfig) -> Result<Vec<SweepSummary>> {
    let size = enumeration_size(&config.shape, config.symmetry);
    if size > config.max_enum {
        return Err(Error::GuardExceeded(format!(
            "exhaustive sweep over ~{size:.3e} colorings exceeds limit {:.3e}",
            config.max_enum
        )));
    }
    let en = Enumerator::new(config);
    let total = en.edges.len();
    let depth = total.min(6);
    let mut prefixes = Vec::new();
    en.walk(&mut en.root(), depth, &mut |s| {
        prefixes.push(s.clone());
        Ok(())
    })?;
    prefixes
        .into_par_iter()
        .map(|mut prefix| {
            let mut part = SweepSummary {
                budget: config.budget,
                ..SweepSummary::default()
            };
            en.walk(&mut prefix, total, &mut |s| {
                let coloring = EdgeColoring::new(en.shape.clone(), s.colors.clone())?;
                part.record(&coloring)
            })?;
            Ok(part)
        })
        .collect()
}

/// Every spanning coloring of a shape, in lexicographic order; test and
/// small-instance use only.
pub fn spanning_colorings(shape: &Shape, symmetry: Symmetry) -> Result<Vec<EdgeColoring>> {
    let config = SweepConfig::new(shape.clone()).with_symmetry(symmetry);
    let en = Enumerator::new(&config);
    let mut out = Vec::new();
    let total = en.edges.len();
    en.walk(&mut en.root(), total, &mut |s| {
        out.push(EdgeColoring::new(shape.clone(), s.colors.clone())?);
        Ok(())
    })?;
    Ok(out)
}
