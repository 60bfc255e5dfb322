//! Named instances and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::ryser::{ColoredCompleteGraph, GeneralHypergraph};
use crate::shape::Shape;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Biclique `K_{kk,kk}` where `x_i y_j` gets color `((j - i) mod kk) + 1`.
/// Every color class is a perfect matching.
pub fn cyclic_biclique(kk: usize) -> Result<EdgeColoring> {
    if kk < 2 {
        return Err(Error::InvalidArgument(format!(
            "cyclic biclique needs kk >= 2, got {kk}"
        )));
    }
    let shape = Shape::new(2, kk, vec![kk, kk])?;
    EdgeColoring::from_fn(shape, |t| ((t[1] + kk - t[0]) % kk) as u8 + 1)
}

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

type Triple = [u64; 3];

/// Homogeneous triples over Z_q with first nonzero coordinate 1, in
/// lexicographic order.
fn normalized_triples(q: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let t = [a, b, c];
                if t.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn incident(p: &Triple, l: &Triple, q: u64) -> bool {
    (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_multiple_of(q)
}

/// PG(2,q) with its lexicographically first point removed. Edges are the
/// lines avoiding that point; the parts are the other lines through it,
/// each without the removed point. Vertices are numbered part by part.
pub fn truncated_projective_plane(q: u64) -> Result<GeneralHypergraph> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let triples = normalized_triples(q);
    let removed = triples[0];
    let (through, avoiding): (Vec<Triple>, Vec<Triple>) =
        triples.iter().partition(|l| incident(&removed, l, q));
    let mut vertex_of = Vec::new();
    let mut sizes = Vec::new();
    for line in &through {
        let pts: Vec<Triple> = triples
            .iter()
            .filter(|p| **p != removed && incident(p, line, q))
            .copied()
            .collect();
        sizes.push(pts.len());
        vertex_of.extend(pts);
    }
    let edges = avoiding
        .iter()
        .map(|line| {
            vertex_of
                .iter()
                .enumerate()
                .filter(|(_, p)| incident(p, line, q))
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    GeneralHypergraph::new(vertex_of.len(), through.len(), edges, Some(sizes))
}

/// A sampled spanning coloring. `attempts` counts rejected draws for the
/// rejection sampler and repair moves for the walk sampler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sampled {
    pub coloring: EdgeColoring,
    pub attempts: u64,
}

fn check_feasible(shape: &Shape) -> Result<()> {
    let degree = shape.min_degree();
    if degree < shape.k() as u64 {
        return Err(Error::SpanningImpossible {
            degree,
            k: shape.k(),
        });
    }
    Ok(())
}

/// Colors edges uniformly at random and retries until the coloring is
/// spanning, so the output is uniform over spanning colorings.
pub fn random_spanning_coloring(shape: &Shape, seed: u64, max_retries: u64) -> Result<Sampled> {
    check_feasible(shape)?;
    let mut rng = rng(seed);
    let k = shape.k();
    let e = shape.edge_count() as usize;
    let edges: Vec<Vec<usize>> = shape.edges().collect();
    let mut colors = vec![0u8; e];
    let mut seen = vec![false; shape.vertex_count() * k];
    for attempt in 0..max_retries.max(1) {
        for c in colors.iter_mut() {
            *c = rng.gen_range(1..=k as u8);
        }
        seen.iter_mut().for_each(|s| *s = false);
        for (edge, &c) in edges.iter().zip(&colors) {
            for &v in edge {
                seen[v * k + c as usize - 1] = true;
            }
        }
        if seen.iter().all(|&s| s) {
            return Ok(Sampled {
                coloring: EdgeColoring::new(shape.clone(), colors)?,
                attempts: attempt,
            });
        }
    }
    Err(Error::RetriesExhausted(max_retries))
}

struct WalkState {
    k: usize,
    edges: Vec<Vec<usize>>,
    colors: Vec<u8>,
    counts: Vec<u32>,
}

impl WalkState {
    fn recolor(&mut self, e: usize, c: u8) {
        let old = self.colors[e] as usize - 1;
        for &v in &self.edges[e] {
            self.counts[v * self.k + old] -= 1;
            self.counts[v * self.k + c as usize - 1] += 1;
        }
        self.colors[e] = c;
    }

    /// Recoloring `e` keeps every endpoint seeing its current color.
    fn can_release(&self, e: usize) -> bool {
        let old = self.colors[e] as usize - 1;
        self.edges[e]
            .iter()
            .all(|&v| self.counts[v * self.k + old] >= 2)
    }
}

/// Spanning coloring from a seeded walk: a uniform draw is repaired into a
/// spanning coloring, then `steps` single-edge recolorings that preserve
/// spanning are applied. The move set is symmetric, so the walk's
/// stationary law is uniform on its reachable spanning colorings; a finite
/// walk is only approximately uniform. Use this where rejection sampling's
/// acceptance rate is hopeless.
pub fn random_spanning_coloring_walk(shape: &Shape, seed: u64, steps: u64) -> Result<Sampled> {
    check_feasible(shape)?;
    let mut rng = rng(seed);
    let k = shape.k();
    let n = shape.vertex_count();
    let edges: Vec<Vec<usize>> = shape.edges().collect();
    let colors: Vec<u8> = (0..edges.len())
        .map(|_| rng.gen_range(1..=k as u8))
        .collect();
    let mut st = WalkState {
        k,
        counts: vec![0; n * k],
        edges,
        colors,
    };
    for (e, edge) in st.edges.iter().enumerate() {
        for &v in edge {
            st.counts[v * k + st.colors[e] as usize - 1] += 1;
        }
    }
    let mut other = vec![0usize; shape.r()];
    let limit = 10_000 * (n * k) as u64;
    let mut moves = 0u64;
    loop {
        let missing: Vec<usize> = (0..n * k).filter(|&i| st.counts[i] == 0).collect();
        let Some(&pick) = missing.choose(&mut rng) else {
            break;
        };
        if moves >= limit {
            return Err(Error::RetriesExhausted(moves));
        }
        moves += 1;
        let (v, c) = (pick / k, (pick % k) as u8 + 1);
        let vid = shape.vertex(v)?;
        for (p, slot) in other.iter_mut().enumerate() {
            *slot = if p == vid.part {
                vid.index
            } else {
                rng.gen_range(0..shape.part_size(p))
            };
        }
        let e = shape.edge_index(&other)? as usize;
        // occasionally accept a move that opens a new gap, to escape local traps
        if st.can_release(e) || rng.gen_bool(0.05) {
            st.recolor(e, c);
        }
    }
    let m = st.edges.len();
    for _ in 0..steps {
        let e = rng.gen_range(0..m);
        let c = rng.gen_range(1..=k as u8);
        if c != st.colors[e] && st.can_release(e) {
            st.recolor(e, c);
        }
    }
    Ok(Sampled {
        coloring: EdgeColoring::new(shape.clone(), st.colors)?,
        attempts: moves,
    })
}

/// `edge_count` distinct random transversals of the given parts.
pub fn random_partite_hypergraph(
    part_sizes: &[usize],
    edge_count: usize,
    seed: u64,
) -> Result<GeneralHypergraph> {
    let total: usize = part_sizes.iter().product();
    if edge_count > total {
        return Err(Error::InvalidArgument(format!(
            "{edge_count} edges requested but only {total} transversals exist"
        )));
    }
    let mut rng = rng(seed);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    while edges.len() < edge_count {
        let e = random_transversal(part_sizes, &mut rng);
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    GeneralHypergraph::new(
        part_sizes.iter().sum(),
        part_sizes.len(),
        edges,
        Some(part_sizes.to_vec()),
    )
}

/// Grows a random intersecting family of transversals, adding each random
/// transversal that meets every edge so far, up to `max_edges`.
pub fn random_intersecting_partite_hypergraph(
    part_sizes: &[usize],
    max_edges: usize,
    seed: u64,
) -> Result<GeneralHypergraph> {
    let mut rng = rng(seed);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for _ in 0..200 * max_edges.max(1) {
        if edges.len() >= max_edges {
            break;
        }
        let e = random_transversal(part_sizes, &mut rng);
        if !edges.contains(&e) && edges.iter().all(|f| f.iter().any(|v| e.contains(v))) {
            edges.push(e);
        }
    }
    GeneralHypergraph::new(
        part_sizes.iter().sum(),
        part_sizes.len(),
        edges,
        Some(part_sizes.to_vec()),
    )
}

fn random_transversal(part_sizes: &[usize], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut offset = 0;
    part_sizes
        .iter()
        .map(|&n| {
            let v = offset + rng.gen_range(0..n);
            offset += n;
            v
        })
        .collect()
}

pub fn random_colored_complete_graph(
    n: usize,
    r: usize,
    seed: u64,
) -> Result<ColoredCompleteGraph> {
    let mut rng = rng(seed);
    let pairs = n * n.saturating_sub(1) / 2;
    let colors = (0..pairs).map(|_| rng.gen_range(1..=r as u8)).collect();
    ColoredCompleteGraph::new(n, r, colors)
}
