//! General r-partite hypergraphs, exact vertex cover and matching numbers,
//! and the two transforms between intersecting r-partite hypergraphs and
//! r-colored complete graphs.

use serde::Serialize;

use crate::coloring::parse_numbers;
use crate::components::{ColorPartition, UnionFind};
use crate::cover::{Cover, CoverInstance};
use crate::error::{Error, Result};
use crate::mask::{VertexMask, WideMask};

/// Size limits for the exact vertex cover and matching searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_edges: usize,
    pub max_vertices: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Self {
            max_edges: 20,
            max_vertices: 24,
        }
    }
}

impl Guard {
    fn check(&self, h: &GeneralHypergraph) -> Result<()> {
        if h.edges.len() > self.max_edges || h.vertex_count > self.max_vertices {
            return Err(Error::GuardExceeded(format!(
                "{} edges / {} vertices exceeds limit of {} / {}",
                h.edges.len(),
                h.vertex_count,
                self.max_edges,
                self.max_vertices
            )));
        }
        Ok(())
    }
}

/// An r-uniform hypergraph, optionally with an r-partition into consecutive
/// vertex ranges (given by class sizes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralHypergraph {
    vertex_count: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    partition: Option<Vec<usize>>,
}

impl GeneralHypergraph {
    pub fn new(
        vertex_count: usize,
        r: usize,
        edges: Vec<Vec<usize>>,
        partition: Option<Vec<usize>>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidHypergraph(
                "uniformity must be positive".into(),
            ));
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.len() != r {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {i} has {} vertices, expected {r}",
                    e.len()
                )));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {i} repeats a vertex"
                )));
            }
            if e.last().is_some_and(|&v| v >= vertex_count) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {i} names a vertex >= {vertex_count}"
                )));
            }
            sorted.push(e);
        }
        let h = Self {
            vertex_count,
            r,
            edges: sorted,
            partition,
        };
        if let Some(sizes) = &h.partition {
            if sizes.len() != r {
                return Err(Error::InvalidHypergraph(format!(
                    "partition has {} classes, expected {r}",
                    sizes.len()
                )));
            }
            if sizes.iter().sum::<usize>() != vertex_count {
                return Err(Error::InvalidHypergraph(
                    "partition classes do not cover the vertex set".into(),
                ));
            }
            for (i, e) in h.edges.iter().enumerate() {
                let mut parts: Vec<usize> = e.iter().map(|&v| h.class_of(v).unwrap()).collect();
                parts.sort_unstable();
                if parts != (0..r).collect::<Vec<_>>() {
                    return Err(Error::InvalidHypergraph(format!(
                        "edge {i} is not a transversal"
                    )));
                }
            }
        }
        Ok(h)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn partition(&self) -> Option<&[usize]> {
        self.partition.as_deref()
    }

    /// Partition class of `v`, if partitioned.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        let sizes = self.partition.as_ref()?;
        let mut acc = 0;
        for (i, &s) in sizes.iter().enumerate() {
            acc += s;
            if v < acc {
                return Some(i);
            }
        }
        None
    }

    /// The vertex of edge `e` lying in class `part`.
    pub fn vertex_in_part(&self, e: usize, part: usize) -> Option<usize> {
        self.edges[e]
            .iter()
            .copied()
            .find(|&v| self.class_of(v) == Some(part))
    }

    /// Text format: `vertex_count edge_count r [partitioned]`, an optional
    /// line of class sizes, then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}", self.vertex_count, self.edges.len(), self.r);
        if let Some(sizes) = &self.partition {
            out.push_str(" partitioned\n");
            out.push_str(&join(sizes));
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str(&join(e));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let mut toks: Vec<&str> = header.split_whitespace().collect();
        let partitioned = toks.last() == Some(&"partitioned");
        if partitioned {
            toks.pop();
        }
        let nums = parse_numbers(&toks.join(" "), "header")?;
        let [vertex_count, edge_count, r] = nums[..] else {
            return Err(Error::Parse(
                "header must be `vertex_count edge_count r [partitioned]`".into(),
            ));
        };
        let partition = if partitioned {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing partition line".into()))?;
            Some(
                parse_numbers(line, "partition")?
                    .into_iter()
                    .map(|n| n as usize)
                    .collect(),
            )
        } else {
            None
        };
        let edges: Vec<Vec<usize>> = lines
            .map(|l| {
                Ok(parse_numbers(l, "edge")?
                    .into_iter()
                    .map(|v| v as usize)
                    .collect())
            })
            .collect::<Result<_>>()?;
        if edges.len() as u64 != edge_count {
            return Err(Error::Parse(format!(
                "header declares {edge_count} edges, found {}",
                edges.len()
            )));
        }
        Self::new(vertex_count as usize, r as usize, edges, partition)
    }
}

/// Complete graph on `n` vertices with every pair colored in `1..=r`.
/// Pairs are stored in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredCompleteGraph {
    n: usize,
    r: usize,
    colors: Vec<u8>,
}

impl ColoredCompleteGraph {
    pub fn new(n: usize, r: usize, colors: Vec<u8>) -> Result<Self> {
        if r == 0 || r > u8::MAX as usize {
            return Err(Error::InvalidArgument(format!(
                "color count {r} out of range"
            )));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        if colors.len() != pairs {
            return Err(Error::LengthMismatch {
                expected: pairs,
                actual: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c as usize > r) {
            return Err(Error::ColorOutOfRange {
                color: c as u64,
                k: r,
            });
        }
        Ok(Self { n, r, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    fn pair_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn color(&self, i: usize, j: usize) -> u8 {
        self.colors[self.pair_index(i, j)]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        (0..self.n)
            .flat_map(move |i| (i + 1..self.n).map(move |j| (i, j)))
            .zip(&self.colors)
            .map(|((i, j), &c)| (i, j, c))
    }

    pub fn to_text(&self) -> String {
        format!("{} {}\n{}\n", self.n, self.r, join(&self.colors))
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let [n, r] = parse_numbers(header, "header")?[..] else {
            return Err(Error::Parse("header must be `n r`".into()));
        };
        let mut colors = Vec::new();
        for l in lines {
            for c in parse_numbers(l, "colors")? {
                if c == 0 || c > r {
                    return Err(Error::ColorOutOfRange {
                        color: c,
                        k: r as usize,
                    });
                }
                colors.push(c as u8);
            }
        }
        Self::new(n as usize, r as usize, colors)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A hypergraph number together with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnessed {
    pub value: usize,
    /// Edge indices for a matching, vertex ids for a cover.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "intersecting", rename_all = "snake_case")]
pub enum Intersecting {
    Yes,
    Disjoint { first: usize, second: usize },
}

impl Intersecting {
    pub fn holds(&self) -> bool {
        matches!(self, Intersecting::Yes)
    }
}

pub fn is_intersecting(h: &GeneralHypergraph) -> Intersecting {
    for (i, a) in h.edges.iter().enumerate() {
        for (j, b) in h.edges.iter().enumerate().skip(i + 1) {
            if !a.iter().any(|v| b.contains(v)) {
                return Intersecting::Disjoint {
                    first: i,
                    second: j,
                };
            }
        }
    }
    Intersecting::Yes
}

fn edge_masks<M: VertexMask>(h: &GeneralHypergraph) -> Vec<M> {
    h.edges
        .iter()
        .map(|e| M::from_members(h.vertex_count, e.iter().copied()))
        .collect()
}

fn disjoint<M: VertexMask>(a: &M, b: &M) -> bool {
    a.gain(b) == b.count()
}

/// Maximum matching ν by include/exclude branch and bound.
pub fn max_matching(h: &GeneralHypergraph, guard: Guard) -> Result<Witnessed> {
    guard.check(h)?;
    Ok(if h.vertex_count <= 64 {
        matching_with::<u64>(h)
    } else {
        matching_with::<WideMask>(h)
    })
}

fn matching_with<M: VertexMask>(h: &GeneralHypergraph) -> Witnessed {
    struct S<M> {
        masks: Vec<M>,
        chosen: Vec<usize>,
        best: Vec<usize>,
    }
    fn go<M: VertexMask>(s: &mut S<M>, i: usize, used: &M) {
        if s.chosen.len() > s.best.len() {
            s.best = s.chosen.clone();
        }
        if i == s.masks.len() || s.chosen.len() + (s.masks.len() - i) <= s.best.len() {
            return;
        }
        if disjoint(used, &s.masks[i]) {
            let mut next = used.clone();
            next.union_with(&s.masks[i]);
            s.chosen.push(i);
            go(s, i + 1, &next);
            s.chosen.pop();
        }
        go(s, i + 1, used);
    }
    let mut s = S {
        masks: edge_masks::<M>(h),
        chosen: Vec::new(),
        best: Vec::new(),
    };
    go(&mut s, 0, &M::empty(h.vertex_count));
    Witnessed {
        value: s.best.len(),
        witness: s.best,
    }
}

/// Minimum vertex cover τ: branch on the vertices of the first unhit edge.
pub fn min_vertex_cover(h: &GeneralHypergraph, guard: Guard) -> Result<Witnessed> {
    guard.check(h)?;
    Ok(if h.vertex_count <= 64 {
        vertex_cover_with::<u64>(h)
    } else {
        vertex_cover_with::<WideMask>(h)
    })
}

fn vertex_cover_with<M: VertexMask>(h: &GeneralHypergraph) -> Witnessed {
    struct S<'a, M> {
        masks: Vec<M>,
        edges: &'a [Vec<usize>],
        chosen: Vec<usize>,
        best: Option<Vec<usize>>,
    }
    fn go<M: VertexMask>(s: &mut S<'_, M>, hit: &M) {
        let bound = s.best.as_ref().map_or(usize::MAX, |b| b.len());
        // pairwise disjoint unhit edges each need their own cover vertex
        let mut packed = hit.clone();
        let mut lower = 0;
        let mut first_unhit = None;
        for (i, m) in s.masks.iter().enumerate() {
            if disjoint(hit, m) {
                first_unhit.get_or_insert(i);
                if disjoint(&packed, m) {
                    packed.union_with(m);
                    lower += 1;
                }
            }
        }
        let Some(e) = first_unhit else {
            if s.chosen.len() < bound {
                s.best = Some(s.chosen.clone());
            }
            return;
        };
        if s.chosen.len() + lower >= bound {
            return;
        }
        for &v in s.edges[e].iter() {
            let mut next = hit.clone();
            next.insert(v);
            s.chosen.push(v);
            go(s, &next);
            s.chosen.pop();
        }
    }
    let n = h.vertex_count;
    // hit-set tracked as the set of chosen vertices; an edge is hit when it meets it
    let mut s = S {
        masks: edge_masks::<M>(h),
        edges: &h.edges,
        chosen: Vec::new(),
        best: None,
    };
    go(&mut s, &M::empty(n));
    let mut best = s.best.unwrap_or_default();
    best.sort_unstable();
    Witnessed {
        value: best.len(),
        witness: best,
    }
}

/// Per color, the connected components of that color class.
pub fn graph_components(g: &ColoredCompleteGraph) -> Vec<ColorPartition> {
    let mut forests: Vec<UnionFind> = (0..g.r).map(|_| UnionFind::new(g.n)).collect();
    for (i, j, c) in g.pairs() {
        forests[c as usize - 1].union(i, j);
    }
    forests.into_iter().map(UnionFind::into_partition).collect()
}

/// Component-cover instance of a colored complete graph.
pub fn graph_cover_instance(g: &ColoredCompleteGraph) -> Result<CoverInstance> {
    CoverInstance::from_partitions(g.n, graph_components(g))
}

/// Graph on the edges of `h`; a pair is colored by the smallest part index
/// (1-based) in which the two edges meet.
pub fn to_colored_graph(h: &GeneralHypergraph) -> Result<ColoredCompleteGraph> {
    if h.partition.is_none() {
        return Err(Error::NotPartitioned);
    }
    if let Intersecting::Disjoint { first, second } = is_intersecting(h) {
        return Err(Error::NotIntersecting(first, second));
    }
    let m = h.edges.len();
    let by_part: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            (0..h.r)
                .map(|p| h.vertex_in_part(e, p).expect("transversal"))
                .collect()
        })
        .collect();
    let mut colors = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for a in 0..m {
        for b in a + 1..m {
            let p = (0..h.r)
                .find(|&p| by_part[a][p] == by_part[b][p])
                .expect("intersecting transversals meet in some part");
            colors.push(p as u8 + 1);
        }
    }
    ColoredCompleteGraph::new(m, h.r, colors)
}

/// Hypergraph whose vertices are the monochromatic components of `g`
/// (class i holds the color-i components in canonical order) and whose
/// edges are the distinct per-vertex component tuples.
pub fn to_partite_hypergraph(g: &ColoredCompleteGraph) -> GeneralHypergraph {
    let comps = graph_components(g);
    let sizes: Vec<usize> = comps.iter().map(|p| p.count() as usize).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n {
        let e: Vec<usize> = comps
            .iter()
            .zip(&offsets)
            .map(|(p, &o)| o + p.id(v) as usize - 1)
            .collect();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    GeneralHypergraph::new(sizes.iter().sum(), g.r, edges, Some(sizes))
        .expect("component tuples are transversals")
}

/// Maps a component cover of `to_colored_graph(h)` to vertices of `h`: a
/// color-i component contributes the part-i vertex shared by its edges.
pub fn vertex_cover_from_components(
    h: &GeneralHypergraph,
    g: &ColoredCompleteGraph,
    cover: &Cover,
) -> Result<Vec<usize>> {
    let inst = graph_cover_instance(g)?;
    let mut out = Vec::new();
    for &c in cover.members() {
        let members = inst.members(c)?;
        let part = c.color as usize - 1;
        let first = h
            .vertex_in_part(members[0], part)
            .ok_or(Error::NotPartitioned)?;
        if members
            .iter()
            .any(|&e| h.vertex_in_part(e, part) != Some(first))
        {
            return Err(Error::Internal(format!(
                "component {c:?} does not share a part-{} vertex",
                part + 1
            )));
        }
        out.push(first);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn is_vertex_cover(h: &GeneralHypergraph, vertices: &[usize]) -> bool {
    h.edges
        .iter()
        .all(|e| e.iter().any(|v| vertices.contains(v)))
}
