//! Monochromatic component decomposition and component vectors.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::shape::{Shape, VertexId};

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Canonical partition: classes numbered 1.. by their minimum element.
    pub fn into_partition(mut self) -> ColorPartition {
        let n = self.parent.len();
        let mut label = vec![0u32; n];
        let mut ids = Vec::with_capacity(n);
        let mut count = 0u32;
        for v in 0..n {
            let root = self.find(v);
            if label[root] == 0 {
                count += 1;
                label[root] = count;
            }
            ids.push(label[root]);
        }
        ColorPartition { ids, count }
    }
}

/// Partition of the vertex set into the components of one color.
///
/// `ids[v]` is in `1..=count`; ids are assigned in increasing order of each
/// component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ColorPartition {
    ids: Vec<u32>,
    count: u32,
}

impl ColorPartition {
    /// Renumbers an arbitrary labelling canonically.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let mut count = 0u32;
        let ids = labels
            .iter()
            .map(|l| {
                *map.entry(*l).or_insert_with(|| {
                    count += 1;
                    count
                })
            })
            .collect();
        Self { ids, count }
    }

    /// Takes ids as given; used for fixtures that are not canonical.
    pub fn from_raw(ids: Vec<u32>) -> Result<Self> {
        let count = ids.iter().copied().max().unwrap_or(0);
        if ids.contains(&0) {
            return Err(Error::InvalidArgument("component ids start at 1".into()));
        }
        Ok(Self { ids, count })
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> u32 {
        self.ids[v]
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn members(&self, id: u32) -> impl Iterator<Item = usize> + '_ {
        self.ids
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == id)
            .map(|(v, _)| v)
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count as usize];
        for &id in &self.ids {
            sizes[id as usize - 1] += 1;
        }
        sizes
    }
}

/// Per color, the partition of all vertices into monochromatic components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTable {
    shape: Shape,
    rows: Vec<ColorPartition>,
}

/// Component ids of one vertex, one entry per color.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentVector(pub Vec<u32>);

impl ComponentTable {
    /// Assembles a table from explicit rows. Rows are not required to be
    /// consistent with any coloring.
    pub fn from_rows(shape: Shape, rows: Vec<ColorPartition>) -> Result<Self> {
        if rows.len() != shape.k() {
            return Err(Error::LengthMismatch {
                expected: shape.k(),
                actual: rows.len(),
            });
        }
        if let Some(row) = rows.iter().find(|r| r.ids.len() != shape.vertex_count()) {
            return Err(Error::LengthMismatch {
                expected: shape.vertex_count(),
                actual: row.ids.len(),
            });
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[ColorPartition] {
        &self.rows
    }

    /// Row of `color` (1-based).
    pub fn row(&self, color: u8) -> &ColorPartition {
        &self.rows[color as usize - 1]
    }

    pub fn component_counts(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.count).collect()
    }

    pub fn id(&self, color: u8, global: usize) -> u32 {
        self.rows[color as usize - 1].ids[global]
    }

    /// Component vector of a global vertex.
    pub fn vector_at(&self, global: usize) -> ComponentVector {
        ComponentVector(self.rows.iter().map(|r| r.ids[global]).collect())
    }

    pub fn vector_of(&self, v: VertexId) -> Result<ComponentVector> {
        Ok(self.vector_at(self.shape.global(v)?))
    }
}

pub fn vector_of(table: &ComponentTable, v: VertexId) -> Result<ComponentVector> {
    table.vector_of(v)
}

/// Union-find pass over all edges, one forest per color.
pub fn decompose(coloring: &EdgeColoring) -> ComponentTable {
    let shape = coloring.shape();
    let n = shape.vertex_count();
    let mut forests: Vec<UnionFind> = (0..shape.k()).map(|_| UnionFind::new(n)).collect();
    let mut edge = vec![0; shape.r()];
    let mut it = shape.edges();
    while let Some(e) = it.next_into(&mut edge) {
        let uf = &mut forests[coloring.colors()[e as usize] as usize - 1];
        for &v in &edge[1..] {
            uf.union(edge[0], v);
        }
    }
    ComponentTable {
        shape: shape.clone(),
        rows: forests.into_iter().map(UnionFind::into_partition).collect(),
    }
}

pub fn hamming(u: &ComponentVector, v: &ComponentVector) -> Result<usize> {
    if u.0.len() != v.0.len() {
        return Err(Error::LengthMismatch {
            expected: u.0.len(),
            actual: v.0.len(),
        });
    }
    Ok(u.0.iter().zip(&v.0).filter(|(a, b)| a != b).count())
}
