use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Frame of a complete r-partite r-uniform hypergraph colored with `k` colors.
///
/// Edges are the transversal r-tuples, enumerated lexicographically with the
/// index in the last part varying fastest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    r: usize,
    k: usize,
    part_sizes: Vec<usize>,
    offsets: Vec<usize>,
    edge_count: u64,
}

/// A vertex addressed by its part and its index inside that part (both 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub part: usize,
    pub index: usize,
}

impl VertexId {
    pub fn new(part: usize, index: usize) -> Self {
        Self { part, index }
    }
}

pub fn make_shape(r: usize, k: usize, part_sizes: &[usize]) -> Result<Shape> {
    Shape::new(r, k, part_sizes.to_vec())
}

impl Shape {
    pub fn new(r: usize, k: usize, part_sizes: Vec<usize>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidShape(format!("r = {r} must be at least 2")));
        }
        if k == 0 {
            return Err(Error::InvalidShape("k must be at least 1".into()));
        }
        if k > u8::MAX as usize {
            return Err(Error::InvalidShape(format!("k = {k} exceeds 255 colors")));
        }
        if part_sizes.len() != r {
            return Err(Error::InvalidShape(format!(
                "expected {r} part sizes, got {}",
                part_sizes.len()
            )));
        }
        if let Some(i) = part_sizes.iter().position(|&n| n == 0) {
            return Err(Error::InvalidShape(format!(
                "non-positive size for part {i}"
            )));
        }
        let edge_count = part_sizes
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n as u64))
            .ok_or_else(|| Error::InvalidShape("edge count overflows u64".into()))?;
        let mut offsets = Vec::with_capacity(r + 1);
        let mut acc = 0usize;
        for &n in &part_sizes {
            offsets.push(acc);
            acc = acc
                .checked_add(n)
                .ok_or_else(|| Error::InvalidShape("vertex count overflows".into()))?;
        }
        offsets.push(acc);
        Ok(Self {
            r,
            k,
            part_sizes,
            offsets,
            edge_count,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_size(&self, part: usize) -> usize {
        self.part_sizes[part]
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets[self.r]
    }

    /// Same frame with a different number of colors.
    pub fn with_colors(&self, k: usize) -> Result<Self> {
        Shape::new(self.r, k, self.part_sizes.clone())
    }

    /// Number of edges through any vertex of `part`.
    pub fn degree(&self, part: usize) -> u64 {
        self.edge_count / self.part_sizes[part] as u64
    }

    pub fn min_degree(&self) -> u64 {
        (0..self.r).map(|p| self.degree(p)).min().unwrap_or(0)
    }

    pub fn global(&self, v: VertexId) -> Result<usize> {
        if v.part >= self.r || v.index >= self.part_sizes[v.part] {
            return Err(Error::VertexOutOfRange(format!(
                "({}, {}) for parts {:?}",
                v.part, v.index, self.part_sizes
            )));
        }
        Ok(self.offsets[v.part] + v.index)
    }

    pub fn vertex(&self, global: usize) -> Result<VertexId> {
        if global >= self.vertex_count() {
            return Err(Error::VertexOutOfRange(format!(
                "global index {global} >= {}",
                self.vertex_count()
            )));
        }
        // offsets is sorted; the part is the last offset <= global
        let part = self.offsets[1..].partition_point(|&o| o <= global);
        Ok(VertexId::new(part, global - self.offsets[part]))
    }

    pub fn part_offset(&self, part: usize) -> usize {
        self.offsets[part]
    }

    pub fn part_of(&self, global: usize) -> usize {
        self.offsets[1..].partition_point(|&o| o <= global)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.r).flat_map(move |p| (0..self.part_sizes[p]).map(move |i| VertexId::new(p, i)))
    }

    /// Lexicographic index of the edge with the given per-part indices.
    pub fn edge_index(&self, tuple: &[usize]) -> Result<u64> {
        if tuple.len() != self.r {
            return Err(Error::LengthMismatch {
                expected: self.r,
                actual: tuple.len(),
            });
        }
        let mut idx = 0u64;
        for (p, &i) in tuple.iter().enumerate() {
            if i >= self.part_sizes[p] {
                return Err(Error::VertexOutOfRange(format!("index {i} in part {p}")));
            }
            idx = idx * self.part_sizes[p] as u64 + i as u64;
        }
        Ok(idx)
    }

    /// Per-part indices of the edge at lexicographic position `edge`.
    pub fn edge_tuple(&self, mut edge: u64, out: &mut [usize]) {
        for p in (0..self.r).rev() {
            let n = self.part_sizes[p] as u64;
            out[p] = (edge % n) as usize;
            edge /= n;
        }
    }

    /// Iterates all edges in lexicographic order as global vertex ids.
    pub fn edges(&self) -> EdgeIter<'_> {
        EdgeIter {
            shape: self,
            tuple: vec![0; self.r],
            next: 0,
        }
    }
}

/// Odometer over transversal edges; yields global vertex ids.
pub struct EdgeIter<'a> {
    shape: &'a Shape,
    tuple: Vec<usize>,
    next: u64,
}

impl EdgeIter<'_> {
    /// Advances and writes the global ids of the next edge into `out`.
    pub fn next_into(&mut self, out: &mut [usize]) -> Option<u64> {
        if self.next >= self.shape.edge_count {
            return None;
        }
        for (p, slot) in out.iter_mut().enumerate() {
            *slot = self.shape.offsets[p] + self.tuple[p];
        }
        let e = self.next;
        self.next += 1;
        for p in (0..self.shape.r).rev() {
            self.tuple[p] += 1;
            if self.tuple[p] < self.shape.part_sizes[p] {
                break;
            }
            self.tuple[p] = 0;
        }
        Some(e)
    }
}

impl Iterator for EdgeIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let mut out = vec![0; self.shape.r];
        self.next_into(&mut out).map(|_| out)
    }
}
