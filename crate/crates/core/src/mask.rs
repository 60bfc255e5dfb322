//! Vertex-set masks for the cover solvers. Instances with at most 64
//! vertices use a single word; larger ones use a word vector.

pub trait VertexMask: Clone + PartialEq + std::fmt::Debug {
    fn empty(n: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn contains(&self, v: usize) -> bool;
    fn union_with(&mut self, other: &Self);
    fn count(&self) -> usize;
    /// Size of `other \ self`.
    fn gain(&self, other: &Self) -> usize;
    fn first_missing(&self, n: usize) -> Option<usize>;

    fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(n);
        for v in members {
            m.insert(v);
        }
        m
    }
}

impl VertexMask for u64 {
    fn empty(_n: usize) -> Self {
        0
    }

    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }

    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }

    fn union_with(&mut self, other: &Self) {
        *self |= other;
    }

    fn count(&self) -> usize {
        self.count_ones() as usize
    }

    fn gain(&self, other: &Self) -> usize {
        (other & !self).count_ones() as usize
    }

    fn first_missing(&self, n: usize) -> Option<usize> {
        let v = (!self).trailing_zeros() as usize;
        (v < n).then_some(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideMask(Vec<u64>);

impl VertexMask for WideMask {
    fn empty(n: usize) -> Self {
        WideMask(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn gain(&self, other: &Self) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (b & !a).count_ones() as usize)
            .sum()
    }

    fn first_missing(&self, n: usize) -> Option<usize> {
        for (i, w) in self.0.iter().enumerate() {
            if *w != u64::MAX {
                let v = i * 64 + (!w).trailing_zeros() as usize;
                return (v < n).then_some(v);
            }
        }
        None
    }
}
