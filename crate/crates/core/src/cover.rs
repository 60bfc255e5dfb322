//! Minimum monochromatic component covers: exact branch and bound, greedy,
//! and validation.

use serde::{Deserialize, Serialize};

use crate::components::{ColorPartition, ComponentTable};
use crate::error::{Error, Result};
use crate::mask::{VertexMask, WideMask};
use crate::shape::{Shape, VertexId};

/// A component of a given color, addressed by its canonical id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComponentRef {
    pub color: u8,
    pub component: u32,
}

impl ComponentRef {
    pub fn new(color: u8, component: u32) -> Self {
        Self { color, component }
    }
}

/// A set of components, kept sorted by (color, component).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cover {
    members: Vec<ComponentRef>,
}

impl Cover {
    pub fn new(members: impl IntoIterator<Item = ComponentRef>) -> Self {
        let mut members: Vec<_> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub fn members(&self) -> &[ComponentRef] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let members: Vec<ComponentRef> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Self::new(members))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub component: ComponentRef,
    pub members: Vec<usize>,
}

/// Set-cover instance whose candidate sets are the monochromatic components.
#[derive(Debug, Clone)]
pub struct CoverInstance {
    vertex_count: usize,
    rows: Vec<ColorPartition>,
    candidates: Vec<Candidate>,
    shape: Option<Shape>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CoverOutcome {
    Found {
        cover: Cover,
    },
    /// The true minimum is larger than the budget.
    ExceedsBudget {
        budget: usize,
    },
}

impl CoverOutcome {
    pub fn cover(&self) -> Option<&Cover> {
        match self {
            CoverOutcome::Found { cover } => Some(cover),
            CoverOutcome::ExceedsBudget { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CoverCheck {
    Valid,
    Uncovered {
        vertex: usize,
        vertex_id: Option<VertexId>,
    },
}

impl CoverCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CoverCheck::Valid)
    }
}

impl CoverInstance {
    pub fn new(table: &ComponentTable) -> Self {
        let mut inst = Self::from_partitions(table.shape().vertex_count(), table.rows().to_vec())
            .expect("tables of valid shapes are nonempty");
        inst.shape = Some(table.shape().clone());
        inst
    }

    /// Instance over arbitrary per-color partitions of `0..vertex_count`.
    pub fn from_partitions(vertex_count: usize, rows: Vec<ColorPartition>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyInstance);
        }
        if let Some(r) = rows.iter().find(|r| r.ids().len() != vertex_count) {
            return Err(Error::LengthMismatch {
                expected: vertex_count,
                actual: r.ids().len(),
            });
        }
        let mut candidates = Vec::new();
        for (ci, row) in rows.iter().enumerate() {
            let mut members = vec![Vec::new(); row.count() as usize];
            for (v, &id) in row.ids().iter().enumerate() {
                members[id as usize - 1].push(v);
            }
            for (i, m) in members.into_iter().enumerate() {
                candidates.push(Candidate {
                    component: ComponentRef::new(ci as u8 + 1, i as u32 + 1),
                    members: m,
                });
            }
        }
        Ok(Self {
            vertex_count,
            rows,
            candidates,
            shape: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn rows(&self) -> &[ColorPartition] {
        &self.rows
    }

    /// Vertices of one component, or an error for a dangling reference.
    pub fn members(&self, c: ComponentRef) -> Result<&[usize]> {
        let row =
            self.rows
                .get((c.color as usize).wrapping_sub(1))
                .ok_or(Error::DanglingComponent {
                    color: c.color,
                    component: c.component,
                })?;
        if c.component == 0 || c.component > row.count() {
            return Err(Error::DanglingComponent {
                color: c.color,
                component: c.component,
            });
        }
        let offset: usize = self.rows[..c.color as usize - 1]
            .iter()
            .map(|r| r.count() as usize)
            .sum();
        Ok(&self.candidates[offset + c.component as usize - 1].members)
    }
}

pub fn validate_cover(instance: &CoverInstance, cover: &Cover) -> Result<CoverCheck> {
    let mut covered = vec![false; instance.vertex_count];
    for &c in cover.members() {
        for &v in instance.members(c)? {
            covered[v] = true;
        }
    }
    Ok(match covered.iter().position(|&b| !b) {
        None => CoverCheck::Valid,
        Some(v) => CoverCheck::Uncovered {
            vertex: v,
            vertex_id: instance
                .shape
                .as_ref()
                .map(|s| s.vertex(v).expect("in range")),
        },
    })
}

pub fn min_cover_greedy(instance: &CoverInstance) -> Cover {
    if instance.vertex_count <= 64 {
        greedy_with::<u64>(instance)
    } else {
        greedy_with::<WideMask>(instance)
    }
}

/// Exact minimum cover. With `budget = Some(b)` the search only looks for
/// covers of size at most `b` and reports exceedance otherwise.
pub fn min_cover_exact(instance: &CoverInstance, budget: Option<usize>) -> CoverOutcome {
    if instance.vertex_count <= 64 {
        exact_with::<u64>(instance, budget)
    } else {
        exact_with::<WideMask>(instance, budget)
    }
}

/// Size of a minimum cover.
pub fn min_cover_size(instance: &CoverInstance) -> usize {
    min_cover_exact(instance, None)
        .cover()
        .expect("unbudgeted search always finds a cover")
        .len()
}

fn masks<M: VertexMask>(instance: &CoverInstance) -> Vec<M> {
    instance
        .candidates
        .iter()
        .map(|c| M::from_members(instance.vertex_count, c.members.iter().copied()))
        .collect()
}

fn greedy_with<M: VertexMask>(instance: &CoverInstance) -> Cover {
    let n = instance.vertex_count;
    let masks = masks::<M>(instance);
    let mut covered = M::empty(n);
    let mut chosen = Vec::new();
    while covered.first_missing(n).is_some() {
        // strict `>` keeps the first maximum, i.e. ascending (color, id)
        let mut best = 0;
        let mut best_gain = 0;
        for (i, m) in masks.iter().enumerate() {
            let g = covered.gain(m);
            if g > best_gain {
                best_gain = g;
                best = i;
            }
        }
        covered.union_with(&masks[best]);
        chosen.push(instance.candidates[best].component);
    }
    Cover::new(chosen)
}

struct Search<'a, M> {
    n: usize,
    masks: Vec<M>,
    containing: Vec<Vec<usize>>,
    refs: &'a [Candidate],
    chosen: Vec<usize>,
    /// Only covers strictly smaller than this are of interest.
    bound: usize,
    best: Option<Vec<usize>>,
}

impl<M: VertexMask> Search<'_, M> {
    fn run(&mut self, covered: &M) {
        let Some(first) = covered.first_missing(self.n) else {
            self.bound = self.chosen.len();
            self.best = Some(self.chosen.clone());
            return;
        };
        let uncovered = self.n - covered.count();
        let max_gain = self
            .masks
            .iter()
            .map(|m| covered.gain(m))
            .max()
            .unwrap_or(0);
        let lower = uncovered.div_ceil(max_gain.max(1));
        if self.chosen.len() + lower >= self.bound {
            return;
        }
        // branch on the uncovered vertex lying in the fewest candidates
        let mut pivot = first;
        for v in first..self.n {
            if !covered.contains(v) && self.containing[v].len() < self.containing[pivot].len() {
                pivot = v;
            }
        }
        for idx in 0..self.containing[pivot].len() {
            let c = self.containing[pivot][idx];
            let mut next = covered.clone();
            next.union_with(&self.masks[c]);
            self.chosen.push(c);
            self.run(&next);
            self.chosen.pop();
            if self.chosen.len() + 1 >= self.bound {
                return;
            }
        }
    }
}

fn exact_with<M: VertexMask>(instance: &CoverInstance, budget: Option<usize>) -> CoverOutcome {
    let n = instance.vertex_count;
    let all = masks::<M>(instance);
    // identical candidate sets are interchangeable; keep the first
    let mut keep: Vec<usize> = Vec::new();
    for (i, m) in all.iter().enumerate() {
        if !keep.iter().any(|&j| all[j] == *m) {
            keep.push(i);
        }
    }
    let masks: Vec<M> = keep.iter().map(|&i| all[i].clone()).collect();
    let mut containing = vec![Vec::new(); n];
    for (ci, &orig) in keep.iter().enumerate() {
        for &v in &instance.candidates[orig].members {
            containing[v].push(ci);
        }
    }
    let greedy = greedy_with::<M>(instance);
    let (bound, best) = match budget {
        Some(b) if b < greedy.len() => (b + 1, None),
        _ => (greedy.len(), None),
    };
    let kept: Vec<Candidate> = keep
        .iter()
        .map(|&i| instance.candidates[i].clone())
        .collect();
    let mut search = Search {
        n,
        masks,
        containing,
        refs: &kept,
        chosen: Vec::new(),
        bound,
        best,
    };
    search.run(&M::empty(n));
    let cover = match search.best {
        Some(idx) => Cover::new(idx.into_iter().map(|i| search.refs[i].component)),
        None if budget.is_some_and(|b| b < greedy.len()) => {
            return CoverOutcome::ExceedsBudget {
                budget: budget.unwrap(),
            }
        }
        None => greedy,
    };
    CoverOutcome::Found { cover }
}
