//! Executable predicates for the structural claims about component vectors
//! of spanning colorings with no small cover.
//!
//! Each checker is unconditional: it evaluates the claim's conclusion on the
//! given coloring. Whether the conclusion is expected to hold depends on the
//! caller (see [`forensics`]).

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::components::{decompose, hamming, ComponentTable, ComponentVector};
use crate::cover::{min_cover_exact, Cover, CoverInstance, CoverOutcome};
use crate::error::{Error, Result};
use crate::shape::VertexId;

/// Default cap on the number of tuples the exhaustive checkers visit.
pub const DEFAULT_MAX_TUPLES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Every transversal tuple shares a component in some color.
    Rsame,
    /// No `budget` components cover all vertices.
    T1Diff,
    /// Every part meets at least t+2 components of every color.
    SamePart,
    /// Cross-part vertex pairs are at Hamming distance at most t+1.
    SmallDist,
    /// Some cross-part pair is at distance at least r.
    Distr,
    /// Every transversal triple has at most one distinguishing color.
    Distinguishing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Tuple {
        vertices: Vec<VertexId>,
    },
    Cover {
        cover: Cover,
    },
    ColorPart {
        color: u8,
        part: usize,
        met: usize,
    },
    Pair {
        u: VertexId,
        v: VertexId,
        distance: usize,
    },
    Triple {
        a: VertexId,
        b: VertexId,
        c: VertexId,
        colors: [u8; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails { witness: Witness },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimEntry {
    pub claim: Claim,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl ClaimEntry {
    fn new(claim: Claim, verdict: Verdict) -> Self {
        Self { claim, verdict }
    }

    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self.verdict, Verdict::Fails { .. })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub entries: Vec<ClaimEntry>,
}

impl ClaimReport {
    pub fn any_fails(&self) -> bool {
        self.entries.iter().any(ClaimEntry::fails)
    }

    pub fn get(&self, claim: Claim) -> Option<&ClaimEntry> {
        self.entries.iter().find(|e| e.claim == claim)
    }
}

fn vectors(table: &ComponentTable) -> Vec<ComponentVector> {
    (0..table.shape().vertex_count())
        .map(|v| table.vector_at(v))
        .collect()
}

fn vid(table: &ComponentTable, v: usize) -> VertexId {
    table.shape().vertex(v).expect("in range")
}

fn guard_tuples(count: u64, max_tuples: u64) -> Result<()> {
    if count > max_tuples {
        return Err(Error::GuardExceeded(format!(
            "{count} tuples exceeds limit of {max_tuples}"
        )));
    }
    Ok(())
}

/// Checks the tuple claim against an arbitrary table, including tables that
/// did not come from [`decompose`].
pub fn check_claim_rsame_table(table: &ComponentTable, max_tuples: u64) -> Result<ClaimEntry> {
    let shape = table.shape();
    guard_tuples(shape.edge_count(), max_tuples)?;
    let k = shape.k() as u8;
    let mut edge = vec![0; shape.r()];
    let mut it = shape.edges();
    while it.next_into(&mut edge).is_some() {
        let agrees = (1..=k).any(|c| edge.iter().all(|&v| table.id(c, v) == table.id(c, edge[0])));
        if !agrees {
            let vertices = edge.iter().map(|&v| vid(table, v)).collect();
            return Ok(ClaimEntry::new(
                Claim::Rsame,
                Verdict::Fails {
                    witness: Witness::Tuple { vertices },
                },
            ));
        }
    }
    Ok(ClaimEntry::new(Claim::Rsame, Verdict::Holds))
}

pub fn check_claim_rsame(coloring: &EdgeColoring) -> Result<ClaimEntry> {
    check_claim_rsame_table(&decompose(coloring), DEFAULT_MAX_TUPLES)
}

/// Holds exactly when no cover of size at most `budget` exists; on failure
/// the witness is such a cover.
pub fn check_claim_t1diff_instance(instance: &CoverInstance, budget: usize) -> ClaimEntry {
    let verdict = match min_cover_exact(instance, Some(budget)) {
        CoverOutcome::ExceedsBudget { .. } => Verdict::Holds,
        CoverOutcome::Found { cover } => Verdict::Fails {
            witness: Witness::Cover { cover },
        },
    };
    ClaimEntry::new(Claim::T1Diff, verdict)
}

pub fn check_claim_t1diff(coloring: &EdgeColoring, budget: usize) -> ClaimEntry {
    check_claim_t1diff_instance(&CoverInstance::new(&decompose(coloring)), budget)
}

/// Every part meets at least `t + 2` distinct components of every color.
pub fn check_claim_samepart_table(table: &ComponentTable, t: usize) -> ClaimEntry {
    let shape = table.shape();
    for c in 1..=shape.k() as u8 {
        for part in 0..shape.r() {
            let start = shape.part_offset(part);
            let mut ids: Vec<u32> = (start..start + shape.part_size(part))
                .map(|v| table.id(c, v))
                .collect();
            ids.sort_unstable();
            ids.dedup();
            if ids.len() < t + 2 {
                return ClaimEntry::new(
                    Claim::SamePart,
                    Verdict::Fails {
                        witness: Witness::ColorPart {
                            color: c,
                            part,
                            met: ids.len(),
                        },
                    },
                );
            }
        }
    }
    ClaimEntry::new(Claim::SamePart, Verdict::Holds)
}

pub fn check_claim_samepart(coloring: &EdgeColoring, t: usize) -> ClaimEntry {
    check_claim_samepart_table(&decompose(coloring), t)
}

/// Cross-part pair with the largest Hamming distance (first in global order).
pub fn max_cross_distance(table: &ComponentTable) -> Option<(usize, usize, usize)> {
    let shape = table.shape();
    let vecs = vectors(table);
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..vecs.len() {
        for v in u + 1..vecs.len() {
            if shape.part_of(u) == shape.part_of(v) {
                continue;
            }
            let d = hamming(&vecs[u], &vecs[v]).expect("equal lengths");
            if best.is_none_or(|(_, _, b)| d > b) {
                best = Some((u, v, d));
            }
        }
    }
    best
}

pub fn check_claim_smalldist_table(table: &ComponentTable, t: usize) -> ClaimEntry {
    let verdict = match max_cross_distance(table) {
        Some((u, v, d)) if d > t + 1 => Verdict::Fails {
            witness: Witness::Pair {
                u: vid(table, u),
                v: vid(table, v),
                distance: d,
            },
        },
        _ => Verdict::Holds,
    };
    ClaimEntry::new(Claim::SmallDist, verdict)
}

pub fn check_claim_smalldist(coloring: &EdgeColoring, t: usize) -> ClaimEntry {
    check_claim_smalldist_table(&decompose(coloring), t)
}

/// On failure the witness is the farthest cross-part pair, whose distance
/// is below `r`.
pub fn check_claim_distr_table(table: &ComponentTable, r: usize) -> ClaimEntry {
    let verdict = match max_cross_distance(table) {
        Some((_, _, d)) if d >= r => Verdict::Holds,
        Some((u, v, d)) => Verdict::Fails {
            witness: Witness::Pair {
                u: vid(table, u),
                v: vid(table, v),
                distance: d,
            },
        },
        None => Verdict::Skipped {
            reason: "no cross-part pairs".into(),
        },
    };
    ClaimEntry::new(Claim::Distr, verdict)
}

pub fn check_claim_distr(coloring: &EdgeColoring, r: usize) -> ClaimEntry {
    check_claim_distr_table(&decompose(coloring), r)
}

/// Colors in which `a`, `b`, `c` lie in three distinct components.
pub fn distinguishing_colors(table: &ComponentTable, a: usize, b: usize, c: usize) -> Vec<u8> {
    (1..=table.shape().k() as u8)
        .filter(|&col| {
            let (x, y, z) = (table.id(col, a), table.id(col, b), table.id(col, c));
            x != y && y != z && x != z
        })
        .collect()
}

pub fn check_claim_distinguishing_table(
    table: &ComponentTable,
    max_tuples: u64,
) -> Result<ClaimEntry> {
    let shape = table.shape();
    if shape.r() != 3 {
        return Err(Error::InvalidArgument(format!(
            "distinguishing-color check needs r = 3, got {}",
            shape.r()
        )));
    }
    guard_tuples(shape.edge_count(), max_tuples)?;
    let mut edge = vec![0; 3];
    let mut it = shape.edges();
    while it.next_into(&mut edge).is_some() {
        let cols = distinguishing_colors(table, edge[0], edge[1], edge[2]);
        if cols.len() >= 2 {
            return Ok(ClaimEntry::new(
                Claim::Distinguishing,
                Verdict::Fails {
                    witness: Witness::Triple {
                        a: vid(table, edge[0]),
                        b: vid(table, edge[1]),
                        c: vid(table, edge[2]),
                        colors: [cols[0], cols[1]],
                    },
                },
            ));
        }
    }
    Ok(ClaimEntry::new(Claim::Distinguishing, Verdict::Holds))
}

pub fn check_claim_distinguishing(coloring: &EdgeColoring) -> Result<ClaimEntry> {
    check_claim_distinguishing_table(&decompose(coloring), DEFAULT_MAX_TUPLES)
}

/// Re-evaluates a failure witness against the table it came from; true when
/// the witness really refutes the claim.
pub fn recheck_witness(
    table: &ComponentTable,
    claim: Claim,
    witness: &Witness,
    param: usize,
) -> bool {
    let shape = table.shape();
    let g = |v: &VertexId| shape.global(*v).ok();
    match (claim, witness) {
        (Claim::Rsame, Witness::Tuple { vertices }) => {
            let Some(vs) = vertices.iter().map(g).collect::<Option<Vec<_>>>() else {
                return false;
            };
            (1..=shape.k() as u8).all(|c| vs.iter().any(|&v| table.id(c, v) != table.id(c, vs[0])))
        }
        (Claim::T1Diff, Witness::Cover { cover }) => {
            cover.len() <= param
                && crate::cover::validate_cover(&CoverInstance::new(table), cover)
                    .is_ok_and(|c| c.is_valid())
        }
        (Claim::SamePart, Witness::ColorPart { color, part, met }) => {
            let start = shape.part_offset(*part);
            let mut ids: Vec<u32> = (start..start + shape.part_size(*part))
                .map(|v| table.id(*color, v))
                .collect();
            ids.sort_unstable();
            ids.dedup();
            ids.len() == *met && *met < param + 2
        }
        (Claim::SmallDist | Claim::Distr, Witness::Pair { u, v, distance }) => {
            let (Some(a), Some(b)) = (g(u), g(v)) else {
                return false;
            };
            let d = hamming(&table.vector_at(a), &table.vector_at(b)).unwrap_or(usize::MAX);
            let cross = u.part != v.part && d == *distance;
            match claim {
                Claim::SmallDist => cross && d > param + 1,
                _ => {
                    cross && max_cross_distance(table).is_some_and(|(_, _, m)| m == d) && d < param
                }
            }
        }
        (Claim::Distinguishing, Witness::Triple { a, b, c, colors }) => {
            let (Some(a), Some(b), Some(c)) = (g(a), g(b), g(c)) else {
                return false;
            };
            let cols = distinguishing_colors(table, a, b, c);
            colors[0] != colors[1] && colors.iter().all(|x| cols.contains(x))
        }
        _ => false,
    }
}

/// All claims on one coloring with `t = k - r` (claims depending on `t`
/// are skipped when `k < r`) and cover budget `budget` (default `t + 1`).
pub fn run_claims(coloring: &EdgeColoring, budget: Option<usize>) -> Result<ClaimReport> {
    let shape = coloring.shape();
    let table = decompose(coloring);
    let instance = CoverInstance::new(&table);
    let mut entries = vec![check_claim_rsame_table(&table, DEFAULT_MAX_TUPLES)?];
    let t = shape.k().checked_sub(shape.r());
    let budget = budget.or(t.map(|t| t + 1));
    let skipped = |claim, reason: &str| {
        ClaimEntry::new(
            claim,
            Verdict::Skipped {
                reason: reason.into(),
            },
        )
    };
    match budget {
        Some(b) => entries.push(check_claim_t1diff_instance(&instance, b)),
        None => entries.push(skipped(Claim::T1Diff, "k < r and no budget given")),
    }
    let spanning = coloring.is_spanning().holds();
    let structural = [Claim::SamePart, Claim::SmallDist, Claim::Distr];
    match t {
        Some(t) if spanning => {
            entries.push(check_claim_samepart_table(&table, t));
            entries.push(check_claim_smalldist_table(&table, t));
            entries.push(check_claim_distr_table(&table, shape.r()));
        }
        Some(_) => structural
            .iter()
            .for_each(|&c| entries.push(skipped(c, "coloring is not spanning"))),
        None => structural
            .iter()
            .for_each(|&c| entries.push(skipped(c, "k < r"))),
    }
    if shape.r() == 3 {
        if spanning {
            entries.push(check_claim_distinguishing_table(
                &table,
                DEFAULT_MAX_TUPLES,
            )?);
        } else {
            entries.push(skipped(Claim::Distinguishing, "coloring is not spanning"));
        }
    }
    Ok(ClaimReport { entries })
}

/// Claims whose conclusions must hold on a spanning coloring that has no
/// cover of size `t + 1` (`t = k - r`). Any failure here means either the
/// solver or a checker is wrong.
pub fn forensics(table: &ComponentTable, instance: &CoverInstance) -> Result<ClaimReport> {
    let shape = table.shape();
    let r = shape.r();
    let t = shape
        .k()
        .checked_sub(r)
        .ok_or_else(|| Error::InvalidArgument("forensics needs k >= r".into()))?;
    let mut entries = vec![
        check_claim_t1diff_instance(instance, t + 1),
        check_claim_samepart_table(table, t),
        check_claim_smalldist_table(table, t),
    ];
    // the distance-r argument needs t + 1 >= r
    if t + 1 >= r {
        entries.push(check_claim_distr_table(table, r));
    }
    if r == 3 {
        entries.push(check_claim_distinguishing_table(table, DEFAULT_MAX_TUPLES)?);
    }
    Ok(ClaimReport { entries })
}
