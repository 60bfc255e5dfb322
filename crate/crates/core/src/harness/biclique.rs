//! Biclique structure of 2-partite colorings and a cover finder for
//! spanning 3-colorings of bicliques that follows the case analysis of the
//! cov(2,3) = 3 argument.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::components::{decompose, ComponentTable};
use crate::cover::{min_cover_exact, validate_cover, ComponentRef, Cover, CoverInstance};
use crate::error::{Error, Result};
use crate::shape::{Shape, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "biclique", rename_all = "snake_case")]
pub enum BicliqueVerdict {
    Yes,
    /// `x` and `y` lie in `component` but their edge has color `actual`.
    No {
        component: u32,
        x: VertexId,
        y: VertexId,
        actual: u8,
    },
}

impl BicliqueVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, BicliqueVerdict::Yes)
    }
}

fn require_bipartite(shape: &Shape) -> Result<()> {
    if shape.r() != 2 {
        return Err(Error::InvalidArgument(format!(
            "biclique operations need r = 2, got {}",
            shape.r()
        )));
    }
    Ok(())
}

/// Per color, whether every component of that color is complete bipartite
/// in that color.
pub fn is_union_of_bicliques(coloring: &EdgeColoring) -> Result<Vec<BicliqueVerdict>> {
    let shape = coloring.shape();
    require_bipartite(shape)?;
    let table = decompose(coloring);
    Ok((1..=shape.k() as u8)
        .map(|c| first_defect(coloring, &table, c))
        .collect())
}

fn first_defect(coloring: &EdgeColoring, table: &ComponentTable, c: u8) -> BicliqueVerdict {
    let shape = coloring.shape();
    let (nx, ny) = (shape.part_size(0), shape.part_size(1));
    for x in 0..nx {
        for y in 0..ny {
            let gy = shape.part_offset(1) + y;
            let actual = coloring.colors()[x * ny + y];
            if table.id(c, x) == table.id(c, gy) && actual != c {
                return BicliqueVerdict::No {
                    component: table.id(c, x),
                    x: VertexId::new(0, x),
                    y: VertexId::new(1, y),
                    actual,
                };
            }
        }
    }
    BicliqueVerdict::Yes
}

/// Which step of the argument produced the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverBranch {
    /// Every color class is a union of bicliques; exact solver.
    Delegate,
    /// The third-color components of `u` and `v` coincide.
    SharedThird,
    /// One component covers the two-colored sub-biclique.
    SingleSub,
    /// Two components cover the sub-biclique and some single component
    /// completes a 3-cover with the first two colors at `u`.
    Escape,
    /// The two sub-biclique components share a color: two third-color components.
    SameColorCase,
    /// The two sub-biclique components differ in color: two third-color components.
    MixedColorCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BicliqueCover {
    pub cover: Cover,
    pub branch: CoverBranch,
}

/// Cover of size at most 3 for a spanning 3-coloring of a biclique.
pub fn cover_biclique_k3(coloring: &EdgeColoring) -> Result<BicliqueCover> {
    let shape = coloring.shape();
    require_bipartite(shape)?;
    if shape.k() != 3 {
        return Err(Error::InvalidArgument(format!(
            "need k = 3, got {}",
            shape.k()
        )));
    }
    if let crate::coloring::Spanning::Missing { vertex, color } = coloring.is_spanning() {
        return Err(Error::NotSpanning {
            vertex: shape.global(vertex)?,
            color,
        });
    }
    let table = decompose(coloring);
    let instance = CoverInstance::new(&table);
    let (nx, ny) = (shape.part_size(0), shape.part_size(1));
    let off = shape.part_offset(1);
    let color = |x: usize, y: usize| coloring.colors()[x * ny + y];
    let comp = |c: u8, v: usize| ComponentRef::new(c, table.id(c, v));

    let finish = |cover: Cover, branch: CoverBranch| -> Result<BicliqueCover> {
        if cover.len() > 3 || !validate_cover(&instance, &cover)?.is_valid() {
            return Err(Error::Internal(format!(
                "{branch:?} step produced an invalid cover {cover:?}"
            )));
        }
        Ok(BicliqueCover { cover, branch })
    };

    // u in X and v in Y sharing a color-a component while uv has color b
    let mut pivot = None;
    'search: for a in 1..=3u8 {
        for x in 0..nx {
            for y in 0..ny {
                if table.id(a, x) == table.id(a, off + y) && color(x, y) != a {
                    pivot = Some((a, color(x, y), x, y));
                    break 'search;
                }
            }
        }
    }
    let Some((a, b, u, vy)) = pivot else {
        let cover = min_cover_exact(&instance, None)
            .cover()
            .expect("unbudgeted")
            .clone();
        return finish(cover, CoverBranch::Delegate);
    };
    let c = 6 - a - b;
    let v = off + vy;
    let base = [comp(a, u), comp(b, u)];

    if table.id(c, u) == table.id(c, v) {
        return finish(
            Cover::new([base[0], base[1], comp(c, u)]),
            CoverBranch::SharedThird,
        );
    }

    // sub-biclique between the c-neighbours of v (in X) and of u (in Y)
    let sub_x: Vec<usize> = (0..nx).filter(|&x| color(x, vy) == c).collect();
    let sub_y: Vec<usize> = (0..ny).filter(|&y| color(u, y) == c).collect();
    let sub_shape = Shape::new(2, 2, vec![sub_x.len(), sub_y.len()])?;
    let sub = EdgeColoring::from_fn(sub_shape, |t| {
        let col = color(sub_x[t[0]], sub_y[t[1]]);
        // a c-edge here would join u and v in color c
        debug_assert_ne!(col, c);
        if col == a {
            1
        } else {
            2
        }
    })?;
    if sub_x
        .iter()
        .any(|&x| sub_y.iter().any(|&y| color(x, y) == c))
    {
        return Err(Error::Internal(
            "third-color edge inside the sub-biclique".into(),
        ));
    }
    let sub_table = decompose(&sub);
    let sub_cover = min_cover_exact(&CoverInstance::new(&sub_table), None)
        .cover()
        .expect("unbudgeted")
        .clone();
    if sub_cover.len() > 2 {
        return Err(Error::Internal(format!(
            "2-colored sub-biclique needs {} components",
            sub_cover.len()
        )));
    }
    let sub_global = |i: usize| {
        if i < sub_x.len() {
            sub_x[i]
        } else {
            off + sub_y[i - sub_x.len()]
        }
    };
    let sub_shape = sub.shape();
    // a sub-biclique component sits inside one component of the full graph
    let lift = |r: ComponentRef| -> (ComponentRef, Vec<usize>) {
        let col = if r.color == 1 { a } else { b };
        let members: Vec<usize> = (0..sub_shape.vertex_count())
            .filter(|&i| sub_table.id(r.color, i) == r.component)
            .map(sub_global)
            .collect();
        (comp(col, members[0]), members)
    };
    let lifted: Vec<(ComponentRef, Vec<usize>)> =
        sub_cover.members().iter().map(|&r| lift(r)).collect();

    if lifted.len() == 1 {
        return finish(
            Cover::new([base[0], base[1], lifted[0].0]),
            CoverBranch::SingleSub,
        );
    }

    // every escape in the case analysis completes G_a(u), G_b(u) with one
    // further component; try them all in (color, id) order
    let covered_by = |cover: &Cover| validate_cover(&instance, cover).is_ok_and(|v| v.is_valid());
    let escape = instance
        .candidates()
        .iter()
        .map(|cand| Cover::new([base[0], base[1], cand.component]))
        .find(|cv| covered_by(cv));
    if let Some(cover) = escape {
        return finish(cover, CoverBranch::Escape);
    }

    let sides_nonempty = lifted.iter().all(|(_, m)| {
        m.iter().any(|&w| shape.part_of(w) == 0) && m.iter().any(|&w| shape.part_of(w) == 1)
    });
    let branch = if lifted[0].0.color == lifted[1].0.color && sides_nonempty {
        CoverBranch::SameColorCase
    } else {
        CoverBranch::MixedColorCase
    };
    finish(Cover::new([comp(c, u), comp(c, v)]), branch)
}
