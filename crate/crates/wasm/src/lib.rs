//! Browser bindings for the covnum demo page.
//!
//! Every exported function takes plain values and returns a JSON string, so
//! the page needs no bundler and no generated TypeScript types. The `*_json`
//! functions hold the logic and run natively under `cargo test`; the
//! `#[wasm_bindgen]` wrappers only convert errors.

use covnum::constructions::{
    cyclic_biclique, random_spanning_coloring_walk, truncated_projective_plane,
};
use covnum::harness::cover_biclique_k3;
use covnum::ryser::{is_intersecting, max_matching, min_vertex_cover, Guard};
use covnum::{
    decompose, min_cover_exact, min_cover_greedy, Cover, CoverInstance, EdgeColoring, Shape,
    Spanning,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest coloring the page will analyze; the exact cover search is
/// exponential and runs on the browser's main thread.
pub const MAX_EDGES: u64 = 4096;
/// Largest plane order offered; q = 5 already has 25 lines.
pub const MAX_PLANE_ORDER: u64 = 5;

#[derive(Serialize)]
struct ColorSummary {
    color: u8,
    components: u32,
    sizes: Vec<usize>,
}

#[derive(Serialize)]
struct VertexSummary {
    label: String,
    vector: Vec<u32>,
}

#[derive(Serialize)]
struct Analysis {
    r: usize,
    k: usize,
    parts: Vec<usize>,
    spanning: bool,
    spanning_note: String,
    colors: Vec<ColorSummary>,
    vertices: Vec<VertexSummary>,
    min_cover: Vec<CoverMember>,
    greedy_size: usize,
    /// Only for spanning 3-colorings of bipartite graphs.
    biclique_branch: Option<String>,
    /// Edge colors as a part-0 by part-1 matrix when r = 2.
    grid: Option<Vec<Vec<u8>>>,
}

#[derive(Serialize)]
struct CoverMember {
    color: u8,
    component: u32,
    vertices: Vec<String>,
}

#[derive(Serialize)]
struct PlaneSummary {
    q: u64,
    vertices: usize,
    parts: Vec<usize>,
    edges: Vec<Vec<usize>>,
    tau: usize,
    tau_witness: Vec<usize>,
    nu: usize,
    nu_witness: Vec<usize>,
    intersecting: bool,
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("demo payloads serialize")
}

fn vertex_label(shape: &Shape, global: usize) -> String {
    let v = shape.vertex(global).expect("vertex in range");
    format!("{}{}", (b'a' + (v.part % 26) as u8) as char, v.index + 1)
}

/// The coloring of K_{k,k} in which every color class is a perfect matching,
/// in the text file format.
pub fn cyclic_text(k: usize) -> Result<String, String> {
    cyclic_biclique(k)
        .map(|c| c.to_text())
        .map_err(|e| e.to_string())
}

/// A random spanning coloring in the text file format. `parts` is a comma or
/// space separated list of part sizes.
pub fn random_text(r: usize, k: usize, parts: &str, seed: u64) -> Result<String, String> {
    let sizes = parts
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| format!("bad part size {s:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let shape = Shape::new(r, k, sizes).map_err(|e| e.to_string())?;
    if shape.edge_count() > MAX_EDGES {
        return Err(format!(
            "{} edges is more than this page handles ({MAX_EDGES})",
            shape.edge_count()
        ));
    }
    let steps = 50 * shape.edge_count();
    random_spanning_coloring_walk(&shape, seed, steps)
        .map(|s| s.coloring.to_text())
        .map_err(|e| e.to_string())
}

/// Components, component vectors and a minimum cover of a coloring given in
/// either file format.
pub fn analyze_json(text: &str) -> Result<String, String> {
    let coloring = EdgeColoring::parse(text).map_err(|e| e.to_string())?;
    let shape = coloring.shape();
    if shape.edge_count() > MAX_EDGES {
        return Err(format!(
            "{} edges is more than this page handles ({MAX_EDGES})",
            shape.edge_count()
        ));
    }
    let table = decompose(&coloring);
    let instance = CoverInstance::new(&table);
    let cover: Cover = min_cover_exact(&instance, None)
        .cover()
        .cloned()
        .expect("unbudgeted search always finds a cover");
    let min_cover = cover
        .members()
        .iter()
        .map(|&c| CoverMember {
            color: c.color,
            component: c.component,
            vertices: instance
                .members(c)
                .expect("cover from this instance")
                .iter()
                .map(|&v| vertex_label(shape, v))
                .collect(),
        })
        .collect();
    let spanning = coloring.is_spanning();
    let spanning_note = match spanning {
        Spanning::Yes => "every vertex sees every color".to_string(),
        Spanning::Missing { vertex, color } => format!(
            "vertex {} sees no edge of color {color}",
            vertex_label(shape, shape.global(vertex).expect("vertex in range"))
        ),
    };
    let biclique_branch = (shape.r() == 2 && shape.k() == 3 && spanning.holds())
        .then(|| cover_biclique_k3(&coloring))
        .transpose()
        .map_err(|e| e.to_string())?
        .map(|b| {
            serde_json::to_value(b.branch)
                .expect("serializable")
                .as_str()
                .unwrap_or_default()
                .to_string()
        });
    let grid = (shape.r() == 2).then(|| {
        coloring
            .colors()
            .chunks(shape.part_size(1))
            .map(<[u8]>::to_vec)
            .collect()
    });

    let analysis = Analysis {
        r: shape.r(),
        k: shape.k(),
        parts: shape.part_sizes().to_vec(),
        spanning: spanning.holds(),
        spanning_note,
        colors: table
            .rows()
            .iter()
            .zip(1u8..)
            .map(|(row, color)| ColorSummary {
                color,
                components: row.count(),
                sizes: row.sizes(),
            })
            .collect(),
        vertices: (0..shape.vertex_count())
            .map(|v| VertexSummary {
                label: vertex_label(shape, v),
                vector: table.vector_at(v).0,
            })
            .collect(),
        min_cover,
        greedy_size: min_cover_greedy(&instance).len(),
        biclique_branch,
        grid,
    };
    Ok(to_json(&analysis))
}

/// Vertex cover and matching numbers of the projective plane of order `q`
/// with one point removed.
pub fn plane_json(q: u64) -> Result<String, String> {
    if q > MAX_PLANE_ORDER {
        return Err(format!(
            "order {q} is more than this page handles ({MAX_PLANE_ORDER})"
        ));
    }
    let h = truncated_projective_plane(q).map_err(|e| e.to_string())?;
    let guard = Guard {
        max_edges: 32,
        max_vertices: 32,
    };
    let tau = min_vertex_cover(&h, guard).map_err(|e| e.to_string())?;
    let nu = max_matching(&h, guard).map_err(|e| e.to_string())?;
    Ok(to_json(&PlaneSummary {
        q,
        vertices: h.vertex_count(),
        parts: h.partition().map(<[usize]>::to_vec).unwrap_or_default(),
        edges: h.edges().to_vec(),
        tau: tau.value,
        tau_witness: tau.witness,
        nu: nu.value,
        nu_witness: nu.witness,
        intersecting: is_intersecting(&h).holds(),
    }))
}

#[wasm_bindgen]
pub fn cyclic(k: usize) -> Result<String, JsError> {
    cyclic_text(k).map_err(|e| JsError::new(&e))
}

/// `seed` is a u32 so that JavaScript can pass a plain number, not a BigInt.
#[wasm_bindgen]
pub fn random(r: usize, k: usize, parts: &str, seed: u32) -> Result<String, JsError> {
    random_text(r, k, parts, seed.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn plane(q: u32) -> Result<String, JsError> {
    plane_json(q.into()).map_err(|e| JsError::new(&e))
}
