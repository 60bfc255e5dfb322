use std::io::Read;

use covnum::constructions::{
    cyclic_biclique, random_colored_complete_graph, random_intersecting_partite_hypergraph,
    random_partite_hypergraph, random_spanning_coloring, random_spanning_coloring_walk,
    truncated_projective_plane,
};
use covnum::harness::{
    cover_biclique_k3, run_claims, sweep, Mode, Sampler, SweepConfig, Symmetry, Verdict,
};
use covnum::ryser::{
    is_intersecting, max_matching, min_vertex_cover, to_colored_graph, to_partite_hypergraph,
    ColoredCompleteGraph, GeneralHypergraph, Guard,
};
use covnum::{
    decompose, min_cover_exact, min_cover_greedy, validate_cover, ColorPartition, CoverCheck,
    CoverInstance, CoverOutcome, EdgeColoring, Shape, Spanning,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{digest, Format, Report, Table};
use crate::{
    Cli, Command, Construct, ModeArg, SamplerArg, SamplerOpts, SymmetryArg, Transform, VerifyArgs,
};

#[derive(Debug)]
pub enum Failure {
    /// Flags that parse but do not fit together; exit 2.
    Usage(String),
    /// Bad input files, impossible instances, exceeded guards; exit 1.
    Domain(String),
}

impl From<covnum::Error> for Failure {
    fn from(e: covnum::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub enum Output {
    /// A file in one of the instance formats, written verbatim.
    Data(String),
    Report {
        report: Report,
        digest: String,
    },
}

type Outcome = Result<Output, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Components { file, vectors } => components(file, *vectors),
        Command::Cover {
            file,
            budget,
            check,
        } => cover(file, *budget, check.as_deref()),
        Command::Verify(args) => verify(args, cli.threads),
        Command::Claims { file, budget } => claims(file, *budget),
        Command::Construct { what } => construct(what, cli.format),
        Command::Transform { what } => transform(what),
        Command::CoverBiclique { file } => biclique(file),
        Command::TauNu {
            file,
            max_edges,
            max_vertices,
        } => tau_nu(
            file,
            Guard {
                max_edges: *max_edges,
                max_vertices: *max_vertices,
            },
        ),
    }
}

/// Reads a file, or stdin for `-`.
fn read_input(path: &str) -> Result<(String, String), Failure> {
    let mut bytes = Vec::new();
    let read = if path == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(path).map(|b| bytes = b)
    };
    read.map_err(|e| Failure::Domain(format!("cannot read {path}: {e}")))?;
    let hash = digest(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure::Domain(format!("{path}: input is not UTF-8")))?;
    Ok((text, hash))
}

fn read_coloring(path: &str) -> Result<(EdgeColoring, String), Failure> {
    let (text, hash) = read_input(path)?;
    let coloring =
        EdgeColoring::parse(&text).map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
    Ok((coloring, hash))
}

fn report(report: Report, digest: String) -> Outcome {
    Ok(Output::Report { report, digest })
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn shape_label(shape: &Shape) -> String {
    format!(
        "r={} k={} parts={}",
        shape.r(),
        shape.k(),
        join(shape.part_sizes(), ",")
    )
}

fn spanning_label(s: &Spanning) -> String {
    match s {
        Spanning::Yes => "yes".into(),
        Spanning::Missing { vertex, color } => format!(
            "no (vertex {}:{} has no edge of color {color})",
            vertex.part, vertex.index
        ),
    }
}

#[derive(Serialize)]
struct ColorRow {
    color: u8,
    components: u32,
    sizes: Vec<usize>,
    /// Component id of every vertex, in global vertex order.
    ids: Vec<u32>,
}

#[derive(Serialize)]
struct VertexRow {
    part: usize,
    index: usize,
    vector: Vec<u32>,
}

#[derive(Serialize)]
struct ComponentsPayload {
    r: usize,
    k: usize,
    parts: Vec<usize>,
    #[serde(flatten)]
    spanning: Spanning,
    colors: Vec<ColorRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<VertexRow>>,
}

fn components(path: &str, with_vectors: bool) -> Outcome {
    let (coloring, hash) = read_coloring(path)?;
    let shape = coloring.shape();
    let table = decompose(&coloring);
    let spanning = coloring.is_spanning();
    let colors: Vec<ColorRow> = table
        .rows()
        .iter()
        .zip(1u8..)
        .map(|(row, color)| ColorRow {
            color,
            components: row.count(),
            sizes: row.sizes(),
            ids: row.ids().to_vec(),
        })
        .collect();
    let vectors = with_vectors.then(|| {
        shape
            .vertices()
            .map(|v| VertexRow {
                part: v.part,
                index: v.index,
                vector: table.vector_of(v).expect("vertex in range").0,
            })
            .collect::<Vec<_>>()
    });

    let mut by_color = Table::new("components by color", &["color", "components", "sizes"]);
    for row in &colors {
        by_color.push(vec![
            row.color.to_string(),
            row.components.to_string(),
            join(&row.sizes, " "),
        ]);
    }
    let mut tables = vec![by_color];
    if let Some(vectors) = &vectors {
        let mut t = Table::new("component vectors", &["vertex", "vector"]);
        for v in vectors {
            t.push(vec![
                format!("{}:{}", v.part, v.index),
                join(&v.vector, " "),
            ]);
        }
        tables.push(t);
    }
    let total: u64 = colors.iter().map(|c| u64::from(c.components)).sum();
    let mut out = Report::new(ComponentsPayload {
        r: shape.r(),
        k: shape.k(),
        parts: shape.part_sizes().to_vec(),
        spanning,
        colors,
        vectors,
    })
    .field("shape", shape_label(shape))
    .field("spanning", spanning_label(&spanning))
    .field("components", total);
    out.tables = tables;
    report(out, hash)
}

/// A cover instance from a coloring, or from the JSON record that
/// `components --format json` writes.
fn read_instance(path: &str) -> Result<(CoverInstance, String), Failure> {
    let (text, hash) = read_input(path)?;
    if let Ok(record) = serde_json::from_str::<Value>(&text) {
        if let Some(payload) = record.get("payload") {
            return Ok((
                instance_from_components(payload).map_err(|e| prefix(path, e))?,
                hash,
            ));
        }
    }
    let coloring =
        EdgeColoring::parse(&text).map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
    Ok((CoverInstance::new(&decompose(&coloring)), hash))
}

fn prefix(path: &str, f: Failure) -> Failure {
    match f {
        Failure::Domain(m) => Failure::Domain(format!("{path}: {m}")),
        usage => usage,
    }
}

fn instance_from_components(payload: &Value) -> Result<CoverInstance, Failure> {
    let bad = |what: &str| Failure::Domain(format!("components record: {what}"));
    let parts: Vec<usize> = payload
        .get("parts")
        .and_then(|p| serde_json::from_value(p.clone()).ok())
        .ok_or_else(|| bad("missing \"parts\""))?;
    let colors = payload
        .get("colors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"colors\""))?;
    let vertex_count = parts.iter().sum();
    let rows = colors
        .iter()
        .map(|c| {
            let ids: Vec<u32> = c
                .get("ids")
                .and_then(|ids| serde_json::from_value(ids.clone()).ok())
                .ok_or_else(|| bad("color entry without \"ids\""))?;
            if ids.len() != vertex_count {
                return Err(bad("component ids do not match the part sizes"));
            }
            Ok(ColorPartition::from_raw(ids)?)
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(CoverInstance::from_partitions(vertex_count, rows)?)
}

fn cover_table(instance: &CoverInstance, cover: &covnum::Cover) -> Result<Table, Failure> {
    let mut t = Table::new("cover", &["color", "component", "vertices"]);
    for c in cover.members() {
        let size = instance.members(*c)?.len();
        t.push(vec![
            c.color.to_string(),
            c.component.to_string(),
            size.to_string(),
        ]);
    }
    Ok(t)
}

fn cover(path: &str, budget: Option<usize>, check: Option<&str>) -> Outcome {
    let (instance, hash) = read_instance(path)?;
    if let Some(check_path) = check {
        let (text, _) = read_input(check_path)?;
        let candidate =
            covnum::Cover::from_json(&text).map_err(|e| prefix(check_path, e.into()))?;
        let verdict = validate_cover(&instance, &candidate)?;
        let label = match verdict {
            CoverCheck::Valid => "valid".to_string(),
            CoverCheck::Uncovered { vertex, vertex_id } => match vertex_id {
                Some(v) => format!("invalid (vertex {}:{} uncovered)", v.part, v.index),
                None => format!("invalid (vertex {vertex} uncovered)"),
            },
        };
        let out = Report::new(json!({ "size": candidate.len(), "check": verdict }))
            .field("size", candidate.len())
            .field("check", label);
        return report(out, hash);
    }

    let greedy = min_cover_greedy(&instance);
    let outcome = min_cover_exact(&instance, budget);
    let mut out = Report::new(json!({
        "vertex_count": instance.vertex_count(),
        "greedy_size": greedy.len(),
        "budget": budget,
        "min_cover": outcome.cover().map(covnum::Cover::len),
        "result": outcome,
    }))
    .field("vertices", instance.vertex_count());
    out = match &outcome {
        CoverOutcome::Found { cover } => out
            .field("min cover", cover.len())
            .field("greedy", greedy.len())
            .table(cover_table(&instance, cover)?),
        CoverOutcome::ExceedsBudget { budget } => out
            .field("min cover", format!("> {budget}"))
            .field("greedy", greedy.len()),
    };
    report(out, hash)
}

fn sampler(opts: &SamplerOpts, edge_count: u64) -> Sampler {
    match opts.sampler {
        SamplerArg::Rejection => Sampler::Rejection {
            max_retries: opts.max_retries,
        },
        SamplerArg::Walk => Sampler::Walk {
            steps: opts.walk_steps.unwrap_or(50 * edge_count),
        },
    }
}

fn verify_shape(args: &VerifyArgs) -> Result<Shape, Failure> {
    if args.parts.len() != args.r {
        return Err(Failure::Usage(format!(
            "--parts lists {} sizes but --r is {}",
            args.parts.len(),
            args.r
        )));
    }
    Shape::new(args.r, args.r + args.t, args.parts.clone())
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn verify(args: &VerifyArgs, threads: Option<usize>) -> Outcome {
    let shape = verify_shape(args)?;
    let mode = match args.mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Random => Mode::Random {
            samples: args.samples,
        },
    };
    let symmetry = match args.symmetry {
        SymmetryArg::None => Symmetry::None,
        SymmetryArg::Color => Symmetry::ColorCanonical,
    };
    let mut config = SweepConfig::new(shape.clone())
        .with_symmetry(symmetry)
        .with_sampler(sampler(&args.sampler, shape.edge_count()));
    config.mode = mode;
    config.seed = args.seed;
    config.max_enum = args.max_enum;
    config.threads = threads;
    if let Some(b) = args.budget {
        config = config.with_budget(b);
    }
    // threads change scheduling only, never results, so they stay out of the digest
    let params = json!({
        "r": shape.r(),
        "k": shape.k(),
        "parts": shape.part_sizes(),
        "mode": config.mode,
        "seed": config.seed,
        "symmetry": config.symmetry,
        "budget": config.budget,
        "sampler": config.sampler,
        "max_enum": config.max_enum,
    });
    let summary = sweep(&config)?;

    let max = summary
        .max_min_cover
        .map_or_else(|| "none".to_string(), |m| m.to_string());
    let mut hist = Table::new("minimum cover sizes", &["min cover", "colorings"]);
    for (size, n) in &summary.histogram {
        hist.push(vec![size.to_string(), n.to_string()]);
    }
    let out = Report::new(json!({ "parameters": params, "summary": summary }))
        .field("shape", shape_label(&shape))
        .field("colorings", summary.visited)
        .field("budget", summary.budget)
        .field("violations", summary.violations)
        .field("max min-cover", max)
        .field(
            "forensics",
            format!(
                "{} runs, {} with failed claims",
                summary.forensic_runs, summary.forensic_failures
            ),
        )
        .table(hist);
    let digest = digest(params.to_string().as_bytes());
    report(out, digest)
}

fn claims(path: &str, budget: Option<usize>) -> Outcome {
    let (coloring, hash) = read_coloring(path)?;
    let claims = run_claims(&coloring, budget)?;
    let mut t = Table::new("claims", &["claim", "verdict", "detail"]);
    for entry in &claims.entries {
        let name = serde_json::to_value(entry.claim).expect("serializable");
        let (verdict, detail) = match &entry.verdict {
            Verdict::Holds => ("holds", String::new()),
            Verdict::Fails { witness } => (
                "fails",
                serde_json::to_string(witness).expect("serializable"),
            ),
            Verdict::Skipped { reason } => ("skipped", reason.clone()),
        };
        t.push(vec![
            name.as_str().unwrap_or_default().to_string(),
            verdict.to_string(),
            detail,
        ]);
    }
    let failing = claims.entries.iter().filter(|e| e.fails()).count();
    let out = Report::new(&claims)
        .field("shape", shape_label(coloring.shape()))
        .field("failing", failing)
        .table(t);
    report(out, hash)
}

fn check_parts(parts: &[usize], r: usize) -> Result<(), Failure> {
    if parts.len() != r {
        return Err(Failure::Usage(format!(
            "--parts lists {} sizes but --r is {r}",
            parts.len()
        )));
    }
    Ok(())
}

fn coloring_data(coloring: &EdgeColoring, format: Format) -> Outcome {
    Ok(Output::Data(match format {
        Format::Json => coloring.to_json() + "\n",
        Format::Table | Format::Csv => coloring.to_text(),
    }))
}

fn construct(what: &Construct, format: Format) -> Outcome {
    match what {
        Construct::CyclicBiclique { k } => coloring_data(&cyclic_biclique(*k)?, format),
        Construct::TruncatedPlane { q } => {
            Ok(Output::Data(truncated_projective_plane(*q)?.to_text()))
        }
        Construct::Random {
            r,
            k,
            parts,
            seed,
            sampler: opts,
        } => {
            check_parts(parts, *r)?;
            let shape =
                Shape::new(*r, *k, parts.clone()).map_err(|e| Failure::Usage(e.to_string()))?;
            let sampled = match sampler(opts, shape.edge_count()) {
                Sampler::Rejection { max_retries } => {
                    random_spanning_coloring(&shape, *seed, max_retries)?
                }
                Sampler::Walk { steps } => random_spanning_coloring_walk(&shape, *seed, steps)?,
            };
            coloring_data(&sampled.coloring, format)
        }
        Construct::RandomHypergraph {
            parts,
            edges,
            seed,
            intersecting,
        } => {
            let h = if *intersecting {
                random_intersecting_partite_hypergraph(parts, *edges, *seed)?
            } else {
                random_partite_hypergraph(parts, *edges, *seed)?
            };
            Ok(Output::Data(h.to_text()))
        }
        Construct::RandomGraph { n, r, seed } => Ok(Output::Data(
            random_colored_complete_graph(*n, *r, *seed)?.to_text(),
        )),
    }
}

fn transform(what: &Transform) -> Outcome {
    match what {
        Transform::ToGraph { file } => {
            let (text, _) = read_input(file)?;
            let h = GeneralHypergraph::from_text(&text).map_err(|e| prefix(file, e.into()))?;
            Ok(Output::Data(to_colored_graph(&h)?.to_text()))
        }
        Transform::ToHypergraph { file } => {
            let (text, _) = read_input(file)?;
            let g = ColoredCompleteGraph::from_text(&text).map_err(|e| prefix(file, e.into()))?;
            Ok(Output::Data(to_partite_hypergraph(&g).to_text()))
        }
    }
}

fn biclique(path: &str) -> Outcome {
    let (coloring, hash) = read_coloring(path)?;
    let found = cover_biclique_k3(&coloring)?;
    let instance = CoverInstance::new(&decompose(&coloring));
    let exact = min_cover_exact(&instance, None)
        .cover()
        .map(covnum::Cover::len)
        .expect("unbudgeted search always finds a cover");
    let branch = serde_json::to_value(found.branch).expect("serializable");
    let table = cover_table(&instance, &found.cover)?;
    let out = Report::new(json!({
        "branch": found.branch,
        "size": found.cover.len(),
        "cover": found.cover,
        "min_cover": exact,
    }))
    .field("branch", branch.as_str().unwrap_or_default())
    .field("size", found.cover.len())
    .field("min cover", exact)
    .table(table);
    report(out, hash)
}

fn tau_nu(path: &str, guard: Guard) -> Outcome {
    let (text, hash) = read_input(path)?;
    let h = GeneralHypergraph::from_text(&text).map_err(|e| prefix(path, e.into()))?;
    let tau = min_vertex_cover(&h, guard)?;
    let nu = max_matching(&h, guard)?;
    let intersecting = is_intersecting(&h);
    let bound = (h.r() - 1) * nu.value;
    let out = Report::new(json!({
        "vertex_count": h.vertex_count(),
        "edge_count": h.edges().len(),
        "r": h.r(),
        "tau": tau,
        "nu": nu,
        "intersecting": intersecting.holds(),
        "ryser_bound": bound,
        "ryser_holds": tau.value <= bound,
    }))
    .field("vertices", h.vertex_count())
    .field("edges", h.edges().len())
    .field(
        "tau",
        format!("{} (vertices {})", tau.value, join(&tau.witness, " ")),
    )
    .field(
        "nu",
        format!("{} (edges {})", nu.value, join(&nu.witness, " ")),
    )
    .field(
        "intersecting",
        if intersecting.holds() { "yes" } else { "no" },
    )
    .field("tau <= (r-1) nu", tau.value <= bound);
    report(out, hash)
}
