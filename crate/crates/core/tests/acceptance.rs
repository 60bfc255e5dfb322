//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Run with `cargo test -p covnum --test acceptance`.

mod oracles;

use std::time::Instant;

use covnum::constructions::{
    cyclic_biclique, random_colored_complete_graph, random_intersecting_partite_hypergraph,
    random_partite_hypergraph, random_spanning_coloring, truncated_projective_plane,
};
use covnum::harness::sweep::spanning_colorings;
use covnum::harness::{
    check_claim_rsame, check_claim_t1diff, cover_biclique_k3, sweep, Sampler, SweepConfig,
    SweepSummary, Symmetry,
};
use covnum::ryser::{
    graph_cover_instance, is_intersecting, is_vertex_cover, max_matching, min_vertex_cover,
    to_colored_graph, to_partite_hypergraph, vertex_cover_from_components, Guard,
};
use covnum::{
    decompose, make_shape, min_cover_exact, min_cover_size, validate_cover, ColorPartition,
    CoverInstance, EdgeColoring,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Forensic failures summed over every sweep in the suite.
#[derive(Default)]
struct Ledger {
    forensic_runs: u64,
    forensic_failures: u64,
}

impl Ledger {
    fn absorb(&mut self, s: &SweepSummary) {
        self.forensic_runs += s.forensic_runs;
        self.forensic_failures += s.forensic_failures;
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cov_r3_t1(ledger: &mut Ledger) -> Outcome {
    let shape = make_shape(3, 4, &[2, 2, 2]).map_err(err)?;
    let cfg = SweepConfig::new(shape)
        .with_symmetry(Symmetry::ColorCanonical)
        .with_budget(2);
    let s = sweep(&cfg).map_err(err)?;
    ledger.absorb(&s);
    ensure(s.visited > 0, "no spanning colorings visited")?;
    ensure(
        s.violations == 0,
        format!("{} colorings need more than 2 components", s.violations),
    )?;
    Ok(format!(
        "{} canonical spanning colorings, max min-cover {:?}, violations 0",
        s.visited, s.max_min_cover
    ))
}

fn cov_r3_t3(ledger: &mut Ledger) -> Outcome {
    let start = Instant::now();
    let shape = make_shape(3, 6, &[3, 3, 3]).map_err(err)?;
    let steps = 50 * shape.edge_count();
    let cfg = SweepConfig::random(shape, 10_000, 2024)
        .with_budget(4)
        .with_sampler(Sampler::Walk { steps });
    let s = sweep(&cfg).map_err(err)?;
    ledger.absorb(&s);
    let secs = start.elapsed().as_secs_f64();
    ensure(s.visited == 10_000, format!("only {} samples", s.visited))?;
    ensure(
        s.violations == 0,
        format!("{} samples need more than 4 components", s.violations),
    )?;
    ensure(secs < 300.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "10^4 samples, histogram {:?}, {secs:.1}s",
        s.histogram
    ))
}

fn cov_bipartite_k2(ledger: &mut Ledger) -> Outcome {
    let mut visited = 0;
    let mut max = 0;
    for n1 in 1..=4 {
        for n2 in 1..=4 {
            let shape = make_shape(2, 2, &[n1, n2]).map_err(err)?;
            let s = sweep(&SweepConfig::new(shape).with_budget(2)).map_err(err)?;
            ledger.absorb(&s);
            ensure(
                s.violations == 0,
                format!("K_{{{n1},{n2}}}: {} violations", s.violations),
            )?;
            visited += s.visited;
            max = max.max(s.max_min_cover.unwrap_or(0));
        }
    }
    let cyc = min_cover_size(&CoverInstance::new(&decompose(
        &cyclic_biclique(2).map_err(err)?,
    )));
    ensure(cyc == 2, format!("cyclic_biclique(2) needs {cyc}"))?;
    ensure(max <= 2, format!("max {max}"))?;
    Ok(format!(
        "{visited} spanning 2-colorings, max min-cover {max}; cyclic K_2,2 needs exactly 2"
    ))
}

fn cov_bipartite_k3(ledger: &mut Ledger) -> Outcome {
    const SAMPLES: u64 = 10_000;
    let shapes: Vec<(usize, usize)> = (3..=5).flat_map(|a| (3..=5).map(move |b| (a, b))).collect();
    let mut max = 0;
    let mut checked = 0u64;
    for (i, &(n1, n2)) in shapes.iter().enumerate() {
        let share =
            SAMPLES / shapes.len() as u64 + u64::from((i as u64) < SAMPLES % shapes.len() as u64);
        let shape = make_shape(2, 3, &[n1, n2]).map_err(err)?;
        let seed = 1_000_000 * (i as u64 + 1);
        let s =
            sweep(&SweepConfig::random(shape.clone(), share, seed).with_budget(3)).map_err(err)?;
        ledger.absorb(&s);
        ensure(
            s.violations == 0,
            format!("K_{{{n1},{n2}}}: {} violations", s.violations),
        )?;
        max = max.max(s.max_min_cover.unwrap_or(0));
        for j in 0..share {
            let c = random_spanning_coloring(&shape, seed + j, 1_000_000)
                .map_err(err)?
                .coloring;
            let out = cover_biclique_k3(&c).map_err(err)?;
            let inst = CoverInstance::new(&decompose(&c));
            ensure(
                validate_cover(&inst, &out.cover).map_err(err)?.is_valid(),
                "invalid proof cover",
            )?;
            ensure(out.cover.len() <= 3, "proof cover too large")?;
            ensure(
                out.cover.len() >= min_cover_size(&inst),
                "proof cover below the minimum",
            )?;
            checked += 1;
        }
    }
    let cyc = min_cover_size(&CoverInstance::new(&decompose(
        &cyclic_biclique(3).map_err(err)?,
    )));
    ensure(cyc == 3, format!("cyclic_biclique(3) needs {cyc}"))?;
    Ok(format!("{checked} samples over 3..5 x 3..5, max min-cover {max}; proof covers valid; cyclic K_3,3 needs exactly 3"))
}

fn few_colors(ledger: &mut Ledger) -> Outcome {
    let shape = make_shape(3, 3, &[2, 2, 2]).map_err(err)?;
    let s = sweep(&SweepConfig::new(shape).with_budget(1)).map_err(err)?;
    ledger.absorb(&s);
    ensure(s.visited > 0, "no spanning colorings")?;
    ensure(
        s.histogram.keys().eq([1].iter()),
        format!("histogram {:?}", s.histogram),
    )?;
    Ok(format!(
        "{} spanning 3-colorings, all with min cover 1",
        s.visited
    ))
}

fn oracle_equivalences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    // decompose vs flood fill
    for _ in 0..100 {
        let r = rng.gen_range(2..=3);
        let parts: Vec<usize> = loop {
            let p: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=4)).collect();
            if p.iter().sum::<usize>() <= 12 {
                break p;
            }
        };
        let k = rng.gen_range(1..=4);
        let shape = make_shape(r, k, &parts).map_err(err)?;
        let colors = (0..shape.edge_count())
            .map(|_| rng.gen_range(1..=k as u8))
            .collect();
        let c = EdgeColoring::new(shape, colors).map_err(err)?;
        let table = decompose(&c);
        let rows: Vec<Vec<u32>> = table.rows().iter().map(|r| r.ids().to_vec()).collect();
        ensure(
            rows == oracles::flood_fill(&c),
            "decompose disagrees with flood fill",
        )?;
    }
    // exact cover vs subset enumeration on every coloring of small shapes
    let mut cover_checked = 0;
    for (r, k, parts) in [
        (2, 2, vec![2, 2]),
        (2, 2, vec![2, 3]),
        (2, 3, vec![2, 2]),
        (3, 2, vec![1, 2, 2]),
        (3, 2, vec![2, 2, 2]),
        (2, 3, vec![1, 3]),
    ] {
        let shape = make_shape(r, k, &parts).map_err(err)?;
        let e = shape.edge_count() as u32;
        for mut code in 0..(k as u64).pow(e) {
            let colors: Vec<u8> = (0..e)
                .map(|_| {
                    let c = (code % k as u64) as u8 + 1;
                    code /= k as u64;
                    c
                })
                .collect();
            let c = EdgeColoring::new(shape.clone(), colors).map_err(err)?;
            let inst = CoverInstance::new(&decompose(&c));
            if inst.candidates().len() > 12 {
                continue;
            }
            let exact = min_cover_exact(&inst, None)
                .cover()
                .cloned()
                .ok_or("no cover")?;
            ensure(
                validate_cover(&inst, &exact).map_err(err)?.is_valid(),
                "invalid exact cover",
            )?;
            ensure(
                exact.len() == oracles::subset_cover(&inst),
                "exact cover disagrees with subset oracle",
            )?;
            cover_checked += 1;
        }
    }
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let k = rng.gen_range(1..=3);
        let rows: Vec<ColorPartition> = (0..k)
            .map(|_| {
                ColorPartition::from_labels(
                    &(0..n).map(|_| rng.gen_range(0..4)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let inst = CoverInstance::from_partitions(n, rows).map_err(err)?;
        if inst.candidates().len() > 12 {
            continue;
        }
        ensure(
            min_cover_size(&inst) == oracles::subset_cover(&inst),
            "partition instance disagrees",
        )?;
        cover_checked += 1;
    }
    // tau / nu vs subset oracles
    for i in 0..200u64 {
        let r = 2 + (i % 3) as usize;
        let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let total: usize = parts.iter().product();
        let m = rng.gen_range(0..=8.min(total));
        let h = random_partite_hypergraph(&parts, m, i).map_err(err)?;
        let tau = min_vertex_cover(&h, Guard::default()).map_err(err)?;
        let nu = max_matching(&h, Guard::default()).map_err(err)?;
        ensure(
            is_vertex_cover(&h, &tau.witness),
            "tau witness is not a cover",
        )?;
        ensure(
            (tau.value, nu.value) == oracles::subset_tau_nu(&h),
            format!("tau/nu disagree on {h:?}"),
        )?;
    }
    Ok(format!(
        "100 decompositions, {cover_checked} cover instances, 200 hypergraphs agree with oracles"
    ))
}

fn equivalence_constructions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..50u64 {
        let r = rng.gen_range(2..=4);
        let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(2..=3)).collect();
        let h = random_intersecting_partite_hypergraph(&parts, 10, 100 + i).map_err(err)?;
        let g = to_colored_graph(&h).map_err(err)?;
        let inst = graph_cover_instance(&g).map_err(err)?;
        let cover = min_cover_exact(&inst, None)
            .cover()
            .cloned()
            .ok_or("no cover")?;
        let derived = vertex_cover_from_components(&h, &g, &cover).map_err(err)?;
        ensure(
            is_vertex_cover(&h, &derived),
            "derived vertex set misses an edge",
        )?;
        let tau = min_vertex_cover(&h, Guard::default()).map_err(err)?.value;
        ensure(
            tau <= cover.len(),
            format!("tau {tau} > component cover {}", cover.len()),
        )?;
    }
    for i in 0..50u64 {
        let n = rng.gen_range(2..=7);
        let g = random_colored_complete_graph(n, 3, 200 + i).map_err(err)?;
        let h = to_partite_hypergraph(&g);
        ensure(is_intersecting(&h).holds(), "H_G is not intersecting")?;
        let tau = min_vertex_cover(&h, Guard::default()).map_err(err)?.value;
        let cov = min_cover_size(&graph_cover_instance(&g).map_err(err)?);
        ensure(cov <= tau, format!("component cover {cov} > tau {tau}"))?;
    }
    Ok("50 hypergraphs and 50 colored graphs satisfy both transfer inequalities".into())
}

fn extremal_planes() -> Outcome {
    let mut parts = Vec::new();
    for (q, tau_expected) in [(2u64, 2usize), (3, 3)] {
        let h = truncated_projective_plane(q).map_err(err)?;
        let nu = max_matching(&h, Guard::default()).map_err(err)?.value;
        let tau = min_vertex_cover(&h, Guard::default()).map_err(err)?.value;
        ensure(
            nu == 1 && tau == tau_expected,
            format!("q = {q}: tau {tau}, nu {nu}"),
        )?;
        ensure(tau == (h.r() - 1) * nu, "not extremal")?;
        parts.push(format!("q={q}: tau={tau}, nu={nu}"));
    }
    Ok(parts.join("; "))
}

fn claim_suite(ledger: &Ledger) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let r = rng.gen_range(2..=4);
        let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let k = rng.gen_range(1..=5);
        let shape = make_shape(r, k, &parts).map_err(err)?;
        let colors = (0..shape.edge_count())
            .map(|_| rng.gen_range(1..=k as u8))
            .collect();
        let c = EdgeColoring::new(shape, colors).map_err(err)?;
        ensure(
            check_claim_rsame(&c).map_err(err)?.holds(),
            "tuple claim failed",
        )?;
    }
    let mut pairs = 0;
    for (r, k, parts) in [
        (2, 2, vec![2, 2]),
        (2, 3, vec![3, 3]),
        (3, 3, vec![2, 2, 1]),
        (3, 4, vec![2, 2, 1]),
    ] {
        let shape = make_shape(r, k, &parts).map_err(err)?;
        for c in spanning_colorings(&shape, Symmetry::None).map_err(err)? {
            let min = min_cover_size(&CoverInstance::new(&decompose(&c)));
            for b in 0..=4 {
                ensure(
                    check_claim_t1diff(&c, b).holds() == (min > b),
                    "t1diff is not min cover > b",
                )?;
                pairs += 1;
            }
        }
    }
    ensure(
        ledger.forensic_failures == 0,
        format!("forensics fired on {} colorings", ledger.forensic_failures),
    )?;
    Ok(format!(
        "rsame on 1000 colorings; t1diff on {pairs} (coloring, budget) pairs; forensics ran {} times, fired 0",
        ledger.forensic_runs
    ))
}

fn ryser_desk_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (r, factor) in [(2usize, 1usize), (3, 2)] {
        for i in 0..100u64 {
            let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(2..=24 / r)).collect();
            let total: usize = parts.iter().product();
            let m = rng.gen_range(1..=20.min(total));
            let h = random_partite_hypergraph(&parts, m, 1000 * r as u64 + i).map_err(err)?;
            let tau = min_vertex_cover(&h, Guard::default()).map_err(err)?.value;
            let nu = max_matching(&h, Guard::default()).map_err(err)?.value;
            ensure(
                tau <= factor * nu,
                format!("r = {r}: tau {tau} > {factor} * nu {nu}"),
            )?;
        }
    }
    Ok("tau <= nu on 100 bipartite and tau <= 2 nu on 100 3-partite instances".into())
}

fn main() {
    let mut ledger = Ledger::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 cov(3,4) <= 2, exhaustive", cov_r3_t1(&mut ledger)),
        ("2 cov(3,6) <= 4, 10^4 samples", cov_r3_t3(&mut ledger)),
        (
            "3 cov(2,2) = 2, bicliques up to 4+4",
            cov_bipartite_k2(&mut ledger),
        ),
        (
            "4 cov(2,3) = 3, bicliques up to 5+5",
            cov_bipartite_k3(&mut ledger),
        ),
        ("5 cov(3,3) = 1, exhaustive", few_colors(&mut ledger)),
        ("6 oracle equivalences", oracle_equivalences()),
        ("7 transfer inequalities", equivalence_constructions()),
        ("8 truncated projective planes", extremal_planes()),
        ("9 claim suite", claim_suite(&ledger)),
        ("10 Ryser desk check r = 2, 3", ryser_desk_check()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
