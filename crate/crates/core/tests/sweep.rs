use covnum::harness::sweep::*;
use covnum::*;

fn brute_spanning(shape: &Shape) -> Vec<Vec<u8>> {
    let e = shape.edge_count() as u32;
    let k = shape.k() as u64;
    let mut out = Vec::new();
    for mut code in 0..k.pow(e) {
        let colors: Vec<u8> = (0..e)
            .map(|_| {
                let c = (code % k) as u8 + 1;
                code /= k;
                c
            })
            .rev()
            .collect();
        let c = EdgeColoring::new(shape.clone(), colors.clone()).unwrap();
        if c.is_spanning().holds() {
            out.push(colors);
        }
    }
    out.sort();
    out
}

fn first_occurrence_ordered(colors: &[u8]) -> bool {
    let mut max = 0;
    colors.iter().all(|&c| {
        let ok = c <= max + 1;
        max = max.max(c);
        ok
    })
}

#[test]
fn enumerator_finds_exactly_the_spanning_colorings() {
    for (r, k, parts) in [
        (2, 2, vec![2, 2]),
        (2, 3, vec![3, 2]),
        (3, 2, vec![1, 2, 2]),
        (2, 2, vec![1, 3]),
    ] {
        let shape = make_shape(r, k, &parts).unwrap();
        let all: Vec<Vec<u8>> = spanning_colorings(&shape, Symmetry::None)
            .unwrap()
            .into_iter()
            .map(|c| c.colors().to_vec())
            .collect();
        assert_eq!(all, brute_spanning(&shape));
        let canon: Vec<Vec<u8>> = spanning_colorings(&shape, Symmetry::ColorCanonical)
            .unwrap()
            .into_iter()
            .map(|c| c.colors().to_vec())
            .collect();
        let expected: Vec<Vec<u8>> = all
            .into_iter()
            .filter(|c| first_occurrence_ordered(c))
            .collect();
        assert_eq!(canon, expected);
    }
}

#[test]
fn symmetry_breaking_keeps_the_maximum() {
    for (r, k, parts) in [
        (2, 2, vec![3, 3]),
        (2, 3, vec![3, 3]),
        (3, 3, vec![2, 2, 1]),
    ] {
        let shape = make_shape(r, k, &parts).unwrap();
        let plain = sweep(&SweepConfig::new(shape.clone())).unwrap();
        let canon =
            sweep(&SweepConfig::new(shape).with_symmetry(Symmetry::ColorCanonical)).unwrap();
        assert_eq!(plain.max_min_cover, canon.max_min_cover);
        assert!(canon.visited <= plain.visited);
    }
}

#[test]
fn guard_rejects_large_enumerations() {
    let shape = make_shape(3, 6, &[3, 3, 3]).unwrap();
    assert!(matches!(
        sweep(&SweepConfig::new(shape)),
        Err(Error::GuardExceeded(_))
    ));
}

#[test]
fn deterministic_random_sweeps() {
    let shape = make_shape(3, 4, &[2, 2, 2]).unwrap();
    let cfg = SweepConfig::random(shape, 300, 9);
    let a = sweep(&cfg).unwrap();
    assert_eq!(a, sweep(&cfg).unwrap());
    assert_eq!(a.visited, 300);
    let two = SweepConfig {
        threads: Some(2),
        ..cfg
    };
    assert_eq!(a, sweep(&two).unwrap());
}

#[test]
fn cyclic_biclique_shape_records_violations() {
    // K_{2,2} with 2 colors: the cyclic coloring needs 2 > k - r + 1 = 1
    let shape = make_shape(2, 2, &[2, 2]).unwrap();
    let s = sweep(&SweepConfig::new(shape)).unwrap();
    assert_eq!(s.max_min_cover, Some(2));
    assert!(s.violations > 0);
    assert_eq!(s.forensic_runs, s.violations);
    assert_eq!(s.forensic_failures, 0);
}
