use covnum::ryser::*;
use covnum::*;

fn two_disjoint() -> GeneralHypergraph {
    GeneralHypergraph::new(
        6,
        3,
        vec![vec![0, 2, 4], vec![1, 3, 5]],
        Some(vec![2, 2, 2]),
    )
    .unwrap()
}

/// PG(2,2) minus a point, written out by hand.
fn fano_minus_point() -> GeneralHypergraph {
    // parts {0,1},{2,3},{4,5}
    let edges = vec![vec![0, 2, 4], vec![0, 3, 5], vec![1, 2, 5], vec![1, 3, 4]];
    GeneralHypergraph::new(6, 3, edges, Some(vec![2, 2, 2])).unwrap()
}

fn subsets_oracle(h: &GeneralHypergraph) -> (usize, usize) {
    let m = h.edges().len();
    let mut nu = 0;
    for s in 0u32..1 << m {
        let chosen: Vec<_> = (0..m).filter(|i| s >> i & 1 == 1).collect();
        let ok = chosen.iter().enumerate().all(|(a, &i)| {
            chosen[a + 1..]
                .iter()
                .all(|&j| !h.edges()[i].iter().any(|v| h.edges()[j].contains(v)))
        });
        if ok {
            nu = nu.max(chosen.len());
        }
    }
    let n = h.vertex_count();
    let mut tau = n;
    for s in 0u32..1 << n {
        let vs: Vec<_> = (0..n).filter(|i| s >> i & 1 == 1).collect();
        if vs.len() < tau && is_vertex_cover(h, &vs) {
            tau = vs.len();
        }
    }
    (tau, nu)
}

#[test]
fn small_cases() {
    let empty = GeneralHypergraph::new(3, 3, vec![], None).unwrap();
    assert_eq!(max_matching(&empty, Guard::default()).unwrap().value, 0);
    assert_eq!(min_vertex_cover(&empty, Guard::default()).unwrap().value, 0);
    let d = two_disjoint();
    assert_eq!(max_matching(&d, Guard::default()).unwrap().value, 2);
    assert!(matches!(
        is_intersecting(&d),
        Intersecting::Disjoint {
            first: 0,
            second: 1
        }
    ));
    let single = GeneralHypergraph::new(3, 3, vec![vec![0, 1, 2]], None).unwrap();
    assert_eq!(
        min_vertex_cover(&single, Guard::default()).unwrap().value,
        1
    );
    assert!(is_intersecting(&single).holds());
}

#[test]
fn truncated_fano_numbers() {
    let h = fano_minus_point();
    assert!(is_intersecting(&h).holds());
    let nu = max_matching(&h, Guard::default()).unwrap();
    let tau = min_vertex_cover(&h, Guard::default()).unwrap();
    assert_eq!((tau.value, nu.value), subsets_oracle(&h));
    assert_eq!((tau.value, nu.value), (2, 1));
    assert!(is_vertex_cover(&h, &tau.witness));
}

#[test]
fn guard_is_enforced() {
    let edges = (0..21).map(|i| vec![i, i + 21]).collect();
    let h = GeneralHypergraph::new(42, 2, edges, None).unwrap();
    assert!(matches!(
        max_matching(&h, Guard::default()),
        Err(Error::GuardExceeded(_))
    ));
    let loose = Guard {
        max_edges: 30,
        max_vertices: 64,
    };
    assert_eq!(max_matching(&h, loose).unwrap().value, 21);
}

#[test]
fn invalid_hypergraphs() {
    assert!(GeneralHypergraph::new(3, 2, vec![vec![0, 0]], None).is_err());
    assert!(GeneralHypergraph::new(3, 2, vec![vec![0, 3]], None).is_err());
    assert!(GeneralHypergraph::new(3, 2, vec![vec![0]], None).is_err());
    // both vertices in the first class
    assert!(GeneralHypergraph::new(4, 2, vec![vec![0, 1]], Some(vec![2, 2])).is_err());
    assert!(GeneralHypergraph::new(4, 2, vec![], Some(vec![2, 1])).is_err());
}

#[test]
fn two_edge_graph_transform() {
    // parts {a1,a2},{b1},{c1} = {0,1},{2},{3}
    let h = GeneralHypergraph::new(
        4,
        3,
        vec![vec![0, 2, 3], vec![1, 2, 3]],
        Some(vec![2, 1, 1]),
    )
    .unwrap();
    let g = to_colored_graph(&h).unwrap();
    assert_eq!(g.n(), 2);
    assert_eq!(g.colors(), &[2]);
    let single = GeneralHypergraph::new(3, 3, vec![vec![0, 1, 2]], Some(vec![1, 1, 1])).unwrap();
    let g1 = to_colored_graph(&single).unwrap();
    assert_eq!((g1.n(), g1.colors().len()), (1, 0));
    assert!(matches!(
        to_colored_graph(&two_disjoint()),
        Err(Error::NotIntersecting(0, 1))
    ));
    let unparted = GeneralHypergraph::new(3, 3, vec![vec![0, 1, 2]], None).unwrap();
    assert!(matches!(
        to_colored_graph(&unparted),
        Err(Error::NotPartitioned)
    ));
}

#[test]
fn monochromatic_graph_transform() {
    let g = ColoredCompleteGraph::new(4, 2, vec![1; 6]).unwrap();
    let comps = graph_components(&g);
    assert_eq!(comps[0].count(), 1);
    assert_eq!(comps[1].count(), 4);
    let h = to_partite_hypergraph(&g);
    assert_eq!(h.partition(), Some(&[1, 4][..]));
    assert_eq!(h.edges().len(), 4);
    assert!(is_intersecting(&h).holds());
}

#[test]
fn matching_colored_k4() {
    // color 1 on (0,1) and (2,3)
    let colors = vec![1, 2, 2, 2, 2, 1];
    let g = ColoredCompleteGraph::new(4, 2, colors).unwrap();
    assert_eq!(g.color(2, 3), 1);
    assert_eq!(graph_components(&g)[0].count(), 2);
    assert_eq!(graph_components(&g)[1].count(), 1);
    assert_eq!(min_cover_size(&graph_cover_instance(&g).unwrap()), 1);
}

#[test]
fn text_formats() {
    let h = fano_minus_point();
    assert_eq!(GeneralHypergraph::from_text(&h.to_text()).unwrap(), h);
    let plain = GeneralHypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]], None).unwrap();
    assert_eq!(
        GeneralHypergraph::from_text(&plain.to_text()).unwrap(),
        plain
    );
    assert!(GeneralHypergraph::from_text("3 2 2\n0 1\n").is_err());
    let g = ColoredCompleteGraph::new(3, 2, vec![1, 2, 2]).unwrap();
    assert_eq!(g.to_text(), "3 2\n1 2 2\n");
    assert_eq!(ColoredCompleteGraph::from_text(&g.to_text()).unwrap(), g);
    assert!(ColoredCompleteGraph::from_text("3 2\n1 2\n").is_err());
    assert!(ColoredCompleteGraph::from_text("3 2\n1 2 3\n").is_err());
}
