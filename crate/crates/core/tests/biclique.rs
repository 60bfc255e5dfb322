use covnum::constructions::{cyclic_biclique, random_spanning_coloring};
use covnum::harness::biclique::*;
use covnum::*;

#[test]
fn cyclic_classes_are_bicliques() {
    let v = is_union_of_bicliques(&cyclic_biclique(3).unwrap()).unwrap();
    assert!(v.iter().all(BicliqueVerdict::holds));
    let mono = EdgeColoring::monochromatic(make_shape(2, 1, &[3, 2]).unwrap()).unwrap();
    assert!(is_union_of_bicliques(&mono).unwrap()[0].holds());
}

#[test]
fn path_of_three_edges_is_not_a_biclique() {
    // x1y1, x1y2, x2y1 in color 1; x2y2 in color 2
    let c = EdgeColoring::new(make_shape(2, 2, &[2, 2]).unwrap(), vec![1, 1, 1, 2]).unwrap();
    let v = is_union_of_bicliques(&c).unwrap();
    assert_eq!(
        v[0],
        BicliqueVerdict::No {
            component: 1,
            x: VertexId::new(0, 1),
            y: VertexId::new(1, 1),
            actual: 2
        }
    );
    assert!(v[1].holds());
}

#[test]
fn rejects_wrong_shapes() {
    let tri = EdgeColoring::monochromatic(make_shape(3, 3, &[2, 2, 2]).unwrap()).unwrap();
    assert!(is_union_of_bicliques(&tri).is_err());
    assert!(cover_biclique_k3(&tri).is_err());
    assert!(cover_biclique_k3(&cyclic_biclique(4).unwrap()).is_err());
    let mono = EdgeColoring::monochromatic(make_shape(2, 3, &[3, 3]).unwrap()).unwrap();
    assert!(matches!(
        cover_biclique_k3(&mono),
        Err(Error::NotSpanning { .. })
    ));
}

#[test]
fn cyclic_k33_goes_through_delegate() {
    let out = cover_biclique_k3(&cyclic_biclique(3).unwrap()).unwrap();
    assert_eq!(out.cover.len(), 3);
    assert_eq!(out.branch, CoverBranch::Delegate);
}

#[test]
fn random_samples_give_valid_small_covers() {
    let mut branches = std::collections::BTreeSet::new();
    for seed in 0..300u64 {
        let n1 = 3 + (seed % 3) as usize;
        let n2 = 3 + (seed / 3 % 3) as usize;
        let shape = make_shape(2, 3, &[n1, n2]).unwrap();
        let c = random_spanning_coloring(&shape, seed, 1_000_000)
            .unwrap()
            .coloring;
        let out = cover_biclique_k3(&c).unwrap();
        let exact = min_cover_size(&CoverInstance::new(&decompose(&c)));
        assert!(out.cover.len() <= 3 && out.cover.len() >= exact);
        branches.insert(format!("{:?}", out.branch));
    }
    assert!(branches.len() >= 2, "{branches:?}");
}
