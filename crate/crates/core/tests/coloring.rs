use covnum::coloring::*;
use covnum::*;

fn naive_spanning(c: &EdgeColoring) -> bool {
    let s = c.shape();
    s.vertices().all(|v| {
        let g = s.global(v).unwrap();
        (1..=s.k() as u8).all(|col| {
            s.edges()
                .enumerate()
                .any(|(e, edge)| edge.contains(&g) && c.colors()[e] == col)
        })
    })
}

#[test]
fn mono_with_two_colors_misses_color_two() {
    let c = EdgeColoring::monochromatic(make_shape(2, 2, &[2, 3]).unwrap()).unwrap();
    match c.is_spanning() {
        Spanning::Missing { color, .. } => assert_eq!(color, 2),
        Spanning::Yes => panic!("expected missing color"),
    }
}

#[test]
fn spanning_matches_double_loop() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let r = rng.gen_range(2..=3);
        let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let k = rng.gen_range(1..=3);
        let shape = make_shape(r, k, &parts).unwrap();
        let colors = (0..shape.edge_count())
            .map(|_| rng.gen_range(1..=k as u8))
            .collect();
        let c = EdgeColoring::new(shape, colors).unwrap();
        assert_eq!(c.is_spanning().holds(), naive_spanning(&c));
    }
}

#[test]
fn text_and_json_readers() {
    let c = EdgeColoring::from_text("2 2 2 2\n1 2 2 1\n").unwrap();
    assert_eq!(c.colors(), &[1, 2, 2, 1]);
    assert_eq!(EdgeColoring::parse(&c.to_text()).unwrap(), c);
    assert_eq!(EdgeColoring::parse(&c.to_json()).unwrap(), c);
    let j = EdgeColoring::from_json(r#"{"r":2,"k":2,"parts":[2,2],"colors":[1,2,2,1]}"#).unwrap();
    assert_eq!(j, c);
}

#[test]
fn readers_reject_wrong_lengths_and_colors() {
    assert!(matches!(
        EdgeColoring::from_text("2 2 2 2\n1 2 2\n"),
        Err(Error::LengthMismatch { .. })
    ));
    assert!(matches!(
        EdgeColoring::from_json(r#"{"r":2,"k":2,"parts":[2,2],"colors":[1,2,2,1,1]}"#),
        Err(Error::LengthMismatch { .. })
    ));
    assert!(matches!(
        EdgeColoring::from_text("2 2 2 2\n1 2 3 1\n"),
        Err(Error::ColorOutOfRange { .. })
    ));
    assert!(EdgeColoring::from_text("2 2 2\n1 1\n").is_err());
    assert!(EdgeColoring::from_text("x y\n").is_err());
    assert!(EdgeColoring::from_text("").is_err());
}
