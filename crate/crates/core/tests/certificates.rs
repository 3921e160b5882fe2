use cutlattice::hypermetrics::{apex_pair_violation, find_violation, induced_k5_minus_k3, SearchOptions};
use cutlattice::metrics::apsp;
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{k5_minus_k3, platonic, pyramid, regular_4polytope, star_4polytope, Polytope4};

#[test]
fn stellated_120_cell() {
    let g = star_4polytope(&SchlafliSymbol::parse("{5/2,5,3}").unwrap()).unwrap();
    assert_eq!((g.n, g.edge_count(), g.regular_degree()), (120, 1200, Some(20)));
    let d = apsp(&g);
    let first = &find_violation(&g, &SearchOptions::first(5)).unwrap()[0];
    assert!(first.recheck(&d));
    assert_eq!((first.lhs, first.rhs), (7, 6));

    let c = apex_pair_violation(&g, 0).unwrap();
    assert!(c.recheck(&d));
    assert_eq!((c.lhs, c.rhs), (7, 6));
    let dist = |i: usize, j: usize| c.distances[i][j];
    let (a, b, x, y, z) = (0, 1, 2, 3, 4);
    assert_eq!((dist(a, b), dist(x, y), dist(x, z), dist(y, z)), (2, 1, 2, 2));
    for p in [a, b] {
        for q in [x, y, z] {
            assert_eq!(dist(p, q), 1);
        }
    }
}

#[test]
fn five_gonal_violations() {
    for g in [regular_4polytope(Polytope4::Cell24), k5_minus_k3()] {
        let d = apsp(&g);
        let first = &find_violation(&g, &SearchOptions::first(5)).unwrap()[0];
        assert!(first.recheck(&d));
        let c = induced_k5_minus_k3(&g).unwrap();
        assert!(c.recheck(&d));
        assert_eq!((c.lhs, c.rhs), (7, 6), "{}", g.name);
    }
}

#[test]
fn seven_gonal_violations() {
    let ico = platonic(&SchlafliSymbol::parse("{3,5}").unwrap()).unwrap();
    let py = pyramid(&ico.skeleton);
    assert!(find_violation(&py, &SearchOptions::first(5)).unwrap().is_empty());
    let c = &find_violation(&py, &SearchOptions::first(7)).unwrap()[0];
    assert!(c.recheck(&apsp(&py)));

    let g = regular_4polytope(Polytope4::Cell600);
    let c = &find_violation(&g, &SearchOptions::first(7)).unwrap()[0];
    assert!(c.recheck(&apsp(&g)));
    assert!(c.lhs > c.rhs);
}
