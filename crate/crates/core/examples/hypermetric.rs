//! Certificates of non-embeddability: violated 5- and 7-gonal inequalities.

use cutlattice::hypermetrics::{apex_pair_violation, find_violation, induced_k5_minus_k3, kgonal_check, BVector, SearchOptions};
use cutlattice::metrics::apsp;
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{platonic, pyramid, regular_4polytope, star_4polytope, Polytope4};

pub fn main() {
    let g = star_4polytope(&SchlafliSymbol::parse("{5/2,5,3}").unwrap()).unwrap();
    let c = apex_pair_violation(&g, 0).unwrap();
    println!("{{5/2,5,3}}: tuple {:?} gives {} > {}", c.tuple, c.lhs, c.rhs);
    for row in &c.distances {
        println!("    {row:?}");
    }
    let d = apsp(&g);
    let again = kgonal_check(&d, &c.tuple, &BVector::gonal(5).unwrap()).unwrap();
    println!("rechecked from the distance matrix: {}", again.is_some());

    let g = regular_4polytope(Polytope4::Cell24);
    let c = induced_k5_minus_k3(&g).unwrap();
    println!("24-cell: induced K5-K3 on {:?}, {} > {}", c.tuple, c.lhs, c.rhs);

    let py = pyramid(&platonic(&SchlafliSymbol::parse("{3,5}").unwrap()).unwrap().skeleton);
    let five = find_violation(&py, &SearchOptions::first(5)).unwrap();
    let seven = find_violation(&py, &SearchOptions::first(7)).unwrap();
    println!("pyramid over the icosahedron: 5-gonal violations {}, first 7-gonal {:?}", five.len(), seven[0].tuple);
    println!("{}", seven[0].to_json());
}
