//! Regular and star 4-polytopes, by the graphs of their skeletons.

use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{regular_4polytope, star_4polytope, Polytope4, STAR_4POLYTOPES};

pub fn main() {
    for which in [Polytope4::Cell24, Polytope4::Cell600, Polytope4::Cell120] {
        let g = regular_4polytope(which);
        println!("{:<10} {} vertices, {} edges, degree {:?}", g.name, g.n, g.edge_count(), g.regular_degree());
    }
    let cell600 = regular_4polytope(Polytope4::Cell600);
    let cell120 = regular_4polytope(Polytope4::Cell120);
    for s in STAR_4POLYTOPES {
        let g = star_4polytope(&SchlafliSymbol::parse(s).unwrap()).unwrap();
        let same = if g.is_isomorphic(&cell600) {
            "the 600-cell"
        } else if g.n == cell120.n && g.is_isomorphic(&cell120) {
            "the 120-cell"
        } else {
            "neither"
        };
        println!("{s:<12} {} vertices, {} edges, same graph as {same}", g.n, g.edge_count());
    }
}
