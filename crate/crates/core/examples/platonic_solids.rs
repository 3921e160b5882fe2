//! The five Platonic solids and the antipodal quotients of three of them.

use cutlattice::metrics::diameter;
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{antipodal_quotient, petersen, platonic};

pub fn main() {
    for (name, s) in [("tetrahedron", "{3,3}"), ("cube", "{4,3}"), ("octahedron", "{3,4}"), ("dodecahedron", "{5,3}"), ("icosahedron", "{3,5}")] {
        let p = platonic(&SchlafliSymbol::parse(s).unwrap()).unwrap();
        let g = &p.skeleton;
        println!(
            "{name:<13} {s}  v={:<3} e={:<3} f={:<3} diameter={} bipartite={}",
            g.n,
            g.edge_count(),
            p.faces().len(),
            diameter(g).unwrap(),
            g.is_bipartite()
        );
    }
    let dodeca = platonic(&SchlafliSymbol::parse("{5,3}").unwrap()).unwrap();
    let q = antipodal_quotient(&dodeca).unwrap();
    println!("dodecahedron / antipodes: {} vertices, Petersen graph: {}", q.n, q.is_isomorphic(&petersen()));
}
