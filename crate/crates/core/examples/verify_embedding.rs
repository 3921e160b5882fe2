//! Check catalog embeddings, then corrupt one label and watch it fail.

use cutlattice::embeddings::{balanced_arcs_check, catalog_embedding, verify};
use cutlattice::metrics::shortest_cycle_at;

pub fn main() {
    for name in ["gamma3", "alpha3", "beta3", "icosahedron", "dodecahedron", "petersen", "C3xC3"] {
        let item = catalog_embedding(name).unwrap();
        let e = &item.embedding;
        let ok = verify(&item.graph, e, false).unwrap();
        println!("{name:<13} scale {} into {} coordinates: {ok:?}", e.scale, e.dim);
    }

    let item = catalog_embedding("icosahedron").unwrap();
    let mut e = item.embedding.clone();
    let flipped = !e.labels[3][0];
    e.labels[3].set(0, flipped);
    println!("icosahedron with bit 0 of vertex 3 flipped: {:?}", verify(&item.graph, &e, false).unwrap());
    let cycle = shortest_cycle_at(&item.graph, 3).unwrap();
    println!(
        "arcs of the cycle {cycle:?} balanced: before {}, after {}",
        balanced_arcs_check(&item.graph, &item.embedding, &cycle).unwrap(),
        balanced_arcs_check(&item.graph, &e, &cycle).unwrap()
    );
}
