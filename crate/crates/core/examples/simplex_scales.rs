//! Scales and dimensions for simplices, and two inequivalent embeddings.

use cutlattice::embeddings::{equivalent, remark4, two_embeddings_of_simplex, verify};
use cutlattice::skeletons::complete;

pub fn main() {
    for n in 3..=8 {
        let r = remark4(n).unwrap();
        println!("n={n}: m_n={} lambda_n={} dimension={} cross-polytope scale >= {}", r.m_n, r.lambda_n, r.dimension, r.mu_lower);
    }
    let (unit, tight) = two_embeddings_of_simplex(4).unwrap();
    let k5 = complete(5).unwrap();
    for (what, e) in [("unit vectors", &unit), ("balanced cuts", &tight)] {
        println!("K5 by {what}: scale {} into {} coordinates, valid {}", e.scale, e.dim, verify(&k5, e, false).unwrap().is_valid());
    }
    println!("equivalent: {}", equivalent(&unit, &tight));
}
