//! Girth of the star-honeycombs {m/2,m}, built on windows of {3,m}.

use cutlattice::metrics::girth;
use cutlattice::skeletons::star_honeycomb_skeleton;

pub fn main() {
    for m in [5, 7, 9, 11] {
        let g = star_honeycomb_skeleton(m, 1).unwrap();
        println!("{{{m}/2,{m}}}: {} vertices, degree of core vertices {}, girth {:?}", g.n, g.degree(0), girth(&g, true));
    }
}
