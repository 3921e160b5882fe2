//! Exact decomposition of a small graph metric into cut metrics.

use cutlattice::embeddings::{cutcone_decompose, verify, CutSearch, DEFAULT_N_MAX};
use cutlattice::skeletons::{cocktail_party, cycle, petersen};

pub fn main() {
    for g in [cycle(5).unwrap(), petersen(), cocktail_party(5).unwrap()] {
        for scale in [1, 2, 4] {
            match cutcone_decompose(&g, scale, DEFAULT_N_MAX).unwrap() {
                CutSearch::Found(d) => {
                    let e = d.to_embedding(g.n);
                    println!("{:<10} scale {scale}: {} cuts, valid {}", g.name, d.dimension(), verify(&g, &e, false).unwrap().is_valid());
                    break;
                }
                CutSearch::NoneExists { canonical_cuts, convex_cuts } => {
                    println!("{:<10} scale {scale}: none among {canonical_cuts} cuts ({convex_cuts} convex)", g.name)
                }
            }
        }
    }
}
