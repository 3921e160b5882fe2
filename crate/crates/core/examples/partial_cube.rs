//! Recognize isometric subgraphs of hypercubes.

use cutlattice::embeddings::{partial_cube, PartialCube};
use cutlattice::skeletons::{cycle, hypercube, petersen, Skeleton};

pub fn main() {
    let graphs = [hypercube(3).unwrap(), cycle(6).unwrap(), cycle(5).unwrap(), petersen(), Skeleton::from_edges("K2,3", 5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])];
    for g in graphs {
        match partial_cube(&g).unwrap() {
            PartialCube::Embedding { embedding, classes } => {
                println!("{:<10} partial cube, {} classes, dimension {}", g.name, classes.len(), embedding.dim)
            }
            PartialCube::NotPartialCube(why) => println!("{:<10} not a partial cube: {why}", g.name),
        }
    }
}
