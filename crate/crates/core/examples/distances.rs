//! Distance matrix, diameter and girth, with CSV export.

use cutlattice::metrics::{apsp, girth, shortest_cycle_at};
use cutlattice::skeletons::petersen;

pub fn main() {
    let g = petersen();
    let d = apsp(&g);
    println!("Petersen graph: diameter {:?}, girth {:?}", d.diameter(), girth(&g, false));
    println!("a shortest cycle through 0: {:?}", shortest_cycle_at(&g, 0).unwrap());
    print!("{}", d.to_csv());
}
