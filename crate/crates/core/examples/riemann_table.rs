//! Densities and genera of regular polyhedra drawn on the sphere.

use cutlattice::riemann::{digon_family, enumerate_table2, format_table, lookup, Fraction};

pub fn main() {
    let table = enumerate_table2().unwrap();
    print!("{}", format_table(&table));
    let genus4 = table.iter().filter(|e| e.genus == 4).count();
    println!("{} representations, {genus4} of genus 4", table.len());
    let e = lookup(Fraction::new(5, 2), Fraction::new(3, 1)).unwrap();
    println!("cell 5/2, vertex figure 3: base {} density {}", e.base, e.density);
    for d in digon_family().unwrap().iter().take(4) {
        println!("digon family: {} {} density {}", d.cell, d.vertex_figure, d.density);
    }
}
