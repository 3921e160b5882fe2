//! Embeddability status of regular tilings and polytopes by symbol.

use cutlattice::atlas::Atlas;
use cutlattice::schlafli::SchlafliSymbol;

pub fn main() {
    let atlas = Atlas::builtin();
    println!("{} records", atlas.len());
    for s in ["{3,5}", "{5,3}", "{3,4,3}", "{3,3,5}", "{4,3,5}", "{7,3}", "{3,7}", "{5/2,5}", "{9,3}", "{3,3,3,3}"] {
        println!("{}", atlas.status(&SchlafliSymbol::parse(s).unwrap()).summary());
    }
}
