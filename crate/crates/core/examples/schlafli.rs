//! Parse Schläfli symbols and classify the {p,q} ones by curvature.

use cutlattice::schlafli::SchlafliSymbol;

pub fn main() {
    for text in ["{3,5}", "{4,4}", "{7,3}", "{5/2,5}", "{3,inf}", "{3,3,5}", "{5/2,5,3}"] {
        let s = SchlafliSymbol::parse(text).unwrap();
        let kind = s.classify().map_or("higher rank or star".to_string(), |c| c.to_string());
        println!("{s:<10} rank {} convex {:<5} {kind}", s.len() + 1, s.is_convex());
    }
    for bad in ["{6/4,3}", "{3,}", "{2/1,5"] {
        println!("{bad:<10} rejected: {}", SchlafliSymbol::parse(bad).unwrap_err());
    }
}
