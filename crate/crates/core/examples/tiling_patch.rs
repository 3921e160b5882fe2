//! Finite windows of euclidean and hyperbolic tilings.

use cutlattice::metrics::{distance_stability, girth};
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{interior_defect, tiling_patch, TilingOptions};

pub fn main() {
    for (s, r) in [("{4,4}", 3), ("{6,3}", 3), ("{7,3}", 3), ("{5,4}", 3), ("{3,7}", 2)] {
        let sym = SchlafliSymbol::parse(s).unwrap();
        let p = tiling_patch(&sym, TilingOptions::with_default_margin(r)).unwrap();
        let g = &p.skeleton;
        println!(
            "{s} R={r} M={}: {} vertices, {} core, {} faces, core girth {:?}, interior {}, stable {}",
            p.margin,
            g.n,
            g.core_vertices().len(),
            p.faces().len(),
            girth(g, true),
            interior_defect(&p).unwrap_or_else(|| "regular".into()),
            distance_stability(&sym, r, p.margin).unwrap()
        );
    }
    let capped = TilingOptions { radius: 12, margin: Some(7), vertex_cap: 10_000 };
    let err = tiling_patch(&SchlafliSymbol::parse("{7,3}").unwrap(), capped).unwrap_err();
    println!("{{7,3}} R=12 with a 10000 vertex cap: {err}");
}
