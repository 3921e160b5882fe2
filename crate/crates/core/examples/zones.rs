//! Embed tiling windows by tracing zones of opposite edges.

use cutlattice::embeddings::{direction_families, verify, zone_embed};
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{tiling_patch, TilingOptions};

pub fn main() {
    for (s, scale) in [("{4,4}", 1), ("{6,3}", 1), ("{3,6}", 2), ("{7,3}", 2), ("{5,4}", 2)] {
        let p = tiling_patch(&SchlafliSymbol::parse(s).unwrap(), TilingOptions::new(3, 4)).unwrap();
        let z = zone_embed(&p, scale).unwrap();
        let ok = verify(&p.skeleton, &z.embedding, true).unwrap().is_valid();
        let families = match direction_families(&p, &z.zone_edges) {
            Ok(k) => format!("{k} direction families"),
            Err(_) => "no parallel classes".to_string(),
        };
        println!(
            "{s} on {} vertices: scale {scale}, {} coordinates from {} zones, {families}, core valid {ok}",
            p.skeleton.n, z.embedding.dim, z.zone_count
        );
    }
}
