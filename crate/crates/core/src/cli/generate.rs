//! Turns a symbol or graph name into a skeleton or patch.

use serde::Serialize;

use super::CliError;
use crate::schlafli::{Curvature, SchlafliSymbol};
use crate::skeletons::{
    lattice_ball, named_graph, platonic, polytope_family, regular_4polytope, star_4polytope, tiling_patch, Patch,
    Polytope4, PolytopeKind, Skeleton, StarHoneycomb, TilingOptions, STAR_4POLYTOPES,
};

/// Bumped whenever generated output could change; part of the cache key.
pub const GENERATOR_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Graph {
    Patch(Patch),
    Skeleton(Skeleton),
}

impl Graph {
    pub fn skeleton(&self) -> &Skeleton {
        match self {
            Graph::Patch(p) => &p.skeleton,
            Graph::Skeleton(g) => g,
        }
    }

    pub fn patch(&self) -> Option<&Patch> {
        match self {
            Graph::Patch(p) => Some(p),
            Graph::Skeleton(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Graph::Patch(p) => p.to_json(),
            Graph::Skeleton(g) => g.to_json(),
        }
    }

    /// Reads a patch if the document carries a rotation system, else a skeleton.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("rotation").is_some() {
            Ok(Graph::Patch(Patch::from_json(text)?))
        } else {
            Ok(Graph::Skeleton(Skeleton::from_json(text)?))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenOptions {
    pub radius: usize,
    /// `None` uses each generator's default.
    pub margin: Option<usize>,
    pub vertex_cap: usize,
}

fn convex_orders(sym: &SchlafliSymbol) -> Option<Vec<u64>> {
    sym.entries().iter().map(|e| e.convex_order()).collect()
}

fn family(orders: &[u64]) -> Option<(PolytopeKind, usize)> {
    let n = orders.len() + 1;
    let threes = |s: &[u64]| s.iter().all(|&x| x == 3);
    if threes(orders) {
        return Some((PolytopeKind::Simplex, n));
    }
    if orders[0] == 4 && threes(&orders[1..]) {
        return Some((PolytopeKind::Cube, n));
    }
    if orders[orders.len() - 1] == 4 && threes(&orders[..orders.len() - 1]) {
        return Some((PolytopeKind::CrossPolytope, n));
    }
    None
}

fn from_symbol(sym: &SchlafliSymbol, opts: GenOptions) -> Result<Graph, CliError> {
    let text = sym.to_string();
    let unsupported = || CliError::Usage(format!("no generator for {text}"));
    let named = |g: Skeleton| Graph::Skeleton(Skeleton { name: text.clone(), ..g }.with_symbol(text.clone()));
    if sym.convex_pair().is_some() {
        let graph = if sym.classify() == Some(Curvature::Spherical) {
            platonic(sym)?
        } else {
            let mut t = TilingOptions::with_default_margin(opts.radius);
            t.margin = opts.margin;
            t.vertex_cap = opts.vertex_cap;
            tiling_patch(sym, t)?
        };
        return Ok(Graph::Patch(graph));
    }
    if sym.len() == 2 {
        return match text.as_str() {
            "{5/2,5}" | "{5,5/2}" | "{3,5/2}" => Ok(named(platonic(&SchlafliSymbol::from_convex(&[3, 5])?)?.skeleton)),
            "{5/2,3}" => Ok(named(platonic(&SchlafliSymbol::from_convex(&[5, 3])?)?.skeleton)),
            _ => {
                let [a, b] = sym.entries() else { unreachable!() };
                match (a.fraction(), b.convex_order()) {
                    (Some(f), Some(m)) if f.q() == 2 && f.p() == m && m % 2 == 1 && m >= 7 => {
                        let h = StarHoneycomb::build(m as usize, opts.radius, opts.margin.unwrap_or(2))?;
                        Ok(Graph::Skeleton(h.skeleton))
                    }
                    _ => Err(unsupported()),
                }
            }
        };
    }
    if STAR_4POLYTOPES.contains(&text.as_str()) {
        return Ok(Graph::Skeleton(star_4polytope(sym)?));
    }
    let orders = convex_orders(sym).ok_or_else(unsupported)?;
    if let Ok(which) = text.parse::<Polytope4>() {
        return Ok(named(regular_4polytope(which)));
    }
    if let Some((kind, n)) = family(&orders) {
        return Ok(named(polytope_family(kind, n)?));
    }
    let d = orders.len();
    if orders[0] == 4 && orders[d - 1] == 4 && orders[1..d - 1].iter().all(|&x| x == 3) {
        return Ok(named(lattice_ball(d, opts.radius + 1)?));
    }
    Err(unsupported())
}

/// Generates from a Schläfli symbol (`{7,3}`, `{3,3,5}`, `{7/2,7}`, ...) or a
/// graph name (`petersen`, `600-cell`, `icosahedron`, `C4xC4`, ...).
pub fn generate(target: &str, opts: GenOptions) -> Result<Graph, CliError> {
    let t = target.trim();
    if t.starts_with('{') {
        return from_symbol(&SchlafliSymbol::parse(t)?, opts);
    }
    let solid = match t.to_ascii_lowercase().as_str() {
        "tetrahedron" => Some("{3,3}"),
        "cube" => Some("{4,3}"),
        "octahedron" => Some("{3,4}"),
        "dodecahedron" => Some("{5,3}"),
        "icosahedron" => Some("{3,5}"),
        _ => None,
    };
    if let Some(s) = solid {
        let mut p = platonic(&SchlafliSymbol::parse(s)?)?;
        p.skeleton.name = t.to_ascii_lowercase();
        return Ok(Graph::Patch(p));
    }
    if let Ok(which) = t.parse::<Polytope4>() {
        return Ok(Graph::Skeleton(regular_4polytope(which)));
    }
    Ok(Graph::Skeleton(named_graph(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(radius: usize) -> GenOptions {
        GenOptions { radius, margin: None, vertex_cap: 100_000 }
    }

    #[test]
    fn dispatch() {
        let counts = |t: &str| {
            let g = generate(t, opts(2)).unwrap();
            (g.skeleton().n, g.skeleton().edge_count())
        };
        assert_eq!(counts("{3,5}"), (12, 30));
        assert_eq!(counts("{5/2,5}"), (12, 30));
        assert_eq!(counts("{5/2,3}"), (20, 30));
        assert_eq!(counts("{3,4,3}"), (24, 96));
        assert_eq!(counts("{3,3,5}"), (120, 720));
        assert_eq!(counts("{5/2,5,3}"), (120, 1200));
        assert_eq!(counts("{3,3,3}"), (5, 10));
        assert_eq!(counts("{4,3,3}"), (16, 32));
        assert_eq!(counts("{3,3,4}"), (8, 24));
        assert_eq!(counts("petersen"), (10, 15));
        assert_eq!(counts("600-cell"), (120, 720));
        assert!(generate("{7,3}", opts(2)).unwrap().patch().is_some());
        assert!(generate("{7/2,7}", opts(1)).unwrap().skeleton().core.is_some());
        let ball = generate("{4,3,4}", opts(2)).unwrap();
        assert_eq!(ball.skeleton().core_vertices().len(), 25);
        assert!(generate("{3,5,3}", opts(1)).is_err());
        assert!(generate("{7,3}", GenOptions { radius: 6, margin: Some(6), vertex_cap: 1000 }).is_err());
    }

    #[test]
    fn json_roundtrip_keeps_kind() {
        for t in ["{6,3}", "petersen"] {
            let g = generate(t, opts(2)).unwrap();
            assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        }
    }
}
