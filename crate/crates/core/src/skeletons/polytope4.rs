//! The 24-cell, 600-cell and 120-cell, and the skeletons of the ten regular
//! star-4-polytopes.

use std::collections::HashMap;

use super::{Result, Skeleton, SkeletonError};
use crate::schlafli::SchlafliSymbol;

const PHI: f64 = 1.618_033_988_749_895;
const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polytope4 {
    Cell24,
    Cell600,
    Cell120,
}

impl std::str::FromStr for Polytope4 {
    type Err = SkeletonError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "24-cell" | "24cell" | "{3,4,3}" => Ok(Polytope4::Cell24),
            "600-cell" | "600cell" | "{3,3,5}" => Ok(Polytope4::Cell600),
            "120-cell" | "120cell" | "{5,3,3}" => Ok(Polytope4::Cell120),
            _ => Err(SkeletonError::UnknownName(s.to_string())),
        }
    }
}

/// The ten star-4-polytopes.
pub const STAR_4POLYTOPES: [&str; 10] = [
    "{5/2,5,3}",
    "{5,5/2,3}",
    "{5/2,3,3}",
    "{3,3,5/2}",
    "{3,5,5/2}",
    "{5,5/2,5}",
    "{5,3,5/2}",
    "{5/2,3,5}",
    "{5/2,5,5/2}",
    "{3,5/2,5}",
];

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn is_even_permutation(perm: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The 120 unit icosians in a fixed order: ±unit vectors, (±½)^4, then the even
/// permutations of (±φ/2, ±½, ±1/(2φ), 0).
pub fn icosians() -> Vec<[f64; 4]> {
    let mut out = Vec::with_capacity(120);
    for axis in 0..4 {
        for s in [1.0, -1.0] {
            let mut v = [0.0; 4];
            v[axis] = s;
            out.push(v);
        }
    }
    for mask in 0..16u32 {
        let v: [f64; 4] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -0.5 } else { 0.5 });
        out.push(v);
    }
    let base = [PHI / 2.0, 0.5, 1.0 / (2.0 * PHI), 0.0];
    let mut perms = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut sorted = p;
                    sorted.sort_unstable();
                    if sorted == [0, 1, 2, 3] && is_even_permutation(&p) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    for p in perms {
        for mask in 0..8u32 {
            let signed: [f64; 4] = std::array::from_fn(|i| if i < 3 && mask >> i & 1 == 1 { -base[i] } else { base[i] });
            let mut v = [0.0; 4];
            for i in 0..4 {
                v[p[i]] = signed[i];
            }
            out.push(v);
        }
    }
    out
}

fn inner_product_graph(name: &str, points: &[[f64; 4]], target: f64) -> Skeleton {
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (dot(&points[i], &points[j]) - target).abs() < EPS {
                edges.push((i, j));
            }
        }
    }
    let mut g = Skeleton::from_edges(name, points.len(), edges);
    g.coords = Some(points.iter().map(|p| p.to_vec()).collect());
    g
}

fn cell24() -> Skeleton {
    let mut points = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut v = [0.0; 4];
                v[i] = si;
                v[j] = sj;
                points.push(v);
            }
        }
    }
    inner_product_graph("24-cell", &points, 1.0).with_symbol("{3,4,3}")
}

fn cell600() -> Skeleton {
    inner_product_graph("600-cell", &icosians(), PHI / 2.0).with_symbol("{3,3,5}")
}

/// Dual of the 600-cell: one vertex per tetrahedron, adjacent when two
/// tetrahedra share a triangle.
fn cell120() -> Skeleton {
    let g = cell600();
    let coords = g.coords.as_ref().unwrap();
    let mut tets = Vec::new();
    for a in 0..g.n {
        for &b in g.adj[a].iter().filter(|&&b| b > a) {
            for &c in g.adj[b].iter().filter(|&&c| c > b && g.has_edge(a, c)) {
                for &d in g.adj[c].iter().filter(|&&d| d > c && g.has_edge(a, d) && g.has_edge(b, d)) {
                    tets.push([a, b, c, d]);
                }
            }
        }
    }
    let mut by_triangle: HashMap<[usize; 3], Vec<usize>> = HashMap::new();
    for (t, tet) in tets.iter().enumerate() {
        for skip in 0..4 {
            let tri: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| tet[i]).collect();
            by_triangle.entry([tri[0], tri[1], tri[2]]).or_default().push(t);
        }
    }
    let mut edges: Vec<(usize, usize)> = by_triangle
        .values()
        .filter(|ts| ts.len() == 2)
        .map(|ts| (ts[0].min(ts[1]), ts[0].max(ts[1])))
        .collect();
    edges.sort_unstable();
    let centres: Vec<Vec<f64>> = tets
        .iter()
        .map(|tet| {
            let mut c = [0.0; 4];
            for &v in tet {
                for i in 0..4 {
                    c[i] += coords[v][i];
                }
            }
            let norm = dot(&c, &c).sqrt();
            c.iter().map(|x| x / norm).collect()
        })
        .collect();
    let mut dual = Skeleton::from_edges("120-cell", tets.len(), edges).with_symbol("{5,3,3}");
    dual.coords = Some(centres);
    dual
}

pub fn regular_4polytope(which: Polytope4) -> Skeleton {
    match which {
        Polytope4::Cell24 => cell24(),
        Polytope4::Cell600 => cell600(),
        Polytope4::Cell120 => cell120(),
    }
}

/// Skeleton of a star-4-polytope, by the graph isomorphisms among the ten.
///
/// `{5/2,5,3}` and `{5,5/2,3}` share the graph on the 120 icosians joined at
/// inner product 1/2; `{5/2,3,3}` has the 120-cell skeleton; the remaining seven
/// have the 600-cell skeleton.
pub fn star_4polytope(sym: &SchlafliSymbol) -> Result<Skeleton> {
    let text = sym.to_string();
    let g = match text.as_str() {
        "{5/2,5,3}" | "{5,5/2,3}" => inner_product_graph("stellated-120-cell", &icosians(), 0.5),
        "{5/2,3,3}" => cell120(),
        t if STAR_4POLYTOPES.contains(&t) => cell600(),
        _ => return Err(SkeletonError::NotStarPolytope(text)),
    };
    Ok(Skeleton { name: format!("star {text}"), symbol: Some(text), ..g })
}
