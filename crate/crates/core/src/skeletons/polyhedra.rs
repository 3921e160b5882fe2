use super::{canonical_cycle, Patch, Result, Skeleton, SkeletonError};
use crate::schlafli::{Curvature, SchlafliSymbol};

const PHI: f64 = 1.618_033_988_749_895;

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn cyclic_perms(base: &[[f64; 3]]) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for shift in 0..3 {
        for v in base {
            out.push((0..3).map(|i| v[(i + shift) % 3]).collect());
        }
    }
    out
}

fn signs(v: [f64; 3]) -> Vec<[f64; 3]> {
    let mut out = vec![v];
    for axis in 0..3 {
        if v[axis] != 0.0 {
            let flipped: Vec<[f64; 3]> = out
                .iter()
                .map(|w| {
                    let mut w = *w;
                    w[axis] = -w[axis];
                    w
                })
                .collect();
            out.extend(flipped);
        }
    }
    out
}

fn vertices(p: u64, q: u64) -> Vec<Vec<f64>> {
    match (p, q) {
        (3, 3) => vec![vec![1., 1., 1.], vec![1., -1., -1.], vec![-1., 1., -1.], vec![-1., -1., 1.]],
        (4, 3) => signs([1., 1., 1.]).iter().map(|v| v.to_vec()).collect(),
        (3, 4) => cyclic_perms(&signs([1., 0., 0.])),
        (3, 5) => cyclic_perms(&signs([0., 1., PHI])),
        (5, 3) => {
            let mut v: Vec<Vec<f64>> = signs([1., 1., 1.]).iter().map(|v| v.to_vec()).collect();
            v.extend(cyclic_perms(&signs([0., 1. / PHI, PHI])));
            v
        }
        _ => unreachable!(),
    }
}

/// Rotation system around the outward normal of each vertex of a convex polyhedron.
fn convex_rotation(coords: &[Vec<f64>], adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    coords
        .iter()
        .enumerate()
        .map(|(v, pos)| {
            let first = sub(&coords[adj[v][0]], pos);
            let e1: Vec<f64> = {
                let t = dot(&first, pos) / dot(pos, pos);
                first.iter().zip(pos).map(|(f, p)| f - t * p).collect()
            };
            let e2 = cross(pos, &e1);
            let mut ns: Vec<(f64, usize)> = adj[v]
                .iter()
                .map(|&w| {
                    let d = sub(&coords[w], pos);
                    (dot(&d, &e2).atan2(dot(&d, &e1)).rem_euclid(std::f64::consts::TAU), w)
                })
                .collect();
            ns.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            ns.into_iter().map(|x| x.1).collect()
        })
        .collect()
}

fn faces_from_rotation(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut used = std::collections::HashSet::new();
    let mut faces = Vec::new();
    for (u, rot) in rotation.iter().enumerate() {
        for &w in rot {
            if used.contains(&(u, w)) {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut a, mut b) = (u, w);
            loop {
                used.insert((a, b));
                cycle.push(a);
                let rb = &rotation[b];
                let pos = rb.iter().position(|&x| x == a).unwrap();
                let next = rb[(pos + rb.len() - 1) % rb.len()];
                a = b;
                b = next;
                if (a, b) == (u, w) {
                    break;
                }
            }
            faces.push(canonical_cycle(cycle));
        }
    }
    faces.sort();
    faces
}

/// The spherical {p,q}: the five Platonic solids, the dihedra {m,2} and the
/// hosohedra {2,m}. All vertices are core.
pub fn platonic(sym: &SchlafliSymbol) -> Result<Patch> {
    let not_spherical = || SkeletonError::NotSpherical(sym.to_string());
    let (p, q) = sym.convex_pair().ok_or_else(not_spherical)?;
    if sym.classify() != Some(Curvature::Spherical) {
        return Err(not_spherical());
    }
    let name = sym.to_string();
    let (skeleton, rotation) = match (p, q) {
        (2, 2) => {
            let mut g = Skeleton::from_edges("{2,2}", 2, [(0, 1)]);
            g.faces = Some(vec![vec![0, 1], vec![0, 1]]);
            (g, vec![vec![1], vec![0]])
        }
        (2, m) => {
            // Two poles joined by m meridians; multiplicity survives only in the faces.
            let mut g = Skeleton::from_edges(name.clone(), 2, [(0, 1)]);
            g.faces = Some(vec![vec![0, 1]; m as usize]);
            (g, vec![vec![1], vec![0]])
        }
        (m, 2) => {
            let m = m as usize;
            let mut g = Skeleton::from_edges(name.clone(), m, (0..m).map(|i| (i, (i + 1) % m)).collect::<Vec<_>>());
            let forward: Vec<usize> = (0..m).collect();
            let backward = canonical_cycle((0..m).rev().collect());
            g.faces = Some(vec![forward, backward]);
            let rotation = (0..m).map(|i| vec![(i + 1) % m, (i + m - 1) % m]).collect();
            (g, rotation)
        }
        _ => {
            let coords = vertices(p, q);
            let n = coords.len();
            let min_d2 = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| dot(&sub(&coords[i], &coords[j]), &sub(&coords[i], &coords[j])))
                .fold(f64::INFINITY, f64::min);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let d = sub(&coords[i], &coords[j]);
                    if (dot(&d, &d) - min_d2).abs() < 1e-9 {
                        edges.push((i, j));
                    }
                }
            }
            let mut g = Skeleton::from_edges(name.clone(), n, edges);
            let rotation = convex_rotation(&coords, &g.adj);
            g.faces = Some(faces_from_rotation(&rotation));
            g.coords = Some(coords);
            (g, rotation)
        }
    };
    let skeleton = Skeleton { name: polyhedron_name(p, q).unwrap_or(name.as_str()).to_string(), symbol: Some(name), ..skeleton };
    Ok(Patch { skeleton, rotation, radius: 0, margin: 0 })
}

fn polyhedron_name(p: u64, q: u64) -> Option<&'static str> {
    Some(match (p, q) {
        (3, 3) => "tetrahedron",
        (4, 3) => "cube",
        (3, 4) => "octahedron",
        (3, 5) => "icosahedron",
        (5, 3) => "dodecahedron",
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solid(s: &str) -> Patch {
        platonic(&SchlafliSymbol::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn platonic_counts() {
        for (s, v, e, f, p) in [
            ("{3,3}", 4, 6, 4, 3),
            ("{4,3}", 8, 12, 6, 4),
            ("{3,4}", 6, 12, 8, 3),
            ("{3,5}", 12, 30, 20, 3),
            ("{5,3}", 20, 30, 12, 5),
        ] {
            let patch = solid(s);
            let g = &patch.skeleton;
            assert_eq!((g.n, g.edge_count(), patch.faces().len()), (v, e, f), "{s}");
            assert!(patch.faces().iter().all(|f| f.len() == p), "{s}");
            for face in patch.faces() {
                assert_eq!(patch.trace_face(face[0], face[1]).map(canonical_cycle), Some(face.clone()));
            }
        }
        assert!(solid("{4,3}").skeleton.is_bipartite());
    }

    #[test]
    fn degenerate_spherical() {
        let hoso = solid("{2,5}");
        assert_eq!((hoso.skeleton.n, hoso.skeleton.edge_count(), hoso.faces().len()), (2, 1, 5));
        let di = solid("{6,2}");
        assert_eq!((di.skeleton.n, di.skeleton.edge_count(), di.faces().len()), (6, 6, 2));
        assert_eq!(di.trace_face(0, 1).map(canonical_cycle), Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn rejects_non_spherical() {
        assert!(matches!(
            platonic(&SchlafliSymbol::parse("{4,4}").unwrap()),
            Err(SkeletonError::NotSpherical(_))
        ));
        assert!(platonic(&SchlafliSymbol::parse("{5/2,5}").unwrap()).is_err());
    }
}
