//! Graph distances, girth, diameter and isometric subgraphs.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::schlafli::SchlafliSymbol;
use crate::skeletons::{tiling_patch, Skeleton, SkeletonError, TilingOptions};

/// Distance between vertices in different components.
pub const INF: u16 = u16::MAX;

#[derive(Debug, thiserror::Error)]
pub enum MetricsError {
    #[error("vertex map is not injective: {0} appears twice")]
    NotInjective(usize),
    #[error("vertex map has {got} entries for {expected} vertices")]
    MapLength { expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("subgraph is not induced: pair ({0}, {1}) disagrees")]
    NotInduced(usize, usize),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

/// Symmetric matrix of graph distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<u16>>) -> Self {
        let n = rows.len();
        DistanceMatrix { n, d: rows.into_iter().flatten().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry, or `None` if some pair is disconnected.
    pub fn diameter(&self) -> Option<u16> {
        if self.d.contains(&INF) {
            None
        } else {
            self.d.iter().copied().max().or(Some(0))
        }
    }

    /// Distances among `vertices`, in the given order.
    pub fn submatrix(&self, vertices: &[usize]) -> Vec<Vec<u16>> {
        vertices.iter().map(|&u| vertices.iter().map(|&v| self.get(u, v)).collect()).collect()
    }

    /// JSON array of rows; disconnected pairs are `null`.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<Option<u16>>> =
            (0..self.n).map(|u| self.row(u).iter().map(|&x| (x != INF).then_some(x)).collect()).collect();
        serde_json::to_string(&rows).expect("matrix serializes")
    }

    /// One row per line; disconnected pairs are written as `inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            let cells: Vec<String> =
                self.row(u).iter().map(|&x| if x == INF { "inf".to_string() } else { x.to_string() }).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

impl Serialize for DistanceMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Option<u16>>> =
            (0..self.n).map(|u| self.row(u).iter().map(|&x| (x != INF).then_some(x)).collect()).collect();
        rows.serialize(s)
    }
}

pub fn bfs(g: &Skeleton, source: usize) -> Vec<u16> {
    let mut dist = vec![INF; g.n];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in &g.adj[u] {
            if dist[v] == INF {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// BFS rows from each of `sources`, in order.
pub fn distances_from(g: &Skeleton, sources: &[usize]) -> Vec<Vec<u16>> {
    sources.par_iter().map(|&s| bfs(g, s)).collect()
}

pub fn apsp(g: &Skeleton) -> DistanceMatrix {
    let sources: Vec<usize> = (0..g.n).collect();
    DistanceMatrix::from_rows(distances_from(g, &sources))
}

/// Shortest cycle through `root`, never looking past length `bound`.
fn shortest_cycle_through(g: &Skeleton, root: usize, bound: usize) -> Option<usize> {
    let mut dist = vec![u32::MAX; g.n];
    let mut branch = vec![usize::MAX; g.n];
    let mut parent = vec![usize::MAX; g.n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best = bound;
    while let Some(u) = queue.pop_front() {
        if 2 * dist[u] as usize + 1 >= best {
            break;
        }
        for &v in &g.adj[u] {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                branch[v] = if u == root { v } else { branch[u] };
                parent[v] = u;
                queue.push_back(v);
            } else if v != parent[u] && u != parent[v] && branch[u] != branch[v] {
                best = best.min((dist[u] + dist[v]) as usize + 1);
            }
        }
    }
    (best < bound).then_some(best)
}

/// Length of a shortest cycle, or `None` for a forest. With `restrict_to_core`
/// only cycles through a core vertex count.
pub fn girth(g: &Skeleton, restrict_to_core: bool) -> Option<usize> {
    let roots: Vec<usize> = if restrict_to_core { g.core_vertices() } else { (0..g.n).collect() };
    let best = AtomicUsize::new(usize::MAX);
    roots.par_iter().for_each(|&v| {
        let bound = best.load(Ordering::Relaxed);
        if let Some(len) = shortest_cycle_through(g, v, bound) {
            best.fetch_min(len, Ordering::Relaxed);
        }
    });
    let best = best.into_inner();
    (best != usize::MAX).then_some(best)
}

/// Length of a shortest cycle through `v` together with one such cycle.
pub fn shortest_cycle_at(g: &Skeleton, root: usize) -> Option<Vec<usize>> {
    let mut dist = vec![u32::MAX; g.n];
    let mut branch = vec![usize::MAX; g.n];
    let mut parent = vec![usize::MAX; g.n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(u) = queue.pop_front() {
        if let Some((len, _, _)) = best {
            if 2 * dist[u] as usize + 1 >= len {
                break;
            }
        }
        for &v in &g.adj[u] {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                branch[v] = if u == root { v } else { branch[u] };
                parent[v] = u;
                queue.push_back(v);
            } else if v != parent[u] && u != parent[v] && branch[u] != branch[v] {
                let len = (dist[u] + dist[v]) as usize + 1;
                if best.is_none_or(|(b, _, _)| len < b) {
                    best = Some((len, u, v));
                }
            }
        }
    }
    let (_, u, v) = best?;
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while x != root {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let mut cycle = path_to_root(u);
    cycle.reverse();
    let mut back = path_to_root(v);
    back.pop();
    cycle.extend(back);
    Some(cycle)
}

pub fn diameter(g: &Skeleton) -> Option<u16> {
    apsp(g).diameter()
}

/// Whether `h`, placed in `g` by `vertex_map`, is an induced subgraph whose
/// distances agree with those of `g`.
pub fn is_isometric_subgraph(h: &Skeleton, g: &Skeleton, vertex_map: &[usize]) -> Result<bool, MetricsError> {
    if vertex_map.len() != h.n {
        return Err(MetricsError::MapLength { expected: h.n, got: vertex_map.len() });
    }
    let mut seen = vec![false; g.n];
    for &v in vertex_map {
        if v >= g.n {
            return Err(MetricsError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(MetricsError::NotInjective(v));
        }
    }
    for a in 0..h.n {
        for b in a + 1..h.n {
            if h.has_edge(a, b) != g.has_edge(vertex_map[a], vertex_map[b]) {
                return Err(MetricsError::NotInduced(a, b));
            }
        }
    }
    let dh = apsp(h);
    let dg = distances_from(g, vertex_map);
    Ok((0..h.n).all(|a| (0..h.n).all(|b| dh.get(a, b) == dg[a][vertex_map[b]])))
}

/// Compares core-to-core distances of the {p,q} window at margins `margin` and
/// `margin + 2`.
pub fn distance_stability(sym: &SchlafliSymbol, radius: usize, margin: usize) -> Result<bool, MetricsError> {
    let small = tiling_patch(sym, TilingOptions::new(radius, margin))?;
    let large = tiling_patch(sym, TilingOptions::new(radius, margin + 2))?;
    let core = small.skeleton.core_vertices();
    if core != large.skeleton.core_vertices() {
        return Ok(false);
    }
    let a = distances_from(&small.skeleton, &core);
    let b = distances_from(&large.skeleton, &core);
    Ok(a.iter().zip(&b).all(|(ra, rb)| core.iter().all(|&v| ra[v] == rb[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeletons::{complete, cycle, hypercube, petersen, platonic};

    #[test]
    fn small_graphs() {
        let k5 = apsp(&complete(5).unwrap());
        assert!((0..5).all(|u| (0..5).all(|v| k5.get(u, v) == (u != v) as u16)));
        assert_eq!(girth(&hypercube(3).unwrap(), false), Some(4));
        assert_eq!(girth(&petersen(), false), Some(5));
        assert_eq!(girth(&Skeleton::from_edges("path", 3, [(0, 1), (1, 2)]), false), None);
        assert_eq!(diameter(&cycle(7).unwrap()), Some(3));
    }

    #[test]
    fn icosahedron_has_unique_antipodes() {
        let ico = platonic(&SchlafliSymbol::parse("{3,5}").unwrap()).unwrap();
        let d = apsp(&ico.skeleton);
        assert_eq!(d.diameter(), Some(3));
        for u in 0..12 {
            assert_eq!(d.row(u).iter().filter(|&&x| x == 3).count(), 1);
        }
    }

    #[test]
    fn disconnected_pairs() {
        let g = Skeleton::from_edges("two", 4, [(0, 1), (2, 3)]);
        let d = apsp(&g);
        assert_eq!(d.get(0, 2), INF);
        assert_eq!(d.diameter(), None);
        assert!(d.to_csv().contains("inf"));
        assert!(d.to_json().contains("null"));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let g = petersen();
        let c = shortest_cycle_at(&g, 3).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c[0], 3);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn paths_in_cycle() {
        let c12 = cycle(12).unwrap();
        let p = |k: usize| Skeleton::from_edges("path", k, (0..k - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
        assert!(is_isometric_subgraph(&p(7), &c12, &(0..7).collect::<Vec<_>>()).unwrap());
        assert!(!is_isometric_subgraph(&p(8), &c12, &(0..8).collect::<Vec<_>>()).unwrap());
        assert!(matches!(is_isometric_subgraph(&p(3), &c12, &[0, 1, 1]), Err(MetricsError::NotInjective(1))));
        assert!(matches!(is_isometric_subgraph(&p(3), &c12, &[0, 1, 3]), Err(MetricsError::NotInduced(1, 2))));
    }
}
