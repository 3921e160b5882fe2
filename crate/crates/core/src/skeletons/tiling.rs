//! Windows of the euclidean and hyperbolic tilings {p,q}.
//!
//! The window is grown as a topological disk, purely combinatorially: every
//! boundary vertex `b` still misses `q - faces(b)` faces, which belong to its
//! outer angle. A new face is closed along a stretch of boundary whose inner
//! vertices miss exactly that one face, and is padded with fresh vertices up to
//! length p. Boundary vertices are completed in order of distance from the
//! base vertex, so the disk stays close to a ball. No coordinates are involved.

use std::collections::VecDeque;

use super::{canonical_cycle, Patch, Result, Skeleton, SkeletonError};
use crate::schlafli::{Curvature, SchlafliSymbol};

pub const DEFAULT_VERTEX_CAP: usize = 400_000;

#[derive(Debug, Clone, Copy)]
pub struct TilingOptions {
    /// Core radius around the base vertex.
    pub radius: usize,
    /// Extra rings kept around the core; `None` means `p`.
    pub margin: Option<usize>,
    /// Upper bound on generated vertices.
    pub vertex_cap: usize,
}

impl TilingOptions {
    pub fn new(radius: usize, margin: usize) -> Self {
        TilingOptions { radius, margin: Some(margin), vertex_cap: DEFAULT_VERTEX_CAP }
    }

    pub fn with_default_margin(radius: usize) -> Self {
        TilingOptions { radius, margin: None, vertex_cap: DEFAULT_VERTEX_CAP }
    }
}

const NONE: usize = usize::MAX;

struct Disk {
    p: usize,
    q: usize,
    cap: usize,
    /// `links[w]` holds `(c, a)` pairs: in the rotation at `w`, `a` follows `c`.
    links: Vec<Vec<(usize, usize)>>,
    adj: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    /// Boundary as a cyclic doubly linked list; the disk lies to the left of
    /// `v -> next[v]`.
    next: Vec<usize>,
    prev: Vec<usize>,
}

impl Disk {
    fn new(p: usize, q: usize, cap: usize) -> Self {
        Disk { p, q, cap, links: Vec::new(), adj: Vec::new(), faces: Vec::new(), next: Vec::new(), prev: Vec::new() }
    }

    fn add_vertex(&mut self) -> Result<usize> {
        if self.links.len() >= self.cap {
            return Err(SkeletonError::ResourceLimit { cap: self.cap });
        }
        self.links.push(Vec::new());
        self.adj.push(Vec::new());
        self.next.push(NONE);
        self.prev.push(NONE);
        Ok(self.links.len() - 1)
    }

    fn add_vertices(&mut self, k: usize) -> Result<Vec<usize>> {
        (0..k).map(|_| self.add_vertex()).collect()
    }

    fn add_face(&mut self, cycle: Vec<usize>) {
        debug_assert_eq!(cycle.len(), self.p);
        let n = cycle.len();
        for i in 0..n {
            let (a, w, c) = (cycle[(i + n - 1) % n], cycle[i], cycle[(i + 1) % n]);
            self.links[w].push((c, a));
            if !self.adj[w].contains(&c) {
                self.adj[w].push(c);
                self.adj[c].push(w);
            }
        }
        self.faces.push(cycle);
    }

    fn missing(&self, v: usize) -> isize {
        self.q as isize - self.links[v].len() as isize
    }

    fn on_boundary(&self, v: usize) -> bool {
        self.next[v] != NONE
    }

    fn link_path(&mut self, path: &[usize]) {
        for w in path.windows(2) {
            self.next[w[0]] = w[1];
            self.prev[w[1]] = w[0];
        }
    }

    fn seed(&mut self) -> Result<()> {
        let centre = self.add_vertex()?;
        let spokes = self.add_vertices(self.q)?;
        let mut ring = Vec::new();
        for j in 0..self.q {
            let fresh = self.add_vertices(self.p - 3)?;
            let next = spokes[(j + 1) % self.q];
            let mut face = vec![centre, spokes[j]];
            face.extend(&fresh);
            face.push(next);
            self.add_face(face);
            ring.push(spokes[j]);
            ring.extend(fresh);
        }
        ring.push(ring[0]);
        self.link_path(&ring);
        Ok(())
    }

    /// Closes the outer face along the boundary edge `b -> next[b]`.
    fn close_face(&mut self, b: usize) -> Result<()> {
        let broken = |msg: &str| SkeletonError::Internal(format!("{msg} at boundary vertex {b}"));
        let mut x = b;
        let mut stretch = 1;
        while self.missing(x) == 1 {
            x = self.prev[x];
            stretch += 1;
            if stretch > self.p {
                return Err(broken("face overruns the boundary"));
            }
        }
        let mut y = self.next[b];
        stretch += 1;
        while self.missing(y) == 1 {
            y = self.next[y];
            stretch += 1;
            if stretch > self.p {
                return Err(broken("face overruns the boundary"));
            }
        }
        if x == y || self.missing(x) < 1 || self.missing(y) < 1 {
            return Err(broken("boundary closes up"));
        }
        let mut cycle = vec![y];
        let mut w = y;
        while w != x {
            w = self.prev[w];
            cycle.push(w);
        }
        let inner: Vec<usize> = cycle[1..cycle.len() - 1].to_vec();
        let fresh = self.add_vertices(self.p - stretch)?;
        cycle.extend(&fresh);
        self.add_face(cycle);
        for v in inner {
            self.next[v] = NONE;
            self.prev[v] = NONE;
        }
        let mut path = vec![x];
        path.extend(fresh);
        path.push(y);
        self.link_path(&path);
        Ok(())
    }

    fn complete(&mut self, b: usize) -> Result<()> {
        while self.on_boundary(b) {
            self.close_face(b)?;
        }
        Ok(())
    }

    fn boundary(&self) -> Vec<usize> {
        (0..self.links.len()).filter(|&v| self.on_boundary(v)).collect()
    }

    /// Counter-clockwise neighbour order at `v`; a chain for boundary vertices.
    fn rotation(&self, v: usize) -> Vec<usize> {
        let links = &self.links[v];
        if links.is_empty() {
            return Vec::new();
        }
        let targets: std::collections::HashSet<usize> = links.iter().map(|&(_, a)| a).collect();
        let start = links.iter().map(|&(c, _)| c).find(|c| !targets.contains(c)).unwrap_or(links[0].0);
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&(_, a)) = links.iter().find(|&&(c, _)| c == cur) {
            if a == start {
                break;
            }
            order.push(a);
            cur = a;
        }
        order
    }
}

fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Ball of radius `radius + margin` around a base vertex of the tiling {p,q}.
///
/// Vertex 0 is the base vertex; vertices are numbered by distance from it.
/// Vertices within `radius` are core. A face is kept whenever all of its
/// vertices are kept, and the rotation at each vertex is restricted to kept
/// neighbours.
pub fn tiling_patch(sym: &SchlafliSymbol, opts: TilingOptions) -> Result<Patch> {
    let bad = || SkeletonError::NotPlanarTiling(sym.to_string());
    let (p, q) = sym.convex_pair().ok_or_else(bad)?;
    if p < 3 || q < 3 || sym.classify() == Some(Curvature::Spherical) {
        return Err(bad());
    }
    if opts.radius < 1 {
        return Err(SkeletonError::InvalidParameter("core radius must be at least 1".into()));
    }
    let margin = opts.margin.unwrap_or(p as usize);
    let reach = opts.radius + margin;
    let mut disk = Disk::new(p as usize, q as usize, opts.vertex_cap);
    disk.seed()?;
    loop {
        let dist = bfs(&disk.adj, 0);
        let boundary = disk.boundary();
        // Paths leaving the disk cross its boundary, so distances below the
        // nearest boundary vertex are exact.
        let nearest = boundary.iter().map(|&v| dist[v]).min().unwrap_or(usize::MAX);
        if nearest >= reach {
            return Ok(extract(&disk, &disk.adj, &dist, sym, opts.radius, margin));
        }
        for v in boundary.into_iter().filter(|&v| dist[v] == nearest) {
            disk.complete(v)?;
        }
    }
}

fn extract(disk: &Disk, adj: &[Vec<usize>], dist: &[usize], sym: &SchlafliSymbol, radius: usize, margin: usize) -> Patch {
    let reach = radius + margin;
    let mut kept: Vec<usize> = (0..adj.len()).filter(|&v| dist[v] <= reach).collect();
    kept.sort_by_key(|&v| (dist[v], v));
    let mut index = vec![usize::MAX; adj.len()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let rotation: Vec<Vec<usize>> = kept
        .iter()
        .map(|&v| disk.rotation(v).into_iter().filter(|&w| index[w] != usize::MAX).map(|w| index[w]).collect())
        .collect();
    let rotation: Vec<Vec<usize>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| if disk.links[kept[v]].len() == disk.q && r.len() == disk.q { canonical_cycle(r) } else { r })
        .collect();
    let edges = kept.iter().enumerate().flat_map(|(i, &v)| {
        let index = &index;
        adj[v].iter().filter(move |&&w| index[w] != usize::MAX && index[w] > i).map(move |&w| (i, index[w]))
    });
    let mut skeleton = Skeleton::from_edges(format!("{sym} patch R={radius} M={margin}"), kept.len(), edges.collect::<Vec<_>>());
    let mut faces: Vec<Vec<usize>> = disk
        .faces
        .iter()
        .filter(|f| f.iter().all(|&v| index[v] != usize::MAX))
        .map(|f| canonical_cycle(f.iter().map(|&v| index[v]).collect()))
        .collect();
    faces.sort();
    skeleton.symbol = Some(sym.to_string());
    skeleton.core = Some(kept.iter().map(|&v| dist[v] <= radius).collect());
    skeleton.faces = Some(faces);
    Patch { skeleton, rotation, radius, margin }
}

/// First vertex breaking interior regularity of a {p,q} window, if any.
///
/// Vertices strictly inside the generated ball must have degree and rotation
/// length `q`; those at least `p/2` inside must lie in `q` faces of length
/// `p`. Faces whose vertices all have full rotations must be traced by the
/// rotation rule.
pub fn interior_defect(patch: &Patch) -> Option<String> {
    let g = &patch.skeleton;
    let sym = g.symbol.as_deref().and_then(|s| SchlafliSymbol::parse(s).ok());
    let Some((p, q)) = sym.as_ref().and_then(SchlafliSymbol::convex_pair) else {
        return Some("patch has no {p,q} symbol".into());
    };
    let (p, q) = (p as usize, q as usize);
    let reach = patch.radius + patch.margin;
    let dist = bfs(&g.adj, 0);
    let mut faces_at = vec![0; g.n];
    for f in patch.faces() {
        if f.len() != p {
            return Some(format!("face {f:?} has length {}", f.len()));
        }
        for &v in f {
            faces_at[v] += 1;
        }
    }
    for v in 0..g.n {
        if dist[v] < reach && (g.degree(v) != q || patch.rotation[v].len() != q) {
            return Some(format!("vertex {v} at distance {} has degree {}", dist[v], g.degree(v)));
        }
        if dist[v] + p / 2 <= reach && faces_at[v] != q {
            return Some(format!("vertex {v} at distance {} lies in {} faces", dist[v], faces_at[v]));
        }
    }
    for f in patch.faces() {
        if f.iter().all(|&v| patch.rotation[v].len() == q) && patch.trace_face(f[0], f[1]).map(canonical_cycle).as_ref() != Some(f) {
            return Some(format!("face {f:?} disagrees with the rotation system"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn patch(s: &str, r: usize, m: usize) -> Patch {
        tiling_patch(&SchlafliSymbol::parse(s).unwrap(), TilingOptions::new(r, m)).unwrap()
    }

    fn check_regular(patch: &Patch, p: usize, q: usize) {
        assert_eq!(patch.skeleton.symbol, Some(format!("{{{p},{q}}}")));
        assert_eq!(interior_defect(patch), None);
    }

    #[test]
    fn square_grid_ball() {
        let p = patch("{4,4}", 2, 0);
        assert_eq!(p.skeleton.core_vertices().len(), 13);
        assert_eq!(p.skeleton.n, 13);
        let p = patch("{4,4}", 3, 2);
        assert_eq!(p.skeleton.n, 2 * 25 + 2 * 5 + 1);
        check_regular(&p, 4, 4);
    }

    #[test]
    fn interior_regularity() {
        for (s, p, q) in [
            ("{6,3}", 6, 3),
            ("{3,6}", 3, 6),
            ("{7,3}", 7, 3),
            ("{3,7}", 3, 7),
            ("{5,4}", 5, 4),
            ("{4,5}", 4, 5),
            ("{8,3}", 8, 3),
            ("{4,6}", 4, 6),
            ("{3,8}", 3, 8),
        ] {
            let pt = patch(s, 2, 3);
            check_regular(&pt, p, q);
        }
    }

    #[test]
    fn hexagonal_counts() {
        // Ball of radius r in the hexagonal lattice graph: 1 + 3r(r+1)/2 vertices.
        let p = patch("{6,3}", 2, 2);
        assert_eq!(p.skeleton.n, 1 + 3 * 4 * 5 / 2);
        // Triangular lattice: 1 + 3r(r+1).
        let p = patch("{3,6}", 2, 1);
        assert_eq!(p.skeleton.n, 1 + 3 * 3 * 4);
    }

    #[test]
    fn heptagonal_core_is_cubic() {
        let p = patch("{7,3}", 3, 7);
        for v in p.skeleton.core_vertices() {
            assert_eq!(p.skeleton.degree(v), 3);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(patch("{5,4}", 2, 2), patch("{5,4}", 2, 2));
    }

    #[test]
    fn errors() {
        let sym = SchlafliSymbol::parse("{3,7}").unwrap();
        let opts = TilingOptions { radius: 30, margin: Some(0), vertex_cap: 1000 };
        assert!(matches!(tiling_patch(&sym, opts), Err(SkeletonError::ResourceLimit { cap: 1000 })));
        let cube = SchlafliSymbol::parse("{4,3}").unwrap();
        assert!(matches!(tiling_patch(&cube, TilingOptions::new(1, 0)), Err(SkeletonError::NotPlanarTiling(_))));
        assert!(tiling_patch(&sym, TilingOptions::new(0, 1)).is_err());
    }
}
