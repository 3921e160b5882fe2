//! Skeletons of the star-honeycombs {m/2,m}, m odd.
//!
//! The cells of {m/2,m} are star-polygons inscribed in the vertex links of
//! {3,m}: around a vertex `v` with neighbours `u_0, ..., u_{m-1}` in rotation
//! order, the cell joins `u_i` to `u_{i+2}`. The vertex set is that of {3,m}.

use super::{platonic, tiling_patch, Patch, Result, Skeleton, SkeletonError, TilingOptions};
use crate::schlafli::SchlafliSymbol;

/// The star-cell around `v` as the cycle `u_0, u_2, u_4, ...` of length m, or
/// `None` when the rotation at `v` is incomplete.
pub fn star_cell(patch: &Patch, v: usize) -> Option<Vec<usize>> {
    if !patch.is_complete(v) {
        return None;
    }
    let rot = &patch.rotation[v];
    let m = rot.len();
    Some((0..m).map(|i| rot[(2 * i) % m]).collect())
}

/// A star-honeycomb skeleton with the {3,m} window it was built on. Vertex
/// `i` of `skeleton` is vertex `base_vertex[i]` of `base`.
#[derive(Debug, Clone)]
pub struct StarHoneycomb {
    pub m: usize,
    pub skeleton: Skeleton,
    pub base: Patch,
    pub base_vertex: Vec<usize>,
}

impl StarHoneycomb {
    /// Builds {m/2,m} over the ball of radius `radius + margin` in {3,m}; core
    /// vertices are those within `radius` of the base vertex. For m = 5 the
    /// whole icosahedron is used and every vertex is core.
    pub fn build(m: usize, radius: usize, margin: usize) -> Result<Self> {
        if m < 5 || m % 2 == 0 {
            return Err(SkeletonError::InvalidParameter(format!("star-honeycomb {{{m}/2,{m}}} needs odd m >= 5")));
        }
        let sym = SchlafliSymbol::from_convex(&[3, m as u64])?;
        let base = if m == 5 {
            platonic(&sym)?
        } else {
            tiling_patch(&sym, TilingOptions::new(radius, margin))?
        };
        let mut edges = Vec::new();
        for v in 0..base.skeleton.n {
            if let Some(cell) = star_cell(&base, v) {
                for i in 0..m {
                    let (a, b) = (cell[i], cell[(i + 1) % m]);
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut used = vec![false; base.skeleton.n];
        for &(a, b) in &edges {
            used[a] = true;
            used[b] = true;
        }
        let base_vertex: Vec<usize> = (0..base.skeleton.n).filter(|&v| used[v]).collect();
        let mut index = vec![usize::MAX; base.skeleton.n];
        for (i, &v) in base_vertex.iter().enumerate() {
            index[v] = i;
        }
        let name = if m == 5 { "{5/2,5}".to_string() } else { format!("{{{m}/2,{m}}} R={radius} M={margin}") };
        let mut skeleton = Skeleton::from_edges(name, base_vertex.len(), edges.iter().map(|&(a, b)| (index[a], index[b])).collect::<Vec<_>>());
        skeleton.symbol = Some(format!("{{{m}/2,{m}}}"));
        skeleton.core = Some(base_vertex.iter().map(|&v| base.skeleton.is_core(v)).collect());
        Ok(StarHoneycomb { m, skeleton, base, base_vertex })
    }
}

/// Skeleton of {m/2,m} with core radius `radius` and a base margin of 2.
pub fn star_honeycomb_skeleton(m: usize, radius: usize) -> Result<Skeleton> {
    Ok(StarHoneycomb::build(m, radius, 2)?.skeleton)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagram_case_is_icosahedron() {
        let g = star_honeycomb_skeleton(5, 1).unwrap();
        let ico = platonic(&SchlafliSymbol::parse("{3,5}").unwrap()).unwrap();
        assert_eq!((g.n, g.edge_count(), g.regular_degree()), (12, 30, Some(5)));
        assert!(g.is_isomorphic(&ico.skeleton));
        assert_eq!(g.core_vertices().len(), 12);
    }

    #[test]
    fn core_vertices_have_degree_m() {
        let h = StarHoneycomb::build(7, 1, 2).unwrap();
        for v in h.skeleton.core_vertices() {
            assert_eq!(h.skeleton.degree(v), 7);
        }
    }

    #[test]
    fn star_edges_join_link_vertices_two_apart() {
        let h = StarHoneycomb::build(7, 1, 2).unwrap();
        let base = &h.base.skeleton;
        for (a, b) in h.skeleton.edges() {
            let (x, y) = (h.base_vertex[a], h.base_vertex[b]);
            assert!(!base.has_edge(x, y));
            assert!(base.adj[x].iter().any(|&w| base.has_edge(w, y)));
        }
    }

    #[test]
    fn rejects_even_or_small() {
        assert!(star_honeycomb_skeleton(6, 1).is_err());
        assert!(star_honeycomb_skeleton(3, 1).is_err());
    }
}
