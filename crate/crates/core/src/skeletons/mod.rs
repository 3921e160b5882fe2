//! Skeleton graphs of tilings, polytopes and honeycombs.
//!
//! A [`Skeleton`] is a finite simple graph with sorted adjacency lists and
//! optional face, core and coordinate data. Tiling windows and polyhedra that
//! carry a rotation system are wrapped in a [`Patch`].

mod families;
mod polyhedra;
mod polytope4;
mod quotient;
mod star;
mod tiling;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::schlafli::SchlafliError;

pub use families::{
    cocktail_party, complete, cycle, cycle_product, half_cube, hypercube, k5_minus_k3, lattice_ball,
    named_graph, petersen, polytope_family, pyramid, PolytopeKind,
};
pub use polyhedra::platonic;
pub use polytope4::{icosians, regular_4polytope, star_4polytope, Polytope4, STAR_4POLYTOPES};
pub use quotient::{antipodal_pairing, antipodal_quotient};
pub use star::{star_cell, star_honeycomb_skeleton, StarHoneycomb};
pub use tiling::{interior_defect, tiling_patch, TilingOptions, DEFAULT_VERTEX_CAP};

#[derive(Debug, Error)]
pub enum SkeletonError {
    #[error(transparent)]
    Symbol(#[from] SchlafliError),
    #[error("{0} is not a spherical {{p,q}} symbol")]
    NotSpherical(String),
    #[error("{0} is not a euclidean or hyperbolic {{p,q}} symbol with finite entries")]
    NotPlanarTiling(String),
    #[error("large star fraction in {0} is only meaningful for spherical representations")]
    LargeStar(String),
    #[error("vertex budget of {cap} exceeded")]
    ResourceLimit { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph name: {0}")]
    UnknownName(String),
    #[error("{0} is not a star-4-polytope")]
    NotStarPolytope(String),
    #[error("no antipodal pairing: {0}")]
    NoAntipodalPairing(String),
    #[error("malformed skeleton: {0}")]
    Malformed(String),
    #[error("internal generator error: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = SkeletonError> = std::result::Result<T, E>;

/// Finite undirected graph with optional face, core and coordinate data.
///
/// JSON field order is fixed: `name, symbol?, n, adj, core?, faces?, coords?`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skeleton {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Vec<f64>>>,
}

impl Skeleton {
    /// Builds a simple graph from an edge list; loops are rejected, duplicates collapsed.
    pub fn from_edges(name: impl Into<String>, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u},{v}) for n={n}");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Skeleton { name: name.into(), symbol: None, n, adj, core: None, faces: None, coords: None }
    }

    pub fn with_symbol(mut self, symbol: impl Into<String>) -> Self {
        self.symbol = Some(symbol.into());
        self
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Regular degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Core membership; graphs without core data are entirely core.
    pub fn is_core(&self, v: usize) -> bool {
        self.core.as_ref().is_none_or(|c| c[v])
    }

    pub fn core_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_core(v)).collect()
    }

    /// Proper 2-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = color[u] ^ 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `vertices` (in the given order); faces and coordinates are dropped.
    pub fn induced(&self, name: impl Into<String>, vertices: &[usize]) -> Skeleton {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v].iter().filter(move |&&w| index[w] != usize::MAX && index[w] > i).map(move |&w| (i, index[w]))
        });
        Skeleton::from_edges(name, vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Graph isomorphism test (VF2).
    pub fn is_isomorphic(&self, other: &Skeleton) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut db: Vec<usize> = other.adj.iter().map(Vec::len).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        petgraph::algo::is_isomorphic(&self.to_petgraph(), &other.to_petgraph())
    }

    fn to_petgraph(&self) -> petgraph::graph::UnGraph<(), ()> {
        let mut g = petgraph::graph::UnGraph::with_capacity(self.n, self.edge_count());
        for _ in 0..self.n {
            g.add_node(());
        }
        for (u, v) in self.edges() {
            g.add_edge(petgraph::graph::NodeIndex::new(u), petgraph::graph::NodeIndex::new(v), ());
        }
        g
    }

    /// Structural checks applied to graphs read from JSON.
    pub fn validate(&self) -> Result<()> {
        if self.adj.len() != self.n {
            return Err(SkeletonError::Malformed(format!("n = {} but {} adjacency lists", self.n, self.adj.len())));
        }
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(SkeletonError::Malformed(format!("adjacency of {u} is not strictly sorted")));
            }
            for &v in list {
                if v >= self.n || v == u {
                    return Err(SkeletonError::Malformed(format!("bad neighbour {v} of {u}")));
                }
                if !self.has_edge(v, u) {
                    return Err(SkeletonError::Malformed(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        if let Some(core) = &self.core {
            if core.len() != self.n {
                return Err(SkeletonError::Malformed("core flag length differs from n".into()));
            }
        }
        if let Some(coords) = &self.coords {
            if coords.len() != self.n {
                return Err(SkeletonError::Malformed("coordinate count differs from n".into()));
            }
        }
        if let Some(faces) = &self.faces {
            for f in faces {
                if f.iter().any(|&v| v >= self.n) {
                    return Err(SkeletonError::Malformed("face references unknown vertex".into()));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("skeleton serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Skeleton = serde_json::from_str(text)?;
        s.validate()?;
        Ok(s)
    }
}

/// A skeleton together with a rotation system (cyclic counter-clockwise
/// neighbour order per vertex) and counter-clockwise face cycles.
///
/// For tiling windows, vertices within `radius` of the base vertex 0 are core
/// and `margin` further rings are generated around them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Patch {
    #[serde(flatten)]
    pub skeleton: Skeleton,
    pub rotation: Vec<Vec<usize>>,
    pub radius: usize,
    pub margin: usize,
}

impl Patch {
    pub fn faces(&self) -> &[Vec<usize>] {
        self.skeleton.faces.as_deref().unwrap_or(&[])
    }

    /// Whether the rotation at `v` is a full cycle (all incident faces present).
    pub fn is_complete(&self, v: usize) -> bool {
        self.rotation[v].len() == self.skeleton.degree(v) && self.faces_at(v) == self.rotation[v].len()
    }

    fn faces_at(&self, v: usize) -> usize {
        self.faces().iter().map(|f| f.iter().filter(|&&w| w == v).count()).sum()
    }

    /// Face to the left of `u -> w` under the rotation rule, provided the rotation at
    /// every visited vertex contains the needed neighbours.
    pub fn trace_face(&self, u: usize, w: usize) -> Option<Vec<usize>> {
        let mut cycle = vec![u];
        let (mut a, mut b) = (u, w);
        for _ in 0..=self.skeleton.n {
            if b == u {
                return Some(cycle);
            }
            cycle.push(b);
            let rot = &self.rotation[b];
            let pos = rot.iter().position(|&x| x == a)?;
            let next = rot[(pos + rot.len() - 1) % rot.len()];
            a = b;
            b = next;
        }
        None
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("patch serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: Patch = serde_json::from_str(text)?;
        p.skeleton.validate()?;
        if p.rotation.len() != p.skeleton.n {
            return Err(SkeletonError::Malformed("rotation length differs from n".into()));
        }
        Ok(p)
    }
}

/// Rotates a cycle so its smallest vertex comes first, keeping orientation.
pub(crate) fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}
