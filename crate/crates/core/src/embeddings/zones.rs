//! Alternated zones of planar patches.
//!
//! Every edge carries `scale` tokens, each a crossing point of one zone. In a
//! face of even length `2k` a zone leaves through the opposite edge `i + k`.
//! At scale 2 an edge's tokens are tagged `R` and `L`, and the tags are shared
//! by both faces on the edge. Walking a face as edges `e_0, ..., e_{p-1}`, the
//! `R` token of `e_i` is joined to the `L` token of `e_{i+k}`, `k = floor(p/2)`.
//! In an odd face the two tokens of an edge thus leave through the two nearly
//! opposite edges. Zones become coordinates and labels are crossing parities
//! from vertex 0.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{verified, Embedding, EmbeddingError, Label, Result};
use crate::skeletons::Patch;
use crate::embeddings::CutDecomposition;

#[derive(Debug, Clone)]
pub struct ZoneEmbedding {
    pub embedding: Embedding,
    pub decomposition: CutDecomposition,
    /// Number of zones traced, including those constant on the patch.
    pub zone_count: usize,
    /// Edges crossed by the zone behind each output coordinate.
    pub zone_edges: Vec<Vec<(usize, usize)>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    if a != b {
        parent[a.max(b)] = a.min(b);
    }
}

/// Traces zones on `patch` at scale 1 (all faces even) or 2, and labels the
/// vertices by them. Failure says nothing about embeddability.
pub fn zone_embed(patch: &Patch, scale: u32) -> Result<ZoneEmbedding> {
    let g = &patch.skeleton;
    let fail = |msg: String| Err(EmbeddingError::ZoneFailure(msg));
    if scale != 1 && scale != 2 {
        return fail(format!("zone tracing supports scale 1 or 2, not {scale}"));
    }
    if patch.faces().is_empty() {
        return fail("patch has no faces".into());
    }
    if scale == 1 {
        if let Some(f) = patch.faces().iter().find(|f| f.len() % 2 == 1) {
            return fail(format!("odd face of length {} needs scale 2", f.len()));
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let s = scale as usize;
    // Token `s * e + t`; at scale 2, `t = 1` is the `R` token.
    let token = |a: usize, b: usize, right: bool| -> Option<usize> {
        let e = *index.get(&(a.min(b), a.max(b)))?;
        Some(if s == 1 { e } else { 2 * e + right as usize })
    };
    let mut parent: Vec<usize> = (0..s * edges.len()).collect();
    for f in patch.faces() {
        let p = f.len();
        let k = p / 2;
        let edge = |i: usize| (f[i % p], f[(i + 1) % p]);
        for i in 0..p {
            let (a, b) = edge(i);
            let (c, d) = edge(i + k);
            let (Some(right), Some(left)) = (token(a, b, true), token(c, d, false)) else {
                return fail(format!("face {f:?} uses a missing edge"));
            };
            union(&mut parent, right, left);
        }
    }
    let mut zone_of = vec![usize::MAX; parent.len()];
    let mut zone_count = 0;
    for t in 0..parent.len() {
        let r = find(&mut parent, t);
        if zone_of[r] == usize::MAX {
            zone_of[r] = zone_count;
            zone_count += 1;
        }
        zone_of[t] = zone_of[r];
    }
    if s == 2 {
        if let Some(e) = (0..edges.len()).find(|&e| zone_of[2 * e] == zone_of[2 * e + 1]) {
            return fail(format!("a zone crosses edge {:?} twice", edges[e]));
        }
    }
    let crossing = |a: usize, b: usize| -> Vec<usize> {
        let e = index[&(a.min(b), a.max(b))];
        (0..s).map(|t| zone_of[s * e + t]).collect()
    };
    let mut labels: Vec<Option<Label>> = vec![None; g.n];
    labels[0] = Some(Label::repeat(false, zone_count));
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in &g.adj[u] {
            if labels[v].is_none() {
                let mut l = labels[u].clone().unwrap();
                for z in crossing(u, v) {
                    let bit = !l[z];
                    l.set(z, bit);
                }
                labels[v] = Some(l);
                queue.push_back(v);
            }
        }
    }
    let labels: Vec<Label> = labels.into_iter().collect::<Option<_>>().ok_or(EmbeddingError::Disconnected)?;
    let used: Vec<usize> = (0..zone_count).filter(|&z| labels.iter().any(|l| l[z])).collect();
    let labels: Vec<Label> = labels.iter().map(|l| used.iter().map(|&z| l[z]).collect()).collect();
    let embedding = Embedding { scale, dim: used.len(), labels };
    let embedding = match verified(g, embedding, g.core.is_some()) {
        Ok(e) => e,
        Err(EmbeddingError::Unverified { u, v }) => {
            return fail(format!("zone labels fail at ({u}, {v})"));
        }
        Err(e) => return Err(e),
    };
    let mut zone_edges = vec![Vec::new(); zone_count];
    for (e, &(a, b)) in edges.iter().enumerate() {
        for t in 0..s {
            zone_edges[zone_of[s * e + t]].push((a, b));
        }
    }
    let zone_edges = used.iter().map(|&z| std::mem::take(&mut zone_edges[z])).collect();
    let decomposition = embedding.cuts();
    Ok(ZoneEmbedding { embedding, decomposition, zone_count, zone_edges })
}

/// Counts parallel classes among `edge_sets` in a euclidean patch.
///
/// Half-edge directions are developed as multiples of `pi/q` from the rotation
/// system: consecutive neighbours differ by 2, reversal adds `q`. An edge's
/// class is its direction modulo `q`; each set is keyed by the classes it
/// meets. Fails if the development is inconsistent, as in hyperbolic patches.
pub fn direction_families(patch: &Patch, edge_sets: &[Vec<(usize, usize)>]) -> Result<usize> {
    let g = &patch.skeleton;
    let q = patch.rotation.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut faces_at = vec![0; g.n];
    for f in patch.faces() {
        for &v in f {
            faces_at[v] += 1;
        }
    }
    let complete = |v: usize| patch.rotation[v].len() == q && g.degree(v) == q && faces_at[v] == q;
    if q == 0 || !complete(0) {
        return Err(EmbeddingError::ZoneFailure("base vertex is not complete".into()));
    }
    let m = 2 * q as i64;
    let mut dir: HashMap<(usize, usize), i64> = HashMap::new();
    let mut seen = vec![false; g.n];
    let mut queue = VecDeque::new();
    let inconsistent = || EmbeddingError::ZoneFailure("directions do not develop consistently".into());
    let spread = |v: usize, at: usize, value: i64, dir: &mut HashMap<(usize, usize), i64>| -> bool {
        let rot = &patch.rotation[v];
        let pos = rot.iter().position(|&w| w == at).unwrap();
        for (j, &w) in rot.iter().enumerate() {
            let d = (value + 2 * (j as i64 - pos as i64)).rem_euclid(m);
            if *dir.entry((v, w)).or_insert(d) != d {
                return false;
            }
        }
        true
    };
    spread(0, patch.rotation[0][0], 0, &mut dir);
    seen[0] = true;
    queue.push_back(0);
    while let Some(u) = queue.pop_front() {
        for &v in &patch.rotation[u] {
            let back = (dir[&(u, v)] + q as i64).rem_euclid(m);
            if *dir.entry((v, u)).or_insert(back) != back {
                return Err(inconsistent());
            }
            if complete(v) {
                if !spread(v, u, back, &mut dir) {
                    return Err(inconsistent());
                }
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut families: BTreeSet<Vec<i64>> = BTreeSet::new();
    for set in edge_sets {
        let classes: BTreeSet<i64> =
            set.iter().filter_map(|&(a, b)| dir.get(&(a, b)).map(|d| d.rem_euclid(q as i64))).collect();
        if !classes.is_empty() {
            families.insert(classes.into_iter().collect());
        }
    }
    Ok(families.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schlafli::SchlafliSymbol;
    use crate::skeletons::{platonic, tiling_patch, TilingOptions};

    fn tiling(s: &str, r: usize, m: usize) -> Patch {
        tiling_patch(&SchlafliSymbol::parse(s).unwrap(), TilingOptions::new(r, m)).unwrap()
    }

    #[test]
    fn square_grid_zones_are_lines() {
        let z = zone_embed(&tiling("{4,4}", 3, 4), 1).unwrap();
        assert_eq!(z.embedding.scale, 1);
        let patch = tiling("{4,4}", 3, 4);
        assert_eq!(direction_families(&patch, &z.zone_edges).unwrap(), 2);
    }

    #[test]
    fn platonic_zones() {
        let cube = platonic(&SchlafliSymbol::parse("{4,3}").unwrap()).unwrap();
        assert_eq!(zone_embed(&cube, 1).unwrap().embedding.dim, 3);
        let dodeca = platonic(&SchlafliSymbol::parse("{5,3}").unwrap()).unwrap();
        let z = zone_embed(&dodeca, 2).unwrap();
        assert_eq!((z.embedding.scale, z.embedding.dim), (2, 10));
        let ico = platonic(&SchlafliSymbol::parse("{3,5}").unwrap()).unwrap();
        let z = zone_embed(&ico, 2).unwrap();
        assert_eq!(z.embedding.dim, 6);
    }

    #[test]
    fn odd_faces_need_scale_two() {
        let dodeca = platonic(&SchlafliSymbol::parse("{5,3}").unwrap()).unwrap();
        assert!(matches!(zone_embed(&dodeca, 1), Err(EmbeddingError::ZoneFailure(_))));
    }

    #[test]
    fn hyperbolic_directions_fail() {
        let p = tiling("{7,3}", 3, 4);
        let sets = vec![p.skeleton.edges().collect::<Vec<_>>()];
        assert!(direction_families(&p, &sets).is_err());
    }
}
