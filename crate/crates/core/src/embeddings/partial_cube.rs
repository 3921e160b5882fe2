//! Recognition of partial cubes by the Djoković–Winkler relation.
//!
//! Edges `uv` and `xy` are related when `d(u,x) + d(v,y) != d(u,y) + d(v,x)`.
//! A connected graph is a partial cube exactly when it is bipartite and the
//! relation is transitive; its classes are then the coordinates.

use super::{verified, Embedding, EmbeddingError, Label, Result};
use crate::metrics::apsp;
use crate::skeletons::Skeleton;

#[derive(Debug, Clone)]
pub enum PartialCube {
    /// Scale-1 embedding with one coordinate per class; `classes[c]` lists the
    /// edges of class `c`.
    Embedding { embedding: Embedding, classes: Vec<Vec<(usize, usize)>> },
    NotPartialCube(String),
}

impl PartialCube {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            PartialCube::Embedding { embedding, .. } => Some(embedding),
            PartialCube::NotPartialCube(_) => None,
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn partial_cube(g: &Skeleton) -> Result<PartialCube> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    if !g.is_bipartite() {
        return Ok(PartialCube::NotPartialCube("graph is not bipartite".into()));
    }
    let d = apsp(g);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let dd = |a: usize, b: usize| d.get(a, b) as i32;
    let related = |e: (usize, usize), f: (usize, usize)| dd(e.0, f.0) + dd(e.1, f.1) != dd(e.0, f.1) + dd(e.1, f.0);
    let m = edges.len();
    let mut parent: Vec<usize> = (0..m).collect();
    for i in 0..m {
        for j in i + 1..m {
            if related(edges[i], edges[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        let r = find(&mut parent, i);
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_of[r]].push(i);
    }
    for class in &classes {
        for (x, &i) in class.iter().enumerate() {
            for &j in &class[x + 1..] {
                if !related(edges[i], edges[j]) {
                    return Ok(PartialCube::NotPartialCube(format!(
                        "relation is not transitive: edges {:?} and {:?} share a class but are unrelated",
                        edges[i], edges[j]
                    )));
                }
            }
        }
    }
    let mut labels = vec![Label::repeat(false, classes.len()); g.n];
    for (c, class) in classes.iter().enumerate() {
        let (u, v) = edges[class[0]];
        for (w, label) in labels.iter_mut().enumerate() {
            if d.get(w, v) < d.get(w, u) {
                label.set(c, true);
            }
        }
    }
    let embedding = verified(g, Embedding { scale: 1, dim: classes.len(), labels }, false)?;
    let classes = classes.into_iter().map(|c| c.into_iter().map(|i| edges[i]).collect()).collect();
    Ok(PartialCube::Embedding { embedding, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeletons::{complete, cycle, hypercube};

    #[test]
    fn hypercube_is_partial_cube() {
        let r = partial_cube(&hypercube(4).unwrap()).unwrap();
        assert_eq!(r.embedding().unwrap().dim, 4);
    }

    #[test]
    fn even_cycle_dimension() {
        let r = partial_cube(&cycle(10).unwrap()).unwrap();
        assert_eq!(r.embedding().unwrap().dim, 5);
    }

    #[test]
    fn rejections() {
        let k23 = Skeleton::from_edges("K2,3", 5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(matches!(partial_cube(&k23).unwrap(), PartialCube::NotPartialCube(_)));
        assert!(matches!(partial_cube(&complete(3).unwrap()).unwrap(), PartialCube::NotPartialCube(_)));
    }
}
