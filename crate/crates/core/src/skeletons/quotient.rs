use std::collections::VecDeque;

use super::{Patch, Result, Skeleton, SkeletonError};

fn eccentric_vertices(g: &Skeleton, s: usize) -> (usize, Vec<usize>) {
    let mut dist = vec![usize::MAX; g.n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in &g.adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let ecc = dist.iter().copied().max().unwrap_or(0);
    (ecc, (0..g.n).filter(|&v| dist[v] == ecc).collect())
}

/// The fixed-point-free involution sending each vertex to its unique vertex at
/// diametral distance, if it exists and is an automorphism.
pub fn antipodal_pairing(g: &Skeleton) -> Result<Vec<usize>> {
    if !g.is_connected() || g.n < 2 {
        return Err(SkeletonError::NoAntipodalPairing("graph must be connected with at least two vertices".into()));
    }
    let diam = (0..g.n).map(|v| eccentric_vertices(g, v).0).max().unwrap();
    let mut sigma = Vec::with_capacity(g.n);
    for v in 0..g.n {
        let (ecc, far) = eccentric_vertices(g, v);
        if ecc != diam || far.len() != 1 {
            return Err(SkeletonError::NoAntipodalPairing(format!("vertex {v} has {} vertices at distance {diam}", if ecc == diam { far.len() } else { 0 })));
        }
        sigma.push(far[0]);
    }
    for v in 0..g.n {
        if sigma[sigma[v]] != v || sigma[v] == v {
            return Err(SkeletonError::NoAntipodalPairing("pairing is not a fixed-point-free involution".into()));
        }
    }
    if g.edges().any(|(u, v)| !g.has_edge(sigma[u], sigma[v])) {
        return Err(SkeletonError::NoAntipodalPairing("pairing is not an automorphism".into()));
    }
    Ok(sigma)
}

/// Identifies antipodal pairs; class `i` is the pair whose smaller vertex is the
/// i-th smallest representative.
pub fn antipodal_quotient(patch: &Patch) -> Result<Skeleton> {
    let g = &patch.skeleton;
    let sigma = antipodal_pairing(g)?;
    let reps: Vec<usize> = (0..g.n).filter(|&v| v < sigma[v]).collect();
    let mut class = vec![0; g.n];
    for (i, &r) in reps.iter().enumerate() {
        class[r] = i;
        class[sigma[r]] = i;
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (class[u], class[v])).filter(|(a, b)| a != b).collect();
    Ok(Skeleton::from_edges(format!("{}/antipodal", g.name), reps.len(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schlafli::SchlafliSymbol;
    use crate::skeletons::{complete, cycle, petersen, platonic};

    fn solid(s: &str) -> Patch {
        platonic(&SchlafliSymbol::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn quotients() {
        assert!(antipodal_quotient(&solid("{4,3}")).unwrap().is_isomorphic(&complete(4).unwrap()));
        assert!(antipodal_quotient(&solid("{3,5}")).unwrap().is_isomorphic(&complete(6).unwrap()));
        assert!(antipodal_quotient(&solid("{5,3}")).unwrap().is_isomorphic(&petersen()));
    }

    #[test]
    fn pairing_is_involutive_automorphism() {
        let ico = solid("{3,5}");
        let sigma = antipodal_pairing(&ico.skeleton).unwrap();
        assert!((0..12).all(|v| sigma[sigma[v]] == v && sigma[v] != v));
    }

    #[test]
    fn no_pairing() {
        assert!(antipodal_pairing(&solid("{3,3}").skeleton).is_err());
        assert!(antipodal_pairing(&cycle(5).unwrap()).is_err());
        assert!(antipodal_pairing(&cycle(6).unwrap()).is_ok());
    }
}
