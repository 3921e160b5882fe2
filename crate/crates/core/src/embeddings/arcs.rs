//! Balanced arcs on short cycles of a scale-`λ` embedding.
//!
//! Walking an edge flips `λ` coordinates; each flip is a step `(coord, sign)`.
//! On an isometric cycle of even length `2k` the steps of edge `i + k` undo
//! those of edge `i`. On an odd cycle of length `2k + 1` the undoing is split
//! evenly between edges `i + k` and `i + k + 1`.

use std::collections::BTreeSet;

use super::{Embedding, EmbeddingError, Result};
use crate::metrics::girth;
use crate::skeletons::Skeleton;

type Step = (usize, bool);

fn steps(e: &Embedding, u: usize, v: usize) -> BTreeSet<Step> {
    (0..e.dim).filter(|&c| e.labels[u][c] != e.labels[v][c]).map(|c| (c, e.labels[v][c])).collect()
}

fn negated(s: &BTreeSet<Step>) -> BTreeSet<Step> {
    s.iter().map(|&(c, b)| (c, !b)).collect()
}

/// Checks the balanced-arc pattern of `e` along `cycle`, whose length must be
/// the girth of `g` or, when the girth is even, one more.
pub fn balanced_arcs_check(g: &Skeleton, e: &Embedding, cycle: &[usize]) -> Result<bool> {
    if e.labels.len() != g.n {
        return Err(EmbeddingError::LabelCount { expected: g.n, got: e.labels.len() });
    }
    e.check_shape()?;
    let t = cycle.len();
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    let bad = |msg: String| Err(EmbeddingError::BadCycle(msg));
    if t < 3 || distinct.len() != t || cycle.iter().any(|&v| v >= g.n) {
        return bad("expected at least 3 distinct vertices of the graph".into());
    }
    if let Some(i) = (0..t).find(|&i| !g.has_edge(cycle[i], cycle[(i + 1) % t])) {
        return bad(format!("{} and {} are not adjacent", cycle[i], cycle[(i + 1) % t]));
    }
    let Some(gi) = girth(g, false) else {
        return bad("graph is acyclic".into());
    };
    if t != gi && !(gi % 2 == 0 && t == gi + 1) {
        return bad(format!("length {t} is neither the girth {gi} nor one more than an even girth"));
    }
    let lambda = e.scale as usize;
    let arcs: Vec<BTreeSet<Step>> = (0..t).map(|i| steps(e, cycle[i], cycle[(i + 1) % t])).collect();
    if arcs.iter().any(|a| a.len() != lambda) {
        return Ok(false);
    }
    let k = t / 2;
    if t % 2 == 0 {
        return Ok((0..t).all(|i| arcs[(i + k) % t] == negated(&arcs[i])));
    }
    if lambda % 2 == 1 {
        return Ok(false);
    }
    Ok((0..t).all(|i| {
        let back = negated(&arcs[i]);
        back.intersection(&arcs[(i + k) % t]).count() == lambda / 2
            && back.intersection(&arcs[(i + k + 1) % t]).count() == lambda / 2
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::{cutcone_decompose, CutSearch};
    use crate::metrics::shortest_cycle_at;
    use crate::skeletons::{cycle, hypercube, petersen};

    fn cut_embedding(g: &Skeleton, scale: u32) -> Embedding {
        match cutcone_decompose(g, scale, 12).unwrap() {
            CutSearch::Found(d) => d.to_embedding(g.n),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pentagon_and_petersen() {
        let c5 = cycle(5).unwrap();
        let e = cut_embedding(&c5, 2);
        assert!(balanced_arcs_check(&c5, &e, &[0, 1, 2, 3, 4]).unwrap());
        let p = petersen();
        let e = cut_embedding(&p, 2);
        let c = shortest_cycle_at(&p, 0).unwrap();
        assert!(balanced_arcs_check(&p, &e, &c).unwrap());
    }

    #[test]
    fn cube_squares() {
        let q = hypercube(3).unwrap();
        let e = Embedding { scale: 1, dim: 3, labels: (0..8).map(|v| (0..3).map(|b| v >> b & 1 == 1).collect()).collect() };
        let c = shortest_cycle_at(&q, 0).unwrap();
        assert!(balanced_arcs_check(&q, &e, &c).unwrap());
    }

    #[test]
    fn flipped_bit_is_detected() {
        let c5 = cycle(5).unwrap();
        let mut e = cut_embedding(&c5, 2);
        let bit = !e.labels[2][0];
        e.labels[2].set(0, bit);
        assert!(!balanced_arcs_check(&c5, &e, &[0, 1, 2, 3, 4]).unwrap());
    }

    #[test]
    fn rejects_non_cycles() {
        let c5 = cycle(5).unwrap();
        let e = cut_embedding(&c5, 2);
        assert!(matches!(balanced_arcs_check(&c5, &e, &[0, 1, 2, 4, 3]), Err(EmbeddingError::BadCycle(_))));
        assert!(matches!(balanced_arcs_check(&c5, &e, &[0, 1, 1, 2, 3]), Err(EmbeddingError::BadCycle(_))));
    }
}
