//! Exact decomposition of a scaled graph metric into cuts.
//!
//! A decomposition of `scale * d` only uses cuts whose two sides are convex:
//! if `w` lies on a geodesic from `u` to `v`, every cut separating `w` from
//! both ends would make `hamming(u,w) + hamming(w,v)` exceed `hamming(u,v)`.

use super::{Cut, CutDecomposition, EmbeddingError, Result};
use crate::metrics::apsp;
use crate::skeletons::Skeleton;

/// Largest graph handled by [`cutcone_decompose`] unless a caller asks for more.
pub const DEFAULT_N_MAX: usize = 12;

/// Hard ceiling; cuts are bit masks of a `u64`.
const MASK_LIMIT: usize = 24;

const NODE_BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutSearch {
    Found(CutDecomposition),
    /// The search was exhaustive over all convex cuts.
    NoneExists { canonical_cuts: u64, convex_cuts: usize },
}

impl CutSearch {
    pub fn decomposition(&self) -> Option<&CutDecomposition> {
        match self {
            CutSearch::Found(d) => Some(d),
            CutSearch::NoneExists { .. } => None,
        }
    }
}

struct Cover<'a> {
    sep: Vec<Vec<usize>>,
    by_pair: Vec<Vec<usize>>,
    residual: Vec<u32>,
    decided: Vec<bool>,
    chosen: Vec<u32>,
    total: Option<u32>,
    used: u32,
    min_sep: usize,
    max_sep: usize,
    nodes: u64,
    budget: u64,
    _cuts: &'a [u64],
}

impl Cover<'_> {
    fn cap(&self, c: usize) -> u32 {
        self.sep[c].iter().map(|&p| self.residual[p]).min().unwrap_or(0)
    }

    fn apply(&mut self, c: usize, mult: u32, add: bool) {
        for &p in &self.sep[c] {
            if add {
                self.residual[p] -= mult;
            } else {
                self.residual[p] += mult;
            }
        }
    }

    fn dfs(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(EmbeddingError::Budget);
        }
        let left: u64 = self.residual.iter().map(|&r| r as u64).sum();
        if left == 0 {
            return Ok(self.total.is_none_or(|t| t == self.used));
        }
        if let Some(t) = self.total {
            let most = self.used as u64 + left / self.min_sep as u64;
            let least = self.used as u64 + left.div_ceil(self.max_sep as u64);
            if (t as u64) > most || (t as u64) < least {
                return Ok(false);
            }
        }
        let mut pick: Option<(usize, usize)> = None;
        for p in 0..self.residual.len() {
            if self.residual[p] == 0 {
                continue;
            }
            let mut options = 0;
            let mut room = 0u64;
            for &c in &self.by_pair[p] {
                if !self.decided[c] {
                    let cap = self.cap(c);
                    if cap > 0 {
                        options += 1;
                        room += cap as u64;
                    }
                }
            }
            if room < self.residual[p] as u64 {
                return Ok(false);
            }
            if pick.is_none_or(|(_, o)| options < o) {
                pick = Some((p, options));
            }
        }
        let (p, _) = pick.expect("some pair has positive residual");
        let c = self.by_pair[p].iter().copied().find(|&c| !self.decided[c] && self.cap(c) > 0).unwrap();
        self.decided[c] = true;
        for mult in (0..=self.cap(c)).rev() {
            self.apply(c, mult, true);
            self.chosen[c] = mult;
            self.used += mult;
            let found = self.dfs()?;
            self.used -= mult;
            if found {
                return Ok(true);
            }
            self.chosen[c] = 0;
            self.apply(c, mult, false);
        }
        self.decided[c] = false;
        Ok(false)
    }
}

/// Searches for multiplicities on `cuts` (bit masks over `n` points) whose cut
/// semimetrics sum to `target(u, v)` on every pair, optionally with
/// multiplicities summing to `total`. Returns `(mask, mult)` for the cuts used.
pub fn exact_cut_cover(
    n: usize,
    cuts: &[u64],
    target: impl Fn(usize, usize) -> u32,
    total: Option<u32>,
) -> Result<Option<Vec<(u64, u32)>>> {
    let mut pairs = Vec::new();
    let mut pair_index = vec![usize::MAX; n * n];
    for u in 0..n {
        for v in u + 1..n {
            pair_index[u * n + v] = pairs.len();
            pairs.push((u, v));
        }
    }
    let sep: Vec<Vec<usize>> = cuts
        .iter()
        .map(|&m| pairs.iter().enumerate().filter(|(_, &(u, v))| (m >> u & 1) != (m >> v & 1)).map(|(i, _)| i).collect())
        .collect();
    let mut by_pair = vec![Vec::new(); pairs.len()];
    for (c, s) in sep.iter().enumerate() {
        for &p in s {
            by_pair[p].push(c);
        }
    }
    let residual: Vec<u32> = pairs.iter().map(|&(u, v)| target(u, v)).collect();
    let sizes = sep.iter().map(|s| s.len()).filter(|&l| l > 0);
    let min_sep = sizes.clone().min().unwrap_or(1);
    let max_sep = sizes.max().unwrap_or(1);
    let mut cover = Cover {
        decided: vec![false; cuts.len()],
        chosen: vec![0; cuts.len()],
        sep,
        by_pair,
        residual,
        total,
        used: 0,
        min_sep,
        max_sep,
        nodes: 0,
        budget: NODE_BUDGET,
        _cuts: cuts,
    };
    if !cover.dfs()? {
        return Ok(None);
    }
    Ok(Some(cuts.iter().zip(&cover.chosen).filter(|(_, &m)| m > 0).map(|(&c, &m)| (c, m)).collect()))
}

/// Decomposes `scale * d` of `g` into convex cuts, or proves none exists.
pub fn cutcone_decompose(g: &Skeleton, scale: u32, n_max: usize) -> Result<CutSearch> {
    let n = g.n;
    let max = n_max.min(MASK_LIMIT);
    if n > max {
        return Err(EmbeddingError::TooLarge { n, max });
    }
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    if n < 2 {
        return Ok(CutSearch::Found(CutDecomposition { scale, cuts: Vec::new() }));
    }
    let d = apsp(g);
    let mut interval = vec![0u64; n * n];
    for u in 0..n {
        for v in 0..n {
            let duv = d.get(u, v);
            interval[u * n + v] = (0..n).filter(|&w| d.get(u, w) + d.get(w, v) == duv).fold(0, |m, w| m | 1 << w);
        }
    }
    let convex = |side: u64| {
        (0..n).filter(|&u| side >> u & 1 == 1).all(|u| {
            (u + 1..n).filter(|&v| side >> v & 1 == 1).all(|v| interval[u * n + v] & !side == 0)
        })
    };
    let full = (1u64 << n) - 1;
    let canonical_cuts = (1u64 << (n - 1)) - 1;
    let cuts: Vec<u64> = (0..canonical_cuts)
        .map(|i| (i << 1) | 1)
        .filter(|&s| convex(s) && convex(full & !s))
        .collect();
    match exact_cut_cover(n, &cuts, |u, v| scale * d.get(u, v) as u32, None)? {
        Some(found) => {
            let mut cuts: Vec<Cut> = found
                .into_iter()
                .map(|(m, mult)| Cut { side: (0..n).filter(|&v| m >> v & 1 == 0).collect(), mult })
                .collect();
            cuts.sort();
            Ok(CutSearch::Found(CutDecomposition { scale, cuts }))
        }
        None => Ok(CutSearch::NoneExists { canonical_cuts, convex_cuts: cuts.len() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::verify;
    use crate::schlafli::SchlafliSymbol;
    use crate::skeletons::{cocktail_party, cycle, platonic};

    fn found(g: &Skeleton, scale: u32) -> CutDecomposition {
        match cutcone_decompose(g, scale, 16).unwrap() {
            CutSearch::Found(d) => {
                assert!(verify(g, &d.to_embedding(g.n), false).unwrap().is_valid());
                d
            }
            other => panic!("no decomposition: {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_at_scale_two() {
        let d = found(&cycle(5).unwrap(), 2);
        assert_eq!(d.dimension(), 5);
        assert!(matches!(cutcone_decompose(&cycle(5).unwrap(), 1, 12).unwrap(), CutSearch::NoneExists { .. }));
    }

    #[test]
    fn icosahedron_half_cube() {
        let ico = platonic(&SchlafliSymbol::parse("{3,5}").unwrap()).unwrap();
        assert_eq!(found(&ico.skeleton, 2).dimension(), 6);
    }

    #[test]
    fn cross_polytope_five() {
        let b5 = cocktail_party(5).unwrap();
        match cutcone_decompose(&b5, 2, 12).unwrap() {
            CutSearch::NoneExists { canonical_cuts, convex_cuts } => {
                assert_eq!(canonical_cuts, 511);
                assert_eq!(convex_cuts, 16);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(found(&b5, 4).dimension(), 8);
    }

    #[test]
    fn too_large() {
        assert!(matches!(cutcone_decompose(&cycle(13).unwrap(), 2, 12), Err(EmbeddingError::TooLarge { n: 13, max: 12 })));
    }
}
