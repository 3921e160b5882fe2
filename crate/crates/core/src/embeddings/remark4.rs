//! Minimal and extremal scale embeddings of the simplex skeleton `K_{n+1}`.
//!
//! Unit vectors give `K_{n+1}` at scale 2 in `n + 1` coordinates. Balanced cuts
//! give the smallest ratio of dimension to scale, `m_n`, which forces a scale
//! of at least `λ_n`.

use num_rational::Ratio;
use serde::Serialize;

use super::{exact_cut_cover, verified, Cut, Embedding, EmbeddingError, Label, Result};
use crate::skeletons::complete;

/// Largest `n` for which [`two_embeddings_of_simplex`] runs its cut search.
pub const SIMPLEX_SEARCH_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Remark4Params {
    pub n: usize,
    /// Least ratio dimension/scale over embeddings of `K_{n+1}`.
    #[serde(serialize_with = "ratio_string")]
    pub m_n: Ratio<u64>,
    /// Least even scale making `λ_n * m_n` integral.
    pub lambda_n: u64,
    /// `λ_n * m_n`.
    pub dimension: u64,
    /// Lower bound `2 * ceil(n / 4)` on the scale of the cross-polytope `β_n`.
    pub mu_lower: u64,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn remark4(n: usize) -> Result<Remark4Params> {
    if n < 3 {
        return Err(EmbeddingError::InvalidParameter(format!("n must be at least 3, got {n}")));
    }
    let n64 = n as u64;
    let m_n = if n % 2 == 1 { Ratio::new(2 * n64, n64 + 1) } else { Ratio::new(2 * n64 + 2, n64 + 2) };
    let denom = *m_n.denom();
    let lambda_n = if denom % 2 == 0 { denom } else { 2 * denom };
    let dimension = (m_n * lambda_n).to_integer();
    Ok(Remark4Params { n, m_n, lambda_n, dimension, mu_lower: 2 * n64.div_ceil(4) })
}

/// The unit-vector embedding of `K_{n+1}` and one attaining `(λ_n, λ_n m_n)`,
/// built from balanced cuts.
pub fn two_embeddings_of_simplex(n: usize) -> Result<(Embedding, Embedding)> {
    let params = remark4(n)?;
    if n > SIMPLEX_SEARCH_CAP {
        return Err(EmbeddingError::TooLarge { n, max: SIMPLEX_SEARCH_CAP });
    }
    let k = n + 1;
    let g = complete(k)?;
    let unit = Embedding {
        scale: 2,
        dim: k,
        labels: (0..k).map(|v| (0..k).map(|c| c == v).collect::<Label>()).collect(),
    };
    let unit = verified(&g, unit, false)?;
    let balanced: Vec<u64> = (0..1u64 << k)
        .filter(|m| m & 1 == 1 && (m.count_ones() as usize == k / 2 || m.count_ones() as usize == k.div_ceil(2)))
        .collect();
    let lambda = params.lambda_n as u32;
    let cover = exact_cut_cover(k, &balanced, |_, _| lambda, Some(params.dimension as u32))?
        .ok_or_else(|| EmbeddingError::InvalidParameter(format!("no balanced cut cover for n = {n}")))?;
    let cuts: Vec<Cut> = cover.into_iter().map(|(m, mult)| Cut { side: (0..k).filter(|&v| m >> v & 1 == 1).collect(), mult }).collect();
    let extremal = verified(&g, Embedding::from_cuts(k, lambda, &cuts), false)?;
    Ok((unit, extremal))
}
