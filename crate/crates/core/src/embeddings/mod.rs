//! Scale embeddings of graphs into hypercubes.
//!
//! An [`Embedding`] assigns every vertex a binary label of length `dim` such
//! that `scale * d(u,v)` equals the Hamming distance of the labels. Every
//! constructor in this module runs its output through [`verify`].

mod arcs;
mod catalog;
mod cutcone;
mod partial_cube;
mod remark4;
mod zones;

use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

use crate::metrics::{distances_from, INF};
use crate::skeletons::{Skeleton, SkeletonError};

pub use arcs::balanced_arcs_check;
pub use catalog::{catalog_embedding, catalog_names, CatalogItem};
pub use cutcone::{cutcone_decompose, exact_cut_cover, CutSearch, DEFAULT_N_MAX};
pub use partial_cube::{partial_cube, PartialCube};
pub use remark4::{remark4, two_embeddings_of_simplex, Remark4Params, SIMPLEX_SEARCH_CAP};
pub use zones::{direction_families, zone_embed, ZoneEmbedding};

pub type Label = BitVec<u64, Lsb0>;

#[derive(Debug, thiserror::Error)]
pub enum EmbeddingError {
    #[error("{got} labels for {expected} vertices")]
    LabelCount { expected: usize, got: usize },
    #[error("label of vertex {vertex} has length {got}, expected {expected}")]
    LabelLength { vertex: usize, expected: usize, got: usize },
    #[error("malformed label {0:?}")]
    BadLabel(String),
    #[error("graph has {n} vertices; the exact search is limited to {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("cycle is not admissible: {0}")]
    BadCycle(String),
    #[error("unknown catalog entry {0}")]
    UnknownName(String),
    #[error("construction failed verification at ({u}, {v})")]
    Unverified { u: usize, v: usize },
    #[error("search budget exhausted")]
    Budget,
    #[error("zone tracing failed: {0}")]
    ZoneFailure(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = EmbeddingError> = std::result::Result<T, E>;

fn hamming(a: &Label, b: &Label) -> usize {
    let len = a.len().min(b.len());
    let (wa, wb) = (a.as_raw_slice(), b.as_raw_slice());
    let full = len / 64;
    let mut total: usize = (0..full).map(|i| (wa[i] ^ wb[i]).count_ones() as usize).sum();
    if len % 64 != 0 {
        let mask = (1u64 << (len % 64)) - 1;
        total += ((wa[full] ^ wb[full]) & mask).count_ones() as usize;
    }
    total
}

/// Labels of a scale embedding; `labels[v]` has length `dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub scale: u32,
    pub dim: usize,
    pub labels: Vec<Label>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingJson {
    scale: u32,
    dim: usize,
    labels: Vec<String>,
}

pub fn label_from_str(s: &str) -> Result<Label> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(EmbeddingError::BadLabel(s.to_string())),
        })
        .collect()
}

pub fn label_to_string(l: &Label) -> String {
    l.iter().map(|b| if *b { '1' } else { '0' }).collect()
}

impl Embedding {
    /// Builds an embedding from label strings such as `"0110"`.
    pub fn from_strings(scale: u32, labels: &[&str]) -> Result<Self> {
        let labels: Vec<Label> = labels.iter().map(|s| label_from_str(s)).collect::<Result<_>>()?;
        let dim = labels.first().map_or(0, |l| l.len());
        let e = Embedding { scale, dim, labels };
        e.check_shape()?;
        Ok(e)
    }

    fn check_shape(&self) -> Result<()> {
        for (v, l) in self.labels.iter().enumerate() {
            if l.len() != self.dim {
                return Err(EmbeddingError::LabelLength { vertex: v, expected: self.dim, got: l.len() });
            }
        }
        Ok(())
    }

    pub fn hamming(&self, u: usize, v: usize) -> usize {
        hamming(&self.labels[u], &self.labels[v])
    }

    /// Whether every label has even weight, so the image lies in the half-cube.
    pub fn is_even(&self) -> bool {
        self.labels.iter().all(|l| l.count_ones() % 2 == 0)
    }

    pub fn to_json(&self) -> String {
        let j = EmbeddingJson { scale: self.scale, dim: self.dim, labels: self.labels.iter().map(label_to_string).collect() };
        serde_json::to_string(&j).expect("embedding serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: EmbeddingJson = serde_json::from_str(text)?;
        let labels: Vec<Label> = j.labels.iter().map(|s| label_from_str(s)).collect::<Result<_>>()?;
        let e = Embedding { scale: j.scale, dim: j.dim, labels };
        e.check_shape()?;
        Ok(e)
    }

    /// One coordinate per unit of cut multiplicity; bit set on the cut's side.
    pub fn from_cuts(n: usize, scale: u32, cuts: &[Cut]) -> Self {
        let dim = cuts.iter().map(|c| c.mult as usize).sum();
        let mut labels = vec![Label::repeat(false, dim); n];
        let mut col = 0;
        for cut in cuts {
            for _ in 0..cut.mult {
                for &v in &cut.side {
                    labels[v].set(col, true);
                }
                col += 1;
            }
        }
        Embedding { scale, dim, labels }
    }

    /// Distinct coordinate cuts with multiplicities, sides normalised to avoid
    /// vertex 0.
    pub fn cuts(&self) -> CutDecomposition {
        let n = self.labels.len();
        let mut sides: Vec<Vec<usize>> = (0..self.dim)
            .map(|c| {
                let flip = n > 0 && self.labels[0][c];
                (0..n).filter(|&v| self.labels[v][c] != flip).collect::<Vec<usize>>()
            })
            .filter(|s: &Vec<usize>| !s.is_empty())
            .collect();
        sides.sort();
        let mut cuts: Vec<Cut> = Vec::new();
        for s in sides {
            match cuts.last_mut() {
                Some(last) if last.side == s => last.mult += 1,
                _ => cuts.push(Cut { side: s, mult: 1 }),
            }
        }
        CutDecomposition { scale: self.scale, cuts }
    }
}

/// A cut `(side, complement)` used `mult` times.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cut {
    pub side: Vec<usize>,
    pub mult: u32,
}

/// A multiset of cuts whose weighted cut semimetrics sum to `scale * d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutDecomposition {
    pub scale: u32,
    pub cuts: Vec<Cut>,
}

impl CutDecomposition {
    pub fn dimension(&self) -> usize {
        self.cuts.iter().map(|c| c.mult as usize).sum()
    }

    pub fn to_embedding(&self, n: usize) -> Embedding {
        Embedding::from_cuts(n, self.scale, &self.cuts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Valid,
    /// First pair (in order of `u`, then `v`) where `scale * d != hamming`.
    Invalid { u: usize, v: usize, distance: u16, hamming: usize },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

/// Checks `scale * d(u,v) = hamming(u,v)` on all pairs, or on pairs of core
/// vertices when `restrict_to_core` is set.
pub fn verify(g: &Skeleton, e: &Embedding, restrict_to_core: bool) -> Result<Verification> {
    if e.labels.len() != g.n {
        return Err(EmbeddingError::LabelCount { expected: g.n, got: e.labels.len() });
    }
    e.check_shape()?;
    let sources: Vec<usize> = if restrict_to_core { g.core_vertices() } else { (0..g.n).collect() };
    let rows = distances_from(g, &sources);
    for (i, &u) in sources.iter().enumerate() {
        for &v in &sources[i + 1..] {
            let d = rows[i][v];
            let h = e.hamming(u, v);
            if d == INF || e.scale as usize * d as usize != h {
                return Ok(Verification::Invalid { u, v, distance: d, hamming: h });
            }
        }
    }
    Ok(Verification::Valid)
}

pub(crate) fn verified(g: &Skeleton, e: Embedding, restrict_to_core: bool) -> Result<Embedding> {
    match verify(g, &e, restrict_to_core)? {
        Verification::Valid => Ok(e),
        Verification::Invalid { u, v, .. } => Err(EmbeddingError::Unverified { u, v }),
    }
}

/// Columns after translating every label by the label of vertex 0 and
/// dropping all-zero columns, sorted.
fn normal_columns(e: &Embedding) -> Vec<Vec<bool>> {
    let n = e.labels.len();
    let mut cols: Vec<Vec<bool>> = (0..e.dim)
        .map(|c| (0..n).map(|v| e.labels[v][c] != e.labels[0][c]).collect::<Vec<bool>>())
        .filter(|col| col.iter().any(|&b| b))
        .collect();
    cols.sort();
    cols
}

/// Equality up to coordinate permutation, per-coordinate complementation and
/// translation, after dropping constant coordinates.
pub fn equivalent(a: &Embedding, b: &Embedding) -> bool {
    a.scale == b.scale && a.labels.len() == b.labels.len() && (a.labels.is_empty() || normal_columns(a) == normal_columns(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeletons::{complete, hypercube};

    fn identity_cube(m: usize) -> Embedding {
        let labels = (0..1usize << m).map(|x| (0..m).map(|b| x >> b & 1 == 1).collect()).collect();
        Embedding { scale: 1, dim: m, labels }
    }

    #[test]
    fn cube_identity_is_valid() {
        let g = hypercube(3).unwrap();
        assert_eq!(verify(&g, &identity_cube(3), false).unwrap(), Verification::Valid);
    }

    #[test]
    fn flipped_bit_is_caught() {
        let g = hypercube(3).unwrap();
        let mut e = identity_cube(3);
        e.labels[5].set(0, false);
        assert!(matches!(verify(&g, &e, false).unwrap(), Verification::Invalid { .. }));
    }

    #[test]
    fn shape_errors() {
        let g = complete(3).unwrap();
        let e = Embedding::from_strings(2, &["00", "11"]).unwrap();
        assert!(matches!(verify(&g, &e, false), Err(EmbeddingError::LabelCount { .. })));
        assert!(Embedding::from_strings(2, &["00", "1"]).is_err());
        assert!(Embedding::from_strings(2, &["0x"]).is_err());
    }

    #[test]
    fn json_roundtrip_and_cuts() {
        let e = Embedding::from_strings(2, &["000", "110", "101", "011"]).unwrap();
        assert_eq!(e.to_json(), r#"{"scale":2,"dim":3,"labels":["000","110","101","011"]}"#);
        assert_eq!(Embedding::from_json(&e.to_json()).unwrap(), e);
        let d = e.cuts();
        assert_eq!(d.dimension(), 3);
        assert!(equivalent(&d.to_embedding(4), &e));
    }

    #[test]
    fn equivalence_ignores_symmetries() {
        let a = Embedding::from_strings(2, &["000", "110", "101", "011"]).unwrap();
        let b = Embedding::from_strings(2, &["1100", "0000", "0110", "1010"]).unwrap();
        let c = Embedding::from_strings(2, &["1000", "0100", "0010", "0001"]).unwrap();
        assert!(equivalent(&a, &b));
        assert!(!equivalent(&a, &c));
        let perm = Embedding::from_strings(2, &["100", "010", "001", "111"]).unwrap();
        assert!(equivalent(&a, &perm));
    }
}
