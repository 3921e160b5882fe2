//! Named graphs with known hypercube embeddings.

use super::{cutcone_decompose, verified, zone_embed, CutSearch, Embedding, EmbeddingError, Label, Result};
use crate::schlafli::SchlafliSymbol;
use crate::skeletons::{cocktail_party, complete, cycle_product, hypercube, petersen, platonic, Skeleton};

#[derive(Debug, Clone)]
pub struct CatalogItem {
    pub name: String,
    pub graph: Skeleton,
    pub embedding: Embedding,
}

/// Names accepted by [`catalog_embedding`], besides the `alphaN`, `gammaN`, `KN`
/// and `CaxCb` families.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "alpha3",
        "alpha3-h4",
        "alpha4",
        "alpha4-h10",
        "alpha5",
        "beta3",
        "beta5",
        "gamma3",
        "gamma4",
        "tetrahedron",
        "cube",
        "octahedron",
        "icosahedron",
        "dodecahedron",
        "petersen",
        "K4",
        "K6",
        "C3xC3",
        "C3xC4",
        "C4xC4",
        "C5xC5",
        "C6xC4",
    ]
}

fn unit_vectors(n: usize) -> Vec<Label> {
    (0..n).map(|v| (0..n).map(|c| c == v).collect()).collect()
}

fn words(list: &[&str]) -> Vec<Label> {
    list.iter().map(|w| w.chars().map(|c| c == '1').collect()).collect()
}

fn with_complements(base: &[&str]) -> Vec<Label> {
    words(base).into_iter().flat_map(|w| [w.clone(), !w]).collect()
}

/// Columns of a cycle `C_len`: half-turn indicators at scale 1 when `len` is
/// even, cyclic intervals of `k` at scale 2 when `len = 2k + 1`.
fn cycle_columns(len: usize) -> (u32, Vec<Vec<bool>>) {
    let k = len / 2;
    let cols = if len % 2 == 0 { k } else { len };
    let columns = (0..cols).map(|c| (0..len).map(|i| (i + len - c) % len < k).collect()).collect();
    (if len % 2 == 0 { 1 } else { 2 }, columns)
}

fn product_embedding(a: usize, b: usize) -> Result<(Skeleton, Embedding)> {
    let g = cycle_product(a, b)?;
    let (sa, ca) = cycle_columns(a);
    let (sb, cb) = cycle_columns(b);
    let scale = sa.max(sb);
    let rep = |s: u32| (scale / s) as usize;
    let mut labels = vec![Label::new(); a * b];
    for i in 0..a {
        for j in 0..b {
            let l = &mut labels[i * b + j];
            for col in &ca {
                for _ in 0..rep(sa) {
                    l.push(col[i]);
                }
            }
            for col in &cb {
                for _ in 0..rep(sb) {
                    l.push(col[j]);
                }
            }
        }
    }
    let dim = labels[0].len();
    Ok((g, Embedding { scale, dim, labels }))
}

fn platonic_skeleton(symbol: &str) -> Result<Skeleton> {
    let sym = SchlafliSymbol::parse(symbol).map_err(|e| EmbeddingError::InvalidParameter(e.to_string()))?;
    Ok(platonic(&sym)?.skeleton)
}

fn by_cuts(g: &Skeleton) -> Result<Embedding> {
    match cutcone_decompose(g, 2, g.n)? {
        CutSearch::Found(d) => Ok(d.to_embedding(g.n)),
        CutSearch::NoneExists { .. } => Err(EmbeddingError::InvalidParameter(format!("{} has no scale-2 cuts", g.name))),
    }
}

/// The stored or computed embedding of a named graph, verified on all pairs.
pub fn catalog_embedding(name: &str) -> Result<CatalogItem> {
    let unknown = || EmbeddingError::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let canonical = match name {
        "tetrahedron" | "K4" => "alpha3-h4",
        "cube" => "gamma3",
        "octahedron" => "beta3",
        "K6" => "alpha5",
        other => other,
    };
    let (graph, embedding) = match canonical {
        "alpha3" => (complete(4)?, Embedding { scale: 2, dim: 3, labels: words(&["000", "110", "101", "011"]) }),
        "alpha3-h4" => (complete(4)?, Embedding { scale: 2, dim: 4, labels: unit_vectors(4) }),
        "alpha4-h10" => {
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
            let labels = (0..5).map(|v| pairs.iter().map(|&(a, b)| v == a || v == b).collect()).collect();
            (complete(5)?, Embedding { scale: 6, dim: 10, labels })
        }
        "beta3" => (cocktail_party(3)?, Embedding { scale: 2, dim: 4, labels: with_complements(&["0000", "1100", "1010"]) }),
        "beta5" => {
            let labels = with_complements(&["00000000", "11110000", "11001100", "10101010", "10010110"]);
            (cocktail_party(5)?, Embedding { scale: 4, dim: 8, labels })
        }
        "icosahedron" => {
            let g = platonic_skeleton("{3,5}")?;
            let e = by_cuts(&g)?;
            (g, e)
        }
        "petersen" => {
            let g = petersen();
            let e = by_cuts(&g)?;
            (g, e)
        }
        "dodecahedron" => {
            let sym = SchlafliSymbol::parse("{5,3}").map_err(|e| EmbeddingError::InvalidParameter(e.to_string()))?;
            let patch = platonic(&sym)?;
            let e = zone_embed(&patch, 2)?.embedding;
            (patch.skeleton, e)
        }
        other => {
            if let Some(rest) = other.strip_prefix("alpha") {
                let n = num(rest)?;
                (complete(n + 1)?, Embedding { scale: 2, dim: n + 1, labels: unit_vectors(n + 1) })
            } else if let Some(rest) = other.strip_prefix("gamma") {
                let n = num(rest)?;
                let labels = (0..1usize << n).map(|x| (0..n).map(|b| x >> b & 1 == 1).collect()).collect();
                (hypercube(n)?, Embedding { scale: 1, dim: n, labels })
            } else if let Some((a, b)) = other.strip_prefix('C').and_then(|r| r.split_once("xC")) {
                product_embedding(num(a)?, num(b)?)?
            } else if let Some(rest) = other.strip_prefix('K') {
                let n = num(rest)?;
                (complete(n)?, Embedding { scale: 2, dim: n, labels: unit_vectors(n) })
            } else {
                return Err(unknown());
            }
        }
    };
    let embedding = verified(&graph, embedding, false)?;
    Ok(CatalogItem { name: name.to_string(), graph, embedding })
}
