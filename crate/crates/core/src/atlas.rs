//! Embeddability status of every regular tiling and honeycomb.
//!
//! Fixed cases come from a tab-separated data file; the infinite families
//! (polygons, hyperbolic `{m,k}`, `{m,m/2}`, `{m/2,m}`, simplices,
//! cross-polytopes, cubes and cubic lattices) follow from rules.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::schlafli::{Curvature, Entry, SchlafliError, SchlafliSymbol};

/// The built-in data file.
pub const ATLAS_DATA: &str = include_str!("../data/atlas.txt");

/// Claims about skew polyhedra, kept as stated and not checked.
pub const UNVERIFIED_CLAIMS: &[&str] = &[
    "{4,6|4} embeds into Z_3",
    "{6,4|4} embeds into Z_6",
    "{6,6|3} is not 5-gonal",
];

#[derive(Debug, thiserror::Error)]
pub enum AtlasError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Symbol(#[from] SchlafliError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// A violated 5-gonal inequality.
    #[serde(rename = "5-gonal")]
    FiveGonal,
    /// A violated 7-gonal inequality.
    #[serde(rename = "7-gonal")]
    SevenGonal,
    /// Short cycles of the skeleton.
    Girth,
    /// Decided by earlier classification of the compact cases.
    Literature,
    /// Zones of a bipartite skeleton on reflection hyperplanes.
    BipartiteZone,
    /// Alternated zones through odd faces.
    AlternatedZone,
    /// A stored embedding.
    Explicit,
    /// A known family embedding.
    Family,
}

impl Evidence {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "5-gonal" => Evidence::FiveGonal,
            "7-gonal" => Evidence::SevenGonal,
            "girth" => Evidence::Girth,
            "literature" => Evidence::Literature,
            "bipartite-zone" => Evidence::BipartiteZone,
            "alternated-zone" => Evidence::AlternatedZone,
            "explicit" => Evidence::Explicit,
            "family" => Evidence::Family,
            _ => return None,
        })
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("evidence serializes");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    /// `scale` is `None` when only bounds are known.
    Embeddable { scale: Option<u32>, target: String },
    NonEmbeddable,
    OutOfCatalog,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub symbol: SchlafliSymbol,
    #[serde(flatten)]
    pub status: Status,
    pub evidence: Option<Evidence>,
    pub name: String,
    pub note: String,
}

impl AtlasRecord {
    pub fn is_embeddable(&self) -> bool {
        matches!(self.status, Status::Embeddable { .. })
    }

    pub fn scale(&self) -> Option<u32> {
        match self.status {
            Status::Embeddable { scale, .. } => scale,
            _ => None,
        }
    }

    /// One line: symbol, status, scale, target, evidence.
    pub fn summary(&self) -> String {
        let status = match &self.status {
            Status::Embeddable { scale, target } => {
                format!("embeddable scale={} target={target}", scale.map_or("?".into(), |s| s.to_string()))
            }
            Status::NonEmbeddable => "non-embeddable".into(),
            Status::OutOfCatalog => "out-of-catalog".into(),
        };
        let evidence = self.evidence.map_or(String::new(), |e| format!(" evidence={e}"));
        format!("{} {status}{evidence}", self.symbol)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Atlas {
    records: BTreeMap<SchlafliSymbol, AtlasRecord>,
}

impl Atlas {
    pub fn builtin() -> Self {
        Atlas::parse(ATLAS_DATA).expect("built-in atlas parses")
    }

    /// Reads `symbol status scale target evidence name note`, tab separated;
    /// `-` marks an empty scale or target, `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self, AtlasError> {
        let mut records = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| AtlasError::Parse { line: line_no, msg };
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            if fields.len() < 5 {
                return Err(err(format!("expected at least 5 fields, found {}", fields.len())));
            }
            let symbol = SchlafliSymbol::parse(fields[0]).map_err(|e| err(e.to_string()))?;
            let evidence = Evidence::parse(fields[4]).ok_or_else(|| err(format!("unknown evidence {:?}", fields[4])))?;
            let status = match fields[1] {
                "embeddable" => {
                    let scale = match fields[2] {
                        "-" => None,
                        s => Some(s.parse().map_err(|_| err(format!("bad scale {s:?}")))?),
                    };
                    Status::Embeddable { scale, target: fields[3].to_string() }
                }
                "non-embeddable" => Status::NonEmbeddable,
                other => return Err(err(format!("unknown status {other:?}"))),
            };
            let record = AtlasRecord {
                symbol: symbol.clone(),
                status,
                evidence: Some(evidence),
                name: fields.get(5).unwrap_or(&"").to_string(),
                note: fields.get(6).unwrap_or(&"").to_string(),
            };
            if records.insert(symbol.clone(), record).is_some() {
                return Err(err(format!("duplicate entry {symbol}")));
            }
        }
        Ok(Atlas { records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Stored records in symbol order.
    pub fn records(&self) -> impl Iterator<Item = &AtlasRecord> {
        self.records.values()
    }

    pub fn status(&self, sym: &SchlafliSymbol) -> AtlasRecord {
        if let Some(r) = self.records.get(sym) {
            return r.clone();
        }
        family_status(sym).unwrap_or_else(|| AtlasRecord {
            symbol: sym.clone(),
            status: Status::OutOfCatalog,
            evidence: None,
            name: String::new(),
            note: "not a regular tiling or honeycomb of the catalog".into(),
        })
    }
}

/// Status of `sym` in the built-in atlas.
pub fn atlas_status(sym: &SchlafliSymbol) -> AtlasRecord {
    Atlas::builtin().status(sym)
}

fn record(sym: &SchlafliSymbol, scale: Option<u32>, target: String, evidence: Evidence, name: String, note: &str) -> AtlasRecord {
    AtlasRecord {
        symbol: sym.clone(),
        status: Status::Embeddable { scale, target },
        evidence: Some(evidence),
        name,
        note: note.to_string(),
    }
}

fn family_status(sym: &SchlafliSymbol) -> Option<AtlasRecord> {
    let e = sym.entries();
    let order = |x: &Entry| x.convex_order();
    if e.len() == 2 {
        return plane_status(sym);
    }
    let all = |from: usize, to: usize, v: u64| e[from..to].iter().all(|x| order(x) == Some(v));
    let len = e.len();
    let n = len + 1;
    if all(0, len, 3) {
        return Some(record(sym, Some(2), format!("1/2 H_{}", n + 1), Evidence::Family, format!("alpha_{n}"), "not l1-rigid"));
    }
    if all(0, len - 1, 3) && order(&e[len - 1]) == Some(4) {
        let (scale, note) = if n <= 80 {
            (Some(2 * n.div_ceil(4) as u32), "minimal scale 2*ceil(n/4); not l1-rigid")
        } else {
            (None, "minimal scale between 2*ceil(n/4) and n")
        };
        let target = scale.map_or("H_m".to_string(), |s| format!("1/{s} H_{}", 2 * s));
        return Some(record(sym, scale, target, Evidence::Family, format!("beta_{n}"), note));
    }
    if order(&e[0]) == Some(4) && all(1, len, 3) {
        return Some(record(sym, Some(1), format!("H_{n}"), Evidence::Family, format!("gamma_{n}"), ""));
    }
    if order(&e[0]) == Some(4) && all(1, len - 1, 3) && order(&e[len - 1]) == Some(4) {
        return Some(record(sym, Some(1), format!("Z_{len}"), Evidence::Family, format!("delta_{len}"), ""));
    }
    None
}

fn plane_status(sym: &SchlafliSymbol) -> Option<AtlasRecord> {
    let e = sym.entries();
    let (a, b) = (e[0], e[1]);
    if let (Some(fa), Some(fb)) = (a.fraction(), b.fraction()) {
        // {m/2, m} and {m, m/2} for odd m >= 7.
        let m = fa.p();
        if fb.p() == m && m % 2 == 1 && m >= 7 {
            if fa.q() == 2 && fb.is_convex() {
                return Some(AtlasRecord {
                    symbol: sym.clone(),
                    status: Status::NonEmbeddable,
                    evidence: Some(Evidence::Girth),
                    name: String::new(),
                    note: format!("the skeleton has girth {}", m - 1),
                });
            }
            if fa.is_convex() && fb.q() == 2 {
                return Some(record(sym, Some(2), "1/2 Z_inf".into(), Evidence::AlternatedZone, String::new(), "skeleton of {3,m}"));
            }
        }
    }
    if !a.is_convex() || !b.is_convex() {
        return None;
    }
    match (a.convex_order(), b.convex_order()) {
        (Some(2), _) => return Some(record(sym, Some(1), "H_1".into(), Evidence::Family, String::new(), "two vertices")),
        (Some(m), Some(2)) => {
            let (scale, target) = if m % 2 == 1 { (2, format!("1/2 H_{m}")) } else { (1, format!("H_{}", m / 2)) };
            return Some(record(sym, Some(scale), target, Evidence::Family, format!("{m}-gon"), ""));
        }
        _ => {}
    }
    if sym.classify()? != Curvature::Hyperbolic {
        return None;
    }
    let odd = a.convex_order().is_some_and(|m| m % 2 == 1);
    let (scale, target, evidence) =
        if odd { (2, "1/2 Z_inf", Evidence::AlternatedZone) } else { (1, "Z_inf", Evidence::BipartiteZone) };
    Some(record(sym, Some(scale), target.into(), evidence, String::new(), ""))
}
