//! One-shot reproduction report.
//!
//! Every entry compares a computed string with a fixed expected string; the
//! status is `pass` exactly when they are equal. Entries run in a fixed order
//! and carry no timings, so two runs with the same inputs print the same
//! document.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::config::{Budget, Config};
use super::CliError;
use crate::atlas::Atlas;
use crate::embeddings::{
    balanced_arcs_check, catalog_embedding, catalog_names, cutcone_decompose, direction_families, equivalent,
    partial_cube, remark4, verify, zone_embed, CutSearch, Embedding,
};
use crate::hypermetrics::{
    apex_pair_violation, find_violation, induced_k5_minus_k3, HypermetricError, SearchOptions, ViolationCertificate,
};
use crate::metrics::{apsp, distance_stability, girth, shortest_cycle_at};
use crate::riemann::enumerate_table2;
use crate::schlafli::SchlafliSymbol;
use crate::skeletons::{
    antipodal_quotient, complete, interior_defect, k5_minus_k3, petersen, platonic, pyramid, regular_4polytope,
    star_4polytope, star_honeycomb_skeleton, tiling_patch, Patch, Polytope4, Skeleton, TilingOptions,
};

pub const REPORT_SCHEMA: &str = "cutlattice-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum EntryStatus {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub id: String,
    /// Acceptance criterion number, 0 for atlas checks.
    pub criterion: u8,
    pub claim: String,
    pub computed: Option<String>,
    pub expected: String,
    #[serde(flatten)]
    pub status: EntryStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: u32,
    pub budget: Budget,
    pub entries: Vec<ReportEntry>,
    pub totals: Totals,
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub config: Config,
    pub atlas: Atlas,
    /// Replacement expected values by entry id.
    pub expected: BTreeMap<String, String>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { config: Config::default(), atlas: Atlas::builtin(), expected: BTreeMap::new() }
    }
}

enum Outcome {
    Computed(String),
    Skipped(String),
}

type Check<'a> = Box<dyn FnOnce(&mut Ctx) -> Result<Outcome, CliError> + 'a>;

struct Ctx<'a> {
    config: &'a Config,
    /// Every tiling patch built so far, for the regularity entry.
    patches: Vec<Patch>,
}

impl Ctx<'_> {
    fn patch(&mut self, sym: &str, radius: usize, margin: usize) -> Result<Patch, CliError> {
        let opts = TilingOptions { radius, margin: Some(margin), vertex_cap: self.config.vertex_cap };
        let p = tiling_patch(&SchlafliSymbol::parse(sym)?, opts)?;
        self.patches.push(p.clone());
        Ok(p)
    }

    fn search(&self, g: &Skeleton, k: usize) -> Result<Option<Vec<ViolationCertificate>>, CliError> {
        let mut opts = SearchOptions::first(k);
        opts.budget = self.config.max_tuples;
        match find_violation(g, &opts) {
            Ok(v) => Ok(Some(v)),
            Err(HypermetricError::Budget(_)) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}

fn done(s: impl Into<String>) -> Result<Outcome, CliError> {
    Ok(Outcome::Computed(s.into()))
}

fn embedding_summary(g: &Skeleton, e: &Embedding) -> Result<String, CliError> {
    let valid = verify(g, e, g.core.is_some())?.is_valid();
    Ok(format!("scale={} dim={} {}", e.scale, e.dim, if valid { "valid" } else { "invalid" }))
}

fn catalog_summary(name: &str) -> Result<Outcome, CliError> {
    let item = catalog_embedding(name)?;
    done(embedding_summary(&item.graph, &item.embedding)?)
}

fn violation_summary(g: &Skeleton, c: Option<&ViolationCertificate>) -> String {
    match c {
        None => "none".into(),
        Some(c) if c.recheck(&apsp(g)) => format!("{}>{}", c.lhs, c.rhs),
        Some(c) => format!("{}>{} recheck failed", c.lhs, c.rhs),
    }
}

fn sym(s: &str) -> SchlafliSymbol {
    SchlafliSymbol::parse(s).expect("fixed symbol parses")
}

/// Zone embedding of a patch with core radius 3 and margin 4. The dimension is
/// only reported for euclidean tilings, where it can be counted by hand.
fn zones_summary(ctx: &mut Ctx, s: &str, scale: u32, families: bool) -> Result<Outcome, CliError> {
    let p = ctx.patch(s, 3, 4)?;
    let z = zone_embed(&p, scale)?;
    let mut out = embedding_summary(&p.skeleton, &z.embedding)?;
    if sym(s).classify() == Some(crate::schlafli::Curvature::Hyperbolic) {
        out = out.split(' ').filter(|w| !w.starts_with("dim=")).collect::<Vec<_>>().join(" ");
    }
    if families {
        write!(out, " families={}", direction_families(&p, &z.zone_edges)?).unwrap();
    }
    done(out)
}

/// Catalog items the soundness checks run over, one per distinct graph.
fn soundness_items() -> Result<Vec<crate::embeddings::CatalogItem>, CliError> {
    let mut items: Vec<crate::embeddings::CatalogItem> = Vec::new();
    for name in catalog_names() {
        let item = catalog_embedding(name)?;
        if !items.iter().any(|i| i.graph == item.graph && i.embedding == item.embedding) {
            items.push(item);
        }
    }
    Ok(items)
}

fn girth_cycle(g: &Skeleton) -> Option<Vec<usize>> {
    let gi = girth(g, false)?;
    (0..g.n).filter_map(|v| shortest_cycle_at(g, v)).find(|c| c.len() == gi)
}

fn checks<'a>() -> Vec<(&'static str, u8, &'static str, &'static str, Check<'a>)> {
    let mut v: Vec<(&'static str, u8, &'static str, &'static str, Check<'a>)> = Vec::new();
    macro_rules! check {
        ($id:expr, $c:expr, $claim:expr, $expected:expr, $f:expr) => {
            v.push(($id, $c, $claim, $expected, Box::new($f)))
        };
    }

    check!(
        "table2.densities",
        1,
        "densities of the 36 spherical representations of the regular polyhedra",
        "1 3 1 7 1 19 7 13 3 5 5 11 11 29 17 23 1 5 7 11 1 11 3 9 19 29 21 27 7 17 3 21 13 23 9 27",
        |_| {
            let t = enumerate_table2()?;
            done(t.iter().map(|e| e.density.to_string()).collect::<Vec<_>>().join(" "))
        }
    );
    check!("table2.genus", 1, "genus 4 for eight representations, 0 for the rest", "genus4=8 genus0=28", |_| {
        let t = enumerate_table2()?;
        let four = t.iter().filter(|e| e.genus == 4).count();
        let zero = t.iter().filter(|e| e.genus == 0).count();
        done(format!("genus4={four} genus0={zero}"))
    });

    for (id, m, expected) in
        [("girth.{5/2,5}", 5, "3"), ("girth.{7/2,7}", 7, "6"), ("girth.{9/2,9}", 9, "8"), ("girth.{11/2,11}", 11, "10")]
    {
        check!(id, 2, "girth of the star-honeycomb {m/2,m} skeleton is 3 for m = 5 and m - 1 beyond", expected, move |_| {
            let g = star_honeycomb_skeleton(m, 1)?;
            done(girth(&g, true).map_or("acyclic".into(), |x| x.to_string()))
        });
    }

    check!("{5/2,5,3}.counts", 3, "the stellated 120-cell skeleton", "n=120 edges=1200 degree=20", |_| {
        let g = star_4polytope(&sym("{5/2,5,3}"))?;
        done(format!("n={} edges={} degree={}", g.n, g.edge_count(), g.regular_degree().map_or(0, |d| d)))
    });
    check!("{5/2,5,3}.5-gonal", 3, "first 5-gonal violation in search order", "7>6", |ctx| {
        let g = star_4polytope(&sym("{5/2,5,3}"))?;
        match ctx.search(&g, 5)? {
            Some(v) => done(violation_summary(&g, v.first())),
            None => Ok(Outcome::Skipped("tuple budget exceeded".into())),
        }
    });
    check!(
        "{5/2,5,3}.pattern",
        3,
        "5-gonal violation on two dodecahedron centres at distance 2",
        "7>6 d_ab=2 d_xy=1 d_xz=2 d_yz=2 cross=1",
        |_| {
            let g = star_4polytope(&sym("{5/2,5,3}"))?;
            let Some(c) = apex_pair_violation(&g, 0) else { return done("none") };
            let d = |i: usize, j: usize| c.distances[i][j];
            let cross: Vec<u16> = (0..2).flat_map(|p| (2..5).map(move |q| (p, q))).map(|(p, q)| d(p, q)).collect();
            let cross = if cross.iter().all(|&x| x == 1) { "1".to_string() } else { format!("{cross:?}") };
            done(format!(
                "{} d_ab={} d_xy={} d_xz={} d_yz={} cross={cross}",
                violation_summary(&g, Some(&c)),
                d(0, 1),
                d(2, 3),
                d(2, 4),
                d(3, 4)
            ))
        }
    );

    check!("24-cell.5-gonal", 4, "induced K5-K3 in the 24-cell violates the 5-gonal inequality", "7>6", |_| {
        let g = regular_4polytope(Polytope4::Cell24);
        done(violation_summary(&g, induced_k5_minus_k3(&g).as_ref()))
    });
    check!("K5-K3.5-gonal", 4, "K5-K3 violates the 5-gonal inequality", "7>6", |_| {
        let g = k5_minus_k3();
        done(violation_summary(&g, induced_k5_minus_k3(&g).as_ref()))
    });
    check!("pyramid-icosahedron.5-gonal", 4, "the pyramid over the icosahedron is 5-gonal", "none", |ctx| {
        let g = pyramid(&platonic(&sym("{3,5}"))?.skeleton);
        match ctx.search(&g, 5)? {
            Some(v) => done(violation_summary(&g, v.first())),
            None => Ok(Outcome::Skipped("tuple budget exceeded".into())),
        }
    });
    check!("pyramid-icosahedron.7-gonal", 4, "the pyramid over the icosahedron violates the 7-gonal inequality", "violated", |ctx| {
        let g = pyramid(&platonic(&sym("{3,5}"))?.skeleton);
        match ctx.search(&g, 7)? {
            Some(v) => done(if v.first().is_some_and(|c| c.recheck(&apsp(&g))) { "violated" } else { "none" }),
            None => Ok(Outcome::Skipped("tuple budget exceeded".into())),
        }
    });
    check!("600-cell.7-gonal", 4, "the 600-cell violates the 7-gonal inequality", "violated", |ctx| {
        if ctx.config.budget == Budget::Tiny {
            return Ok(Outcome::Skipped("budget tiny".into()));
        }
        let g = regular_4polytope(Polytope4::Cell600);
        match ctx.search(&g, 7)? {
            Some(v) => done(if v.first().is_some_and(|c| c.recheck(&apsp(&g))) { "violated" } else { "none" }),
            None => Ok(Outcome::Skipped("tuple budget exceeded".into())),
        }
    });

    for (name, expected) in [
        ("gamma3", "scale=1 dim=3 valid"),
        ("alpha3", "scale=2 dim=3 valid"),
        ("alpha3-h4", "scale=2 dim=4 valid"),
        ("beta3", "scale=2 dim=4 valid"),
        ("icosahedron", "scale=2 dim=6 valid"),
        ("dodecahedron", "scale=2 dim=10 valid"),
    ] {
        check!(name, 5, "embedding of a regular polyhedron", expected, move |_| catalog_summary(name));
    }
    check!("alpha3.rigidity", 5, "the two embeddings of the tetrahedron are inequivalent", "inequivalent", |_| {
        let a = catalog_embedding("alpha3")?.embedding;
        let b = catalog_embedding("alpha3-h4")?.embedding;
        done(if equivalent(&a, &b) { "equivalent" } else { "inequivalent" })
    });
    check!("{4,4}.zones", 5, "zones of the square tiling", "scale=1 dim=28 valid", |ctx| zones_summary(ctx, "{4,4}", 1, false));
    check!("{6,3}.zones", 5, "zones of the hexagonal tiling fall into three directions", "scale=1 dim=30 valid families=3", |ctx| {
        zones_summary(ctx, "{6,3}", 1, true)
    });
    check!("{3,6}.zones", 5, "alternated zones of the triangular tiling fall into three directions", "scale=2 dim=42 valid families=3", |ctx| {
        zones_summary(ctx, "{3,6}", 2, true)
    });
    check!("{7,3}.zones", 5, "alternated zones of the heptagonal tiling", "scale=2 valid", |ctx| zones_summary(ctx, "{7,3}", 2, false));
    check!("{5,4}.zones", 5, "alternated zones of the order-4 pentagonal tiling", "scale=2 valid", |ctx| zones_summary(ctx, "{5,4}", 2, false));

    for (id, solid, expected) in [
        ("quotient.cube", "{4,3}", "K4"),
        ("quotient.icosahedron", "{3,5}", "K6"),
        ("quotient.dodecahedron", "{5,3}", "petersen"),
    ] {
        check!(id, 6, "antipodal quotient of a centrally symmetric polyhedron", expected, move |_| {
            let q = antipodal_quotient(&platonic(&sym(solid))?)?;
            let known = [("K4", complete(4)?), ("K6", complete(6)?), ("petersen", petersen())];
            done(known.iter().find(|(_, g)| q.is_isomorphic(g)).map_or("unrecognised", |(n, _)| n))
        });
    }
    for (name, expected) in [
        ("petersen", "scale=2 dim=6 valid"),
        ("K6", "scale=2 dim=6 valid"),
        ("K4", "scale=2 dim=4 valid"),
        ("C3xC3", "scale=2 dim=6 valid"),
        ("C4xC4", "scale=1 dim=4 valid"),
    ] {
        check!(name, 6, "embedding of an antipodal quotient or a product of cycles", expected, move |_| catalog_summary(name));
    }

    check!("remark4.n4", 7, "least dimension-to-scale ratio for the 4-simplex", "m=5/3 lambda=6 dim=10", |_| {
        let r = remark4(4)?;
        done(format!("m={} lambda={} dim={}", r.m_n, r.lambda_n, r.dimension))
    });
    check!("alpha4-h10", 7, "the 4-simplex embeds into the 10-cube with scale 6", "scale=6 dim=10 valid", |_| {
        catalog_summary("alpha4-h10")
    });
    check!("beta5", 7, "the 5-cross-polytope embeds into the 8-cube with scale 4", "scale=4 dim=8 valid", |_| catalog_summary("beta5"));
    check!("beta5.scale2", 7, "the 5-cross-polytope has no scale-2 embedding", "none-exists canonical=511", |ctx| {
        let g = catalog_embedding("beta5")?.graph;
        done(match cutcone_decompose(&g, 2, ctx.config.n_max)? {
            CutSearch::NoneExists { canonical_cuts, .. } => format!("none-exists canonical={canonical_cuts}"),
            CutSearch::Found(d) => format!("found dim={}", d.dimension()),
        })
    });

    check!("soundness.hypermetric", 8, "verified embeddings have no 5- or 7-gonal violation", "violations=0", |ctx| {
        let mut count = 0;
        for item in soundness_items()? {
            for k in [5, 7] {
                match ctx.search(&item.graph, k)? {
                    Some(v) => count += v.len(),
                    None => return Ok(Outcome::Skipped("tuple budget exceeded".into())),
                }
            }
        }
        done(format!("violations={count}"))
    });
    check!("soundness.partial-cube", 8, "partial-cube recognition agrees with the scale-1 cut search", "disagreements=0", |ctx| {
        let mut bad = Vec::new();
        for item in soundness_items()?.into_iter().filter(|i| i.graph.n <= ctx.config.n_max) {
            let a = partial_cube(&item.graph)?.embedding().is_some();
            let b = cutcone_decompose(&item.graph, 1, ctx.config.n_max)?.decomposition().is_some();
            if a != b {
                bad.push(item.name);
            }
        }
        done(if bad.is_empty() { "disagreements=0".into() } else { format!("disagreements={}: {}", bad.len(), bad.join(",")) })
    });
    check!("soundness.arcs", 8, "arcs of girth cycles are balanced in every verified embedding", "unbalanced=0", |_| {
        let mut bad = Vec::new();
        for item in soundness_items()? {
            if let Some(c) = girth_cycle(&item.graph) {
                if !balanced_arcs_check(&item.graph, &item.embedding, &c)? {
                    bad.push(item.name);
                }
            }
        }
        done(if bad.is_empty() { "unbalanced=0".into() } else { format!("unbalanced={}: {}", bad.len(), bad.join(",")) })
    });
    check!("soundness.corruption", 8, "every single-bit corruption fails verification and the arc check", "undetected=0 trials>=200", |_| {
        let (mut trials, mut missed) = (0, 0);
        for item in soundness_items()?.into_iter().filter(|i| i.graph.n <= 12) {
            for v in 0..item.graph.n {
                let cycle = shortest_cycle_at(&item.graph, v);
                for c in 0..item.embedding.dim {
                    let mut e = item.embedding.clone();
                    let bit = !e.labels[v][c];
                    e.labels[v].set(c, bit);
                    trials += 1;
                    let verified = verify(&item.graph, &e, false)?.is_valid();
                    let balanced = cycle.as_ref().is_some_and(|cy| balanced_arcs_check(&item.graph, &e, cy).unwrap_or(false));
                    if verified || balanced {
                        missed += 1;
                    }
                }
            }
        }
        done(format!("undetected={missed} trials{}", if trials >= 200 { ">=200".to_string() } else { format!("={trials}") }))
    });

    check!("patch.stability", 9, "core distances are unchanged when the margin grows by 2", "stable=24/24", |_| {
        let mut stable = 0;
        for (s, p) in [("{4,4}", 4), ("{6,3}", 6), ("{3,6}", 3), ("{7,3}", 7), ("{3,7}", 3), ("{5,4}", 5)] {
            for r in 1..=4 {
                stable += distance_stability(&sym(s), r, p)? as usize;
            }
        }
        done(format!("stable={stable}/24"))
    });
    check!("patch.regularity", 9, "every generated patch is regular in its interior", "defects=0", |ctx| {
        for (s, p) in [("{4,4}", 4), ("{6,3}", 6), ("{3,6}", 3), ("{7,3}", 7), ("{3,7}", 3), ("{5,4}", 5)] {
            ctx.patch(s, 4, p)?;
        }
        let defects: Vec<String> = ctx
            .patches
            .iter()
            .filter_map(|p| interior_defect(p).map(|d| format!("{}: {d}", p.skeleton.name)))
            .collect();
        done(if defects.is_empty() { "defects=0".into() } else { format!("defects={}: {}", defects.len(), defects.join("; ")) })
    });
    v
}

/// Atlas statuses checked against fixed expectations, so a damaged atlas file
/// shows up as failing entries.
const ATLAS_EXPECTED: &[(&str, &str)] = &[
    ("{3,5}", "{3,5} embeddable scale=2 target=1/2 H_6 evidence=explicit"),
    ("{5,3}", "{5,3} embeddable scale=2 target=1/2 H_10 evidence=alternated-zone"),
    ("{4,4}", "{4,4} embeddable scale=1 target=Z_2 evidence=bipartite-zone"),
    ("{3,6}", "{3,6} embeddable scale=2 target=1/2 Z_3 evidence=alternated-zone"),
    ("{6,3}", "{6,3} embeddable scale=1 target=Z_3 evidence=bipartite-zone"),
    ("{7,3}", "{7,3} embeddable scale=2 target=1/2 Z_inf evidence=alternated-zone"),
    ("{5,4}", "{5,4} embeddable scale=2 target=1/2 Z_inf evidence=alternated-zone"),
    ("{7/2,7}", "{7/2,7} non-embeddable evidence=girth"),
    ("{3,4,3}", "{3,4,3} non-embeddable evidence=5-gonal"),
    ("{3,3,5}", "{3,3,5} non-embeddable evidence=7-gonal"),
    ("{3,3,6}", "{3,3,6} non-embeddable evidence=5-gonal"),
    ("{4,3,5}", "{4,3,5} embeddable scale=1 target=Z_inf evidence=bipartite-zone"),
    ("{5/2,5,3}", "{5/2,5,3} non-embeddable evidence=5-gonal"),
    ("{3,3,3,4}", "{3,3,3,4} embeddable scale=4 target=1/4 H_8 evidence=family"),
    ("{4,3,3,4}", "{4,3,3,4} embeddable scale=1 target=Z_4 evidence=family"),
];

fn finish(
    id: String,
    criterion: u8,
    claim: String,
    expected: String,
    outcome: Result<Outcome, CliError>,
) -> ReportEntry {
    let (computed, status) = match outcome {
        Ok(Outcome::Computed(c)) => {
            let status = if c == expected { EntryStatus::Pass } else { EntryStatus::Fail };
            (Some(c), status)
        }
        Ok(Outcome::Skipped(reason)) => (None, EntryStatus::Skipped { reason }),
        Err(e) => (Some(format!("error: {e}")), EntryStatus::Fail),
    };
    ReportEntry { id, criterion, claim, computed, expected, status }
}

/// Runs every check in order. Unknown ids among the expected-value overrides
/// are a usage error.
pub fn run_report(opts: &ReportOptions) -> Result<Report, CliError> {
    let mut ctx = Ctx { config: &opts.config, patches: Vec::new() };
    let mut entries = Vec::new();
    let expected = |id: &str, default: &str| opts.expected.get(id).cloned().unwrap_or_else(|| default.to_string());
    for (id, criterion, claim, default, f) in checks() {
        let outcome = f(&mut ctx);
        entries.push(finish(id.to_string(), criterion, claim.to_string(), expected(id, default), outcome));
    }
    for &(s, default) in ATLAS_EXPECTED {
        let id = format!("atlas.{s}");
        let computed = opts.atlas.status(&sym(s)).summary();
        let claim = format!("atlas status of {s}");
        entries.push(finish(id.clone(), 0, claim, expected(&id, default), Ok(Outcome::Computed(computed))));
    }
    if let Some(unknown) = opts.expected.keys().find(|k| !entries.iter().any(|e| &e.id == *k)) {
        return Err(CliError::Usage(format!("no report entry named {unknown:?}")));
    }
    let mut totals = Totals::default();
    for e in &entries {
        match e.status {
            EntryStatus::Pass => totals.pass += 1,
            EntryStatus::Fail => totals.fail += 1,
            EntryStatus::Skipped { .. } => totals.skipped += 1,
        }
    }
    Ok(Report { schema: REPORT_SCHEMA, version: REPORT_VERSION, budget: opts.config.budget, entries, totals })
}

/// Parses `id = expected` lines, `#` comments allowed.
pub fn parse_expected(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| CliError::Usage(format!("expected-values line {}: no '='", i + 1)))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("cutlattice report v{} (budget {})\n", self.version, self.budget);
        let width = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in &self.entries {
            let tag = if e.criterion == 0 { "atlas".to_string() } else { format!("c{}", e.criterion) };
            match &e.status {
                EntryStatus::Pass => writeln!(out, "PASS {tag:>5} {:width$}  {}", e.id, e.expected),
                EntryStatus::Fail => writeln!(
                    out,
                    "FAIL {tag:>5} {:width$}  computed {:?}, expected {:?}",
                    e.id,
                    e.computed.as_deref().unwrap_or(""),
                    e.expected
                ),
                EntryStatus::Skipped { reason } => writeln!(out, "SKIP {tag:>5} {:width$}  {reason}", e.id),
            }
            .unwrap();
        }
        writeln!(out, "{} pass, {} fail, {} skipped", self.totals.pass, self.totals.fail, self.totals.skipped).unwrap();
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.totals.fail > 0 {
            super::exit::REPORT_FAIL
        } else if self.totals.skipped > 0 {
            super::exit::REPORT_SKIPPED
        } else {
            super::exit::OK
        }
    }
}
