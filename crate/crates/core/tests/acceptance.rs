//! The nine acceptance criteria, one pass/fail line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cutlattice::embeddings::{
    balanced_arcs_check, catalog_embedding, catalog_names, cutcone_decompose, direction_families, equivalent,
    partial_cube, remark4, verify, zone_embed, CatalogItem, CutSearch, Embedding,
};
use cutlattice::hypermetrics::{apex_pair_violation, find_violation, induced_k5_minus_k3, SearchOptions};
use cutlattice::metrics::{apsp, distance_stability, girth, shortest_cycle_at};
use cutlattice::riemann::enumerate_table2;
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{
    antipodal_quotient, complete, interior_defect, k5_minus_k3, petersen, platonic, pyramid, regular_4polytope,
    star_4polytope, star_honeycomb_skeleton, tiling_patch, Patch, Polytope4, Skeleton, TilingOptions,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sym(s: &str) -> SchlafliSymbol {
    SchlafliSymbol::parse(s).unwrap()
}

fn patch(s: &str, radius: usize, margin: usize) -> Patch {
    tiling_patch(&sym(s), TilingOptions::new(radius, margin)).unwrap()
}

fn valid(g: &Skeleton, e: &Embedding) -> bool {
    verify(g, e, g.core.is_some()).unwrap().is_valid()
}

fn shape(name: &str, scale: u32, dim: usize) -> Result<CatalogItem, String> {
    let item = catalog_embedding(name).map_err(|e| format!("{name}: {e}"))?;
    let e = &item.embedding;
    ensure!((e.scale, e.dim) == (scale, dim), "{name}: got (scale {}, dim {}), want ({scale}, {dim})", e.scale, e.dim);
    ensure!(valid(&item.graph, e), "{name} does not verify");
    Ok(item)
}

fn table2() -> Outcome {
    let printed = [
        1, 3, 1, 7, 1, 19, 7, 13, 3, 5, 5, 11, 11, 29, 17, 23, 1, 5, 7, 11, 1, 11, 3, 9, 19, 29, 21, 27, 7, 17, 3, 21, 13,
        23, 9, 27,
    ];
    let t = enumerate_table2().map_err(|e| e.to_string())?;
    let densities: Vec<u64> = t.iter().map(|e| e.density).collect();
    ensure!(densities == printed, "densities {densities:?}");
    let four = t.iter().filter(|e| e.genus == 4).count();
    let zero = t.iter().filter(|e| e.genus == 0).count();
    ensure!((four, zero) == (8, 28), "genus 4: {four}, genus 0: {zero}");
    Ok("36 densities, 8 of genus 4, 28 of genus 0".into())
}

fn star_girth() -> Outcome {
    let mut out = Vec::new();
    for (m, want) in [(5, 3), (7, 6), (9, 8), (11, 10)] {
        let g = star_honeycomb_skeleton(m, 1).unwrap();
        ensure!(g.n <= 50_000, "m={m}: {} vertices", g.n);
        let got = girth(&g, true);
        ensure!(got == Some(want), "m={m}: girth {got:?}, want {want}");
        out.push(format!("m={m}:{want}"));
    }
    Ok(out.join(" "))
}

fn stellated_120_cell() -> Outcome {
    let g = star_4polytope(&sym("{5/2,5,3}")).unwrap();
    ensure!((g.n, g.edge_count(), g.regular_degree()) == (120, 1200, Some(20)), "counts {} {}", g.n, g.edge_count());
    let d = apsp(&g);
    let first = find_violation(&g, &SearchOptions::first(5)).unwrap();
    let first = first.first().ok_or("no 5-gonal violation")?;
    ensure!(first.recheck(&d) && (first.lhs, first.rhs) == (7, 6), "first violation {} > {}", first.lhs, first.rhs);
    let c = apex_pair_violation(&g, 0).ok_or("no violation on a centre pair")?;
    ensure!(c.recheck(&d) && (c.lhs, c.rhs) == (7, 6), "pattern violation {} > {}", c.lhs, c.rhs);
    let dist = |i: usize, j: usize| c.distances[i][j];
    ensure!((dist(0, 1), dist(2, 3), dist(2, 4), dist(3, 4)) == (2, 1, 2, 2), "pattern distances {:?}", c.distances);
    ensure!((0..2).all(|a| (2..5).all(|x| dist(a, x) == 1)), "cross distances {:?}", c.distances);
    Ok(format!("120/1200/20, violation 7 > 6 on {:?}", c.tuple))
}

fn certificates() -> Outcome {
    for g in [regular_4polytope(Polytope4::Cell24), k5_minus_k3()] {
        let c = induced_k5_minus_k3(&g).ok_or(format!("{}: no induced K5-K3", g.name))?;
        ensure!(c.recheck(&apsp(&g)) && (c.lhs, c.rhs) == (7, 6), "{}: {} > {}", g.name, c.lhs, c.rhs);
    }
    let py = pyramid(&platonic(&sym("{3,5}")).unwrap().skeleton);
    ensure!(find_violation(&py, &SearchOptions::first(5)).unwrap().is_empty(), "pyramid violates 5-gonal");
    let c = find_violation(&py, &SearchOptions::first(7)).unwrap();
    ensure!(c.first().is_some_and(|c| c.recheck(&apsp(&py))), "no 7-gonal violation in the pyramid");
    let cell600 = regular_4polytope(Polytope4::Cell600);
    let c = find_violation(&cell600, &SearchOptions::first(7)).unwrap();
    ensure!(c.first().is_some_and(|c| c.recheck(&apsp(&cell600))), "no 7-gonal violation in the 600-cell");
    Ok("24-cell and K5-K3 7 > 6; pyramid and 600-cell 7-gonal".into())
}

fn embedding_suite(patches: &mut Vec<Patch>) -> Outcome {
    shape("gamma3", 1, 3)?;
    let a = shape("alpha3", 2, 3)?;
    let b = shape("alpha3-h4", 2, 4)?;
    ensure!(!equivalent(&a.embedding, &b.embedding), "tetrahedron embeddings are equivalent");
    shape("beta3", 2, 4)?;
    shape("icosahedron", 2, 6)?;
    shape("dodecahedron", 2, 10)?;
    for (s, scale, families) in [("{4,4}", 1, None), ("{6,3}", 1, Some(3)), ("{3,6}", 2, Some(3)), ("{7,3}", 2, None), ("{5,4}", 2, None)] {
        let p = patch(s, 3, 4);
        let z = zone_embed(&p, scale).map_err(|e| format!("{s}: {e}"))?;
        ensure!(z.embedding.scale == scale && valid(&p.skeleton, &z.embedding), "{s}: zone embedding invalid");
        ensure!(z.embedding.dim <= z.zone_count, "{s}: dimension above zone count");
        if let Some(f) = families {
            let got = direction_families(&p, &z.zone_edges).map_err(|e| e.to_string())?;
            ensure!(got == f, "{s}: {got} direction families");
        }
        patches.push(p);
    }
    Ok("7 polyhedral embeddings, 5 zone embeddings".into())
}

fn quotient_suite() -> Outcome {
    let known = [("K4", complete(4).unwrap()), ("K6", complete(6).unwrap()), ("petersen", petersen())];
    for (solid, want) in [("{4,3}", "K4"), ("{3,5}", "K6"), ("{5,3}", "petersen")] {
        let q = antipodal_quotient(&platonic(&sym(solid)).unwrap()).map_err(|e| e.to_string())?;
        let g = &known.iter().find(|(n, _)| *n == want).unwrap().1;
        ensure!(q.is_isomorphic(g), "quotient of {solid} is not {want}");
    }
    shape("petersen", 2, 6)?;
    shape("K6", 2, 6)?;
    shape("K4", 2, 4)?;
    shape("C3xC3", 2, 6)?;
    shape("C4xC4", 1, 4)?;
    Ok("quotients K4, K6, Petersen; 5 embeddings".into())
}

fn simplex_suite() -> Outcome {
    let r = remark4(4).map_err(|e| e.to_string())?;
    ensure!(r.m_n.to_string() == "5/3" && r.lambda_n == 6 && r.dimension == 10, "remark4(4) = {r:?}");
    let a = shape("alpha4-h10", 6, 10)?;
    ensure!((0..5).all(|u| (0..5).all(|v| u == v || a.embedding.hamming(u, v) == 6)), "hamming distances differ from 6");
    let b = shape("beta5", 4, 8)?;
    match cutcone_decompose(&b.graph, 2, 12).map_err(|e| e.to_string())? {
        CutSearch::NoneExists { canonical_cuts: 511, .. } => {}
        other => return Err(format!("beta5 at scale 2: {other:?}")),
    }
    Ok("alpha4 into H10 at scale 6; beta5 only at scale 4".into())
}

fn soundness() -> Outcome {
    let mut items: Vec<CatalogItem> = Vec::new();
    for name in catalog_names() {
        let item = catalog_embedding(name).unwrap();
        if !items.iter().any(|i| i.graph == item.graph && i.embedding == item.embedding) {
            items.push(item);
        }
    }
    for item in &items {
        for k in [5, 7] {
            let v = find_violation(&item.graph, &SearchOptions::first(k)).unwrap();
            ensure!(v.is_empty(), "{}: {k}-gonal violation {:?}", item.name, v[0].tuple);
        }
    }
    let small: Vec<&CatalogItem> = items.iter().filter(|i| i.graph.n <= 12).collect();
    for item in &small {
        let a = partial_cube(&item.graph).unwrap().embedding().is_some();
        let b = cutcone_decompose(&item.graph, 1, 12).unwrap().decomposition().is_some();
        ensure!(a == b, "{}: partial cube {a}, scale-1 cuts {b}", item.name);
    }
    let cycles: Vec<Vec<usize>> = items
        .iter()
        .map(|i| {
            let gi = girth(&i.graph, false).unwrap();
            (0..i.graph.n).filter_map(|v| shortest_cycle_at(&i.graph, v)).find(|c| c.len() == gi).unwrap()
        })
        .collect();
    for (item, c) in items.iter().zip(&cycles) {
        ensure!(balanced_arcs_check(&item.graph, &item.embedding, c).unwrap(), "{}: unbalanced arcs", item.name);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let trials = 250;
    for _ in 0..trials {
        let i = rng.gen_range(0..items.len());
        let (item, c) = (&items[i], &cycles[i]);
        let v = c[rng.gen_range(0..c.len())];
        let bit = rng.gen_range(0..item.embedding.dim);
        let mut e = item.embedding.clone();
        let flipped = !e.labels[v][bit];
        e.labels[v].set(bit, flipped);
        ensure!(!verify(&item.graph, &e, false).unwrap().is_valid(), "{}: flip ({v},{bit}) verifies", item.name);
        ensure!(!balanced_arcs_check(&item.graph, &e, c).unwrap(), "{}: flip ({v},{bit}) balanced", item.name);
    }
    Ok(format!("{} embeddings, {} partial-cube comparisons, {trials} corruptions", items.len(), small.len()))
}

fn patch_integrity(patches: &mut Vec<Patch>) -> Outcome {
    for (s, p) in [("{4,4}", 4), ("{6,3}", 6), ("{3,6}", 3), ("{7,3}", 7), ("{3,7}", 3), ("{5,4}", 5)] {
        for r in 1..=4 {
            ensure!(distance_stability(&sym(s), r, p).unwrap(), "{s} R={r} unstable");
            patches.push(patch(s, r, p));
        }
    }
    for p in patches.iter() {
        if let Some(d) = interior_defect(p) {
            return Err(format!("{}: {d}", p.skeleton.name));
        }
    }
    Ok(format!("24 stable windows, {} regular patches", patches.len()))
}

fn main() {
    let mut patches = Vec::new();
    let mut failed = 0;
    let mut run = |n: usize, name: &str, cap: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|s| if took <= cap { Ok(s) } else { Err(format!("took {took:.1?}, cap {cap:?}")) });
        match outcome {
            Ok(detail) => println!("criterion {n} PASS {name} ({took:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL {name} ({took:.2?}): {why}");
            }
        }
    };
    let secs = Duration::from_secs;
    run(1, "riemann representations", secs(1), &mut table2);
    run(2, "star-honeycomb girth", secs(120), &mut star_girth);
    run(3, "stellated 120-cell certificate", secs(60), &mut stellated_120_cell);
    run(4, "5- and 7-gonal certificates", secs(600), &mut certificates);
    run(5, "polyhedra and tiling embeddings", secs(120), &mut || embedding_suite(&mut patches));
    run(6, "quotients and cycle products", secs(30), &mut quotient_suite);
    run(7, "simplex and cross-polytope scales", secs(300), &mut simplex_suite);
    run(8, "cross-module soundness", secs(120), &mut soundness);
    run(9, "patch integrity", secs(120), &mut || patch_integrity(&mut patches));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria pass");
}
