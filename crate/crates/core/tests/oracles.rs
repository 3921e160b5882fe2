//! Brute-force oracles for the exact searches.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use proptest::prelude::*;

use cutlattice::embeddings::{cutcone_decompose, partial_cube, CutSearch};
use cutlattice::hypermetrics::{find_violation, SearchOptions};
use cutlattice::metrics::{apsp, girth, INF};
use cutlattice::skeletons::{cycle, k5_minus_k3, Skeleton};

/// Every multiset of cuts (as masks avoiding vertex 0) whose weighted cut
/// metrics equal `scale * d`.
fn all_cut_covers(g: &Skeleton, scale: u32) -> BTreeSet<Vec<(u64, u32)>> {
    let n = g.n;
    let d = apsp(g);
    let cuts: Vec<u64> = (1..1u64 << (n - 1)).map(|m| m << 1).collect();
    let mut need: Vec<Vec<i64>> = (0..n).map(|u| (0..n).map(|v| scale as i64 * d.get(u, v) as i64).collect()).collect();
    let mut out = BTreeSet::new();
    fn rec(i: usize, n: usize, cuts: &[u64], need: &mut Vec<Vec<i64>>, chosen: &mut Vec<(u64, u32)>, out: &mut BTreeSet<Vec<(u64, u32)>>) {
        if i == cuts.len() {
            if (0..n).all(|u| (u + 1..n).all(|v| need[u][v] == 0)) {
                out.insert(chosen.clone());
            }
            return;
        }
        let s = cuts[i];
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| (s >> u & 1) != (s >> v & 1)).collect();
        let cap = pairs.iter().map(|&(u, v)| need[u][v]).min().unwrap_or(0);
        for m in 0..=cap {
            for &(u, v) in &pairs {
                need[u][v] -= m;
            }
            if m > 0 {
                chosen.push((s, m as u32));
            }
            rec(i + 1, n, cuts, need, chosen, out);
            if m > 0 {
                chosen.pop();
            }
            for &(u, v) in &pairs {
                need[u][v] += m;
            }
        }
    }
    rec(0, n, &cuts, &mut need, &mut Vec::new(), &mut out);
    out
}

fn as_masks(search: &CutSearch) -> Option<Vec<(u64, u32)>> {
    let d = search.decomposition()?;
    let mut v: Vec<(u64, u32)> = d.cuts.iter().map(|c| (c.side.iter().map(|&x| 1u64 << x).sum(), c.mult)).collect();
    v.sort();
    Some(v)
}

#[test]
fn pentagon_cut_covers() {
    let c5 = cycle(5).unwrap();
    assert!(all_cut_covers(&c5, 1).is_empty());
    assert!(matches!(cutcone_decompose(&c5, 1, 12).unwrap(), CutSearch::NoneExists { .. }));

    let covers = all_cut_covers(&c5, 2);
    let arcs: Vec<(u64, u32)> = {
        let arc = |i: usize| 1u64 << i | 1u64 << ((i + 1) % 5);
        let mut v: Vec<(u64, u32)> = (0..5).map(|i| (if arc(i) & 1 == 1 { !arc(i) & 0b11111 } else { arc(i) }, 1)).collect();
        v.sort();
        v
    };
    assert_eq!(covers, BTreeSet::from([arcs.clone()]));
    let found = as_masks(&cutcone_decompose(&c5, 2, 12).unwrap()).unwrap();
    assert_eq!(found, arcs);
}

#[test]
fn k23_has_no_cut_cover() {
    let k23 = Skeleton::from_edges("K2,3", 5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    assert!(partial_cube(&k23).unwrap().embedding().is_none());
    for scale in [1, 2] {
        assert!(all_cut_covers(&k23, scale).is_empty());
        assert!(matches!(cutcone_decompose(&k23, scale, 12).unwrap(), CutSearch::NoneExists { .. }));
    }
    let v = find_violation(&k23, &SearchOptions::first(5)).unwrap();
    assert_eq!((v[0].lhs, v[0].rhs), (8, 6));
}

/// All violated k-gonal inequalities, positives first and ascending.
fn brute_violations(g: &Skeleton, k: usize) -> BTreeSet<(Vec<usize>, i64, i64)> {
    let d = apsp(g);
    let pos = (k - 1) / 2;
    let mut out = BTreeSet::new();
    let n = g.n;
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for pm in 0u32..1 << k {
            if pm.count_ones() as usize != pos {
                continue;
            }
            let b: Vec<i64> = (0..k).map(|i| if pm >> i & 1 == 1 { 1 } else { -1 }).collect();
            let (mut lhs, mut rhs, mut finite) = (0, 0, true);
            for i in 0..k {
                for j in i + 1..k {
                    let dij = d.get(set[i], set[j]);
                    finite &= dij != INF;
                    let w = b[i] * b[j] * dij as i64;
                    if w > 0 {
                        lhs += w;
                    } else {
                        rhs -= w;
                    }
                }
            }
            if finite && lhs > rhs {
                let mut tuple: Vec<usize> = (0..k).filter(|&i| b[i] == 1).map(|i| set[i]).collect();
                tuple.extend((0..k).filter(|&i| b[i] == -1).map(|i| set[i]));
                out.insert((tuple, lhs, rhs));
            }
        }
    }
    out
}

fn searched_violations(g: &Skeleton, k: usize) -> BTreeSet<(Vec<usize>, i64, i64)> {
    find_violation(g, &SearchOptions::all(k)).unwrap().into_iter().map(|c| (c.tuple, c.lhs, c.rhs)).collect()
}

#[test]
fn five_gonal_small_graphs() {
    let c5 = cycle(5).unwrap();
    assert!(brute_violations(&c5, 5).is_empty());
    assert!(searched_violations(&c5, 5).is_empty());
    let g = k5_minus_k3();
    let brute = brute_violations(&g, 5);
    assert!(!brute.is_empty());
    assert_eq!(searched_violations(&g, 5), brute);
}

/// Shortest cycle through each edge: drop the edge, measure the detour.
fn brute_girth(g: &Skeleton) -> Option<usize> {
    g.edges()
        .filter_map(|(u, v)| {
            let h = Skeleton::from_edges("minus", g.n, g.edges().filter(|&e| e != (u, v)));
            let d = apsp(&h).get(u, v);
            (d != INF).then_some(d as usize + 1)
        })
        .min()
}

fn floyd(g: &Skeleton) -> Vec<Vec<u32>> {
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; g.n]; g.n];
    for v in 0..g.n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..g.n {
        for i in 0..g.n {
            for j in 0..g.n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

fn small_graph() -> impl Strategy<Value = Skeleton> {
    (4usize..9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Skeleton::from_edges("random", n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn violations_match_brute_force(g in small_graph()) {
        prop_assert_eq!(searched_violations(&g, 5), brute_violations(&g, 5));
        if g.n >= 7 {
            prop_assert_eq!(searched_violations(&g, 7), brute_violations(&g, 7));
        }
    }

    #[test]
    fn girth_and_distances_match_brute_force(g in small_graph()) {
        prop_assert_eq!(girth(&g, false), brute_girth(&g));
        let d = apsp(&g);
        let f = floyd(&g);
        for u in 0..g.n {
            for v in 0..g.n {
                let want = if f[u][v] >= u32::MAX / 2 { INF } else { f[u][v] as u16 };
                prop_assert_eq!(d.get(u, v), want);
            }
        }
    }

    #[test]
    fn scale_one_search_matches_brute_force(g in small_graph().prop_filter("connected, at most 6 vertices", |g| g.n <= 6 && g.is_connected())) {
        let brute = all_cut_covers(&g, 1);
        let found = as_masks(&cutcone_decompose(&g, 1, 12).unwrap());
        match found {
            Some(f) => prop_assert!(brute.contains(&f)),
            None => prop_assert!(brute.is_empty()),
        }
        prop_assert_eq!(partial_cube(&g).unwrap().embedding().is_some(), !brute.is_empty());
    }

    #[test]
    fn scale_two_search_matches_brute_force(g in small_graph().prop_filter("connected, at most 5 vertices", |g| g.n <= 5 && g.is_connected())) {
        let brute = all_cut_covers(&g, 2);
        match as_masks(&cutcone_decompose(&g, 2, 12).unwrap()) {
            Some(f) => prop_assert!(brute.contains(&f)),
            None => prop_assert!(brute.is_empty()),
        }
    }
}
