use proptest::prelude::*;

use cutlattice::cli::{Config, Graph};
use cutlattice::embeddings::{
    balanced_arcs_check, catalog_embedding, catalog_names, cutcone_decompose, verify, CutDecomposition, Embedding,
};
use cutlattice::hypermetrics::{find_violation, SearchOptions, ViolationCertificate};
use cutlattice::metrics::{apsp, shortest_cycle_at, INF};
use cutlattice::schlafli::SchlafliSymbol;
use cutlattice::skeletons::{k5_minus_k3, tiling_patch, Skeleton, TilingOptions};

fn connected_graph() -> impl Strategy<Value = Skeleton> {
    (3usize..14).prop_flat_map(|n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (tree, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            Skeleton::from_edges("random", n, edges)
        })
    })
}

fn symbol_text() -> impl Strategy<Value = String> {
    let entry = prop_oneof![
        (2u64..13).prop_map(|p| p.to_string()),
        (5u64..13, 2u64..5).prop_filter("coprime proper fraction", |&(p, q)| q < p && num_integer::gcd(p, q) == 1)
            .prop_map(|(p, q)| format!("{p}/{q}")),
        Just("inf".to_string()),
    ];
    proptest::collection::vec(entry, 2..6).prop_map(|v| format!("{{{}}}", v.join(",")))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn distances_form_a_metric(g in connected_graph()) {
        let d = apsp(&g);
        for u in 0..g.n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..g.n {
                prop_assert!(d.get(u, v) != INF);
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..g.n {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn skeleton_json_roundtrip(g in connected_graph()) {
        prop_assert_eq!(Skeleton::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn embedding_json_roundtrip(labels in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 7), 1..12), scale in 1u32..5) {
        let e = Embedding { scale, dim: 7, labels: labels.into_iter().map(|l| l.into_iter().collect()).collect() };
        prop_assert_eq!(Embedding::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn symbol_display_roundtrip(text in symbol_text()) {
        let s = SchlafliSymbol::parse(&text).unwrap();
        prop_assert_eq!(s.to_string(), text.clone());
        prop_assert_eq!(SchlafliSymbol::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn scale_one_cuts_give_valid_labels(g in connected_graph().prop_filter("small", |g| g.n <= 9)) {
        if let Some(d) = cutcone_decompose(&g, 1, 12).unwrap().decomposition() {
            let e = d.to_embedding(g.n);
            prop_assert!(verify(&g, &e, false).unwrap().is_valid());
            let text = d.to_json();
            prop_assert_eq!(&serde_json::from_str::<CutDecomposition>(&text).unwrap(), d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn patch_json_roundtrip(which in 0usize..6, radius in 1usize..3, margin in 0usize..3) {
        let s = ["{4,4}", "{6,3}", "{3,6}", "{7,3}", "{5,4}", "{3,7}"][which];
        let p = tiling_patch(&SchlafliSymbol::parse(s).unwrap(), TilingOptions::new(radius, margin)).unwrap();
        let g = Graph::Patch(p);
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn config_text_roundtrip(n_max in 1usize..24, cap in 1usize..1_000_000, tuples in 1u64..u64::MAX, tiny in any::<bool>()) {
        let text = format!("n_max = {n_max}\nvertex_cap = {cap}\nmax_tuples = {tuples}\nbudget = {}\n", if tiny { "tiny" } else { "default" });
        let c = Config::parse(&text).unwrap();
        prop_assert_eq!(Config::parse(&c.to_text()).unwrap(), c);
    }
}

#[test]
fn certificate_json_roundtrip() {
    let g = k5_minus_k3();
    for c in find_violation(&g, &SearchOptions::all(5)).unwrap() {
        let back: ViolationCertificate = serde_json::from_str(&c.to_json()).unwrap();
        assert!(back.recheck(&apsp(&g)));
        assert_eq!(back, c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Flipping one bit of a catalog embedding breaks both the defining
    /// equality and the arc balance of a shortest cycle through the vertex.
    #[test]
    fn corruption_is_detected(item in 0usize..22, vertex in any::<prop::sample::Index>(), bit in any::<prop::sample::Index>()) {
        let names = catalog_names();
        let item = catalog_embedding(names[item % names.len()]).unwrap();
        let v = vertex.index(item.graph.n);
        let mut e = item.embedding.clone();
        let b = bit.index(e.dim);
        let flipped = !e.labels[v][b];
        e.labels[v].set(b, flipped);
        prop_assert!(!verify(&item.graph, &e, false).unwrap().is_valid());
        let cycle = shortest_cycle_at(&item.graph, v).unwrap();
        if balanced_arcs_check(&item.graph, &item.embedding, &cycle).is_ok() {
            prop_assert!(!balanced_arcs_check(&item.graph, &e, &cycle).unwrap());
        }
    }
}
