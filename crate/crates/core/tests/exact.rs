mod common;

use common::{best_subset, naive_is_induced_tree, random_corpus};
use itree::exact::{
    f_search_native, f_search_stream, independence_number, induced_tree_at_least,
    is_up_growing, max_induced_tree, max_induced_tree_naive, max_up_growing_top_count,
    FSearchOptions, GraphClass, OnStreamError, Source,
};
use itree::extract::{extract_bipartite, extract_triangle_free, ExtractOptions};
use itree::generators::{classic, path_of_bicliques, truncated_path_of_bicliques};
use itree::io::{parse_graph6, write_graph6};
use itree::levels::{bfs_levels, LevelDecomposition};
use serde::Deserialize;

const BUDGET: u64 = 50_000_000;

#[derive(Deserialize)]
struct Golden {
    n: usize,
    class: GraphClass,
    value: usize,
    argmin_count: u64,
}

fn golden() -> Vec<Golden> {
    include_str!("data/fsearch_golden.jsonl")
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn biclique_paths_have_2k_minus_1() {
    for k in 2..=4 {
        let g = path_of_bicliques(k).unwrap().graph;
        let r = max_induced_tree(&g, BUDGET);
        assert!(r.exhausted);
        assert_eq!(r.value, 2 * k - 1, "k={k}");
        assert!(g.is_induced_tree(&r.witness));
        assert_eq!(max_induced_tree_naive(&g).unwrap().value, 2 * k - 1);
    }
}

#[test]
fn truncated_construction_on_fifteen_vertices_has_seven() {
    let g = truncated_path_of_bicliques(15).graph;
    assert_eq!(g.n(), 15);
    assert!(g.is_connected() && g.is_bipartite());
    assert_eq!(max_induced_tree(&g, BUDGET).value, 7);
    assert_eq!(max_induced_tree_naive(&g).unwrap().value, 7);
}

#[test]
fn truncated_construction_stays_under_the_square_root_bound() {
    for n in 1..=25 {
        let g = truncated_path_of_bicliques(n).graph;
        let t = max_induced_tree(&g, BUDGET).value;
        let k = (1..).find(|k| k * k >= n).unwrap();
        assert!(t < 2 * k, "n={n}");
        if k * k == n {
            assert_eq!(t, 2 * k - 1);
        }
        assert!((t as f64) < 2.0 * (n as f64).sqrt() + 1.0);
    }
}

#[test]
fn branch_and_bound_matches_subsets_on_the_atlas() {
    for g in common::atlas() {
        let fast = max_induced_tree(&g, BUDGET);
        let slow = max_induced_tree_naive(&g).unwrap();
        assert_eq!(fast.value, slow.value, "{}", write_graph6(&g).unwrap());
        assert!(fast.witness.is_empty() || naive_is_induced_tree(&g, &fast.witness));
    }
}

#[test]
fn branch_and_bound_matches_subsets_on_random_graphs() {
    for g in random_corpus(150, 14, 11) {
        let fast = max_induced_tree(&g, BUDGET);
        assert!(fast.exhausted);
        assert_eq!(fast.value, max_induced_tree_naive(&g).unwrap().value);
        assert_eq!(fast.witness.len(), fast.value);
    }
}

#[test]
fn early_stop_is_exact_below_the_target() {
    for g in random_corpus(100, 12, 5) {
        let t = max_induced_tree(&g, BUDGET).value;
        let below = induced_tree_at_least(&g, t + 1, BUDGET);
        assert_eq!(below.value, t);
        let at = induced_tree_at_least(&g, t, BUDGET);
        assert_eq!(at.value, t);
        assert!(naive_is_induced_tree(&g, &at.witness) || t == 0);
    }
}

#[test]
fn identical_inputs_give_identical_witnesses() {
    let g = path_of_bicliques(4).unwrap().graph;
    assert_eq!(max_induced_tree(&g, BUDGET), max_induced_tree(&g, BUDGET));
    for budget in [1, 10, 100, 1000] {
        assert_eq!(max_induced_tree(&g, budget), max_induced_tree(&g, budget));
    }
}

#[test]
fn independence_number_matches_subsets() {
    assert_eq!(independence_number(&classic::cycle(5)).unwrap().value, 2);
    assert_eq!(independence_number(&classic::complete_bipartite(3, 3)).unwrap().value, 3);
    for g in random_corpus(150, 12, 3) {
        let r = independence_number(&g).unwrap();
        assert!(g.is_independent(&r.witness));
        assert_eq!(r.value, r.witness.len());
        assert_eq!(r.value, best_subset(&g, |s| g.is_independent(s)));
    }
    assert!(independence_number(&itree::Graph::empty(41)).is_err());
}

#[test]
fn trees_are_at_most_twice_alpha() {
    let atlas = common::atlas();
    for g in atlas.iter().chain(&random_corpus(200, 14, 9)) {
        let t = max_induced_tree(g, BUDGET).value;
        let alpha = independence_number(g).unwrap().value;
        assert!(t <= 2 * alpha);
    }
}

#[test]
fn extractors_never_beat_the_exact_value() {
    for g in common::atlas().iter().filter(|g| g.n() > 0 && g.is_connected()) {
        let exact = max_induced_tree(g, BUDGET).value;
        for t in [3, 4, common::construction_t(g, 0)] {
            let opts = ExtractOptions { t, root: 0 };
            if g.is_triangle_free() {
                let e = extract_triangle_free(g, opts).unwrap();
                assert!(e.tree.vertices.len() <= exact);
            }
            if g.is_bipartite() {
                let e = extract_bipartite(g, opts).unwrap();
                assert!(e.tree.vertices.len() <= exact);
            }
        }
    }
}

#[test]
fn native_search_matches_the_golden_runs() {
    let opts = FSearchOptions::default();
    for row in golden() {
        let r = f_search_native(row.n, row.class, &opts).unwrap();
        assert_eq!(r.value, Some(row.value), "n={} {:?}", row.n, row.class);
        assert_eq!(r.argmin_count, row.argmin_count, "n={} {:?}", row.n, row.class);
        assert_eq!(r.source, Source::NativeEnumeration);
        for text in &r.argmin_graphs {
            let g = parse_graph6(text.as_bytes()).unwrap();
            assert!(g.is_connected() && row.class.contains(&g));
            assert_eq!(max_induced_tree_naive(&g).unwrap().value, row.value);
        }
    }
}

#[test]
fn bipartite_minimum_stays_under_the_construction_bound() {
    let opts = FSearchOptions::default();
    for n in 1..=7 {
        let r = f_search_native(n, GraphClass::Bipartite, &opts).unwrap();
        let root = (1..).find(|k| k * k >= n).unwrap();
        assert!(r.value.unwrap() <= 2 * root + 1, "n={n}");
        let tf = f_search_native(n, GraphClass::TriangleFree, &opts).unwrap();
        assert!(tf.value <= r.value);
    }
}

#[test]
fn stream_search_agrees_with_native_search_on_the_atlas() {
    let opts = FSearchOptions {
        on_error: OnStreamError::Abort,
        ..Default::default()
    };
    for n in 1..=6 {
        for class in [GraphClass::TriangleFree, GraphClass::Bipartite] {
            let stream = f_search_stream(n, class, common::ATLAS, &opts).unwrap();
            let native = f_search_native(n, class, &opts).unwrap();
            assert_eq!(stream.value, native.value, "n={n} {class:?}");
            assert_eq!(stream.source, Source::ExternalStream);
            assert!(stream.issues.is_empty());
        }
    }
}

#[test]
fn up_growing_checker_on_a_blown_up_path() {
    let p = path_of_bicliques(2).unwrap();
    let levels = LevelDecomposition::from_levels(p.graph.n(), p.levels.clone()).unwrap();
    let r = max_up_growing_top_count(&p.graph, &levels, BUDGET).unwrap();
    assert_eq!(r.value, 1);
    assert!(is_up_growing(&p.graph, &levels, &r.witness));

    // C_6 from 0: levels {0}, {1,5}, {2,4}, {3}; the whole path 1..5 minus
    // the top is up-growing only from one side
    let c6 = classic::cycle(6);
    let levels = bfs_levels(&c6, 0).unwrap();
    assert!(is_up_growing(&c6, &levels, &[0, 1, 2, 3]));
    assert!(!is_up_growing(&c6, &levels, &[1, 2, 3, 4]));
    assert_eq!(max_up_growing_top_count(&c6, &levels, BUDGET).unwrap().value, 1);
}
