//! Acceptance criteria 1-9, one line each. Runs as a plain binary so the
//! verdict lines are always printed; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{construction_t, from_pair_bits, random_corpus, random_split_case, random_view, rng};
use itree::bound::{int, pow, Rational};
use itree::certify::{check_extraction, check_split, check_up_forest};
use itree::exact::{
    f_search_native, independence_number, max_induced_tree, max_induced_tree_naive, FSearchOptions,
    GraphClass,
};
use itree::extract::{default_target_size, extract_triangle_free, ExtractOptions};
use itree::generators::{
    blow_up, classic, path_of_bicliques, random_connected_bipartite,
    random_connected_triangle_free, random_graph, truncated_path_of_bicliques, BlowUpSpec,
};
use itree::io::{parse_graph6, write_graph6};
use itree::lemmas::{select_up_forest, split_is_or_im, SelectionOutcome};
use itree::view::BipartiteView;
use itree::Graph;
use rand::Rng;
use serde::Deserialize;

const BUDGET: u64 = 200_000_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ceil(r: Rational) -> u128 {
    r.ceil().to_integer()
}

fn construction_value() -> Outcome {
    let mut values = Vec::new();
    for k in 2..=4 {
        let g = path_of_bicliques(k).map_err(|e| e.to_string())?.graph;
        let r = max_induced_tree(&g, BUDGET);
        ensure(r.exhausted && r.value == 2 * k - 1, || {
            format!("k={k}: t={} exhausted={}", r.value, r.exhausted)
        })?;
        values.push(format!("k={k}: {}", r.value));
    }
    Ok(values.join(", "))
}

#[derive(Deserialize)]
struct Golden {
    n: usize,
    class: GraphClass,
    value: usize,
    argmin_count: u64,
}

fn upper_bound_instantiation() -> Outcome {
    let g = truncated_path_of_bicliques(15).graph;
    ensure(g.n() == 15 && g.is_connected() && g.is_triangle_free(), || "bad construction".into())?;
    let t = max_induced_tree(&g, BUDGET);
    ensure(t.exhausted && t.value == 7, || format!("t = {} on n = 15", t.value))?;
    let rows: Vec<Golden> = include_str!("data/fsearch_golden.jsonl")
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut checked = 0;
    for row in rows.iter().filter(|r| r.class == GraphClass::TriangleFree) {
        let r = f_search_native(row.n, row.class, &FSearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.value == Some(row.value) && r.argmin_count == row.argmin_count, || {
            format!("n={}: got {:?}/{}, golden {}/{}", row.n, r.value, r.argmin_count, row.value, row.argmin_count)
        })?;
        checked += 1;
    }
    ensure(checked == 5, || format!("golden covers {checked} orders"))?;
    Ok("t(n=15 construction) = 7; f_T(1..5) = 1,2,3,3,4 matches golden".into())
}

fn oracle_corpus() -> Vec<Graph> {
    let mut corpus = common::atlas();
    corpus.extend(random_corpus(500, 14, 2024));
    corpus
}

fn oracle_equivalence() -> Outcome {
    let corpus = oracle_corpus();
    let mut mismatches = 0;
    for g in &corpus {
        let fast = max_induced_tree(g, BUDGET);
        let slow = max_induced_tree_naive(g).map_err(|e| e.to_string())?;
        if !fast.exhausted || fast.value != slow.value {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!("{} graphs (1253 atlas + 500 random), 0 mismatches", corpus.len()))
}

fn lemma4_suite() -> Outcome {
    let mut r = rng(4004);
    let (mut matching, mut branching) = (0, 0);
    for i in 0..1000 {
        let c = random_view(60, &mut r);
        let view = BipartiteView::new(&c.graph, &c.top, &c.bottom).map_err(|e| e.to_string())?;
        let a = c.top.len();
        let outcome = select_up_forest(&view, c.eta).map_err(|e| format!("case {i}: {e}"))?;
        let verdict = check_up_forest(&c.graph, &c.top, &c.bottom, c.eta, &outcome);
        ensure(verdict.ok, || format!("case {i}: {:?}", verdict.failures))?;
        match &outcome {
            SelectionOutcome::Matching { forest, .. } => {
                matching += 1;
                let need = ceil((int(1) - c.eta) * int(a));
                ensure(forest.edges.len() as u128 >= need, || format!("case {i}: matching below threshold"))?;
            }
            SelectionOutcome::Branching { forest, .. } => {
                branching += 1;
                let need = c.eta * int(a) / pow(view.max_degree(), 3);
                ensure(int(forest.bottom.len()) >= need, || format!("case {i}: b(F) below threshold"))?;
            }
            other => return Err(format!("case {i}: unexpected {:?}", other.case())),
        }
    }
    Ok(format!("1000 views: {matching} matching, {branching} branching, 0 failures"))
}

fn lemma5_suite() -> Outcome {
    let mut r = rng(5005);
    let (mut is, mut im) = (0, 0);
    for i in 0..1000 {
        let (g, set, eta) = random_split_case(80, &mut r);
        let outcome = split_is_or_im(&g, &set, eta).map_err(|e| format!("case {i}: {e}"))?;
        let verdict = check_split(&g, &set, eta, &outcome);
        ensure(verdict.ok, || format!("case {i}: {:?}", verdict.failures))?;
        let n = set.len();
        match &outcome {
            SelectionOutcome::IndependentSet { vertices, .. } => {
                is += 1;
                ensure(g.is_independent(vertices), || format!("case {i}: not independent"))?;
                ensure(vertices.len() as u128 >= ceil((int(1) - eta) * int(n)), || format!("case {i}: IS too small"))?;
            }
            SelectionOutcome::InducedMatching { edges, .. } => {
                im += 1;
                let ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
                let (h, _) = g.induced_subgraph(&ends);
                ensure(h.edge_count() == edges.len() && h.vertices().all(|v| h.degree(v) == 1), || {
                    format!("case {i}: matching not induced")
                })?;
                let delta = g.max_degree_within(&set).max(1);
                ensure(int(edges.len()) >= eta * int(n) / int(2 * delta), || format!("case {i}: IM too small"))?;
            }
            other => return Err(format!("case {i}: unexpected {:?}", other.case())),
        }
    }
    Ok(format!("1000 graphs: {is} independent sets, {im} induced matchings, 0 failures"))
}

fn certificate_suite() -> Outcome {
    let mut r = rng(6006);
    let mut instances: Vec<Graph> = (0..200)
        .map(|_| {
            let n = r.random_range(1..=500);
            random_connected_triangle_free(n, r.random_range(0..3 * n), r.random())
        })
        .collect();
    let blow_ups = [
        (classic::cycle(5), vec![0, 1, 2, 3, 4], 4),
        (classic::cycle(5), vec![0, 2, 4], 8),
        (classic::cycle(7), vec![0, 2, 4, 6], 5),
        (classic::path(4), vec![0, 1, 3], 9),
        (classic::complete_bipartite(2, 3), vec![2, 0, 3, 4], 5),
        (classic::complete_bipartite(3, 3), vec![0, 3, 1, 4, 2], 4),
        (random_connected_triangle_free(12, 10, 1), vec![0, 3, 6, 9], 4),
        (random_connected_triangle_free(20, 25, 2), vec![0, 5, 10], 6),
        (random_connected_bipartite(9, 6, 3), vec![0, 1, 2, 3, 4], 3),
        (classic::cycle(6), vec![0, 1, 2, 3, 4, 5], 3),
    ];
    for (base, ports, depth) in blow_ups {
        let b = blow_up(&BlowUpSpec { base, ports, depth }, 5000).map_err(|e| e.to_string())?;
        instances.push(b.graph);
    }
    let (mut traced, mut steps, mut largest_b) = (0, 0, 0);
    for (i, g) in instances.iter().enumerate() {
        for t in [construction_t(g, 0), default_target_size(g.n(), 0.3).max(3)] {
            let e = extract_triangle_free(g, ExtractOptions { t, root: 0 }).map_err(|e| format!("instance {i}: {e}"))?;
            ensure(g.is_induced_tree(&e.tree.vertices), || format!("instance {i}: not an induced tree"))?;
            let verdict = check_extraction(g, t, &e);
            ensure(verdict.ok, || format!("instance {i}, t={t}: {:?}", verdict.failures))?;
            if let Some(trace) = &e.trace {
                traced += 1;
                steps += trace.steps.len();
                largest_b = largest_b.max(trace.b());
                ensure(trace.steps.iter().all(|s| s.bounds.iter().all(|b| b.holds())), || {
                    format!("instance {i}: a step bound fails")
                })?;
                ensure(e.tree.vertices.len() as u128 >= trace.guaranteed_size(), || {
                    format!("instance {i}: fewer than 2^b vertices")
                })?;
            } else {
                ensure(t != construction_t(g, 0), || format!("instance {i}: construction skipped"))?;
            }
        }
    }
    Ok(format!(
        "{} instances, {traced} level constructions, {steps} steps, max b = {largest_b}, 0 failures",
        instances.len()
    ))
}

fn ess_bound() -> Outcome {
    let corpus = oracle_corpus();
    for (i, g) in corpus.iter().enumerate() {
        let t = max_induced_tree(g, BUDGET).value;
        let alpha = independence_number(g).map_err(|e| e.to_string())?.value;
        ensure(t <= 2 * alpha, || format!("graph {i}: t = {t} > 2 * {alpha}"))?;
    }
    Ok(format!("{} graphs, 0 violations", corpus.len()))
}

fn blow_up_structure() -> Outcome {
    let mut r = rng(8008);
    let mut specs = vec![
        BlowUpSpec { base: classic::complete(3), ports: vec![0, 1, 2], depth: 2 },
        BlowUpSpec { base: classic::cycle(5), ports: vec![0, 1, 2, 3, 4], depth: 3 },
        BlowUpSpec { base: classic::complete_bipartite(2, 2), ports: vec![0, 2, 1], depth: 6 },
    ];
    for _ in 0..100 {
        let n = r.random_range(3..=10);
        let base = if r.random_bool(0.5) {
            random_connected_triangle_free(n, r.random_range(0..2 * n), r.random())
        } else {
            random_connected_bipartite(n, r.random_range(0..2 * n), r.random())
        };
        let m = r.random_range(3..=n.min(6));
        specs.push(BlowUpSpec { base, ports: (0..m).collect(), depth: r.random_range(0..=4) });
    }
    for (i, s) in specs.iter().enumerate() {
        let b = blow_up(s, 1_000_000).map_err(|e| e.to_string())?;
        let rr = s.arity() as u128;
        let expected = s.base.n() as u128 * (rr.pow(s.depth as u32 + 1) - 1) / (rr - 1);
        ensure(b.graph.n() as u128 == expected, || format!("spec {i}: {} vertices, expected {expected}", b.graph.n()))?;
        ensure(!s.base.is_triangle_free() || b.graph.is_triangle_free(), || format!("spec {i}: triangle appeared"))?;
        ensure(!s.base.is_bipartite() || b.graph.is_bipartite(), || format!("spec {i}: odd cycle appeared"))?;
    }
    Ok(format!("{} specs, 0 failures", specs.len()))
}

fn round_trip(g: &Graph) -> Result<(), String> {
    let text = write_graph6(g).map_err(|e| e.to_string())?;
    let back = parse_graph6(text.as_bytes()).map_err(|e| e.to_string())?;
    let again = write_graph6(&back).map_err(|e| e.to_string())?;
    ensure(again == text && &back == g, || format!("{text} re-encodes as {again}"))
}

fn graph6_round_trip() -> Outcome {
    let mut exhaustive = 0;
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u32..1 << pairs {
            let bits: Vec<bool> = (0..pairs).map(|b| mask >> b & 1 == 1).collect();
            round_trip(&from_pair_bits(n, &bits))?;
            exhaustive += 1;
        }
    }
    let mut r = rng(9009);
    for _ in 0..1000 {
        let n = r.random_range(0..=62);
        round_trip(&random_graph(n, r.random_range(0.0..1.0), r.random()))?;
    }
    Ok(format!("{exhaustive} labeled graphs with n <= 6 + 1000 random, 0 failures"))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("construction value t(P_k of bicliques) = 2k-1", Duration::from_secs(10), construction_value),
        ("upper-bound instantiation n = 15 and golden f_T", Duration::from_secs(300), upper_bound_instantiation),
        ("branch and bound equals all-subsets oracle", Duration::from_secs(600), oracle_equivalence),
        ("up-forest dichotomy property suite", Duration::from_secs(60), lemma4_suite),
        ("independent set / induced matching suite", Duration::from_secs(60), lemma5_suite),
        ("triangle-free extraction certificates", Duration::from_secs(300), certificate_suite),
        ("t(G) <= 2 alpha(G) on the n <= 14 corpus", Duration::MAX, ess_bound),
        ("blow-up size and class preservation", Duration::MAX, blow_up_structure),
        ("graph6 byte-identical round trip", Duration::MAX, graph6_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > limit {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(detail)
            }
        });
        let limit = if limit == Duration::MAX { String::new() } else { format!(", limit {}s", limit.as_secs()) };
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} ({elapsed:.2?}{limit})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail} ({elapsed:.2?}{limit})", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
