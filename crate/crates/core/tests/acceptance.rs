//! Acceptance suite: end-to-end checks of the index pipelines against the
//! closed-form values, the brute-force oracle, and each other.
//!
//! Each test prints one `[PASS]` line; run with `-- --nocapture` to see them.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperwiener::benzenoid::{edge_hyper_wiener_benzenoid, random_catacondensed, Benzenoid};
use hyperwiener::cut::{edge_hyper_wiener_cut, tree_edge_hyper_wiener};
use hyperwiener::error::binom2;
use hyperwiener::graph::{
    edge_distance_hat, generate_family, random_tree, DistanceMatrix, Family, Graph,
};
use hyperwiener::oracle::{edge_indices_naive, edge_indices_naive_capped};
use hyperwiener::polyacene::{
    classify_cuts, closed_formulas, generate_polyacene, measured_components, cut_pair_component_counts,
    CutPair,
};
use hyperwiener::theta::{certify_partial_cube, Certification};
use hyperwiener::{IndexReport, Rejection};

/// Graph corpus shared by the equivalence, distance-identity, and recognition criteria:
/// 500 random trees (n <= 60), even cycles C_4..C_40, hypercubes Q_1..Q_6.
fn graph_corpus() -> Vec<(String, Graph)> {
    let mut corpus = Vec::new();
    for i in 0..500u64 {
        let n = 2 + ((i.wrapping_mul(0x9e37_79b9_7f4a_7c15) >> 7) % 59) as usize;
        corpus.push((format!("tree#{i}(n={n})"), random_tree(n, 10_000 + i).unwrap()));
    }
    for k in (4..=40).step_by(2) {
        corpus.push((format!("C{k}"), generate_family(Family::EvenCycle, k).unwrap()));
    }
    for dim in 1..=6 {
        corpus.push((format!("Q{dim}"), generate_family(Family::Hypercube, dim).unwrap()));
    }
    corpus
}

/// 50 random catacondensed benzenoids with 1..=12 hexagons.
fn benzenoid_corpus() -> Vec<(String, Benzenoid)> {
    (0..50u64)
        .map(|i| {
            let hexes = 1 + (i % 12) as usize;
            (
                format!("benzenoid#{i}(h={hexes})"),
                random_catacondensed(hexes, 77_000 + i).unwrap(),
            )
        })
        .collect()
}

fn assert_identities(name: &str, r: &IndexReport) {
    let pairs = binom2(r.m).unwrap();
    assert_eq!(r.edge_wiener, r.edge_wiener_hat + pairs, "{name}: W_e identity");
    assert_eq!(
        r.edge_hyper_wiener,
        2 * r.edge_wiener + r.ww_star - pairs,
        "{name}: WW_e identity"
    );
    assert!(r.edge_hyper_wiener >= r.edge_wiener, "{name}: WW_e >= W_e");
    r.validate().expect("report identities");
}

#[test]
fn acceptance_01_anthracene_ground_truth() {
    let start = Instant::now();
    let b = generate_polyacene(3).unwrap();
    let naive = edge_indices_naive(b.graph()).unwrap();
    let cut = edge_hyper_wiener_cut(b.graph()).unwrap();
    let alg = edge_hyper_wiener_benzenoid(&b).unwrap();
    for (path, r) in [("naive", &naive), ("generic-cut", &cut), ("benzenoid", &alg)] {
        assert_eq!(r.edge_wiener, 350, "W_e(L_3) via {path}");
        assert_eq!(r.edge_hyper_wiener, 812, "WW_e(L_3) via {path}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "[PASS] anthracene ground truth: W_e = 350, WW_e = 812 on all three paths ({:.1} ms)",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn acceptance_02_polyacene_formula_suite() {
    let start = Instant::now();
    for h in 1..=100u64 {
        let formulas = closed_formulas(h).unwrap();
        let report = edge_hyper_wiener_benzenoid(&generate_polyacene(h as usize).unwrap()).unwrap();
        assert_eq!(report.m, formulas.m, "edge count, h = {h}");
        assert_eq!(report.m, 5 * h + 1, "edge count closed form, h = {h}");
        assert_eq!(report.edge_wiener, formulas.w_e, "W_e, h = {h}");
        assert_eq!(report.ww_star, formulas.ww_star, "WW_e*, h = {h}");
        assert_eq!(report.edge_hyper_wiener, formulas.ww_e, "WW_e, h = {h}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "[PASS] polyacene formula suite: h = 1..=100 exact ({:.2} s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn acceptance_03_oracle_equivalence() {
    use hyperwiener::oracle::{line_graph, vertex_indices_naive};
    let mut graphs = 0usize;
    for (name, g) in graph_corpus() {
        let naive = edge_indices_naive(&g).unwrap();
        let cut = edge_hyper_wiener_cut(&g).unwrap();
        assert_eq!(naive.values(), cut.values(), "{name}: cut vs naive");
        if g.is_tree() {
            let tree = tree_edge_hyper_wiener(&g).unwrap();
            assert_eq!(naive.values(), tree.values(), "{name}: tree vs naive");
        }
        // Second independent oracle: W and WW of the explicit line graph.
        if g.edge_count() > 0 && g.edge_count() <= 200 {
            let (w, ww) = vertex_indices_naive(&line_graph(&g).unwrap()).unwrap();
            assert_eq!(naive.edge_wiener, w, "{name}: line-graph W");
            assert_eq!(naive.edge_hyper_wiener, ww, "{name}: line-graph WW");
        }
        graphs += 1;
    }
    let mut benzenoids = 0usize;
    for (name, b) in benzenoid_corpus() {
        let naive = edge_indices_naive(b.graph()).unwrap();
        let cut = edge_hyper_wiener_cut(b.graph()).unwrap();
        let alg = edge_hyper_wiener_benzenoid(&b).unwrap();
        assert_eq!(naive.values(), cut.values(), "{name}: cut vs naive");
        assert_eq!(naive.values(), alg.values(), "{name}: benzenoid vs naive");
        benzenoids += 1;
    }
    println!(
        "[PASS] oracle equivalence: {graphs} graphs + {benzenoids} benzenoids, all methods exact"
    );
}

#[test]
fn acceptance_04_cut_distance_identity() {
    let mut corpus: Vec<(String, Graph)> = graph_corpus();
    corpus.extend(
        benzenoid_corpus()
            .into_iter()
            .map(|(name, b)| (name, b.graph().clone())),
    );
    let mut sampled_pairs = 0u64;
    for (idx, (name, g)) in corpus.iter().enumerate() {
        let cert = match certify_partial_cube(g).unwrap() {
            Certification::Certified(c) => c,
            Certification::Rejected(r) => panic!("{name}: unexpected rejection {r}"),
        };
        let dm = DistanceMatrix::compute(g).unwrap();
        let m = g.edge_count();
        if m < 2 {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(4242 + idx as u64);
        for _ in 0..1000 {
            let e = rng.random_range(0..m);
            let f = rng.random_range(0..m);
            let by_bfs = edge_distance_hat(g, e, f, &dm).unwrap();
            let by_cuts = cert.sides.separating_classes(e, f);
            assert_eq!(by_bfs, by_cuts, "{name}: edge pair ({e}, {f})");
            sampled_pairs += 1;
        }
    }
    println!(
        "[PASS] cut distance identity: d-hat equals separating-class count on {sampled_pairs} sampled pairs"
    );
}

#[test]
fn acceptance_05_recognition() {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    match certify_partial_cube(&c5).unwrap() {
        Certification::Rejected(Rejection::NotBipartite { odd_cycle }) => {
            assert_eq!(odd_cycle.len() % 2, 1);
        }
        other => panic!("C5: expected odd-cycle rejection, got {other:?}"),
    }

    let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    match certify_partial_cube(&k23).unwrap() {
        Certification::Rejected(Rejection::ClassNotCut { .. }) => {}
        other => panic!("K23: expected class-not-a-cut rejection, got {other:?}"),
    }

    let mut certified = 0usize;
    for (name, g) in graph_corpus() {
        match certify_partial_cube(&g).unwrap() {
            Certification::Certified(cert) => {
                assert_eq!(cert.labeling.dimension(), cert.theta.count(), "{name}");
                certified += 1;
            }
            Certification::Rejected(r) => panic!("{name}: unexpected rejection {r}"),
        }
    }
    for (name, b) in benzenoid_corpus() {
        match certify_partial_cube(b.graph()).unwrap() {
            Certification::Certified(_) => certified += 1,
            Certification::Rejected(r) => panic!("{name}: unexpected rejection {r}"),
        }
    }
    println!(
        "[PASS] recognition: C5 and K23 rejected with named reasons; {certified} corpus graphs certified"
    );
}

#[test]
fn acceptance_06_cut_pair_component_fixture_l4() {
    let h = 4u64;
    let b = generate_polyacene(h as usize).unwrap();
    let names = classify_cuts(&b).unwrap();
    let m = b.graph().edge_count() as u64;
    assert_eq!(names.len(), 9);
    let mut pairs = 0usize;
    for k in 0..names.len() {
        for l in (k + 1)..names.len() {
            let expected = cut_pair_component_counts(h, CutPair(names[k], names[l])).unwrap();
            let remaining = m - b.cuts()[k].len() as u64 - b.cuts()[l].len() as u64;
            let measured = measured_components(&b, k, l);
            assert_eq!(
                measured,
                expected.multiset(remaining),
                "pair {:?}, {:?}",
                names[k],
                names[l]
            );
            pairs += 1;
        }
    }
    assert_eq!(pairs, 36);
    println!("[PASS] cut-pair component fixture: all {pairs} cut pairs of L_4 match the symbolic rows");
}

#[test]
fn acceptance_07_structural_identities() {
    let mut reports = 0usize;
    for (name, g) in graph_corpus() {
        assert_identities(&name, &edge_indices_naive(&g).unwrap());
        assert_identities(&name, &edge_hyper_wiener_cut(&g).unwrap());
        reports += 2;
        if g.is_tree() {
            assert_identities(&name, &tree_edge_hyper_wiener(&g).unwrap());
            reports += 1;
        }
    }
    for (name, b) in benzenoid_corpus() {
        assert_identities(&name, &edge_hyper_wiener_benzenoid(&b).unwrap());
        reports += 1;
    }
    println!(
        "[PASS] structural identities: W_e - What_e = C(m,2), WW_e = 2W_e + WW_e* - C(m,2), WW_e >= W_e in {reports} reports"
    );
}

#[test]
fn acceptance_08_performance_l200() {
    let b = generate_polyacene(200).unwrap();
    assert_eq!(b.graph().edge_count(), 1001);

    fn best3<T>(f: impl Fn() -> T) -> (T, Duration) {
        let mut runs = (0..3).map(|_| {
            let t = Instant::now();
            let value = f();
            (value, t.elapsed())
        });
        let first = runs.next().unwrap();
        runs.fold(first, |best, run| if run.1 < best.1 { run } else { best })
    }
    let (cut_values, cut_time) = best3(|| edge_hyper_wiener_benzenoid(&b).unwrap().values());
    let (naive_values, naive_time) =
        best3(|| edge_indices_naive_capped(b.graph(), usize::MAX).unwrap().values());
    assert_eq!(cut_values, naive_values, "methods disagree on L_200");
    assert!(
        cut_time < Duration::from_millis(500),
        "cut-based WW_e took {cut_time:?}"
    );
    assert!(
        cut_time < naive_time,
        "cut-based ({cut_time:?}) not faster than naive ({naive_time:?})"
    );
    println!(
        "[PASS] performance: L_200 cut-based {:.1} ms < naive {:.1} ms, bound 500 ms",
        cut_time.as_secs_f64() * 1e3,
        naive_time.as_secs_f64() * 1e3
    );
}
