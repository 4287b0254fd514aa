//! End-to-end checks of everything this library promises, one test per
//! criterion. Each prints a single `pass` line; run with `--nocapture` to
//! see them all.

use std::time::{Duration, Instant};

use parametric_mst::bicriterion::{optimize, to_parametric, Objective};
use parametric_mst::construct::{
    check_triangle_lemma, complete_2tree, lower_bound_value, pack, recursive_weights,
    subdivision_check, theorem_instance, verify_crossing_order,
};
use parametric_mst::oracle::{all_spanning_trees, oracle_sequence};
use parametric_mst::random::{random_biweighted_graph, random_connected_graph, seeded};
use parametric_mst::sweep::{enumerate_by_midpoints, enumerate_by_swaps};
use parametric_mst::{Error, Rational};

fn pass(criterion: usize, detail: &str) {
    println!("ACCEPTANCE {criterion}: pass - {detail}");
}

#[test]
fn criterion_1_construction_counts() {
    let start = Instant::now();
    for i in 0..=8usize {
        let g = complete_2tree(i);
        let edges = 3usize.pow(i as u32);
        assert_eq!(g.edge_count(), edges, "level {i} edge count");
        assert_eq!(g.vertex_count(), (edges + 3) / 2, "level {i} vertex count");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(1, &format!("levels 0..=8 sized exactly, {elapsed:?}"));
}

#[test]
fn criterion_2_sequence_lengths_meet_reference_counts() {
    let bounds = [1usize, 3, 12, 48, 183];
    let start = Instant::now();
    let mut observed = Vec::new();
    for (i, &bound) in bounds.iter().enumerate() {
        let g = recursive_weights(i);
        let len = enumerate_by_midpoints(&g).unwrap().sequence_length();
        assert!(len >= bound, "level {i}: observed {len} below {bound}");
        assert_eq!(bound as u64, lower_bound_value(i as u32));
        observed.push(len);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(2, &format!("observed {observed:?} against bounds {bounds:?}, {elapsed:?}"));
}

#[test]
#[ignore = "stretch target, takes minutes; run with --ignored"]
fn criterion_2_stretch_level_5() {
    let start = Instant::now();
    let g = recursive_weights(5);
    let len = enumerate_by_midpoints(&g).unwrap().sequence_length();
    assert!(len >= 669, "observed {len} below 669");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    pass(2, &format!("stretch: level 5 observed {len} >= 669, {elapsed:?}"));
}

#[test]
fn criterion_3_sweep_equals_oracle() {
    for level in [1, 2] {
        let g = recursive_weights(level);
        let sweep = enumerate_by_midpoints(&g).unwrap();
        let oracle = oracle_sequence(&g, 1_000_000).unwrap();
        assert_eq!(sweep, oracle, "level {level} construction");
    }
    let mut rng = seeded(2026);
    for trial in 0..200 {
        let g = random_connected_graph(&mut rng, 6, 10, 20);
        let sweep = enumerate_by_midpoints(&g).unwrap();
        let oracle = oracle_sequence(&g, 1_000_000).unwrap();
        assert_eq!(sweep, oracle, "trial {trial}");
    }
    pass(3, "midpoint sweep equals envelope oracle on constructions and 200 random graphs");
}

#[test]
fn criterion_4_swaps_agree_with_midpoints() {
    let mut checked = 0usize;
    let mut degenerate = 0usize;
    for level in 0..=4usize {
        let g = recursive_weights(level);
        let by_swaps = enumerate_by_swaps(&g).expect("construction weights are simple");
        assert_eq!(by_swaps, enumerate_by_midpoints(&g).unwrap(), "level {level}");
        checked += 1;
    }
    let mut rng = seeded(2027);
    for trial in 0..200 {
        let g = random_connected_graph(&mut rng, 6, 10, 20);
        match enumerate_by_swaps(&g) {
            Ok(by_swaps) => {
                assert_eq!(by_swaps, enumerate_by_midpoints(&g).unwrap(), "trial {trial}");
                checked += 1;
            }
            Err(Error::DegenerateCrossings) => degenerate += 1,
            Err(e) => panic!("trial {trial}: unexpected error {e}"),
        }
    }
    pass(4, &format!("{checked} inputs agree ({degenerate} degenerate inputs skipped)"));
}

#[test]
fn criterion_5_bottleneck_replacement_property() {
    let report = check_triangle_lemma(1000, 2028);
    assert_eq!(report.trials, 1000);
    assert!(report.passed(), "failures: {:?}", report.failures);
    pass(5, "1000 triangle-replacement trials, zero failures");
}

#[test]
fn criterion_6_packed_instance() {
    let start = Instant::now();
    let base = recursive_weights(2);
    let packed = pack(&base, 3).unwrap();
    assert_eq!(packed.vertex_count(), 33);
    assert_eq!(packed.edge_count(), 72);
    for j in 1..=3 {
        assert!(subdivision_check(&base, &packed, j), "copy {j} subdivision");
    }
    let len = enumerate_by_midpoints(&packed).unwrap().sequence_length();
    assert!(len >= 72, "observed {len} below 2kT = 72");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    pass(6, &format!("33 vertices, 72 edges, sequence {len} >= 72, {elapsed:?}"));
}

#[test]
fn criterion_7_theorem_instances_meet_their_bounds() {
    let mut rng = seeded(2029);
    let mut cases: Vec<(usize, usize)> = Vec::new();
    while cases.len() < 17 {
        let n = 5 + (rng_next(&mut rng) % 24) as usize;
        let lo = 2 * n - 3;
        let hi = (n * (n - 1) / 2).min(lo + 40);
        let m = lo + (rng_next(&mut rng) as usize) % (hi - lo + 1);
        cases.push((n, m));
    }
    // Dense cases exercise the star fallback.
    cases.push((6, 15));
    cases.push((8, 28));
    cases.push((10, 45));
    assert_eq!(cases.len(), 20);

    for &(n, m) in &cases {
        let inst = theorem_instance(n, m).unwrap_or_else(|e| panic!("({n}, {m}): {e}"));
        assert_eq!(inst.graph.vertex_count(), n, "({n}, {m}) vertex count");
        assert_eq!(inst.graph.edge_count(), m, "({n}, {m}) edge count");
        let seq = enumerate_by_midpoints(&inst.graph).unwrap();
        assert!(
            seq.sequence_length() as u64 >= inst.bound,
            "({n}, {m}): length {} below bound {}",
            seq.sequence_length(),
            inst.bound
        );
        for interval in seq.intervals() {
            for &pad in &inst.pads {
                assert!(!interval.tree.contains(pad), "({n}, {m}): pad {pad} entered a tree");
            }
            for &bridge in &inst.leaf_bridges {
                assert!(interval.tree.contains(bridge), "({n}, {m}): bridge {bridge} missing");
            }
        }
    }
    pass(7, "20 (n, m) instances sized exactly, bounds met, padding stayed out of every tree");
}

#[test]
fn criterion_8_ratio_objective_matches_brute_force() {
    let mut rng = seeded(2030);
    for trial in 0..100 {
        let bg = random_biweighted_graph(&mut rng, 5, 6, 20, true);
        let best = optimize(&bg, Objective::MaxRatio).unwrap();
        let got = &best.total_profit / &best.total_cost;
        let brute: Rational = all_spanning_trees(&to_parametric(&bg), 1_000_000)
            .unwrap()
            .iter()
            .map(|t| {
                let (mut cost, mut profit) = (Rational::default(), Rational::default());
                for &id in t.edge_ids() {
                    cost += &bg.edge(id).cost;
                    profit += &bg.edge(id).profit;
                }
                profit / cost
            })
            .max()
            .unwrap();
        assert_eq!(got, brute, "trial {trial}");
    }
    pass(8, "100 random positive-cost instances, ratio optimum equals brute force");
}

#[test]
fn criterion_9_crossing_order_holds_on_accepted_levels() {
    for level in 0..=4usize {
        let g = recursive_weights(level);
        assert!(verify_crossing_order(&g), "level {level}");
    }
    pass(9, "six-block crossing order verified for levels 0..=4");
}

/// Small deterministic helper so case sampling stays independent of rand's
/// distribution internals.
fn rng_next(rng: &mut impl rand::RngCore) -> u64 {
    rng.next_u64()
}
