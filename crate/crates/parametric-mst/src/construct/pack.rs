//! Packs many reweighted copies of one base graph into a single instance,
//! and generates instances with prescribed vertex and edge counts.
//!
//! Packing subdivides every base edge into a four-edge path u-a-b-c-v and
//! wires each middle vertex b to the a and c vertices of a cyclically
//! shifted partner path, once per copy. A convex-downward chain of
//! steering lines makes copy j's chords the strictly cheapest wiring on
//! its own lambda window; inside that window a flattened image of the
//! base arrangement replays the base tree sequence twice, once through
//! each chord bundle.

use super::weights::{normalize, recursive_weights};
use crate::graph::{EdgeMetadata, LinearWeight, PackRole, ParametricGraph};
use crate::rational::{integer, rational, Rational};
use crate::sweep::enumerate_by_midpoints;
use crate::Error;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// Chord bundles for a flattened base graph: per base edge `t`, the `ab`
/// chord carries the flattened weight replayed around one descending
/// anchor and the `bc` chord the same replayed around a later ascending
/// one, so the two bundles cross their own kind on disjoint windows.
fn bundles(flat: &ParametricGraph) -> (Vec<LinearWeight>, Vec<LinearWeight>) {
    let one = Rational::one();
    let ab = flat
        .edges()
        .iter()
        .map(|e| {
            e.weight
                .substitute(&one, &integer(-1))
                .plus(&LinearWeight::new(-one.clone(), integer(3)))
        })
        .collect();
    let bc = flat
        .edges()
        .iter()
        .map(|e| {
            e.weight
                .substitute(&one, &integer(-4))
                .plus(&LinearWeight::new(one.clone(), integer(-3)))
        })
        .collect();
    (ab, bc)
}

/// True when every `bc` value sits strictly below every `ab` value at both
/// ends of the ab crossing window, and the reverse holds on the bc window.
fn bundles_separated(ab: &[LinearWeight], bc: &[LinearWeight]) -> bool {
    let below = |lo: &[LinearWeight], hi: &[LinearWeight], at: i64| {
        let x = integer(at);
        let max_lo = lo.iter().map(|w| w.evaluate(&x)).max().unwrap();
        let min_hi = hi.iter().map(|w| w.evaluate(&x)).min().unwrap();
        max_lo < min_hi
    };
    below(bc, ab, 1) && below(bc, ab, 2) && below(ab, bc, 4) && below(ab, bc, 5)
}

/// Steering line for copy `j` of `k`: slope `k + 1 - 2j`, anchored so that
/// consecutive lines cross at even integers and the chain's lower envelope
/// assigns line `j` exactly the stretch `[2j - 2, 2j]`.
fn steering_line(j: usize, k: usize, y_prev: &Rational) -> LinearWeight {
    let s = integer(k as i64 + 1 - 2 * j as i64);
    let intercept = y_prev - &s * integer(2 * (j as i64 - 1));
    LinearWeight::new(s, intercept)
}

/// Per-copy chord weights: the stage-two flattened bundle shifted onto
/// copy `j`'s window and lifted by its steering line.
fn place_copies(pseudo: &ParametricGraph, k: usize, eps: &Rational) -> Vec<Vec<LinearWeight>> {
    let flat = normalize(pseudo, eps);
    let one = Rational::one();
    let mut copies = Vec::with_capacity(k);
    let mut y_prev = Rational::zero();
    for j in 1..=k {
        let line = steering_line(j, k, &y_prev);
        let offset = rational(4 * j as i64 - 3, 2);
        copies.push(
            flat.edges()
                .iter()
                .map(|e| e.weight.substitute(&one, &-offset.clone()).plus(&line))
                .collect(),
        );
        y_prev += &line.slope * integer(2);
    }
    copies
}

/// True when inside every copy's (slightly widened) window, all of that
/// copy's chords are strictly lighter than every other copy's chords. The
/// weights are linear, so checking the two window ends suffices.
fn copies_dominant(copies: &[Vec<LinearWeight>]) -> bool {
    for (j, own) in copies.iter().enumerate() {
        let j = j as i64 + 1;
        for x in [rational(8 * j - 7, 4), rational(8 * j - 1, 4)] {
            let own_max = own.iter().map(|w| w.evaluate(&x)).max().unwrap();
            for (other_j, other) in copies.iter().enumerate() {
                if other_j as i64 + 1 == j {
                    continue;
                }
                let other_min = other.iter().map(|w| w.evaluate(&x)).min().unwrap();
                if own_max >= other_min {
                    return false;
                }
            }
        }
    }
    true
}

/// Subdivides every edge of `gw` into a path u-a-b-c-v and adds `k`
/// cyclically shifted chord copies, weighted so that the tree sequence of
/// the result replays `gw`'s sequence twice per copy on `k` disjoint
/// lambda windows. The shared path stubs (subgraph 0) get distinct
/// constants strictly below every chord on the active range.
///
/// `k` must lie in `1..=gw.edge_count()`: each copy is a distinct cyclic
/// shift of the path-to-path wiring.
pub fn pack(gw: &ParametricGraph, k: usize) -> Result<ParametricGraph, Error> {
    let m = gw.edge_count();
    if k < 1 || k > m {
        return Err(Error::BadK { k, max: m });
    }
    if !gw.is_connected() {
        return Err(Error::Disconnected);
    }

    let mut eps = rational(1, 4);
    let mut separated = None;
    for _ in 0..64 {
        let flat = normalize(gw, &eps);
        let (ab, bc) = bundles(&flat);
        if bundles_separated(&ab, &bc) {
            separated = Some((ab, bc));
            break;
        }
        eps /= integer(2);
    }
    let (ab, bc) = separated.unwrap_or_else(|| {
        unreachable!("bundle separation holds once the flattening is tight enough")
    });

    let mut pseudo = ParametricGraph::new(2);
    for w in ab.into_iter().chain(bc) {
        pseudo.add_edge(0, 1, w);
    }

    let mut eps = rational(1, 4);
    let mut placed = None;
    for _ in 0..64 {
        let copies = place_copies(&pseudo, k, &eps);
        if copies_dominant(&copies) {
            placed = Some(copies);
            break;
        }
        eps /= integer(2);
    }
    let copies = placed.unwrap_or_else(|| {
        unreachable!("window dominance holds once the bundle flattening is tight enough")
    });

    let n0 = gw.vertex_count();
    let lo = integer(-1);
    let hi = integer(2 * k as i64 + 1);
    let min_chord = copies
        .iter()
        .flatten()
        .flat_map(|w| [w.evaluate(&lo), w.evaluate(&hi)])
        .min()
        .unwrap();
    let stub_base = min_chord.floor() - integer(1);

    let mut h = ParametricGraph::new(n0 + 3 * m);
    for t in 0..m {
        let e = gw.edge(t);
        let a_t = n0 + 3 * t;
        let c_t = n0 + 3 * t + 2;
        for (endpoints, role, shift) in [
            ((e.u, a_t), PackRole::UA, 2 * t),
            ((c_t, e.v), PackRole::CV, 2 * t + 1),
        ] {
            h.add_edge_with(
                endpoints.0,
                endpoints.1,
                LinearWeight::constant(&stub_base - integer(shift as i64)),
                EdgeMetadata {
                    subgraph: Some(0),
                    role: Some(role),
                    source: Some(t),
                    ..EdgeMetadata::default()
                },
            );
        }
    }
    for j in 1..=k {
        let (ab_role, bc_role) = if j == 1 {
            (PackRole::AB, PackRole::BC)
        } else {
            (PackRole::BACross, PackRole::BCCross)
        };
        for i in 0..m {
            let t = (i + j - 1) % m;
            let b_i = n0 + 3 * i + 1;
            for (other, role, weight) in [
                (n0 + 3 * t, ab_role, &copies[j - 1][t]),
                (n0 + 3 * t + 2, bc_role, &copies[j - 1][m + t]),
            ] {
                h.add_edge_with(
                    b_i,
                    other,
                    weight.clone(),
                    EdgeMetadata {
                        subgraph: Some(j),
                        role: Some(role),
                        source: Some(t),
                        ..EdgeMetadata::default()
                    },
                );
            }
        }
    }
    Ok(h)
}

/// Checks that the shared stubs plus copy `j`'s chords of a packed graph
/// form exactly a subdivision of `gw`: for every base edge `t = (u, v)`,
/// the path u - a_t - b_i - c_t - v with `i = (t - j + 1) mod m`, and
/// nothing else.
pub fn subdivision_check(gw: &ParametricGraph, h: &ParametricGraph, j: usize) -> bool {
    let n0 = gw.vertex_count();
    let m = gw.edge_count();
    if j < 1 || j > m {
        return false;
    }
    let mut actual = BTreeSet::new();
    let mut count = 0usize;
    for e in h.edges() {
        if e.metadata.subgraph != Some(0) && e.metadata.subgraph != Some(j) {
            continue;
        }
        count += 1;
        actual.insert((e.u.min(e.v), e.u.max(e.v)));
    }
    if count != 4 * m || actual.len() != 4 * m {
        return false;
    }
    let mut expected = BTreeSet::new();
    for t in 0..m {
        let e = gw.edge(t);
        let i = (t + m + 1 - j) % m;
        let a_t = n0 + 3 * t;
        let b_i = n0 + 3 * i + 1;
        let c_t = n0 + 3 * t + 2;
        for (x, y) in [(e.u, a_t), (a_t, b_i), (b_i, c_t), (c_t, e.v)] {
            expected.insert((x.min(y), x.max(y)));
        }
    }
    actual == expected
}

/// A generated instance with prescribed vertex and edge counts, together
/// with the tree sequence length its construction guarantees.
#[derive(Debug, Clone)]
pub struct TheoremInstance {
    pub graph: ParametricGraph,
    /// Guaranteed lower bound on the instance's tree sequence length.
    pub bound: u64,
    /// Expansion level of the packed base graph, if packing was used.
    pub level: Option<usize>,
    /// Number of packed copies, if packing was used.
    pub copies: Option<usize>,
    /// Tree sequence length of the packed base graph.
    pub base_sequence_length: Option<usize>,
    /// Bridge edges attaching filler leaf vertices; in every tree.
    pub leaf_bridges: Vec<usize>,
    /// Heavy filler edges; in no tree of the sequence.
    pub pads: Vec<usize>,
}

fn vertices_at(level: usize) -> u128 {
    let p = 3u128.pow(level as u32);
    (p + 3) / 2 + 3 * p
}

/// Builds a connected instance with exactly `n` vertices and `m` edges
/// whose tree sequence provably has at least `bound` maximal intervals.
///
/// The shape is a packed recursive-weight graph at the highest expansion
/// level that fits, plus leaf vertices on constant bridges and heavy
/// constant pad edges to land exactly on the requested counts. Pads go
/// between two neighbours of a shared hub and sit strictly above every
/// other weight function on the active range, so a two-edge all-constant
/// bypass keeps them out of every tree at every lambda. When the counts
/// leave no room for that (very dense instances), the instance degrades
/// to an all-constant star with pads, whose sequence is a single tree.
pub fn theorem_instance(n: usize, m: usize) -> Result<TheoremInstance, Error> {
    if n == 0 || m + 3 < 2 * n || m > n * (n - 1) / 2 {
        return Err(Error::BadRange { n, m });
    }
    let mut top = None;
    let mut i = 0;
    while vertices_at(i) <= n as u128 {
        top = Some(i);
        i += 1;
    }
    if let Some(top) = top {
        for level in (0..=top).rev() {
            if let Some(instance) = packed_instance(n, m, level) {
                return Ok(instance);
            }
        }
    }
    Ok(star_instance(n, m))
}

fn packed_instance(n: usize, m: usize, level: usize) -> Option<TheoremInstance> {
    let gw = recursive_weights(level);
    let nv = gw.vertex_count();
    let me = gw.edge_count();
    let leaves = n - (nv + 3 * me);
    let k = ((m - leaves) / (2 * me)).saturating_sub(1).min(me);
    if k == 0 {
        return None;
    }
    let pads_needed = m - leaves - 2 * me * (k + 1);

    let mut degree = vec![0usize; nv];
    for e in gw.edges() {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let capacity: usize = degree
        .iter()
        .enumerate()
        .map(|(u, &d)| {
            let s = d + if u == 0 { leaves } else { 0 };
            s * (s.saturating_sub(1)) / 2
        })
        .sum();
    if pads_needed > capacity {
        return None;
    }

    let base = enumerate_by_midpoints(&gw).expect("recursive weights are connected");
    let t_len = base.sequence_length();
    let h = pack(&gw, k).expect("k is in range and gw is connected");

    let mut g = ParametricGraph::new(n);
    for e in h.edges() {
        g.add_edge_with(e.u, e.v, e.weight.clone(), e.metadata.clone());
    }

    let lo = integer(-1);
    let hi = integer(2 * k as i64 + 1);
    let range_values = |g: &ParametricGraph| {
        g.edges()
            .iter()
            .flat_map(|e| [e.weight.evaluate(&lo), e.weight.evaluate(&hi)])
            .collect::<Vec<_>>()
    };
    let leaf_base = range_values(&g).into_iter().min().unwrap().floor() - integer(1);
    let mut leaf_bridges = Vec::with_capacity(leaves);
    for t in 0..leaves {
        let w = LinearWeight::constant(&leaf_base - integer(t as i64));
        leaf_bridges.push(g.add_edge(0, nv + 3 * me + t, w));
    }

    let mut members = vec![Vec::new(); nv];
    for t in 0..me {
        let e = gw.edge(t);
        members[e.u].push(nv + 3 * t);
        members[e.v].push(nv + 3 * t + 2);
    }
    for t in 0..leaves {
        members[0].push(nv + 3 * me + t);
    }
    let pad_base = range_values(&g).into_iter().max().unwrap().floor() + integer(1);
    let mut pads = Vec::with_capacity(pads_needed);
    'fill: for mem in &members {
        for x in 0..mem.len() {
            for y in x + 1..mem.len() {
                if pads.len() == pads_needed {
                    break 'fill;
                }
                let w = LinearWeight::constant(&pad_base + integer(pads.len() as i64));
                pads.push(g.add_edge(mem[x], mem[y], w));
            }
        }
    }
    debug_assert_eq!(pads.len(), pads_needed);
    debug_assert_eq!(g.edge_count(), m);

    let bound = if level == 0 { 1 } else { 2 * k as u64 * t_len as u64 };
    Some(TheoremInstance {
        graph: g,
        bound,
        level: Some(level),
        copies: Some(k),
        base_sequence_length: Some(t_len),
        leaf_bridges,
        pads,
    })
}

/// Fallback shape: a constant-weight star plus heavy constant pads among
/// the spokes. Reaches any edge count up to the complete graph; its
/// sequence is the star itself, a single tree.
fn star_instance(n: usize, m: usize) -> TheoremInstance {
    let mut g = ParametricGraph::new(n);
    let mut leaf_bridges = Vec::new();
    for v in 1..n {
        leaf_bridges.push(g.add_edge(0, v, LinearWeight::constant(integer(v as i64))));
    }
    let mut pads = Vec::new();
    'fill: for x in 1..n {
        for y in x + 1..n {
            if g.edge_count() == m {
                break 'fill;
            }
            let w = LinearWeight::constant(integer((n + pads.len()) as i64));
            pads.push(g.add_edge(x, y, w));
        }
    }
    debug_assert_eq!(g.edge_count(), m);
    TheoremInstance {
        graph: g,
        bound: 1,
        level: None,
        copies: None,
        base_sequence_length: None,
        leaf_bridges,
        pads,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mst::mst_at;

    #[test]
    fn rejects_out_of_range_multiplicity() {
        let gw = recursive_weights(1);
        assert_eq!(pack(&gw, 0), Err(Error::BadK { k: 0, max: 3 }));
        assert_eq!(pack(&gw, 4), Err(Error::BadK { k: 4, max: 3 }));
    }

    #[test]
    fn rejects_disconnected_base() {
        let mut g = ParametricGraph::new(4);
        g.add_edge(0, 1, LinearWeight::constant(integer(1)));
        g.add_edge(2, 3, LinearWeight::constant(integer(2)));
        assert_eq!(pack(&g, 1), Err(Error::Disconnected));
    }

    #[test]
    fn single_copy_of_an_edge_is_a_path() {
        let gw = recursive_weights(0);
        let h = pack(&gw, 1).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 4);
        assert!(subdivision_check(&gw, &h, 1));
        let seq = enumerate_by_midpoints(&h).unwrap();
        assert_eq!(seq.sequence_length(), 1);
    }

    #[test]
    fn packed_shape_and_roles() {
        let gw = recursive_weights(1);
        let h = pack(&gw, 2).unwrap();
        assert_eq!(h.vertex_count(), 3 + 9);
        assert_eq!(h.edge_count(), 2 * 3 * 3);
        for e in h.edges() {
            let sub = e.metadata.subgraph.unwrap();
            let role = e.metadata.role.unwrap();
            match sub {
                0 => assert!(matches!(role, PackRole::UA | PackRole::CV)),
                1 => assert!(matches!(role, PackRole::AB | PackRole::BC)),
                _ => assert!(matches!(role, PackRole::BACross | PackRole::BCCross)),
            }
            assert!(e.metadata.source.unwrap() < 3);
        }
        assert!(subdivision_check(&gw, &h, 1));
        assert!(subdivision_check(&gw, &h, 2));
        assert!(!subdivision_check(&gw, &h, 3));
        assert!(!subdivision_check(&gw, &h, 0));
    }

    #[test]
    fn own_copy_is_cheapest_inside_its_window() {
        let gw = recursive_weights(1);
        let k = 3;
        let h = pack(&gw, k).unwrap();
        for j in 1..=k {
            let mid = integer(2 * j as i64 - 1);
            let own_max = h
                .edges()
                .iter()
                .filter(|e| e.metadata.subgraph == Some(j))
                .map(|e| e.weight.evaluate(&mid))
                .max()
                .unwrap();
            let other_min = h
                .edges()
                .iter()
                .filter(|e| e.metadata.subgraph.is_some_and(|s| s >= 1 && s != j))
                .map(|e| e.weight.evaluate(&mid))
                .min()
                .unwrap();
            assert!(own_max < other_min, "copy {j} not dominant at {mid}");
        }
    }

    #[test]
    fn shared_stubs_sit_below_chords_and_in_every_tree() {
        let gw = recursive_weights(1);
        let h = pack(&gw, 2).unwrap();
        let stub_ids: Vec<usize> = h
            .edges()
            .iter()
            .filter(|e| e.metadata.subgraph == Some(0))
            .map(|e| e.id)
            .collect();
        assert_eq!(stub_ids.len(), 6);
        for x in [integer(-1), integer(1), integer(3), integer(5)] {
            let tree = mst_at(&h, &x).unwrap();
            for &id in &stub_ids {
                assert!(tree.contains(id), "stub {id} missing at lambda = {x}");
            }
        }
    }

    #[test]
    fn packed_sequence_replays_base_twice_per_copy() {
        let gw = recursive_weights(1);
        let base_len = enumerate_by_midpoints(&gw).unwrap().sequence_length();
        assert_eq!(base_len, 3);
        let h = pack(&gw, 3).unwrap();
        let seq = enumerate_by_midpoints(&h).unwrap();
        assert!(
            seq.sequence_length() >= 2 * 3 * base_len,
            "expected at least {} intervals, got {}",
            2 * 3 * base_len,
            seq.sequence_length()
        );
    }

    #[test]
    fn instance_rejects_bad_ranges() {
        assert_eq!(theorem_instance(0, 0).unwrap_err(), Error::BadRange { n: 0, m: 0 });
        assert_eq!(theorem_instance(1, 1).unwrap_err(), Error::BadRange { n: 1, m: 1 });
        assert_eq!(theorem_instance(5, 6).unwrap_err(), Error::BadRange { n: 5, m: 6 });
        assert_eq!(theorem_instance(5, 11).unwrap_err(), Error::BadRange { n: 5, m: 11 });
    }

    #[test]
    fn tiny_instances_are_stars() {
        for (n, m) in [(1, 0), (2, 1), (3, 3), (4, 5), (4, 6)] {
            let inst = theorem_instance(n, m).unwrap();
            assert_eq!(inst.graph.vertex_count(), n);
            assert_eq!(inst.graph.edge_count(), m);
            assert_eq!(inst.bound, 1);
            assert_eq!(inst.level, None);
            let seq = enumerate_by_midpoints(&inst.graph).unwrap();
            assert_eq!(seq.sequence_length(), 1);
        }
    }

    #[test]
    fn packed_instance_hits_exact_counts() {
        let inst = theorem_instance(33, 80).unwrap();
        assert_eq!(inst.graph.vertex_count(), 33);
        assert_eq!(inst.graph.edge_count(), 80);
        assert_eq!(inst.level, Some(2));
        assert_eq!(inst.copies, Some(3));
        assert_eq!(inst.base_sequence_length, Some(12));
        assert_eq!(inst.bound, 72);
        assert!(inst.leaf_bridges.is_empty());
        assert_eq!(inst.pads.len(), 80 - 72);
    }

    #[test]
    fn leaves_are_bridges_with_distinct_constants() {
        let inst = theorem_instance(40, 85).unwrap();
        assert_eq!(inst.graph.vertex_count(), 40);
        assert_eq!(inst.graph.edge_count(), 85);
        assert_eq!(inst.level, Some(2));
        assert_eq!(inst.leaf_bridges.len(), 7);
        let tree = mst_at(&inst.graph, &integer(2)).unwrap();
        for &id in &inst.leaf_bridges {
            assert!(tree.contains(id));
            assert!(inst.graph.edge(id).weight.slope.is_zero());
        }
    }

    #[test]
    fn pads_stay_out_of_every_tree() {
        let inst = theorem_instance(12, 21).unwrap();
        assert_eq!(inst.level, Some(1));
        assert_eq!(inst.copies, Some(2));
        assert_eq!(inst.bound, 12);
        assert_eq!(inst.pads.len(), 3);
        let seq = enumerate_by_midpoints(&inst.graph).unwrap();
        assert!(seq.sequence_length() >= 12);
        for interval in seq.intervals() {
            for &id in &inst.pads {
                assert!(!interval.tree.contains(id), "pad {id} entered a tree");
            }
        }
    }

    #[test]
    fn dense_instance_falls_back_to_a_star() {
        let inst = theorem_instance(8, 28).unwrap();
        assert_eq!(inst.graph.vertex_count(), 8);
        assert_eq!(inst.graph.edge_count(), 28);
        assert_eq!(inst.bound, 1);
        assert_eq!(inst.level, None);
        let seq = enumerate_by_midpoints(&inst.graph).unwrap();
        assert_eq!(seq.sequence_length(), 1);
        for &id in &inst.pads {
            assert!(!seq.intervals()[0].tree.contains(id));
        }
    }
}
