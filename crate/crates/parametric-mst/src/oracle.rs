//! Brute-force ground truth: explicit spanning tree enumeration and the
//! lower envelope of tree weight lines.
//!
//! Each spanning tree's total weight is itself a linear function of the
//! parameter, and the minimum spanning tree at any point is a tree whose
//! line attains the pointwise minimum. Enumerating every tree and taking
//! the lower envelope therefore reproduces the sweep result without using
//! any MST algorithm, which makes it a genuinely independent oracle.

use crate::graph::{LinearWeight, ParametricGraph};
use crate::mst::{SpanningTree, UnionFind};
use crate::rational::{integer, Rational};
use crate::sweep::{breakpoint_candidates, Endpoint, Interval, TreeSequence};
use crate::Error;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Default enumeration cap for [`all_spanning_trees`].
pub const DEFAULT_TREE_CAP: u64 = 1_000_000;

/// Number of spanning trees, via the determinant of a Laplacian minor.
/// Parallel edges count with multiplicity. Zero for disconnected graphs.
pub fn spanning_tree_count(g: &ParametricGraph) -> BigUint {
    let n = g.vertex_count();
    if n == 1 {
        return BigUint::one();
    }
    let dim = n - 1;
    let mut a = vec![vec![BigInt::zero(); dim]; dim];
    for e in g.edges() {
        if e.u < dim {
            a[e.u][e.u] += 1;
        }
        if e.v < dim {
            a[e.v][e.v] += 1;
        }
        if e.u < dim && e.v < dim {
            a[e.u][e.v] -= 1;
            a[e.v][e.u] -= 1;
        }
    }

    // Bareiss fraction-free elimination: all intermediate values stay
    // integers and every division is exact.
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..dim {
        if a[k][k].is_zero() {
            match (k + 1..dim).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigUint::zero(),
            }
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = &a[dim - 1][dim - 1];
    let det = if sign { -det } else { det.clone() };
    assert!(!det.is_negative(), "Laplacian minor determinant must be nonnegative");
    det.to_biguint().unwrap()
}

/// Every spanning tree of `g`, in lexicographic order of edge id sets.
///
/// Counts the trees first and refuses to enumerate more than `cap`.
pub fn all_spanning_trees(
    g: &ParametricGraph,
    cap: u64,
) -> Result<Vec<SpanningTree>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let count = spanning_tree_count(g);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count, cap });
    }

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(g, 0, UnionFind::new(g.vertex_count()), &mut chosen, &mut out);
    debug_assert_eq!(BigUint::from(out.len() as u64), count);
    Ok(out)
}

fn extend(
    g: &ParametricGraph,
    next: usize,
    uf: UnionFind,
    chosen: &mut Vec<usize>,
    out: &mut Vec<SpanningTree>,
) {
    if chosen.len() + 1 == g.vertex_count() {
        out.push(SpanningTree::new(chosen.clone()));
        return;
    }
    if next == g.edge_count() {
        return;
    }
    let e = g.edge(next);

    let mut with = uf.clone();
    if with.union(e.u, e.v) {
        chosen.push(next);
        extend(g, next + 1, with, chosen, out);
        chosen.pop();
    }

    // Skipping this edge is only worth exploring if the later edges can
    // still connect everything.
    let mut probe = uf.clone();
    for f in g.edges().iter().skip(next + 1) {
        probe.union(f.u, f.v);
    }
    if (1..g.vertex_count()).all(|v| probe.find(v) == probe.find(0)) {
        extend(g, next + 1, uf, chosen, out);
    }
}

/// Total weight of a tree as a function of the parameter.
pub fn tree_weight_line(g: &ParametricGraph, tree: &SpanningTree) -> LinearWeight {
    let mut total = LinearWeight::constant(Rational::zero());
    for &id in tree.edge_ids() {
        total = total.plus(&g.edge(id).weight);
    }
    total
}

/// A maximal interval of the lower envelope, labelled by the tag of the
/// line attaining the minimum there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopePiece<T> {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub tag: T,
}

/// Lower envelope of a set of tagged lines, left to right.
///
/// Where several lines attain the minimum, the tie goes to the smallest
/// tag among the identical lines; adjacent pieces with equal tags are
/// merged. Returns an empty vector for empty input.
pub fn lower_envelope<T: Ord + Clone>(lines: &[(LinearWeight, T)]) -> Vec<EnvelopePiece<T>> {
    if lines.is_empty() {
        return Vec::new();
    }
    // Per slope only the lowest intercept can touch the envelope, and among
    // identical lines the smallest tag wins. Sorting and keeping the first
    // entry of each slope implements both rules.
    let mut sorted: Vec<&(LinearWeight, T)> = lines.iter().collect();
    sorted.sort_by(|x, y| {
        x.0.slope
            .cmp(&y.0.slope)
            .then_with(|| x.0.intercept.cmp(&y.0.intercept))
            .then_with(|| x.1.cmp(&y.1))
    });
    sorted.dedup_by(|a, b| a.0.slope == b.0.slope);

    // Steepest first: that line is lowest as lambda -> -inf.
    sorted.reverse();

    let crossing = |a: &LinearWeight, b: &LinearWeight| -> Rational {
        match a.crossing_lambda(b) {
            crate::graph::Crossing::At(x) => x,
            _ => unreachable!("envelope stack lines have distinct slopes"),
        }
    };

    let mut stack: Vec<&(LinearWeight, T)> = Vec::new();
    for line in sorted {
        while stack.len() >= 2 {
            let a = stack[stack.len() - 2];
            let b = stack[stack.len() - 1];
            // `b` never attains the minimum if the new line overtakes `a`
            // no later than `b` did.
            if crossing(&a.0, &line.0) <= crossing(&a.0, &b.0) {
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(line);
    }

    let mut pieces: Vec<EnvelopePiece<T>> = Vec::new();
    let mut lo = Endpoint::NegInf;
    for i in 0..stack.len() {
        let hi = if i + 1 < stack.len() {
            Endpoint::Finite(crossing(&stack[i].0, &stack[i + 1].0))
        } else {
            Endpoint::PosInf
        };
        if let (Some(l), Some(h)) = (lo.as_finite(), hi.as_finite()) {
            debug_assert!(l < h, "envelope switch points must increase");
        }
        if let Some(last) = pieces.last_mut() {
            if last.tag == stack[i].1 {
                last.hi = hi.clone();
                lo = hi;
                continue;
            }
        }
        pieces.push(EnvelopePiece { lo, hi: hi.clone(), tag: stack[i].1.clone() });
        lo = hi;
    }
    pieces
}

/// The tree sequence computed from first principles: enumerate all spanning
/// trees, take the lower envelope of their weight lines, and resolve ties
/// between trees sharing a line by comparing their sorted weight profiles
/// directly. No incremental sweep state is involved.
pub fn oracle_sequence(g: &ParametricGraph, cap: u64) -> Result<TreeSequence, Error> {
    let trees = all_spanning_trees(g, cap)?;

    // Group trees whose weight lines coincide: the envelope can only tell
    // families apart, not members.
    let mut families: BTreeMap<LinearWeight, Vec<usize>> = BTreeMap::new();
    for (i, t) in trees.iter().enumerate() {
        families.entry(tree_weight_line(g, t)).or_default().push(i);
    }
    let family_list: Vec<(LinearWeight, Vec<usize>)> = families.into_iter().collect();
    let tagged: Vec<(LinearWeight, usize)> = family_list
        .iter()
        .enumerate()
        .map(|(idx, (line, _))| (line.clone(), idx))
        .collect();
    let envelope = lower_envelope(&tagged);

    // Within one envelope piece the winning family is fixed, but the member
    // that the strict (weight, id) order prefers can change wherever two
    // edge weights cross. Subdivide at those points and decide each cell by
    // direct comparison of the members' sorted weight profiles.
    let cands = breakpoint_candidates(g);
    let mut cells: Vec<(Endpoint, Endpoint, usize)> = Vec::new(); // tree index per cell
    for piece in &envelope {
        let cuts: Vec<Rational> = cands
            .iter()
            .filter(|x| {
                piece.lo.as_finite().is_none_or(|lo| *x > lo)
                    && piece.hi.as_finite().is_none_or(|hi| *x < hi)
            })
            .cloned()
            .collect();

        let mut lo = piece.lo.clone();
        for cut in cuts {
            let hi = Endpoint::Finite(cut);
            cells.push((lo.clone(), hi.clone(), 0));
            lo = hi;
        }
        cells.push((lo, piece.hi.clone(), 0));
    }
    // Fill in the winning member per cell.
    for cell in &mut cells {
        let sample = interior_point(&cell.0, &cell.1);
        let piece_tag = envelope
            .iter()
            .find(|p| in_piece(&p.lo, &p.hi, &sample))
            .expect("cell sample lies in some envelope piece")
            .tag;
        let members = &family_list[piece_tag].1;
        let best = members
            .iter()
            .copied()
            .min_by_key(|&ti| weight_profile(g, &trees[ti], &sample))
            .expect("families are nonempty");
        cell.2 = best;
    }

    let mut intervals: Vec<Interval> = Vec::new();
    for (lo, hi, ti) in cells {
        let tree = trees[ti].clone();
        if let Some(last) = intervals.last_mut() {
            if last.tree == tree {
                last.hi = hi;
                continue;
            }
        }
        intervals.push(Interval { lo, hi, tree });
    }
    Ok(TreeSequence::new(intervals))
}

fn in_piece(lo: &Endpoint, hi: &Endpoint, x: &Rational) -> bool {
    lo.as_finite().is_none_or(|l| l < x) && hi.as_finite().is_none_or(|h| x < h)
}

fn interior_point(lo: &Endpoint, hi: &Endpoint) -> Rational {
    match (lo, hi) {
        (Endpoint::Finite(l), Endpoint::Finite(h)) => (l + h) / integer(2),
        (Endpoint::NegInf, Endpoint::Finite(h)) => h - integer(1),
        (Endpoint::Finite(l), Endpoint::PosInf) => l + integer(1),
        _ => Rational::zero(),
    }
}

/// Sorted list of (weight, id) keys of the tree's edges at `lambda`; the
/// strict order that breaks MST ties prefers the lexicographically smaller
/// profile.
fn weight_profile(
    g: &ParametricGraph,
    tree: &SpanningTree,
    lambda: &Rational,
) -> Vec<(Rational, usize)> {
    let mut keys: Vec<(Rational, usize)> = tree
        .edge_ids()
        .iter()
        .map(|&id| (g.edge(id).weight.evaluate(lambda), id))
        .collect();
    keys.sort_unstable();
    keys
}
