//! Sweeping the parameter line: the sequence of minimum spanning trees.

use crate::graph::{Crossing, ParametricGraph};
use crate::mst::{mst_at, tree_path, SpanningTree};
use crate::rational::{integer, Rational};
use crate::Error;
use num_traits::Zero;
use std::collections::BTreeSet;

/// One end of a parameter interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Endpoint::Finite(x) => Some(x),
            _ => None,
        }
    }
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Endpoint::NegInf => write!(f, "-inf"),
            Endpoint::Finite(x) => write!(f, "{x}"),
            Endpoint::PosInf => write!(f, "+inf"),
        }
    }
}

/// A maximal parameter interval on which the minimum spanning tree is
/// constant. The tree is the MST at every point strictly between `lo` and
/// `hi`; ownership of the boundary points themselves is not specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub tree: SpanningTree,
}

/// The full sweep result: consecutive intervals covering the whole line,
/// with distinct trees on neighbouring intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSequence {
    intervals: Vec<Interval>,
}

impl TreeSequence {
    /// Wraps a list of intervals, checking contiguity: the first starts at
    /// -inf, the last ends at +inf, neighbours share an endpoint and carry
    /// different trees.
    pub fn new(intervals: Vec<Interval>) -> Self {
        assert!(!intervals.is_empty(), "a tree sequence cannot be empty");
        assert_eq!(intervals.first().unwrap().lo, Endpoint::NegInf);
        assert_eq!(intervals.last().unwrap().hi, Endpoint::PosInf);
        for pair in intervals.windows(2) {
            assert_eq!(pair[0].hi, pair[1].lo, "intervals must be contiguous");
            assert!(pair[0].hi.as_finite().is_some(), "interior endpoint must be finite");
            assert_ne!(pair[0].tree, pair[1].tree, "adjacent intervals must differ");
        }
        TreeSequence { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Number of maximal intervals (repeated trees count every time).
    pub fn sequence_length(&self) -> usize {
        self.intervals.len()
    }

    /// Number of distinct trees appearing anywhere in the sequence.
    pub fn distinct_tree_count(&self) -> usize {
        self.intervals.iter().map(|i| &i.tree).collect::<BTreeSet<_>>().len()
    }

    /// The finite interval boundaries, in increasing order.
    pub fn breakpoints(&self) -> Vec<&Rational> {
        self.intervals
            .iter()
            .skip(1)
            .map(|i| i.lo.as_finite().expect("interior endpoints are finite"))
            .collect()
    }

    /// The interval containing `lambda`; boundaries resolve to the interval
    /// on their right.
    pub fn interval_at(&self, lambda: &Rational) -> &Interval {
        let pos = self
            .intervals
            .partition_point(|i| match &i.hi {
                Endpoint::Finite(h) => h <= lambda,
                Endpoint::NegInf => true,
                Endpoint::PosInf => false,
            });
        &self.intervals[pos.min(self.intervals.len() - 1)]
    }
}

/// All parameter values where two edge weight functions cross, sorted and
/// deduplicated. Every breakpoint of the tree sequence is among these.
pub fn breakpoint_candidates(g: &ParametricGraph) -> Vec<Rational> {
    let edges = g.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if let Crossing::At(x) = edges[i].weight.crossing_lambda(&edges[j].weight) {
                out.push(x);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Reference sweep: computes the MST from scratch at a sample point inside
/// every gap between candidate crossings and merges equal neighbours.
///
/// The weight order of the edges is constant between consecutive candidate
/// crossings, so one interior sample determines the MST on the whole gap.
pub fn enumerate_by_midpoints(g: &ParametricGraph) -> Result<TreeSequence, Error> {
    let candidates = breakpoint_candidates(g);
    if candidates.is_empty() {
        let tree = mst_at(g, &Rational::zero())?;
        return Ok(TreeSequence::new(vec![Interval {
            lo: Endpoint::NegInf,
            hi: Endpoint::PosInf,
            tree,
        }]));
    }

    let mut samples = Vec::with_capacity(candidates.len() + 1);
    samples.push(candidates.first().unwrap() - integer(1));
    for pair in candidates.windows(2) {
        samples.push((&pair[0] + &pair[1]) / integer(2));
    }
    samples.push(candidates.last().unwrap() + integer(1));

    let mut intervals: Vec<Interval> = Vec::new();
    let mut lo = Endpoint::NegInf;
    let mut current = mst_at(g, &samples[0])?;
    for (i, sample) in samples.iter().enumerate().skip(1) {
        let tree = mst_at(g, sample)?;
        if tree != current {
            let boundary = Endpoint::Finite(candidates[i - 1].clone());
            intervals.push(Interval { lo, hi: boundary.clone(), tree: current });
            lo = boundary;
            current = tree;
        }
    }
    intervals.push(Interval { lo, hi: Endpoint::PosInf, tree: current });
    Ok(TreeSequence::new(intervals))
}

/// Kinetic sweep: starts from the MST left of every crossing and applies an
/// edge swap at each crossing event where the tree actually changes.
///
/// Requires all crossings to be simple: no two identical weight functions,
/// no three functions through one point, and no two crossings at the same
/// parameter value. Fails with [`Error::DegenerateCrossings`] otherwise.
pub fn enumerate_by_swaps(g: &ParametricGraph) -> Result<TreeSequence, Error> {
    let edges = g.edges();
    // (lambda, lower-after edge, lower-before edge)
    let mut events: Vec<(Rational, usize, usize)> = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            match edges[i].weight.crossing_lambda(&edges[j].weight) {
                Crossing::Everywhere => return Err(Error::DegenerateCrossings),
                Crossing::Never => {}
                Crossing::At(x) => {
                    // The line with the larger slope is lower before the
                    // crossing and higher after it.
                    let (before, after) = if edges[i].weight.slope > edges[j].weight.slope
                    {
                        (i, j)
                    } else {
                        (j, i)
                    };
                    events.push((x, after, before));
                }
            }
        }
    }
    events.sort_by(|a, b| a.0.cmp(&b.0));
    if events.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::DegenerateCrossings);
    }

    if events.is_empty() {
        let tree = mst_at(g, &Rational::zero())?;
        return Ok(TreeSequence::new(vec![Interval {
            lo: Endpoint::NegInf,
            hi: Endpoint::PosInf,
            tree,
        }]));
    }

    let start = &events[0].0 - integer(1);
    let mut tree = mst_at(g, &start)?;
    let mut intervals: Vec<Interval> = Vec::new();
    let mut lo = Endpoint::NegInf;
    for (x, winner, loser) in events {
        // A swap happens only when the edge leaving the cheap side is in the
        // tree, the edge becoming cheap is not, and the former lies on the
        // fundamental cycle the latter would close.
        if tree.contains(loser) && !tree.contains(winner) {
            let w = g.edge(winner);
            if tree_path(g, &tree, w.u, w.v).contains(&loser) {
                let boundary = Endpoint::Finite(x);
                intervals.push(Interval {
                    lo,
                    hi: boundary.clone(),
                    tree: tree.clone(),
                });
                lo = boundary;
                tree = tree.swap(loser, winner);
            }
        }
    }
    intervals.push(Interval { lo, hi: Endpoint::PosInf, tree });
    Ok(TreeSequence::new(intervals))
}
