//! Spanning trees under two weights per edge.
//!
//! Each edge carries a (cost, profit) pair, and each spanning tree becomes
//! a point in the plane whose coordinates are its weight totals. Any
//! objective that is quasiconvex when minimized (or quasiconcave when
//! maximized) over such points takes its optimum at a vertex of the point
//! cloud's convex hull, and those vertices are exactly the trees of two
//! parametric sweeps: one over `cost * lambda + profit` and one over the
//! negated weights.

use crate::graph::{LinearWeight, ParametricGraph};
use crate::mst::SpanningTree;
use crate::rational::Rational;
use crate::sweep::enumerate_by_midpoints;
use crate::Error;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// An edge with a cost and a profit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiEdge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub cost: Rational,
    pub profit: Rational,
}

/// An undirected graph with a (cost, profit) pair on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiWeightedGraph {
    vertex_count: usize,
    edges: Vec<BiEdge>,
}

impl BiWeightedGraph {
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count >= 1, "graph must have at least one vertex");
        BiWeightedGraph { vertex_count, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, cost: Rational, profit: Rational) -> usize {
        assert!(u != v, "self-loop on vertex {u}");
        assert!(u < self.vertex_count && v < self.vertex_count, "endpoint out of range");
        let id = self.edges.len();
        self.edges.push(BiEdge { id, u, v, cost, profit });
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[BiEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &BiEdge {
        &self.edges[id]
    }
}

/// A spanning tree as a point in the (cost, profit) plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePoint {
    pub tree: SpanningTree,
    pub total_cost: Rational,
    pub total_profit: Rational,
}

/// Maps each edge `(cost c, profit p)` to the weight function
/// `w(lambda) = c * lambda + p`. Under this convention the sweep's trees
/// are the hull trees on the low-profit side of the point cloud.
pub fn to_parametric(bg: &BiWeightedGraph) -> ParametricGraph {
    let mut g = ParametricGraph::new(bg.vertex_count());
    for e in bg.edges() {
        g.add_edge(e.u, e.v, LinearWeight::new(e.cost.clone(), e.profit.clone()));
    }
    g
}

fn tree_point(bg: &BiWeightedGraph, tree: &SpanningTree) -> TreePoint {
    let mut total_cost = Rational::zero();
    let mut total_profit = Rational::zero();
    for &id in tree.edge_ids() {
        total_cost += &bg.edge(id).cost;
        total_profit += &bg.edge(id).profit;
    }
    TreePoint { tree: tree.clone(), total_cost, total_profit }
}

/// The trees at the convex hull vertices of the tree point cloud: the
/// distinct trees of the parametric sweep, then those of the sweep with
/// both weights negated, deduplicated in that order. Every hull vertex
/// point is realized by some returned tree.
pub fn hull_trees(bg: &BiWeightedGraph) -> Result<Vec<TreePoint>, Error> {
    let g = to_parametric(bg);
    let negated = g.map_weights(|e| e.weight.scale(&-Rational::one()));

    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    for graph in [&g, &negated] {
        for interval in enumerate_by_midpoints(graph)?.intervals() {
            if seen.insert(interval.tree.clone()) {
                points.push(tree_point(bg, &interval.tree));
            }
        }
    }
    Ok(points)
}

/// Built-in objectives over tree points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Minimize total cost.
    MinCost,
    /// Maximize total profit.
    MaxProfit,
    /// Maximize total profit divided by total cost.
    MaxRatio,
}

/// Optimizes a comparator-defined objective over the hull trees. The
/// comparator must order candidate points by preference (`Greater` means
/// the left point is better) and must be quasiconvex when minimizing or
/// quasiconcave when maximizing, so that its optimum over all spanning
/// trees is attained on the hull. Exact ties are broken toward the
/// lexicographically smallest edge id set.
pub fn optimize_by(
    bg: &BiWeightedGraph,
    mut better: impl FnMut(&TreePoint, &TreePoint) -> Ordering,
) -> Result<TreePoint, Error> {
    let mut best: Option<TreePoint> = None;
    for point in hull_trees(bg)? {
        let replace = match &best {
            None => true,
            Some(b) => match better(&point, b) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => point.tree < b.tree,
            },
        };
        if replace {
            best = Some(point);
        }
    }
    Ok(best.expect("a connected graph has at least one spanning tree"))
}

/// Optimizes one of the built-in objectives over the hull trees.
///
/// The ratio objective compares exact quotients and fails with
/// [`Error::DivisionByZero`] if any hull tree has total cost zero.
pub fn optimize(bg: &BiWeightedGraph, objective: Objective) -> Result<TreePoint, Error> {
    if objective == Objective::MaxRatio {
        for point in hull_trees(bg)? {
            if point.total_cost.is_zero() {
                return Err(Error::DivisionByZero);
            }
        }
    }
    optimize_by(bg, |a, b| match objective {
        Objective::MinCost => b.total_cost.cmp(&a.total_cost),
        Objective::MaxProfit => a.total_profit.cmp(&b.total_profit),
        Objective::MaxRatio => {
            let ra = &a.total_profit / &a.total_cost;
            let rb = &b.total_profit / &b.total_cost;
            ra.cmp(&rb)
        }
    })
}
