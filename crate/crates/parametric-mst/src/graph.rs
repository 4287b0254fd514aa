//! Graphs whose edge weights are linear functions of a parameter.

use crate::rational::Rational;
use num_traits::Zero;
use std::fmt;

/// An edge weight `w(lambda) = slope * lambda + intercept`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearWeight {
    pub slope: Rational,
    pub intercept: Rational,
}

/// Where two weight functions meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Crossing {
    /// Parallel with distinct intercepts: never equal.
    Never,
    /// Distinct slopes: equal exactly once.
    At(Rational),
    /// Identical functions.
    Everywhere,
}

impl LinearWeight {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        LinearWeight { slope, intercept }
    }

    /// The constant function `w(lambda) = c`.
    pub fn constant(c: Rational) -> Self {
        LinearWeight { slope: Rational::zero(), intercept: c }
    }

    /// The weight at a concrete parameter value.
    pub fn evaluate(&self, lambda: &Rational) -> Rational {
        &self.slope * lambda + &self.intercept
    }

    /// The crossing of two weight functions.
    pub fn crossing_lambda(&self, other: &Self) -> Crossing {
        if self.slope == other.slope {
            if self.intercept == other.intercept {
                Crossing::Everywhere
            } else {
                Crossing::Never
            }
        } else {
            let lambda =
                (&other.intercept - &self.intercept) / (&self.slope - &other.slope);
            Crossing::At(lambda)
        }
    }

    /// Reparametrization `lambda -> alpha * lambda + beta`, i.e. the weight
    /// function `lambda -> w(alpha * lambda + beta)`.
    pub fn substitute(&self, alpha: &Rational, beta: &Rational) -> Self {
        LinearWeight {
            slope: &self.slope * alpha,
            intercept: &self.slope * beta + &self.intercept,
        }
    }

    /// Pointwise scaling by `s`.
    pub fn scale(&self, s: &Rational) -> Self {
        LinearWeight { slope: &self.slope * s, intercept: &self.intercept * s }
    }

    /// Pointwise sum with another linear function.
    pub fn plus(&self, other: &Self) -> Self {
        LinearWeight {
            slope: &self.slope + &other.slope,
            intercept: &self.intercept + &other.intercept,
        }
    }

    /// Pointwise addition of a constant.
    pub fn plus_constant(&self, c: &Rational) -> Self {
        LinearWeight { slope: self.slope.clone(), intercept: &self.intercept + c }
    }
}

impl fmt::Display for LinearWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x + {}", self.slope, self.intercept)
    }
}

/// Role of an edge in a triangle expansion step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Green,
    Red,
    Blue,
}

impl EdgeColor {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeColor::Green => "green",
            EdgeColor::Red => "red",
            EdgeColor::Blue => "blue",
        }
    }
}

/// Role of an edge inside a packed instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PackRole {
    /// First segment of a subdivision path, in the shared subgraph.
    UA,
    /// Middle segment `a-b` of a subdivision path.
    AB,
    /// Middle segment `b-c` of a subdivision path.
    BC,
    /// Last segment of a subdivision path, in the shared subgraph.
    CV,
    /// Chord from a `b` vertex to a later path's `a` vertex.
    BACross,
    /// Chord from a `b` vertex to a later path's `c` vertex.
    BCCross,
}

impl PackRole {
    pub fn as_str(self) -> &'static str {
        match self {
            PackRole::UA => "u-a",
            PackRole::AB => "a-b",
            PackRole::BC => "b-c",
            PackRole::CV => "c-v",
            PackRole::BACross => "b-a-cross",
            PackRole::BCCross => "b-c-cross",
        }
    }
}

/// Optional provenance attached to an edge by the construction routines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeMetadata {
    /// Triangle-expansion role.
    pub color: Option<EdgeColor>,
    /// Id of the edge this one replaced in the previous expansion level.
    pub parent: Option<usize>,
    /// Id of the triangle this edge belongs to (the parent edge's id).
    pub triangle: Option<usize>,
    /// The new vertex of this edge's triangle.
    pub apex: Option<usize>,
    /// Packed subgraph index: 0 for the shared part, `j >= 1` for copy `j`.
    pub subgraph: Option<usize>,
    /// Role within a packed instance.
    pub role: Option<PackRole>,
    /// Id of the original edge this packed edge stands in for.
    pub source: Option<usize>,
}

impl EdgeMetadata {
    pub fn is_empty(&self) -> bool {
        *self == EdgeMetadata::default()
    }
}

/// An undirected edge with a linear weight function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Dense id, equal to the edge's index in the graph's edge list.
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub weight: LinearWeight,
    pub metadata: EdgeMetadata,
}

/// An undirected multigraph with linear edge weights. Self-loops are not
/// allowed; parallel edges are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    /// Expansion level, for graphs produced by the recursive construction.
    pub level: Option<usize>,
}

impl ParametricGraph {
    /// An edgeless graph on `vertex_count >= 1` vertices.
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count >= 1, "graph must have at least one vertex");
        ParametricGraph { vertex_count, edges: Vec::new(), level: None }
    }

    /// Adds an edge and returns its id. Panics on self-loops or endpoints
    /// out of range; parsed input is validated before reaching this point.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: LinearWeight) -> usize {
        self.add_edge_with(u, v, weight, EdgeMetadata::default())
    }

    pub fn add_edge_with(
        &mut self,
        u: usize,
        v: usize,
        weight: LinearWeight,
        metadata: EdgeMetadata,
    ) -> usize {
        assert!(u != v, "self-loop on vertex {u}");
        assert!(u < self.vertex_count && v < self.vertex_count, "endpoint out of range");
        let id = self.edges.len();
        self.edges.push(Edge { id, u, v, weight, metadata });
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// Replaces every weight via `f`, keeping ids and metadata.
    pub fn map_weights(&self, mut f: impl FnMut(&Edge) -> LinearWeight) -> Self {
        let mut out = self.clone();
        for e in &mut out.edges {
            e.weight = f(self.edge(e.id));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = crate::mst::UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        (1..self.vertex_count).all(|v| uf.find(v) == uf.find(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rational};

    fn w(a: i64, b: i64) -> LinearWeight {
        LinearWeight::new(integer(a), integer(b))
    }

    #[test]
    fn evaluate_is_affine() {
        let f = LinearWeight::new(rational(3, 2), integer(-1));
        assert_eq!(f.evaluate(&integer(0)), integer(-1));
        assert_eq!(f.evaluate(&integer(2)), integer(2));
        assert_eq!(f.evaluate(&rational(1, 3)), rational(-1, 2));
    }

    #[test]
    fn crossing_cases() {
        assert_eq!(w(1, 0).crossing_lambda(&w(1, 1)), Crossing::Never);
        assert_eq!(w(1, 0).crossing_lambda(&w(1, 0)), Crossing::Everywhere);
        assert_eq!(w(1, 0).crossing_lambda(&w(-1, 4)), Crossing::At(integer(2)));
        // Crossing is symmetric.
        assert_eq!(w(-1, 4).crossing_lambda(&w(1, 0)), Crossing::At(integer(2)));
    }

    #[test]
    fn crossing_value_lies_on_both_lines() {
        let f = LinearWeight::new(rational(2, 3), rational(-1, 5));
        let g = LinearWeight::new(rational(-7, 4), integer(3));
        match f.crossing_lambda(&g) {
            Crossing::At(x) => assert_eq!(f.evaluate(&x), g.evaluate(&x)),
            c => panic!("expected a single crossing, got {c:?}"),
        }
    }

    #[test]
    fn substitute_matches_pointwise() {
        let f = LinearWeight::new(rational(5, 7), rational(2, 3));
        let (alpha, beta) = (rational(-3, 2), rational(9, 4));
        let g = f.substitute(&alpha, &beta);
        for x in [integer(-2), integer(0), rational(7, 5)] {
            assert_eq!(g.evaluate(&x), f.evaluate(&(&alpha * &x + &beta)));
        }
    }

    #[test]
    fn graph_accounting() {
        let mut g = ParametricGraph::new(3);
        let e0 = g.add_edge(0, 1, w(0, 1));
        let e1 = g.add_edge(1, 2, w(1, 0));
        assert_eq!((e0, e1), (0, 1));
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_connected());
        g.add_edge(0, 1, w(0, 5)); // parallel edges are fine
        assert_eq!(g.edge(2).id, 2);
    }

    #[test]
    fn disconnected_graph_detected() {
        let mut g = ParametricGraph::new(4);
        g.add_edge(0, 1, w(0, 1));
        g.add_edge(2, 3, w(0, 1));
        assert!(!g.is_connected());
    }

    #[test]
    #[should_panic(expected = "self-loop")]
    fn self_loops_rejected() {
        let mut g = ParametricGraph::new(2);
        g.add_edge(1, 1, w(0, 1));
    }
}
