//! Seeded generation of random test instances.
//!
//! Everything here is deterministic in the seed, so differential-test
//! failures can be replayed exactly.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bicriterion::BiWeightedGraph;
use crate::rational::Rational;
use crate::{LinearWeight, ParametricGraph};

/// The stream cipher generator used for all randomized checks.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `-bound..=bound` and denominator in
/// `1..=bound`. Canonicalization only shrinks magnitudes, so both parts of
/// the result stay within `bound`.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    assert!(bound >= 1, "coefficient bound must be positive");
    let numer = rng.random_range(-bound..=bound);
    let denom = rng.random_range(1..=bound);
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A weight function with both coefficients drawn by [`random_rational`].
pub fn random_weight(rng: &mut impl Rng, bound: i64) -> LinearWeight {
    let slope = random_rational(rng, bound);
    let intercept = random_rational(rng, bound);
    LinearWeight::new(slope, intercept)
}

/// A connected multigraph: a random spanning tree on `2..=max_vertices`
/// vertices plus random extra edges (parallel edges allowed, self-loops
/// not) up to `max_edges` in total. A spanning tree is always emitted, so
/// the edge count is at least `n - 1` even when `max_edges` is smaller.
pub fn random_connected_graph(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    bound: i64,
) -> ParametricGraph {
    assert!(max_vertices >= 2, "need room for at least two vertices");
    let n = rng.random_range(2..=max_vertices);
    let mut g = ParametricGraph::new(n);
    for v in 1..n {
        let u = rng.random_range(0..v);
        let w = random_weight(rng, bound);
        g.add_edge(u, v, w);
    }
    let extras = rng.random_range(0..=max_edges.saturating_sub(n - 1));
    for _ in 0..extras {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            let w = random_weight(rng, bound);
            g.add_edge(u, v, w);
        }
    }
    g
}

/// A connected bicriterion instance on `min_vertices..=max_vertices`
/// vertices: a spanning tree plus up to four extra edges. Costs are kept
/// strictly positive when `positive_costs` is set; profits always range
/// over both signs.
pub fn random_biweighted_graph(
    rng: &mut impl Rng,
    min_vertices: usize,
    max_vertices: usize,
    bound: i64,
    positive_costs: bool,
) -> BiWeightedGraph {
    assert!(2 <= min_vertices && min_vertices <= max_vertices, "bad vertex range");
    let n = rng.random_range(min_vertices..=max_vertices);
    let mut bg = BiWeightedGraph::new(n);
    for v in 1..n {
        let u = rng.random_range(0..v);
        let (c, p) = (random_cost(rng, bound, positive_costs), random_rational(rng, bound));
        bg.add_edge(u, v, c, p);
    }
    for _ in 0..rng.random_range(0..=4usize) {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            let (c, p) = (random_cost(rng, bound, positive_costs), random_rational(rng, bound));
            bg.add_edge(u, v, c, p);
        }
    }
    bg
}

fn random_cost(rng: &mut impl Rng, bound: i64, positive: bool) -> Rational {
    if positive {
        let numer = rng.random_range(1..=bound);
        let denom = rng.random_range(1..=bound);
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    } else {
        random_rational(rng, bound)
    }
}
