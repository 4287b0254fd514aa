//! Bottleneck weight of the path between a triangle's original endpoints,
//! and the randomized check of the triangle contraction identity.

use crate::graph::{LinearWeight, ParametricGraph};
use crate::mst::mst_at;
use crate::rational::{integer, Rational};
use crate::sweep::Endpoint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

/// One linear piece of the bottleneck function: on `[lo, hi]` the
/// bottleneck edge of the p-q path is `edge` (0 = pq, 1 = pr, 2 = qr) with
/// the given weight function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleneckPiece {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub edge: usize,
    pub weight: LinearWeight,
}

/// Index of the bottleneck edge of triangle pqr at a fixed parameter:
/// the heaviest edge on the p-q path in the triangle's MST, under the
/// strict (weight, index) order. `weights[0]` is pq, `weights[1]` pr,
/// `weights[2]` qr.
pub(crate) fn bottleneck_edge_at(weights: &[LinearWeight; 3], lambda: &Rational) -> usize {
    let key = |i: usize| (weights[i].evaluate(lambda), i);
    // The MST drops the heaviest triangle edge. If that is pq, the path
    // runs p-r-q and its bottleneck is the heavier remaining edge;
    // otherwise the path is the edge pq itself.
    if key(0) > key(1) && key(0) > key(2) {
        if key(1) > key(2) {
            1
        } else {
            2
        }
    } else {
        0
    }
}

/// Piecewise-linear description of the bottleneck weight of the p-q path
/// in triangle pqr, over the whole parameter line. Pieces with the same
/// active edge are merged; adjacent pieces always switch edges.
pub fn bottleneck_function(weights: &[LinearWeight; 3]) -> Vec<BottleneckPiece> {
    let mut cuts: Vec<Rational> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            if let crate::graph::Crossing::At(x) =
                weights[i].crossing_lambda(&weights[j])
            {
                cuts.push(x);
            }
        }
    }
    cuts.sort_unstable();
    cuts.dedup();

    let mut samples: Vec<Rational> = Vec::new();
    if cuts.is_empty() {
        samples.push(Rational::zero());
    } else {
        samples.push(cuts.first().unwrap() - integer(1));
        for pair in cuts.windows(2) {
            samples.push((&pair[0] + &pair[1]) / integer(2));
        }
        samples.push(cuts.last().unwrap() + integer(1));
    }

    let mut pieces: Vec<BottleneckPiece> = Vec::new();
    let mut lo = Endpoint::NegInf;
    for (i, sample) in samples.iter().enumerate() {
        let edge = bottleneck_edge_at(weights, sample);
        let hi = if i + 1 < samples.len() {
            Endpoint::Finite(cuts[i].clone())
        } else {
            Endpoint::PosInf
        };
        if let Some(last) = pieces.last_mut() {
            if last.edge == edge {
                last.hi = hi.clone();
                lo = hi;
                continue;
            }
        }
        pieces.push(BottleneckPiece {
            lo,
            hi: hi.clone(),
            edge,
            weight: weights[edge].clone(),
        });
        lo = hi;
    }
    pieces
}

/// Outcome of [`check_triangle_lemma`].
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub trials: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Randomized check of the triangle contraction identity: replace an edge
/// pq of a constant-weight graph G by a triangle pqr (keeping pq, adding a
/// fresh vertex r and edges pr, qr) to get G+. With all weights distinct,
/// the multiset of MST(G+) edge weights must equal the multiset of MST(G)
/// edge weights, where pq's weight in G is redefined to the triangle's
/// p-q bottleneck weight, plus the minimum weight among the triangle's two
/// non-bottleneck edges.
pub fn check_triangle_lemma(trials: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    for trial in 0..trials {
        let n = rng.random_range(2..=6);
        // Random connected graph: a random attachment tree plus extras.
        let mut ends: Vec<(usize, usize)> = Vec::new();
        for v in 1..n {
            ends.push((rng.random_range(0..v), v));
        }
        let extra = rng.random_range(0..=4usize);
        for _ in 0..extra {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v {
                ends.push((u.min(v), u.max(v)));
            }
        }
        let m = ends.len();

        // Distinct constant weights for all edges of G+, i.e. m + 2 values.
        let mut weights: Vec<i64> = (1..=(m + 2) as i64).collect();
        for i in (1..weights.len()).rev() {
            weights.swap(i, rng.random_range(0..=i));
        }

        let pq_index = rng.random_range(0..m);
        let (p, q) = ends[pq_index];
        let r = n;

        let mut g_plus = ParametricGraph::new(n + 1);
        for (i, &(u, v)) in ends.iter().enumerate() {
            g_plus.add_edge(u, v, LinearWeight::constant(integer(weights[i])));
        }
        g_plus.add_edge(p, r, LinearWeight::constant(integer(weights[m])));
        g_plus.add_edge(q, r, LinearWeight::constant(integer(weights[m + 1])));

        let tri = [
            LinearWeight::constant(integer(weights[pq_index])),
            LinearWeight::constant(integer(weights[m])),
            LinearWeight::constant(integer(weights[m + 1])),
        ];
        let zero = Rational::zero();
        let b = bottleneck_edge_at(&tri, &zero);
        let bottleneck_weight = tri[b].intercept.clone();
        let min_non_bottleneck = (0..3)
            .filter(|&i| i != b)
            .map(|i| tri[i].intercept.clone())
            .min()
            .unwrap();

        let mut g = ParametricGraph::new(n);
        for (i, &(u, v)) in ends.iter().enumerate() {
            let w = if i == pq_index {
                bottleneck_weight.clone()
            } else {
                integer(weights[i])
            };
            g.add_edge(u, v, LinearWeight::constant(w));
        }

        let tree_weights = |g: &ParametricGraph| -> Vec<Rational> {
            let t = mst_at(g, &zero).expect("connected by construction");
            let mut ws: Vec<Rational> =
                t.edge_ids().iter().map(|&id| g.edge(id).weight.intercept.clone()).collect();
            ws.sort_unstable();
            ws
        };

        let mut expected = tree_weights(&g);
        expected.push(min_non_bottleneck);
        expected.sort_unstable();
        let actual = tree_weights(&g_plus);

        if expected != actual {
            let mut w = String::new();
            let _ = write!(
                w,
                "trial {trial}: n={n} edges={ends:?} weights={weights:?} pq=#{pq_index} \
                 expected {expected:?} got {actual:?}"
            );
            failures.push(w);
        }
    }
    LemmaReport { trials, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational;

    fn c(v: i64) -> LinearWeight {
        LinearWeight::constant(integer(v))
    }

    fn lin(a: i64, b: i64) -> LinearWeight {
        LinearWeight::new(integer(a), integer(b))
    }

    #[test]
    fn constant_lightest_pq_is_its_own_bottleneck() {
        let pieces = bottleneck_function(&[c(1), c(2), c(3)]);
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].edge, 0);
        assert_eq!((&pieces[0].lo, &pieces[0].hi), (&Endpoint::NegInf, &Endpoint::PosInf));
    }

    #[test]
    fn heaviest_pq_yields_heavier_of_the_others() {
        // pq = 9 is dropped from the MST; the p-q path is p-r-q and its
        // bottleneck is max(pr, qr) = 5.
        assert_eq!(bottleneck_edge_at(&[c(9), c(5), c(2)], &Rational::zero()), 1);
        assert_eq!(bottleneck_edge_at(&[c(9), c(2), c(5)], &Rational::zero()), 2);
    }

    #[test]
    fn reference_triangle_has_four_pieces() {
        // pq = 3, pr = lambda - 1, qr = 4 - lambda: green, blue, red, green.
        let pieces = bottleneck_function(&[lin(0, 3), lin(1, -1), lin(-1, 4)]);
        let edges: Vec<usize> = pieces.iter().map(|p| p.edge).collect();
        assert_eq!(edges, vec![0, 2, 1, 0]);
        assert_eq!(pieces.len(), 4);
        // Piece boundaries are the crossings with the constant edge and the
        // sloped edges' own crossing.
        assert_eq!(pieces[0].hi, Endpoint::Finite(integer(1)));
        assert_eq!(pieces[1].hi, Endpoint::Finite(rational(5, 2)));
        assert_eq!(pieces[2].hi, Endpoint::Finite(integer(4)));
    }

    #[test]
    fn pieces_match_brute_force_path_bottleneck() {
        let weights = [lin(2, -3), lin(-1, 2), lin(1, 0)];
        let pieces = bottleneck_function(&weights);
        let mut lambda = rational(-9, 2);
        for _ in 0..100 {
            lambda += rational(1, 7);
            // Brute force: MST of the triangle, then the heavier edge on
            // the p-q path (or pq itself).
            let mut g = ParametricGraph::new(3);
            g.add_edge(0, 1, weights[0].clone());
            g.add_edge(0, 2, weights[1].clone());
            g.add_edge(1, 2, weights[2].clone());
            let t = mst_at(&g, &lambda).unwrap();
            let brute = if t.contains(0) {
                weights[0].evaluate(&lambda)
            } else {
                weights[1].evaluate(&lambda).max(weights[2].evaluate(&lambda))
            };
            let piece = pieces
                .iter()
                .find(|p| {
                    p.lo.as_finite().is_none_or(|l| l <= &lambda)
                        && p.hi.as_finite().is_none_or(|h| &lambda <= h)
                })
                .expect("pieces cover the line");
            assert_eq!(piece.weight.evaluate(&lambda), brute, "lambda = {lambda}");
        }
    }

    #[test]
    fn hand_checked_single_edge_case() {
        // G is the single edge pq. In G+ the triangle has pq=3, pr=1, qr=2:
        // the MST keeps {1, 2}; the bottleneck is qr=2, so G's edge gets
        // weight 2 and the minimum non-bottleneck weight is 1.
        let tri = [c(3), c(1), c(2)];
        let b = bottleneck_edge_at(&tri, &Rational::zero());
        assert_eq!(b, 2);
        let mut g_plus = ParametricGraph::new(3);
        g_plus.add_edge(0, 1, tri[0].clone());
        g_plus.add_edge(0, 2, tri[1].clone());
        g_plus.add_edge(1, 2, tri[2].clone());
        let t = mst_at(&g_plus, &Rational::zero()).unwrap();
        assert_eq!(t.edge_ids(), &[1, 2]);
    }

    #[test]
    fn randomized_lemma_trials_pass() {
        let report = check_triangle_lemma(300, 20260819);
        assert_eq!(report.trials, 300);
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn lemma_check_is_deterministic_per_seed() {
        let a = check_triangle_lemma(50, 7);
        let b = check_triangle_lemma(50, 7);
        assert_eq!(a.failures, b.failures);
        assert_eq!(a.trials, b.trials);
    }
}
