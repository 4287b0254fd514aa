//! The recursive weight assignment and its supporting transforms.
//!
//! One expansion round flattens the previous level's weights into a narrow
//! band, then gives the three edges of each triangle affine images of the
//! parent weight, chosen so that all crossings of the new arrangement fall
//! into six disjoint lambda blocks (blue-green, blue-blue, blue-red,
//! red-red, red-green, green-green, left to right). Inside each
//! monochromatic block the previous level's whole crossing pattern replays.

use crate::graph::{Crossing, EdgeColor, LinearWeight, ParametricGraph};
use crate::rational::{ceil_log2, floor_log2, integer, pow2, rational, Rational};
use crate::Error;
use num_traits::{One, Signed, Zero};

/// Reparametrizes and rescales so that every pairwise crossing lands in
/// `[0, 1]` and `|w(lambda)| <= eps` for every edge over `lambda in [-1, 2]`.
///
/// The substitution `lambda <- alpha * lambda + beta` is shared by all
/// edges and `alpha > 0`, so the tree sequence is preserved up to
/// reparametrization. If `g` has no crossings only the scaling step
/// applies. All chosen constants are powers of two (or dyadic), which keeps
/// coefficient growth in the recursive construction tame.
pub fn normalize(g: &ParametricGraph, eps: &Rational) -> ParametricGraph {
    assert!(eps.is_positive(), "eps must be positive");

    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if let Crossing::At(x) = edges[i].weight.crossing_lambda(&edges[j].weight) {
                if lo.as_ref().is_none_or(|l| x < *l) {
                    lo = Some(x.clone());
                }
                if hi.as_ref().is_none_or(|h| x > *h) {
                    hi = Some(x);
                }
            }
        }
    }

    let mapped = match (lo, hi) {
        (Some(lo), Some(hi)) => {
            let span = &hi - &lo;
            // alpha >= 2 * span leaves at least half the target interval as
            // slack, so a beta on the alpha/2 grid below lo always fits.
            let alpha = if span.is_zero() {
                Rational::one()
            } else {
                pow2(ceil_log2(&span) + 1)
            };
            let half = &alpha / integer(2);
            let beta = (&lo / &half).floor() * &half;
            debug_assert!(beta <= lo && hi <= &beta + &alpha);
            g.map_weights(|e| e.weight.substitute(&alpha, &beta))
        }
        _ => g.clone(),
    };

    let mut max_abs = Rational::zero();
    for e in mapped.edges() {
        for x in [integer(-1), integer(2)] {
            let v = e.weight.evaluate(&x).abs();
            if v > max_abs {
                max_abs = v;
            }
        }
    }
    if max_abs <= *eps {
        return mapped;
    }
    let scale = pow2(-ceil_log2(&(&max_abs / eps)));
    debug_assert!(&max_abs * &scale <= *eps);
    mapped.map_weights(|e| e.weight.scale(&scale))
}

/// The per-color affine images of a parent weight `f`:
/// green `f(lambda - 9/2) + 3`, red `f(15/4 - lambda) + lambda - 1`,
/// blue `f(lambda - 5/4) + 4 - lambda`.
fn child_weight(f: &LinearWeight, color: EdgeColor) -> LinearWeight {
    match color {
        EdgeColor::Green => f
            .substitute(&Rational::one(), &rational(-9, 2))
            .plus_constant(&integer(3)),
        EdgeColor::Red => f
            .substitute(&-Rational::one(), &rational(15, 4))
            .plus(&LinearWeight::new(Rational::one(), integer(-1))),
        EdgeColor::Blue => f
            .substitute(&Rational::one(), &rational(-5, 4))
            .plus(&LinearWeight::new(-Rational::one(), integer(4))),
    }
}

/// One unperturbed expansion round: flatten the previous level to `eps`,
/// then expand every edge into a triangle with the transformed weights.
pub(crate) fn expand_step(prev: &ParametricGraph, eps: &Rational) -> ParametricGraph {
    let flat = normalize(prev, eps);
    super::expand_triangles(&flat, child_weight)
}

/// Checks the six-block crossing order: sorted by lambda, the crossings
/// must come as blue-green, blue-blue, blue-red, red-red, red-green,
/// green-green, with every member of a block strictly left of every member
/// of all later blocks. Returns false if any edge lacks a color, any two
/// weight functions coincide, or the blocks interleave.
pub fn verify_crossing_order(g: &ParametricGraph) -> bool {
    use EdgeColor::*;
    fn block(a: EdgeColor, b: EdgeColor) -> usize {
        match (a.min_pair(b), a.max_pair(b)) {
            (Blue, Green) => 0,
            (Blue, Blue) => 1,
            (Blue, Red) => 2,
            (Red, Red) => 3,
            (Red, Green) => 4,
            (Green, Green) => 5,
            _ => unreachable!("min_pair/max_pair order the pair canonically"),
        }
    }

    let edges = g.edges();
    let mut ranges: [Option<(Rational, Rational)>; 6] = Default::default();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (Some(ci), Some(cj)) = (edges[i].metadata.color, edges[j].metadata.color)
            else {
                return false;
            };
            match edges[i].weight.crossing_lambda(&edges[j].weight) {
                Crossing::Everywhere => return false,
                Crossing::Never => {}
                Crossing::At(x) => {
                    let slot = &mut ranges[block(ci, cj)];
                    match slot {
                        None => *slot = Some((x.clone(), x)),
                        Some((lo, hi)) => {
                            if x < *lo {
                                *lo = x.clone();
                            }
                            if x > *hi {
                                *hi = x;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut last_hi: Option<&Rational> = None;
    for slot in ranges.iter().flatten() {
        if let Some(prev_hi) = last_hi {
            if *prev_hi >= slot.0 {
                return false;
            }
        }
        last_hi = Some(&slot.1);
    }
    true
}

impl EdgeColor {
    // Canonical pair ordering for block classification: blue < red < green.
    fn rank(self) -> u8 {
        match self {
            EdgeColor::Blue => 0,
            EdgeColor::Red => 1,
            EdgeColor::Green => 2,
        }
    }
    fn min_pair(self, other: Self) -> Self {
        if self.rank() <= other.rank() {
            self
        } else {
            other
        }
    }
    fn max_pair(self, other: Self) -> Self {
        if self.rank() <= other.rank() {
            other
        } else {
            self
        }
    }
}

/// Shifts every intercept by `delta * id` with `delta` halved until all
/// crossings are simple and, for every edge, the left-to-right order of its
/// crossings with the other edges is unchanged (among those that were
/// distinct already).
///
/// Fails with [`Error::Unperturbable`] when no `delta` in the halving
/// sequence works, e.g. for concurrent lines whose crossing stays
/// concurrent under every id-proportional shift.
pub fn perturb_simple(g: &ParametricGraph) -> Result<ParametricGraph, Error> {
    let m = g.edge_count();
    if m < 2 {
        return Ok(g.clone());
    }

    let edges = g.edges();
    // Crossing coordinates of the unperturbed input, indexed by edge pair.
    let mut before: Vec<Vec<Option<Rational>>> = vec![vec![None; m]; m];
    let mut coords: Vec<Rational> = Vec::new();
    let mut min_slope_gap: Option<Rational> = None;
    for i in 0..m {
        for j in i + 1..m {
            if let Crossing::At(x) = edges[i].weight.crossing_lambda(&edges[j].weight) {
                coords.push(x.clone());
                before[i][j] = Some(x.clone());
                before[j][i] = Some(x);
                let gap = (&edges[i].weight.slope - &edges[j].weight.slope).abs();
                if min_slope_gap.as_ref().is_none_or(|g| gap < *g) {
                    min_slope_gap = Some(gap);
                }
            }
        }
    }

    // A shift of delta * id moves the crossing of edges (i, j) by at most
    // delta * (m - 1) / |slope_i - slope_j|; keep every movement well under
    // the smallest gap between distinct crossing coordinates.
    coords.sort_unstable();
    coords.dedup();
    let min_gap = coords
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .unwrap_or_else(Rational::one);
    let mut delta = match &min_slope_gap {
        Some(s) => {
            let bound = &min_gap * s / (integer(1024) * integer((m - 1) as i64));
            pow2(floor_log2(&bound))
        }
        None => Rational::one(),
    };

    for _ in 0..200 {
        let candidate = g.map_weights(|e| {
            e.weight.plus_constant(&(&delta * integer(e.id as i64)))
        });
        if crossings_simple(&candidate) && order_preserved(&before, &candidate) {
            return Ok(candidate);
        }
        delta /= integer(2);
    }
    Err(Error::Unperturbable)
}

fn crossings_simple(g: &ParametricGraph) -> bool {
    let edges = g.edges();
    let mut xs: Vec<Rational> = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            match edges[i].weight.crossing_lambda(&edges[j].weight) {
                Crossing::Everywhere => return false,
                Crossing::Never => {}
                Crossing::At(x) => xs.push(x),
            }
        }
    }
    xs.sort_unstable();
    xs.windows(2).all(|w| w[0] != w[1])
}

/// For each edge, its crossings with the others must keep their
/// left-to-right order: whenever two crossings had distinct coordinates
/// before, the earlier one must stay strictly earlier.
fn order_preserved(before: &[Vec<Option<Rational>>], g: &ParametricGraph) -> bool {
    let m = g.edge_count();
    let edges = g.edges();
    for e in 0..m {
        let mut partners: Vec<(&Rational, usize)> = before[e]
            .iter()
            .enumerate()
            .filter_map(|(f, x)| x.as_ref().map(|x| (x, f)))
            .collect();
        partners.sort();
        // Walk groups of equal original coordinates; across groups the new
        // coordinates must strictly increase.
        let mut idx = 0;
        let mut prev_group_max: Option<Rational> = None;
        while idx < partners.len() {
            let mut end = idx + 1;
            while end < partners.len() && partners[end].0 == partners[idx].0 {
                end += 1;
            }
            let mut group_min: Option<Rational> = None;
            let mut group_max: Option<Rational> = None;
            for &(_, f) in &partners[idx..end] {
                let Crossing::At(x) =
                    edges[e].weight.crossing_lambda(&edges[f].weight)
                else {
                    // Slopes are unchanged by intercept shifts, so a pair
                    // that crossed before still crosses.
                    unreachable!("intercept shifts cannot remove a crossing");
                };
                if group_min.as_ref().is_none_or(|v| x < *v) {
                    group_min = Some(x.clone());
                }
                if group_max.as_ref().is_none_or(|v| x > *v) {
                    group_max = Some(x);
                }
            }
            if let (Some(prev), Some(min)) = (&prev_group_max, &group_min) {
                if prev >= min {
                    return false;
                }
            }
            prev_group_max = group_max;
            idx = end;
        }
    }
    true
}

/// The level-`i` complete 2-tree with the recursive weights: level 0 is the
/// single edge with constant weight 0; each later level flattens the
/// previous one with an adaptively chosen `eps`, expands triangles with the
/// per-color transforms, perturbs to simple crossings, and accepts the
/// first `eps` whose result passes [`verify_crossing_order`].
pub fn recursive_weights(level: usize) -> ParametricGraph {
    let mut g = super::complete_2tree(0);
    for _ in 0..level {
        g = next_level(&g);
    }
    g
}

fn next_level(prev: &ParametricGraph) -> ParametricGraph {
    let mut eps = rational(1, 4);
    for _ in 0..64 {
        let candidate = expand_step(prev, &eps);
        if let Ok(perturbed) = perturb_simple(&candidate) {
            if verify_crossing_order(&perturbed) {
                return perturbed;
            }
        }
        eps /= integer(2);
    }
    unreachable!("no eps in 64 halvings produced the six-block crossing order");
}
