//! Extremal constructions: graph families whose parametric MST sequences
//! are provably long, and the packing that embeds them into dense graphs.

mod bottleneck;
mod pack;
mod weights;

pub use bottleneck::{
    bottleneck_function, check_triangle_lemma, BottleneckPiece, LemmaReport,
};
pub use pack::{pack, subdivision_check, theorem_instance, TheoremInstance};
pub use weights::{normalize, perturb_simple, recursive_weights, verify_crossing_order};

use crate::graph::{EdgeColor, EdgeMetadata, LinearWeight, ParametricGraph};
use crate::rational::Rational;
use num_traits::Zero;

/// Replaces every edge pq of `g` by a triangle pqr with a fresh apex r.
///
/// Numbering is deterministic: the apex for edge `e` is vertex
/// `g.vertex_count() + e.id`, and edge `e` expands to ids `3e` (green, the
/// inherited pq), `3e + 1` (red, lower endpoint to apex) and `3e + 2`
/// (blue, higher endpoint to apex). `weight_of` maps the parent weight and
/// a color to the child weight.
pub(crate) fn expand_triangles(
    g: &ParametricGraph,
    mut weight_of: impl FnMut(&LinearWeight, EdgeColor) -> LinearWeight,
) -> ParametricGraph {
    let n = g.vertex_count();
    let mut out = ParametricGraph::new(n + g.edge_count());
    out.level = g.level.map(|l| l + 1);
    for e in g.edges() {
        let apex = n + e.id;
        let (p, q) = (e.u.min(e.v), e.u.max(e.v));
        let md = |color| EdgeMetadata {
            color: Some(color),
            parent: Some(e.id),
            triangle: Some(e.id),
            apex: Some(apex),
            ..EdgeMetadata::default()
        };
        out.add_edge_with(p, q, weight_of(&e.weight, EdgeColor::Green), md(EdgeColor::Green));
        out.add_edge_with(p, apex, weight_of(&e.weight, EdgeColor::Red), md(EdgeColor::Red));
        out.add_edge_with(q, apex, weight_of(&e.weight, EdgeColor::Blue), md(EdgeColor::Blue));
    }
    out
}

/// The complete 2-tree of the given level: start from a single edge and
/// replace every edge by a triangle, `level` times. Weights are the
/// constant zero placeholder; metadata records colors, triangle ids, parent
/// edges and apexes of the final expansion round.
pub fn complete_2tree(level: usize) -> ParametricGraph {
    let mut g = ParametricGraph::new(2);
    g.level = Some(0);
    g.add_edge(0, 1, LinearWeight::constant(Rational::zero()));
    for _ in 0..level {
        g = expand_triangles(&g, |w, _| w.clone());
    }
    g
}

/// Guaranteed tree-sequence length of the level-`i` construction:
/// `N(i) = i*3^i/2 + (3^i + 3)/4`, always an integer.
pub fn lower_bound_value(i: u32) -> u64 {
    let p = 3u64.pow(i);
    (2 * i as u64 * p + p).div_ceil(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColor;

    fn pow3(i: u32) -> usize {
        3usize.pow(i)
    }

    #[test]
    fn counts_match_closed_forms() {
        for i in 0..=8u32 {
            let g = complete_2tree(i as usize);
            assert_eq!(g.edge_count(), pow3(i), "edges at level {i}");
            assert_eq!(g.vertex_count(), (pow3(i) + 3) / 2, "vertices at level {i}");
            assert_eq!(g.level, Some(i as usize));
        }
    }

    #[test]
    fn small_levels_are_the_expected_shapes() {
        let t0 = complete_2tree(0);
        assert_eq!((t0.vertex_count(), t0.edge_count()), (2, 1));
        let t2 = complete_2tree(2);
        assert_eq!((t2.vertex_count(), t2.edge_count()), (6, 9));
        let t3 = complete_2tree(3);
        assert_eq!((t3.vertex_count(), t3.edge_count()), (15, 27));
    }

    #[test]
    fn expansion_metadata_is_consistent() {
        let prev = complete_2tree(2);
        let g = complete_2tree(3);
        for e in prev.edges() {
            let children: Vec<_> = g
                .edges()
                .iter()
                .filter(|c| c.metadata.triangle == Some(e.id))
                .collect();
            assert_eq!(children.len(), 3);
            let colors: Vec<_> = children.iter().map(|c| c.metadata.color.unwrap()).collect();
            assert_eq!(colors, vec![EdgeColor::Green, EdgeColor::Red, EdgeColor::Blue]);
            // Green inherits the parent's endpoints; red takes the lower
            // endpoint to the apex, blue the higher one.
            let apex = prev.vertex_count() + e.id;
            let (p, q) = (e.u.min(e.v), e.u.max(e.v));
            assert_eq!((children[0].u, children[0].v), (p, q));
            assert_eq!((children[1].u, children[1].v), (p, apex));
            assert_eq!((children[2].u, children[2].v), (q, apex));
            assert!(children.iter().all(|c| c.metadata.apex == Some(apex)));
            assert!(children.iter().all(|c| c.metadata.parent == Some(e.id)));
            assert_eq!(children[0].id, 3 * e.id);
        }
    }

    #[test]
    fn every_apex_has_degree_two() {
        let prev = complete_2tree(2);
        let g = complete_2tree(3);
        for apex in prev.vertex_count()..g.vertex_count() {
            let deg = g.edges().iter().filter(|e| e.u == apex || e.v == apex).count();
            assert_eq!(deg, 2, "apex {apex}");
        }
    }

    #[test]
    fn two_tree_is_connected() {
        assert!(complete_2tree(4).is_connected());
    }

    #[test]
    fn bound_values_match_published_list() {
        let want = [1u64, 3, 12, 48, 183, 669, 2370, 8202, 27885, 93495];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(lower_bound_value(i as u32), w, "N({i})");
        }
    }

    #[test]
    fn bound_recurrence_agrees_with_closed_form() {
        // N(i) = 3 N(i-1) + (3^i - 3) / 2, N(0) = 1.
        let mut rec = 1u64;
        assert_eq!(lower_bound_value(0), rec);
        for i in 1..=20u32 {
            rec = 3 * rec + (3u64.pow(i) - 3) / 2;
            assert_eq!(lower_bound_value(i), rec, "N({i})");
        }
    }
}
