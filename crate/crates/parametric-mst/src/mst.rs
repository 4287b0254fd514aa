//! Minimum spanning tree at a fixed parameter value.

use crate::graph::ParametricGraph;
use crate::rational::Rational;
use crate::Error;

/// A spanning tree, stored as the sorted list of its edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanningTree {
    ids: Vec<usize>,
}

impl SpanningTree {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]), "duplicate edge id");
        SpanningTree { ids }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    /// The tree with `id` removed and `other` inserted.
    pub fn swap(&self, remove: usize, insert: usize) -> Self {
        let mut ids: Vec<usize> =
            self.ids.iter().copied().filter(|&e| e != remove).collect();
        debug_assert_eq!(ids.len() + 1, self.ids.len(), "removed edge not in tree");
        ids.push(insert);
        SpanningTree::new(ids)
    }
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already in the same component.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[lo] = hi;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        true
    }
}

/// The minimum spanning tree of `g` at the parameter value `lambda`.
///
/// Ties are broken by edge id: Kruskal's algorithm considers edges in
/// increasing `(weight, id)` order, so the result is the unique MST under
/// the strict total order that compares weights first and ids second.
pub fn mst_at(g: &ParametricGraph, lambda: &Rational) -> Result<SpanningTree, Error> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    let keys: Vec<Rational> =
        g.edges().iter().map(|e| e.weight.evaluate(lambda)).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));

    let mut uf = UnionFind::new(g.vertex_count());
    let mut ids = Vec::with_capacity(g.vertex_count() - 1);
    for id in order {
        let e = g.edge(id);
        if uf.union(e.u, e.v) {
            ids.push(id);
            if ids.len() + 1 == g.vertex_count() {
                break;
            }
        }
    }
    if ids.len() + 1 != g.vertex_count() {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree::new(ids))
}

/// The edge ids of the unique path between `from` and `to` in the tree.
pub fn tree_path(
    g: &ParametricGraph,
    tree: &SpanningTree,
    from: usize,
    to: usize,
) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertex_count()];
    for &id in tree.edge_ids() {
        let e = g.edge(id);
        adj[e.u].push((e.v, id));
        adj[e.v].push((e.u, id));
    }
    // Parent pointers from a BFS rooted at `from`.
    let mut via: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([from]);
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, id) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, id));
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (prev, id) = via[cur].expect("tree does not connect the endpoints");
        path.push(id);
        cur = prev;
    }
    path
}
