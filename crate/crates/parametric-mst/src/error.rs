use num_bigint::BigUint;

/// Errors reported by the sweep, oracle, and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The graph does not admit a spanning tree.
    #[error("graph is not connected")]
    Disconnected,

    /// The spanning tree count exceeds the enumeration cap.
    #[error("graph has {count} spanning trees, more than the cap of {cap}")]
    CapExceeded { count: BigUint, cap: u64 },

    /// Two weight functions coincide, or three or more cross at one point,
    /// or two crossings share a lambda coordinate.
    #[error("weight crossings are not simple; the swap sweep needs distinct pairwise crossings")]
    DegenerateCrossings,

    /// Intercept perturbation cannot separate the coincident crossings.
    #[error("perturbation failed to separate coincident crossings")]
    Unperturbable,

    /// The packing multiplicity is out of range.
    #[error("packing multiplicity k = {k} is out of range 1..={max}")]
    BadK { k: usize, max: usize },

    /// No simple connected graph with the requested vertex and edge count
    /// exists, or the counts fall outside the supported range.
    #[error("no instance with {n} vertices and {m} edges: need 2n-3 <= m <= n(n-1)/2")]
    BadRange { n: usize, m: usize },

    /// A ratio objective met a spanning tree of total cost zero.
    #[error("ratio objective is undefined: a candidate tree has total cost zero")]
    DivisionByZero,

    /// Malformed textual input (rational literal or graph file).
    #[error("parse error: {0}")]
    Parse(String),
}
