//! Minimum spanning trees under linearly parametrized edge weights.
//!
//! Every edge of a [`ParametricGraph`] carries a weight function
//! `w(lambda) = a * lambda + b` with exact rational coefficients. As `lambda`
//! runs from -inf to +inf the minimum spanning tree changes at finitely many
//! breakpoints; the resulting sequence of maximal intervals is a
//! [`sweep::TreeSequence`].
//!
//! The crate provides:
//!
//! * exact sweep algorithms ([`sweep`]) and an independent brute-force
//!   oracle ([`oracle`]) for cross-checking them,
//! * constructions of graph families whose tree sequences are provably long
//!   ([`construct`]), together with the packing and padding steps that
//!   turn them into instances with a prescribed vertex and edge count,
//! * bicriterion spanning tree optimization over the cost/profit plane
//!   ([`bicriterion`]),
//! * a JSON interchange format ([`format`]) and SVG rendering ([`svg`]).
//!
//! All arithmetic is exact (`num_rational::BigRational`); nothing in the
//! crate relies on floating point except the final SVG coordinate output.

pub mod bicriterion;
pub mod construct;
mod error;
pub mod format;
pub mod graph;
pub mod mst;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod svg;
pub mod sweep;

pub use error::Error;
pub use graph::{Crossing, Edge, EdgeColor, EdgeMetadata, LinearWeight, ParametricGraph};
pub use mst::{mst_at, SpanningTree};
pub use rational::{parse_rational, rational, Rational};
pub use sweep::{Endpoint, Interval, TreeSequence};
