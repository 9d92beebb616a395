//! Exact combinatorial engine for mean, local and classical Ramsey-Turán numbers.
//!
//! Graphs live on at most 64 vertices with one machine word of adjacency per
//! vertex. On top of that sit edge colorings and the three coloring classes
//! (at most `k` colors, `k`-local, `ρ`-mean), the extremal constructions
//! (the triangle-free 2-coloring of `K_5` and its blow-ups), an exact
//! branch-and-bound search with certificates, clique-factor checking, and the
//! exact small-scale regularity machinery (densities, regular pairs, cluster
//! graphs).

pub mod canon;
pub mod coloring;
pub mod constructions;
pub mod factors;
pub mod graph;
pub mod regularity;
pub mod search;

mod error;

pub use coloring::{ColoredGraph, ColoringConstraint, EdgeColoring, Monochromatic};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use search::{Attestation, Certificate, CertificateKind, SearchConfig};

/// Exact rational used for `ρ`, `γ`, `η` and densities.
pub type Rational = num_rational::Ratio<i64>;

/// Binomial coefficient `C(n, 2)`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
