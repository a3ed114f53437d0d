//! Relative Tutte polynomials of colored multigraphs.
//!
//! A colored multigraph carries a distinguished set of *zero edges*. The
//! relative Tutte polynomial runs deletion–contraction on the regular edges
//! only and hands every residual graph of zero edges to a user supplied map
//! ψ. Two evaluation routes are provided: the contracting-set expansion with
//! relative activities ([`expansion`]) and memoized deletion–contraction
//! ([`dc`]). After [`MultiPoly::localize`] both routes agree as literal
//! polynomials, independently of edge labeling or edge order.
//!
//! With the zero-order ψ of [`psi::KnotPsi`], the relative Tutte polynomial
//! of the face graph of a virtual link diagram yields its Kauffman bracket
//! ([`knot`]); an independent state-sum over PD codes checks that path.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod dc;
mod dsu;
pub mod expansion;
pub mod graph;
pub mod knot;
pub mod poly;
pub mod psi;
pub mod special;
#[cfg(test)]
mod testutil;

pub use dsu::UnionFind;
pub use graph::{ColoredMultigraph, Edge, EdgeColor, EdgeId, GraphError, VertexId};
pub use poly::{Coefficient, Color, Monomial, MultiPoly, PolyError, Var};
