//! Unit bar visibility numbers and layouts.
//!
//! A *t-unit-bar layout* assigns every vertex of a graph at most `t`
//! horizontal bars of length one. Two vertices are adjacent exactly when some
//! bar of one sees some bar of the other through an unobstructed vertical
//! channel of positive width. This crate provides:
//!
//! - [`graph`]: labeled simple graphs and generators for the families used
//!   throughout the crate.
//! - [`layout`]: exact rational bar layouts, a plane-sweep visibility
//!   extractor and a verifier that diffs a layout against a target graph.
//! - [`tree`]: recognition of unit bar visibility trees, the greedy
//!   prune/color decomposition that determines `ub(T)` for any tree in linear
//!   time, and layout construction for trees.
//! - [`bipartite`] and [`complete`]: explicit layouts for `K_{m,n}` and `K_n`
//!   together with the known bounds.
//! - [`oracle`]: brute-force references used to cross-check the above.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bipartite;
pub mod complete;
mod error;
pub mod graph;
pub mod layout;
pub mod oracle;
pub mod tree;

pub use error::Error;
pub use graph::{Graph, GraphKind, RootedTree};
pub use layout::{Bar, Layout, Rational, VerifyReport};

/// `⌈a / b⌉` for nonnegative `a` and positive `b`.
pub(crate) const fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}
