//! Verification toolkit for the Merino-Welsh inequality on series-parallel graphs.
//!
//! A two-terminal series-parallel graph is described by a six-parameter vector
//! that composes under series and parallel connection. This crate provides that
//! algebra ([`params`]), decomposition trees and their realizations ([`tree`],
//! [`graph`]), a memoized Tutte polynomial engine ([`tutte`]), brute-force
//! counting oracles ([`oracle`]), replaceability tests ([`reduce`]), and the
//! fixed-point survivor search ([`search`]).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod graph;
pub mod oracle;
pub mod params;
pub mod reduce;
pub mod search;
pub mod tree;
pub mod tutte;

pub use graph::{Multigraph, TwoTerminal};
pub use params::ParamVec;
pub use tree::DecompTree;
