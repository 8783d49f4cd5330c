//! Split graph recognition through edge contraction.
//!
//! The crate is organised in four layers:
//!
//! - [`graph`]: the bitset graph type, contraction, complements, induced
//!   subgraphs, isomorphism, canonical forms, enumeration and graph6 I/O.
//! - [`invariants`]: exact clique, independence and chromatic numbers,
//!   induced pattern search, domination and perfection.
//! - [`split`]: split, balanced split, pseudo-split and Nordhaus-Gaddum
//!   recognizers, the exceptional family detector and the contraction
//!   witness searches.
//! - [`harness`]: exhaustive verification of every characterization over
//!   all small graphs, plus the census table.

pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod split;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, NamedPattern, VertexSet};
