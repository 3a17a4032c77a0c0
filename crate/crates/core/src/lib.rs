//! Local dimension of finite posets: exact solvers, certificate checkers and
//! constructive bounds, together with the difference-graph and biclique cover
//! machinery they rest on.
//!
//! Element ids are 0-based throughout the library; the text formats in
//! [`formats`] are 1-based.

mod bits;

pub mod cli;
pub mod constructions;
pub mod diffgraph;
pub mod formats;
pub mod generators;
pub mod poset;
pub mod realizer;
pub mod solvers;

pub use bits::BitSet;
