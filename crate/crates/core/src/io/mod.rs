//! JSON documents and Graphviz output.

mod dot;
mod json;

pub use dot::{hasse_dot, matching_dot};
pub use json::{IntervalDocument, MatchingDocument};
