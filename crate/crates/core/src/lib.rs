//! Antimagic edge labelings of regular bipartite graphs.
//!
//! A labeling assigns the integers `1..=|E|` bijectively to the edges of a
//! graph; it is antimagic when the sums of labels incident to each vertex
//! are pairwise distinct. Every regular bipartite graph of degree at least
//! 2 admits such a labeling, and this crate constructs one: the edge set is
//! 1-factorized (every regular bipartite graph has a perfect matching), the
//! factors are labeled in stages whose partial sums satisfy modular
//! invariants separating the two parts, and a final factor spreads the
//! sums within each part. Every construction is verified, and tiny
//! instances can be cross-checked against an exhaustive oracle.
//!
//! Entry points: [`construct::label_antimagic`] for the full pipeline,
//! [`verify::verify_antimagic`] for checking, [`generate`] for test graphs,
//! and [`oracle`] for brute force on desk-size instances.

pub mod construct;
pub mod error;
pub mod factorize;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod partitions;
pub mod verify;

pub use construct::{label_antimagic, AntimagicOutcome};
pub use error::{Error, Result};
pub use formats::{export, parse_graph, Format};
pub use graph::{BipartiteGraph, Edge, Labeling, SumProfile};
