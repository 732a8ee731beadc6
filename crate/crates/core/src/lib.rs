//! Secure, independent and isolate domination on small graphs.
//!
//! * [`graph`], [`vertex_set`], [`generate`], [`io`]: graphs, vertex subsets,
//!   named families, products and text formats.
//! * [`verify`]: definition-level checks for the five variants.
//! * [`solve`]: exact minimum search, the oracle for everything else.
//! * [`families`]: closed-form `γ_is` values and explicit witnesses.
//! * [`classes`]: bipartite, split, threshold and perfect elimination
//!   bipartite recognition, plus the threshold-graph InSDS algorithm.
//! * [`reductions`]: gadget constructions with forward and reverse maps.
//! * [`catalog`]: graph enumerators used by the test suites.

pub mod catalog;
pub mod classes;
pub mod error;
pub mod families;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod solve;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use generate::FamilySpec;
pub use graph::Graph;
pub use io::GraphFormat;
pub use solve::{Decision, SearchBudget, Solution, SolverConfig};
pub use verify::{CertificateReport, Variant, Violation};
pub use vertex_set::VertexSet;
