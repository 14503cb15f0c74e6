//! Betti numbers, Hilbert functions and multiplicities of edge ideals with
//! linear resolutions, computed from the f-vector of the independence complex,
//! together with a Hochster-formula oracle for checking them.

pub mod betti;
pub mod binom;
pub mod chordal;
pub mod complex;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hilbert;
pub mod io;
mod json;
pub mod oracle;
pub mod vertex_set;

pub use betti::{BettiVector, PureResolutionType, Residual, Slack, VerificationReport};
pub use chordal::{EliminationOrder, LeafOrder};
pub use complex::{FVector, FaceComplex};
pub use error::{Error, Result};
pub use graph::{Graph, UniformHypergraph};
pub use hilbert::{HilbertSeries, IntPolynomial};
pub use oracle::{GradedBettiTable, HomologyRanks};
pub use vertex_set::VertexSet;
