//! Combinatorial rigidity and exact elimination for plane distance constraints.
//!
//! * [`graph`]: simple graphs, connectivity, separation blocks, canonical
//!   forms and planarity.
//! * [`rigidity`]: Laman and basic-graph predicates, the pebble game, the
//!   `G#R` surgery and the Henneberg census.
//! * [`decomposition`]: block decomposition with virtual and redundant
//!   edges, the triangle-decomposition classifier and the reduction engine
//!   that drives a 3-connected Laman graph down to basic graphs.
//! * [`algebra`]: exact polynomial arithmetic, resultants, factorization over
//!   the rationals, Frobenius cycle types, non-solubility certificates, the
//!   K(3,3) pipeline and a numeric ruler-and-compass solver.

pub mod algebra;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod rigidity;

pub use error::{Error, Result};
pub use graph::{canonical_form, CanonicalForm, Edge, Graph, SeparationPair, Vertex};
