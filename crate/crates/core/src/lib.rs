//! Radicals, socles and Loewy series of lattices.
//!
//! Finite lattices are stored as dense meet/join tables with down-set and
//! up-set bitsets. Infinite lattices are described by oracles (see
//! [`procedural`]) and their radical series is run through limit ordinals.

pub mod enumeration;
pub mod error;
pub mod instances;
pub mod isomorphism;
pub mod lattice;
pub mod laws;
pub mod ordinal;
pub mod procedural;
pub mod properties;
pub mod series;

pub use enumeration::{enumerate_filtered, enumerate_lattices, CorpusFilter, CorpusSpec};
pub use error::{BoundKind, Error, Extremum, Result};
pub use isomorphism::{find_isomorphism, is_isomorphic};
pub use lattice::{CoverRelation, Elem, FiniteLattice, IntervalView};
pub use laws::{Law, LawReport, RunMode, Violation};
pub use ordinal::OrdinalIndex;
pub use procedural::{ProceduralError, ProceduralLattice};
pub use properties::{DistributivityReport, ModularityReport};
pub use series::{Orientation, RadicalSeries};
