use thiserror::Error;

use crate::lattice::Elem;

/// Which of the two lattice bounds is missing for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Meet => f.write_str("greatest lower bound"),
            BoundKind::Join => f.write_str("least upper bound"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Minimum,
    Maximum,
}

impl std::fmt::Display for Extremum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extremum::Minimum => f.write_str("minimum"),
            Extremum::Maximum => f.write_str("maximum"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a lattice needs at least one element")]
    Empty,

    #[error("element id {id} is out of range for {n} elements")]
    OutOfRange { id: Elem, n: usize },

    #[error("cover relation is not a partial order: cycle through {cycle:?}")]
    NotAPoset { cycle: Vec<Elem> },

    #[error("elements {} and {} have no unique {kind}", pair.0, pair.1)]
    NotALattice { pair: (Elem, Elem), kind: BoundKind },

    #[error("order has no unique {0}")]
    NotBounded(Extremum),

    #[error("{lo} is not below {hi}")]
    NotComparable { lo: Elem, hi: Elem },

    #[error("{element} is not a coatom")]
    NotACoatom { element: Elem },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
