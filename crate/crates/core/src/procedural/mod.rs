//! Lattices given by oracles rather than tables, possibly infinite.
//!
//! An instance answers order, meet and join queries on its terms, names the
//! coatoms of `[bottom, x]` when it can, and supplies infima of the
//! descending sequences its radical series produces. That is enough to run
//! the radical series through limit ordinals and to search for long chains.

mod builtin;
mod series;
mod witness;

pub use builtin::{
    big_omega, divisibility_lattice, germ_model_chain, omega_plus_one_chain, DivisibilityLattice, FiniteWrap,
    GermModelChain, GermTerm, OmegaPlusOneChain, OmegaTerm,
};
pub use series::{
    transfinite_radical_series, RenderedEntry, RenderedSeries, SeriesConfig, SeriesStatus, TransfiniteSeries,
};
pub use witness::{find_chain_witness, find_chain_witness_from, ChainWitness, Direction, WitnessOutcome};

use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::ordinal::OrdinalIndex;

/// Answer of the coatom oracle for an interval `[bottom, x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoatomsBelow<T> {
    /// The complete set of coatoms of `[bottom, x]`.
    Finite(Vec<T>),
    /// Certified: `[bottom, x]` has no coatoms at all.
    Empty,
    /// The instance cannot decide at this term.
    Unsupported,
}

/// Answer of the limit oracle for a descending prefix `r_0 > r_1 > ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitMeet<T> {
    /// The infimum of the infinite sequence the prefix starts.
    Infimum(T),
    /// The sequence does not continue forever here; keep taking successors.
    Continue,
    Unsupported,
}

pub trait ProceduralLattice {
    type Term: Clone + Eq + Hash + fmt::Debug;

    fn name(&self) -> &str;

    /// One-line description shown in reports.
    fn description(&self) -> &str {
        ""
    }

    /// Canonical serialization; equal terms render equally and vice versa.
    fn render(&self, t: &Self::Term) -> String;

    fn leq(&self, a: &Self::Term, b: &Self::Term) -> bool;
    fn meet2(&self, a: &Self::Term, b: &Self::Term) -> Self::Term;
    fn join2(&self, a: &Self::Term, b: &Self::Term) -> Self::Term;
    fn top(&self) -> Self::Term;
    fn bottom(&self) -> Self::Term;

    fn coatoms_below(&self, x: &Self::Term) -> CoatomsBelow<Self::Term>;

    /// Infimum of the descending sequence whose computed prefix is
    /// `descending`.
    fn limit_meet(&self, descending: &[Self::Term]) -> LimitMeet<Self::Term>;

    /// Whether the neighbor oracle for `direction` exists at all.
    fn has_neighbors(&self, _direction: Direction) -> bool {
        false
    }

    /// Terms covering `x` (or a finite subset of them, for instances with
    /// infinitely many covers). `None` when unavailable at `x`.
    fn upper_neighbors(&self, _x: &Self::Term) -> Option<Vec<Self::Term>> {
        None
    }

    /// Terms covered by `x`. `None` when unavailable at `x`.
    fn lower_neighbors(&self, _x: &Self::Term) -> Option<Vec<Self::Term>> {
        None
    }

    fn lt(&self, a: &Self::Term, b: &Self::Term) -> bool {
        a != b && self.leq(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProceduralError {
    #[error("{lattice}: coatom oracle unsupported at {term}")]
    OracleUnsupported { lattice: String, term: String },

    #[error("{lattice}: no {oracle} oracle")]
    OracleMissing { lattice: String, oracle: &'static str },

    #[error("{lattice}: neighbor oracle unsupported at {term}")]
    NeighborsUnsupported { lattice: String, term: String },

    #[error("{lattice}: no infimum available for the sequence before {at}")]
    LimitUnsupported { lattice: String, at: OrdinalIndex },

    #[error("{lattice}: oracle inconsistency at {at}: {detail}")]
    OracleInconsistent {
        lattice: String,
        at: OrdinalIndex,
        detail: String,
    },
}

/// Checks sampled pairs: `meet2`/`join2` must be lower/upper bounds of both
/// arguments, and extremal among the sampled candidates. Returns one message
/// per failure.
pub fn meet_join_soundness<P: ProceduralLattice>(
    p: &P,
    pairs: &[(P::Term, P::Term)],
    candidates: &[P::Term],
) -> Vec<String> {
    let mut violations = Vec::new();
    for (a, b) in pairs {
        let m = p.meet2(a, b);
        let j = p.join2(a, b);
        let (ra, rb) = (p.render(a), p.render(b));
        if !(p.leq(&m, a) && p.leq(&m, b)) {
            violations.push(format!("meet({ra}, {rb}) = {} is not a lower bound", p.render(&m)));
        }
        if !(p.leq(a, &j) && p.leq(b, &j)) {
            violations.push(format!("join({ra}, {rb}) = {} is not an upper bound", p.render(&j)));
        }
        for c in candidates {
            if p.leq(c, a) && p.leq(c, b) && !p.leq(c, &m) {
                violations.push(format!("{} is a lower bound of ({ra}, {rb}) above the meet", p.render(c)));
            }
            if p.leq(a, c) && p.leq(b, c) && !p.leq(&j, c) {
                violations.push(format!("{} is an upper bound of ({ra}, {rb}) below the join", p.render(c)));
            }
        }
    }
    violations
}

/// Modular law on sampled triples; returns the failing ones rendered.
pub fn modular_spot_check<P: ProceduralLattice>(
    p: &P,
    triples: &[(P::Term, P::Term, P::Term)],
) -> Vec<String> {
    triples
        .iter()
        .filter(|(x, _, z)| p.leq(x, z))
        .filter(|(x, y, z)| p.join2(x, &p.meet2(y, z)) != p.meet2(&p.join2(x, y), z))
        .map(|(x, y, z)| format!("({}, {}, {})", p.render(x), p.render(y), p.render(z)))
        .collect()
}
