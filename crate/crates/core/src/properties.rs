//! Modularity and distributivity, each reported with a deterministic witness.
//!
//! Modularity is decided twice: directly from the modular law over all
//! triples, and by searching for a pentagon sublattice. The two routes share
//! nothing but the meet/join tables.

use rayon::prelude::*;
use serde::Serialize;

use crate::lattice::{Elem, FiniteLattice};

/// `(bottom, low, side, high, top)` of an N5 sublattice: `low < high` on one
/// side, `side` incomparable to both.
pub type Pentagon = (Elem, Elem, Elem, Elem, Elem);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularityReport {
    pub is_modular: bool,
    /// `(x, y, z)` with `x <= z` and `x ∨ (y ∧ z) != (x ∨ y) ∧ z`.
    pub violating_triple: Option<(Elem, Elem, Elem)>,
    pub pentagon: Option<Pentagon>,
}

/// Checks the modular law on every triple with `x <= z`, reporting the
/// lexicographically first failure.
pub fn check_modular_triples(l: &FiniteLattice) -> ModularityReport {
    let triple = first_modular_violation(l);
    ModularityReport {
        is_modular: triple.is_none(),
        violating_triple: triple,
        pentagon: triple.and_then(|_| find_pentagon(l)),
    }
}

pub fn is_modular(l: &FiniteLattice) -> bool {
    first_modular_violation(l).is_none()
}

pub fn first_modular_violation(l: &FiniteLattice) -> Option<(Elem, Elem, Elem)> {
    let n = l.len();
    let scan = |x: Elem| {
        for y in 0..n {
            let xy = l.join(x, y);
            for z in l.up_set(x).ones() {
                if l.join(x, l.meet(y, z)) != l.meet(xy, z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    };
    if n < 64 {
        (0..n).find_map(scan)
    } else {
        (0..n).into_par_iter().find_map_first(scan)
    }
}

/// Checks the modular law for a single triple (any order relation between
/// `x` and `z`; non-comparable triples hold vacuously).
pub fn modular_law_holds(l: &FiniteLattice, (x, y, z): (Elem, Elem, Elem)) -> bool {
    !l.leq(x, z) || l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z)
}

/// Searches for an N5 sublattice; returns the lexicographically least one.
///
/// A pair `low < high` together with `side` satisfying `low ∧ side =
/// high ∧ side` and `low ∨ side = high ∨ side` always spans a pentagon.
pub fn find_pentagon(l: &FiniteLattice) -> Option<Pentagon> {
    let n = l.len();
    let mut best: Option<Pentagon> = None;
    for low in 0..n {
        for high in l.up_set(low).ones().filter(|&h| h != low) {
            for side in 0..n {
                let bottom = l.meet(low, side);
                let top = l.join(low, side);
                if bottom == l.meet(high, side) && top == l.join(high, side) {
                    let candidate = (bottom, low, side, high, top);
                    if best.is_none_or(|b| candidate < b) {
                        best = Some(candidate);
                    }
                }
            }
        }
    }
    best
}

/// True when `p` is a genuine pentagon in `l`. Checkable in constant time.
pub fn is_pentagon(l: &FiniteLattice, (bottom, low, side, high, top): Pentagon) -> bool {
    l.lt(low, high)
        && l.meet(low, side) == bottom
        && l.meet(high, side) == bottom
        && l.join(low, side) == top
        && l.join(high, side) == top
        && !l.comparable(side, low)
        && !l.comparable(side, high)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributivityReport {
    pub is_distributive: bool,
    /// `(x, y, z)` with `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
    pub violating_triple: Option<(Elem, Elem, Elem)>,
}

pub fn check_distributive(l: &FiniteLattice) -> DistributivityReport {
    let n = l.len();
    let triple = (0..n).find_map(|x| {
        (0..n).find_map(|y| {
            (0..n).find_map(|z| {
                let lhs = l.meet(x, l.join(y, z));
                let rhs = l.join(l.meet(x, y), l.meet(x, z));
                (lhs != rhs).then_some((x, y, z))
            })
        })
    });
    DistributivityReport {
        is_distributive: triple.is_none(),
        violating_triple: triple,
    }
}

pub fn is_distributive(l: &FiniteLattice) -> bool {
    check_distributive(l).is_distributive
}
