//! Radical and socle of finite lattices and their Loewy series.
//!
//! The radical of `L` is the meet of its coatoms; the radical series starts
//! at the top and repeatedly takes the radical of the interval below the
//! current term. On a finite lattice every nontrivial interval has a coatom,
//! so the series strictly decreases until it reaches the bottom. The socle
//! side is the order dual.

use serde::Serialize;

use crate::lattice::{Elem, FiniteLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Radical series: starts at top and moves down.
    Descending,
    /// Socle series: starts at bottom and moves up.
    Ascending,
}

/// A materialized Loewy series `r_0, r_1, ..., r_k` where `k` is the first
/// index with `r_{k+1} = r_k`. The repeated term is not stored again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalSeries {
    pub orientation: Orientation,
    pub steps: Vec<Elem>,
}

impl RadicalSeries {
    pub fn stabilized_at(&self) -> usize {
        self.steps.len() - 1
    }

    /// Final term: the hyper-radical (descending) or hyper-socle (ascending).
    pub fn limit(&self) -> Elem {
        *self.steps.last().expect("series always holds r_0")
    }
}

/// Radical of the interval `[bottom, x]`: the meet of the lower covers of
/// `x`, or `x` itself when there are none.
pub fn radical_below(l: &FiniteLattice, x: Elem) -> Elem {
    l.lower_covers(x).iter().fold(x, |acc, &m| l.meet(acc, m))
}

/// Socle of the interval `[x, top]`.
pub fn socle_above(l: &FiniteLattice, x: Elem) -> Elem {
    l.upper_covers(x).iter().fold(x, |acc, &a| l.join(acc, a))
}

pub fn radical(l: &FiniteLattice) -> Elem {
    l.meet_of_set(l.coatoms())
}

pub fn socle(l: &FiniteLattice) -> Elem {
    l.join_of_set(l.atoms())
}

fn iterate(start: Elem, step: impl Fn(Elem) -> Elem, orientation: Orientation) -> RadicalSeries {
    let mut steps = vec![start];
    let mut current = start;
    loop {
        let next = step(current);
        if next == current {
            return RadicalSeries { orientation, steps };
        }
        steps.push(next);
        current = next;
    }
}

pub fn loewy_radical_series(l: &FiniteLattice) -> RadicalSeries {
    iterate(l.top(), |x| radical_below(l, x), Orientation::Descending)
}

pub fn loewy_socle_series(l: &FiniteLattice) -> RadicalSeries {
    iterate(l.bottom(), |x| socle_above(l, x), Orientation::Ascending)
}

pub fn hyper_radical(l: &FiniteLattice) -> Elem {
    loewy_radical_series(l).limit()
}

pub fn hyper_socle(l: &FiniteLattice) -> Elem {
    loewy_socle_series(l).limit()
}

pub fn radical_length(l: &FiniteLattice) -> usize {
    loewy_radical_series(l).stabilized_at()
}

pub fn socle_length(l: &FiniteLattice) -> usize {
    loewy_socle_series(l).stabilized_at()
}

pub fn is_radical_free(l: &FiniteLattice) -> bool {
    radical(l) == l.bottom()
}

pub fn is_hyper_radical_free(l: &FiniteLattice) -> bool {
    hyper_radical(l) == l.bottom()
}

pub fn is_semiatomic(l: &FiniteLattice) -> bool {
    socle(l) == l.top()
}

pub fn is_hyper_semiatomic(l: &FiniteLattice) -> bool {
    hyper_socle(l) == l.top()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub radical_free: bool,
    pub hyper_radical_free: bool,
    pub semiatomic: bool,
    pub hyper_semiatomic: bool,
}

pub fn predicates(l: &FiniteLattice) -> Predicates {
    Predicates {
        radical_free: is_radical_free(l),
        hyper_radical_free: is_hyper_radical_free(l),
        semiatomic: is_semiatomic(l),
        hyper_semiatomic: is_hyper_semiatomic(l),
    }
}
