use std::collections::HashMap;

use serde::Serialize;

use super::{ProceduralError, ProceduralLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    pub fn oracle_name(self) -> &'static str {
        match self {
            Direction::Ascending => "upper_neighbors",
            Direction::Descending => "lower_neighbors",
        }
    }
}

/// A strictly monotone chain found by search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness<T> {
    pub direction: Direction,
    pub terms: Vec<T>,
}

impl<T> ChainWitness<T> {
    /// Number of strict steps.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Re-checks every step against the order oracle.
    pub fn verify<P: ProceduralLattice<Term = T>>(&self, p: &P) -> bool {
        self.terms.windows(2).all(|w| match self.direction {
            Direction::Ascending => p.lt(&w[0], &w[1]),
            Direction::Descending => p.lt(&w[1], &w[0]),
        })
    }
}

/// Result of a bounded search. `NotFound` is evidence, never proof: the
/// neighbor oracles may list only some covers, and the budget may run out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome<T> {
    Found(ChainWitness<T>),
    NotFound {
        /// Nodes entered before giving up.
        explored: usize,
        /// True if the budget stopped the search before the space was exhausted.
        budget_exhausted: bool,
    },
}

impl<T> WitnessOutcome<T> {
    pub fn witness(&self) -> Option<&ChainWitness<T>> {
        match self {
            WitnessOutcome::Found(w) => Some(w),
            WitnessOutcome::NotFound { .. } => None,
        }
    }
}

/// Searches for a chain of length `bound` starting at bottom (ascending) or
/// top (descending).
pub fn find_chain_witness<P: ProceduralLattice>(
    p: &P,
    direction: Direction,
    bound: usize,
    budget: usize,
) -> Result<WitnessOutcome<P::Term>, ProceduralError> {
    let start = match direction {
        Direction::Ascending => p.bottom(),
        Direction::Descending => p.top(),
    };
    find_chain_witness_from(p, start, direction, bound, budget)
}

/// Depth-first search along neighbor steps for a chain of `bound` strict
/// steps from `start`. Nodes that failed with some remaining depth are not
/// retried with the same or a larger requirement.
pub fn find_chain_witness_from<P: ProceduralLattice>(
    p: &P,
    start: P::Term,
    direction: Direction,
    bound: usize,
    budget: usize,
) -> Result<WitnessOutcome<P::Term>, ProceduralError> {
    if !p.has_neighbors(direction) {
        return Err(ProceduralError::OracleMissing {
            lattice: p.name().to_string(),
            oracle: direction.oracle_name(),
        });
    }
    let neighbors = |x: &P::Term| -> Result<Vec<P::Term>, ProceduralError> {
        let found = match direction {
            Direction::Ascending => p.upper_neighbors(x),
            Direction::Descending => p.lower_neighbors(x),
        };
        found.ok_or_else(|| ProceduralError::NeighborsUnsupported {
            lattice: p.name().to_string(),
            term: p.render(x),
        })
    };

    struct Frame<T> {
        term: T,
        next: Vec<T>,
        cursor: usize,
    }

    // smallest remaining requirement known to be unreachable from a term
    let mut failed: HashMap<P::Term, usize> = HashMap::new();
    let mut explored = 1usize;
    if bound == 0 {
        return Ok(WitnessOutcome::Found(ChainWitness {
            direction,
            terms: vec![start],
        }));
    }
    let first = neighbors(&start)?;
    let mut stack = vec![Frame {
        term: start,
        next: first,
        cursor: 0,
    }];

    while let Some(frame) = stack.last_mut() {
        if frame.cursor == frame.next.len() {
            let done = stack.pop().expect("non-empty");
            let remaining = bound - stack.len();
            let entry = failed.entry(done.term).or_insert(remaining);
            *entry = (*entry).min(remaining);
            continue;
        }
        let candidate = frame.next[frame.cursor].clone();
        frame.cursor += 1;
        let depth = stack.len();
        let remaining = bound - depth;
        if failed.get(&candidate).is_some_and(|&r| remaining >= r) {
            continue;
        }
        let parent = &stack[depth - 1].term;
        let strict = match direction {
            Direction::Ascending => p.lt(parent, &candidate),
            Direction::Descending => p.lt(&candidate, parent),
        };
        if !strict {
            return Err(ProceduralError::OracleInconsistent {
                lattice: p.name().to_string(),
                at: crate::ordinal::OrdinalIndex::finite(depth as u64),
                detail: format!(
                    "neighbor {} of {} is not strictly {}",
                    p.render(&candidate),
                    p.render(parent),
                    match direction {
                        Direction::Ascending => "above",
                        Direction::Descending => "below",
                    }
                ),
            });
        }
        if depth == bound {
            let mut terms: Vec<P::Term> = stack.into_iter().map(|f| f.term).collect();
            terms.push(candidate);
            return Ok(WitnessOutcome::Found(ChainWitness { direction, terms }));
        }
        if explored >= budget {
            return Ok(WitnessOutcome::NotFound {
                explored,
                budget_exhausted: true,
            });
        }
        explored += 1;
        let next = neighbors(&candidate)?;
        stack.push(Frame {
            term: candidate,
            next,
            cursor: 0,
        });
    }
    Ok(WitnessOutcome::NotFound {
        explored,
        budget_exhausted: false,
    })
}
