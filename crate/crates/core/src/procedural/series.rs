use serde::Serialize;

use super::{CoatomsBelow, LimitMeet, ProceduralError, ProceduralLattice};
use crate::ordinal::OrdinalIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesConfig {
    /// Largest ordinal index that may be computed.
    pub cap: OrdinalIndex,
    /// Successor steps materialized inside each `ω`-block before the limit
    /// term of the block is requested.
    pub block_len: u64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            cap: OrdinalIndex::new(4, 64),
            block_len: 64,
        }
    }
}

impl SeriesConfig {
    pub fn with_cap(cap: OrdinalIndex) -> Self {
        SeriesConfig {
            cap,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SeriesStatus<T> {
    /// `r_{σ+1} = r_σ = term`.
    StabilizedAt { ordinal: OrdinalIndex, term: T },
    /// The next index would exceed the cap.
    CapReached { cap: OrdinalIndex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransfiniteSeries<T> {
    /// `(σ, r_σ)`; ends with the repeated term when stabilized.
    pub entries: Vec<(OrdinalIndex, T)>,
    pub status: SeriesStatus<T>,
    /// `Some(r_∞ != bottom)` once stabilized.
    pub hyper_radical_nonzero: Option<bool>,
}

impl<T: Clone> TransfiniteSeries<T> {
    pub fn hyper_radical(&self) -> Option<&T> {
        match &self.status {
            SeriesStatus::StabilizedAt { term, .. } => Some(term),
            SeriesStatus::CapReached { .. } => None,
        }
    }

    /// Loewy radical length, once stabilized.
    pub fn radical_length(&self) -> Option<OrdinalIndex> {
        match &self.status {
            SeriesStatus::StabilizedAt { ordinal, .. } => Some(*ordinal),
            SeriesStatus::CapReached { .. } => None,
        }
    }

    /// `r_0, ..., r_k` without the repeated term, when the series stabilized
    /// at a finite index. Matches the finite series layout.
    pub fn finite_steps(&self) -> Option<Vec<T>> {
        let length = self.radical_length()?;
        if !length.is_finite() {
            return None;
        }
        Some(self.entries[..=length.finite_steps as usize].iter().map(|(_, t)| t.clone()).collect())
    }

    pub fn term_at(&self, ordinal: OrdinalIndex) -> Option<&T> {
        self.entries.iter().find(|(o, _)| *o == ordinal).map(|(_, t)| t)
    }
}

pub type RenderedEntry = (OrdinalIndex, String);

/// A series with terms replaced by their canonical serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenderedSeries {
    pub lattice: String,
    pub entries: Vec<RenderedEntry>,
    pub status: SeriesStatus<String>,
    pub radical_length: Option<OrdinalIndex>,
    pub hyper_radical: Option<String>,
    pub hyper_radical_nonzero: Option<bool>,
}

impl<T: Clone> TransfiniteSeries<T> {
    pub fn render<P: ProceduralLattice<Term = T>>(&self, p: &P) -> RenderedSeries {
        RenderedSeries {
            lattice: p.name().to_string(),
            entries: self.entries.iter().map(|(o, t)| (*o, p.render(t))).collect(),
            status: match &self.status {
                SeriesStatus::StabilizedAt { ordinal, term } => SeriesStatus::StabilizedAt {
                    ordinal: *ordinal,
                    term: p.render(term),
                },
                SeriesStatus::CapReached { cap } => SeriesStatus::CapReached { cap: *cap },
            },
            radical_length: self.radical_length(),
            hyper_radical: self.hyper_radical().map(|t| p.render(t)),
            hyper_radical_nonzero: self.hyper_radical_nonzero,
        }
    }
}

/// Runs the Loewy radical series `r_0 = top`, `r_{σ+1} = r([bottom, r_σ])`,
/// `r_λ = inf_{α<λ} r_α` until `r_{σ+1} = r_σ` or the cap.
///
/// A successor step meets the coatoms of `[bottom, r_σ]`; a certified-empty
/// coatom set leaves the term unchanged, which is exactly stabilization.
pub fn transfinite_radical_series<P: ProceduralLattice>(
    p: &P,
    config: SeriesConfig,
) -> Result<TransfiniteSeries<P::Term>, ProceduralError> {
    let mut entries = vec![(OrdinalIndex::ZERO, p.top())];
    let bottom = p.bottom();
    loop {
        let (sigma, current) = entries.last().cloned().expect("series is never empty");
        let next_index = sigma.successor();
        if next_index > config.cap {
            return Ok(TransfiniteSeries {
                entries,
                status: SeriesStatus::CapReached { cap: config.cap },
                hyper_radical_nonzero: None,
            });
        }
        let next = match p.coatoms_below(&current) {
            CoatomsBelow::Finite(coatoms) => coatoms.iter().fold(current.clone(), |acc, m| p.meet2(&acc, m)),
            CoatomsBelow::Empty => current.clone(),
            CoatomsBelow::Unsupported => {
                return Err(ProceduralError::OracleUnsupported {
                    lattice: p.name().to_string(),
                    term: p.render(&current),
                })
            }
        };
        if !p.leq(&next, &current) {
            return Err(ProceduralError::OracleInconsistent {
                lattice: p.name().to_string(),
                at: next_index,
                detail: format!("{} is not below {}", p.render(&next), p.render(&current)),
            });
        }
        entries.push((next_index, next.clone()));
        if next == current {
            return Ok(TransfiniteSeries {
                entries,
                status: SeriesStatus::StabilizedAt {
                    ordinal: sigma,
                    term: current.clone(),
                },
                hyper_radical_nonzero: Some(current != bottom),
            });
        }

        if next_index.finite_steps >= config.block_len {
            let limit_index = next_index.next_limit();
            if limit_index > config.cap {
                return Ok(TransfiniteSeries {
                    entries,
                    status: SeriesStatus::CapReached { cap: config.cap },
                    hyper_radical_nonzero: None,
                });
            }
            let prefix: Vec<P::Term> = entries.iter().map(|(_, t)| t.clone()).collect();
            let limit = match p.limit_meet(&prefix) {
                LimitMeet::Infimum(t) => t,
                LimitMeet::Continue => continue,
                LimitMeet::Unsupported => {
                    return Err(ProceduralError::LimitUnsupported {
                        lattice: p.name().to_string(),
                        at: limit_index,
                    })
                }
            };
            if !prefix.iter().all(|t| p.lt(&limit, t)) {
                return Err(ProceduralError::OracleInconsistent {
                    lattice: p.name().to_string(),
                    at: limit_index,
                    detail: format!("limit {} is not strictly below every earlier term", p.render(&limit)),
                });
            }
            entries.push((limit_index, limit));
        }
    }
}
