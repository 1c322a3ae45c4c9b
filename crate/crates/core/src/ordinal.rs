//! Ordinals below `ω²`, written `ω·k + m`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrdinalIndex {
    /// Number of `ω` summands (`k`). Compared first.
    pub limit_steps: u64,
    /// Finite tail (`m`).
    pub finite_steps: u64,
}

impl OrdinalIndex {
    pub const ZERO: OrdinalIndex = OrdinalIndex::new(0, 0);
    pub const OMEGA: OrdinalIndex = OrdinalIndex::new(1, 0);

    pub const fn new(limit_steps: u64, finite_steps: u64) -> Self {
        OrdinalIndex {
            limit_steps,
            finite_steps,
        }
    }

    pub const fn finite(m: u64) -> Self {
        Self::new(0, m)
    }

    pub fn successor(self) -> Self {
        Self::new(self.limit_steps, self.finite_steps + 1)
    }

    /// The next limit ordinal `ω·(k+1)`.
    pub fn next_limit(self) -> Self {
        Self::new(self.limit_steps + 1, 0)
    }

    pub fn is_limit(self) -> bool {
        self.finite_steps == 0 && self.limit_steps > 0
    }

    pub fn is_finite(self) -> bool {
        self.limit_steps == 0
    }
}

impl fmt::Display for OrdinalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, m) = (self.limit_steps, self.finite_steps);
        match (k, m) {
            (0, m) => write!(f, "{m}"),
            (1, 0) => f.write_str("ω"),
            (1, m) => write!(f, "ω+{m}"),
            (k, 0) => write!(f, "ω·{k}"),
            (k, m) => write!(f, "ω·{k}+{m}"),
        }
    }
}

impl Serialize for OrdinalIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse ordinal {0:?}: expected m, ω, ω+m, ω·k or ω·k+m")]
pub struct ParseOrdinalError(String);

impl FromStr for OrdinalIndex {
    type Err = ParseOrdinalError;

    /// Accepts `ω` or `w` for omega and `·` or `*` for multiplication.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseOrdinalError(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let num = |t: &str| t.parse::<u64>().map_err(|_| err());
        let (head, tail) = match text.split_once('+') {
            Some((h, t)) => (h, Some(t)),
            None => (text.as_str(), None),
        };
        let omega = head.strip_prefix('ω').or_else(|| head.strip_prefix('w'));
        let Some(rest) = omega else {
            // purely finite; a '+' is not allowed here
            return match tail {
                None => Ok(OrdinalIndex::finite(num(head)?)),
                Some(_) => Err(err()),
            };
        };
        let k = if rest.is_empty() {
            1
        } else {
            let factor = rest.strip_prefix('·').or_else(|| rest.strip_prefix('*')).ok_or_else(err)?;
            num(factor)?
        };
        let m = match tail {
            Some(t) => num(t)?,
            None => 0,
        };
        if k == 0 {
            return Err(err());
        }
        Ok(OrdinalIndex::new(k, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rendering() {
        assert_eq!(OrdinalIndex::finite(7).to_string(), "7");
        assert_eq!(OrdinalIndex::OMEGA.to_string(), "ω");
        assert_eq!(OrdinalIndex::new(1, 1).to_string(), "ω+1");
        assert_eq!(OrdinalIndex::new(2, 0).to_string(), "ω·2");
        assert_eq!(OrdinalIndex::new(4, 64).to_string(), "ω·4+64");
    }

    #[test]
    fn parsing_variants() {
        assert_eq!("w*2".parse(), Ok(OrdinalIndex::new(2, 0)));
        assert_eq!("ω + 3".parse(), Ok(OrdinalIndex::new(1, 3)));
        for bad in ["", "ω·", "ω·0", "3+4", "x", "ω2"] {
            assert!(bad.parse::<OrdinalIndex>().is_err(), "{bad}");
        }
    }

    #[test]
    fn order_is_lexicographic() {
        assert!(OrdinalIndex::finite(1_000_000) < OrdinalIndex::OMEGA);
        assert!(OrdinalIndex::new(1, 5) < OrdinalIndex::new(2, 0));
        assert_eq!(OrdinalIndex::new(1, 4).next_limit(), OrdinalIndex::new(2, 0));
        assert!(OrdinalIndex::OMEGA.is_limit() && !OrdinalIndex::ZERO.is_limit());
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(k in 0u64..50, m in 0u64..1000) {
            let o = OrdinalIndex::new(k, m);
            prop_assert_eq!(o.to_string().parse::<OrdinalIndex>(), Ok(o));
        }
    }
}
