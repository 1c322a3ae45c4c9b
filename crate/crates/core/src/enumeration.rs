//! All lattices with `n` elements, one per isomorphism class.
//!
//! Removing the top of a finite lattice leaves a finite meet-semilattice with
//! a bottom, and every such semilattice gains a top to become a lattice. The
//! generator grows those semilattices one element at a time: elements come
//! in order of height (longest chain from bottom), each new element is
//! described by its set of lower covers, and within a height level the
//! lower-cover masks are non-decreasing. Every prefix must already be a
//! meet-semilattice. What remains of the duplicate labelings is removed by
//! isomorphism tests, bucketed by invariant signature.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::isomorphism::{is_isomorphic, signature};
use crate::lattice::FiniteLattice;
use crate::properties::{is_distributive, is_modular};

/// Default largest size accepted by [`enumerate_lattices`].
pub const DEFAULT_MAX_N: usize = 8;

/// Hard limit from the 16-bit masks used during generation.
const MASK_BITS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusFilter {
    #[default]
    All,
    Modular,
    Distributive,
}

impl CorpusFilter {
    pub fn accepts(self, l: &FiniteLattice) -> bool {
        match self {
            CorpusFilter::All => true,
            CorpusFilter::Modular => is_modular(l),
            CorpusFilter::Distributive => is_distributive(l),
        }
    }
}

impl std::str::FromStr for CorpusFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "all" => Ok(CorpusFilter::All),
            "modular" => Ok(CorpusFilter::Modular),
            "distributive" => Ok(CorpusFilter::Distributive),
            other => Err(format!("unknown filter {other:?} (expected all, modular or distributive)")),
        }
    }
}

/// Every lattice with `1..=max_n` elements accepted by `filter`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub max_n: usize,
    pub filter: CorpusFilter,
    /// Largest size allowed; raise it deliberately to go past the default.
    pub size_cap: usize,
}

impl CorpusSpec {
    pub fn new(max_n: usize, filter: CorpusFilter) -> Self {
        CorpusSpec {
            max_n,
            filter,
            size_cap: DEFAULT_MAX_N,
        }
    }
}

/// Lattices with exactly `n` elements up to isomorphism, in canonical order
/// (lexicographic on the row-major cover matrix).
pub fn enumerate_lattices(n: usize) -> Result<std::vec::IntoIter<FiniteLattice>> {
    enumerate_lattices_with_cap(n, DEFAULT_MAX_N)
}

pub fn enumerate_lattices_with_cap(n: usize, cap: usize) -> Result<std::vec::IntoIter<FiniteLattice>> {
    if n == 0 {
        return Err(Error::InvalidArgument("lattices have at least one element".into()));
    }
    let limit = cap.min(MASK_BITS);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "lattice size for enumeration",
            actual: n,
            limit,
        });
    }
    Ok(generate(n).into_iter())
}

/// Sizes `1..=max_n` in increasing order, each in canonical order.
pub fn enumerate_filtered(spec: CorpusSpec) -> Result<impl Iterator<Item = FiniteLattice>> {
    let limit = spec.size_cap.min(MASK_BITS);
    if spec.max_n > limit {
        return Err(Error::SizeLimit {
            what: "lattice size for enumeration",
            actual: spec.max_n,
            limit,
        });
    }
    let filter = spec.filter;
    Ok((1..=spec.max_n)
        .flat_map(move |n| generate(n).into_iter())
        .filter(move |l| filter.accepts(l)))
}

/// Row-major cover matrix as bits; the canonical sort key.
pub fn cover_matrix_key(l: &FiniteLattice) -> Vec<bool> {
    let n = l.len();
    let mut key = vec![false; n * n];
    for x in l.elements() {
        for &y in l.upper_covers(x) {
            key[x * n + y] = true;
        }
    }
    key
}

fn generate(n: usize) -> Vec<FiniteLattice> {
    let mut raw = Vec::new();
    if n == 1 {
        raw.push(vec![1u16]);
    } else {
        let mut state = Partial {
            n,
            down: vec![1],
            lower: vec![0],
            height: vec![0],
        };
        state.grow(&mut raw);
    }

    let mut buckets: HashMap<Vec<crate::isomorphism::ElementInvariant>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<FiniteLattice> = Vec::new();
    for masks in raw {
        let down = masks
            .iter()
            .map(|&m| {
                let mut b = FixedBitSet::with_capacity(n);
                b.extend((0..n).filter(|&i| m >> i & 1 == 1));
                b
            })
            .collect();
        let l = FiniteLattice::from_down_sets(down).expect("generated orders are lattices");
        let bucket = buckets.entry(signature(&l)).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&reps[i], &l)) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(l);
    }
    reps.sort_by_cached_key(cover_matrix_key);
    reps
}

/// A meet-semilattice with bottom `0`, elements in generation order.
struct Partial {
    n: usize,
    down: Vec<u16>,
    lower: Vec<u16>,
    height: Vec<u8>,
}

impl Partial {
    fn grow(&mut self, out: &mut Vec<Vec<u16>>) {
        let k = self.down.len();
        if k == self.n - 1 {
            let all = ((1u32 << self.n) - 1) as u16;
            let mut finished = self.down.clone();
            finished.push(all);
            out.push(finished);
            return;
        }
        let (last_height, last_lower) = (self.height[k - 1], self.lower[k - 1]);
        for covers in 1u16..(1u16 << k) {
            if !self.is_antichain(covers) {
                continue;
            }
            let height = 1 + ones(covers).map(|a| self.height[a]).max().expect("nonempty");
            if k > 1 && (height < last_height || (height == last_height && covers < last_lower)) {
                continue;
            }
            let below = ones(covers).fold(1u16 << k, |acc, a| acc | self.down[a]);
            if !self.meets_exist(below) {
                continue;
            }
            self.down.push(below);
            self.lower.push(covers);
            self.height.push(height);
            self.grow(out);
            self.down.pop();
            self.lower.pop();
            self.height.pop();
        }
    }

    fn is_antichain(&self, set: u16) -> bool {
        ones(set).all(|a| self.down[a] & set == 1 << a)
    }

    /// Whether the new down-set meets every existing one in a principal
    /// down-set.
    fn meets_exist(&self, below: u16) -> bool {
        self.down.iter().all(|&d| {
            let common = d & below;
            self.down.contains(&common)
        })
    }
}

fn ones(mask: u16) -> impl Iterator<Item = usize> {
    (0..MASK_BITS).filter(move |&i| mask >> i & 1 == 1)
}
