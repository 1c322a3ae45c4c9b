use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CoatomsBelow, Direction, LimitMeet, ProceduralLattice};
use crate::lattice::{Elem, FiniteLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaTerm {
    Fin(u64),
    Inf,
}

/// The chain `0 < 1 < 2 < ... < ∞`: the subgroup lattice of the Prüfer
/// group `Z_{p^∞}`. No element covers into `∞`, so `[0, ∞]` has no coatoms.
#[derive(Debug, Clone, Copy, Default)]
pub struct OmegaPlusOneChain;

pub fn omega_plus_one_chain() -> OmegaPlusOneChain {
    OmegaPlusOneChain
}

impl ProceduralLattice for OmegaPlusOneChain {
    type Term = OmegaTerm;

    fn name(&self) -> &str {
        "omega_plus_one_chain"
    }

    fn description(&self) -> &str {
        "chain N ∪ {∞}, isomorphic to the subgroup lattice of Z_{p^∞}"
    }

    fn render(&self, t: &OmegaTerm) -> String {
        match t {
            OmegaTerm::Fin(n) => n.to_string(),
            OmegaTerm::Inf => "∞".to_string(),
        }
    }

    fn leq(&self, a: &OmegaTerm, b: &OmegaTerm) -> bool {
        a <= b
    }

    fn meet2(&self, a: &OmegaTerm, b: &OmegaTerm) -> OmegaTerm {
        *a.min(b)
    }

    fn join2(&self, a: &OmegaTerm, b: &OmegaTerm) -> OmegaTerm {
        *a.max(b)
    }

    fn top(&self) -> OmegaTerm {
        OmegaTerm::Inf
    }

    fn bottom(&self) -> OmegaTerm {
        OmegaTerm::Fin(0)
    }

    fn coatoms_below(&self, x: &OmegaTerm) -> CoatomsBelow<OmegaTerm> {
        match *x {
            OmegaTerm::Inf | OmegaTerm::Fin(0) => CoatomsBelow::Empty,
            OmegaTerm::Fin(n) => CoatomsBelow::Finite(vec![OmegaTerm::Fin(n - 1)]),
        }
    }

    fn limit_meet(&self, _descending: &[OmegaTerm]) -> LimitMeet<OmegaTerm> {
        // Descending sequences here are finite.
        LimitMeet::Continue
    }

    fn has_neighbors(&self, _direction: Direction) -> bool {
        true
    }

    fn upper_neighbors(&self, x: &OmegaTerm) -> Option<Vec<OmegaTerm>> {
        Some(match *x {
            OmegaTerm::Fin(n) => vec![OmegaTerm::Fin(n + 1)],
            OmegaTerm::Inf => vec![],
        })
    }

    fn lower_neighbors(&self, x: &OmegaTerm) -> Option<Vec<OmegaTerm>> {
        Some(match *x {
            OmegaTerm::Fin(0) | OmegaTerm::Inf => vec![],
            OmegaTerm::Fin(n) => vec![OmegaTerm::Fin(n - 1)],
        })
    }
}

/// Positive integers under divisibility with `0` as the top element (every
/// integer divides 0). Meet is gcd, join is lcm.
#[derive(Debug, Clone, Copy, Default)]
pub struct DivisibilityLattice;

pub fn divisibility_lattice() -> DivisibilityLattice {
    DivisibilityLattice
}

/// Trial division limit; any cofactor below its square is prime.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Primes offered as ascending steps `n -> p·n`. Only a sample of the
/// infinitely many covers.
const ASCENT_PRIMES: [u64; 4] = [2, 3, 5, 7];

impl DivisibilityLattice {
    /// Distinct prime factors, or `None` when a cofactor is too large to
    /// certify as prime by trial division.
    fn prime_factors(n: &BigUint) -> Option<Vec<BigUint>> {
        let mut rest = n.clone();
        let mut primes = Vec::new();
        let mut p = 2u64;
        while p <= TRIAL_LIMIT {
            let bp = BigUint::from(p);
            if &bp * &bp > rest {
                break;
            }
            if (&rest % &bp).is_zero() {
                primes.push(bp.clone());
                while (&rest % &bp).is_zero() {
                    rest /= &bp;
                }
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > BigUint::one() {
            let limit = BigUint::from(TRIAL_LIMIT);
            let cleared = BigUint::from(p);
            // every factor below `cleared` is removed, so rest < cleared² is prime
            if rest >= &cleared * &cleared && rest > &limit * &limit {
                return None;
            }
            primes.push(rest);
        }
        primes.sort();
        Some(primes)
    }
}

impl ProceduralLattice for DivisibilityLattice {
    type Term = BigUint;

    fn name(&self) -> &str {
        "divisibility"
    }

    fn description(&self) -> &str {
        "positive integers under divisibility, with 0 as the top"
    }

    fn render(&self, t: &BigUint) -> String {
        t.to_string()
    }

    fn leq(&self, a: &BigUint, b: &BigUint) -> bool {
        if a.is_zero() {
            b.is_zero()
        } else {
            (b % a).is_zero()
        }
    }

    fn meet2(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a.gcd(b)
    }

    fn join2(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a.is_zero() || b.is_zero() {
            BigUint::zero()
        } else {
            a.lcm(b)
        }
    }

    fn top(&self) -> BigUint {
        BigUint::zero()
    }

    fn bottom(&self) -> BigUint {
        BigUint::one()
    }

    fn coatoms_below(&self, x: &BigUint) -> CoatomsBelow<BigUint> {
        // Below 0 every n sits under 2n, so nothing is maximal.
        if x.is_zero() || x.is_one() {
            return CoatomsBelow::Empty;
        }
        match Self::prime_factors(x) {
            Some(primes) => CoatomsBelow::Finite(primes.iter().map(|p| x / p).collect()),
            None => CoatomsBelow::Unsupported,
        }
    }

    fn limit_meet(&self, _descending: &[BigUint]) -> LimitMeet<BigUint> {
        // (N, |) is Artinian; a descending run always ends.
        LimitMeet::Continue
    }

    fn has_neighbors(&self, _direction: Direction) -> bool {
        true
    }

    fn upper_neighbors(&self, x: &BigUint) -> Option<Vec<BigUint>> {
        if x.is_zero() {
            return Some(vec![]);
        }
        Some(ASCENT_PRIMES.iter().map(|&p| x * p).collect())
    }

    fn lower_neighbors(&self, x: &BigUint) -> Option<Vec<BigUint>> {
        match self.coatoms_below(x) {
            CoatomsBelow::Finite(v) => Some(v),
            CoatomsBelow::Empty => Some(vec![]),
            CoatomsBelow::Unsupported => None,
        }
    }
}

/// Terms of the germ model, ordered
/// `0 < H(1) < H(2) < ... < F < ... < x^2·R < x^1·R < R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GermTerm {
    Bottom,
    /// Ascending tail below `F`; `j >= 1`.
    H(u64),
    /// The flat ideal.
    F,
    /// `x^m·R`; `Pow(0)` is `R`.
    Pow(u64),
}

impl GermTerm {
    fn rank(self) -> (u8, u64) {
        match self {
            GermTerm::Bottom => (0, 0),
            GermTerm::H(j) => (1, j),
            GermTerm::F => (2, 0),
            GermTerm::Pow(m) => (3, u64::MAX - m),
        }
    }
}

impl PartialOrd for GermTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GermTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// A complete chain reproducing the radical series of the ideal lattice of
/// smooth germs at 0: `R > xR > x²R > ... > F`, where `F` (the flat germs)
/// has no lower cover. This is a model of that series, not the ideal
/// lattice itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct GermModelChain;

pub fn germ_model_chain() -> GermModelChain {
    GermModelChain
}

impl ProceduralLattice for GermModelChain {
    type Term = GermTerm;

    fn name(&self) -> &str {
        "germ_model"
    }

    fn description(&self) -> &str {
        "model: complete chain R > x^1·R > x^2·R > ... > F > ... > H(2) > H(1) > 0 \
         standing in for the ideal lattice of smooth germs at 0"
    }

    fn render(&self, t: &GermTerm) -> String {
        match *t {
            GermTerm::Bottom => "0".to_string(),
            GermTerm::H(j) => format!("H({j})"),
            GermTerm::F => "F".to_string(),
            GermTerm::Pow(0) => "R".to_string(),
            GermTerm::Pow(m) => format!("x^{m}·R"),
        }
    }

    fn leq(&self, a: &GermTerm, b: &GermTerm) -> bool {
        a <= b
    }

    fn meet2(&self, a: &GermTerm, b: &GermTerm) -> GermTerm {
        *a.min(b)
    }

    fn join2(&self, a: &GermTerm, b: &GermTerm) -> GermTerm {
        *a.max(b)
    }

    fn top(&self) -> GermTerm {
        GermTerm::Pow(0)
    }

    fn bottom(&self) -> GermTerm {
        GermTerm::Bottom
    }

    fn coatoms_below(&self, x: &GermTerm) -> CoatomsBelow<GermTerm> {
        match *x {
            GermTerm::Pow(m) => CoatomsBelow::Finite(vec![GermTerm::Pow(m + 1)]),
            // the H(j) climb towards F without reaching it
            GermTerm::F | GermTerm::Bottom => CoatomsBelow::Empty,
            GermTerm::H(1) => CoatomsBelow::Finite(vec![GermTerm::Bottom]),
            GermTerm::H(j) => CoatomsBelow::Finite(vec![GermTerm::H(j - 1)]),
        }
    }

    fn limit_meet(&self, descending: &[GermTerm]) -> LimitMeet<GermTerm> {
        match descending.last() {
            // inf_m x^m·R is the flat ideal
            Some(GermTerm::Pow(_)) => LimitMeet::Infimum(GermTerm::F),
            _ => LimitMeet::Unsupported,
        }
    }

    fn has_neighbors(&self, _direction: Direction) -> bool {
        true
    }

    fn upper_neighbors(&self, x: &GermTerm) -> Option<Vec<GermTerm>> {
        Some(match *x {
            GermTerm::Bottom => vec![GermTerm::H(1)],
            GermTerm::H(j) => vec![GermTerm::H(j + 1)],
            GermTerm::F | GermTerm::Pow(0) => vec![],
            GermTerm::Pow(m) => vec![GermTerm::Pow(m - 1)],
        })
    }

    fn lower_neighbors(&self, x: &GermTerm) -> Option<Vec<GermTerm>> {
        Some(match self.coatoms_below(x) {
            CoatomsBelow::Finite(v) => v,
            _ => vec![],
        })
    }
}

/// A finite lattice seen through the oracle interface. Terms are element
/// ids; rendering uses the lattice labels.
#[derive(Debug, Clone, Copy)]
pub struct FiniteWrap<'a> {
    lattice: &'a FiniteLattice,
}

impl<'a> FiniteWrap<'a> {
    pub fn new(lattice: &'a FiniteLattice) -> Self {
        FiniteWrap { lattice }
    }
}

impl ProceduralLattice for FiniteWrap<'_> {
    type Term = Elem;

    fn name(&self) -> &str {
        "finite"
    }

    fn render(&self, t: &Elem) -> String {
        self.lattice.label(*t).into_owned()
    }

    fn leq(&self, a: &Elem, b: &Elem) -> bool {
        self.lattice.leq(*a, *b)
    }

    fn meet2(&self, a: &Elem, b: &Elem) -> Elem {
        self.lattice.meet(*a, *b)
    }

    fn join2(&self, a: &Elem, b: &Elem) -> Elem {
        self.lattice.join(*a, *b)
    }

    fn top(&self) -> Elem {
        self.lattice.top()
    }

    fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    fn coatoms_below(&self, x: &Elem) -> CoatomsBelow<Elem> {
        let covers = self.lattice.lower_covers(*x);
        if covers.is_empty() {
            CoatomsBelow::Empty
        } else {
            CoatomsBelow::Finite(covers.to_vec())
        }
    }

    fn limit_meet(&self, _descending: &[Elem]) -> LimitMeet<Elem> {
        LimitMeet::Continue
    }

    fn has_neighbors(&self, _direction: Direction) -> bool {
        true
    }

    fn upper_neighbors(&self, x: &Elem) -> Option<Vec<Elem>> {
        Some(self.lattice.upper_covers(*x).to_vec())
    }

    fn lower_neighbors(&self, x: &Elem) -> Option<Vec<Elem>> {
        Some(self.lattice.lower_covers(*x).to_vec())
    }
}

/// Number of prime factors with multiplicity: the length of every maximal
/// chain in `[1, n]` under divisibility.
pub fn big_omega(n: u64) -> usize {
    let mut n = n;
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    count + usize::from(n > 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::procedural::{
        find_chain_witness, find_chain_witness_from, transfinite_radical_series, SeriesConfig, SeriesStatus,
        WitnessOutcome,
    };
    use crate::ordinal::OrdinalIndex;

    #[test]
    fn omega_chain_basics() {
        let p = omega_plus_one_chain();
        assert!(p.leq(&OmegaTerm::Fin(3), &OmegaTerm::Inf));
        assert_eq!(p.coatoms_below(&OmegaTerm::Inf), CoatomsBelow::Empty);
        assert_eq!(p.coatoms_below(&OmegaTerm::Fin(4)), CoatomsBelow::Finite(vec![OmegaTerm::Fin(3)]));
        let s = transfinite_radical_series(&p, SeriesConfig::default()).unwrap();
        assert_eq!(s.entries, vec![(OrdinalIndex::ZERO, OmegaTerm::Inf), (OrdinalIndex::finite(1), OmegaTerm::Inf)]);
        assert_eq!(
            s.status,
            SeriesStatus::StabilizedAt {
                ordinal: OrdinalIndex::ZERO,
                term: OmegaTerm::Inf
            }
        );
        assert_eq!(s.hyper_radical_nonzero, Some(true));
    }

    #[test]
    fn divisibility_basics() {
        let p = divisibility_lattice();
        let n = |v: u64| BigUint::from(v);
        assert_eq!(p.meet2(&n(4), &n(6)), n(2));
        assert_eq!(p.join2(&n(4), &n(6)), n(12));
        assert_eq!(p.join2(&n(4), &n(0)), n(0));
        assert_eq!(p.meet2(&n(4), &n(0)), n(4));
        assert!(p.leq(&n(3), &n(0)) && !p.leq(&n(0), &n(3)));
        assert_eq!(p.coatoms_below(&n(12)), CoatomsBelow::Finite(vec![n(6), n(4)]));
        assert_eq!(p.coatoms_below(&n(0)), CoatomsBelow::Empty);
        let s = transfinite_radical_series(&p, SeriesConfig::default()).unwrap();
        assert_eq!(s.hyper_radical(), Some(&n(0)));
        assert_eq!(s.hyper_radical_nonzero, Some(true));
    }

    #[test]
    fn divisibility_large_primes() {
        let p = divisibility_lattice();
        // 1_000_003 is prime
        let q = BigUint::from(1_000_003u64);
        assert_eq!(p.coatoms_below(&q), CoatomsBelow::Finite(vec![BigUint::one()]));
        let two_big = BigUint::from(2u64) * BigUint::from(1_000_000_007u64) * BigUint::from(1_000_000_009u64);
        assert_eq!(p.coatoms_below(&two_big), CoatomsBelow::Unsupported);
    }

    #[test]
    fn germ_ordering() {
        let p = germ_model_chain();
        assert_eq!(p.meet2(&GermTerm::Pow(2), &GermTerm::F), GermTerm::F);
        assert!(p.lt(&GermTerm::H(100), &GermTerm::F));
        assert!(p.lt(&GermTerm::F, &GermTerm::Pow(1_000_000)));
        assert!(p.lt(&GermTerm::Pow(3), &GermTerm::Pow(2)));
        assert_eq!(p.render(&GermTerm::Pow(3)), "x^3·R");
        assert_eq!(p.render(&GermTerm::Pow(0)), "R");
    }

    #[test]
    fn germ_series_stabilizes_at_omega() {
        let p = germ_model_chain();
        let s = transfinite_radical_series(&p, SeriesConfig::with_cap(OrdinalIndex::new(2, 0))).unwrap();
        for m in 0..=64 {
            assert_eq!(s.term_at(OrdinalIndex::finite(m)), Some(&GermTerm::Pow(m)));
        }
        assert_eq!(s.term_at(OrdinalIndex::OMEGA), Some(&GermTerm::F));
        assert_eq!(s.term_at(OrdinalIndex::new(1, 1)), Some(&GermTerm::F));
        assert_eq!(s.radical_length(), Some(OrdinalIndex::OMEGA));
        assert_eq!(s.hyper_radical_nonzero, Some(true));
    }

    #[test]
    fn cap_is_a_status() {
        let p = germ_model_chain();
        let s = transfinite_radical_series(&p, SeriesConfig::with_cap(OrdinalIndex::finite(5))).unwrap();
        assert_eq!(s.entries.len(), 6);
        assert_eq!(
            s.status,
            SeriesStatus::CapReached {
                cap: OrdinalIndex::finite(5)
            }
        );
        assert_eq!(s.hyper_radical_nonzero, None);
        // cap falls between the last finite block and ω
        let s = transfinite_radical_series(&p, SeriesConfig::with_cap(OrdinalIndex::finite(64))).unwrap();
        assert!(matches!(s.status, SeriesStatus::CapReached { .. }));
        assert_eq!(s.entries.last().unwrap().1, GermTerm::Pow(64));
    }

    #[test]
    fn witnesses() {
        let p = omega_plus_one_chain();
        let w = find_chain_witness(&p, Direction::Ascending, 1000, 10_000).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.length(), 1000);
        assert_eq!(w.terms.last(), Some(&OmegaTerm::Fin(1000)));
        assert!(w.verify(&p));
        let none = find_chain_witness(&p, Direction::Descending, 1000, 10_000).unwrap();
        assert!(none.witness().is_none());
        let short = find_chain_witness_from(&p, OmegaTerm::Fin(10), Direction::Descending, 10, 100).unwrap();
        assert_eq!(short.witness().unwrap().length(), 10);
        let short = find_chain_witness_from(&p, OmegaTerm::Fin(10), Direction::Descending, 11, 100).unwrap();
        assert!(short.witness().is_none());
    }

    #[test]
    fn divisibility_witnesses() {
        let p = divisibility_lattice();
        let w = find_chain_witness(&p, Direction::Ascending, 64, 1000).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.terms.last(), Some(&(BigUint::one() << 64u32)));
        assert!(w.verify(&p));
        let start = BigUint::from(720_720u64);
        let bound = big_omega(720_720);
        let hit = find_chain_witness_from(&p, start.clone(), Direction::Descending, bound, 100_000).unwrap();
        assert!(hit.witness().is_some());
        let miss = find_chain_witness_from(&p, start, Direction::Descending, bound + 1, 100_000).unwrap();
        assert!(matches!(
            miss,
            WitnessOutcome::NotFound {
                budget_exhausted: false,
                ..
            }
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = divisibility_lattice();
        let out = find_chain_witness_from(&p, BigUint::from(720_720u64), Direction::Descending, 64, 5).unwrap();
        assert!(matches!(
            out,
            WitnessOutcome::NotFound {
                budget_exhausted: true,
                ..
            }
        ));
    }

    #[test]
    fn big_omega_values() {
        assert_eq!(big_omega(1), 0);
        assert_eq!(big_omega(12), 3);
        assert_eq!(big_omega(1 << 19), 19);
        assert_eq!(big_omega(999_983), 1);
    }
}
