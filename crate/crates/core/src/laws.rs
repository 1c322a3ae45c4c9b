//! Finite-scale consequences of the chain-condition results, checked
//! exhaustively.
//!
//! Finite lattices satisfy both chain conditions, so the statements about
//! infinite chains are checked in the form their proofs use them:
//!
//! * pair rigidity: in a modular lattice, `x < y` cannot agree with a fixed
//!   `a` on both `a ∧ -` and `a ∨ -`;
//! * coatom compression: meeting a strictly ascending chain with a coatom
//!   stalls at most once;
//! * interval split: chain length is additive over `[0, a]` and `[a, 1]`;
//! * radical-free compression: when the coatoms meet to 0, successive
//!   compression by each coatom collapses any chain, one stall per coatom;
//! * every nonzero `[0, x]` has a coatom, so the hyper-radical is 0;
//! * socle-side quantities are the radical-side quantities of the dual.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, FiniteLattice};
use crate::procedural::{transfinite_radical_series, CoatomsBelow, ProceduralError, ProceduralLattice, SeriesConfig};
use crate::properties::is_modular;
use crate::series;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lattice: String,
    pub elements: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law_id: String,
    pub universe: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl LawReport {
    fn new(law: Law, universe: impl Into<String>) -> Self {
        LawReport {
            law_id: law.id().to_string(),
            universe: universe.into(),
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, l: &FiniteLattice, elements: &[Elem], detail: String) {
        self.violations.push(Violation {
            lattice: String::new(),
            elements: elements.iter().map(|&x| l.label(x).into_owned()).collect(),
            detail,
        });
    }

    fn absorb(&mut self, other: LawReport, lattice_name: &str) {
        self.checked += other.checked;
        self.violations.extend(other.violations.into_iter().map(|mut v| {
            v.lattice = lattice_name.to_string();
            v
        }));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    ModularPairRigidity,
    CoatomChainCompression,
    IntervalSplit,
    RadicalFreeArtinian,
    FiniteHyperRadicalFree,
    DualityBridge,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::ModularPairRigidity,
        Law::CoatomChainCompression,
        Law::IntervalSplit,
        Law::RadicalFreeArtinian,
        Law::FiniteHyperRadicalFree,
        Law::DualityBridge,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::ModularPairRigidity => "modular_pair_rigidity",
            Law::CoatomChainCompression => "coatom_chain_compression",
            Law::IntervalSplit => "interval_split",
            Law::RadicalFreeArtinian => "radical_free_artinian",
            Law::FiniteHyperRadicalFree => "finite_hyper_radical_free",
            Law::DualityBridge => "duality_bridge",
        }
    }

    pub fn from_id(id: &str) -> Option<Law> {
        Law::ALL.into_iter().find(|l| l.id() == id)
    }

    pub fn requires_modularity(self) -> bool {
        matches!(
            self,
            Law::ModularPairRigidity | Law::CoatomChainCompression | Law::IntervalSplit | Law::RadicalFreeArtinian
        )
    }

    /// Precondition beyond modularity.
    fn applies_to(self, l: &FiniteLattice) -> bool {
        match self {
            Law::RadicalFreeArtinian => series::is_radical_free(l),
            _ => true,
        }
    }

    /// Runs the law on one lattice. For laws with extra arguments every
    /// admissible argument is tried.
    pub fn check(self, l: &FiniteLattice) -> LawReport {
        match self {
            Law::ModularPairRigidity => law_modular_pair_rigidity(l),
            Law::CoatomChainCompression => {
                let mut report = LawReport::new(self, "lattice");
                for m in l.coatoms() {
                    for chain in l.maximal_chains() {
                        let r = law_coatom_chain_compression(l, m, &chain).expect("coatom and chain are valid");
                        report.absorb(r, "");
                    }
                }
                report
            }
            Law::IntervalSplit => {
                let mut report = LawReport::new(self, "lattice");
                for a in l.elements() {
                    report.absorb(law_interval_split(l, a), "");
                }
                report
            }
            Law::RadicalFreeArtinian => law_radical_free_artinian(l),
            Law::FiniteHyperRadicalFree => law_finite_hyper_radical_free(std::iter::once(l)),
            Law::DualityBridge => law_duality_bridge(l),
        }
    }
}

/// In-contract runs check lattices meeting the law's preconditions;
/// expect-violation runs check non-modular lattices, where modular-only laws
/// should fail somewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunMode {
    InContract,
    ExpectViolation,
}

/// Checks every pair `x < y` against every `a`.
pub fn law_modular_pair_rigidity(l: &FiniteLattice) -> LawReport {
    let mut report = LawReport::new(Law::ModularPairRigidity, "lattice");
    for a in l.elements() {
        for x in l.elements() {
            for y in l.up_set(x).ones().filter(|&y| y != x) {
                report.checked += 1;
                if l.meet(a, x) == l.meet(a, y) && l.join(a, x) == l.join(a, y) {
                    report.violation(
                        l,
                        &[a, x, y],
                        format!(
                            "a∧x = a∧y = {} and a∨x = a∨y = {} with x < y",
                            l.label(l.meet(a, x)),
                            l.label(l.join(a, x))
                        ),
                    );
                }
            }
        }
    }
    report
}

/// Counts stalls `m ∧ x_i = m ∧ x_{i+1}` along a strictly ascending chain;
/// more than one is a violation.
pub fn law_coatom_chain_compression(l: &FiniteLattice, m: Elem, chain: &[Elem]) -> Result<LawReport> {
    if !l.coatoms().contains(&m) {
        return Err(Error::NotACoatom { element: m });
    }
    if let Some(w) = chain.windows(2).find(|w| !l.lt(w[0], w[1])) {
        return Err(Error::InvalidArgument(format!(
            "chain is not strictly ascending at {} -> {}",
            w[0], w[1]
        )));
    }
    let mut report = LawReport::new(Law::CoatomChainCompression, "lattice");
    report.checked = 1;
    let stalls = stalls_under(l, m, chain);
    if stalls > 1 {
        let mut elements = vec![m];
        elements.extend_from_slice(chain);
        report.violation(l, &elements, format!("{stalls} stalls meeting the chain with coatom {}", l.label(m)));
    }
    Ok(report)
}

fn stalls_under(l: &FiniteLattice, m: Elem, chain: &[Elem]) -> usize {
    chain.windows(2).filter(|w| l.meet(m, w[0]) == l.meet(m, w[1])).count()
}

/// `len(L) = len([0, a]) + len([a, 1])`.
pub fn law_interval_split(l: &FiniteLattice, a: Elem) -> LawReport {
    let mut report = LawReport::new(Law::IntervalSplit, "lattice");
    report.checked = 1;
    let whole = l.longest_chain_length();
    let lower = l.interval(l.bottom(), a).expect("bottom <= a").lattice.longest_chain_length();
    let upper = l.interval(a, l.top()).expect("a <= top").lattice.longest_chain_length();
    if whole != lower + upper {
        report.violation(l, &[a], format!("{whole} != {lower} + {upper}"));
    }
    report
}

/// For a radical-free lattice: the coatoms meet to bottom, and compressing
/// each maximal chain by the coatoms one at a time stalls at most once per
/// coatom while collapsing the chain to a point.
pub fn law_radical_free_artinian(l: &FiniteLattice) -> LawReport {
    let mut report = LawReport::new(Law::RadicalFreeArtinian, "lattice");
    let coatoms = l.coatoms();
    report.checked += 1;
    if l.meet_of_set(coatoms.iter().copied()) != l.bottom() {
        report.violation(l, &coatoms, "coatoms do not meet to bottom".to_string());
        return report;
    }
    for chain in l.maximal_chains() {
        report.checked += 1;
        let mut current = chain.clone();
        let mut total = 0;
        for &m in &coatoms {
            let stalls = stalls_under(l, m, &current);
            if stalls > 1 {
                let mut elements = vec![m];
                elements.extend_from_slice(&chain);
                report.violation(l, &elements, format!("coatom {} stalls the chain {stalls} times", l.label(m)));
            }
            total += stalls;
            current = current.iter().map(|&x| l.meet(m, x)).collect();
            current.dedup();
        }
        if current != [l.bottom()] || total > coatoms.len() {
            report.violation(
                l,
                &chain,
                format!("chain of length {} needs {total} stalls over {} coatoms", chain.len() - 1, coatoms.len()),
            );
        }
    }
    report
}

/// Hyper-radical is bottom and every `[bottom, x]` with `x > bottom` has a
/// coatom.
pub fn law_finite_hyper_radical_free<'a>(corpus: impl IntoIterator<Item = &'a FiniteLattice>) -> LawReport {
    let mut report = LawReport::new(Law::FiniteHyperRadicalFree, "corpus");
    let corpus: Vec<&FiniteLattice> = corpus.into_iter().collect();
    let names = corpus_names(corpus.iter().copied());
    for (l, name) in corpus.into_iter().zip(names) {
        report.checked += 1;
        let h = series::hyper_radical(l);
        if h != l.bottom() {
            report.violation(l, &[h], "hyper-radical is not bottom".to_string());
            report.violations.last_mut().unwrap().lattice = name.clone();
        }
        for x in l.elements().filter(|&x| x != l.bottom()) {
            report.checked += 1;
            if l.lower_covers(x).is_empty() {
                report.violation(l, &[x], "interval [bottom, x] has no coatom".to_string());
                report.violations.last_mut().unwrap().lattice = name.clone();
            }
        }
    }
    report
}

/// The same check on an oracle lattice. A stabilized nonzero hyper-radical
/// whose interval is certified coatom-free is reported as a violation: it is
/// exactly the obstruction that cannot occur in a Noetherian lattice.
pub fn law_hyper_radical_free_procedural<P: ProceduralLattice>(
    p: &P,
    config: SeriesConfig,
) -> std::result::Result<LawReport, ProceduralError> {
    let mut report = LawReport::new(Law::FiniteHyperRadicalFree, p.name());
    let series = transfinite_radical_series(p, config)?;
    report.checked = 1;
    if let Some(h) = series.hyper_radical() {
        if *h != p.bottom() {
            let certified = p.coatoms_below(h) == CoatomsBelow::Empty;
            report.violations.push(Violation {
                lattice: p.name().to_string(),
                elements: vec![p.render(h)],
                detail: format!(
                    "hyper-radical {} is not bottom; [bottom, {}] has {}",
                    p.render(h),
                    p.render(h),
                    if certified { "no coatoms (certified)" } else { "coatoms" }
                ),
            });
        }
    }
    Ok(report)
}

/// Socle-side quantities of `L` equal radical-side quantities of `dual(L)`.
/// Ids are shared between a lattice and its dual, so the duality map is the
/// identity on ids.
pub fn law_duality_bridge(l: &FiniteLattice) -> LawReport {
    let mut report = LawReport::new(Law::DualityBridge, "lattice");
    let d = l.dual();
    let mut check = |ok: bool, elements: &[Elem], what: &str| {
        report.checked += 1;
        if !ok {
            report.violation(l, elements, what.to_string());
        }
    };
    let (soc, rad_d) = (series::socle(l), series::radical(&d));
    check(soc == rad_d, &[soc, rad_d], "socle(L) != radical(dual L)");
    let (rad, soc_d) = (series::radical(l), series::socle(&d));
    check(rad == soc_d, &[rad, soc_d], "radical(L) != socle(dual L)");
    let socle_series = series::loewy_socle_series(l);
    let radical_series_dual = series::loewy_radical_series(&d);
    check(
        socle_series.steps == radical_series_dual.steps,
        &socle_series.steps,
        "socle series != radical series of the dual",
    );
    let (hs, hr_d) = (socle_series.limit(), radical_series_dual.limit());
    check(hs == hr_d, &[hs, hr_d], "hyper-socle(L) != hyper-radical(dual L)");
    check(
        series::is_hyper_semiatomic(l) == series::is_hyper_radical_free(&d),
        &[],
        "hyper-semiatomic(L) != hyper-radical-free(dual L)",
    );
    report
}

/// `L{n}_{k}` for the `k`-th lattice with `n` elements, counting in corpus
/// order. Matches the names used when a corpus is exported.
pub fn corpus_names<'a>(corpus: impl IntoIterator<Item = &'a FiniteLattice>) -> Vec<String> {
    let mut seen: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    corpus
        .into_iter()
        .map(|l| {
            let k = seen.entry(l.len()).or_insert(0);
            *k += 1;
            format!("L{}_{}", l.len(), *k - 1)
        })
        .collect()
}

/// Runs `law` over a corpus. Lattices are named as in [`corpus_names`].
pub fn run_law(law: Law, corpus: &[FiniteLattice], mode: RunMode, universe: &str) -> LawReport {
    let names = corpus_names(corpus);
    let selected: Vec<(usize, &FiniteLattice)> = corpus
        .iter()
        .enumerate()
        .filter(|(_, l)| law.applies_to(l))
        .filter(|(_, l)| match (mode, law.requires_modularity()) {
            (RunMode::InContract, true) => is_modular(l),
            (RunMode::InContract, false) => true,
            (RunMode::ExpectViolation, true) => !is_modular(l),
            (RunMode::ExpectViolation, false) => false,
        })
        .collect();
    let partial: Vec<(usize, LawReport)> = selected.par_iter().map(|&(i, l)| (i, law.check(l))).collect();
    let mut report = LawReport::new(law, universe);
    for (i, r) in partial {
        report.absorb(r, &names[i]);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn pentagon_breaks_rigidity() {
        let n5 = instances::pentagon();
        let report = law_modular_pair_rigidity(&n5);
        assert!(report
            .violations
            .iter()
            .any(|v| v.elements == ["b", "a", "c"]));
    }

    #[test]
    fn modular_instances_are_rigid() {
        for l in [
            instances::boolean(3).unwrap(),
            instances::diamond_m(4).unwrap(),
            instances::chain(5).unwrap(),
            instances::divisor_lattice(60).unwrap(),
        ] {
            assert!(law_modular_pair_rigidity(&l).passed());
        }
    }

    #[test]
    fn compression_on_b3() {
        let b3 = instances::boolean(3).unwrap();
        for m in b3.coatoms() {
            for chain in b3.maximal_chains() {
                let r = law_coatom_chain_compression(&b3, m, &chain).unwrap();
                assert!(r.passed());
            }
        }
        let c = instances::chain(2).unwrap();
        let r = law_coatom_chain_compression(&c, 0, &[0, 1]).unwrap();
        assert_eq!(stalls_under(&c, 0, &[0, 1]), 1);
        assert!(r.passed());
    }

    #[test]
    fn compression_errors() {
        let b3 = instances::boolean(3).unwrap();
        assert_eq!(
            law_coatom_chain_compression(&b3, 1, &[0, 1]).unwrap_err(),
            Error::NotACoatom { element: 1 }
        );
        assert!(law_coatom_chain_compression(&b3, 3, &[1, 0]).is_err());
    }

    #[test]
    fn pentagon_compression_stalls_twice() {
        let n5 = instances::pentagon();
        // coatom b, chain 0 < a < c < 1
        let r = law_coatom_chain_compression(&n5, 2, &[0, 1, 3, 4]).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn interval_split_examples() {
        let b3 = instances::boolean(3).unwrap();
        assert!(law_interval_split(&b3, 1).passed());
        assert!(law_interval_split(&b3, b3.bottom()).passed());
        let n5 = instances::pentagon();
        let r = law_interval_split(&n5, 2);
        assert_eq!(r.violations[0].detail, "3 != 1 + 1");
    }

    #[test]
    fn radical_free_examples() {
        assert!(law_radical_free_artinian(&instances::boolean(2).unwrap()).passed());
        assert!(law_radical_free_artinian(&instances::diamond_m(3).unwrap()).passed());
        assert!(law_radical_free_artinian(&instances::chain(1).unwrap()).passed());
        // N5 is radical-free but its long chain outlasts its two coatoms
        assert!(!law_radical_free_artinian(&instances::pentagon()).passed());
    }

    #[test]
    fn hyper_radical_free_finite_and_procedural() {
        let corpus = [instances::chain(1).unwrap(), instances::pentagon(), instances::boolean(3).unwrap()];
        assert!(law_finite_hyper_radical_free(corpus.iter()).passed());
        let r = law_hyper_radical_free_procedural(&crate::procedural::omega_plus_one_chain(), SeriesConfig::default())
            .unwrap();
        assert_eq!(r.violations.len(), 1);
        assert!(r.violations[0].detail.contains("no coatoms (certified)"));
    }

    #[test]
    fn duality_bridge_on_named_lattices() {
        for l in [instances::pentagon(), instances::chain(4).unwrap(), instances::boolean(3).unwrap()] {
            assert!(law_duality_bridge(&l).passed());
        }
    }

    #[test]
    fn law_ids_round_trip() {
        for law in Law::ALL {
            assert_eq!(Law::from_id(law.id()), Some(law));
        }
        assert_eq!(Law::from_id("nope"), None);
    }
}
