use serde::Serialize;

use loewy_core::procedural::{
    ChainWitness, CoatomsBelow, Direction, ProceduralLattice, RenderedSeries, SeriesConfig, TransfiniteSeries,
    WitnessOutcome,
};
use loewy_core::properties::{check_distributive, check_modular_triples, find_pentagon};
use loewy_core::series::{self, Predicates};
use loewy_core::{laws, Elem, FiniteLattice, Law, OrdinalIndex, RunMode, Violation};

use crate::document::LatticeDocument;

fn labels(l: &FiniteLattice, xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
    xs.into_iter().map(|x| l.label(x).into_owned()).collect()
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub command: &'static str,
    pub lattice: String,
    pub status: &'static str,
    pub elements: usize,
    pub covers: usize,
    pub bottom: String,
    pub top: String,
}

pub fn validate(doc: &LatticeDocument, l: &FiniteLattice) -> ValidateReport {
    ValidateReport {
        command: "validate",
        lattice: doc.name.clone(),
        status: "ok",
        elements: l.len(),
        covers: l.cover_relation().pairs.len(),
        bottom: l.label(l.bottom()).into_owned(),
        top: l.label(l.top()).into_owned(),
    }
}

#[derive(Debug, Serialize)]
pub struct PropsReport {
    pub command: &'static str,
    pub lattice: String,
    pub elements: usize,
    pub modular: bool,
    pub modular_by_triples: bool,
    pub modular_by_pentagon: bool,
    pub methods_agree: bool,
    /// `[x, y, z]` with `x <= z` failing the modular law.
    pub violating_triple: Option<Vec<String>>,
    /// `[bottom, low, side, high, top]`.
    pub pentagon: Option<Vec<String>>,
    pub distributive: bool,
    pub distributivity_witness: Option<Vec<String>>,
}

pub fn props(name: &str, l: &FiniteLattice) -> PropsReport {
    let triples = check_modular_triples(l);
    let pentagon = find_pentagon(l);
    let distributive = check_distributive(l);
    PropsReport {
        command: "props",
        lattice: name.to_string(),
        elements: l.len(),
        modular: triples.is_modular,
        modular_by_triples: triples.is_modular,
        modular_by_pentagon: pentagon.is_none(),
        methods_agree: triples.is_modular == pentagon.is_none(),
        violating_triple: triples.violating_triple.map(|(x, y, z)| labels(l, [x, y, z])),
        pentagon: pentagon.map(|(a, b, c, d, e)| labels(l, [a, b, c, d, e])),
        distributive: distributive.is_distributive,
        distributivity_witness: distributive.violating_triple.map(|(x, y, z)| labels(l, [x, y, z])),
    }
}

#[derive(Debug, Serialize)]
pub struct SeriesReport {
    pub command: &'static str,
    pub lattice: String,
    pub radical: String,
    pub socle: String,
    pub radical_series: Vec<String>,
    pub socle_series: Vec<String>,
    pub hyper_radical: String,
    pub hyper_socle: String,
    pub radical_length: usize,
    pub socle_length: usize,
    pub predicates: Predicates,
}

pub fn series(name: &str, l: &FiniteLattice) -> SeriesReport {
    let radical_series = series::loewy_radical_series(l);
    let socle_series = series::loewy_socle_series(l);
    SeriesReport {
        command: "series",
        lattice: name.to_string(),
        radical: l.label(series::radical(l)).into_owned(),
        socle: l.label(series::socle(l)).into_owned(),
        radical_series: labels(l, radical_series.steps.iter().copied()),
        socle_series: labels(l, socle_series.steps.iter().copied()),
        hyper_radical: l.label(radical_series.limit()).into_owned(),
        hyper_socle: l.label(socle_series.limit()).into_owned(),
        radical_length: radical_series.stabilized_at(),
        socle_length: socle_series.stabilized_at(),
        predicates: series::predicates(l),
    }
}

#[derive(Debug, Serialize)]
pub struct ProceduralSeriesReport {
    pub command: &'static str,
    pub description: String,
    pub cap: OrdinalIndex,
    pub block_len: u64,
    #[serde(flatten)]
    pub series: RenderedSeries,
    /// Coatoms of `[bottom, hyper_radical]`: `none (certified)`, a count, or
    /// `unknown`. Absent unless the series stabilized away from bottom.
    pub hyper_radical_coatoms: Option<String>,
}

pub fn procedural_series<P: ProceduralLattice>(
    p: &P,
    series: &TransfiniteSeries<P::Term>,
    config: SeriesConfig,
) -> ProceduralSeriesReport {
    let hyper_radical_coatoms = series
        .hyper_radical()
        .filter(|h| **h != p.bottom())
        .map(|h| match p.coatoms_below(h) {
            CoatomsBelow::Empty => "none (certified)".to_string(),
            CoatomsBelow::Finite(v) => v.len().to_string(),
            CoatomsBelow::Unsupported => "unknown".to_string(),
        });
    ProceduralSeriesReport {
        command: "procedural",
        description: p.description().to_string(),
        cap: config.cap,
        block_len: config.block_len,
        series: series.render(p),
        hyper_radical_coatoms,
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub command: &'static str,
    pub lattice: String,
    pub direction: Direction,
    pub bound: usize,
    pub budget: usize,
    pub found: bool,
    pub length: Option<usize>,
    pub chain: Option<Vec<String>>,
    pub explored: Option<usize>,
    pub budget_exhausted: bool,
    pub note: &'static str,
}

pub fn witness<P: ProceduralLattice>(
    p: &P,
    direction: Direction,
    bound: usize,
    budget: usize,
    outcome: &WitnessOutcome<P::Term>,
) -> WitnessReport {
    let render = |w: &ChainWitness<P::Term>| w.terms.iter().map(|t| p.render(t)).collect::<Vec<_>>();
    let (found, length, chain, explored, budget_exhausted) = match outcome {
        WitnessOutcome::Found(w) => (true, Some(w.length()), Some(render(w)), None, false),
        WitnessOutcome::NotFound {
            explored,
            budget_exhausted,
        } => (false, None, None, Some(*explored), *budget_exhausted),
    };
    WitnessReport {
        command: "procedural",
        lattice: p.name().to_string(),
        direction,
        bound,
        budget,
        found,
        length,
        chain,
        explored,
        budget_exhausted,
        note: if found {
            "chain verified step by step against the order oracle"
        } else {
            "no chain along the neighbor oracle; evidence, not proof"
        },
    }
}

#[derive(Debug, Serialize)]
pub struct LawSummary {
    pub law_id: String,
    pub universe: String,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Serialize)]
pub struct LawsReport {
    pub command: &'static str,
    pub max_n: usize,
    pub corpus_size: usize,
    pub mode: RunMode,
    pub reports: Vec<LawSummary>,
    pub violations: usize,
    pub passed: bool,
}

pub fn laws(corpus: &[FiniteLattice], max_n: usize, mode: RunMode, selected: &[Law], show: usize) -> LawsReport {
    let universe = match mode {
        RunMode::InContract => format!("lattices with at most {max_n} elements"),
        RunMode::ExpectViolation => format!("non-modular lattices with at most {max_n} elements"),
    };
    let reports: Vec<LawSummary> = selected
        .iter()
        .filter(|law| mode == RunMode::InContract || law.requires_modularity())
        .map(|&law| {
            let r = laws::run_law(law, corpus, mode, &universe);
            LawSummary {
                law_id: r.law_id,
                universe: r.universe,
                checked: r.checked,
                violation_count: r.violations.len(),
                violations: r.violations.into_iter().take(show).collect(),
            }
        })
        .collect();
    let violations = reports.iter().map(|r| r.violation_count).sum();
    LawsReport {
        command: "laws",
        max_n,
        corpus_size: corpus.len(),
        mode,
        passed: violations == 0,
        reports,
        violations,
    }
}
