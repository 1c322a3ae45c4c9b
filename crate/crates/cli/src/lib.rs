//! Command-line front end: the lattice text format, subcommands, and JSON
//! reports.
//!
//! Every invocation produces one report document on standard output. With
//! `--human` the same report is rendered as indented text. Errors are
//! reports too, with a machine-readable `code`.

pub mod document;
mod human;
mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use loewy_core::enumeration::{self, CorpusFilter, CorpusSpec, DEFAULT_MAX_N};
use loewy_core::procedural::{
    divisibility_lattice, find_chain_witness, germ_model_chain, omega_plus_one_chain, transfinite_radical_series,
    Direction, ProceduralLattice, SeriesConfig, SeriesStatus,
};
use loewy_core::{instances, FiniteLattice, Law, OrdinalIndex, RunMode};

pub use document::{parse, parse_many, print_many, DocumentError, LatticeDocument, Span};
pub use report::{LawsReport, PropsReport, SeriesReport};

pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const VALIDATION: i32 = 3;
    pub const LAW_VIOLATION: i32 = 4;
    pub const LIMIT: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "loewy", version, about = "Radicals, socles and Loewy series of lattices")]
pub struct Cli {
    /// Render reports as indented text instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and build every record in FILE.
    Validate { file: PathBuf },
    /// Modularity (triple law and pentagon search) and distributivity.
    Props { file: PathBuf },
    /// Radical, socle, Loewy series and the radical-free predicates.
    Series { file: PathBuf },
    /// Print a built-in finite lattice in the text format.
    Instance {
        #[command(subcommand)]
        instance: Instance,
    },
    /// Radical series or chain witnesses on an infinite lattice.
    Procedural(ProceduralArgs),
    /// All lattices with exactly N elements, up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        filter: CorpusFilter,
        /// Report only the number of lattices.
        #[arg(long)]
        count_only: bool,
        /// Largest N accepted.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        size_cap: usize,
    },
    /// Check the laws over every lattice with at most N elements.
    Laws {
        #[arg(long)]
        n: usize,
        /// Run a single law.
        #[arg(long, value_parser = parse_law)]
        law: Option<Law>,
        /// Run the modularity-dependent laws on non-modular lattices instead.
        #[arg(long)]
        expect_violations: bool,
        /// Violations listed per law; the total is always reported.
        #[arg(long, default_value_t = 10)]
        show: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        size_cap: usize,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Instance {
    /// Chain with K elements.
    Chain { k: usize },
    /// Boolean lattice of subsets of a K-set.
    Boolean { k: usize },
    /// Bottom, K pairwise incomparable atoms, top.
    M { k: usize },
    /// The pentagon.
    N5,
    /// Divisors of N under divisibility.
    Divisors { n: u64 },
    /// Subgroups of Z_{o1} × ... × Z_{or}.
    Subgroups {
        #[arg(required = true)]
        orders: Vec<u64>,
    },
    /// Ideals of Z_N.
    Ideals { n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProceduralName {
    #[value(name = "omega_plus_one_chain")]
    OmegaPlusOneChain,
    #[value(name = "divisibility")]
    Divisibility,
    #[value(name = "germ_model")]
    GermModel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessDirection {
    Asc,
    Desc,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["series", "witness"])))]
pub struct ProceduralArgs {
    pub name: ProceduralName,
    /// Run the Loewy radical series.
    #[arg(long)]
    pub series: bool,
    /// Largest ordinal index computed, e.g. `ω·2` or `w*3+5`.
    #[arg(long, requires = "series")]
    pub cap: Option<OrdinalIndex>,
    /// Successor steps per ω-block before the limit term.
    #[arg(long, requires = "series")]
    pub block_len: Option<u64>,
    /// Search for a chain in this direction.
    #[arg(long, value_enum, requires = "bound")]
    pub witness: Option<WitnessDirection>,
    /// Number of strict steps wanted.
    #[arg(long, requires = "witness")]
    pub bound: Option<usize>,
    /// Nodes the search may enter.
    #[arg(long, default_value_t = 1_000_000, requires = "witness")]
    pub budget: usize,
}

fn parse_law(s: &str) -> Result<Law, String> {
    Law::from_id(s).ok_or_else(|| {
        let ids: Vec<&str> = Law::ALL.iter().map(|l| l.id()).collect();
        format!("unknown law {s:?}; expected one of {}", ids.join(", "))
    })
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
}

#[derive(Debug, Clone)]
struct Failure {
    report: ErrorReport,
    exit: i32,
}

impl Failure {
    fn new(code: &str, message: impl Into<String>, exit: i32) -> Self {
        Failure {
            report: ErrorReport {
                code: code.to_string(),
                message: message.into(),
                file: None,
                line: None,
                col: None,
            },
            exit,
        }
    }

    fn document(path: &Path, e: &DocumentError) -> Self {
        let span = e.span();
        let exit = if e.is_parse_error() { exit::PARSE } else { exit::VALIDATION };
        let mut f = Failure::new(e.code(), e.message(), exit);
        f.report.file = Some(path.display().to_string());
        f.report.line = Some(span.line);
        f.report.col = Some(span.col);
        f
    }
}

impl From<loewy_core::Error> for Failure {
    fn from(e: loewy_core::Error) -> Self {
        match e {
            loewy_core::Error::SizeLimit { .. } => Failure::new("size_limit", e.to_string(), exit::LIMIT),
            other => Failure::new("invalid_argument", other.to_string(), exit::VALIDATION),
        }
    }
}

impl From<loewy_core::ProceduralError> for Failure {
    fn from(e: loewy_core::ProceduralError) -> Self {
        use loewy_core::ProceduralError as P;
        let code = match e {
            P::OracleUnsupported { .. } => "oracle_unsupported",
            P::OracleMissing { .. } => "oracle_missing",
            P::NeighborsUnsupported { .. } => "neighbors_unsupported",
            P::LimitUnsupported { .. } => "limit_unsupported",
            P::OracleInconsistent { .. } => "oracle_inconsistent",
        };
        Failure::new(code, e.to_string(), exit::VALIDATION)
    }
}

/// What a command printed and how it should exit, before rendering.
enum Output {
    Report(serde_json::Value, i32),
    Text(String),
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    match execute(&cli.command) {
        Ok(Output::Report(value, code)) => Outcome {
            stdout: render(&value, cli.human),
            stderr: String::new(),
            code,
        },
        Ok(Output::Text(text)) => Outcome {
            stdout: text,
            stderr: String::new(),
            code: exit::OK,
        },
        Err(failure) => {
            let value = serde_json::json!({ "error": failure.report });
            if cli.human {
                Outcome {
                    stdout: String::new(),
                    stderr: format!("error[{}]: {}\n", failure.report.code, failure.report.message),
                    code: failure.exit,
                }
            } else {
                Outcome {
                    stdout: render(&value, false),
                    stderr: String::new(),
                    code: failure.exit,
                }
            }
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}

fn render(value: &serde_json::Value, human: bool) -> String {
    if human {
        human::render(value)
    } else {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn to_value<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("reports serialize")
}

/// One value per record; a bare object when the file holds a single record.
fn per_record(values: Vec<serde_json::Value>) -> serde_json::Value {
    if values.len() == 1 {
        values.into_iter().next().expect("one value")
    } else {
        serde_json::Value::Array(values)
    }
}

fn load(path: &Path) -> Result<Vec<(LatticeDocument, FiniteLattice)>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let mut f = Failure::new("io_error", format!("cannot read {}: {e}", path.display()), exit::PARSE);
        f.report.file = Some(path.display().to_string());
        f
    })?;
    let docs = parse_many(&text).map_err(|e| Failure::document(path, &e))?;
    docs.into_iter()
        .map(|doc| {
            let lattice = doc.to_lattice().map_err(|e| Failure::document(path, &e))?;
            Ok((doc, lattice))
        })
        .collect()
}

fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Validate { file } => {
            let values = load(file)?
                .iter()
                .map(|(doc, l)| to_value(&report::validate(doc, l)))
                .collect();
            Ok(Output::Report(per_record(values), exit::OK))
        }
        Command::Props { file } => {
            let values = load(file)?
                .iter()
                .map(|(doc, l)| to_value(&report::props(&doc.name, l)))
                .collect();
            Ok(Output::Report(per_record(values), exit::OK))
        }
        Command::Series { file } => {
            let values = load(file)?
                .iter()
                .map(|(doc, l)| to_value(&report::series(&doc.name, l)))
                .collect();
            Ok(Output::Report(per_record(values), exit::OK))
        }
        Command::Instance { instance } => {
            let (name, lattice) = build_instance(instance)?;
            Ok(Output::Text(LatticeDocument::from_lattice(&name, &lattice).to_string()))
        }
        Command::Procedural(args) => match args.name {
            ProceduralName::OmegaPlusOneChain => procedural(&omega_plus_one_chain(), args),
            ProceduralName::Divisibility => procedural(&divisibility_lattice(), args),
            ProceduralName::GermModel => procedural(&germ_model_chain(), args),
        },
        Command::Enumerate {
            n,
            filter,
            count_only,
            size_cap,
        } => {
            let lattices: Vec<FiniteLattice> = enumeration::enumerate_lattices_with_cap(*n, *size_cap)?
                .filter(|l| filter.accepts(l))
                .collect();
            if *count_only {
                let value = serde_json::json!({
                    "command": "enumerate",
                    "n": n,
                    "filter": filter,
                    "count": lattices.len(),
                });
                return Ok(Output::Report(value, exit::OK));
            }
            let docs: Vec<LatticeDocument> = lattices
                .iter()
                .enumerate()
                .map(|(i, l)| LatticeDocument::from_lattice(&format!("L{n}_{i}"), l))
                .collect();
            Ok(Output::Text(print_many(&docs)))
        }
        Command::Laws {
            n,
            law,
            expect_violations,
            show,
            size_cap,
        } => {
            let mut spec = CorpusSpec::new(*n, CorpusFilter::All);
            spec.size_cap = *size_cap;
            let corpus: Vec<FiniteLattice> = enumeration::enumerate_filtered(spec)?.collect();
            let mode = if *expect_violations {
                RunMode::ExpectViolation
            } else {
                RunMode::InContract
            };
            let laws: Vec<Law> = match law {
                Some(l) => vec![*l],
                None => Law::ALL.to_vec(),
            };
            let report = report::laws(&corpus, *n, mode, &laws, *show);
            let code = if report.violations == 0 {
                exit::OK
            } else {
                exit::LAW_VIOLATION
            };
            Ok(Output::Report(to_value(&report), code))
        }
    }
}

fn build_instance(instance: &Instance) -> Result<(String, FiniteLattice), Failure> {
    Ok(match instance {
        Instance::Chain { k } => (format!("chain{k}"), instances::chain(*k)?),
        Instance::Boolean { k } => (format!("boolean{k}"), instances::boolean(*k)?),
        Instance::M { k } => (format!("m{k}"), instances::diamond_m(*k)?),
        Instance::N5 => ("n5".to_string(), instances::pentagon()),
        Instance::Divisors { n } => (format!("divisors{n}"), instances::divisor_lattice(*n)?),
        Instance::Subgroups { orders } => {
            let parts: Vec<String> = orders.iter().map(|o| format!("Z{o}")).collect();
            (parts.join("x"), instances::subgroup_lattice_abelian(orders)?.lattice)
        }
        Instance::Ideals { n } => (format!("ideals_Z{n}"), instances::ideal_lattice_zn(*n)?.lattice),
    })
}

fn procedural<P: ProceduralLattice>(p: &P, args: &ProceduralArgs) -> Result<Output, Failure> {
    if args.series {
        let mut config = SeriesConfig::default();
        if let Some(cap) = args.cap {
            config.cap = cap;
        }
        if let Some(block_len) = args.block_len {
            if block_len == 0 {
                return Err(Failure::new("invalid_argument", "--block-len must be positive", exit::VALIDATION));
            }
            config.block_len = block_len;
        }
        let series = transfinite_radical_series(p, config)?;
        let capped = matches!(series.status, SeriesStatus::CapReached { .. });
        let value = to_value(&report::procedural_series(p, &series, config));
        Ok(Output::Report(value, if capped { exit::LIMIT } else { exit::OK }))
    } else {
        let direction = match args.witness.expect("clap enforces the mode group") {
            WitnessDirection::Asc => Direction::Ascending,
            WitnessDirection::Desc => Direction::Descending,
        };
        let bound = args.bound.expect("clap requires --bound with --witness");
        let outcome = find_chain_witness(p, direction, bound, args.budget)?;
        let value = to_value(&report::witness(p, direction, bound, args.budget, &outcome));
        Ok(Output::Report(value, exit::OK))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_law_is_rejected() {
        let out = run_args(["loewy", "laws", "--n", "3", "--law", "nope"]);
        assert_eq!(out.code, exit::PARSE);
        assert!(out.stderr.contains("unknown law"));
    }

    #[test]
    fn enumerate_size_cap() {
        let out = run_args(["loewy", "enumerate", "--n", "9", "--count-only"]);
        assert_eq!(out.code, exit::LIMIT);
        assert!(out.stdout.contains("\"size_limit\""));
    }

    #[test]
    fn enumerate_counts() {
        let out = run_args(["loewy", "enumerate", "--n", "6", "--count-only"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["count"], 15);
        let out = run_args(["loewy", "enumerate", "--n", "4"]);
        assert_eq!(parse_many(&out.stdout).unwrap().len(), 2);
    }

    #[test]
    fn procedural_needs_a_mode() {
        assert_eq!(run_args(["loewy", "procedural", "germ_model"]).code, exit::PARSE);
        assert_eq!(
            run_args(["loewy", "procedural", "germ_model", "--witness", "asc"]).code,
            exit::PARSE
        );
    }

    #[test]
    fn capped_series_exits_with_limit() {
        let out = run_args(["loewy", "procedural", "germ_model", "--series", "--cap", "20"]);
        assert_eq!(out.code, exit::LIMIT);
        assert!(out.stdout.contains("CapReached"));
    }

    #[test]
    fn instances_print_as_documents() {
        let out = run_args(["loewy", "instance", "n5"]);
        assert_eq!(out.stdout, "lattice n5\nelements 0 a b c 1\ncovers 0<a 0<b a<c b<1 c<1\n");
        let out = run_args(["loewy", "instance", "subgroups", "2", "2"]);
        let doc = parse(&out.stdout).unwrap();
        assert_eq!(doc.elements.len(), 5);
        let out = run_args(["loewy", "instance", "ideals", "12"]);
        assert_eq!(parse(&out.stdout).unwrap().elements.len(), 6);
    }
}
