//! Command-line front end: file formats, subcommands over the library, and
//! deterministic exit codes.
//!
//! Exit status: 0 when every requested predicate holds / a reduction exists /
//! the audit is clean or matches the expected-discrepancy list; 1 when a
//! predicate fails, no reduction exists or an audit deviates; 2 for usage
//! and input errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use narylab::audit::{assess, audit, TheoremId};
use narylab::properties::{self, Verdict};
use narylab::reduction::{ReduceStrategy, ReductionResult, Strategy};
use narylab::table::derive;
use narylab::{
    count, enumerate, extremal_witness, oracle_reduce, reduce_with, ClassSpec, Dedup, DeriveError,
    ExtremalMode, Limits,
};

use narylab_cli::document::{parse_table, TableDocument};
use narylab_cli::report::*;

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "narylab",
    version,
    about = "Property checks, binary reductions, enumeration and audits for n-ary operations on finite chains"
)]
struct Cli {
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (also env NARYLAB_THREADS); output is identical for
    /// any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cell budget m^n for search-backed commands.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Default)]
enum StrategyArg {
    #[default]
    Auto,
    Candidate,
    Neutral,
    Adjoin,
    Oracle,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Default)]
enum ModeArg {
    #[default]
    Either,
    Global,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DedupArg {
    Dual,
}

#[derive(Subcommand)]
enum Command {
    /// Decide properties of a table, with counterexample witnesses.
    Check {
        file: PathBuf,
        /// Subset of a,i,s,q,d,m,e; defaults to all.
        #[arg(long)]
        props: Option<String>,
    },
    /// Find a verified binary generator, or an irreducibility certificate.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        strategy: StrategyArg,
        /// Restrict acceptable generators to this class (flags a,i,s,q,d,m,e).
        #[arg(long = "g-class")]
        g_class: Option<String>,
    },
    /// Fold a binary table up to the given arity.
    Derive {
        file: PathBuf,
        #[arg(long)]
        arity: usize,
    },
    /// Lower the arity by one through argument doubling.
    ArityReduce { file: PathBuf },
    /// Search for an extremality certificate.
    Extremal {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
    },
    /// Enumerate all tables of a property class.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Property flags a,i,s,q,d,m,e; empty for unrestricted.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, value_enum)]
        dedup: Option<DedupArg>,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustive reduction oracle: every admissible binary generator.
    Oracle {
        file: PathBuf,
        #[arg(long = "g-class")]
        g_class: Option<String>,
    },
    /// Audit the theorem catalog over a full hypothesis class.
    Audit {
        /// One theorem id (see --all for the catalog).
        #[arg(long, conflicts_with = "all")]
        theorem: Option<String>,
        /// Audit the whole catalog.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            std::process::exit(code);
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(EXIT_USAGE);
        }
    }
}

fn resolve_limits(cli: &Cli) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var("NARYLAB_THREADS") {
            Ok(v) => Some(v.parse::<usize>().map_err(|_| {
                CliError(format!(
                    "NARYLAB_THREADS must be a positive integer, got {v:?}"
                ))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        if t == 0 {
            return Err(CliError("thread count must be a positive integer".into()));
        }
        limits = limits.with_threads(t);
    }
    if let Some(budget) = cli.budget {
        if budget == 0 {
            return Err(CliError("cell budget must be a positive integer".into()));
        }
        limits = limits.with_cell_budget(budget);
    }
    Ok(limits)
}

fn emit<T: Serialize + TextRender>(report: &T, format: Format, code: i32) -> (String, i32) {
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => report.text(),
    };
    (body, code)
}

fn load(file: &Path) -> Result<TableDocument, CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError(format!("cannot read {}: {e}", file.display())))?;
    Ok(parse_table(&text)?)
}

fn parse_class(flags: &Option<String>) -> Result<ClassSpec, CliError> {
    match flags {
        None => Ok(ClassSpec::any()),
        Some(s) => Ok(s.parse::<ClassSpec>()?),
    }
}

/// Predicates that read the chain order; meaningless on tables with
/// order-unplaced elements.
fn order_dependent(letter: char) -> bool {
    matches!(letter, 'd' | 'm')
}

fn dispatch(cli: &Cli) -> Result<(String, i32), CliError> {
    let limits = resolve_limits(cli)?;
    let format = cli.format;
    match &cli.command {
        Command::Check { file, props } => {
            let doc = load(file)?;
            let table = doc.to_op_table()?;
            let spec = match props {
                None => "a,i,s,q,d,m,e".parse::<ClassSpec>().unwrap(),
                Some(s) => s.parse::<ClassSpec>()?,
            };
            let requested: Vec<(char, &str)> = [
                (spec.associative, 'a', "associative"),
                (spec.idempotent, 'i', "idempotent"),
                (spec.symmetric, 's', "symmetric"),
                (spec.quasitrivial, 'q', "quasitrivial"),
                (spec.nondecreasing, 'd', "nondecreasing"),
                (spec.monotone, 'm', "monotone"),
                (spec.has_neutral, 'e', "has_neutral"),
            ]
            .into_iter()
            .filter_map(|(on, letter, name)| on.then_some((letter, name)))
            .collect();
            if doc.has_unplaced() {
                if let Some((letter, name)) = requested
                    .iter()
                    .find(|(letter, _)| order_dependent(*letter))
                {
                    return Err(CliError(format!(
                        "predicate {name} ({letter}) reads the chain order, but the table has \
                         order-unplaced elements; place them first"
                    )));
                }
            }
            let neutral_elements = properties::neutral_elements(&table);
            let mut ok = true;
            let results: Vec<PredicateResult> = requested
                .iter()
                .map(|&(letter, name)| {
                    let verdict = match letter {
                        'a' => properties::is_associative(&table),
                        'i' => properties::is_idempotent(&table),
                        's' => properties::is_symmetric(&table),
                        'q' => properties::is_quasitrivial(&table),
                        'd' => properties::is_nondecreasing(&table),
                        'm' => properties::is_monotone(&table),
                        'e' => {
                            if neutral_elements.is_empty() {
                                ok = false;
                                return PredicateResult {
                                    property: name.to_string(),
                                    holds: false,
                                    witness: None,
                                };
                            }
                            Verdict::Holds
                        }
                        _ => unreachable!(),
                    };
                    let holds = verdict.holds();
                    ok &= holds;
                    PredicateResult {
                        property: name.to_string(),
                        holds,
                        witness: verdict.witness().map(WitnessDoc::from),
                    }
                })
                .collect();
            let report = CheckReport {
                command: "check",
                table: doc,
                requested: requested.iter().map(|(_, name)| name.to_string()).collect(),
                results,
                neutral_elements,
                ok,
            };
            Ok(emit(&report, format, if ok { EXIT_OK } else { EXIT_FAIL }))
        }

        Command::Reduce {
            file,
            strategy,
            g_class,
        } => {
            let doc = load(file)?;
            let table = doc.to_op_table()?;
            let class = parse_class(g_class)?;
            let pick = match strategy {
                StrategyArg::Auto => ReduceStrategy::Auto,
                StrategyArg::Candidate => ReduceStrategy::Candidate,
                StrategyArg::Neutral => ReduceStrategy::Neutral,
                StrategyArg::Adjoin => ReduceStrategy::Adjoin,
                StrategyArg::Oracle => ReduceStrategy::Oracle,
            };
            let strategy_requested = match strategy {
                StrategyArg::Auto => "auto",
                StrategyArg::Candidate => "candidate",
                StrategyArg::Neutral => "neutral",
                StrategyArg::Adjoin => "adjoin",
                StrategyArg::Oracle => "oracle",
            };
            let outcome = reduce_with(&table, pick, &class, &limits)?;
            let mut report = ReduceReport {
                command: "reduce",
                table: doc,
                strategy_requested: strategy_requested.to_string(),
                g_class: class.to_string_flags(),
                outcome: "not_reduced",
                strategy: None,
                neutral_element: None,
                g: None,
                verified: None,
                extension: None,
                evidence: None,
                reason: None,
                ok: false,
            };
            let code = match outcome {
                ReductionResult::Reduced(r) => {
                    report.outcome = "reduced";
                    report.strategy = Some(match r.strategy {
                        Strategy::Candidate => "candidate",
                        Strategy::Neutral(_) => "neutral",
                        Strategy::Adjoin => "adjoin",
                        Strategy::Oracle => "oracle",
                    });
                    if let Strategy::Neutral(e) = r.strategy {
                        report.neutral_element = Some(e);
                    }
                    report.g = Some(TableDocument::from_table(&r.binary));
                    report.verified = Some(r.verified);
                    report.extension = r.extension.as_ref().map(|ext| {
                        TableDocument::from_table(&ext.table).with_unplaced(vec![ext.adjoined])
                    });
                    report.ok = true;
                    EXIT_OK
                }
                ReductionResult::Irreducible(ev) => {
                    report.outcome = "irreducible";
                    report.evidence = Some(EvidenceDoc::from(&ev));
                    EXIT_FAIL
                }
                ReductionResult::NotReduced { reason, .. } => {
                    report.outcome = "not_reduced";
                    report.reason = Some(reason);
                    EXIT_FAIL
                }
            };
            Ok(emit(&report, format, code))
        }

        Command::Derive { file, arity } => {
            let doc = load(file)?;
            let table = doc.to_op_table()?;
            let cells = narylab::table::cell_count(table.size(), *arity)
                .map_err(|e| CliError(e.to_string()))?;
            if cells > limits.cell_budget {
                return Err(CliError(format!(
                    "derived table would have {cells} cells, over the budget of {} cells",
                    limits.cell_budget
                )));
            }
            match derive(&table, *arity) {
                Ok(result) => {
                    let report = DeriveReport {
                        command: "derive",
                        input: doc,
                        arity: *arity,
                        result: Some(TableDocument::from_table(&result)),
                        witness: None,
                        ok: true,
                    };
                    Ok(emit(&report, format, EXIT_OK))
                }
                Err(DeriveError::NotAssociative(w)) => {
                    let report = DeriveReport {
                        command: "derive",
                        input: doc,
                        arity: *arity,
                        result: None,
                        witness: Some(WitnessDoc::from(&w)),
                        ok: false,
                    };
                    Ok(emit(&report, format, EXIT_FAIL))
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::ArityReduce { file } => {
            let doc = load(file)?;
            let table = doc.to_op_table()?;
            match narylab::arity_reduce(&table) {
                Ok(result) => {
                    let report = ArityReduceReport {
                        command: "arity-reduce",
                        input: doc,
                        outcome: "reduced",
                        result: Some(TableDocument::from_table(&result)),
                        mismatch: None,
                        ok: true,
                    };
                    Ok(emit(&report, format, EXIT_OK))
                }
                Err(narylab::reduction::ArityReduceError::Mismatch(m)) => {
                    let report = ArityReduceReport {
                        command: "arity-reduce",
                        input: doc,
                        outcome: "mismatch",
                        result: None,
                        mismatch: Some(DoublingDoc::from(&m)),
                        ok: false,
                    };
                    Ok(emit(&report, format, EXIT_FAIL))
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Extremal { file, mode } => {
            let doc = load(file)?;
            if doc.has_unplaced() {
                return Err(CliError(
                    "extremality reads the chain order, but the table has order-unplaced \
                     elements; place them first"
                        .into(),
                ));
            }
            let table = doc.to_op_table()?;
            let (mode_name, mode_value) = match mode {
                ModeArg::Either => ("either", ExtremalMode::Either),
                ModeArg::Global => ("global-minmax", ExtremalMode::GlobalMinMax),
            };
            let witness = extremal_witness(&table, mode_value);
            let ok = witness.is_some();
            let report = ExtremalReport {
                command: "extremal",
                table: doc,
                mode: mode_name.to_string(),
                outcome: if ok { "extremal" } else { "not-extremal" },
                witness: witness.map(|w| TableDocument::from_table(&w)),
                ok,
            };
            Ok(emit(&report, format, if ok { EXIT_OK } else { EXIT_FAIL }))
        }

        Command::Enumerate {
            m,
            n,
            class,
            dedup,
            count_only,
        } => {
            let spec = parse_class(class)?;
            let dedup_value = match dedup {
                Some(DedupArg::Dual) => Dedup::Dual,
                None => Dedup::None,
            };
            let (total, tables) = if *count_only {
                (count(*m, *n, &spec, &limits)?, None)
            } else {
                let tables = enumerate(*m, *n, &spec, dedup_value, &limits)?;
                (
                    tables.len() as u64,
                    Some(tables.iter().map(TableDocument::from_table).collect()),
                )
            };
            let report = EnumerateReport {
                command: "enumerate",
                m: *m,
                n: *n,
                class: spec.to_string_flags(),
                dedup: match dedup_value {
                    Dedup::None => "none",
                    Dedup::Dual => "dual",
                },
                count: total,
                tables,
                ok: true,
            };
            Ok(emit(&report, format, EXIT_OK))
        }

        Command::Oracle { file, g_class } => {
            let doc = load(file)?;
            let table = doc.to_op_table()?;
            let class = parse_class(g_class)?;
            let found = oracle_reduce(&table, &class, &limits)?;
            let ok = !found.tables.is_empty();
            let report = OracleReport {
                command: "oracle",
                table: doc,
                g_class: class.to_string_flags(),
                count: found.tables.len(),
                reductions: found.tables.iter().map(TableDocument::from_table).collect(),
                note: found.note,
                ok,
            };
            Ok(emit(&report, format, if ok { EXIT_OK } else { EXIT_FAIL }))
        }

        Command::Audit { theorem, all, m, n } => {
            let ids: Vec<TheoremId> = match (theorem, all) {
                (Some(code), false) => {
                    vec![TheoremId::parse(code).ok_or_else(|| {
                        CliError(format!(
                            "unknown theorem id {code:?}; known ids: {}",
                            TheoremId::ALL.map(|i| i.code()).join(", ")
                        ))
                    })?]
                }
                (None, true) => TheoremId::ALL.to_vec(),
                (None, false) => {
                    return Err(CliError("pass --theorem ID or --all".into()));
                }
                (Some(_), true) => unreachable!("clap conflicts_with"),
            };
            let mut reports = Vec::new();
            let mut ok = true;
            for id in ids {
                let r = audit(id, *m, *n, &limits)?;
                eprintln!(
                    "audit {} at ({m},{n}): {} instance(s) in {:.3}s",
                    id.code(),
                    r.instances,
                    r.runtime.as_secs_f64()
                );
                let assessment = assess(&r);
                let doc = TheoremReportDoc::build(&r, &assessment);
                ok &= doc.ok;
                reports.push(doc);
            }
            let report = AuditCmdReport {
                command: "audit",
                m: *m,
                n: *n,
                reports,
                ok,
            };
            Ok(emit(&report, format, if ok { EXIT_OK } else { EXIT_FAIL }))
        }
    }
}

/// Flag-letter form of a class, empty for unrestricted (the display form
/// says "unrestricted", which is wrong for machine fields).
trait ClassFlags {
    fn to_string_flags(&self) -> String;
}

impl ClassFlags for ClassSpec {
    fn to_string_flags(&self) -> String {
        if self.is_unrestricted() {
            String::new()
        } else {
            self.to_string()
        }
    }
}
