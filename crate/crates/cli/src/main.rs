//! Command-line front end: exact covering counts, classification sweeps,
//! class enumeration, map verification and dessin export.
//!
//! Exit codes: 0 success/match, 2 parse or flag error, 3 budget exhausted,
//! 4 not a Belyi map, 5 bad index.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use belyi_core::belyi::{parse_map, MapVerdict, VerifyError};
use belyi_core::classify::{classify_degree, report_json, report_tsv, sweep, ClassifyOptions};
use belyi_core::counting::count_report;
use belyi_core::dessin::Dessin;
use belyi_core::par::run_with_threads;
use belyi_core::scheme::Scheme;
use belyi_core::triples::{enumerate_classes, TripleError, DEFAULT_BUDGET, DEFAULT_ORACLE_BOUND};
use belyi_core::util::ratio_string;

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_NOT_BELYI: u8 = 4;
const EXIT_BAD_INDEX: u8 = 5;

#[derive(Parser)]
#[command(
    name = "belyi",
    about = "Exact enumeration, counting and verification of coverings branched over {0, 1, infinity}",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact triple counts and Eisenstein numbers for one scheme.
    Count {
        /// Ramification scheme, e.g. "[3][3][1,1,1]"
        #[arg(long)]
        scheme: String,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
    /// Classify all genus-0 schemes of a degree (or of every degree up to a
    /// bound): Eisenstein numbers, exceptionality verdicts, series tags.
    Classify {
        #[arg(long, conflicts_with = "max_degree")]
        degree: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Backtracking node budget per scheme (default also via BELYI_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads (0 = automatic)
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
        /// Record wall-clock time per row (makes output nondeterministic)
        #[arg(long)]
        timings: bool,
        /// Enumerate exact class counts for NotExceptional rows up to this degree
        #[arg(long, default_value_t = 10)]
        refine_limit: usize,
    },
    /// Enumerate all conjugacy classes of triples for one scheme.
    Oracle {
        #[arg(long)]
        scheme: String,
        /// Refuse degrees above this bound
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
    /// Verify that an explicit map is a Belyi (or Shabat) function.
    Verify {
        /// Map expression, e.g. "-1/64*(x-1)^3*(x-9)/x"
        #[arg(long, allow_hyphen_values = true)]
        map: String,
        /// Field discriminant d of Q(sqrt(d)); 1 means the rationals
        #[arg(long, default_value_t = 1)]
        field: i64,
        /// Expected scheme; exit 0 only when it matches up to fiber order
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
    /// Export one dessin of a scheme as a graph.
    Dessin {
        #[arg(long)]
        scheme: String,
        /// 1-based index into the transitive classes of the scheme
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
}

fn default_budget() -> u64 {
    std::env::var("BELYI_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn parse_scheme_or_exit(text: &str) -> Result<Scheme, ExitCode> {
    Scheme::parse(text).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}

fn run(command: Command) -> Result<(), ExitCode> {
    match command {
        Command::Count { scheme, format } => cmd_count(&scheme, format),
        Command::Classify {
            degree,
            max_degree,
            budget,
            threads,
            format,
            timings,
            refine_limit,
        } => {
            let opts = ClassifyOptions {
                budget: budget.unwrap_or_else(default_budget),
                refine_limit,
                timings,
            };
            cmd_classify(degree, max_degree, threads, format, &opts)
        }
        Command::Oracle {
            scheme,
            bound,
            budget,
            format,
        } => cmd_oracle(
            &scheme,
            bound,
            budget.unwrap_or_else(default_budget),
            format,
        ),
        Command::Verify {
            map,
            field,
            scheme,
            format,
        } => cmd_verify(&map, field, scheme.as_deref(), format),
        Command::Dessin {
            scheme,
            index,
            budget,
            format,
        } => cmd_dessin(
            &scheme,
            index,
            budget.unwrap_or_else(default_budget),
            format,
        ),
    }
}

fn cmd_count(scheme_text: &str, format: TableFormat) -> Result<(), ExitCode> {
    let scheme = parse_scheme_or_exit(scheme_text)?;
    let canonical = scheme.canonical();
    let report = count_report(&canonical);
    match format {
        TableFormat::Tsv => {
            println!("scheme\t{canonical}");
            println!("scheme_input\t{scheme}");
            println!("degree\t{}", canonical.degree());
            println!(
                "genus\t{}",
                canonical
                    .genus()
                    .map_or_else(|| "invalid".to_string(), |g| g.to_string())
            );
            println!("triple_count_all\t{}", report.triple_count_all);
            println!("eisenstein_all\t{}", ratio_string(&report.eisenstein_all));
            println!(
                "triple_count_transitive\t{}",
                report.triple_count_transitive
            );
            println!(
                "eisenstein_connected\t{}",
                ratio_string(&report.eisenstein_connected)
            );
        }
        TableFormat::Json => {
            let v = json!({
                "format_version": 1,
                "scheme": canonical.to_string(),
                "scheme_input": scheme.to_string(),
                "degree": canonical.degree(),
                "genus": canonical.genus(),
                "triple_count_all": report.triple_count_all.to_string(),
                "eisenstein_all": ratio_string(&report.eisenstein_all),
                "triple_count_transitive": report.triple_count_transitive.to_string(),
                "eisenstein_connected": ratio_string(&report.eisenstein_connected),
            });
            println!("{v}");
        }
    }
    Ok(())
}

fn cmd_classify(
    degree: Option<usize>,
    max_degree: Option<usize>,
    threads: usize,
    format: TableFormat,
    opts: &ClassifyOptions,
) -> Result<(), ExitCode> {
    let rows = match (degree, max_degree) {
        (Some(n), None) if n >= 1 => run_with_threads(threads, || classify_degree(n, opts)),
        (None, Some(m)) if m >= 1 => {
            let report = run_with_threads(threads, || sweep(m, opts));
            for s in &report.summary {
                eprintln!(
                    "degree {}: {} exceptional, {} not exceptional, {} unrealizable, {} unknown",
                    s.degree, s.exceptional, s.not_exceptional, s.unrealizable, s.unknown
                );
            }
            report.rows
        }
        _ => {
            eprintln!("error: give exactly one of --degree N or --max-degree N (N >= 1)");
            return Err(ExitCode::from(EXIT_USAGE));
        }
    };
    match format {
        TableFormat::Tsv => print!("{}", report_tsv(&rows)),
        TableFormat::Json => println!("{}", report_json(&rows)),
    }
    let unknown = rows
        .iter()
        .filter(|r| matches!(r.verdict, belyi_core::triples::Verdict::Unknown { .. }))
        .count();
    if unknown > 0 {
        eprintln!("{unknown} scheme(s) undecided within the node budget");
    }
    Ok(())
}

fn cmd_oracle(
    scheme_text: &str,
    bound: usize,
    budget: u64,
    format: TableFormat,
) -> Result<(), ExitCode> {
    let scheme = parse_scheme_or_exit(scheme_text)?;
    if scheme.degree() > bound {
        eprintln!(
            "error: degree {} exceeds the oracle bound {bound}",
            scheme.degree()
        );
        return Err(ExitCode::from(EXIT_BUDGET));
    }
    let enumeration = match enumerate_classes(&scheme, budget) {
        Ok(e) => e,
        Err(TripleError::BudgetExceeded { nodes }) => {
            eprintln!("error: search budget exhausted after {nodes} nodes");
            return Err(ExitCode::from(EXIT_BUDGET));
        }
        Err(e) => {
            eprintln!("error: {e}");
            return Err(ExitCode::from(EXIT_USAGE));
        }
    };
    match format {
        TableFormat::Tsv => {
            for class in &enumeration.classes {
                let t = &class.representative;
                println!(
                    "g0={}\tg1={}\tginf={}\taut={}\ttransitive={}",
                    t.g0(),
                    t.g1(),
                    t.g_inf(),
                    class.aut_order,
                    class.transitive
                );
            }
        }
        TableFormat::Json => {
            let classes: Vec<serde_json::Value> = enumeration
                .classes
                .iter()
                .map(|class| {
                    let t = &class.representative;
                    json!({
                        "g0": t.g0().to_string(),
                        "g1": t.g1().to_string(),
                        "ginf": t.g_inf().to_string(),
                        "aut": class.aut_order,
                        "transitive": class.transitive,
                    })
                })
                .collect();
            let v = json!({
                "format_version": 1,
                "scheme": scheme.canonical().to_string(),
                "scheme_input": scheme.to_string(),
                "nodes": enumeration.nodes,
                "classes": classes,
            });
            println!("{v}");
        }
    }
    Ok(())
}

fn cmd_verify(
    map_text: &str,
    field: i64,
    expected: Option<&str>,
    format: TableFormat,
) -> Result<(), ExitCode> {
    let map = match parse_map(map_text, field) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(ExitCode::from(EXIT_USAGE));
        }
    };
    let verdict = match map.verify() {
        Ok(v) => v,
        Err(VerifyError::NotBelyi { value }) => {
            eprintln!("not a Belyi function: critical value {value} outside {{0, 1, infinity}}");
            return Err(ExitCode::from(EXIT_NOT_BELYI));
        }
        Err(VerifyError::ResidualFactor { degree }) => {
            eprintln!("not a Belyi function: residual critical-value factor of degree {degree}");
            return Err(ExitCode::from(EXIT_NOT_BELYI));
        }
    };
    let scheme = verdict.scheme().clone();
    match format {
        TableFormat::Tsv => {
            match &verdict {
                MapVerdict::Belyi { .. } => println!("status\tbelyi"),
                MapVerdict::Shabat { second_value, .. } => {
                    println!("status\tshabat");
                    println!("second_critical_value\t{second_value}");
                    println!(
                        "note\tpost-compose with the affine map sending {{0, {second_value}}} to {{0, 1}} for the Belyi normalization"
                    );
                }
            }
            println!("degree\t{}", map.degree());
            println!("scheme\t{scheme}");
        }
        TableFormat::Json => {
            let (status, second) = match &verdict {
                MapVerdict::Belyi { .. } => ("belyi", None),
                MapVerdict::Shabat { second_value, .. } => {
                    ("shabat", Some(second_value.to_string()))
                }
            };
            let v = json!({
                "format_version": 1,
                "status": status,
                "second_critical_value": second,
                "degree": map.degree(),
                "scheme": scheme.to_string(),
            });
            println!("{v}");
        }
    }
    if let Some(expected_text) = expected {
        let expected_scheme = parse_scheme_or_exit(expected_text)?;
        if expected_scheme.canonical() != scheme.canonical() {
            eprintln!("scheme mismatch: computed {scheme}, expected {expected_scheme}");
            return Err(ExitCode::from(EXIT_NOT_BELYI));
        }
    }
    Ok(())
}

fn cmd_dessin(
    scheme_text: &str,
    index: usize,
    budget: u64,
    format: GraphFormat,
) -> Result<(), ExitCode> {
    let scheme = parse_scheme_or_exit(scheme_text)?;
    let enumeration = match enumerate_classes(&scheme, budget) {
        Ok(e) => e,
        Err(TripleError::BudgetExceeded { nodes }) => {
            eprintln!("error: search budget exhausted after {nodes} nodes");
            return Err(ExitCode::from(EXIT_BUDGET));
        }
        Err(e) => {
            eprintln!("error: {e}");
            return Err(ExitCode::from(EXIT_USAGE));
        }
    };
    let transitive: Vec<_> = enumeration
        .classes
        .iter()
        .filter(|c| c.transitive)
        .collect();
    if index == 0 || index > transitive.len() {
        eprintln!(
            "error: index {index} out of range; the scheme has {} connected dessin(s)",
            transitive.len()
        );
        return Err(ExitCode::from(EXIT_BAD_INDEX));
    }
    let dessin = Dessin::of(&transitive[index - 1].representative);
    match format {
        GraphFormat::Dot => print!("{}", dessin.to_dot()),
        GraphFormat::Json => println!("{}", dessin.to_json()),
    }
    Ok(())
}
