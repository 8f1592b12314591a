//! Classification sweep: every genus-0 scheme of a degree is enumerated,
//! counted, decided and tagged. Rows are independent, so the sweep is
//! data-parallel; output order is canonical regardless of thread count.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::par::ordered_map;
use crate::scheme::{enumerate_schemes, Scheme};
use crate::series::{series_tags, SeriesTag};
use crate::triples::{decide_exceptional, SearchOptions, Verdict, DEFAULT_BUDGET};
use crate::util::ratio_string;

#[derive(Clone, Debug)]
pub struct ClassificationRow {
    pub scheme: Scheme,
    pub eisenstein_connected: BigRational,
    pub verdict: Verdict,
    pub tags: Vec<SeriesTag>,
    /// Some fiber is `[n]`: the dessin is a tree.
    pub polynomial: bool,
    /// Backtracking nodes spent on this row.
    pub nodes: u64,
    /// Wall-clock duration, present only when timing was requested.
    pub time_ms: Option<u128>,
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Node budget per scheme.
    pub budget: u64,
    /// Exact class counts are produced for `NotExceptional` rows up to this
    /// degree; above it the Eisenstein filter verdict is kept as-is.
    pub refine_limit: usize,
    /// Record wall-clock time per row. Off by default: timings vary from
    /// run to run, and default output is byte-deterministic.
    pub timings: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            budget: DEFAULT_BUDGET,
            refine_limit: 10,
            timings: false,
        }
    }
}

/// One row per genus-0 scheme of degree `n`, in canonical scheme order.
pub fn classify_degree(n: usize, opts: &ClassifyOptions) -> Vec<ClassificationRow> {
    let schemes = enumerate_schemes(n, 0);
    let search = SearchOptions {
        budget: opts.budget,
        refine_not_exceptional: n <= opts.refine_limit,
        ..SearchOptions::default()
    };
    let timings = opts.timings;
    ordered_map(schemes, move |s| {
        let started = std::time::Instant::now();
        let decision = decide_exceptional(&s, &search);
        let time_ms = timings.then(|| started.elapsed().as_millis());
        ClassificationRow {
            tags: series_tags(&s),
            polynomial: s.is_polynomial(),
            scheme: s,
            eisenstein_connected: decision.eisenstein_connected,
            verdict: decision.verdict,
            nodes: decision.nodes,
            time_ms,
        }
    })
}

#[derive(Clone, Debug, Default)]
pub struct DegreeSummary {
    pub degree: usize,
    pub exceptional: usize,
    pub not_exceptional: usize,
    pub unrealizable: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub rows: Vec<ClassificationRow>,
    pub summary: Vec<DegreeSummary>,
}

/// Classifies every degree from 1 to `max_degree`.
pub fn sweep(max_degree: usize, opts: &ClassifyOptions) -> SweepReport {
    let mut rows = Vec::new();
    let mut summary = Vec::new();
    for n in 1..=max_degree {
        let degree_rows = classify_degree(n, opts);
        let mut s = DegreeSummary {
            degree: n,
            ..DegreeSummary::default()
        };
        for row in &degree_rows {
            match row.verdict {
                Verdict::Exceptional { .. } => s.exceptional += 1,
                Verdict::NotExceptional { .. } => s.not_exceptional += 1,
                Verdict::Unrealizable => s.unrealizable += 1,
                Verdict::Unknown { .. } => s.unknown += 1,
            }
        }
        summary.push(s);
        rows.extend(degree_rows);
    }
    SweepReport { rows, summary }
}

fn verdict_aut(v: &Verdict) -> Option<u64> {
    match v {
        Verdict::Exceptional { aut_order } => Some(*aut_order),
        _ => None,
    }
}

fn tags_string(tags: &[SeriesTag]) -> String {
    if tags.is_empty() {
        "-".to_string()
    } else {
        tags.iter()
            .map(|t| t.to_string())
            .collect::<Vec<String>>()
            .join(",")
    }
}

pub const TSV_HEADER: &str = "degree\tscheme\te_conn\tverdict\taut\ttags\ttime_ms\tnodes";

/// One TSV line per row, columns as in [`TSV_HEADER`].
pub fn report_tsv(rows: &[ClassificationRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for row in rows {
        let aut = verdict_aut(&row.verdict).map_or_else(|| "-".to_string(), |a| a.to_string());
        let time = row
            .time_ms
            .map_or_else(|| "-".to_string(), |t| t.to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            row.scheme.degree(),
            row.scheme,
            ratio_string(&row.eisenstein_connected),
            row.verdict,
            aut,
            tags_string(&row.tags),
            time,
            row.nodes,
        ));
    }
    out
}

pub fn row_json(row: &ClassificationRow) -> Value {
    let (verdict, classes) = match &row.verdict {
        Verdict::Exceptional { .. } => ("Exceptional", Some(1)),
        Verdict::NotExceptional { transitive_classes } => {
            ("NotExceptional", transitive_classes.map(|k| k as i64))
        }
        Verdict::Unrealizable => ("Unrealizable", Some(0)),
        Verdict::Unknown { .. } => ("Unknown", None),
    };
    json!({
        "degree": row.scheme.degree(),
        "scheme": row.scheme.to_string(),
        "eisenstein_connected": ratio_string(&row.eisenstein_connected),
        "verdict": verdict,
        "aut": verdict_aut(&row.verdict),
        "transitive_classes": classes,
        "tags": row.tags.iter().map(|t| t.to_string()).collect::<Vec<String>>(),
        "polynomial": row.polynomial,
        "nodes": row.nodes,
        "time_ms": row.time_ms.map(|t| t as u64),
    })
}

/// Versioned JSON report over a set of rows.
pub fn report_json(rows: &[ClassificationRow]) -> Value {
    json!({
        "format_version": 1,
        "rows": rows.iter().map(row_json).collect::<Vec<Value>>(),
    })
}
