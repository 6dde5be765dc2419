//! Text and JSON renderings of traces and verification reports.
//!
//! JSON output is canonical: keys sorted, no insignificant whitespace, one
//! trailing newline. Every natural is a string in the operand base; counts
//! and indices are JSON numbers. `schema_version` is `"1"`.

use serde::{Deserialize, Serialize};

use crate::algorithms::{Steps, Trace};
use crate::arith::OpCounters;
use crate::error::{Error, Result};
use crate::oracle::VerifyReport;

pub const SCHEMA_VERSION: &str = "1";

// Field order below is alphabetical; serde emits fields in declaration
// order, which keeps the output key-sorted.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDocument {
    pub c_next: String,
    pub k: usize,
    pub r: String,
    pub s: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountersDocument {
    pub digit_adds: u64,
    pub digit_mults: u64,
}

impl From<OpCounters> for CountersDocument {
    fn from(c: OpCounters) -> Self {
        CountersDocument {
            digit_adds: c.digit_adds,
            digit_mults: c.digit_mults,
        }
    }
}

/// Machine-readable form of a [`Trace`].
///
/// `steps` is filled for incremental traces and `rows` (the shifted partial
/// products) for schoolbook traces; the other list is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub a: String,
    pub algorithm: String,
    pub b: String,
    pub base: u32,
    pub counters: CountersDocument,
    pub result: String,
    pub rows: Vec<String>,
    pub schema_version: String,
    pub steps: Vec<StepDocument>,
}

impl TraceDocument {
    pub fn from_trace(trace: &Trace) -> Self {
        let (steps, rows) = match &trace.steps {
            Steps::Incremental(steps) => (
                steps
                    .iter()
                    .map(|s| StepDocument {
                        c_next: s.c_next.render(),
                        k: s.k,
                        r: s.r.glyph().to_string(),
                        s: s.s.render(),
                    })
                    .collect(),
                Vec::new(),
            ),
            Steps::Schoolbook(rows) => (Vec::new(), rows.iter().map(|r| r.render()).collect()),
        };
        TraceDocument {
            a: trace.a.render(),
            algorithm: trace.algorithm().name().to_string(),
            b: trace.b.render(),
            base: trace.base.get(),
            counters: trace.counters.into(),
            result: trace.result.render(),
            rows,
            schema_version: SCHEMA_VERSION.to_string(),
            steps,
        }
    }

    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TraceDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Document(format!(
                "unsupported schema_version {:?}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}

fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("documents serialize");
    out.push('\n');
    out
}

pub fn render_trace_json(trace: &Trace) -> String {
    TraceDocument::from_trace(trace).to_json()
}

/// Renders the trace one step per line, ending with `R = <result>`.
///
/// Incremental steps read `S_k = A × b_k + c_k = S; r_k = r; c_{k+1} = c`
/// (the `+ c_k` term is absent for `k = 0`). Schoolbook rows read
/// `P_j = A × b_j × base^j = row` (the shift factor is absent for `j = 0`).
pub fn render_trace_text(trace: &Trace) -> String {
    let a = trace.a.render();
    let mut out = String::new();
    match &trace.steps {
        Steps::Incremental(steps) => {
            let mut carry_in: Option<String> = None;
            for step in steps {
                let k = step.k;
                let bk = trace.b.digit(k).glyph();
                let addend = carry_in.map(|c| format!(" + {c}")).unwrap_or_default();
                out.push_str(&format!(
                    "S_{k} = {a} × {bk}{addend} = {}; r_{k} = {}; c_{} = {}\n",
                    step.s,
                    step.r.glyph(),
                    k + 1,
                    step.c_next
                ));
                carry_in = Some(step.c_next.render());
            }
        }
        Steps::Schoolbook(rows) => {
            for (j, row) in rows.iter().enumerate() {
                let bj = trace.b.digit(j).glyph();
                let scale = if j == 0 {
                    String::new()
                } else {
                    format!(" × {}^{j}", trace.base)
                };
                out.push_str(&format!("P_{j} = {a} × {bj}{scale} = {row}\n"));
            }
        }
    }
    out.push_str(&format!("R = {}\n", trace.result));
    out
}

#[derive(Serialize)]
struct MismatchDocument {
    a: String,
    b: String,
    base: u32,
    expected: String,
    incremental: String,
    oracle: String,
    schoolbook: String,
}

#[derive(Serialize)]
struct InvariantFailureDocument {
    a: String,
    b: String,
    base: u32,
    step: usize,
}

#[derive(Serialize)]
struct VerifyDocument {
    fingerprint: String,
    invariant_failures: Vec<InvariantFailureDocument>,
    mismatches: Vec<MismatchDocument>,
    pairs_checked: u64,
    passed: bool,
    schema_version: &'static str,
}

/// Canonical JSON for a verification report. Wall-clock time is left out so
/// that a seeded run reproduces byte for byte.
pub fn render_report_json(report: &VerifyReport) -> String {
    let doc = VerifyDocument {
        fingerprint: report.fingerprint.clone(),
        invariant_failures: report
            .invariant_failures
            .iter()
            .map(|f| InvariantFailureDocument {
                a: f.a.render(),
                b: f.b.render(),
                base: f.a.base().get(),
                step: f.step,
            })
            .collect(),
        mismatches: report
            .mismatches
            .iter()
            .map(|m| MismatchDocument {
                a: m.a.render(),
                b: m.b.render(),
                base: m.a.base().get(),
                expected: m.expected.render(),
                incremental: m.incremental.render(),
                oracle: m.oracle.render(),
                schoolbook: m.schoolbook.render(),
            })
            .collect(),
        pairs_checked: report.pairs_checked,
        passed: report.passed(),
        schema_version: SCHEMA_VERSION,
    };
    canonical_json(&doc)
}

pub fn render_report_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for m in &report.mismatches {
        out.push_str(&format!(
            "mismatch (base {}): {} × {}: expected {}, incremental {}, schoolbook {}, oracle {}\n",
            m.a.base(),
            m.a,
            m.b,
            m.expected,
            m.incremental,
            m.schoolbook,
            m.oracle
        ));
    }
    for f in &report.invariant_failures {
        out.push_str(&format!(
            "invariant failure (base {}): {} × {} at step {}\n",
            f.a.base(),
            f.a,
            f.b,
            f.step
        ));
    }
    out.push_str(&format!("pairs checked: {}\n", report.pairs_checked));
    out.push_str(&format!("mismatches: {}\n", report.mismatches.len()));
    out.push_str(&format!(
        "invariant failures: {}\n",
        report.invariant_failures.len()
    ));
    out.push_str(&format!("fingerprint: {}\n", report.fingerprint));
    out.push_str(&format!("elapsed: {:.3}s\n", report.elapsed.as_secs_f64()));
    out.push_str(if report.passed() { "PASS\n" } else { "FAIL\n" });
    out
}
