//! Side-by-side measurement of the two multipliers.
//!
//! Operation counts and the retained-intermediate metric are deterministic.
//! Wall-clock medians are informational only.
//!
//! `peak_retained` is a proxy for working memory: the largest number of
//! digit-vector values either algorithm keeps alive at once. Schoolbook holds
//! every shifted partial product plus the running sum (`len(B) + 1` when
//! `len(B) >= 2`). The incremental algorithm holds the carry and the
//! confirmed low digits (2 when `len(B) >= 2`). With a single multiplier
//! digit both hold just the one product.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algorithms::{run, Algorithm};
use crate::arith::OpCounters;
use crate::digits::{ensure_same_base, Natural};
use crate::error::{Error, Result};
use crate::trace_io::{CountersDocument, SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measurement {
    pub algorithm: Algorithm,
    pub counters: OpCounters,
    pub peak_retained: usize,
    /// `digit_adds` spent after the last partial product was formed.
    pub final_phase_adds: u64,
    pub median: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchReport {
    pub base: u32,
    pub len_a: usize,
    pub len_b: usize,
    pub reps: usize,
    pub incremental: Measurement,
    pub schoolbook: Measurement,
}

fn measure(a: &Natural, b: &Natural, algorithm: Algorithm, reps: usize) -> Result<Measurement> {
    let trace = run(a, b, algorithm)?;
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        let t = run(a, b, algorithm)?;
        samples.push(start.elapsed());
        debug_assert_eq!(t.counters, trace.counters);
    }
    samples.sort_unstable();
    Ok(Measurement {
        algorithm,
        counters: trace.counters,
        peak_retained: trace.peak_retained,
        final_phase_adds: trace.final_phase_adds,
        median: samples[samples.len() / 2],
    })
}

pub fn compare_algorithms(a: &Natural, b: &Natural, reps: usize) -> Result<BenchReport> {
    let base = ensure_same_base(a, b)?;
    if reps == 0 {
        return Err(Error::InvalidParameter("reps must be at least 1".into()));
    }
    Ok(BenchReport {
        base: base.get(),
        len_a: a.len(),
        len_b: b.len(),
        reps,
        incremental: measure(a, b, Algorithm::Incremental, reps)?,
        schoolbook: measure(a, b, Algorithm::Schoolbook, reps)?,
    })
}

#[derive(Serialize)]
struct MeasurementDocument {
    counters: CountersDocument,
    final_phase_adds: u64,
    median_ns: u128,
    peak_retained: usize,
}

impl From<&Measurement> for MeasurementDocument {
    fn from(m: &Measurement) -> Self {
        MeasurementDocument {
            counters: m.counters.into(),
            final_phase_adds: m.final_phase_adds,
            median_ns: m.median.as_nanos(),
            peak_retained: m.peak_retained,
        }
    }
}

#[derive(Serialize)]
struct BenchDocument {
    base: u32,
    incremental: MeasurementDocument,
    len_a: usize,
    len_b: usize,
    reps: usize,
    schema_version: &'static str,
    schoolbook: MeasurementDocument,
}

pub fn render_bench_json(report: &BenchReport) -> String {
    let doc = BenchDocument {
        base: report.base,
        incremental: (&report.incremental).into(),
        len_a: report.len_a,
        len_b: report.len_b,
        reps: report.reps,
        schema_version: SCHEMA_VERSION,
        schoolbook: (&report.schoolbook).into(),
    };
    let mut out = serde_json::to_string(&doc).expect("documents serialize");
    out.push('\n');
    out
}

pub fn render_bench_text(report: &BenchReport) -> String {
    let mut out = format!(
        "input: {} × {} digits, base {}, {} reps\n",
        report.len_a, report.len_b, report.base, report.reps
    );
    out.push_str(&format!(
        "{:<12} {:>12} {:>12} {:>17} {:>14} {:>14}\n",
        "algorithm", "digit_mults", "digit_adds", "final_phase_adds", "peak_retained", "median"
    ));
    for m in [&report.incremental, &report.schoolbook] {
        out.push_str(&format!(
            "{:<12} {:>12} {:>12} {:>17} {:>14} {:>14}\n",
            m.algorithm.name(),
            m.counters.digit_mults,
            m.counters.digit_adds,
            m.final_phase_adds,
            m.peak_retained,
            format!("{:?}", m.median)
        ));
    }
    out
}
