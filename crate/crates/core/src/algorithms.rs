//! The incremental carry-propagating multiplier, the schoolbook multiplier,
//! and a step-by-step checker for the incremental algorithm's invariant.
//!
//! The incremental algorithm consumes the multiplier `B` one digit at a time,
//! least significant first, keeping the multiplicand `A` whole:
//!
//! ```text
//! S_0 = A·b_0                     r_0 = S_0 mod base    c_1     = S_0 div base
//! S_k = A·b_k + c_k    (k >= 1)   r_k = S_k mod base    c_{k+1} = S_k div base
//! R   = c_n·base^n + Σ_{i<n} r_i·base^i                 (n = len(B))
//! ```
//!
//! Every `r_k` is a final digit of the product as soon as it is produced; the
//! carry `c_k` is a full natural and may be as long as `A`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{add, divmod_base, mul_by_digit, place_below, shift, OpCounters};
use crate::digits::{ensure_same_base, Base, Digit, Natural};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Incremental,
    Schoolbook,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Incremental, Algorithm::Schoolbook];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Incremental => "incremental",
            Algorithm::Schoolbook => "schoolbook",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "incremental" => Ok(Algorithm::Incremental),
            "schoolbook" => Ok(Algorithm::Schoolbook),
            other => Err(Error::Document(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// One iteration of the incremental algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub k: usize,
    /// `S_k = A·b_k + c_k`.
    pub s: Natural,
    /// Result digit emitted at position `k`.
    pub r: Digit,
    /// Carry into step `k + 1`.
    pub c_next: Natural,
}

/// Per-algorithm step history.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Steps {
    Incremental(Vec<StepRecord>),
    /// Shifted partial products `A·b_j·base^j`, in order of `j`.
    Schoolbook(Vec<Natural>),
}

/// Full record of one multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub base: Base,
    pub a: Natural,
    pub b: Natural,
    pub steps: Steps,
    pub result: Natural,
    pub counters: OpCounters,
    /// Peak number of digit-vector intermediates retained at once.
    pub peak_retained: usize,
    /// `digit_adds` spent after the last partial product was formed.
    pub final_phase_adds: u64,
}

impl Trace {
    pub fn algorithm(&self) -> Algorithm {
        match self.steps {
            Steps::Incremental(_) => Algorithm::Incremental,
            Steps::Schoolbook(_) => Algorithm::Schoolbook,
        }
    }

    pub fn step_records(&self) -> Option<&[StepRecord]> {
        match &self.steps {
            Steps::Incremental(steps) => Some(steps),
            Steps::Schoolbook(_) => None,
        }
    }

    pub fn rows(&self) -> Option<&[Natural]> {
        match &self.steps {
            Steps::Incremental(_) => None,
            Steps::Schoolbook(rows) => Some(rows),
        }
    }
}

#[derive(Default)]
struct Gauge {
    peak: usize,
}

impl Gauge {
    fn observe(&mut self, live: usize) {
        self.peak = self.peak.max(live);
    }
}

/// Multiplies with the incremental carry-propagating algorithm.
///
/// A zero multiplier has no digits to consume and yields zero with no steps.
/// A zero multiplicand runs every step, each producing `S_k = 0`.
pub fn incremental_multiply(a: &Natural, b: &Natural) -> Result<Trace> {
    let base = ensure_same_base(a, b)?;
    let mut counters = OpCounters::new();
    let mut gauge = Gauge::default();
    let n = b.len();

    let mut steps = Vec::with_capacity(n);
    let mut confirmed: Vec<Digit> = Vec::with_capacity(n);
    let mut carry = Natural::zero(base);

    for k in 0..n {
        let partial = mul_by_digit(a, b.digit(k), &mut counters)?;
        let s = if k == 0 {
            partial
        } else {
            add(&partial, &carry, &mut counters)?
        };
        // Live between steps: the carry (or the last sum) plus confirmed digits.
        gauge.observe(1 + usize::from(!confirmed.is_empty()));
        let (c_next, r) = divmod_base(&s);
        confirmed.push(r);
        carry = c_next.clone();
        steps.push(StepRecord { k, s, r, c_next });
    }

    let result = place_below(&carry, &confirmed);
    Ok(Trace {
        base,
        a: a.clone(),
        b: b.clone(),
        steps: Steps::Incremental(steps),
        result,
        counters,
        peak_retained: gauge.peak,
        final_phase_adds: 0,
    })
}

/// Multiplies by forming every shifted partial product, then summing the
/// rows left to right.
pub fn schoolbook_multiply(a: &Natural, b: &Natural) -> Result<Trace> {
    let base = ensure_same_base(a, b)?;
    let mut counters = OpCounters::new();
    let mut gauge = Gauge::default();

    let mut rows = Vec::with_capacity(b.len());
    for j in 0..b.len() {
        let row = mul_by_digit(a, b.digit(j), &mut counters)?;
        rows.push(shift(&row, j));
        gauge.observe(rows.len());
    }

    let adds_before = counters.digit_adds;
    let result = match rows.as_slice() {
        [] => Natural::zero(base),
        [only] => only.clone(),
        [first, second, rest @ ..] => {
            let mut acc = add(first, second, &mut counters)?;
            gauge.observe(rows.len() + 1);
            for row in rest {
                acc = add(&acc, row, &mut counters)?;
            }
            acc
        }
    };
    let final_phase_adds = counters.digit_adds - adds_before;

    Ok(Trace {
        base,
        a: a.clone(),
        b: b.clone(),
        steps: Steps::Schoolbook(rows),
        result,
        counters,
        peak_retained: gauge.peak,
        final_phase_adds,
    })
}

/// Checks, for every recorded step `k`,
///
/// ```text
/// Σ_{i<=k} r_i·base^i + base^(k+1)·c_{k+1} == Σ_{j<=k} (A·b_j)·base^j
/// ```
///
/// Both sides are rebuilt from the trace inputs and the recorded `r_i` and
/// `c_{k+1}` with exact digit-vector arithmetic. The recorded sums `S_k` and
/// the result are not consulted.
pub fn check_invariant(trace: &Trace) -> Result<Vec<bool>> {
    let steps = trace.step_records().ok_or(Error::WrongAlgorithm)?;
    let base = ensure_same_base(&trace.a, &trace.b)?;
    let mut scratch = OpCounters::new();

    let mut emitted = Natural::zero(base);
    let mut expected = Natural::zero(base);
    let mut verdicts = Vec::with_capacity(steps.len());

    for (k, step) in steps.iter().enumerate() {
        let row = mul_by_digit(&trace.a, trace.b.digit(k), &mut scratch)?;
        expected = add(&expected, &shift(&row, k), &mut scratch)?;

        // r_k enters at its exact value, so an out-of-range digit is caught too.
        let r_term = shift(&Natural::from_u128(step.r.get() as u128, base), k);
        emitted = add(&emitted, &r_term, &mut scratch)?;
        let holds = match add(&emitted, &shift(&step.c_next, k + 1), &mut scratch) {
            Ok(lhs) => lhs == expected,
            Err(_) => false,
        };
        verdicts.push(holds);
    }
    Ok(verdicts)
}

/// Returns `a · b` computed by the chosen algorithm.
pub fn multiply(a: &Natural, b: &Natural, algorithm: Algorithm) -> Result<Natural> {
    run(a, b, algorithm).map(|t| t.result)
}

/// Runs the chosen algorithm and returns its full trace.
pub fn run(a: &Natural, b: &Natural, algorithm: Algorithm) -> Result<Trace> {
    match algorithm {
        Algorithm::Incremental => incremental_multiply(a, b),
        Algorithm::Schoolbook => schoolbook_multiply(a, b),
    }
}
