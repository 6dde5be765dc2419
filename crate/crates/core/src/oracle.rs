//! Independent ground truth and differential verification drivers.
//!
//! [`oracle_multiply`] is built from [`add`] alone (Horner evaluation with
//! double-and-add for the small factors), so it shares no code path with
//! `mul_by_digit`, `divmod_base`, or either multiplication algorithm.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::algorithms::{check_invariant, incremental_multiply, schoolbook_multiply};
use crate::arith::{add, OpCounters};
use crate::digits::{ensure_same_base, Base, Natural};
use crate::error::{Error, Result};

/// `x · k` for a small machine multiplier, by binary double-and-add.
fn mul_small(x: &Natural, k: u32) -> Natural {
    let mut scratch = OpCounters::new();
    let mut acc = Natural::zero(x.base());
    let mut power = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = add(&acc, &power, &mut scratch).expect("same base");
        }
        k >>= 1;
        if k > 0 {
            power = add(&power, &power, &mut scratch).expect("same base");
        }
    }
    acc
}

/// `a · b` using only addition and doubling.
pub fn oracle_multiply(a: &Natural, b: &Natural) -> Result<Natural> {
    let base = ensure_same_base(a, b)?;
    let mut scratch = OpCounters::new();
    let mut acc = Natural::zero(base);
    for &digit in b.digits().iter().rev() {
        let scaled = mul_small(&acc, base.get());
        acc = add(&scaled, &mul_small(a, digit as u32), &mut scratch)?;
    }
    Ok(acc)
}

/// SplitMix64 (Steele, Lea and Flood), the generator behind [`random_check`].
///
/// ```text
/// state  += 0x9E3779B97F4A7C15
/// z       = state
/// z       = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z       = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output  = z ^ (z >> 31)
/// ```
///
/// All arithmetic wraps modulo 2^64. A bounded draw in `0..n` is
/// `(output as u128 * n as u128) >> 64`.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..n` by multiply-shift. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }
}

/// Draws a natural with exactly `len` digits (top digit nonzero).
fn sample_natural(rng: &mut SplitMix64, len: usize, base: Base) -> Natural {
    let radix = base.get() as u64;
    let mut digits: Vec<u8> = (0..len - 1).map(|_| rng.below(radix) as u8).collect();
    digits.push(1 + rng.below(radix - 1) as u8);
    Natural::normalize(digits, base).expect("digits drawn below base")
}

/// Generates the operand pairs a [`random_check`] run will test.
///
/// Per trial, in this order: the base index `below(bases.len())`; the length
/// of `a` as `1 + below(max_digits)`; the digits of `a` from least to most
/// significant (the top digit as `1 + below(base - 1)`, the rest as
/// `below(base)`); then the length and digits of `b` the same way.
pub fn sample_pairs(
    trials: usize,
    max_digits: usize,
    bases: &[Base],
    seed: u64,
) -> Result<Vec<(Natural, Natural)>> {
    if trials == 0 || max_digits == 0 || bases.is_empty() {
        return Err(Error::InvalidParameter(
            "trials, max_digits and the base set must be nonempty".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::with_capacity(trials);
    for _ in 0..trials {
        let base = bases[rng.below(bases.len() as u64) as usize];
        let len_a = 1 + rng.below(max_digits as u64) as usize;
        let a = sample_natural(&mut rng, len_a, base);
        let len_b = 1 + rng.below(max_digits as u64) as usize;
        let b = sample_natural(&mut rng, len_b, base);
        pairs.push((a, b));
    }
    Ok(pairs)
}

/// A pair whose products disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a: Natural,
    pub b: Natural,
    pub expected: Natural,
    pub incremental: Natural,
    pub schoolbook: Natural,
    pub oracle: Natural,
}

/// A step at which the incremental invariant did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFailure {
    pub a: Natural,
    pub b: Natural,
    pub step: usize,
}

/// Aggregate outcome of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub pairs_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub invariant_failures: Vec<InvariantFailure>,
    /// SHA-256 over every checked pair as `"<base>:<a>*<b>\n"`, in generation order.
    pub fingerprint: String,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.invariant_failures.is_empty()
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    mismatches: Vec<Mismatch>,
    invariant_failures: Vec<InvariantFailure>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
        self.invariant_failures.extend(other.invariant_failures);
        self
    }
}

/// Runs both algorithms and the oracle on one pair. With no `expected`
/// value the oracle result is the reference.
fn check_pair(a: &Natural, b: &Natural, expected: Option<Natural>, out: &mut Partial) {
    out.checked += 1;
    let inc = incremental_multiply(a, b).expect("operands share a base");
    let sch = schoolbook_multiply(a, b).expect("operands share a base");
    let oracle = oracle_multiply(a, b).expect("operands share a base");
    let expected = expected.unwrap_or_else(|| oracle.clone());

    if inc.result != expected || sch.result != expected || oracle != expected {
        out.mismatches.push(Mismatch {
            a: a.clone(),
            b: b.clone(),
            expected,
            incremental: inc.result.clone(),
            schoolbook: sch.result,
            oracle,
        });
    }
    let verdicts = check_invariant(&inc).expect("incremental trace");
    for (step, ok) in verdicts.into_iter().enumerate() {
        if !ok {
            out.invariant_failures.push(InvariantFailure {
                a: a.clone(),
                b: b.clone(),
                step,
            });
        }
    }
}

fn fingerprint<'a>(pairs: impl Iterator<Item = (&'a Natural, &'a Natural)>) -> String {
    let mut hasher = Sha256::new();
    for (a, b) in pairs {
        hasher.update(format!("{}:{}*{}\n", a.base(), a, b).as_bytes());
    }
    format!("{:x}", hasher.finalize())
}

fn finish(partial: Partial, fingerprint: String, started: Instant) -> VerifyReport {
    let mut mismatches = partial.mismatches;
    mismatches.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    let mut invariant_failures = partial.invariant_failures;
    invariant_failures.sort_by(|x, y| (&x.a, &x.b, x.step).cmp(&(&y.a, &y.b, y.step)));
    VerifyReport {
        pairs_checked: partial.checked,
        mismatches,
        invariant_failures,
        fingerprint,
        elapsed: started.elapsed(),
    }
}

/// Checks every pair `0 <= x, y < limit` against the machine-integer product.
pub fn exhaustive_check(limit: u64, base: u32) -> Result<VerifyReport> {
    let base = Base::new(base)?;
    if limit == 0 {
        return Err(Error::InvalidParameter("limit must be at least 1".into()));
    }
    let started = Instant::now();
    let operands: Vec<Natural> = (0..limit)
        .map(|v| Natural::from_u128(v as u128, base))
        .collect();

    let partial = (0..limit)
        .into_par_iter()
        .map(|x| {
            let mut out = Partial::default();
            let a = &operands[x as usize];
            for y in 0..limit {
                let expected = Natural::from_u128(x as u128 * y as u128, base);
                check_pair(a, &operands[y as usize], Some(expected), &mut out);
            }
            out
        })
        .reduce(Partial::default, Partial::merge);

    let print = fingerprint(
        operands
            .iter()
            .flat_map(|a| operands.iter().map(move |b| (a, b))),
    );
    Ok(finish(partial, print, started))
}

/// Checks `trials` seeded random pairs; see [`sample_pairs`] for the draw.
pub fn random_check(
    trials: usize,
    max_digits: usize,
    bases: &[Base],
    seed: u64,
) -> Result<VerifyReport> {
    let started = Instant::now();
    let pairs = sample_pairs(trials, max_digits, bases, seed)?;
    let partial = pairs
        .par_iter()
        .map(|(a, b)| {
            let mut out = Partial::default();
            check_pair(a, b, None, &mut out);
            out
        })
        .reduce(Partial::default, Partial::merge);
    let print = fingerprint(pairs.iter().map(|(a, b)| (a, b)));
    Ok(finish(partial, print, started))
}
