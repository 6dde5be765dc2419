//! Exact multiplication of base-b naturals (2 <= b <= 36).
//!
//! Two multipliers are provided. [`incremental_multiply`] consumes the
//! multiplier one digit at a time: each step computes `S_k = A·b_k + c_k`,
//! emits the final product digit `r_k = S_k mod b` immediately and carries
//! the whole quotient `c_{k+1} = S_k div b` into the next step.
//! [`schoolbook_multiply`] forms every shifted partial product and sums them
//! at the end. Both return a [`Trace`] with per-step records and operation
//! counters; [`check_invariant`] re-derives the incremental algorithm's
//! per-step identity with exact arithmetic.
//!
//! ```
//! use incmul::{incremental_multiply, Base, Natural};
//!
//! let a = Natural::parse("1234", Base::DECIMAL).unwrap();
//! let b = Natural::parse("567", Base::DECIMAL).unwrap();
//! let trace = incremental_multiply(&a, &b).unwrap();
//! assert_eq!(trace.result.to_string(), "699678");
//! ```

pub mod algorithms;
pub mod arith;
pub mod bench;
pub mod digits;
mod error;
pub mod oracle;
pub mod trace_io;

pub use algorithms::{
    check_invariant, incremental_multiply, multiply, schoolbook_multiply, Algorithm, StepRecord,
    Steps, Trace,
};
pub use arith::OpCounters;
pub use bench::{compare_algorithms, BenchReport, Measurement};
pub use digits::{Base, Digit, Natural};
pub use error::{Error, Result};
pub use oracle::{exhaustive_check, oracle_multiply, random_check, VerifyReport};
pub use trace_io::{render_trace_json, render_trace_text, TraceDocument};
