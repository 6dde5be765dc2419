//! Digit-vector kernels with operation counting.
//!
//! Counting convention:
//! - `digit_mults` ticks once for every single-digit × single-digit product.
//!   Zero digits are multiplied like any other digit.
//! - `digit_adds` ticks once per digit position processed by an addition
//!   step (including absorbing an incoming carry), plus once when a final
//!   carry digit is emitted past the top position.

use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

use crate::digits::{ensure_same_base, Digit, Natural};
use crate::error::{Error, Result};

/// Tallies of elementary digit operations for one computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpCounters {
    pub digit_mults: u64,
    pub digit_adds: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }
}

impl AddAssign for OpCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.digit_mults += rhs.digit_mults;
        self.digit_adds += rhs.digit_adds;
    }
}

/// `a + b`.
pub fn add(a: &Natural, b: &Natural, counters: &mut OpCounters) -> Result<Natural> {
    let base = ensure_same_base(a, b)?;
    let radix = base.get();
    let (long, short) = if a.len() >= b.len() {
        (a.digits(), b.digits())
    } else {
        (b.digits(), a.digits())
    };

    let mut out = Vec::with_capacity(long.len() + 1);
    let mut carry = 0u32;
    for (i, &x) in long.iter().enumerate() {
        let sum = x as u32 + short.get(i).copied().unwrap_or(0) as u32 + carry;
        if sum >= radix {
            out.push((sum - radix) as u8);
            carry = 1;
        } else {
            out.push(sum as u8);
            carry = 0;
        }
    }
    counters.digit_adds += long.len() as u64;
    if carry > 0 {
        out.push(carry as u8);
        counters.digit_adds += 1;
    }
    Ok(Natural::from_canonical_unchecked(out, base))
}

/// `a · d` for a single digit `d` of `a`'s base.
pub fn mul_by_digit(a: &Natural, d: Digit, counters: &mut OpCounters) -> Result<Natural> {
    let base = a.base();
    let radix = base.get();
    if d.get() >= radix {
        return Err(Error::DigitOutOfRange {
            index: 0,
            value: d.get() as u64,
            base: radix,
        });
    }

    let mut out = Vec::with_capacity(a.len() + 1);
    let mut carry = 0u32;
    for &x in a.digits() {
        // x·d + carry <= (r-1)^2 + (r-1) < r^2, so the carry stays one digit.
        let t = x as u32 * d.get() + carry;
        out.push((t % radix) as u8);
        carry = t / radix;
    }
    counters.digit_mults += a.len() as u64;
    counters.digit_adds += a.len() as u64;
    if carry > 0 {
        out.push(carry as u8);
        counters.digit_adds += 1;
    }
    Ok(Natural::from_canonical_unchecked(out, base))
}

/// Splits off the units digit: returns `(n div base, n mod base)`.
pub fn divmod_base(n: &Natural) -> (Natural, Digit) {
    match n.digits().split_first() {
        None => (Natural::zero(n.base()), Digit::ZERO),
        Some((&low, rest)) => (
            Natural::from_canonical_unchecked(rest.to_vec(), n.base()),
            Digit::new(low as u32, n.base()).expect("canonical digit"),
        ),
    }
}

/// `n · base^k`.
pub fn shift(n: &Natural, k: usize) -> Natural {
    if n.is_zero() {
        return n.clone();
    }
    let mut out = vec![0u8; k + n.len()];
    out[k..].copy_from_slice(n.digits());
    Natural::from_canonical_unchecked(out, n.base())
}

/// `high · base^low.len() + Σ low[i]·base^i`, by direct digit placement.
pub(crate) fn place_below(high: &Natural, low: &[Digit]) -> Natural {
    let mut out = Vec::with_capacity(low.len() + high.len());
    out.extend(low.iter().map(|d| d.get() as u8));
    out.extend_from_slice(high.digits());
    Natural::from_canonical_unchecked(out, high.base())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::Base;
    use proptest::prelude::*;

    fn dec(s: &str) -> Natural {
        Natural::parse(s, Base::DECIMAL).unwrap()
    }

    fn d(v: u32) -> Digit {
        Digit::new(v, Base::DECIMAL).unwrap()
    }

    #[test]
    fn add_examples() {
        let mut c = OpCounters::new();
        assert_eq!(add(&dec("7404"), &dec("863"), &mut c).unwrap(), dec("8267"));
        assert_eq!(c.digit_adds, 4);

        let x = dec("31415");
        assert_eq!(add(&x, &Natural::zero(Base::DECIMAL), &mut c).unwrap(), x);
        assert_eq!(add(&Natural::zero(Base::DECIMAL), &x, &mut c).unwrap(), x);

        let mut c = OpCounters::new();
        assert_eq!(add(&dec("999"), &dec("1"), &mut c).unwrap(), dec("1000"));
        assert_eq!(c.digit_adds, 4);
        assert_eq!(c.digit_mults, 0);
    }

    #[test]
    fn add_rejects_base_mismatch() {
        let hex = Natural::one(Base::HEX);
        assert_eq!(
            add(&dec("1"), &hex, &mut OpCounters::new()),
            Err(Error::BaseMismatch {
                left: 10,
                right: 16
            })
        );
    }

    #[test]
    fn mul_by_digit_examples() {
        let mut c = OpCounters::new();
        assert_eq!(
            mul_by_digit(&dec("1234"), d(7), &mut c).unwrap(),
            dec("8638")
        );
        assert_eq!(c.digit_mults, 4);

        let mut c = OpCounters::new();
        let zero = mul_by_digit(&dec("90210"), d(0), &mut c).unwrap();
        assert!(zero.is_zero());
        assert_eq!(c.digit_mults, 5);

        let mut c = OpCounters::new();
        assert_eq!(mul_by_digit(&dec("162"), d(2), &mut c).unwrap(), dec("324"));
        assert_eq!(c.digit_mults, 3);

        let mut c = OpCounters::new();
        assert_eq!(mul_by_digit(&dec("99"), d(9), &mut c).unwrap(), dec("891"));
        assert_eq!(
            c,
            OpCounters {
                digit_mults: 2,
                digit_adds: 3
            }
        );
    }

    #[test]
    fn mul_by_digit_rejects_foreign_digit() {
        let digit = Digit::new(12, Base::HEX).unwrap();
        assert!(matches!(
            mul_by_digit(&dec("5"), digit, &mut OpCounters::new()),
            Err(Error::DigitOutOfRange { .. })
        ));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(divmod_base(&dec("8638")), (dec("863"), d(8)));
        assert_eq!(divmod_base(&dec("0")), (dec("0"), d(0)));
        assert_eq!(divmod_base(&dec("6996")), (dec("699"), d(6)));
        // quotient stays canonical when the units digit is the only one
        assert_eq!(divmod_base(&dec("7")), (dec("0"), d(7)));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&dec("8638"), 0), dec("8638"));
        assert_eq!(shift(&dec("7404"), 1), dec("74040"));
        assert_eq!(shift(&dec("0"), 5), dec("0"));
        assert!(shift(&dec("0"), 5).digits().is_empty());
    }

    #[test]
    fn place_below_assembles() {
        assert_eq!(place_below(&dec("699"), &[d(8), d(7), d(6)]), dec("699678"));
        assert_eq!(place_below(&dec("0"), &[d(4), d(0)]), dec("4"));
        assert!(place_below(&dec("0"), &[d(0), d(0)]).is_zero());
    }

    fn arb_base() -> impl Strategy<Value = Base> {
        (2u32..=36).prop_map(|b| Base::new(b).unwrap())
    }

    proptest! {
        #[test]
        fn add_matches_machine(base in arb_base(), x in any::<u64>(), y in any::<u64>()) {
            let mut c = OpCounters::new();
            let a = Natural::from_u128(x as u128, base);
            let b = Natural::from_u128(y as u128, base);
            let s = add(&a, &b, &mut c).unwrap();
            prop_assert!(s.is_canonical());
            prop_assert_eq!(s.to_u128().unwrap(), x as u128 + y as u128);
            let top_carry = (s.len() > a.len().max(b.len())) as u64;
            prop_assert_eq!(c.digit_adds, a.len().max(b.len()) as u64 + top_carry);
        }

        #[test]
        fn mul_by_digit_matches_machine(base in arb_base(), x in any::<u64>(), raw in 0u32..36) {
            let digit = Digit::new(raw % base.get(), base).unwrap();
            let a = Natural::from_u128(x as u128, base);
            let mut c = OpCounters::new();
            let p = mul_by_digit(&a, digit, &mut c).unwrap();
            prop_assert!(p.is_canonical());
            prop_assert_eq!(p.to_u128().unwrap(), x as u128 * digit.get() as u128);
            prop_assert_eq!(c.digit_mults, a.len() as u64);
        }

        #[test]
        fn divmod_reconstructs(base in arb_base(), x in any::<u128>()) {
            let n = Natural::from_u128(x, base);
            let (q, r) = divmod_base(&n);
            prop_assert!(q.is_canonical());
            prop_assert_eq!(q.to_u128().unwrap() * base.get() as u128 + r.get() as u128, x);
        }

        #[test]
        fn shift_scales(base in arb_base(), x in any::<u32>(), k in 0usize..8) {
            let n = Natural::from_u128(x as u128, base);
            let s = shift(&n, k);
            prop_assert!(s.is_canonical());
            prop_assert_eq!(s.to_u128().unwrap(), x as u128 * (base.get() as u128).pow(k as u32));
        }
    }
}
