//! Base-b natural numbers stored as little-endian digit vectors.
//!
//! Index `i` of the digit vector holds the coefficient of `base^i`. Every
//! [`Natural`] is kept in canonical form: the most significant stored digit is
//! nonzero, and zero is the empty vector.
//!
//! Digits are written with the alphabet `0-9a-z`: value `v` renders as
//! `'0' + v` for `v <= 9` and `'a' + (v - 10)` otherwise. Input is
//! case-insensitive, output is lowercase.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Radix of a positional numeral system, `2 ..= 36`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Base(u8);

impl Base {
    pub const MIN: u32 = 2;
    pub const MAX: u32 = 36;

    pub const BINARY: Base = Base(2);
    pub const DECIMAL: Base = Base(10);
    pub const HEX: Base = Base(16);

    pub fn new(value: u32) -> Result<Self> {
        if (Self::MIN..=Self::MAX).contains(&value) {
            Ok(Base(value as u8))
        } else {
            Err(Error::BaseOutOfRange(value as u64))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    /// Every supported base, in increasing order.
    pub fn all() -> impl Iterator<Item = Base> {
        (Self::MIN..=Self::MAX).map(|b| Base(b as u8))
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A single digit. Only meaningful together with the base it was validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit(u8);

impl Digit {
    pub const ZERO: Digit = Digit(0);

    pub fn new(value: u32, base: Base) -> Result<Self> {
        if value < base.get() {
            Ok(Digit(value as u8))
        } else {
            Err(Error::DigitOutOfRange {
                index: 0,
                value: value as u64,
                base: base.get(),
            })
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    pub fn glyph(self) -> char {
        glyph(self.0)
    }
}

#[inline]
fn glyph(value: u8) -> char {
    if value < 10 {
        (b'0' + value) as char
    } else {
        (b'a' + value - 10) as char
    }
}

fn glyph_value(c: char) -> Option<u32> {
    match c {
        '0'..='9' => Some(c as u32 - '0' as u32),
        'a'..='z' => Some(c as u32 - 'a' as u32 + 10),
        'A'..='Z' => Some(c as u32 - 'A' as u32 + 10),
        _ => None,
    }
}

/// A natural number in a fixed base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Natural {
    base: Base,
    digits: Vec<u8>,
}

impl Natural {
    pub fn zero(base: Base) -> Self {
        Natural {
            base,
            digits: Vec::new(),
        }
    }

    pub fn one(base: Base) -> Self {
        Natural {
            base,
            digits: vec![1],
        }
    }

    pub fn from_digit(digit: Digit, base: Base) -> Self {
        Self::from_canonical_unchecked(vec![digit.0], base)
    }

    /// Converts a machine integer. Always succeeds.
    pub fn from_u128(mut value: u128, base: Base) -> Self {
        let radix = base.get() as u128;
        let mut digits = Vec::new();
        while value > 0 {
            digits.push((value % radix) as u8);
            value /= radix;
        }
        Natural { base, digits }
    }

    /// Builds a natural from raw little-endian digit values, stripping
    /// high-order zeros. Entries must already be below the base.
    pub fn normalize<I>(raw: I, base: Base) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let radix = base.get() as u64;
        let mut digits = Vec::new();
        for (index, value) in raw.into_iter().enumerate() {
            let value = value.into();
            if value >= radix {
                return Err(Error::DigitOutOfRange {
                    index,
                    value,
                    base: base.get(),
                });
            }
            digits.push(value as u8);
        }
        Ok(Self::from_canonical_unchecked(digits, base))
    }

    /// Strips trailing zeros from an already range-checked vector.
    pub(crate) fn from_canonical_unchecked(mut digits: Vec<u8>, base: Base) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        debug_assert!(digits.iter().all(|&d| (d as u32) < base.get()));
        Natural { base, digits }
    }

    /// Parses most-significant-first text. Leading zeros are accepted.
    pub fn parse(text: &str, base: Base) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut digits = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            match glyph_value(c) {
                Some(v) if v < base.get() => digits.push(v as u8),
                _ => {
                    return Err(Error::InvalidDigitGlyph {
                        position,
                        glyph: c,
                        base: base.get(),
                    })
                }
            }
        }
        digits.reverse();
        Ok(Self::from_canonical_unchecked(digits, base))
    }

    /// Most-significant-first lowercase rendering. Zero renders as `"0"`.
    pub fn render(&self) -> String {
        if self.digits.is_empty() {
            return "0".to_string();
        }
        self.digits.iter().rev().map(|&d| glyph(d)).collect()
    }

    #[inline]
    pub fn base(&self) -> Base {
        self.base
    }

    /// Little-endian digit values.
    #[inline]
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit at position `i`, or zero past the end.
    pub fn digit(&self, i: usize) -> Digit {
        Digit(self.digits.get(i).copied().unwrap_or(0))
    }

    /// Number of significant digits; zero has length 0.
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.digits.last() != Some(&0) && self.digits.iter().all(|&d| (d as u32) < self.base.get())
    }

    /// Orders two naturals of the same base by value.
    pub fn compare(&self, other: &Natural) -> Result<Ordering> {
        ensure_same_base(self, other)?;
        Ok(self.cmp_digits(other))
    }

    fn cmp_digits(&self, other: &Natural) -> Ordering {
        self.digits
            .len()
            .cmp(&other.digits.len())
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }

    /// `Σ digits[i]·base^i` as a machine integer. Test support only.
    pub fn to_u128(&self) -> Result<u128> {
        let radix = self.base.get() as u128;
        self.digits.iter().rev().try_fold(0u128, |acc, &d| {
            acc.checked_mul(radix)
                .and_then(|v| v.checked_add(d as u128))
                .ok_or(Error::Overflow)
        })
    }
}

/// Values are ordered by base first, then by magnitude.
impl Ord for Natural {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| self.cmp_digits(other))
    }
}

impl PartialOrd for Natural {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub(crate) fn ensure_same_base(a: &Natural, b: &Natural) -> Result<Base> {
    if a.base == b.base {
        Ok(a.base)
    } else {
        Err(Error::BaseMismatch {
            left: a.base.get(),
            right: b.base.get(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dec(s: &str) -> Natural {
        Natural::parse(s, Base::DECIMAL).unwrap()
    }

    #[test]
    fn base_bounds() {
        assert!(Base::new(1).is_err());
        assert!(Base::new(37).is_err());
        assert_eq!(Base::new(2).unwrap().get(), 2);
        assert_eq!(Base::new(36).unwrap().get(), 36);
        assert_eq!(Base::all().count(), 35);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(dec("1234").digits(), &[4, 3, 2, 1]);
        assert_eq!(dec("000").digits(), &[] as &[u8]);
        assert_eq!(Natural::parse("ff", Base::HEX).unwrap().digits(), &[15, 15]);
        assert_eq!(Natural::parse("FF", Base::HEX).unwrap().digits(), &[15, 15]);
        assert_eq!(dec("000120").digits(), &[0, 2, 1]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Natural::parse("", Base::DECIMAL), Err(Error::EmptyInput));
        assert_eq!(
            Natural::parse("12a4", Base::DECIMAL),
            Err(Error::InvalidDigitGlyph {
                position: 2,
                glyph: 'a',
                base: 10
            })
        );
        assert!(Natural::parse("2", Base::BINARY).is_err());
        assert!(Natural::parse("-5", Base::DECIMAL).is_err());
        assert!(Natural::parse("1.5", Base::DECIMAL).is_err());
        assert!(Natural::parse("z", Base::new(35).unwrap()).is_err());
        assert!(Natural::parse("z", Base::new(36).unwrap()).is_ok());
    }

    #[test]
    fn render_examples() {
        let r = Natural::normalize([8u8, 7, 6, 9, 9, 6], Base::DECIMAL).unwrap();
        assert_eq!(r.render(), "699678");
        assert_eq!(Natural::zero(Base::DECIMAL).render(), "0");
        assert_eq!(
            Natural::normalize([15u8, 15], Base::HEX).unwrap().render(),
            "ff"
        );
        assert_eq!(
            Natural::from_u128(35, Base::new(36).unwrap()).to_string(),
            "z"
        );
    }

    #[test]
    fn normalize_examples() {
        let n = Natural::normalize([4u8, 3, 2, 1, 0, 0], Base::DECIMAL).unwrap();
        assert_eq!(n.digits(), &[4, 3, 2, 1]);
        assert!(Natural::normalize([0u8], Base::DECIMAL).unwrap().is_zero());
        assert_eq!(
            Natural::normalize([9u8], Base::DECIMAL).unwrap().digits(),
            &[9]
        );
        assert_eq!(
            Natural::normalize([1u8, 10], Base::DECIMAL),
            Err(Error::DigitOutOfRange {
                index: 1,
                value: 10,
                base: 10
            })
        );
    }

    #[test]
    fn compare_examples() {
        assert_eq!(dec("162").compare(&dec("162")), Ok(Ordering::Equal));
        assert_eq!(dec("9").compare(&dec("10")), Ok(Ordering::Less));
        assert_eq!(dec("700000").compare(&dec("699678")), Ok(Ordering::Greater));
        let hex = Natural::parse("9", Base::HEX).unwrap();
        assert_eq!(
            dec("9").compare(&hex),
            Err(Error::BaseMismatch {
                left: 10,
                right: 16
            })
        );
    }

    #[test]
    fn machine_integer_examples() {
        assert_eq!(
            Natural::normalize([8u8, 3, 6, 8], Base::DECIMAL)
                .unwrap()
                .to_u128(),
            Ok(8638)
        );
        assert_eq!(Natural::zero(Base::new(7).unwrap()).to_u128(), Ok(0));
        assert_eq!(
            Natural::normalize([1u8, 1], Base::BINARY)
                .unwrap()
                .to_u128(),
            Ok(3)
        );
        assert_eq!(
            Natural::from_u128(u128::MAX, Base::DECIMAL).to_u128(),
            Ok(u128::MAX)
        );
        let too_big = Natural::parse(&"1".repeat(40), Base::DECIMAL).unwrap();
        assert_eq!(too_big.to_u128(), Err(Error::Overflow));
    }

    fn base_strategy() -> impl Strategy<Value = Base> {
        (2u32..=36).prop_map(|b| Base::new(b).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip_strips_leading_zeros(
            base in base_strategy(),
            raw in prop::collection::vec(0u32..36, 1..40),
            upper in any::<bool>(),
        ) {
            let text: String = raw
                .iter()
                .map(|v| glyph((v % base.get()) as u8))
                .map(|c| if upper { c.to_ascii_uppercase() } else { c })
                .collect();
            let n = Natural::parse(&text, base).unwrap();
            prop_assert!(n.is_canonical());
            let stripped = text.trim_start_matches('0').to_ascii_lowercase();
            let expected = if stripped.is_empty() { "0".to_string() } else { stripped };
            prop_assert_eq!(n.render(), expected);
        }

        #[test]
        fn compare_agrees_with_machine_order(base in base_strategy(), x in any::<u64>(), y in any::<u64>()) {
            let a = Natural::from_u128(x as u128, base);
            let b = Natural::from_u128(y as u128, base);
            prop_assert_eq!(a.compare(&b).unwrap(), x.cmp(&y));
            prop_assert_eq!(a.to_u128().unwrap(), x as u128);
        }
    }
}
