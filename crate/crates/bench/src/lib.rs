//! Deterministic operand fixtures shared by the criterion benchmarks.

use incmul::oracle::SplitMix64;
use incmul::{Base, Natural};

/// Digit lengths the benchmarks sweep over.
pub const SIZES: &[usize] = &[4, 16, 64, 256];

fn draw(rng: &mut SplitMix64, len: usize, base: Base) -> Natural {
    let radix = base.get() as u64;
    let mut digits: Vec<u8> = (1..len).map(|_| rng.below(radix) as u8).collect();
    digits.push(1 + rng.below(radix - 1) as u8);
    Natural::normalize(digits, base).expect("digits below base")
}

/// A fixed pair of operands with exactly `len` digits each.
pub fn operands(len: usize, base: Base) -> (Natural, Natural) {
    let mut rng = SplitMix64::new(len as u64 ^ (base.get() as u64) << 32);
    (draw(&mut rng, len, base), draw(&mut rng, len, base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_requested_length() {
        for &len in SIZES {
            for base in [Base::BINARY, Base::DECIMAL, Base::new(36).unwrap()] {
                let (a, b) = operands(len, base);
                assert_eq!((a.len(), b.len()), (len, len));
                assert_eq!(operands(len, base), (a, b));
            }
        }
    }
}
