//! Betti-number bounds on the isotropy index.
//!
//! With `k` the rank of the kernel,
//! `(b1 + k·b2)/(b2 + 1) ≤ h ≤ (b1·b2 + k)/(b2 + 1)`, and when the pairing is
//! surjective `h ≤ k + 1/2 + sqrt((b1 − k − 1/2)² − 2·b2)`. The triple
//! (characteristic 2, `b1 = 1`, `k = 0`) only keeps the first upper bound.
//! All arithmetic is on integers.

use num_integer::Roots;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lo: u64,
    pub hi: u64,
    /// The characteristic-2 exception applied: only `h ≤ hi` is asserted.
    pub exception: bool,
    /// Value of the surjective bound when it was evaluated.
    pub surjective_hi: Option<u64>,
    /// The surjective bound was requested but its radicand is negative.
    pub radicand_negative: bool,
}

impl Bounds {
    /// Whether `h` is consistent with the bounds that are asserted.
    pub fn admits(&self, h: u64) -> bool {
        if self.exception {
            h <= self.hi
        } else {
            self.lo <= h && h <= self.hi
        }
    }
}

pub fn bounds(b1: u64, b2: u64, k: u64, char2: bool, surjective: bool) -> Result<Bounds> {
    if k > b1 {
        return Err(Error::InvalidArgument(format!("kernel rank {k} exceeds b1 = {b1}")));
    }
    let (b1w, b2w, kw) = (b1 as u128, b2 as u128, k as u128);
    let lo = (b1w + kw * b2w).div_ceil(b2w + 1) as u64;
    let hi = ((b1w * b2w + kw) / (b2w + 1)) as u64;
    let exception = char2 && b1 == 1 && k == 0;
    if exception {
        return Ok(Bounds { lo: 0, hi, exception, surjective_hi: None, radicand_negative: false });
    }
    let mut out = Bounds { lo, hi, exception, surjective_hi: None, radicand_negative: false };
    if surjective {
        // h − k − 1/2 ≤ sqrt(D)  ⇔  (2h − 2k − 1)² ≤ (2b1 − 2k − 1)² − 8·b2 for h > k
        let base = 2 * b1 as i128 - 2 * k as i128 - 1;
        let radicand = base * base - 8 * b2 as i128;
        if radicand < 0 {
            out.radicand_negative = true;
        } else {
            let s = (radicand as u128).sqrt();
            let surj = k + s.div_ceil(2) as u64;
            out.surjective_hi = Some(surj);
            out.hi = out.hi.min(surj);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Largest h ≤ b1 with h ≤ k + 1/2 + sqrt(D), by direct search on
    /// squared comparisons with rational offsets scaled by 4.
    fn surjective_oracle(b1: u64, b2: u64, k: u64) -> Option<u64> {
        let d4 = (2 * b1 as i64 - 2 * k as i64 - 1).pow(2) - 8 * b2 as i64;
        if d4 < 0 {
            return None;
        }
        (0..=b1 + 2).rev().find(|&h| {
            let lhs = 2 * h as i64 - 2 * k as i64 - 1;
            lhs <= 0 || lhs * lhs <= d4
        })
    }

    #[test]
    fn surfaces() {
        for g in 1..6 {
            let b = bounds(2 * g, 1, 0, false, false).unwrap();
            assert_eq!((b.lo, b.hi), (g, g));
            let s = bounds(2 * g, 1, 0, false, true).unwrap();
            assert_eq!(s.hi, g);
        }
    }

    #[test]
    fn tori_surjective() {
        for n in 2..8u64 {
            let b = bounds(n, n * (n - 1) / 2, 0, false, true).unwrap();
            assert_eq!(b.surjective_hi, Some(1));
            assert_eq!(b.hi, 1);
        }
    }

    #[test]
    fn rp3_exception() {
        let b = bounds(1, 1, 0, true, true).unwrap();
        assert!(b.exception);
        assert_eq!((b.lo, b.hi), (0, 0));
        assert!(b.admits(0));
    }

    #[test]
    fn surjective_matches_search() {
        for b1 in 0..9 {
            for k in 0..=b1 {
                for b2 in 0..12 {
                    let got = bounds(b1, b2, k, false, true).unwrap();
                    match surjective_oracle(b1, b2, k) {
                        None => assert!(got.radicand_negative),
                        Some(h) => assert_eq!(got.surjective_hi, Some(h), "b1={b1} b2={b2} k={k}"),
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_larger_than_b1_rejected() {
        assert!(bounds(1, 0, 2, false, false).is_err());
    }
}
