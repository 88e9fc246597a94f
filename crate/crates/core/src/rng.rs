//! Seeded randomness for fixtures.
//!
//! The stream is SplitMix64 (Steele, Lea, Flood 2014) seeded with the user
//! seed. Derived draws are fixed so other implementations can reproduce
//! fixtures exactly:
//!
//! * `below(n)` = high 64 bits of the 128-bit product `next_u64() * n`;
//! * `chance(p)` = `(next_u64() >> 11) * 2^-53 < p`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish draw from `0..n` (`n > 0`).
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Draw from `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }

    /// Fisher–Yates, drawing `below(i + 1)` for `i` from the top down.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }

    /// `k` distinct elements of `0..n`, sorted.
    pub fn sample(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..n).collect();
        self.shuffle(&mut all);
        all.truncate(k);
        all.sort_unstable();
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_value() {
        // First output of SplitMix64 seeded with 0.
        assert_eq!(Rng::new(0).next_u64(), 0xe220a8397b1dcdaf);
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = Rng::new(5);
        for n in 1..50 {
            assert!(r.below(n) < n);
        }
        assert_eq!(r.sample(10, 4).len(), 4);
    }
}
