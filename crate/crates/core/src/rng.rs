//! Minimal seeded PRNG (splitmix64) so that sampling stays deterministic
//! and identical across platforms.

use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// `k` distinct indices from `0..m` in ascending order (all of them
    /// when `k >= m`), via a partial Fisher-Yates shuffle.
    pub fn sample_indices(&mut self, m: usize, k: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (0..m).collect();
        let take = k.min(m);
        for i in 0..take {
            let j = i + self.below(m - i);
            pool.swap(i, j);
        }
        let mut out: Vec<usize> = pool[..take].to_vec();
        out.sort_unstable();
        out
    }
}
