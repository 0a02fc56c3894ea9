//! Seeded pseudo-random numbers for the instance generators.
//!
//! SplitMix64: tiny, full-period, and stable across platforms and releases,
//! which keeps seeded test corpora reproducible forever. Not for cryptography.

#[derive(Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound via rejection, so streams do not depend on bound
    /// bit-width quirks. bound must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        if bound == 1 {
            return 0;
        }
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }

    pub fn below_usize(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below_usize(i + 1);
            items.swap(i, j);
        }
    }

    /// k distinct values from 0..n, ascending.
    pub fn sample_ids(&mut self, n: usize, k: usize) -> alloc::vec::Vec<usize> {
        debug_assert!(k <= n);
        // Floyd's algorithm keeps the draw count at k.
        let mut chosen = crate::set::ElemSet::EMPTY;
        for j in n - k..n {
            let t = self.below_usize(j + 1);
            if chosen.contains(t) {
                chosen = chosen.insert(j);
            } else {
                chosen = chosen.insert(t);
            }
        }
        chosen.to_vec()
    }
}
