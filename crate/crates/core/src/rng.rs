//! Deterministic pseudo-random generator used by the solver and the
//! instance generators.
//!
//! The generator is xoshiro256** seeded through splitmix64, both public
//! domain. Streams are a pure function of the 64-bit seed; identical
//! seeds give identical draws on every run and platform. Bounded draws
//! use rejection so they are exactly uniform.

/// xoshiro256** generator state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rng {
    state: [u64; 4],
}

impl Rng {
    /// Expands a 64-bit seed into the full state with splitmix64.
    pub fn seed_from(seed: u64) -> Self {
        let mut s = seed;
        let state = [splitmix64(&mut s), splitmix64(&mut s), splitmix64(&mut s), splitmix64(&mut s)];
        Rng { state }
    }

    /// Next 64 uniform bits.
    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform draw from `0..bound` by rejection (no modulo bias).
    ///
    /// Panics if `bound` is zero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        // Reject the first 2^64 mod bound values so every residue class
        // is hit by the same number of raw outputs.
        let reject_below = bound.wrapping_neg() % bound;
        loop {
            let raw = self.next_u64();
            if raw >= reject_below {
                return raw % bound;
            }
        }
    }

    /// Uniform element of a nonempty slice.
    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.next_below(items.len() as u64) as usize]
    }
}

/// Per-trial seed for batch drivers: a pure function of the master seed
/// and the trial index, so trials are reproducible in any order.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut s = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    splitmix64(&mut s)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
