//! Deterministic pseudo-random number generation.
//!
//! Simulations must be bit-exact across platforms and across worker counts,
//! so the generator is pinned here rather than taken from an external crate:
//!
//! * **splitmix64** expands a 64-bit seed into generator state. One update
//!   step is `z = (s += 0x9e3779b97f4a7c15); z = (z ^ (z >> 30)) *
//!   0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//!   return z ^ (z >> 31)`.
//! * **xoshiro256\*\*** (of the xorshift family) produces the stream. State
//!   is four 64-bit words seeded by four splitmix64 outputs; one step is
//!   `result = rotl(s1 * 5, 7) * 9` followed by the xor-shift state update
//!   with constants (17, 45).
//! * Trial `i` of a batch with master seed `m` uses the derived seed
//!   `splitmix64_mix(m ^ (i + 1) * 0x9e3779b97f4a7c15)`, so results do not
//!   depend on how trials are partitioned across workers.
//!
//! Floats in `[0, 1)` take the top 53 bits of one output word.

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// One splitmix64 output for the given state value (state update is the
/// caller's `wrapping_add` of [`GOLDEN_GAMMA`]).
#[inline]
fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// splitmix64 stream, used only to seed [`Xoshiro256StarStar`].
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        splitmix64_mix(self.state)
    }
}

/// xoshiro256** generator.
#[derive(Debug, Clone)]
pub struct Xoshiro256StarStar {
    s: [u64; 4],
}

impl Xoshiro256StarStar {
    /// Seeds the four state words from a splitmix64 stream, per the
    /// generator authors' recommendation.
    pub fn seed_from_u64(seed: u64) -> Self {
        let mut sm = SplitMix64::new(seed);
        let s = [sm.next_u64(), sm.next_u64(), sm.next_u64(), sm.next_u64()];
        Self { s }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let result = self.s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Uniform double in `[0, 1)` from the top 53 bits of one output.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)` by rejection, bias-free.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }
}

/// Derives the seed for trial `index` from the batch's master seed.
///
/// The derivation is a pure function of `(master_seed, index)`; partitioning
/// trials across any number of workers yields identical streams.
pub fn trial_seed(master_seed: u64, index: u64) -> u64 {
    splitmix64_mix(master_seed ^ index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA))
}
