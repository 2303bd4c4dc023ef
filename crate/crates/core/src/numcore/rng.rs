/// Seeded SplitMix64 stream.
///
/// State is a 64-bit counter advanced by the golden-ratio increment
/// `0x9E3779B97F4A7C15`; each output is the counter passed through the
/// SplitMix64 finalizer (xor-shift 30, multiply `0xBF58476D1CE4E5B9`,
/// xor-shift 27, multiply `0x94D049BB133111EB`, xor-shift 31). Only wrapping
/// integer arithmetic is used, so sequences are identical on every platform.
/// Not suitable for cryptography.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    state: u64,
}

impl RngStream {
    const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

    pub fn new(seed: u64) -> Self {
        Self { seed, state: seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(Self::GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)` built from the top 53 bits of the next output.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
