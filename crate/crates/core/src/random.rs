//! Deterministic cross-platform random graphs.
//!
//! Corpora must be reproducible byte for byte from `(seed, n, p, index)`,
//! independently of platform, Rust version or any external RNG crate. The
//! generator is therefore pinned here in full:
//!
//! * stream derivation: fold the words `n`, `p_num`, `p_den`, `index` into
//!   the seed with one SplitMix64 step each (`state = splitmix64(state ^ w)`);
//! * bit stream: xoshiro256** seeded by four further SplitMix64 outputs;
//! * edge draws: pairs `(u, v)` ascending with `u < v`, one 64-bit draw per
//!   pair (drawn even for p in {0, 1}), edge present iff
//!   `draw * den < num << 64` in 128-bit arithmetic, an exact Bernoulli(p)
//!   with rational p and no floating point.

use core::fmt;

use crate::graph::Graph;

/// SplitMix64 step (Steele–Lea–Flood finaliser).
#[inline]
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// xoshiro256**, the xorshift-family generator behind all sampling.
#[derive(Clone, Debug)]
pub struct Xoshiro256StarStar {
    s: [u64; 4],
}

impl Xoshiro256StarStar {
    /// Seeds the four state words with consecutive SplitMix64 outputs, per
    /// the generator's reference seeding procedure.
    pub fn from_seed(seed: u64) -> Self {
        let mut acc = seed;
        let mut s = [0u64; 4];
        for w in s.iter_mut() {
            acc = acc.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = acc;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            *w = z ^ (z >> 31);
        }
        Xoshiro256StarStar { s }
    }

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

    /// Uniform draw in `0..bound` by rejection; `bound > 0`.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let r = self.next_u64();
            if r <= zone {
                return r % bound;
            }
        }
    }
}

/// Derives an independent stream seed from a base seed and context words.
pub fn stream_seed(seed: u64, words: &[u64]) -> u64 {
    let mut acc = seed;
    for &w in words {
        acc = splitmix64(acc ^ w);
    }
    acc
}

/// Edge probabilities outside `[0, 1]` (or with a zero denominator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidProbability {
    pub num: u64,
    pub den: u64,
}

impl fmt::Display for InvalidProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge probability {}/{} is not in [0, 1]", self.num, self.den)
    }
}

impl core::error::Error for InvalidProbability {}

/// The Erdős–Rényi sample `G(n, p)` for `p = num/den`, fully determined by
/// `(seed, n, p, index)`.
pub fn random_graph(
    n: usize,
    num: u64,
    den: u64,
    seed: u64,
    index: u64,
) -> Result<Graph, InvalidProbability> {
    if den == 0 || num > den {
        return Err(InvalidProbability { num, den });
    }
    let mut rng = Xoshiro256StarStar::from_seed(stream_seed(seed, &[n as u64, num, den, index]));
    let threshold = (num as u128) << 64;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let draw = rng.next_u64();
            if (draw as u128) * (den as u128) < threshold {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        let g = random_graph(6, 0, 1, 1, 0).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = random_graph(6, 1, 1, 1, 0).unwrap();
        assert!(g.is_complete());
        assert!(random_graph(6, 2, 1, 1, 0).is_err());
        assert!(random_graph(6, 1, 0, 1, 0).is_err());
    }

    #[test]
    fn same_inputs_same_graph() {
        let a = random_graph(12, 1, 2, 99, 7).unwrap();
        let b = random_graph(12, 1, 2, 99, 7).unwrap();
        assert_eq!(a, b);
        let c = random_graph(12, 1, 2, 99, 8).unwrap();
        assert_ne!(a, c); // distinct indices give distinct streams
    }

    #[test]
    fn pinned_sample_for_cross_platform_reproducibility() {
        // Frozen at first implementation; a change here means the stream
        // derivation or the generator itself changed.
        let g = random_graph(8, 1, 2, 42, 0).unwrap();
        let g6 = crate::formats::format_graph6(&g).unwrap();
        assert_eq!(g6, "GRn]g{");
    }

    #[test]
    fn edge_frequency_is_sane() {
        // 1000 draws of a single potential edge at p = 1/2.
        let mut edges = 0;
        for index in 0..1000 {
            if random_graph(2, 1, 2, 5, index).unwrap().edge_count() == 1 {
                edges += 1;
            }
        }
        assert!((400..=600).contains(&edges), "got {edges} edges out of 1000");
    }

    #[test]
    fn next_below_is_in_range() {
        let mut rng = Xoshiro256StarStar::from_seed(3);
        for bound in [1u64, 2, 3, 10, 1000] {
            for _ in 0..100 {
                assert!(rng.next_below(bound) < bound);
            }
        }
    }
}
