//! Word-packed bit vectors.
//!
//! The cut-method pair loop reduces to set-intersection cardinalities over
//! edge-id sets, so everything here is built around `u64` words and
//! `count_ones`.

/// Fixed-length bit vector over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

const WORD_BITS: usize = 64;

impl BitVec {
    /// All-zero bit vector of the given length.
    pub fn new(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, idx: usize) {
        assert!(idx < self.len, "bit index {idx} out of range {}", self.len);
        self.words[idx / WORD_BITS] |= 1u64 << (idx % WORD_BITS);
    }

    #[inline]
    pub fn get(&self, idx: usize) -> bool {
        assert!(idx < self.len, "bit index {idx} out of range {}", self.len);
        self.words[idx / WORD_BITS] >> (idx % WORD_BITS) & 1 != 0
    }

    /// Number of set bits.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_count(&self, other: &BitVec) -> u64 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a & b).count_ones()))
            .sum()
    }

    /// Hamming distance: `|self Δ other|`.
    #[inline]
    pub fn xor_count(&self, other: &BitVec) -> u64 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum()
    }

    /// Raw word storage, little-endian bit order within each word.
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Half-open word range `[lo, hi)` spanning the nonzero words; `(0, 0)`
    /// for an empty set. Intersection sweeps clip to these bounds.
    pub(crate) fn word_support(&self) -> (usize, usize) {
        match self.words.iter().position(|&w| w != 0) {
            None => (0, 0),
            Some(lo) => (lo, self.words.iter().rposition(|&w| w != 0).unwrap() + 1),
        }
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }
}
