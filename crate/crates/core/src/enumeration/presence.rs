use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};

/// Diagnostics gathered while building a presence set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PresenceStats {
    /// Configurations (or grid states) visited.
    pub states: u64,
    /// Nonpositive curvatures met; they never set bits.
    pub nonpositive: Vec<i64>,
}

/// The set of curvatures `1..=n` attained in a packing, one bit per integer.
/// Equality compares the bits only.
#[derive(Clone, Debug)]
pub struct CurvaturePresence {
    n: u64,
    words: Vec<u64>,
    pub stats: PresenceStats,
}

impl PartialEq for CurvaturePresence {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.words == o.words
    }
}

impl Eq for CurvaturePresence {}

fn word_count(n: u64) -> usize {
    n.div_ceil(64) as usize
}

impl CurvaturePresence {
    pub fn new(n: u64) -> Self {
        CurvaturePresence { n, words: vec![0; word_count(n)], stats: PresenceStats::default() }
    }

    /// Builds a set from raw words, rejecting stray bits above `n`.
    pub fn from_words(n: u64, words: Vec<u64>) -> Result<Self> {
        if words.len() != word_count(n) {
            return Err(Error::MalformedPresence);
        }
        if n % 64 != 0 {
            if let Some(&last) = words.last() {
                if last >> (n % 64) != 0 {
                    return Err(Error::MalformedPresence);
                }
            }
        }
        Ok(CurvaturePresence { n, words, stats: PresenceStats::default() })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, k: u64) -> bool {
        k >= 1 && k <= self.n && self.words[((k - 1) / 64) as usize] >> ((k - 1) % 64) & 1 == 1
    }

    /// Sets curvature `k`; values outside `1..=n` are ignored.
    pub fn insert(&mut self, k: i128) {
        if k >= 1 && k <= self.n as i128 {
            let i = (k - 1) as u64;
            self.words[(i / 64) as usize] |= 1 << (i % 64);
        }
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (1..=self.n).filter(move |&k| self.contains(k))
    }

    pub fn union_with(&mut self, o: &CurvaturePresence) -> Result<()> {
        if o.n != self.n {
            return Err(Error::Invalid(format!("presence bounds differ: {} vs {}", self.n, o.n)));
        }
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a |= b;
        }
        Ok(())
    }

    /// The same set cut down to `1..=m`.
    pub fn truncated(&self, m: u64) -> Self {
        let m = m.min(self.n);
        let mut out = CurvaturePresence::new(m);
        for k in self.iter().take_while(|&k| k <= m) {
            out.insert(k as i128);
        }
        out.stats = self.stats.clone();
        out
    }
}

/// Presence set shared between worker threads; bits are only ever set.
pub(crate) struct AtomicPresence {
    n: u64,
    words: Vec<AtomicU64>,
}

impl AtomicPresence {
    pub fn new(n: u64) -> Self {
        AtomicPresence { n, words: (0..word_count(n)).map(|_| AtomicU64::new(0)).collect() }
    }

    #[inline]
    pub fn insert(&self, k: i128) {
        if k >= 1 && k <= self.n as i128 {
            let i = (k - 1) as u64;
            let w = &self.words[(i / 64) as usize];
            let bit = 1u64 << (i % 64);
            if w.load(Ordering::Relaxed) & bit == 0 {
                w.fetch_or(bit, Ordering::Relaxed);
            }
        }
    }

    pub fn freeze(self) -> CurvaturePresence {
        let words = self.words.into_iter().map(AtomicU64::into_inner).collect();
        CurvaturePresence { n: self.n, words, stats: PresenceStats::default() }
    }
}
