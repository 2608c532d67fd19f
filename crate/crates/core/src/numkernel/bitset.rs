//! Word-packed subset-sum reachability.

/// Membership flags for `0..=bound`: bit `t` is set when `t` is a sum of a
/// sub-multiset of the inserted terms. Bit 0 (the empty sum) is always set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SumBitset {
    bound: u64,
    words: Vec<u64>,
}

impl SumBitset {
    /// Only the empty sum.
    pub fn new(bound: u64) -> Self {
        let nwords = (bound / 64 + 1) as usize;
        let mut words = vec![0u64; nwords];
        words[0] = 1;
        Self { bound, words }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, t: u64) -> bool {
        t <= self.bound && self.words[(t / 64) as usize] >> (t % 64) & 1 == 1
    }

    /// Adds one sequence element: `bits |= bits << term`, in place.
    pub fn insert(&mut self, term: u64) {
        if term == 0 || term > self.bound {
            return;
        }
        let ws = (term / 64) as usize;
        let bs = (term % 64) as u32;
        let n = self.words.len();
        // Descending so every source word is read before it is overwritten.
        if bs == 0 {
            for w in (ws..n).rev() {
                self.words[w] |= self.words[w - ws];
            }
        } else {
            for w in (ws + 1..n).rev() {
                let add = self.words[w - ws] << bs | self.words[w - ws - 1] >> (64 - bs);
                self.words[w] |= add;
            }
            self.words[ws] |= self.words[0] << bs;
        }
        self.mask_tail();
    }

    /// Copy with a larger bound, reachable sums recomputed from `terms`.
    pub(crate) fn grown(&self, bound: u64, terms: &[u64]) -> Self {
        if bound <= self.bound {
            return self.clone();
        }
        let mut out = Self::new(bound);
        for &t in terms {
            out.insert(t);
        }
        out
    }

    fn mask_tail(&mut self) {
        let used = self.bound % 64 + 1;
        if used < 64 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << used) - 1;
        }
    }

    /// Number of set bits in `1..=bound` (the empty sum excluded).
    pub fn count_positive(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum::<u64>() - 1
    }

    /// Set values in ascending order, starting with 0.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i as u64 * 64;
            BitIter(w).map(move |b| base + b as u64)
        })
    }

    /// Smallest unset value in `from..=bound`.
    pub fn first_missing_from(&self, from: u64) -> Option<u64> {
        if from > self.bound {
            return None;
        }
        let mut w = (from / 64) as usize;
        let mut holes = !self.words[w] & (u64::MAX << (from % 64));
        loop {
            if holes != 0 {
                let t = w as u64 * 64 + holes.trailing_zeros() as u64;
                return (t <= self.bound).then_some(t);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            holes = !self.words[w];
        }
    }

    /// Largest unset value `<= bound`, if any.
    pub fn last_missing(&self) -> Option<u64> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            let base = i as u64 * 64;
            let valid = if base + 63 > self.bound {
                (1u64 << (self.bound - base + 1)) - 1
            } else {
                u64::MAX
            };
            let holes = !w & valid;
            if holes != 0 {
                return Some(base + 63 - holes.leading_zeros() as u64);
            }
        }
        None
    }

    /// True when every value in `lo..=hi` is set.
    pub fn all_set(&self, lo: u64, hi: u64) -> bool {
        hi <= self.bound && (lo..=hi).all(|t| self.contains(t))
    }
}

impl std::fmt::Debug for SumBitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SumBitset")
            .field("bound", &self.bound)
            .field("count", &(self.count_positive() + 1))
            .finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Subset sums of `terms` up to `bound`. Duplicates count as distinct
/// elements; terms above the bound are ignored.
pub fn reachable_sums(terms: &[u64], bound: u64) -> SumBitset {
    let mut bits = SumBitset::new(bound);
    for &t in terms {
        bits.insert(t);
    }
    bits
}
