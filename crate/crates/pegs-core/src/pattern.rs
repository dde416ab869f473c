//! Ordinal patterns and their empirical distributions.
//!
//! An ordinal pattern records the rank order of an embedding vector as the
//! sequence `(k_1, .., k_m)` such that `v[k_1] <= v[k_2] <= .. <= v[k_m]`,
//! ties broken by ascending position. Internally a pattern is keyed by its
//! Lehmer code, an integer in `[0, m!)`, which stays inside 64 bits up to
//! `m = 12`; larger dimensions are rejected outright.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported embedding dimension (12! still fits in a u64 key).
pub const MAX_EMBEDDING_DIMENSION: usize = 12;

/// Largest supported delay; keeps window spans within safe integer
/// arithmetic at any dimension.
pub const MAX_DELAY: usize = 1_000_000_000;

const FACTORIAL: [u64; 13] = [
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600,
];

/// Embedding dimension `m` and delay `L` shared by every entropy metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntropyParams {
    m: usize,
    delay: usize,
}

impl EntropyParams {
    pub fn new(m: usize, delay: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid(format!(
                "embedding dimension must be >= 2, got {m}"
            )));
        }
        if m > MAX_EMBEDDING_DIMENSION {
            return Err(Error::invalid(format!(
                "embedding dimension must be <= {MAX_EMBEDDING_DIMENSION}, got {m} (m! would overflow the pattern key)"
            )));
        }
        if delay < 1 {
            return Err(Error::invalid("delay must be >= 1"));
        }
        if delay > MAX_DELAY {
            return Err(Error::invalid(format!(
                "delay must be <= {MAX_DELAY}, got {delay}"
            )));
        }
        Ok(EntropyParams { m, delay })
    }

    /// Embedding dimension `m`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Delay `L` between embedding entries.
    pub fn delay(&self) -> usize {
        self.delay
    }

    /// Number of samples an embedding vector spans: `(m - 1) * L + 1`.
    pub fn span(&self) -> usize {
        (self.m - 1) * self.delay + 1
    }
}

/// The rank sequence `(k_1, .., k_m)`, a permutation of `{1, .., m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrdinalPattern {
    ranks: Vec<u8>,
}

impl OrdinalPattern {
    /// Build from explicit 1-based ranks; must be a permutation of
    /// `{1, .., m}`.
    pub fn from_ranks(ranks: Vec<u8>) -> Result<Self> {
        let m = ranks.len();
        if !(2..=MAX_EMBEDDING_DIMENSION).contains(&m) {
            return Err(Error::invalid(format!(
                "pattern length must be in 2..={MAX_EMBEDDING_DIMENSION}, got {m}"
            )));
        }
        let mut seen = [false; MAX_EMBEDDING_DIMENSION + 1];
        for &k in &ranks {
            if k == 0 || k as usize > m || seen[k as usize] {
                return Err(Error::invalid(format!(
                    "ranks {ranks:?} are not a permutation of 1..={m}"
                )));
            }
            seen[k as usize] = true;
        }
        Ok(OrdinalPattern { ranks })
    }

    /// Decode a Lehmer code back into the rank sequence.
    pub fn from_lehmer(code: u64, m: usize) -> Result<Self> {
        if !(2..=MAX_EMBEDDING_DIMENSION).contains(&m) {
            return Err(Error::invalid(format!(
                "pattern length must be in 2..={MAX_EMBEDDING_DIMENSION}, got {m}"
            )));
        }
        if code >= FACTORIAL[m] {
            return Err(Error::invalid(format!(
                "Lehmer code {code} out of range for m = {m}"
            )));
        }
        let mut remaining: Vec<u8> = (1..=m as u8).collect();
        let mut ranks = Vec::with_capacity(m);
        let mut rest = code;
        for j in 0..m {
            let base = FACTORIAL[m - 1 - j];
            let d = (rest / base) as usize;
            rest %= base;
            ranks.push(remaining.remove(d));
        }
        Ok(OrdinalPattern { ranks })
    }

    /// The 1-based ranks `(k_1, .., k_m)`.
    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    pub fn dimension(&self) -> usize {
        self.ranks.len()
    }

    /// Lehmer code: the index of this permutation in lexicographic order,
    /// in `[0, m!)`.
    pub fn lehmer_code(&self) -> u64 {
        let m = self.ranks.len();
        let mut code = 0u64;
        for j in 0..m {
            let smaller_later = self.ranks[j + 1..]
                .iter()
                .filter(|&&l| l < self.ranks[j])
                .count() as u64;
            code += smaller_later * FACTORIAL[m - 1 - j];
        }
        code
    }
}

impl fmt::Display for OrdinalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.ranks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Map an embedding vector to its ordinal pattern.
///
/// Returns `(k_1, .., k_m)` with `v[k_1] <= .. <= v[k_m]`; equal values are
/// ordered by ascending position, so e.g. `(5, 5)` maps to `(1, 2)`.
///
/// ```
/// use pegs_core::ordinal_pattern;
///
/// assert_eq!(ordinal_pattern(&[0.2, 0.7, 0.1])?.ranks(), &[3, 1, 2]);
/// # Ok::<(), pegs_core::Error>(())
/// ```
pub fn ordinal_pattern(v: &[f64]) -> Result<OrdinalPattern> {
    let m = v.len();
    if !(2..=MAX_EMBEDDING_DIMENSION).contains(&m) {
        return Err(Error::invalid(format!(
            "embedding vector length must be in 2..={MAX_EMBEDDING_DIMENSION}, got {m}"
        )));
    }
    if let Some(i) = v.iter().position(|x| !x.is_finite()) {
        return Err(Error::invalid(format!(
            "embedding vector has a non-finite entry at position {i}"
        )));
    }
    let mut idx = [0u8; MAX_EMBEDDING_DIMENSION];
    let key = pattern_key(v, &mut idx[..m]);
    OrdinalPattern::from_lehmer(key, m)
}

/// Sort positions stably by value and return the Lehmer code of the
/// resulting rank sequence. `idx` is scratch of length `v.len()`.
pub(crate) fn pattern_key(v: &[f64], idx: &mut [u8]) -> u64 {
    let m = v.len();
    debug_assert!(idx.len() == m);
    for (j, slot) in idx.iter_mut().enumerate() {
        *slot = j as u8;
    }
    // Stable insertion sort: an element moves left only past strictly
    // larger values, so equal values keep ascending position order.
    for j in 1..m {
        let cur = idx[j];
        let val = v[cur as usize];
        let mut k = j;
        while k > 0 && val < v[idx[k - 1] as usize] {
            idx[k] = idx[k - 1];
            k -= 1;
        }
        idx[k] = cur;
    }
    let mut code = 0u64;
    for j in 0..m {
        let smaller_later = idx[j + 1..].iter().filter(|&&l| l < idx[j]).count() as u64;
        code += smaller_later * FACTORIAL[m - 1 - j];
    }
    code
}

/// Empirical counts over the `m!` possible patterns of one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternDistribution {
    m: usize,
    counts: BTreeMap<u64, u64>,
    total: u64,
}

impl PatternDistribution {
    pub fn new(m: usize) -> Result<Self> {
        if !(2..=MAX_EMBEDDING_DIMENSION).contains(&m) {
            return Err(Error::invalid(format!(
                "pattern dimension must be in 2..={MAX_EMBEDDING_DIMENSION}, got {m}"
            )));
        }
        Ok(PatternDistribution {
            m,
            counts: BTreeMap::new(),
            total: 0,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Record one occurrence of `pattern`.
    pub fn add(&mut self, pattern: &OrdinalPattern) -> Result<()> {
        if pattern.dimension() != self.m {
            return Err(Error::invalid(format!(
                "pattern dimension {} does not match distribution dimension {}",
                pattern.dimension(),
                self.m
            )));
        }
        self.add_key(pattern.lehmer_code());
        Ok(())
    }

    pub(crate) fn add_key(&mut self, key: u64) {
        *self.counts.entry(key).or_insert(0) += 1;
        self.total += 1;
    }

    /// Total number of recorded patterns.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct patterns observed (at most `m!`).
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn count_of(&self, pattern: &OrdinalPattern) -> u64 {
        self.counts
            .get(&pattern.lehmer_code())
            .copied()
            .unwrap_or(0)
    }

    /// Iterate `(pattern, count)` in Lehmer-code (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (OrdinalPattern, u64)> + '_ {
        self.counts.iter().map(move |(&key, &count)| {
            let pattern = OrdinalPattern::from_lehmer(key, self.m)
                .expect("stored keys are valid by construction");
            (pattern, count)
        })
    }

    /// Fold counts of `other` into `self`; dimensions must match.
    pub fn merge(&mut self, other: &PatternDistribution) -> Result<()> {
        if other.m != self.m {
            return Err(Error::invalid(format!(
                "cannot merge distributions of dimension {} and {}",
                other.m, self.m
            )));
        }
        for (&key, &count) in &other.counts {
            *self.counts.entry(key).or_insert(0) += count;
        }
        self.total += other.total;
        Ok(())
    }
}

/// Normalized Shannon entropy of a pattern distribution:
/// `-(1/ln(m!)) * sum p ln p`, with `0 ln 0 = 0`, clamped to `[0, 1]`
/// against round-off.
pub fn normalized_shannon(dist: &PatternDistribution) -> Result<f64> {
    if dist.total == 0 {
        return Err(Error::invalid(
            "cannot compute entropy of an empty pattern distribution",
        ));
    }
    let total = dist.total as f64;
    let mut h = 0.0;
    for &count in dist.counts.values() {
        if count > 0 {
            let p = count as f64 / total;
            h -= p * p.ln();
        }
    }
    let ln_m_factorial: f64 = (2..=dist.m).map(|i| (i as f64).ln()).sum();
    Ok((h / ln_m_factorial).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_increasing_is_identity_pattern() {
        let p = ordinal_pattern(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(p.ranks(), &[1, 2, 3]);
        assert_eq!(p.lehmer_code(), 0);
    }

    #[test]
    fn ties_order_by_position() {
        let p = ordinal_pattern(&[5.0, 5.0]).unwrap();
        assert_eq!(p.ranks(), &[1, 2]);
        let q = ordinal_pattern(&[7.0, 7.0, 7.0, 1.0]).unwrap();
        assert_eq!(q.ranks(), &[4, 1, 2, 3]);
    }

    #[test]
    fn mixed_values_sort_by_rank() {
        let p = ordinal_pattern(&[0.2, 0.7, 0.1]).unwrap();
        assert_eq!(p.ranks(), &[3, 1, 2]);
    }

    #[test]
    fn rejects_non_finite_and_bad_lengths() {
        assert!(ordinal_pattern(&[1.0, f64::NAN]).is_err());
        assert!(ordinal_pattern(&[1.0, f64::INFINITY]).is_err());
        assert!(ordinal_pattern(&[1.0]).is_err());
        assert!(ordinal_pattern(&[0.0; 13]).is_err());
    }

    #[test]
    fn params_enforce_dimension_and_delay_bounds() {
        assert!(EntropyParams::new(1, 1).is_err());
        assert!(EntropyParams::new(13, 1).is_err());
        assert!(EntropyParams::new(3, 0).is_err());
        assert!(EntropyParams::new(3, MAX_DELAY + 1).is_err());
        let p = EntropyParams::new(12, MAX_DELAY).unwrap();
        assert_eq!(p.span(), 11 * MAX_DELAY + 1);
    }

    #[test]
    fn lehmer_roundtrip_all_m4_permutations() {
        for code in 0..24 {
            let p = OrdinalPattern::from_lehmer(code, 4).unwrap();
            assert_eq!(p.lehmer_code(), code);
        }
        // Lexicographic extremes.
        assert_eq!(
            OrdinalPattern::from_lehmer(0, 5).unwrap().ranks(),
            &[1, 2, 3, 4, 5]
        );
        assert_eq!(
            OrdinalPattern::from_lehmer(119, 5).unwrap().ranks(),
            &[5, 4, 3, 2, 1]
        );
        assert!(OrdinalPattern::from_lehmer(24, 4).is_err());
    }

    #[test]
    fn from_ranks_validates_permutation() {
        assert!(OrdinalPattern::from_ranks(vec![2, 1, 3]).is_ok());
        assert!(OrdinalPattern::from_ranks(vec![1, 1, 3]).is_err());
        assert!(OrdinalPattern::from_ranks(vec![0, 1]).is_err());
        assert!(OrdinalPattern::from_ranks(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn display_renders_rank_tuple() {
        let p = ordinal_pattern(&[0.2, 0.7, 0.1]).unwrap();
        assert_eq!(p.to_string(), "(3,1,2)");
    }

    #[test]
    fn degenerate_distribution_has_zero_entropy() {
        let mut d = PatternDistribution::new(3).unwrap();
        let p = ordinal_pattern(&[1.0, 2.0, 3.0]).unwrap();
        for _ in 0..17 {
            d.add(&p).unwrap();
        }
        assert_eq!(normalized_shannon(&d).unwrap(), 0.0);
    }

    #[test]
    fn uniform_two_pattern_distribution_has_unit_entropy() {
        let mut d = PatternDistribution::new(2).unwrap();
        d.add(&OrdinalPattern::from_ranks(vec![1, 2]).unwrap())
            .unwrap();
        d.add(&OrdinalPattern::from_ranks(vec![2, 1]).unwrap())
            .unwrap();
        assert_eq!(normalized_shannon(&d).unwrap(), 1.0);
    }

    #[test]
    fn skewed_two_pattern_distribution() {
        // -(0.75 ln 0.75 + 0.25 ln 0.25) / ln 2.
        let mut d = PatternDistribution::new(2).unwrap();
        let up = OrdinalPattern::from_ranks(vec![1, 2]).unwrap();
        let down = OrdinalPattern::from_ranks(vec![2, 1]).unwrap();
        for _ in 0..3 {
            d.add(&up).unwrap();
        }
        d.add(&down).unwrap();
        let h = normalized_shannon(&d).unwrap();
        assert!((h - 0.8113).abs() < 1e-4, "got {h}");
        assert_eq!(d.total(), 4);
        assert_eq!(d.distinct(), 2);
        assert_eq!(d.count_of(&up), 3);
    }

    #[test]
    fn empty_distribution_is_an_error() {
        let d = PatternDistribution::new(2).unwrap();
        assert!(normalized_shannon(&d).is_err());
    }

    #[test]
    fn add_checks_dimension() {
        let mut d = PatternDistribution::new(3).unwrap();
        let p = ordinal_pattern(&[1.0, 0.0]).unwrap();
        assert!(d.add(&p).is_err());
    }

    #[test]
    fn merge_pools_counts() {
        let mut a = PatternDistribution::new(2).unwrap();
        let mut b = PatternDistribution::new(2).unwrap();
        let up = OrdinalPattern::from_ranks(vec![1, 2]).unwrap();
        a.add(&up).unwrap();
        b.add(&up).unwrap();
        a.merge(&b).unwrap();
        assert_eq!(a.total(), 2);
        assert_eq!(a.count_of(&up), 2);
    }
}
