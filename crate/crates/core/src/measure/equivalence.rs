use std::cmp::Ordering;

use super::WeightMeasure;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    /// Same-length comparisons agree for all words up to `up_to` letters.
    /// This is a bounded check, not a proof of equivalence.
    Equivalent { up_to: usize },
    /// `left` and `right` have equal length and are ordered differently by
    /// the two measures. The pair is sorted by the second measure, then by
    /// the first.
    Inequivalent { left: Word, right: Word },
}

impl EquivalenceVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivalenceVerdict::Equivalent { .. })
    }
}

/// Checks, length by length up to `max_len`, that the two measures induce
/// the same ordered partition of `Σ^n`.
///
/// Words are sorted by the first measure; the partitions coincide iff every
/// adjacent pair compares the same way under the second measure.
pub fn measures_equivalent_bounded(
    m1: &WeightMeasure,
    m2: &WeightMeasure,
    max_len: usize,
) -> Result<EquivalenceVerdict> {
    if m1.alphabet() != m2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if max_len == 0 {
        return Err(Error::Usage("equivalence bound must be at least 1".into()));
    }
    for n in 1..=max_len {
        let mut rows: Vec<_> = m1
            .alphabet()
            .words_of_length(n)
            .map(|w| (m1.weight(&w), m2.weight(&w), w))
            .collect();
        rows.sort_by(|a, b| a.0.cmp_same(&b.0));
        for pair in rows.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let first = a.0.cmp_same(&b.0);
            let second = a.1.cmp_same(&b.1);
            if first != second {
                let a_first = match second {
                    Ordering::Equal => first != Ordering::Greater,
                    other => other == Ordering::Less,
                };
                let (left, right) = if a_first { (a, b) } else { (b, a) };
                return Ok(EquivalenceVerdict::Inequivalent {
                    left: left.2.clone(),
                    right: right.2.clone(),
                });
            }
        }
    }
    Ok(EquivalenceVerdict::Equivalent { up_to: max_len })
}
