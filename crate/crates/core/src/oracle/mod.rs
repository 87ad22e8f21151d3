//! Definition-level reference implementations and verification sweeps.
//!
//! Everything here is computed the slow, literal way so it can serve as
//! ground truth for the fast paths in the rest of the crate.

pub mod corpus;
mod report;
mod suites;

pub use report::{Counterexample, SweepReport};
pub use suites::{verify_suite, SuiteConfig, SUITES};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::measure::{decide_gapfree, WeightMeasure};
use crate::monoid::{self, MonoidKind, MonoidValue};
use crate::normal_form::{count_pn, pn_set, DEFAULT_LIMIT};
use crate::profile::WeightProfile;
use crate::word::{Alphabet, Word};

/// Default largest length accepted by [`count_binary_pn`].
pub const BINARY_PN_BOUND: usize = 16;

fn max_value(values: impl IntoIterator<Item = MonoidValue>) -> Option<MonoidValue> {
    values.into_iter().reduce(|a, b| if a.lt(&b) { b } else { a })
}

/// `p(i)` folded afresh from the length-`i` prefix, for `i` in `0..=|w|`.
pub fn naive_prefix_weights(measure: &WeightMeasure, w: &Word) -> Vec<MonoidValue> {
    let letters = w.letters();
    (0..=letters.len())
        .map(|i| monoid::fold(measure.kind(), letters[..i].iter().map(|&l| measure.base_weight(l))))
        .collect()
}

/// `f(i)` as the maximum over every length-`i` factor, each folded afresh.
pub fn naive_factor_weights(measure: &WeightMeasure, w: &Word) -> Vec<MonoidValue> {
    let letters = w.letters();
    let n = letters.len();
    (0..=n)
        .map(|i| {
            max_value((0..=n - i).map(|s| {
                monoid::fold(measure.kind(), letters[s..s + i].iter().map(|&l| measure.base_weight(l)))
            }))
            .expect("at least one factor")
        })
        .collect()
}

pub fn naive_is_prefix_normal(measure: &WeightMeasure, w: &Word) -> bool {
    naive_prefix_weights(measure, w) == naive_factor_weights(measure, w)
}

/// Largest number of ones in a length-`i` factor, for `i` in `0..=|w|`.
pub fn max_ones(bits: &[bool]) -> Vec<usize> {
    (0..=bits.len())
        .map(|i| match i {
            0 => 0,
            _ => bits.windows(i).map(ones).max().expect("i <= |w|"),
        })
        .collect()
}

/// Number of ones in the length-`i` prefix, for `i` in `0..=|w|`.
pub fn prefix_ones(bits: &[bool]) -> Vec<usize> {
    (0..=bits.len()).map(|i| ones(&bits[..i])).collect()
}

fn ones(bits: &[bool]) -> usize {
    bits.iter().filter(|&&b| b).count()
}

/// Binary prefix normality: no factor has more ones than the prefix of the
/// same length.
pub fn classical_is_prefix_normal(bits: &[bool]) -> bool {
    max_ones(bits) == prefix_ones(bits)
}

/// The measure `0 ↦ 1, 1 ↦ 2` over the alphabet `{0, 1}`.
pub fn binary_measure() -> WeightMeasure {
    WeightMeasure::new(
        Alphabet::from_chars("01").expect("two letters"),
        MonoidKind::NatSum,
        vec![MonoidValue::nat_sum(1u32), MonoidValue::nat_sum(2u32)],
    )
    .expect("positive weights")
}

fn bits_of(w: &Word) -> Vec<bool> {
    w.letters().iter().map(|&l| l == 1).collect()
}

pub fn count_binary_pn(n: usize) -> Result<u64> {
    count_binary_pn_with_bound(n, BINARY_PN_BOUND)
}

/// Number of words in `{0,1}^n` that are prefix normal under
/// [`binary_measure`].
pub fn count_binary_pn_with_bound(n: usize, bound: usize) -> Result<u64> {
    check_binary_bound(n, bound)?;
    let m = binary_measure();
    Ok(m.alphabet()
        .words_of_length(n)
        .filter(|w| WeightProfile::new(&m, w).is_prefix_normal())
        .count() as u64)
}

/// Same count with the classical ones-counting predicate.
pub fn classical_count_binary_pn(n: usize, bound: usize) -> Result<u64> {
    check_binary_bound(n, bound)?;
    let m = binary_measure();
    Ok(m.alphabet()
        .words_of_length(n)
        .filter(|w| classical_is_prefix_normal(&bits_of(w)))
        .count() as u64)
}

fn check_binary_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::CapacityExceeded {
            count: format!("2^{n}"),
            limit: 1u64 << bound.min(63),
        });
    }
    Ok(())
}

/// Factor and prefix weights of one enumerated word, grown one letter at a
/// time: appending a letter adds exactly the new suffixes as factors.
#[derive(Debug, Clone)]
pub struct WordState {
    pub word: Word,
    pub factor: Vec<MonoidValue>,
    pub prefix: Vec<MonoidValue>,
    suffix: Vec<MonoidValue>,
}

impl WordState {
    fn empty(measure: &WeightMeasure) -> Self {
        let e = measure.identity();
        WordState {
            word: Word::empty(),
            factor: vec![e.clone()],
            prefix: vec![e.clone()],
            suffix: vec![e],
        }
    }

    fn extend(&self, measure: &WeightMeasure, letter: usize) -> Self {
        let wa = measure.base_weight(letter);
        let mut suffix = Vec::with_capacity(self.suffix.len() + 1);
        suffix.push(measure.identity());
        suffix.extend(self.suffix.iter().map(|s| s.op(wa)));
        let mut factor: Vec<MonoidValue> = self
            .factor
            .iter()
            .zip(&suffix)
            .map(|(f, s)| if f.lt(s) { s.clone() } else { f.clone() })
            .collect();
        factor.push(suffix[suffix.len() - 1].clone());
        let mut prefix = self.prefix.clone();
        prefix.push(prefix[prefix.len() - 1].op(wa));
        let mut letters = self.word.letters().to_vec();
        letters.push(letter);
        WordState {
            word: Word::new(letters),
            factor,
            prefix,
            suffix,
        }
    }

    pub fn is_prefix_normal(&self) -> bool {
        self.prefix == self.factor
    }

    /// First index whose factor-weight step no base weight realises.
    pub fn gap(&self, measure: &WeightMeasure) -> Option<usize> {
        (1..self.factor.len()).find(|&i| {
            !measure
                .base_weights()
                .iter()
                .any(|wa| self.factor[i - 1].op(wa) == self.factor[i])
        })
    }
}

/// All words of each length `0..=max_len` in lexicographic order, with
/// their profiles. `levels[n]` holds `Σ^n`.
pub fn enumerate_levels(measure: &WeightMeasure, max_len: usize) -> Vec<Vec<WordState>> {
    let mut levels = vec![vec![WordState::empty(measure)]];
    for _ in 0..max_len {
        let next = levels[levels.len() - 1]
            .iter()
            .flat_map(|s| (0..measure.alphabet().len()).map(move |a| s.extend(measure, a)))
            .collect();
        levels.push(next);
    }
    levels
}

/// First gap over all words up to `max_len`, in order of length, then
/// lexicographic order, then index.
pub fn brute_force_gap_search(measure: &WeightMeasure, max_len: usize) -> Option<(Word, usize)> {
    let mut level = vec![WordState::empty(measure)];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|s| (0..measure.alphabet().len()).map(move |a| s.extend(measure, a)))
            .collect();
        if let Some((s, i)) = level.iter().find_map(|s| s.gap(measure).map(|i| (s, i))) {
            return Some((s.word.clone(), i));
        }
    }
    None
}

/// Prefix normal members of the factor-weight class of `w`, found by
/// filtering all of `Σ^|w|`.
pub fn brute_force_pn_set(measure: &WeightMeasure, w: &Word) -> Vec<Word> {
    let target = naive_factor_weights(measure, w);
    enumerate_levels(measure, w.len())
        .pop()
        .expect("level |w| exists")
        .into_iter()
        .filter(|s| s.factor == target && s.is_prefix_normal())
        .map(|s| s.word)
        .collect()
}

/// One factor-weight class of `Σ^n`: its members and its prefix normal
/// members, both in lexicographic order.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    pub members: Vec<Word>,
    pub prefix_normal: Vec<Word>,
}

/// Partitions `Σ^n` into factor-weight classes, listed by first member.
pub fn classes_of_length(level: Vec<WordState>) -> Vec<ClassGroup> {
    let mut index: HashMap<Vec<MonoidValue>, usize> = HashMap::new();
    let mut groups: Vec<ClassGroup> = Vec::new();
    for s in level {
        let pn = s.is_prefix_normal();
        let g = *index.entry(s.factor).or_insert_with(|| {
            groups.push(ClassGroup {
                members: Vec::new(),
                prefix_normal: Vec::new(),
            });
            groups.len() - 1
        });
        if pn {
            groups[g].prefix_normal.push(s.word.clone());
        }
        groups[g].members.push(s.word);
    }
    groups
}

/// Checks the trichotomy on every word up to `max_len`: prefix normal sets
/// are singletons for gapfree injective measures, some are empty for gapful
/// measures and some are larger for non-injective ones. Also checks that
/// the fast normal-form paths agree with the brute-force sets.
pub fn verify_trichotomy(measure: &WeightMeasure, max_len: usize) -> SweepReport {
    let mut report = SweepReport::new(
        "trichotomy",
        format!("measure {}, word length 0..={max_len}", measure.to_inline_spec()),
    );
    let (cases, violations) = trichotomy_cases(measure, max_len);
    report.absorb(cases, violations);
    report.finish()
}

pub(crate) fn trichotomy_cases(measure: &WeightMeasure, max_len: usize) -> (u64, Vec<Counterexample>) {
    let gapfree = decide_gapfree(measure).is_gapfree();
    let injective = measure.is_injective();
    let mut violations = Vec::new();
    let mut cases = 0;
    let mut saw_empty = false;
    let mut saw_many = false;
    let mut first_word = None;
    let mut bad = |w: &Word, detail: String| violations.push(Counterexample::new(measure, w, detail));

    for level in enumerate_levels(measure, max_len) {
        for class in classes_of_length(level) {
            let brute = class.prefix_normal.len();
            saw_empty |= brute == 0;
            saw_many |= brute > 1;
            if first_word.is_none() {
                first_word = class.members.first().cloned();
            }
            if gapfree && injective && brute != 1 {
                bad(&class.members[0], format!("gapfree injective measure but {brute} prefix normal words"));
            }
            if injective && brute > 1 {
                bad(&class.members[0], format!("injective measure but {brute} prefix normal words"));
            }
            if gapfree && brute == 0 {
                bad(&class.members[0], "gapfree measure but no prefix normal word".into());
            }
            if (brute == 0) != WeightProfile::new(measure, &class.members[0]).first_gap(measure).is_some() {
                bad(&class.members[0], "empty prefix normal set disagrees with gap detection".into());
            }
            let fast = pn_set(measure, &class.members[0], DEFAULT_LIMIT);
            if fast.as_deref() != Ok(class.prefix_normal.as_slice()) {
                bad(&class.members[0], format!("pn_set {fast:?} differs from brute force"));
            }
            for w in &class.members {
                cases += 1;
                if count_pn(measure, w) != brute.into() {
                    bad(w, format!("count_pn differs from brute-force count {brute}"));
                }
            }
        }
    }
    let anchor = first_word.unwrap_or_else(Word::empty);
    if !gapfree && max_len >= 4 && !saw_empty {
        bad(&anchor, "gapful measure but every prefix normal set is non-empty".into());
    }
    if !injective && max_len >= 1 && !saw_many {
        bad(&anchor, "non-injective measure but every prefix normal set has at most one word".into());
    }
    (cases, violations)
}
