//! Factor-weight and prefix-weight functions of a word, the position
//! functions built on them, and prefix normality.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::measure::WeightMeasure;
use crate::monoid::MonoidValue;
use crate::word::Word;

/// `factor[i]` is the maximum weight of a length-`i` factor and `prefix[i]`
/// the weight of the length-`i` prefix, for `i` in `0..=|w|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    word: Word,
    factor: Vec<MonoidValue>,
    prefix: Vec<MonoidValue>,
    witness: Vec<usize>,
}

impl WeightProfile {
    /// Quadratic scan over start positions with running combines. No
    /// inverses are needed, so every carrier is handled the same way.
    pub fn new(measure: &WeightMeasure, w: &Word) -> Self {
        let letters = w.letters();
        let n = letters.len();
        let identity = measure.identity();

        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(identity.clone());
        for &l in letters {
            let next = prefix[prefix.len() - 1].op(measure.base_weight(l));
            prefix.push(next);
        }

        let mut factor: Vec<Option<MonoidValue>> = vec![None; n + 1];
        factor[0] = Some(identity.clone());
        let mut witness = vec![0; n + 1];
        for start in 0..n {
            let mut acc = identity.clone();
            for (len, &l) in (1..).zip(&letters[start..]) {
                acc.op_assign(measure.base_weight(l));
                let better = factor[len].as_ref().is_none_or(|best| best.lt(&acc));
                if better {
                    factor[len] = Some(acc.clone());
                    witness[len] = start;
                }
            }
        }

        WeightProfile {
            word: w.clone(),
            factor: factor.into_iter().map(|f| f.expect("every length has a factor")).collect(),
            prefix,
            witness,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn factor(&self) -> &[MonoidValue] {
        &self.factor
    }

    pub fn prefix(&self) -> &[MonoidValue] {
        &self.prefix
    }

    /// Start offset of the leftmost length-`i` factor of maximum weight.
    pub fn factor_witness(&self, i: usize) -> usize {
        self.witness[i]
    }

    pub fn total(&self) -> &MonoidValue {
        &self.prefix[self.len()]
    }

    pub fn is_prefix_normal(&self) -> bool {
        self.prefix == self.factor
    }

    fn check_kind(&self, x: &MonoidValue) -> Result<()> {
        let kind = self.prefix[0].kind();
        if x.kind() != kind {
            return Err(Error::KindMismatch {
                left: kind,
                right: x.kind(),
            });
        }
        Ok(())
    }

    /// Largest `k` with `p[k] ⪯ x`.
    pub fn maxpos(&self, x: &MonoidValue) -> Result<usize> {
        self.check_kind(x)?;
        // p is strictly increasing and p[0] is the global minimum
        Ok(self.prefix.partition_point(|p| p.le(x)).max(1) - 1)
    }

    /// Smallest `k` with `p[k] ⪰ x`.
    pub fn minpos(&self, x: &MonoidValue) -> Result<usize> {
        self.check_kind(x)?;
        let k = self.prefix.partition_point(|p| p.lt(x));
        if k > self.len() {
            return Err(Error::OutOfRange {
                value: x.to_string(),
                total: self.total().to_string(),
            });
        }
        Ok(k)
    }

    /// Letters `a` with `f[i] = f[i-1] ∘ μ(a)`, for `i` in `1..=|w|`.
    pub fn step_letters(&self, measure: &WeightMeasure, i: usize) -> Vec<usize> {
        (0..measure.alphabet().len())
            .filter(|&a| self.factor[i - 1].op(measure.base_weight(a)) == self.factor[i])
            .collect()
    }

    /// First index whose factor-weight step no letter can fill.
    pub fn first_gap(&self, measure: &WeightMeasure) -> Option<usize> {
        (1..=self.len()).find(|&i| {
            measure
                .base_weights()
                .iter()
                .all(|wa| self.factor[i - 1].op(wa) != self.factor[i])
        })
    }
}

pub fn profile(measure: &WeightMeasure, w: &Word) -> WeightProfile {
    WeightProfile::new(measure, w)
}

pub fn is_prefix_normal(measure: &WeightMeasure, w: &Word) -> bool {
    WeightProfile::new(measure, w).is_prefix_normal()
}

/// The four equivalent characterisations of prefix normality, each
/// evaluated literally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PnCharacterizations {
    /// `p = f`.
    pub profiles_equal: bool,
    /// `p(j) ⪯ p(i) ∘ p(j-i)` for all `i < j`.
    pub prefix_subadditive: bool,
    /// `minpos(μ(v)) ≤ |v|` for every factor `v`.
    pub minpos_bounded: bool,
    /// `maxpos(a) + minpos(b) ≤ minpos(a ∘ b)` whenever `a ∘ b ⪯ μ(w)`,
    /// for `a`, `b` ranging over factor weights (including the identity).
    pub positions_superadditive: bool,
}

impl PnCharacterizations {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.profiles_equal,
            self.prefix_subadditive,
            self.minpos_bounded,
            self.positions_superadditive,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

pub fn pn_characterizations(measure: &WeightMeasure, w: &Word) -> PnCharacterizations {
    let prof = WeightProfile::new(measure, w);
    let p = prof.prefix();
    let n = prof.len();
    let letters = w.letters();

    let prefix_subadditive =
        (0..=n).all(|j| (0..j).all(|i| p[j].le(&p[i].op(&p[j - i]))));

    let mut factor_weights: Vec<(usize, MonoidValue)> = Vec::new();
    for start in 0..n {
        let mut acc = measure.identity();
        for (len, &l) in (1..).zip(&letters[start..]) {
            acc.op_assign(measure.base_weight(l));
            factor_weights.push((len, acc.clone()));
        }
    }
    let minpos_bounded = factor_weights
        .iter()
        .all(|(len, v)| prof.minpos(v).is_ok_and(|k| k <= *len));

    let mut seen = HashSet::new();
    let values: Vec<MonoidValue> = std::iter::once(measure.identity())
        .chain(factor_weights.iter().map(|(_, v)| v.clone()))
        .filter(|v| seen.insert(v.clone()))
        .collect();
    let total = prof.total();
    let positions_superadditive = values.iter().all(|a| {
        values.iter().all(|b| {
            let ab = a.op(b);
            if !ab.le(total) {
                return true;
            }
            let lhs = prof.maxpos(a).expect("same kind") + prof.minpos(b).expect("b ⪯ ab ⪯ total");
            lhs <= prof.minpos(&ab).expect("ab ⪯ total")
        })
    });

    PnCharacterizations {
        profiles_equal: prof.is_prefix_normal(),
        prefix_subadditive,
        minpos_bounded,
        positions_superadditive,
    }
}
