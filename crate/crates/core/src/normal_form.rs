//! Prefix normal forms, the prefix normal members of a factor-weight
//! equivalence class, and the classes themselves.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::measure::{ProjectedMeasure, WeightMeasure};
use crate::profile::WeightProfile;
use crate::word::{space_size, Word};

/// Default cap on materialised word sets.
pub const DEFAULT_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFormResult {
    /// The class of `word` has no prefix normal member: the factor-weight
    /// step at `index` matches no letter.
    NoneFound { word: Word, index: usize },
    /// Injective measure: exactly one prefix normal member.
    Unique(Word),
    /// Non-injective measure: every word choosing, at each position, a
    /// letter from the class of `projected` at that position.
    Multiple {
        projection: ProjectedMeasure,
        projected: Word,
        count: BigUint,
    },
}

impl NormalFormResult {
    pub fn count(&self) -> BigUint {
        match self {
            NormalFormResult::NoneFound { .. } => BigUint::ZERO,
            NormalFormResult::Unique(_) => BigUint::one(),
            NormalFormResult::Multiple { count, .. } => count.clone(),
        }
    }
}

/// Builds the prefix normal form letter by letter: position `i` takes a
/// letter whose weight carries `f(i-1)` to `f(i)`.
pub fn prefix_normal_form(measure: &WeightMeasure, w: &Word) -> NormalFormResult {
    let prof = WeightProfile::new(measure, w);
    if measure.is_injective() {
        let mut pnf = Vec::with_capacity(w.len());
        for i in 1..=w.len() {
            match prof.step_letters(measure, i).first() {
                Some(&a) => pnf.push(a),
                None => return NormalFormResult::NoneFound { word: w.clone(), index: i },
            }
        }
        return NormalFormResult::Unique(Word::new(pnf));
    }

    let projection = measure.project();
    let classes = projection.measure();
    let mut projected = Vec::with_capacity(w.len());
    let mut count = BigUint::one();
    for i in 1..=w.len() {
        // same factor weights as the projected word under the class measure
        match prof.step_letters(classes, i).first() {
            Some(&c) => {
                count *= projection.classes()[c].len();
                projected.push(c);
            }
            None => return NormalFormResult::NoneFound { word: w.clone(), index: i },
        }
    }
    NormalFormResult::Multiple {
        projection,
        projected: Word::new(projected),
        count,
    }
}

/// `|P_μ(w)|` without materialising the set.
pub fn count_pn(measure: &WeightMeasure, w: &Word) -> BigUint {
    prefix_normal_form(measure, w).count()
}

/// All prefix normal words factor-weight equivalent to `w`, in
/// lexicographic order. Fails if there are more than `limit`.
pub fn pn_set(measure: &WeightMeasure, w: &Word, limit: u64) -> Result<Vec<Word>> {
    match prefix_normal_form(measure, w) {
        NormalFormResult::NoneFound { .. } => Ok(Vec::new()),
        NormalFormResult::Unique(pnf) => Ok(vec![pnf]),
        NormalFormResult::Multiple {
            projection,
            projected,
            count,
        } => {
            if count.to_u64().is_none_or(|c| c > limit) {
                return Err(Error::CapacityExceeded {
                    count: count.to_string(),
                    limit,
                });
            }
            let choices: Vec<&[usize]> = projected
                .letters()
                .iter()
                .map(|&c| projection.classes()[c].as_slice())
                .collect();
            Ok(expand(&choices))
        }
    }
}

// Cartesian product in lexicographic order; class members are sorted.
fn expand(choices: &[&[usize]]) -> Vec<Word> {
    let mut out = vec![Vec::with_capacity(choices.len())];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                options.iter().map(move |&l| {
                    let mut next = prefix.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// Every word of length `|w|` with the same factor-weight function as `w`,
/// found by scanning `Σ^|w|`. Fails if the scan exceeds `limit` words.
pub fn equivalence_class(measure: &WeightMeasure, w: &Word, limit: u64) -> Result<Vec<Word>> {
    let space = space_size(measure.alphabet().len(), w.len());
    if space > limit as u128 {
        return Err(Error::CapacityExceeded {
            count: space.to_string(),
            limit,
        });
    }
    let target = WeightProfile::new(measure, w);
    Ok(measure
        .alphabet()
        .words_of_length(w.len())
        .filter(|v| WeightProfile::new(measure, v).factor() == target.factor())
        .collect())
}
