//! Seeded measure corpora for the sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measure::{decide_gapfree, WeightMeasure};
use crate::monoid::{MonoidKind, MonoidValue};
use crate::word::{Alphabet, Word};

const LETTERS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

#[derive(Debug, Clone)]
pub struct CorpusParams {
    pub min_letters: usize,
    pub max_letters: usize,
    /// Inclusive range of sum weights.
    pub sum_weights: (u64, u64),
    /// Inclusive range of product weights.
    pub product_weights: (u64, u64),
    /// Inclusive upper bound of each pair component.
    pub vec2_component_max: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            min_letters: 2,
            max_letters: 4,
            sum_weights: (1, 8),
            product_weights: (2, 13),
            vec2_component_max: 3,
        }
    }
}

impl CorpusParams {
    pub fn describe(&self) -> String {
        format!(
            "letters {}..={}, sum weights {}..={}, product weights {}..={}, pair components 0..={}",
            self.min_letters,
            self.max_letters,
            self.sum_weights.0,
            self.sum_weights.1,
            self.product_weights.0,
            self.product_weights.1,
            self.vec2_component_max
        )
    }
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn alphabet(size: usize) -> Alphabet {
    Alphabet::new(LETTERS[..size].iter().copied()).expect("distinct letters")
}

pub(crate) fn random_value(rng: &mut impl Rng, kind: MonoidKind, params: &CorpusParams) -> MonoidValue {
    match kind {
        MonoidKind::NatSum => {
            MonoidValue::nat_sum(rng.random_range(params.sum_weights.0..=params.sum_weights.1))
        }
        MonoidKind::NatProduct => {
            let n = rng.random_range(params.product_weights.0..=params.product_weights.1);
            MonoidValue::nat_product(n).expect("positive")
        }
        MonoidKind::Vec2LexSum => loop {
            let a = rng.random_range(0..=params.vec2_component_max);
            let b = rng.random_range(0..=params.vec2_component_max);
            if a + b > 0 {
                break MonoidValue::vec2(a, b);
            }
        },
    }
}

pub fn random_measure(rng: &mut impl Rng, params: &CorpusParams) -> WeightMeasure {
    let size = rng.random_range(params.min_letters..=params.max_letters);
    let kind = match rng.random_range(0..20) {
        0..=8 => MonoidKind::NatSum,
        9..=16 => MonoidKind::NatProduct,
        _ => MonoidKind::Vec2LexSum,
    };
    let weights = (0..size).map(|_| random_value(rng, kind, params)).collect();
    WeightMeasure::new(alphabet(size), kind, weights).expect("weights above identity")
}

pub fn random_word(rng: &mut impl Rng, size: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::new((0..len).map(|_| rng.random_range(0..size)).collect())
}

fn parse(spec: &str) -> WeightMeasure {
    WeightMeasure::parse(spec).expect("fixture parses")
}

/// Measures that appear as worked examples: the banana measure, the
/// non-injective and gapful examples, the stepped sum/product pair, a prime
/// measure and the lexicographic pair measure.
pub fn fixtures() -> Vec<WeightMeasure> {
    [
        "monoid = nat-sum; letters = a n b; weights = 1 2 3",
        "monoid = nat-sum; letters = a n c b; weights = 1 2 2 3",
        "monoid = nat-sum; letters = a n x; weights = 1 2 4",
        "monoid = nat-sum; letters = a n b x; weights = 1 2 3 4",
        "monoid = nat-sum; letters = a b c; weights = 1 3 4",
        "monoid = nat-sum; letters = a b c; weights = 1 2 4",
        "monoid = nat-sum; letters = a b c; weights = 2 4 6",
        "monoid = nat-product; letters = a b c; weights = 2 6 18",
        "monoid = nat-product; letters = a b c; weights = 2 3 5",
        "monoid = nat-sum; letters = 0 1; weights = 1 2",
        "monoid = vec2-lex; letters = a b c; weights = (0,2) (1,1) (2,0)",
    ]
    .into_iter()
    .map(parse)
    .collect()
}

/// Fixtures followed by `random` seeded random measures.
pub fn corpus(seed: u64, random: usize, params: &CorpusParams) -> Vec<WeightMeasure> {
    let mut rng = rng(seed, 1);
    let mut out = fixtures();
    out.extend((0..random).map(|_| random_measure(&mut rng, params)));
    out
}

/// Gapfree, injective, alphabetically ordered measures over the alphabet of
/// `size` letters: arithmetic sums, integer and rational geometric products,
/// stepped pairs, the lexicographic pair measure when `size == 3`, and
/// random measures that pass the gapfree decision after sorting.
pub fn ordered_gapfree_corpus(seed: u64, size: usize, random_tries: usize) -> Vec<WeightMeasure> {
    let sigma = alphabet(size);
    let mut out = Vec::new();
    let mut push = |kind: MonoidKind, weights: Vec<MonoidValue>| {
        let m = WeightMeasure::new(sigma.clone(), kind, weights).expect("valid");
        if !out.contains(&m) {
            out.push(m);
        }
    };
    let nat_sum = |v: u64| MonoidValue::nat_sum(v);
    let nat_product = |v: u64| MonoidValue::nat_product(v).expect("positive");
    let n = size as u32;

    for (start, step) in [(1, 1), (2, 2), (1, 3), (5, 2), (3, 7)] {
        push(MonoidKind::NatSum, (0..size as u64).map(|i| nat_sum(start + i * step)).collect());
    }
    for (start, ratio) in [(2u64, 2u64), (2, 3), (3, 5)] {
        push(MonoidKind::NatProduct, (0..n).map(|i| nat_product(start * ratio.pow(i))).collect());
    }
    // ratio p/q: q^(n-1) * (p/q)^i
    for (p, q) in [(3u64, 2u64), (5, 3)] {
        push(
            MonoidKind::NatProduct,
            (0..n).map(|i| nat_product(q.pow(n - 1 - i) * p.pow(i))).collect(),
        );
    }
    for ((a, b), (c, d)) in [((0, 1), (0, 1)), ((1, 5), (0, 2)), ((1, 0), (1, 3))] {
        push(
            MonoidKind::Vec2LexSum,
            (0..size as u64).map(|i| MonoidValue::vec2(a + i * c, b + i * d)).collect(),
        );
    }
    if size == 3 {
        push(
            MonoidKind::Vec2LexSum,
            vec![MonoidValue::vec2(0u32, 2u32), MonoidValue::vec2(1u32, 1u32), MonoidValue::vec2(2u32, 0u32)],
        );
    }

    let params = CorpusParams {
        min_letters: size,
        max_letters: size,
        ..CorpusParams::default()
    };
    let mut rng = rng(seed, 100 + size as u64);
    for _ in 0..random_tries {
        let m = random_measure(&mut rng, &params);
        let mut weights = m.base_weights().to_vec();
        weights.sort_by(|x, y| x.compare(y).expect("same kind"));
        weights.dedup();
        if weights.len() != size {
            continue;
        }
        let sorted = WeightMeasure::new(sigma.clone(), m.kind(), weights).expect("valid");
        if decide_gapfree(&sorted).is_gapfree() {
            push(sorted.kind(), sorted.base_weights().to_vec());
        }
    }
    out
}

/// Shuffled copy of a word, for randomised case generation.
pub fn shuffled(rng: &mut impl Rng, w: &Word) -> Word {
    let mut letters = w.letters().to_vec();
    letters.shuffle(rng);
    Word::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic() {
        let params = CorpusParams::default();
        assert_eq!(corpus(7, 50, &params), corpus(7, 50, &params));
        assert_ne!(corpus(7, 50, &params), corpus(8, 50, &params));
    }

    #[test]
    fn random_measures_respect_params() {
        let params = CorpusParams::default();
        for m in corpus(1, 300, &params).iter().skip(fixtures().len()) {
            assert!((2..=4).contains(&m.alphabet().len()));
            for w in m.base_weights() {
                assert!(!w.is_identity());
            }
        }
    }

    #[test]
    fn ordered_gapfree_corpus_members() {
        for size in 2..=4 {
            let ms = ordered_gapfree_corpus(3, size, 200);
            assert!(ms.len() >= 8, "size {size}: {}", ms.len());
            for m in &ms {
                assert!(m.is_injective() && m.is_alphabetically_ordered(), "{m:?}");
                assert!(decide_gapfree(m).is_gapfree(), "{m:?}");
            }
        }
    }
}
