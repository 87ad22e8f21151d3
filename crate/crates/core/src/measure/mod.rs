//! Weight measures: morphisms from words into an ordered monoid, fixed by
//! one base weight per letter.

mod equivalence;
mod gap;
mod projection;
mod spec_file;

pub use equivalence::{measures_equivalent_bounded, EquivalenceVerdict};
pub use gap::{classify, decide_gapfree, gap_at, GapVerdict, MeasureClassification};
pub use projection::ProjectedMeasure;


use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monoid::{self, MonoidKind, MonoidValue};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMeasure {
    alphabet: Alphabet,
    kind: MonoidKind,
    weights: Vec<MonoidValue>,
}

impl WeightMeasure {
    /// Validates one weight per letter, each of the measure's kind and
    /// strictly above the identity.
    pub fn new(alphabet: Alphabet, kind: MonoidKind, weights: Vec<MonoidValue>) -> Result<Self> {
        if weights.len() != alphabet.len() {
            return Err(Error::ArityMismatch {
                letters: alphabet.len(),
                weights: weights.len(),
            });
        }
        for (token, w) in alphabet.letters().iter().zip(&weights) {
            if w.kind() != kind {
                return Err(Error::KindMismatch {
                    left: kind,
                    right: w.kind(),
                });
            }
            if w.is_identity() {
                return Err(Error::IncreasingPropertyViolation {
                    letter: token.clone(),
                    value: w.to_string(),
                });
            }
        }
        Ok(WeightMeasure {
            alphabet,
            kind,
            weights,
        })
    }

    /// Shorthand for a natural measure over single-character letters.
    ///
    /// ```
    /// use wpn_core::{MonoidKind, WeightMeasure};
    /// let mu = WeightMeasure::naturals("anb", MonoidKind::NatSum, &[1, 2, 3]).unwrap();
    /// assert_eq!(mu.weight(&mu.alphabet().parse_word("banana").unwrap()).to_string(), "10");
    /// ```
    pub fn naturals(letters: &str, kind: MonoidKind, weights: &[u64]) -> Result<Self> {
        let alphabet = Alphabet::from_chars(letters)?;
        let weights = weights
            .iter()
            .map(|&n| match kind {
                MonoidKind::NatSum => Ok(MonoidValue::nat_sum(n)),
                MonoidKind::NatProduct => MonoidValue::nat_product(n),
                MonoidKind::Vec2LexSum => Err(Error::Usage("pairs needed for vec2-lex".into())),
            })
            .collect::<Result<_>>()?;
        WeightMeasure::new(alphabet, kind, weights)
    }

    /// Sum measure assigning weight `i` to the `i`-th letter.
    pub fn standard(alphabet: Alphabet) -> Self {
        let weights = (1..=alphabet.len() as u64).map(MonoidValue::nat_sum).collect();
        WeightMeasure {
            alphabet,
            kind: MonoidKind::NatSum,
            weights,
        }
    }

    /// Sum measure with weight 2 on the letters of `x_set` and 1 elsewhere;
    /// prefix normality under it coincides with `x_set`-prefix normality.
    pub fn subset<S: AsRef<str>>(alphabet: Alphabet, x_set: &[S]) -> Result<Self> {
        let mut weights = vec![MonoidValue::nat_sum(1u32); alphabet.len()];
        for token in x_set {
            let token = token.as_ref();
            let i = alphabet
                .index_of(token)
                .ok_or_else(|| Error::UnknownLetter(token.to_string()))?;
            weights[i] = MonoidValue::nat_sum(2u32);
        }
        Ok(WeightMeasure {
            alphabet,
            kind: MonoidKind::NatSum,
            weights,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> MonoidKind {
        self.kind
    }

    pub fn base_weights(&self) -> &[MonoidValue] {
        &self.weights
    }

    pub fn base_weight(&self, letter: usize) -> &MonoidValue {
        &self.weights[letter]
    }

    pub fn identity(&self) -> MonoidValue {
        self.kind.identity()
    }

    pub fn weight(&self, w: &Word) -> MonoidValue {
        monoid::fold(self.kind, w.letters().iter().map(|&l| &self.weights[l]))
    }

    /// Checks that every letter of `w` belongs to this measure's alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&l| l >= self.alphabet.len()) {
            Some(l) => Err(Error::UnknownLetter(format!("#{l}"))),
            None => Ok(()),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.distinct_weights().len() == self.weights.len()
    }

    /// Non-decreasing weights along the alphabet order.
    pub fn is_alphabetically_ordered(&self) -> bool {
        self.weights.windows(2).all(|p| p[0].le(&p[1]))
    }

    /// The distinct base weights, ascending.
    pub fn distinct_weights(&self) -> Vec<MonoidValue> {
        let mut ws = self.weights.clone();
        ws.sort_by(MonoidValue::cmp_same);
        ws.dedup();
        ws
    }

    pub fn is_unary(&self) -> bool {
        self.distinct_weights().len() == 1
    }

    pub fn is_binary(&self) -> bool {
        self.distinct_weights().len() == 2
    }

    /// Product measure whose base weights are all prime.
    pub fn is_prime(&self) -> bool {
        self.kind == MonoidKind::NatProduct
            && self.weights.iter().all(|w| w.as_nat().is_some_and(is_prime))
    }

    /// The step `s` such that the sorted distinct base weights are
    /// `m, m∘s, m∘s∘s, ...` from the minimum `m`, if one exists in the
    /// carrier. A single distinct weight is stepped with the identity step.
    pub fn stepped(&self) -> Option<MonoidValue> {
        let ws = self.distinct_weights();
        if ws.len() == 1 {
            return Some(self.identity());
        }
        let step = ws[0].residual(&ws[1]).expect("same kind")?;
        ws.windows(2)
            .all(|p| p[0].op(&step) == p[1])
            .then_some(step)
    }

    /// Letters sorted by ascending weight, ties in alphabet order.
    pub(crate) fn letters_by_weight(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.weights.len()).collect();
        order.sort_by(|&a, &b| self.weights[a].cmp_same(&self.weights[b]).then(a.cmp(&b)));
        order
    }

    #[cfg(test)]
    pub(crate) fn cmp_words(&self, u: &Word, v: &Word) -> std::cmp::Ordering {
        self.weight(u).cmp_same(&self.weight(v))
    }
}

fn is_prime(n: &BigUint) -> bool {
    if let Some(n) = n.to_u64() {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d.saturating_mul(d) <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        return true;
    }
    miller_rabin(n)
}

// Deterministic for n < 3.3e24; probabilistic beyond.
fn miller_rabin(n: &BigUint) -> bool {
    const BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    if BASES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use MonoidKind::*;

    #[test]
    fn new_measure_examples() {
        assert!(WeightMeasure::naturals("anb", NatSum, &[1, 2, 3]).is_ok());
        let err = WeightMeasure::naturals("01", NatProduct, &[1, 2]).unwrap_err();
        assert!(matches!(err, Error::IncreasingPropertyViolation { .. }));
        let err = WeightMeasure::naturals("a", NatSum, &[0]).unwrap_err();
        assert!(matches!(err, Error::IncreasingPropertyViolation { .. }));
        let err = WeightMeasure::naturals("ab", NatSum, &[1]).unwrap_err();
        assert!(matches!(err, Error::ArityMismatch { letters: 2, weights: 1 }));
        let sigma = Alphabet::from_chars("ab").unwrap();
        let mixed = vec![MonoidValue::nat_sum(1u32), MonoidValue::vec2(1u32, 0u32)];
        assert!(matches!(
            WeightMeasure::new(sigma, NatSum, mixed),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn weight_examples() {
        let mu = WeightMeasure::naturals("anb", NatSum, &[1, 2, 3]).unwrap();
        let banana = mu.alphabet().parse_word("banana").unwrap();
        assert_eq!(mu.weight(&banana), MonoidValue::nat_sum(10u32));
        assert_eq!(mu.weight(&Word::empty()), mu.identity());
        let nu = WeightMeasure::naturals("abc", NatProduct, &[2, 6, 18]).unwrap();
        let ab = nu.alphabet().parse_word("ab").unwrap();
        // oracle: explicit product of base weights
        let expected = [2u64, 6].iter().product::<u64>();
        assert_eq!(nu.weight(&ab), MonoidValue::nat_product(expected).unwrap());
    }

    #[test]
    fn standard_measure_examples() {
        let std3 = WeightMeasure::standard(Alphabet::from_chars("abc").unwrap());
        assert_eq!(std3, WeightMeasure::naturals("abc", NatSum, &[1, 2, 3]).unwrap());
        let std2 = WeightMeasure::standard(Alphabet::from_chars("01").unwrap());
        assert_eq!(std2, WeightMeasure::naturals("01", NatSum, &[1, 2]).unwrap());
        let std1 = WeightMeasure::standard(Alphabet::from_chars("x").unwrap());
        assert_eq!(std1, WeightMeasure::naturals("x", NatSum, &[1]).unwrap());
        assert!(std3.is_injective() && std3.is_alphabetically_ordered());
    }

    #[test]
    fn subset_measure_examples() {
        let bin = WeightMeasure::subset(Alphabet::from_chars("01").unwrap(), &["1"]).unwrap();
        assert_eq!(bin, WeightMeasure::naturals("01", NatSum, &[1, 2]).unwrap());
        let sigma = Alphabet::from_chars("abc").unwrap();
        let none = WeightMeasure::subset(sigma.clone(), &[] as &[&str]).unwrap();
        assert_eq!(none, WeightMeasure::naturals("abc", NatSum, &[1, 1, 1]).unwrap());
        let all = WeightMeasure::subset(sigma.clone(), &["a", "b", "c"]).unwrap();
        assert_eq!(all, WeightMeasure::naturals("abc", NatSum, &[2, 2, 2]).unwrap());
        assert!(matches!(
            WeightMeasure::subset(sigma, &["z"]),
            Err(Error::UnknownLetter(_))
        ));
    }

    #[test]
    fn flags() {
        let m = WeightMeasure::naturals("ancb", NatSum, &[1, 2, 2, 3]).unwrap();
        assert!(!m.is_injective());
        assert!(m.is_alphabetically_ordered());
        let m2 = WeightMeasure::naturals("abc", NatSum, &[3, 1, 2]).unwrap();
        assert!(m2.is_injective() && !m2.is_alphabetically_ordered());
        assert!(WeightMeasure::naturals("ab", NatSum, &[5, 9]).unwrap().is_binary());
        assert!(WeightMeasure::naturals("abc", NatSum, &[4, 4, 4]).unwrap().is_unary());
        assert!(WeightMeasure::naturals("abc", NatProduct, &[2, 3, 5]).unwrap().is_prime());
        assert!(!WeightMeasure::naturals("abc", NatProduct, &[2, 3, 9]).unwrap().is_prime());
        assert!(!WeightMeasure::naturals("abc", NatSum, &[2, 3, 5]).unwrap().is_prime());
    }

    #[test]
    fn stepped_detection() {
        let m = WeightMeasure::naturals("abc", NatSum, &[2, 4, 6]).unwrap();
        assert_eq!(m.stepped(), Some(MonoidValue::nat_sum(2u32)));
        let m = WeightMeasure::naturals("abc", NatSum, &[1, 3, 4]).unwrap();
        assert_eq!(m.stepped(), None);
        let m = WeightMeasure::naturals("abc", NatProduct, &[2, 6, 18]).unwrap();
        assert_eq!(m.stepped(), Some(MonoidValue::nat_product(3u32).unwrap()));
        let m = WeightMeasure::naturals("abc", NatProduct, &[4, 6, 9]).unwrap();
        assert_eq!(m.stepped(), None);
        let m = WeightMeasure::naturals("abc", NatSum, &[6, 2, 4]).unwrap();
        assert_eq!(m.stepped(), Some(MonoidValue::nat_sum(2u32)));
        let m = WeightMeasure::naturals("ab", NatSum, &[3, 3]).unwrap();
        assert_eq!(m.stepped(), Some(m.identity()));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(&BigUint::from(n))).collect();
        assert_eq!(
            primes,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        let mersenne = (BigUint::one() << 89u32) - BigUint::one();
        assert!(is_prime(&mersenne));
        assert!(!is_prime(&(&mersenne * BigUint::from(3u32))));
    }
}
