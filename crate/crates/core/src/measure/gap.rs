use super::WeightMeasure;
use crate::monoid::MonoidValue;
use crate::oracle;
use crate::profile::WeightProfile;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapVerdict {
    Gapfree,
    /// `witness` has a gap at `index`: no letter weight bridges
    /// `f(index - 1)` to `f(index)`.
    Gapful { witness: Word, index: usize },
}

impl GapVerdict {
    pub fn is_gapfree(&self) -> bool {
        matches!(self, GapVerdict::Gapfree)
    }
}

/// Decides gapfreeness with the three-letter exchange test.
///
/// The measure is first projected and its classes sorted by weight, which
/// leaves every factor-weight function unchanged. With at most two distinct
/// weights the measure is gapfree. Otherwise it is gapfree iff for every
/// `w_i < w_j < w_k` some weight `w_x` satisfies `w_j ∘ w_x = w_i ∘ w_k`;
/// the first failing triple (lexicographic in `i, j, k`) yields the witness
/// `c a c b` with gap at index 3, where `a, b, c` carry `w_i, w_j, w_k`.
pub fn decide_gapfree(measure: &WeightMeasure) -> GapVerdict {
    let pm = measure.project();
    let classes = pm.measure();
    let order = classes.letters_by_weight();
    let weights: Vec<&MonoidValue> = order.iter().map(|&c| classes.base_weight(c)).collect();
    let representative = |rank: usize| pm.classes()[order[rank]][0];
    let n = weights.len();
    if n <= 2 {
        return GapVerdict::Gapfree;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let target = weights[i].op(weights[k]);
                if !weights.iter().any(|x| weights[j].op(x) == target) {
                    let (a, b, c) = (representative(i), representative(j), representative(k));
                    return GapVerdict::Gapful {
                        witness: Word::new(vec![c, a, c, b]),
                        index: 3,
                    };
                }
            }
        }
    }
    GapVerdict::Gapfree
}

/// First index of `w` at which the measure has a gap, if any.
pub fn gap_at(measure: &WeightMeasure, w: &Word) -> Option<usize> {
    WeightProfile::new(measure, w).first_gap(measure)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureClassification {
    pub injective: bool,
    pub alphabetically_ordered: bool,
    pub binary: bool,
    pub unary: bool,
    pub prime: bool,
    pub stepped: Option<MonoidValue>,
    pub gapfree: bool,
    pub gap_witness: Option<(Word, usize)>,
    /// Word-length bound of the brute-force cross-check.
    pub oracle_bound: usize,
    /// False only if the brute-force gap search contradicts the decision.
    pub oracle_agrees: bool,
}

/// Computes every classification flag. The gapfree verdict comes from
/// [`decide_gapfree`]; a brute-force gap search over words up to
/// `oracle_max_len` cross-checks it (a bound below 4 can only confirm
/// gapful verdicts, since the shortest gaps have length 4).
pub fn classify(measure: &WeightMeasure, oracle_max_len: usize) -> MeasureClassification {
    let verdict = decide_gapfree(measure);
    let brute = oracle::brute_force_gap_search(measure, oracle_max_len);
    let oracle_agrees = match (&verdict, &brute) {
        (GapVerdict::Gapfree, Some(_)) => false,
        (GapVerdict::Gapful { .. }, None) => oracle_max_len < 4,
        _ => true,
    };
    let (gapfree, gap_witness) = match verdict {
        GapVerdict::Gapfree => (true, None),
        GapVerdict::Gapful { witness, index } => (false, Some((witness, index))),
    };
    MeasureClassification {
        injective: measure.is_injective(),
        alphabetically_ordered: measure.is_alphabetically_ordered(),
        binary: measure.is_binary(),
        unary: measure.is_unary(),
        prime: measure.is_prime(),
        stepped: measure.stepped(),
        gapfree,
        gap_witness,
        oracle_bound: oracle_max_len,
        oracle_agrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::MonoidKind::*;

    fn nat(letters: &str, kind: crate::monoid::MonoidKind, ws: &[u64]) -> WeightMeasure {
        WeightMeasure::naturals(letters, kind, ws).unwrap()
    }

    fn render(m: &WeightMeasure, v: &GapVerdict) -> Option<(String, usize)> {
        match v {
            GapVerdict::Gapfree => None,
            GapVerdict::Gapful { witness, index } => Some((m.alphabet().render(witness), *index)),
        }
    }

    #[test]
    fn classify_stepped_sum() {
        let c = classify(&nat("abc", NatSum, &[2, 4, 6]), 5);
        assert_eq!(c.stepped, Some(MonoidValue::nat_sum(2u32)));
        assert!(c.gapfree && c.gap_witness.is_none() && c.oracle_agrees);
    }

    #[test]
    fn classify_gapful_sum() {
        let m = nat("abc", NatSum, &[1, 3, 4]);
        let c = classify(&m, 4);
        assert_eq!(c.stepped, None);
        assert!(!c.gapfree && c.oracle_agrees);
        let (w, i) = c.gap_witness.clone().unwrap();
        assert_eq!(i, 3);
        assert_eq!(gap_at(&m, &w), Some(3));
        // bcac has its gap at index 3 with f(2) = 7, f(3) = 9
        let bcac = m.alphabet().parse_word("bcac").unwrap();
        assert_eq!(gap_at(&m, &bcac), Some(3));
        let f: Vec<String> = WeightProfile::new(&m, &bcac).factor().iter().map(|v| v.to_string()).collect();
        assert_eq!(f, ["0", "4", "7", "9", "12"]);
    }

    #[test]
    fn classify_vec2() {
        let m = WeightMeasure::parse("monoid = vec2-lex\nletters = a b c\nweights = (0,2) (1,1) (2,0)").unwrap();
        let c = classify(&m, 5);
        assert_eq!(c.stepped, None);
        assert!(c.gapfree && c.oracle_agrees);
    }

    #[test]
    fn prime_measure_is_gapful() {
        let m = nat("abc", NatProduct, &[2, 3, 5]);
        let v = decide_gapfree(&m);
        assert_eq!(render(&m, &v), Some(("cacb".into(), 3)));
        let GapVerdict::Gapful { witness, index } = v else { unreachable!() };
        assert_eq!(gap_at(&m, &witness), Some(index));
        // bcac has the same gap
        assert_eq!(gap_at(&m, &m.alphabet().parse_word("bcac").unwrap()), Some(3));
    }

    #[test]
    fn sum_124_is_gapful_with_short_witness() {
        let m = nat("abc", NatSum, &[1, 2, 4]);
        let v = decide_gapfree(&m);
        let (w, i) = render(&m, &v).unwrap();
        assert_eq!((w.len(), i), (4, 3));
        assert_eq!(gap_at(&m, &m.alphabet().parse_word(&w).unwrap()), Some(3));
        assert_eq!(gap_at(&m, &m.alphabet().parse_word("ccabccb").unwrap()), Some(5));
    }

    #[test]
    fn standard_is_gapfree() {
        assert!(decide_gapfree(&nat("abcdef", NatSum, &[1, 2, 3, 4, 5, 6])).is_gapfree());
    }

    #[test]
    fn small_weight_sets_are_gapfree() {
        assert!(decide_gapfree(&nat("ab", NatProduct, &[2, 3])).is_gapfree());
        assert!(decide_gapfree(&nat("abcd", NatSum, &[1, 7, 7, 1])).is_gapfree());
        assert!(decide_gapfree(&nat("a", NatSum, &[5])).is_gapfree());
    }

    #[test]
    fn witness_maps_back_through_projection_and_order() {
        // unsorted, non-injective: weights c=1, a=3, d=3, b=4
        let m = nat("abcd", NatSum, &[3, 4, 1, 3]);
        let v = decide_gapfree(&m);
        assert_eq!(render(&m, &v), Some(("bcba".into(), 3)));
        let GapVerdict::Gapful { witness, index } = v else { unreachable!() };
        assert_eq!(gap_at(&m, &witness), Some(index));
    }

    #[test]
    fn rational_geometric_product_is_gapfree() {
        // 4, 6, 9 has ratio 3/2: gapfree, but no integer step exists
        let m = nat("abc", NatProduct, &[4, 6, 9]);
        let c = classify(&m, 6);
        assert!(c.gapfree && c.oracle_agrees);
        assert_eq!(c.stepped, None);
    }
}
