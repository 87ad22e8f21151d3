use super::WeightMeasure;
use crate::word::{Alphabet, Word};

/// A measure with equal-weight letters merged into classes. Each class is a
/// letter of the projected alphabet, rendered `{m1,m2,...}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedMeasure {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    measure: WeightMeasure,
}

impl WeightMeasure {
    /// Groups letters by base weight. Classes are numbered by their first
    /// member in alphabet order; members are listed in alphabet order.
    pub fn project(&self) -> ProjectedMeasure {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(self.weights.len());
        for (letter, w) in self.weights.iter().enumerate() {
            match classes.iter().position(|c| &self.weights[c[0]] == w) {
                Some(c) => {
                    classes[c].push(letter);
                    class_of.push(c);
                }
                None => {
                    class_of.push(classes.len());
                    classes.push(vec![letter]);
                }
            }
        }
        let tokens = classes.iter().map(|members| {
            let names: Vec<&str> = members.iter().map(|&l| self.alphabet.token(l)).collect();
            format!("{{{}}}", names.join(","))
        });
        let alphabet = Alphabet::new(tokens).expect("class tokens are distinct");
        let weights = classes.iter().map(|c| self.weights[c[0]].clone()).collect();
        let measure = WeightMeasure {
            alphabet,
            kind: self.kind,
            weights,
        };
        ProjectedMeasure {
            classes,
            class_of,
            measure,
        }
    }
}

impl ProjectedMeasure {
    /// The injective measure over the class alphabet.
    pub fn measure(&self) -> &WeightMeasure {
        &self.measure
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, letter: usize) -> usize {
        self.class_of[letter]
    }

    /// Letterwise class substitution.
    pub fn project_word(&self, w: &Word) -> Word {
        Word::new(w.letters().iter().map(|&l| self.class_of[l]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{MonoidKind, MonoidValue};

    fn ancb() -> WeightMeasure {
        WeightMeasure::naturals("ancb", MonoidKind::NatSum, &[1, 2, 2, 3]).unwrap()
    }

    #[test]
    fn merges_equal_weights() {
        let pm = ancb().project();
        assert_eq!(pm.measure().alphabet().letters(), ["{a}", "{n,c}", "{b}"]);
        let expected: Vec<MonoidValue> = [1u32, 2, 3].into_iter().map(MonoidValue::nat_sum).collect();
        assert_eq!(pm.measure().base_weights(), expected.as_slice());
        assert!(pm.measure().is_injective());
        assert_eq!(pm.classes(), &[vec![0], vec![1, 2], vec![3]]);
    }

    #[test]
    fn injective_is_fixed_point() {
        let m = WeightMeasure::naturals("abc", MonoidKind::NatProduct, &[2, 3, 5]).unwrap();
        let pm = m.project();
        assert_eq!(pm.classes(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(pm.measure().base_weights(), m.base_weights());
    }

    #[test]
    fn all_equal_collapses() {
        let m = WeightMeasure::naturals("abc", MonoidKind::NatSum, &[2, 2, 2]).unwrap();
        let pm = m.project();
        // oracle: the class of `a` is every letter with weight μ(a)
        let class_a: Vec<usize> = (0..3).filter(|&l| m.base_weight(l) == m.base_weight(0)).collect();
        assert_eq!(pm.classes(), &[class_a]);
        assert_eq!(pm.measure().alphabet().len(), 1);
    }

    #[test]
    fn projects_words() {
        let m = ancb();
        let pm = m.project();
        let render = |s: &str| pm.measure().alphabet().render(&pm.project_word(&m.alphabet().parse_word(s).unwrap()));
        assert_eq!(render("nanaba"), "{n,c}{a}{n,c}{a}{b}{a}");
        assert_eq!(render("banana"), "{b}{a}{n,c}{a}{n,c}{a}");
        assert_eq!(render(""), "");
    }

    #[test]
    fn projection_preserves_weight() {
        let m = ancb();
        let pm = m.project();
        for w in m.alphabet().words_up_to(4) {
            assert_eq!(pm.measure().weight(&pm.project_word(&w)), m.weight(&w));
        }
    }
}
