//! Named invariant sweeps over seeded corpora.

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use super::corpus::{self, CorpusParams};
use super::report::{Counterexample, SweepReport};
use super::{
    classical_count_binary_pn, classical_is_prefix_normal, count_binary_pn_with_bound, enumerate_levels, max_ones,
    naive_factor_weights, naive_is_prefix_normal, naive_prefix_weights, trichotomy_cases, binary_measure,
    brute_force_gap_search, brute_force_pn_set,
};
use crate::error::{Error, Result};
use crate::measure::{classify, decide_gapfree, measures_equivalent_bounded, GapVerdict, WeightMeasure};
use crate::monoid::{MonoidKind, MonoidValue};
use crate::normal_form::{count_pn, prefix_normal_form, NormalFormResult};
use crate::profile::{pn_characterizations, WeightProfile};
use crate::word::{space_size, Alphabet, Word};

pub const SUITES: &[&str] = &[
    "position-basics",
    "subadditivity",
    "pn-characterizations",
    "exchange",
    "prime-gapful",
    "vec2-gapfree",
    "projection",
    "trichotomy",
    "gapfree-decision",
    "equivalence",
    "binary-reduction",
    "pn-set",
    "stepped",
];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Word-length bound; each suite has its own default.
    pub max_len: Option<usize>,
    /// Randomised cases for the per-word suites.
    pub cases: usize,
    /// Corpus size for the per-measure suites, fixtures included.
    pub measures: usize,
    pub params: CorpusParams,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 20_240_601,
            max_len: None,
            cases: 10_000,
            measures: 240,
            params: CorpusParams::default(),
        }
    }
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig {
            seed,
            ..SuiteConfig::default()
        }
    }

    fn len_or(&self, default: usize) -> usize {
        self.max_len.unwrap_or(default)
    }

    fn corpus(&self) -> Vec<WeightMeasure> {
        let random = self.measures.saturating_sub(corpus::fixtures().len());
        corpus::corpus(self.seed, random, &self.params)
    }

    fn describe(&self, max_len: usize, extra: &str) -> String {
        let mut s = format!("seed {}, {}, word length <= {max_len}", self.seed, self.params.describe());
        if !extra.is_empty() {
            s.push_str(", ");
            s.push_str(extra);
        }
        s
    }
}

type Outcome = (u64, Vec<Counterexample>);

/// Runs `check` over `items` in parallel and merges the outcomes.
fn sweep<T: Sync>(items: &[T], check: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    items.par_iter().map(check).reduce(
        || (0, Vec::new()),
        |(a, mut va), (b, vb)| {
            va.extend(vb);
            (a + b, va)
        },
    )
}

/// Runs the named suite. Reports are deterministic for a fixed config.
pub fn verify_suite(suite_id: &str, config: &SuiteConfig) -> Result<SweepReport> {
    let (parameters, (cases, violations)) = match suite_id {
        "position-basics" => position_basics(config),
        "subadditivity" => subadditivity(config),
        "pn-characterizations" => pn_characterizations_suite(config),
        "exchange" => exchange(config),
        "prime-gapful" => prime_gapful(config),
        "vec2-gapfree" => vec2_gapfree(config),
        "projection" => projection(config),
        "trichotomy" => trichotomy(config),
        "gapfree-decision" => gapfree_decision(config),
        "equivalence" => equivalence(config),
        "binary-reduction" => binary_reduction(config),
        "pn-set" => pn_set_suite(config),
        "stepped" => stepped(config),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut report = SweepReport::new(suite_id, parameters);
    report.absorb(cases, violations);
    Ok(report.finish())
}

/// `config.cases` random (measure, word) pairs drawn from the corpus.
fn random_cases(config: &SuiteConfig, stream: u64, max_len: usize) -> Vec<(WeightMeasure, Word)> {
    let pool = config.corpus();
    let mut rng = corpus::rng(config.seed, stream);
    (0..config.cases)
        .map(|_| {
            let m = pool[rng.random_range(0..pool.len())].clone();
            let w = corpus::random_word(&mut rng, m.alphabet().len(), max_len);
            (m, w)
        })
        .collect()
}

fn fail(out: &mut Vec<Counterexample>, m: &WeightMeasure, w: &Word, detail: String) {
    out.push(Counterexample::new(m, w, detail));
}

/// Sample monoid values around the prefix weights of a word: the prefix
/// weights themselves, one-letter extensions, the factor weights and a few
/// random values, some beyond the total weight.
fn probe_values(m: &WeightMeasure, prof: &WeightProfile, rng: &mut impl Rng) -> Vec<MonoidValue> {
    let mut xs = vec![m.identity()];
    xs.extend(prof.prefix().iter().cloned());
    xs.extend(prof.factor().iter().cloned());
    for p in prof.prefix() {
        let a = rng.random_range(0..m.alphabet().len());
        xs.push(p.op(m.base_weight(a)));
    }
    let params = CorpusParams::default();
    for _ in 0..4 {
        let mut x = corpus::random_value(rng, m.kind(), &params);
        for _ in 0..rng.random_range(0..4) {
            x = x.op(&corpus::random_value(rng, m.kind(), &params));
        }
        xs.push(x);
    }
    xs
}

fn position_basics(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let cases = random_cases(config, 11, max_len);
    let seed = config.seed;
    let outcome = sweep(&cases.iter().enumerate().collect::<Vec<_>>(), |(i, (m, w))| {
        let mut bad = Vec::new();
        let mut rng = corpus::rng(seed, 1_000_000 + *i as u64);
        let prof = WeightProfile::new(m, w);
        let (p, f) = (naive_prefix_weights(m, w), naive_factor_weights(m, w));
        if prof.prefix() != p || prof.factor() != f {
            fail(&mut bad, m, w, "fast profile differs from definition".into());
        }
        let n = w.len();
        let total = &p[n];
        let maxpos = |x: &MonoidValue| prof.maxpos(x).expect("same kind");
        // None when x exceeds the total weight
        let minpos = |x: &MonoidValue| prof.minpos(x).ok();

        for j in 0..=n {
            for k in 0..=n {
                let (fl, pl) = (f[j].lt(&f[k]), p[j].lt(&p[k]));
                if (j < k) != fl || (j < k) != pl {
                    fail(&mut bad, m, w, format!("(1) fails at j={j}, k={k}"));
                }
            }
            if maxpos(&p[j]) != j || minpos(&p[j]) != Some(j) {
                fail(&mut bad, m, w, format!("(3) fails at k={j}"));
            }
        }
        let xs = probe_values(m, &prof, &mut rng);
        for x in &xs {
            let hi = maxpos(x);
            let lo = minpos(x);
            if !p[hi].le(x) {
                fail(&mut bad, m, w, format!("(2) p(maxpos({x})) exceeds {x}"));
            }
            match lo {
                Some(lo) => {
                    if !x.le(&p[lo]) {
                        fail(&mut bad, m, w, format!("(2) {x} exceeds p(minpos({x}))"));
                    }
                    if hi > lo {
                        fail(&mut bad, m, w, format!("(5) maxpos({x}) > minpos({x})"));
                    }
                }
                None => {
                    if x.le(total) {
                        fail(&mut bad, m, w, format!("minpos({x}) out of range below the total"));
                    }
                }
            }
            for (j, pj) in p.iter().enumerate() {
                if hi < j && !x.lt(pj) {
                    fail(&mut bad, m, w, format!("(4) maxpos({x}) < {j} but {x} not below p({j})"));
                }
                if lo.is_some_and(|lo| j < lo) && !pj.lt(x) {
                    fail(&mut bad, m, w, format!("(4) {j} < minpos({x}) but p({j}) not below {x}"));
                }
            }
            for y in &xs {
                if x.lt(y) {
                    if hi > maxpos(y) {
                        fail(&mut bad, m, w, format!("(6) maxpos not monotone at {x} < {y}"));
                    }
                    if let (Some(lx), Some(ly)) = (lo, minpos(y)) {
                        if lx > ly {
                            fail(&mut bad, m, w, format!("(6) minpos not monotone at {x} < {y}"));
                        }
                    }
                }
            }
        }
        (1, bad)
    });
    (config.describe(max_len, &format!("{} cases", config.cases)), outcome)
}

fn subadditivity(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let cases = random_cases(config, 12, max_len);
    let outcome = sweep(&cases, |(m, w)| {
        let mut bad = Vec::new();
        let f = naive_factor_weights(m, w);
        if WeightProfile::new(m, w).factor() != f {
            fail(&mut bad, m, w, "fast factor weights differ from definition".into());
        }
        for j in 0..f.len() {
            for i in 0..=j {
                if !f[j].le(&f[i].op(&f[j - i])) {
                    fail(&mut bad, m, w, format!("f({j}) exceeds f({i}) combined with f({})", j - i));
                }
            }
        }
        (1, bad)
    });
    (config.describe(max_len, &format!("{} cases", config.cases)), outcome)
}

fn pn_characterizations_suite(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let mut cases = random_cases(config, 13, max_len);
    // every other word sorted by descending weight, which is prefix normal
    for (m, w) in cases.iter_mut().step_by(2) {
        let mut letters = w.letters().to_vec();
        letters.sort_by(|&a, &b| m.base_weight(b).cmp_same(m.base_weight(a)));
        *w = Word::new(letters);
    }
    let outcome = sweep(&cases, |(m, w)| {
        let mut bad = Vec::new();
        let expected = naive_is_prefix_normal(m, w);
        let got = pn_characterizations(m, w).as_array();
        if got.iter().any(|&b| b != expected) {
            fail(&mut bad, m, w, format!("characterisations {got:?}, definition says {expected}"));
        }
        (1, bad)
    });
    (config.describe(max_len, &format!("{} cases, half sorted descending", config.cases)), outcome)
}

/// Sorted, injective measures over three and four letters: the gapfree
/// corpus plus random ones, most of them gapful.
fn ordered_injective_measures(config: &SuiteConfig) -> Vec<WeightMeasure> {
    let mut out = Vec::new();
    for size in 3..=4 {
        out.extend(corpus::ordered_gapfree_corpus(config.seed, size, 100));
        let params = CorpusParams {
            min_letters: size,
            max_letters: size,
            ..config.params.clone()
        };
        let mut rng = corpus::rng(config.seed, 20 + size as u64);
        let mut added = 0;
        while added < config.measures / 4 {
            let m = corpus::random_measure(&mut rng, &params);
            let ws = m.distinct_weights();
            if ws.len() == size {
                out.push(WeightMeasure::new(m.alphabet().clone(), m.kind(), ws).expect("valid"));
                added += 1;
            }
        }
    }
    out
}

fn naive_gap(m: &WeightMeasure, w: &Word) -> Option<usize> {
    let f = naive_factor_weights(m, w);
    (1..f.len()).find(|&i| !m.base_weights().iter().any(|wa| f[i - 1].op(wa) == f[i]))
}

fn exchange(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(5);
    let measures = ordered_injective_measures(config);
    let outcome = sweep(&measures, |m| {
        let mut bad = Vec::new();
        let n = m.alphabet().len();
        let word = |ls: &[usize]| Word::new(ls.to_vec());
        let mut cacb_free = true;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    cacb_free &= naive_gap(m, &word(&[c, a, c, b])).is_none();
                }
            }
        }
        if cacb_free {
            for i in 0..n {
                for x in 1..n - i {
                    for y in 0..x {
                        if m.weight(&word(&[i, i + x])) != m.weight(&word(&[i + y, i + x - y])) {
                            fail(&mut bad, m, &word(&[i, i + x]), format!("exchange fails for y={y}"));
                        }
                    }
                }
            }
        }
        let decided = decide_gapfree(m).is_gapfree();
        let brute = brute_force_gap_search(m, max_len).is_none();
        let standard = WeightMeasure::standard(m.alphabet().clone());
        let equiv = measures_equivalent_bounded(m, &standard, max_len)
            .expect("same alphabet")
            .is_equivalent();
        if [decided, brute, equiv] != [cacb_free; 3] {
            fail(
                &mut bad,
                m,
                &Word::empty(),
                format!("cacb-free {cacb_free}, decided {decided}, brute force {brute}, standard-equivalent {equiv}"),
            );
        }
        (1, bad)
    });
    (
        config.describe(max_len, &format!("{} sorted injective measures", measures.len())),
        outcome,
    )
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

fn permutations3() -> [[usize; 3]; 6] {
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

fn prime_gapful(_config: &SuiteConfig) -> (String, Outcome) {
    let primes = primes_up_to(20);
    let mut measures = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for (j, &q) in primes.iter().enumerate().skip(i + 1) {
            for &r in &primes[j + 1..] {
                for perm in permutations3() {
                    let t = [p, q, r];
                    let ws = [t[perm[0]], t[perm[1]], t[perm[2]]];
                    measures.push(WeightMeasure::naturals("abc", MonoidKind::NatProduct, &ws).expect("primes"));
                }
            }
        }
    }
    let outcome = sweep(&measures, |m| {
        let mut bad = Vec::new();
        if !m.is_prime() {
            fail(&mut bad, m, &Word::empty(), "not recognised as prime".into());
        }
        match decide_gapfree(m) {
            GapVerdict::Gapfree => fail(&mut bad, m, &Word::empty(), "decided gapfree".into()),
            GapVerdict::Gapful { witness, index } => {
                if witness.len() != 4 || naive_gap(m, &witness) != Some(index) {
                    fail(&mut bad, m, &witness, format!("witness has no gap at {index}"));
                }
            }
        }
        if brute_force_gap_search(m, 4).is_none() {
            fail(&mut bad, m, &Word::empty(), "no gap up to length 4".into());
        }
        (1, bad)
    });
    (
        format!("distinct prime triples <= 20 in every letter order, {} measures", measures.len()),
        outcome,
    )
}

/// The lexicographic pair measure `a ↦ (0,2), b ↦ (1,1), c ↦ (2,0)`.
pub fn vec2_measure() -> WeightMeasure {
    WeightMeasure::new(
        Alphabet::from_chars("abc").expect("letters"),
        MonoidKind::Vec2LexSum,
        vec![
            MonoidValue::vec2(0u32, 2u32),
            MonoidValue::vec2(1u32, 1u32),
            MonoidValue::vec2(2u32, 0u32),
        ],
    )
    .expect("valid")
}

fn vec2_gapfree(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let m = vec2_measure();
    let mut bad = Vec::new();
    let mut cases = 0;
    if !decide_gapfree(&m).is_gapfree() {
        fail(&mut bad, &m, &Word::empty(), "decided gapful".into());
    }
    if let Some(step) = m.stepped() {
        fail(&mut bad, &m, &Word::empty(), format!("stepped with step {step}"));
    }
    for s in enumerate_levels(&m, max_len).into_iter().flatten() {
        cases += 1;
        if let Some(i) = s.gap(&m) {
            fail(&mut bad, &m, &s.word, format!("gap at {i}"));
        }
    }
    (format!("measure {}, every word of length <= {max_len}", m.to_inline_spec()), (cases, bad))
}

fn projection(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    // small weight ranges make equal weights common
    let params = CorpusParams {
        sum_weights: (1, 3),
        product_weights: (2, 4),
        vec2_component_max: 1,
        ..config.params.clone()
    };
    let pool = corpus::corpus(config.seed, config.measures, &params);
    let mut rng = corpus::rng(config.seed, 17);
    let cases: Vec<(WeightMeasure, Word)> = (0..config.cases)
        .map(|_| {
            let m = pool[rng.random_range(0..pool.len())].clone();
            let w = corpus::random_word(&mut rng, m.alphabet().len(), max_len);
            (m, w)
        })
        .collect();
    let outcome = sweep(&cases, |(m, w)| {
        let mut bad = Vec::new();
        let pm = m.project();
        let hat = pm.measure();
        if !hat.is_injective() {
            fail(&mut bad, m, w, "projected measure not injective".into());
        }
        for a in 0..m.alphabet().len() {
            for b in 0..m.alphabet().len() {
                if (m.base_weight(a) == m.base_weight(b)) != (pm.class_of(a) == pm.class_of(b)) {
                    fail(&mut bad, m, w, "classes are not the weight fibres".into());
                }
            }
        }
        let v = pm.project_word(w);
        if naive_factor_weights(m, w) != naive_factor_weights(hat, &v)
            || naive_prefix_weights(m, w) != naive_prefix_weights(hat, &v)
        {
            fail(&mut bad, m, w, "projection changes a profile".into());
        }
        if space_size(m.alphabet().len(), w.len()) <= 256 {
            let brute = brute_force_pn_set(m, w);
            if count_pn(m, w) != brute.len().into() {
                fail(&mut bad, m, w, format!("count_pn differs from brute force {}", brute.len()));
            }
            if let NormalFormResult::Unique(form) = prefix_normal_form(hat, &v) {
                for u in &brute {
                    let ok = u
                        .letters()
                        .iter()
                        .zip(form.letters())
                        .all(|(&l, &c)| pm.class_of(l) == c);
                    if !ok {
                        fail(&mut bad, m, u, "prefix normal word leaves the projected form".into());
                    }
                }
            }
        }
        (1, bad)
    });
    (
        format!(
            "seed {}, letters {}..={}, sum weights 1..=3, product weights 2..=4, pair components 0..=1, word length <= {max_len}, {} cases",
            config.seed, params.min_letters, params.max_letters, config.cases
        ),
        outcome,
    )
}

fn trichotomy(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(5);
    let measures = config.corpus();
    let outcome = sweep(&measures, |m| trichotomy_cases(m, max_len));
    (config.describe(max_len, &format!("{} measures", measures.len())), outcome)
}

fn gapfree_decision(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let measures = config.corpus();
    let outcome = sweep(&measures, |m| {
        let mut bad = Vec::new();
        let brute = brute_force_gap_search(m, max_len);
        match (decide_gapfree(m), &brute) {
            (GapVerdict::Gapfree, None) => {}
            (GapVerdict::Gapfree, Some((w, i))) => {
                fail(&mut bad, m, w, format!("decided gapfree, brute force finds a gap at {i}"));
            }
            (GapVerdict::Gapful { witness, .. }, None) => {
                fail(&mut bad, m, &witness, format!("decided gapful, no gap up to length {max_len}"));
            }
            (GapVerdict::Gapful { witness, index }, Some(_)) => {
                let l = witness.letters();
                let shaped = l.len() == 4
                    && l[0] == l[2]
                    && m.base_weight(l[1]).lt(m.base_weight(l[3]))
                    && m.base_weight(l[3]).lt(m.base_weight(l[0]));
                if !shaped || index != 3 {
                    fail(&mut bad, m, &witness, format!("witness not of the form cacb with gap at 3 (index {index})"));
                }
                if WeightProfile::new(m, &witness).first_gap(m) != Some(index) || naive_gap(m, &witness) != Some(index) {
                    fail(&mut bad, m, &witness, format!("profile check finds no gap at {index}"));
                }
            }
        }
        if !classify(m, 4).oracle_agrees {
            fail(&mut bad, m, &Word::empty(), "classification disagrees with its own cross-check".into());
        }
        (1, bad)
    });
    (config.describe(max_len, &format!("{} measures", measures.len())), outcome)
}

/// Prefix normal forms of every word up to `max_len`, in enumeration order.
fn forms(m: &WeightMeasure, max_len: usize) -> Vec<(Word, NormalFormResult)> {
    m.alphabet()
        .words_up_to(max_len)
        .map(|w| {
            let r = prefix_normal_form(m, &w);
            (w, r)
        })
        .collect()
}

/// Compares forms of two measures over the same alphabet. Non-injective
/// results are compared through the expanded word sets.
fn same_forms(m1: &WeightMeasure, m2: &WeightMeasure, max_len: usize, bad: &mut Vec<Counterexample>) -> u64 {
    let mut cases = 0;
    for ((w, r1), (_, r2)) in forms(m1, max_len).into_iter().zip(forms(m2, max_len)) {
        cases += 1;
        let same = match (&r1, &r2) {
            (NormalFormResult::Unique(a), NormalFormResult::Unique(b)) => a == b,
            (NormalFormResult::NoneFound { .. }, NormalFormResult::NoneFound { .. }) => true,
            (NormalFormResult::Multiple { .. }, NormalFormResult::Multiple { .. }) => {
                crate::normal_form::pn_set(m1, &w, 4096) == crate::normal_form::pn_set(m2, &w, 4096)
            }
            _ => false,
        };
        if !same {
            fail(bad, m1, &w, format!("normal form differs from {}", m2.to_inline_spec()));
        }
    }
    cases
}

/// Measures equivalent to `m` by construction: a scaled sum measure and the
/// product measure `2^w` for natural sums, and the sum measure of the
/// exponents for powers of two.
fn equivalent_images(m: &WeightMeasure) -> Vec<WeightMeasure> {
    let nats: Option<Vec<u64>> = m
        .base_weights()
        .iter()
        .map(|w| w.as_nat().and_then(|n| u64::try_from(n).ok()))
        .collect();
    let Some(nats) = nats else { return Vec::new() };
    let build = |kind, ws: Vec<u64>| {
        let values = ws
            .into_iter()
            .map(|v| match kind {
                MonoidKind::NatProduct => MonoidValue::nat_product(v).expect("positive"),
                _ => MonoidValue::nat_sum(v),
            })
            .collect();
        WeightMeasure::new(m.alphabet().clone(), kind, values).expect("valid")
    };
    match m.kind() {
        MonoidKind::NatSum if nats.iter().all(|&v| v <= 20) => vec![
            build(MonoidKind::NatSum, nats.iter().map(|v| 3 * v).collect()),
            build(MonoidKind::NatProduct, nats.iter().map(|v| 1 << v).collect()),
        ],
        MonoidKind::NatProduct => vec![build(
            MonoidKind::NatProduct,
            nats.iter().map(|v| v * v).collect(),
        )],
        _ => Vec::new(),
    }
}

fn equivalence(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let form_len = max_len.min(5);
    let mut pairs: Vec<(WeightMeasure, WeightMeasure, bool)> = Vec::new();
    pairs.push((
        WeightMeasure::naturals("abc", MonoidKind::NatSum, &[2, 4, 6]).expect("valid"),
        WeightMeasure::naturals("abc", MonoidKind::NatProduct, &[2, 6, 18]).expect("valid"),
        true,
    ));
    for size in 2..=4 {
        let ms = corpus::ordered_gapfree_corpus(config.seed, size, 100);
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                pairs.push((ms[i].clone(), ms[j].clone(), true));
            }
        }
    }
    // arbitrary measures against order-isomorphic images
    let pool = config.corpus();
    for m in pool.iter().take(config.measures / 4) {
        for image in equivalent_images(m) {
            pairs.push((m.clone(), image, false));
        }
    }
    // unrelated pairs only need matching properties when they are equivalent
    let mut unrelated = Vec::new();
    for (i, m1) in pool.iter().enumerate() {
        for m2 in &pool[i + 1..] {
            if m1.alphabet() == m2.alphabet() {
                unrelated.push((m1.clone(), m2.clone()));
            }
        }
    }
    let outcome = sweep(&pairs, |(m1, m2, ordered_gapfree)| {
        let mut bad = Vec::new();
        let verdict = measures_equivalent_bounded(m1, m2, max_len).expect("same alphabet");
        if !verdict.is_equivalent() {
            fail(&mut bad, m1, &Word::empty(), format!("not equivalent to {}: {verdict:?}", m2.to_inline_spec()));
            return (1, bad);
        }
        let flags = |m: &WeightMeasure| {
            (decide_gapfree(m).is_gapfree(), m.is_injective(), m.is_alphabetically_ordered())
        };
        if flags(m1) != flags(m2) || (*ordered_gapfree && flags(m1) != (true, true, true)) {
            fail(&mut bad, m1, &Word::empty(), format!("properties differ from {}", m2.to_inline_spec()));
        }
        let cases = 1 + same_forms(m1, m2, form_len, &mut bad);
        (cases, bad)
    });
    let (extra_cases, extra_bad) = sweep(&unrelated, |(m1, m2)| {
        let mut bad = Vec::new();
        let verdict = measures_equivalent_bounded(m1, m2, 4).expect("same alphabet");
        let flags = |m: &WeightMeasure| {
            (decide_gapfree(m).is_gapfree(), m.is_injective(), m.is_alphabetically_ordered())
        };
        if verdict.is_equivalent() && flags(m1) != flags(m2) {
            fail(&mut bad, m1, &Word::empty(), format!("equivalent to {} but properties differ", m2.to_inline_spec()));
        }
        (1, bad)
    });
    let (cases, mut bad) = outcome;
    bad.extend(extra_bad);
    (
        format!(
            "seed {}, {} measure pairs, equivalence up to length {max_len}, normal forms up to length {form_len}, {} unrelated pairs up to length 4",
            config.seed,
            pairs.len(),
            unrelated.len()
        ),
        (cases + extra_cases, bad),
    )
}

fn binary_reduction(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(12);
    let m = binary_measure();
    let lengths: Vec<usize> = (0..=max_len).collect();
    let outcome = sweep(&lengths, |&n| {
        let mut bad = Vec::new();
        let mut cases = 0;
        for w in m.alphabet().words_of_length(n) {
            cases += 1;
            let bits: Vec<bool> = w.letters().iter().map(|&l| l == 1).collect();
            let prof = WeightProfile::new(&m, &w);
            if prof.is_prefix_normal() != classical_is_prefix_normal(&bits) {
                fail(&mut bad, &m, &w, "weighted and classical predicates differ".into());
            }
            // f(i) = i + (most ones in a length-i factor)
            let shifted: Vec<BigUint> = max_ones(&bits).iter().enumerate().map(|(i, k)| BigUint::from(i + k)).collect();
            let f: Vec<BigUint> = prof.factor().iter().map(|v| v.as_nat().expect("natural").clone()).collect();
            if f != shifted {
                fail(&mut bad, &m, &w, "factor weights are not length plus maximum ones".into());
            }
        }
        let weighted = count_binary_pn_with_bound(n, max_len);
        let classical = classical_count_binary_pn(n, max_len);
        if weighted != classical {
            fail(&mut bad, &m, &Word::empty(), format!("length {n}: counts {weighted:?} and {classical:?}"));
        }
        (cases, bad)
    });
    (format!("every binary word of length <= {max_len}"), outcome)
}

fn pn_set_suite(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(6);
    let measures: Vec<WeightMeasure> = config.corpus().into_iter().take(config.measures / 4).collect();
    let outcome = sweep(&measures, |m| trichotomy_cases(m, max_len));
    (config.describe(max_len, &format!("{} measures", measures.len())), outcome)
}

/// Distinct weights `w_0 < w_1 < ...` with `w_i^2 = w_{i-1} w_{i+1}`.
fn geometric(m: &WeightMeasure) -> bool {
    let ws = m.distinct_weights();
    ws.windows(3).all(|t| t[1].op(&t[1]) == t[0].op(&t[2]))
}

fn stepped(config: &SuiteConfig) -> (String, Outcome) {
    let max_len = config.len_or(5);
    let mut measures = config.corpus();
    for size in 2..=4 {
        measures.extend(corpus::ordered_gapfree_corpus(config.seed, size, 50));
    }
    let outcome = sweep(&measures, |m| {
        let mut bad = Vec::new();
        let gapfree = decide_gapfree(m).is_gapfree();
        let step = m.stepped();
        let projected_step = m.project().measure().stepped();
        if step != projected_step {
            fail(&mut bad, m, &Word::empty(), "projection changes the step".into());
        }
        if let Some(s) = &step {
            if !gapfree {
                fail(&mut bad, m, &Word::empty(), format!("stepped by {s} but decided gapful"));
            }
            if let Some((w, i)) = brute_force_gap_search(m, max_len) {
                fail(&mut bad, m, &w, format!("stepped by {s} but gap at {i}"));
            }
        }
        match m.kind() {
            MonoidKind::NatSum if gapfree != step.is_some() => {
                fail(&mut bad, m, &Word::empty(), format!("sum measure: gapfree {gapfree}, step {step:?}"));
            }
            MonoidKind::NatProduct if gapfree != geometric(m) => {
                fail(&mut bad, m, &Word::empty(), format!("product measure: gapfree {gapfree}, geometric {}", geometric(m)));
            }
            _ => {}
        }
        (1, bad)
    });
    (config.describe(max_len, &format!("{} measures", measures.len())), outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            cases: 300,
            measures: 40,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            verify_suite("nope", &small()),
            Err(Error::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn every_suite_passes_small() {
        for id in SUITES {
            let mut config = small();
            if *id == "binary-reduction" {
                config.max_len = Some(8);
            }
            let r = verify_suite(id, &config).unwrap();
            assert!(r.passed(), "{}", r.render_text());
            assert!(r.cases > 0, "{id}");
        }
    }

    #[test]
    fn deterministic() {
        let a = verify_suite("position-basics", &small()).unwrap();
        let b = verify_suite("position-basics", &small()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.cases, 300);
    }

    #[test]
    fn prime_triples() {
        let r = verify_suite("prime-gapful", &small()).unwrap();
        assert_eq!(r.cases, 56 * 6);
        assert!(r.passed());
    }
}
