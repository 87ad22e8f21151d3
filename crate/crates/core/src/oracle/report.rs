use std::fmt::Write as _;

use crate::measure::WeightMeasure;
use crate::word::Word;

/// A replayable failure: the measure in one-line measure-file syntax, the
/// word it concerns, and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub measure: String,
    pub word: String,
    pub detail: String,
}

impl Counterexample {
    pub fn new(measure: &WeightMeasure, word: &Word, detail: impl Into<String>) -> Self {
        Counterexample {
            measure: measure.to_inline_spec(),
            word: measure.alphabet().render(word),
            detail: detail.into(),
        }
    }

    pub fn replay_line(&self) -> String {
        format!(
            "REPLAY measure=\"{}\" word=\"{}\" detail=\"{}\"",
            self.measure, self.word, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub suite: String,
    pub parameters: String,
    pub cases: u64,
    pub violations: Vec<Counterexample>,
}

impl SweepReport {
    pub(crate) fn new(suite: &str, parameters: String) -> Self {
        SweepReport {
            suite: suite.to_string(),
            parameters,
            cases: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn absorb(&mut self, cases: u64, violations: Vec<Counterexample>) {
        self.cases += cases;
        self.violations.extend(violations);
    }

    /// Sorts violations so output does not depend on scheduling.
    pub(crate) fn finish(mut self) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self
    }

    /// `SUITE <id> CASES <n> VIOLATIONS <k>` followed by one replay line per
    /// counterexample.
    pub fn render_lines(&self) -> String {
        let mut out = format!(
            "SUITE {} CASES {} VIOLATIONS {}\n",
            self.suite,
            self.cases,
            self.violations.len()
        );
        for v in &self.violations {
            out.push_str(&v.replay_line());
            out.push('\n');
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "suite {}: {verdict}", self.suite);
        let _ = writeln!(out, "  parameters: {}", self.parameters);
        let _ = writeln!(out, "  cases: {}", self.cases);
        let _ = writeln!(out, "  violations: {}", self.violations.len());
        for v in &self.violations {
            let _ = writeln!(out, "    measure: {}", v.measure);
            let _ = writeln!(out, "    word:    {}", v.word);
            let _ = writeln!(out, "    detail:  {}", v.detail);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::MonoidKind;

    #[test]
    fn line_format() {
        let m = WeightMeasure::naturals("ab", MonoidKind::NatSum, &[1, 2]).unwrap();
        let mut r = SweepReport::new("demo", "n/a".into());
        r.absorb(7, vec![Counterexample::new(&m, &Word::new(vec![1, 0]), "oops")]);
        let r = r.finish();
        assert!(!r.passed());
        assert_eq!(
            r.render_lines(),
            "SUITE demo CASES 7 VIOLATIONS 1\n\
             REPLAY measure=\"monoid = nat-sum; letters = a b; weights = 1 2\" word=\"ba\" detail=\"oops\"\n"
        );
        let replay = WeightMeasure::parse(&r.violations[0].measure).unwrap();
        assert_eq!(replay, m);
    }
}
