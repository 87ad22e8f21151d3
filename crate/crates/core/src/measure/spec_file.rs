//! Line-oriented measure files:
//!
//! ```text
//! # comment
//! monoid = nat-sum | nat-product | vec2-lex
//! letters = a n b
//! weights = 1 2 3
//! ```
//!
//! Keys may appear in any order. A `;` also ends a statement, which lets a
//! whole measure travel on one line (see [`WeightMeasure::to_inline_spec`]).

use std::str::FromStr;

use super::WeightMeasure;
use crate::error::{Error, Result};
use crate::monoid::MonoidKind;
use crate::word::Alphabet;

#[derive(Default)]
struct Fields<'a> {
    monoid: Option<(usize, &'a str)>,
    letters: Option<(usize, &'a str)>,
    weights: Option<(usize, &'a str)>,
}

impl WeightMeasure {
    pub fn parse(text: &str) -> Result<Self> {
        let mut fields = Fields::default();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or_default();
            for stmt in content.split(';') {
                let stmt = stmt.trim();
                if stmt.is_empty() {
                    continue;
                }
                let (key, value) = stmt.split_once('=').ok_or_else(|| Error::Parse {
                    line,
                    reason: format!("expected `key = value`, found `{stmt}`"),
                })?;
                let slot = match key.trim() {
                    "monoid" => &mut fields.monoid,
                    "letters" => &mut fields.letters,
                    "weights" => &mut fields.weights,
                    other => {
                        return Err(Error::Parse {
                            line,
                            reason: format!("unknown key `{other}`"),
                        })
                    }
                };
                if slot.is_some() {
                    return Err(Error::Parse {
                        line,
                        reason: format!("duplicate key `{}`", key.trim()),
                    });
                }
                *slot = Some((line, value.trim()));
            }
        }
        let missing = |key: &str| Error::Parse {
            line: last_line,
            reason: format!("missing key `{key}`"),
        };
        let (mline, monoid) = fields.monoid.ok_or_else(|| missing("monoid"))?;
        let (lline, letters) = fields.letters.ok_or_else(|| missing("letters"))?;
        let (wline, weights) = fields.weights.ok_or_else(|| missing("weights"))?;

        let at = |line: usize| move |e: Error| Error::Parse {
            line,
            reason: e.to_string(),
        };
        let kind = MonoidKind::from_str(monoid).map_err(at(mline))?;
        let alphabet = Alphabet::new(letters.split_whitespace()).map_err(at(lline))?;
        let weights = weights
            .split_whitespace()
            .map(|t| kind.parse_value(t))
            .collect::<Result<Vec<_>>>()
            .map_err(at(wline))?;
        WeightMeasure::new(alphabet, kind, weights).map_err(at(wline))
    }

    /// Multi-line measure file text.
    pub fn to_spec_string(&self) -> String {
        format!(
            "monoid = {}\nletters = {}\nweights = {}\n",
            self.kind,
            self.alphabet.letters().join(" "),
            self.weights_text()
        )
    }

    /// Single-line form, parseable by [`WeightMeasure::parse`].
    pub fn to_inline_spec(&self) -> String {
        format!(
            "monoid = {}; letters = {}; weights = {}",
            self.kind,
            self.alphabet.letters().join(" "),
            self.weights_text()
        )
    }

    fn weights_text(&self) -> String {
        self.weights
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromStr for WeightMeasure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeightMeasure::parse(s)
    }
}
