//! Ordered alphabets and words over them.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite, strictly totally ordered alphabet. Letter order is list order.
#[derive(Debug, Clone)]
pub struct Alphabet {
    letters: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("no letters".into()));
        }
        let mut index = HashMap::with_capacity(letters.len());
        for (i, token) in letters.iter().enumerate() {
            if token.is_empty() || token.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlphabet(format!("bad token `{token}`")));
            }
            if index.insert(token.clone(), i).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate letter `{token}`")));
            }
        }
        Ok(Alphabet { letters, index })
    }

    /// Alphabet whose letters are the characters of `chars`, in order.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn token(&self, letter: usize) -> &str {
        &self.letters[letter]
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    fn single_chars(&self) -> bool {
        self.letters.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a word. Comma-separated tokens are always accepted; when every
    /// letter is a single character the word may also be written without
    /// separators. The empty string is the empty word.
    pub fn parse_word(&self, input: &str) -> Result<Word> {
        let lookup = |t: &str| self.index_of(t).ok_or_else(|| Error::UnknownLetter(t.to_string()));
        if input.is_empty() {
            return Ok(Word::empty());
        }
        if let Some(i) = self.index_of(input) {
            return Ok(Word(vec![i]));
        }
        if self.single_chars() && !input.contains(',') {
            let mut buf = [0u8; 4];
            return input
                .chars()
                .map(|c| lookup(c.encode_utf8(&mut buf)))
                .collect::<Result<_>>()
                .map(Word);
        }
        input.split(',').map(lookup).collect::<Result<_>>().map(Word)
    }

    /// Renders a word in the form accepted by [`Alphabet::parse_word`]:
    /// single-character and brace-delimited class tokens are concatenated,
    /// anything else is comma-separated.
    pub fn render(&self, word: &Word) -> String {
        let concat = self
            .letters
            .iter()
            .all(|t| t.chars().count() == 1 || (t.starts_with('{') && t.ends_with('}')));
        let tokens = word.letters().iter().map(|&l| self.token(l));
        if concat {
            tokens.collect()
        } else {
            tokens.collect::<Vec<_>>().join(",")
        }
    }

    /// All words of length `n` in lexicographic order.
    pub fn words_of_length(&self, n: usize) -> WordsOfLength {
        WordsOfLength::new(self.len(), n)
    }

    /// All words of length at most `max_len`, shortest first, lexicographic
    /// within a length. Includes the empty word.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |n| self.words_of_length(n))
    }
}

/// A finite word, stored as indices into its alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letter counts indexed by letter, for an alphabet of `size` letters.
    pub fn parikh_vector(&self, size: usize) -> Vec<usize> {
        let mut counts = vec![0; size];
        for &l in &self.0 {
            counts[l] += 1;
        }
        counts
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Odometer over `Σ^n`.
pub struct WordsOfLength {
    size: usize,
    next: Option<Vec<usize>>,
}

impl WordsOfLength {
    fn new(size: usize, n: usize) -> Self {
        let next = (size > 0 || n == 0).then(|| vec![0; n]);
        WordsOfLength { size, next }
    }
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        while pos > 0 {
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.size {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(Word(current))
    }
}

/// `size^len` as a saturating count, for capacity checks.
pub(crate) fn space_size(size: usize, len: usize) -> u128 {
    (0..len).fold(1u128, |acc, _| acc.saturating_mul(size as u128))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a", "b c"]).is_err());
        assert!(Alphabet::new(["a", ""]).is_err());
    }

    #[test]
    fn parse_and_render_single_chars() {
        let sigma = Alphabet::from_chars("anb").unwrap();
        let w = sigma.parse_word("banana").unwrap();
        assert_eq!(w.letters(), &[2, 0, 1, 0, 1, 0]);
        assert_eq!(sigma.render(&w), "banana");
        assert_eq!(sigma.parse_word("b,a,n").unwrap().letters(), &[2, 0, 1]);
        assert!(sigma.parse_word("bx").is_err());
        assert!(sigma.parse_word("").unwrap().is_empty());
    }

    #[test]
    fn parse_and_render_tokens() {
        let sigma = Alphabet::new(["lo", "hi"]).unwrap();
        let w = sigma.parse_word("hi,lo,lo").unwrap();
        assert_eq!(w.letters(), &[1, 0, 0]);
        assert_eq!(sigma.render(&w), "hi,lo,lo");
        assert_eq!(sigma.parse_word("hi").unwrap().letters(), &[1]);
        assert!(sigma.parse_word("hilo").is_err());
    }

    #[test]
    fn render_class_tokens() {
        let sigma = Alphabet::new(["{a}", "{n,c}", "{b}"]).unwrap();
        let w = Word::new(vec![1, 0, 2]);
        assert_eq!(sigma.render(&w), "{n,c}{a}{b}");
    }

    #[test]
    fn enumerates_in_lex_order() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let words: Vec<String> = sigma.words_of_length(2).map(|w| sigma.render(&w)).collect();
        assert_eq!(words, ["aa", "ab", "ba", "bb"]);
        assert_eq!(sigma.words_of_length(0).count(), 1);
        assert_eq!(sigma.words_up_to(3).count(), 1 + 2 + 4 + 8);
        let three = Alphabet::from_chars("abc").unwrap();
        let all: Vec<Word> = three.words_of_length(4).collect();
        assert_eq!(all.len(), 81);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn parikh_and_reverse() {
        let w = Word::new(vec![2, 0, 1, 0]);
        assert_eq!(w.parikh_vector(3), vec![2, 1, 1]);
        assert_eq!(w.reversed().letters(), &[0, 1, 0, 2]);
        assert_eq!(space_size(4, 6), 4096);
    }
}
