use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// Index of a symbol inside its [`Alphabet`].
pub type Letter = u8;

/// Characters that carry meaning in the text formats and therefore cannot
/// appear inside a symbol name.
const RESERVED: &[char] = &[
    '(', ')', '|', '*', '@', '#', '∅', 'λ', ',', ':', ';', '{', '}', '[', ']', '"', '\'',
];

/// Token used for the empty word in every text format.
pub const EMPTY_WORD: &str = "@";

/// An ordered finite set of named symbols.
///
/// Symbol names are non-empty and, when several are longer than one
/// character, prefix-free, so that a concatenation of names can be split
/// back into symbols by longest match.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if symbols.len() > Letter::MAX as usize + 1 {
            return Err(Error::InvalidAlphabet(format!(
                "at most {} symbols are supported",
                Letter::MAX as usize + 1
            )));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidAlphabet("empty symbol name".into()));
            }
            if let Some(c) = s
                .chars()
                .find(|c| c.is_whitespace() || RESERVED.contains(c))
            {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol `{s}` contains reserved character `{c}`"
                )));
            }
            for t in &symbols[..i] {
                if t == s {
                    return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
                }
                if t.starts_with(s.as_str()) || s.starts_with(t.as_str()) {
                    return Err(Error::InvalidAlphabet(format!(
                        "symbols `{t}` and `{s}` are not prefix-free"
                    )));
                }
            }
        }
        Ok(Alphabet { symbols })
    }

    /// One symbol per character of `letters`.
    pub fn from_chars(letters: &str) -> Result<Self> {
        Self::new(letters.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.symbols.len()).map(|i| i as Letter)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as Letter)
    }

    pub fn contains_letter(&self, letter: Letter) -> bool {
        (letter as usize) < self.symbols.len()
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols.iter().all(|s| other.letter(s).is_some())
    }

    /// For every letter of `sup`, the corresponding letter of `self`, if any.
    pub fn projection_from(&self, sup: &Alphabet) -> Vec<Option<Letter>> {
        sup.symbols.iter().map(|s| self.letter(s)).collect()
    }

    /// For every letter of `self`, the corresponding letter of `sup`.
    pub fn embedding_into(&self, sup: &Alphabet) -> Result<Vec<Letter>> {
        self.symbols
            .iter()
            .map(|s| sup.letter(s).ok_or_else(|| Error::ForeignLetter(s.clone())))
            .collect()
    }

    /// Parses a word by longest match. `@` and the empty string denote the
    /// empty word; whitespace between symbols is ignored.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.parse_word_at(text, 1, 1).map_err(Error::from)
    }

    pub(crate) fn parse_word_at(
        &self,
        text: &str,
        line: usize,
        column: usize,
    ) -> std::result::Result<Word, ParseError> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == EMPTY_WORD || trimmed == "λ" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut rest = text;
        let mut col = column;
        while !rest.is_empty() {
            let c = rest.chars().next().unwrap();
            if c.is_whitespace() {
                rest = &rest[c.len_utf8()..];
                col += 1;
                continue;
            }
            let best = self
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| rest.starts_with(s.as_str()))
                .max_by_key(|(_, s)| s.len());
            match best {
                Some((i, s)) => {
                    letters.push(i as Letter);
                    col += s.chars().count();
                    rest = &rest[s.len()..];
                }
                None => {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("`{c}` does not start a symbol of the alphabet"),
                    ))
                }
            }
        }
        Ok(Word(letters))
    }

    /// Formats a word; the empty word is written `@`. Multi-character
    /// symbol names are concatenated as well, which longest match undoes.
    pub fn format_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let mut out = String::new();
        for &l in word {
            out.push_str(self.name(l));
        }
        out
    }

    /// Space separated listing of the symbols, as used by the text formats.
    pub fn to_line(&self) -> String {
        self.symbols.join(" ")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(", "))
    }
}

impl TryFrom<Vec<String>> for Alphabet {
    type Error = Error;

    fn try_from(symbols: Vec<String>) -> Result<Self> {
        Alphabet::new(symbols)
    }
}

impl From<Alphabet> for Vec<String> {
    fn from(a: Alphabet) -> Self {
        a.symbols
    }
}

/// A finite sequence of letters. The alphabet it lives over is implied by
/// the context (the automaton or grammar that owns it).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn concat(parts: &[&[Letter]]) -> Self {
        let mut v = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            v.extend_from_slice(p);
        }
        Word(v)
    }

    pub fn repeat(&self, times: usize) -> Self {
        Word(self.0.repeat(times))
    }

    pub fn into_inner(self) -> Vec<Letter> {
        self.0
    }

    /// Occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Length-then-lexicographic order.
pub fn shortlex(a: &[Letter], b: &[Letter]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Every word over `alphabet_len` letters with length at most `max_len`,
/// in shortlex order.
pub fn all_words(alphabet_len: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet_len);
        for w in &layer {
            for l in 0..alphabet_len {
                let mut v = w.0.clone();
                v.push(l as Letter);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_prefix_clashes() {
        assert!(Alphabet::from_chars("aba").is_err());
        assert!(Alphabet::new(["a", "a1"]).is_err());
        assert!(Alphabet::new(["a(", "b"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a1", "a2", "b1"]).is_ok());
    }

    #[test]
    fn parses_multi_character_symbols() {
        let a = Alphabet::new(["a1", "a2"]).unwrap();
        let w = a.parse_word("a1a2a1").unwrap();
        assert_eq!(w.0, vec![0, 1, 0]);
        assert_eq!(a.format_word(&w), "a1a2a1");
        assert_eq!(a.parse_word("a1 a2").unwrap().0, vec![0, 1]);
        assert!(a.parse_word("@").unwrap().is_empty());
        let err = a.parse_word("a1b").unwrap_err();
        assert!(matches!(err, Error::Parse(ParseError { column: 3, .. })));
    }

    #[test]
    fn projection_and_embedding() {
        let v = Alphabet::from_chars("abc").unwrap();
        let u = Alphabet::from_chars("cb").unwrap();
        assert!(u.is_subset_of(&v));
        assert_eq!(u.projection_from(&v), vec![None, Some(1), Some(0)]);
        assert_eq!(u.embedding_into(&v).unwrap(), vec![2, 1]);
    }

    #[test]
    fn all_words_counts() {
        assert_eq!(all_words(2, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(all_words(3, 0), vec![Word::empty()]);
    }
}
