//! Alphabets and words: the index sets of noncommutative series.
//!
//! A [`Word`] stores letter *indices* into its [`Alphabet`], so the same word
//! type serves `{e0, e1}`, `{e0, einf}`, `{x, y}` and the `f`-letter copies.
//! Words are ordered by length first, then lexicographically by index; every
//! basis enumeration and serialized map in the crate inherits this order.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// A finite ordered set of letter names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Arc<[String]>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(letters: &[S]) -> Self {
        assert!(!letters.is_empty(), "alphabet must be nonempty");
        assert!(letters.len() <= 10, "letter indices must fit in a single digit");
        Alphabet { letters: letters.iter().map(|s| s.as_ref().to_owned()).collect() }
    }

    /// The `{e0, e1}` alphabet.
    pub fn e01() -> Self {
        Alphabet::new(&["e0", "e1"])
    }

    /// The `{e0, einf}` alphabet used around the `einf = -e0-e1` change of letters.
    pub fn e0inf() -> Self {
        Alphabet::new(&["e0", "einf"])
    }

    /// The `{x, y}` alphabet.
    pub fn xy() -> Self {
        Alphabet::new(&["x", "y"])
    }

    /// The `{f0, f1}` copy used for the second tensor leg of the matrix model.
    pub fn f01() -> Self {
        Alphabet::new(&["f0", "f1"])
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, idx: u8) -> &str {
        &self.letters[idx as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.letters.iter().position(|l| l == name).map(|i| i as u8)
    }
}

/// A word over some alphabet, stored as letter indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: Vec<u8>) -> Self {
        Word(indices)
    }

    pub fn single(idx: u8) -> Self {
        Word(vec![idx])
    }

    /// Convenience constructor by letter names; panics on unknown letters.
    pub fn from_letters(alphabet: &Alphabet, letters: &[&str]) -> Self {
        Word(
            letters
                .iter()
                .map(|l| alphabet.index_of(l).unwrap_or_else(|| panic!("unknown letter {l}")))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Number of occurrences of the given letter index.
    pub fn count(&self, idx: u8) -> usize {
        self.0.iter().filter(|&&l| l == idx).count()
    }

    /// The factor `self[a..b]`.
    pub fn slice(&self, a: usize, b: usize) -> Word {
        Word(self.0[a..b].to_vec())
    }

    /// Compact digit-string form used as a JSON map key ("" for the empty word).
    pub fn to_key(&self) -> String {
        self.0.iter().map(|&i| char::from(b'0' + i)).collect()
    }

    /// Parses a digit-string key, checking letters against `alphabet`.
    pub fn from_key(key: &str, alphabet: &Alphabet) -> Result<Word> {
        let mut v = Vec::with_capacity(key.len());
        for ch in key.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| AlgebraError::InconsistentInput(format!("bad word key {key:?}")))?;
            if d as usize >= alphabet.len() {
                return Err(AlgebraError::InconsistentInput(format!(
                    "letter index {d} out of range for a {}-letter alphabet",
                    alphabet.len()
                )));
            }
            v.push(d as u8);
        }
        Ok(Word(v))
    }

    /// Human-readable form, e.g. `e0 e1 e1`.
    pub fn display_in(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".to_owned();
        }
        self.0.iter().map(|&i| alphabet.name(i)).collect::<Vec<_>>().join(" ")
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", self.to_key())
        }
    }
}

/// All words of the given length, in lexicographic order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let k = alphabet.len() as u8;
    let mut out = Vec::new();
    let mut cur = vec![0u8; len];
    loop {
        out.push(Word(cur.clone()));
        // Odometer increment.
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < k {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// All words of length `0..=max_len`, in the global (length, lex) order.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| words_of_length(alphabet, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_lookup() {
        let a = Alphabet::e01();
        assert_eq!(a.len(), 2);
        assert_eq!(a.index_of("e1"), Some(1));
        assert_eq!(a.index_of("e2"), None);
        assert_eq!(a.name(0), "e0");
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let w = |s: &str| Word::from_key(s, &Alphabet::e01()).unwrap();
        let mut v = vec![w("1"), w(""), w("01"), w("10"), w("0"), w("00")];
        v.sort();
        assert_eq!(v, vec![w(""), w("0"), w("1"), w("00"), w("01"), w("10")]);
    }

    #[test]
    fn key_round_trip() {
        let a = Alphabet::e01();
        let w = Word::from_letters(&a, &["e0", "e1", "e1"]);
        assert_eq!(w.to_key(), "011");
        assert_eq!(Word::from_key("011", &a).unwrap(), w);
        assert_eq!(Word::from_key("", &a).unwrap(), Word::empty());
        assert!(Word::from_key("02", &a).is_err());
        assert!(Word::from_key("0a", &a).is_err());
    }

    #[test]
    fn enumeration_order() {
        let a = Alphabet::e01();
        let keys: Vec<String> = words_up_to(&a, 2).iter().map(Word::to_key).collect();
        assert_eq!(keys, vec!["", "0", "1", "00", "01", "10", "11"]);
        assert_eq!(words_of_length(&a, 0), vec![Word::empty()]);
    }
}
