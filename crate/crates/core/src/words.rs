//! Letters, alphabets and finite words.
//!
//! Letters are indices into an [`Alphabet`]; the alphabet owns the textual
//! tokens and fixes the canonical letter order (declaration order). Words
//! compare in length-lexicographic order, which is the canonical order used
//! for every set-valued result in this crate.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};

/// A letter, identified by its position in the owning alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of whitespace-free letter tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet {
            tokens: Vec::new(),
            lookup: HashMap::new(),
        };
        for token in tokens {
            let token = token.into();
            if token.is_empty() || token.chars().any(char::is_whitespace) {
                return Err(Error::InvalidToken(token));
            }
            if out.lookup.contains_key(&token) {
                return Err(Error::DuplicateLetter(token));
            }
            out.lookup.insert(token.clone(), Letter(out.tokens.len() as u32));
            out.tokens.push(token);
        }
        if out.tokens.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.tokens.len() as u32).map(Letter)
    }

    pub fn token(&self, letter: Letter) -> &str {
        &self.tokens[letter.index()]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn letter(&self, token: &str) -> Option<Letter> {
        self.lookup.get(token).copied()
    }

    /// Parses a whitespace-separated token sequence. The empty string is ε.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| self.letter(tok).ok_or_else(|| Error::UnknownLetter(tok.to_string())))
            .collect()
    }

    /// Renders a word as space-separated tokens; ε renders as the empty string.
    pub fn render(&self, word: &[Letter]) -> String {
        let mut out = String::new();
        for (i, &l) in word.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.token(l));
        }
        out
    }

    pub fn render_set(&self, letters: &BTreeSet<Letter>) -> Vec<String> {
        letters.iter().map(|&l| self.token(l).to_string()).collect()
    }

    pub fn contains_word(&self, word: &[Letter]) -> bool {
        word.iter().all(|l| l.index() < self.len())
    }
}

/// A finite word over some alphabet. `Word::default()` is ε.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_slice(&mut self, letters: &[Letter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn pow(&self, exponent: usize) -> Word {
        Word(self.0.repeat(exponent))
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The set of letters occurring in the word.
    pub fn alph(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
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

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.0.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Length first, then lexicographic by letter index.
pub fn canonical_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Returns `(root, exponent)` with `root^exponent == u` and `root` primitive.
pub fn primitive_root(u: &[Letter]) -> Result<(Word, usize)> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let period = smallest_period(u);
    if u.len().is_multiple_of(period) {
        Ok((Word::from_slice(&u[..period]), u.len() / period))
    } else {
        Ok((Word::from_slice(u), 1))
    }
}

pub fn is_primitive(u: &[Letter]) -> bool {
    !u.is_empty() && primitive_root(u).map(|(_, e)| e == 1).unwrap_or(false)
}

/// Smallest period of a non-empty word via the KMP failure function.
fn smallest_period(u: &[Letter]) -> usize {
    let n = u.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && u[i] != u[k] {
            k = fail[k - 1];
        }
        if u[i] == u[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

/// True iff `u = xy` and `v = yx` for some words `x`, `y`.
pub fn is_conjugate(u: &[Letter], v: &[Letter]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let doubled: Vec<Letter> = u.iter().chain(u.iter()).copied().collect();
    !occurrences(v, &doubled).is_empty()
}

/// All factors of `u` of length at most `max_len`, ε included.
pub fn factors(u: &[Letter], max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    out.insert(Word::empty());
    for len in 1..=max_len.min(u.len()) {
        for window in u.windows(len) {
            out.insert(Word::from_slice(window));
        }
    }
    out
}

/// Ascending start positions of `pattern` in `text`.
pub fn occurrences(pattern: &[Letter], text: &[Letter]) -> Vec<usize> {
    if pattern.is_empty() || pattern.len() > text.len() {
        return Vec::new();
    }
    text.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

pub fn is_factor(pattern: &[Letter], text: &[Letter]) -> bool {
    pattern.is_empty() || text.windows(pattern.len()).any(|w| w == pattern)
}

/// Z-array: `z[i]` is the length of the longest common prefix of `s` and `s[i..]`.
pub(crate) fn z_array(s: &[Letter]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}
