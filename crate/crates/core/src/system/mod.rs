//! DF0L systems, their morphisms, powers and letter growth.

mod growth;
mod morphism;

pub use growth::{
    classify_letters, invariant_exponent, minimal_invariant_subalphabets, unbounded_letters, GrowthReport,
};
pub use morphism::Morphism;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A DF0L system `(alphabet, morphism, axioms)`.
///
/// The axiom set is stored deduplicated and in canonical order, so two systems
/// with the same axioms listed differently compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    morphism: Morphism,
    axioms: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub letters: usize,
    pub axioms: usize,
    pub pdf0l: bool,
    pub erasing_letters: Vec<String>,
    pub min_image_len: usize,
    pub max_image_len: usize,
}

impl System {
    pub fn new(morphism: Morphism, axioms: Vec<Word>) -> Result<Self> {
        if !morphism.is_endomorphism() {
            return Err(Error::Precondition(
                "system morphism must map the alphabet to itself".into(),
            ));
        }
        if axioms.is_empty() {
            return Err(Error::NoAxioms);
        }
        if axioms.iter().any(|w| w.is_empty()) {
            return Err(Error::EmptyAxiom);
        }
        if let Some(bad) = axioms.iter().find(|w| !morphism.domain().contains_word(w)) {
            return Err(Error::UnknownLetter(format!("{bad}")));
        }
        let mut axioms = axioms;
        axioms.sort();
        axioms.dedup();
        Ok(System { morphism, axioms })
    }

    /// Convenience constructor from textual rules and axioms.
    ///
    /// ```
    /// let tm = df0l::System::from_rules(&["a", "b"], &[("a", "a b"), ("b", "b a")], &["a"]).unwrap();
    /// assert!(tm.is_pdf0l());
    /// ```
    pub fn from_rules(letters: &[&str], rules: &[(&str, &str)], axioms: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(letters.iter().copied())?;
        let morphism = Morphism::from_tokens(alphabet.clone(), alphabet.clone(), rules)?;
        let axioms = axioms
            .iter()
            .map(|w| alphabet.parse_word(w))
            .collect::<Result<Vec<_>>>()?;
        Self::new(morphism, axioms)
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.morphism.domain()
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn axioms(&self) -> &[Word] {
        &self.axioms
    }

    pub fn is_pdf0l(&self) -> bool {
        self.morphism.is_non_erasing()
    }

    /// Fails with [`Error::Erasing`] unless the morphism is non-erasing.
    pub fn require_pdf0l(&self) -> Result<()> {
        match self.morphism.erasing_letters().first() {
            Some(&a) => Err(Error::Erasing(self.alphabet().token(a).to_string())),
            None => Ok(()),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let (min_image_len, max_image_len) = self.morphism.image_length_bounds();
        ValidationReport {
            letters: self.alphabet().len(),
            axioms: self.axioms.len(),
            pdf0l: self.is_pdf0l(),
            erasing_letters: self
                .morphism
                .erasing_letters()
                .into_iter()
                .map(|a| self.alphabet().token(a).to_string())
                .collect(),
            min_image_len,
            max_image_len,
        }
    }

    /// `S^k = (A, φ^k, {φ^i(w) : w ∈ W, 0 <= i < k})`.
    pub fn power(&self, k: usize) -> Result<System> {
        if k == 0 {
            return Err(Error::Precondition("power exponent must be at least 1".into()));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let mut axioms = Vec::new();
        for w in &self.axioms {
            let mut cur = w.clone();
            for i in 0..k {
                if i > 0 {
                    cur = self.morphism.apply(&cur);
                }
                axioms.push(cur.clone());
            }
        }
        System::new(self.morphism.power(k), axioms)
    }

    /// Replaces the axiom set, keeping the morphism.
    pub fn with_axioms(&self, axioms: Vec<Word>) -> Result<System> {
        System::new(self.morphism.clone(), axioms)
    }

    pub fn render_word(&self, w: &[Letter]) -> String {
        self.alphabet().render(w)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet().parse_word(text)
    }
}

/// Free-function form of [`System::power`].
pub fn power_system(system: &System, k: usize) -> Result<System> {
    system.power(k)
}
