use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A morphism `domain* -> codomain*` given by its letter images.
///
/// Most of the crate works with endomorphisms, where both alphabets agree;
/// twined maps between two alphabets use the general form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(domain: Alphabet, codomain: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.len() {
            let missing = domain.tokens().get(images.len()).cloned().unwrap_or_default();
            return Err(Error::MissingImage(missing));
        }
        for (a, img) in domain.letters().zip(&images) {
            if !codomain.contains_word(img) {
                return Err(Error::ImageOutOfAlphabet {
                    letter: domain.token(a).to_string(),
                });
            }
        }
        Ok(Morphism {
            domain,
            codomain,
            images,
        })
    }

    /// An endomorphism of `alphabet`.
    pub fn endo(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        Self::new(alphabet.clone(), alphabet, images)
    }

    /// Builds a morphism from `(letter, image)` token pairs, e.g. `("a", "a b")`.
    pub fn from_tokens(domain: Alphabet, codomain: Alphabet, rules: &[(&str, &str)]) -> Result<Self> {
        let mut images: Vec<Option<Word>> = vec![None; domain.len()];
        for (lhs, rhs) in rules {
            let a = domain
                .letter(lhs)
                .ok_or_else(|| Error::UnknownLetter(lhs.to_string()))?;
            images[a.index()] = Some(codomain.parse_word(rhs)?);
        }
        let images = images
            .into_iter()
            .zip(domain.tokens())
            .map(|(img, tok)| img.ok_or_else(|| Error::MissingImage(tok.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, images)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.letters().map(|a| Word::new(vec![a])).collect();
        Morphism {
            domain: alphabet.clone(),
            codomain: alphabet,
            images,
        }
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a.index()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, u: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(u.len() * self.max_image_len().max(1));
        self.apply_into(u, &mut out);
        Word::new(out)
    }

    pub fn apply_into(&self, u: &[Letter], out: &mut Vec<Letter>) {
        for &a in u {
            out.extend_from_slice(&self.images[a.index()]);
        }
    }

    /// `φ^k(u)`; `k = 0` returns `u`. Only meaningful for endomorphisms.
    pub fn apply_power(&self, u: &[Letter], k: usize) -> Word {
        debug_assert!(self.is_endomorphism());
        let mut cur = Word::from_slice(u);
        for _ in 0..k {
            cur = self.apply(&cur);
        }
        cur
    }

    pub fn image_len(&self, u: &[Letter]) -> usize {
        u.iter().map(|a| self.images[a.index()].len()).sum()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Morphism) -> Morphism {
        debug_assert_eq!(first.codomain, self.domain);
        let images = first.images.iter().map(|img| self.apply(img)).collect();
        Morphism {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        }
    }

    /// `φ^k` for `k >= 1`.
    pub fn power(&self, k: usize) -> Morphism {
        debug_assert!(self.is_endomorphism());
        let images = self.domain.letters().map(|a| self.apply_power(&[a], k)).collect();
        Morphism {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        }
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(|w| w.len()).min().unwrap_or(0)
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    /// `(⌊φ⌋, ⌈φ⌉)`: the shortest and longest letter image lengths.
    pub fn image_length_bounds(&self) -> (usize, usize) {
        (self.min_image_len(), self.max_image_len())
    }

    pub fn erasing_letters(&self) -> Vec<Letter> {
        self.domain
            .letters()
            .filter(|a| self.images[a.index()].is_empty())
            .collect()
    }

    pub fn is_non_erasing(&self) -> bool {
        self.images.iter().all(|w| !w.is_empty())
    }

    /// Renders the rule for `a` as `a -> x y z`.
    pub fn render_rule(&self, a: Letter) -> String {
        let rhs = self.codomain.render(self.image(a));
        if rhs.is_empty() {
            format!("{} ->", self.domain.token(a))
        } else {
            format!("{} -> {}", self.domain.token(a), rhs)
        }
    }
}
