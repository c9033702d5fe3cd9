//! Length-bounded factor languages of PDF0L systems.
//!
//! The set of factors of length `n` is built level by level. A factor `u` of
//! some `φ^k(w)` with `k >= 1` and `|u| = n` sits inside `φ(v)` for a factor
//! `v` of `φ^{k-1}(w)` with `|v| <= cover_len(n) = max(1, ⌊2 + (n-2)/⌊φ⌋⌋)`,
//! which never exceeds `n`. Any such `v` can be extended inside the language
//! either to length `cover_len(n)` or up to a word that has no one-letter
//! extension. Those two families are the only words whose images need to be
//! scanned for level `n`. When `cover_len(n) = n` the level is computed as a
//! least fixed point.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::system::System;
use crate::words::{Letter, Word};

/// Upper bound on the length of a minimal cover of a word of length `n >= 1`.
pub(crate) fn cover_len(n: usize, min_image: usize) -> usize {
    debug_assert!(n >= 1 && min_image >= 1);
    // ⌊(2m + n - 2) / m⌋, with n >= 1 keeping the numerator positive.
    ((2 * min_image + n - 2) / min_image).max(1)
}

/// All words of `L(S)` up to a length bound, grouped by length in canonical order.
#[derive(Debug, Clone)]
pub struct FactorSet {
    system: System,
    levels: Vec<Vec<Word>>,
    members: HashSet<Word>,
    /// Words known to be a proper factor of a longer member.
    extendable: HashSet<Word>,
}

impl FactorSet {
    pub fn new(system: &System, max_len: usize) -> Result<Self> {
        system.require_pdf0l()?;
        let mut set = FactorSet {
            system: system.clone(),
            levels: vec![vec![Word::empty()]],
            members: HashSet::from([Word::empty()]),
            extendable: HashSet::new(),
        };
        set.extend_to(max_len);
        Ok(set)
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn max_len(&self) -> usize {
        self.levels.len() - 1
    }

    /// Grows the set so that it holds every member of length `<= max_len`.
    pub fn extend_to(&mut self, max_len: usize) {
        while self.max_len() < max_len {
            self.add_level();
        }
    }

    fn add_level(&mut self) {
        let n = self.levels.len();
        let phi = self.system.morphism().clone();
        let cover = cover_len(n, phi.min_image_len());
        let mut level: HashSet<Word> = HashSet::new();

        let harvest = |text: &[Letter], level: &mut HashSet<Word>, fresh: &mut Vec<Word>| {
            if text.len() < n {
                return;
            }
            for window in text.windows(n) {
                if !level.contains(window) {
                    let w = Word::from_slice(window);
                    level.insert(w.clone());
                    fresh.push(w);
                }
            }
        };

        let mut fresh = Vec::new();
        for axiom in self.system.axioms() {
            harvest(axiom, &mut level, &mut fresh);
        }
        let mut image = Vec::new();
        for len in 1..cover.min(n) {
            for v in &self.levels[len] {
                // Extensions of words of length n - 1 are not known yet.
                if len + 1 < n && self.extendable.contains(v) {
                    continue;
                }
                image.clear();
                phi.apply_into(v, &mut image);
                harvest(&image, &mut level, &mut fresh);
            }
        }
        if cover == n {
            // Sources of length n are this level itself: iterate to a fixed point.
            let mut queue = fresh.clone();
            while let Some(v) = queue.pop() {
                image.clear();
                phi.apply_into(&v, &mut image);
                let mut more = Vec::new();
                harvest(&image, &mut level, &mut more);
                queue.extend(more);
            }
        } else if cover < n {
            // Sources of length exactly `cover` are always scanned.
            for v in &self.levels[cover] {
                image.clear();
                phi.apply_into(v, &mut image);
                harvest(&image, &mut level, &mut fresh);
            }
        }

        let mut words: Vec<Word> = level.into_iter().collect();
        words.sort();
        for w in &words {
            self.extendable.insert(Word::from_slice(&w[..n - 1]));
            self.extendable.insert(Word::from_slice(&w[1..]));
            self.members.insert(w.clone());
        }
        self.levels.push(words);
    }

    pub fn contains(&self, u: &[Letter]) -> bool {
        self.members.contains(u)
    }

    /// Members of length exactly `n` (empty beyond the bound).
    pub fn words_of_len(&self, n: usize) -> &[Word] {
        self.levels.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All members in canonical order, ε first.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members of length `<= max_len` as a canonical vector.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        self.levels.iter().take(max_len + 1).flatten().cloned().collect()
    }
}

/// `{u ∈ L(S) : |u| <= max_len}`.
pub fn factor_language(system: &System, max_len: usize) -> Result<FactorSet> {
    FactorSet::new(system, max_len)
}

/// Membership of `u` in `L(S)`.
pub fn contains(system: &System, u: &[Letter]) -> Result<bool> {
    Ok(FactorSet::new(system, u.len())?.contains(u))
}

/// Fails with [`Error::NotInLanguage`] unless `u` is a member.
pub(crate) fn require_member(set: &FactorSet, u: &[Letter]) -> Result<()> {
    if set.contains(u) {
        Ok(())
    } else {
        Err(Error::NotInLanguage(set.system().render_word(u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::words::factors;
    use std::collections::BTreeSet;

    fn rendered(set: &FactorSet, n: usize) -> Vec<String> {
        set.words_of_len(n)
            .iter()
            .map(|w| set.system().render_word(w))
            .collect()
    }

    #[test]
    fn thue_morse_listing() {
        let tm = catalog::thue_morse();
        let f = factor_language(&tm, 4).unwrap();
        assert_eq!(rendered(&f, 1), ["a", "b"]);
        assert_eq!(rendered(&f, 2), ["a a", "a b", "b a", "b b"]);
        assert_eq!(rendered(&f, 3), ["a a b", "a b a", "a b b", "b a a", "b a b", "b b a"]);
        let four = rendered(&f, 4);
        assert_eq!(&four[..2], ["a a b a", "a a b b"]);
        assert!(!f.contains(&tm.parse_word("a a a").unwrap()));
        assert!(!f.contains(&tm.parse_word("b b b").unwrap()));
    }

    #[test]
    fn zero_bound_is_epsilon_only() {
        let f = factor_language(&catalog::thue_morse(), 0).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f.contains(&[]));
    }

    #[test]
    fn single_axiom_square_loses_words() {
        let e5 = catalog::bounded_tails();
        let ad = e5.parse_word("a d").unwrap();
        assert!(contains(&e5, &ad).unwrap());
        let squared = e5.morphism().power(2);
        let wrong = System::new(squared, vec![e5.parse_word("b").unwrap()]).unwrap();
        assert!(!contains(&wrong, &ad).unwrap());
    }

    #[test]
    fn axioms_are_members() {
        let e2 = catalog::eventually_injective();
        for w in e2.axioms() {
            assert!(contains(&e2, w).unwrap());
        }
        assert!(!contains(
            &catalog::thue_morse(),
            &catalog::thue_morse().parse_word("a a a").unwrap()
        )
        .unwrap());
    }

    #[test]
    fn erasing_is_refused() {
        let s = System::from_rules(&["a", "c"], &[("a", "a c"), ("c", "")], &["a"]).unwrap();
        assert!(matches!(factor_language(&s, 3), Err(Error::Erasing(_))));
    }

    #[test]
    fn closed_and_saturated() {
        for s in [
            catalog::thue_morse(),
            catalog::eventually_injective(),
            catalog::bounded_tails(),
            catalog::repetitive_bc(),
        ] {
            let l = 7;
            let f = factor_language(&s, l).unwrap();
            let all: BTreeSet<Word> = f.iter().cloned().collect();
            for v in &all {
                for x in factors(v, l) {
                    assert!(all.contains(&x));
                }
                for x in factors(&s.morphism().apply(v), l) {
                    assert!(all.contains(&x));
                }
            }
            for w in s.axioms() {
                for x in factors(w, l) {
                    assert!(all.contains(&x));
                }
            }
        }
    }

    #[test]
    fn incremental_growth_matches_fresh_build() {
        let s = catalog::not_eventually_injective();
        let mut grown = factor_language(&s, 3).unwrap();
        grown.extend_to(11);
        let fresh = factor_language(&s, 11).unwrap();
        assert_eq!(grown.words_up_to(11), fresh.words_up_to(11));
    }
}
