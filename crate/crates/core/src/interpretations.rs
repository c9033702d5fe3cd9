//! Minimal interpretations, compatible splits and synchronization tests.
//!
//! An interpretation of `u` is a triple `(s, w, t)` with `w ∈ L(S)` and
//! `φ(w) = s·u·t`; it is minimal when `s` and `t` are strictly shorter than
//! the images of the first and last letters of `w`. Every question about
//! compatibility of a split `(u', u'')` with all (or some) interpretations
//! can be answered on minimal interpretations alone, and a minimal
//! interpretation of a word of length `n` has `n/⌈φ⌉ <= |w| <= 2 + (n-2)/⌊φ⌋`.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::language::{cover_len, require_member, FactorSet};
use crate::system::{Morphism, System};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interpretation {
    pub s: Word,
    pub w: Word,
    pub t: Word,
}

impl Interpretation {
    pub fn is_minimal(&self, phi: &Morphism) -> bool {
        match (self.w.first(), self.w.last()) {
            (Some(a), Some(b)) => self.s.len() < phi.image(a).len() && self.t.len() < phi.image(b).len(),
            _ => false,
        }
    }

    /// Offsets `k` into the interpreted word (of length `n`) at which a split
    /// `(u[..k], u[k..])` is compatible, each with the last letter of the
    /// corresponding `w'` (`None` when `w'` is empty).
    pub fn cuts(&self, phi: &Morphism, n: usize) -> Vec<(usize, Option<Letter>)> {
        let s = self.s.len();
        let mut out = Vec::new();
        let mut acc = 0usize;
        if s == 0 {
            out.push((0, None));
        }
        for &a in self.w.iter() {
            acc += phi.image(a).len();
            if acc >= s && acc - s <= n {
                out.push((acc - s, Some(a)));
            }
            if acc > s + n {
                break;
            }
        }
        out
    }

    pub fn render(&self, system: &System) -> [String; 3] {
        [
            system.render_word(&self.s),
            system.render_word(&self.w),
            system.render_word(&self.t),
        ]
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.w
            .cmp(&other.w)
            .then_with(|| self.s.cmp(&other.s))
            .then_with(|| self.t.cmp(&other.t))
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A split `w = w'·w''` with `φ(w') = s·u'` and `φ(w'') = u''·t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSplit {
    pub left: Word,
    pub right: Word,
}

/// The split of `interp.w` compatible with `(u1, u2)`, if any.
///
/// Image lengths strictly increase along prefixes of `w`, so there is at most one.
pub fn compatible_split(phi: &Morphism, interp: &Interpretation, u1: &[Letter], u2: &[Letter]) -> Option<PairSplit> {
    let image = phi.apply(&interp.w);
    let (s, t) = (interp.s.len(), interp.t.len());
    if image.len() != s + u1.len() + u2.len() + t
        || image[..s] != interp.s[..]
        || image[s..s + u1.len()] != *u1
        || image[s + u1.len()..s + u1.len() + u2.len()] != *u2
        || image[image.len() - t..] != interp.t[..]
    {
        return None;
    }
    let target = s + u1.len();
    let mut acc = 0usize;
    for j in 0..=interp.w.len() {
        if acc == target {
            return Some(PairSplit {
                left: interp.w.slice(0, j),
                right: interp.w.slice(j, interp.w.len()),
            });
        }
        if j < interp.w.len() {
            acc += phi.image(interp.w[j]).len();
        }
    }
    None
}

/// Result of searching a word for a weakly synchronizing split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncOutcome {
    /// Smallest `k` such that `(u[..k], u[k..])` is weakly synchronizing.
    pub split: Option<usize>,
    /// True when the word has no interpretation at all.
    pub vacuous: bool,
    pub interpretations: usize,
}

impl SyncOutcome {
    pub fn is_synchronized(&self) -> bool {
        self.split.is_some()
    }
}

/// Split offsets shared by every interpretation, in ascending order.
pub(crate) fn common_cuts(phi: &Morphism, interps: &[Interpretation], n: usize) -> Vec<usize> {
    let mut common: Vec<usize> = (0..=n).collect();
    for it in interps {
        let cuts: Vec<usize> = it.cuts(phi, n).into_iter().map(|(k, _)| k).collect();
        common.retain(|k| cuts.contains(k));
        if common.is_empty() {
            break;
        }
    }
    common
}

pub(crate) fn weak_at(phi: &Morphism, interps: &[Interpretation], n: usize, k: usize) -> bool {
    interps.iter().all(|it| it.cuts(phi, n).iter().any(|&(c, _)| c == k))
}

pub(crate) fn admissible_at(phi: &Morphism, interps: &[Interpretation], n: usize, k: usize) -> bool {
    interps.iter().any(|it| it.cuts(phi, n).iter().any(|&(c, _)| c == k))
}

/// Outcome of a strong-synchronization check at one split offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StrongCheck {
    /// No interpretation at all.
    Vacuous,
    /// Every interpretation splits with `w'` ending in this letter.
    Letter(Letter),
    Fails,
}

impl StrongCheck {
    pub(crate) fn holds(self) -> bool {
        self != StrongCheck::Fails
    }
}

/// Strong-synchronization check for the split at `k >= 1`.
pub(crate) fn strong_at(phi: &Morphism, interps: &[Interpretation], n: usize, k: usize) -> StrongCheck {
    debug_assert!(k >= 1);
    let mut letter: Option<Letter> = None;
    for it in interps {
        let found = it.cuts(phi, n).into_iter().find(|&(c, _)| c == k).and_then(|(_, l)| l);
        match (found, letter) {
            (None, _) => return StrongCheck::Fails,
            (Some(a), None) => letter = Some(a),
            (Some(a), Some(b)) if a != b => return StrongCheck::Fails,
            _ => {}
        }
    }
    letter.map_or(StrongCheck::Vacuous, StrongCheck::Letter)
}

/// Analysis context: a system plus a factor-language cache that grows on demand.
#[derive(Debug, Clone)]
pub struct Interpreter {
    language: FactorSet,
}

impl Interpreter {
    pub fn new(system: &System) -> Result<Self> {
        Ok(Interpreter {
            language: FactorSet::new(system, 1)?,
        })
    }

    pub fn from_language(language: FactorSet) -> Self {
        Interpreter { language }
    }

    pub fn system(&self) -> &System {
        self.language.system()
    }

    pub fn morphism(&self) -> &Morphism {
        self.language.system().morphism()
    }

    /// The cached language, grown to at least `max_len`.
    pub fn language(&mut self, max_len: usize) -> &FactorSet {
        self.language.extend_to(max_len);
        &self.language
    }

    pub fn contains(&mut self, u: &[Letter]) -> bool {
        self.language(u.len()).contains(u)
    }

    fn require_member(&mut self, u: &[Letter]) -> Result<()> {
        self.language.extend_to(u.len());
        require_member(&self.language, u)
    }

    /// Range of `|w|` for minimal interpretations of a word of length `n >= 1`.
    pub fn cover_range(&self, n: usize) -> (usize, usize) {
        let (lo, hi) = self.morphism().image_length_bounds();
        (n.div_ceil(hi), cover_len(n, lo))
    }

    /// All minimal interpretations of every member of length `n`, keyed by the word.
    pub fn interpretations_of_len(&mut self, n: usize) -> HashMap<Word, Vec<Interpretation>> {
        self.interpretations_where(n, |_| true)
    }

    /// Like [`Self::interpretations_of_len`], restricted to words accepted by `keep`.
    pub(crate) fn interpretations_where(
        &mut self,
        n: usize,
        keep: impl Fn(&[Letter]) -> bool,
    ) -> HashMap<Word, Vec<Interpretation>> {
        let mut out: HashMap<Word, Vec<Interpretation>> = HashMap::new();
        if n == 0 {
            return out;
        }
        let (lo, hi) = self.cover_range(n);
        self.language.extend_to(hi.max(n));
        let phi = self.language.system().morphism();
        for len in lo.max(1)..=hi {
            for w in self.language.words_of_len(len) {
                scan_cover(phi, w, n, None, |it, u| {
                    if keep(u) {
                        out.entry(Word::from_slice(u)).or_default().push(it)
                    }
                });
            }
        }
        for list in out.values_mut() {
            list.sort();
            list.dedup();
        }
        out
    }

    /// Minimal interpretations of `u` without the membership check.
    pub(crate) fn interpretations_unchecked(&mut self, u: &[Letter]) -> Vec<Interpretation> {
        let n = u.len();
        let (lo, hi) = self.cover_range(n);
        self.language.extend_to(hi.max(n));
        let phi = self.language.system().morphism();
        let mut out = Vec::new();
        for len in lo.max(1)..=hi {
            for w in self.language.words_of_len(len) {
                scan_cover(phi, w, n, Some(u), |it, _| out.push(it));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Every minimal interpretation of `u`, in canonical order.
    pub fn minimal_interpretations(&mut self, u: &[Letter]) -> Result<Vec<Interpretation>> {
        if u.is_empty() {
            return Err(Error::EmptyWord);
        }
        self.require_member(u)?;
        Ok(self.interpretations_unchecked(u))
    }

    fn pair_interpretations(&mut self, u1: &[Letter], u2: &[Letter]) -> Result<(Word, Vec<Interpretation>)> {
        let u = Word::from_slice(u1).concat(u2);
        let interps = self.minimal_interpretations(&u)?;
        Ok((u, interps))
    }

    /// Some interpretation of `u1·u2` is compatible with the split.
    pub fn is_admissible(&mut self, u1: &[Letter], u2: &[Letter]) -> Result<bool> {
        let (u, interps) = self.pair_interpretations(u1, u2)?;
        Ok(admissible_at(self.morphism(), &interps, u.len(), u1.len()))
    }

    /// Every interpretation of `u1·u2` is compatible with the split.
    pub fn is_weakly_synchronizing(&mut self, u1: &[Letter], u2: &[Letter]) -> Result<bool> {
        let (u, interps) = self.pair_interpretations(u1, u2)?;
        Ok(weak_at(self.morphism(), &interps, u.len(), u1.len()))
    }

    /// Looks for the first weakly synchronizing split of `u`.
    pub fn weak_sync(&mut self, u: &[Letter]) -> Result<SyncOutcome> {
        let interps = self.minimal_interpretations(u)?;
        Ok(self.weak_sync_from(u.len(), &interps))
    }

    pub(crate) fn weak_sync_from(&self, n: usize, interps: &[Interpretation]) -> SyncOutcome {
        SyncOutcome {
            split: common_cuts(self.morphism(), interps, n).first().copied(),
            vacuous: interps.is_empty(),
            interpretations: interps.len(),
        }
    }

    pub fn is_weakly_synchronized(&mut self, u: &[Letter]) -> Result<bool> {
        Ok(self.weak_sync(u)?.is_synchronized())
    }

    /// Some letter ends `w'` in a compatible split of every interpretation.
    pub fn is_strongly_synchronizing(&mut self, u1: &[Letter], u2: &[Letter]) -> Result<bool> {
        if u1.is_empty() {
            return Err(Error::EmptyLeftPart);
        }
        let (u, interps) = self.pair_interpretations(u1, u2)?;
        Ok(strong_at(self.morphism(), &interps, u.len(), u1.len()).holds())
    }
}

/// Feeds `sink` every minimal interpretation `(s, w, t)` of a length-`n`
/// factor of `φ(w)` (only those equal to `pattern`, when given).
fn scan_cover(
    phi: &Morphism,
    w: &[Letter],
    n: usize,
    pattern: Option<&[Letter]>,
    mut sink: impl FnMut(Interpretation, &[Letter]),
) {
    let (Some(&first), Some(&last)) = (w.first(), w.last()) else {
        return;
    };
    let image = phi.apply(w);
    let first_len = phi.image(first).len();
    let last_len = phi.image(last).len();
    if image.len() < n {
        return;
    }
    for i in 0..first_len.min(image.len() - n + 1) {
        let t_len = image.len() - i - n;
        if t_len >= last_len {
            continue;
        }
        if let Some(p) = pattern {
            if image[i..i + n] != *p {
                continue;
            }
        }
        sink(
            Interpretation {
                s: image.slice(0, i),
                w: Word::from_slice(w),
                t: image.slice(i + n, image.len()),
            },
            &image[i..i + n],
        );
    }
}

/// Free-function form of [`Interpreter::minimal_interpretations`].
pub fn minimal_interpretations(system: &System, u: &[Letter]) -> Result<Vec<Interpretation>> {
    Interpreter::new(system)?.minimal_interpretations(u)
}

pub fn is_admissible(system: &System, u1: &[Letter], u2: &[Letter]) -> Result<bool> {
    Interpreter::new(system)?.is_admissible(u1, u2)
}

pub fn is_weakly_synchronizing(system: &System, u1: &[Letter], u2: &[Letter]) -> Result<bool> {
    Interpreter::new(system)?.is_weakly_synchronizing(u1, u2)
}

pub fn is_weakly_synchronized(system: &System, u: &[Letter]) -> Result<SyncOutcome> {
    Interpreter::new(system)?.weak_sync(u)
}

pub fn is_strongly_synchronizing(system: &System, u1: &[Letter], u2: &[Letter]) -> Result<bool> {
    Interpreter::new(system)?.is_strongly_synchronizing(u1, u2)
}
