//! Certificates of unbounded repetitiveness.
//!
//! If an unbounded letter `a ∈ L(S)` satisfies `φ^ℓ(a) ∈ a·A⁺`, the words
//! `φ^{ℓk}(a)` converge to a fixed point `x`. When a prefix `u` of `x`
//! satisfies `φ^ℓ(u) = u^n` with `n >= 2`, every `u^{n^k}` is a prefix of
//! some `φ^{ℓj}(a)`, so all powers of the unbounded word `u` lie in `L(S)`.
//! The detector scans `ℓ <= #A` and prefixes up to a period bound; a hit is a
//! proof, a miss is only a bounded negative.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::language::FactorSet;
use crate::system::{unbounded_letters, Morphism, System};
use crate::words::{is_conjugate, is_primitive, primitive_root, z_array, Letter, Word};

/// Smallest default period bound.
pub const MIN_PERIOD_BOUND: usize = 64;

/// Power of a lifted candidate that must lie in the language.
pub const LIFT_POWER: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RepetitivenessVerdict {
    /// `φ^power(witness) = witness^exponent`, `witness` primitive and starting with `letter`.
    Repetitive {
        letter: Letter,
        power: usize,
        witness: Word,
        exponent: usize,
    },
    /// Nothing found with `ℓ <= power_bound` and `|u| <= period_bound`.
    NoWitnessUpTo { power_bound: usize, period_bound: usize },
}

impl RepetitivenessVerdict {
    pub fn is_repetitive(&self) -> bool {
        matches!(self, RepetitivenessVerdict::Repetitive { .. })
    }
}

/// `max(64, ⌈φ⌉^(#A + 1))`, saturating.
pub fn default_period_bound(system: &System) -> usize {
    let base = system.morphism().max_image_len().max(1);
    let mut bound = 1usize;
    for _ in 0..=system.alphabet().len() {
        bound = bound.saturating_mul(base);
    }
    bound.max(MIN_PERIOD_BOUND)
}

/// Letter lengths `|φ^ell(b)|`, saturating.
fn power_lengths(phi: &Morphism, ell: usize) -> Vec<usize> {
    let mut lens = vec![1usize; phi.domain().len()];
    for _ in 0..ell {
        lens = phi
            .images()
            .iter()
            .map(|img| img.iter().fold(0usize, |acc, b| acc.saturating_add(lens[b.index()])))
            .collect();
    }
    lens
}

/// First letter of `φ^ell(a)`.
fn leading_letter(phi: &Morphism, a: Letter, ell: usize) -> Letter {
    (0..ell).fold(a, |x, _| phi.image(x)[0])
}

/// First `n` letters of the fixed point of `φ^ell` starting with `a`, assuming
/// `φ^ell(a) ∈ a·A⁺`.
fn raw_fixed_point_prefix(phi: &Morphism, a: Letter, ell: usize, n: usize) -> Vec<Letter> {
    let images: Vec<Vec<Letter>> = phi
        .domain()
        .letters()
        .map(|b| {
            let mut cur = vec![b];
            for _ in 0..ell {
                let mut next = Vec::new();
                for &c in &cur {
                    next.extend_from_slice(phi.image(c));
                    if next.len() >= n {
                        break;
                    }
                }
                cur = next;
            }
            cur
        })
        .collect();
    let mut x: Vec<Letter> = images[a.index()].clone();
    let mut i = 1;
    while x.len() < n {
        let b = x[i];
        x.extend_from_slice(&images[b.index()]);
        i += 1;
    }
    x.truncate(n);
    x
}

/// The first `n` letters of `lim_k φ^{ℓk}(a)`.
pub fn fixed_point_prefix(system: &System, a: Letter, ell: usize, n: usize) -> Result<Word> {
    system.require_pdf0l()?;
    let phi = system.morphism();
    if ell == 0 || a.index() >= system.alphabet().len() {
        return Err(Error::Precondition("power must be positive and letter valid".into()));
    }
    if !unbounded_letters(phi)?[a.index()] || leading_letter(phi, a, ell) != a {
        return Err(Error::Precondition(format!(
            "φ^{ell}({}) does not start with an unbounded {}",
            system.alphabet().token(a),
            system.alphabet().token(a)
        )));
    }
    Ok(Word::new(raw_fixed_point_prefix(phi, a, ell, n)))
}

/// Searches for `(a, ℓ, u)` with `φ^ℓ(u) = u^n`, `n >= 2`, `u` a prefix of the
/// fixed point of `φ^ℓ` at `a`, scanning in order of `a`, then `ℓ`, then `|u|`.
pub fn detect_unbounded_repetitive(system: &System, period_bound: usize) -> Result<RepetitivenessVerdict> {
    system.require_pdf0l()?;
    if period_bound == 0 {
        return Err(Error::Precondition("period bound must be at least 1".into()));
    }
    let phi = system.morphism();
    let alphabet_len = system.alphabet().len();
    let unbounded = unbounded_letters(phi)?;
    let letters_in_language = FactorSet::new(system, 1)?;

    for a in system.alphabet().letters() {
        if !unbounded[a.index()] || !letters_in_language.contains(&[a]) {
            continue;
        }
        for ell in 1..=alphabet_len {
            if leading_letter(phi, a, ell) != a {
                continue;
            }
            if let Some((witness, exponent)) = scan_fixed_point(phi, a, ell, period_bound) {
                return Ok(RepetitivenessVerdict::Repetitive {
                    letter: a,
                    power: ell,
                    witness,
                    exponent,
                });
            }
        }
    }
    Ok(RepetitivenessVerdict::NoWitnessUpTo {
        power_bound: alphabet_len,
        period_bound,
    })
}

/// Uses `φ^ℓ(x) = x`: for a prefix `u = x[..m]`, `φ^ℓ(u) = x[..N]` with
/// `N = |φ^ℓ(u)|`, so `φ^ℓ(u) = u^n` iff `m | N` and `x[..N]` has period `m`.
fn scan_fixed_point(phi: &Morphism, a: Letter, ell: usize, period_bound: usize) -> Option<(Word, usize)> {
    let lens = power_lengths(phi, ell);
    let mut have = (4 * period_bound).max(16);
    let mut x = raw_fixed_point_prefix(phi, a, ell, have);
    let mut z = z_array(&x);
    let mut image_len = 0usize;
    for m in 1..=period_bound {
        image_len = image_len.saturating_add(lens[x[m - 1].index()]);
        if !image_len.is_multiple_of(m) || image_len / m < 2 {
            continue;
        }
        loop {
            let checked = image_len.min(have);
            let periodic = m >= have || m + z[m] >= checked;
            if !periodic {
                break;
            }
            if checked == image_len {
                let u = Word::from_slice(&x[..m]);
                if is_primitive(&u) {
                    return Some((u, image_len / m));
                }
                break;
            }
            // Periodic so far: extend the prefix before deciding.
            have = image_len.min(have.saturating_mul(4));
            x = raw_fixed_point_prefix(phi, a, ell, have);
            z = z_array(&x);
        }
    }
    None
}

/// A sampled member of `Ω(S)`: primitive `word` with `word^verified_power ∈ L(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaCandidate {
    pub word: Word,
    pub verified_power: usize,
    pub unbounded: bool,
}

/// All primitive `v` with `|v| <= max_len` and `v^power ∈ L(S)`, in canonical order.
pub fn omega_candidates(system: &System, max_len: usize, power: usize) -> Result<Vec<OmegaCandidate>> {
    if max_len == 0 || power == 0 {
        return Err(Error::Precondition("length and power bounds must be positive".into()));
    }
    let unbounded = unbounded_letters(system.morphism())?;
    let language = FactorSet::new(system, max_len * power)?;
    Ok(language
        .words_up_to(max_len)
        .into_iter()
        .filter(|v| is_primitive(v) && language.contains(&v.pow(power)))
        .map(|v| OmegaCandidate {
            unbounded: v.iter().any(|b| unbounded[b.index()]),
            word: v,
            verified_power: power,
        })
        .collect())
}

/// A primitive `u ∈ L(S)`, `|u| <= search_len`, with `ρ(φ(u)) ∼ v` and
/// `u^3 ∈ L(S)`; the first such word in canonical order.
pub fn lift_repetition(system: &System, v: &[Letter], search_len: usize) -> Result<Option<Word>> {
    if !is_primitive(v) {
        return Err(Error::Precondition("v must be primitive".into()));
    }
    let language = FactorSet::new(system, (search_len * LIFT_POWER).max(v.len()))?;
    if !language.contains(v) {
        return Err(Error::NotInLanguage(system.render_word(v)));
    }
    let phi = system.morphism();
    Ok(language
        .words_up_to(search_len)
        .into_iter()
        .filter(|u| !u.is_empty() && is_primitive(u))
        .find(|u| {
            let (root, _) = primitive_root(&phi.apply(u)).expect("non-erasing image is non-empty");
            is_conjugate(&root, v) && language.contains(&u.pow(LIFT_POWER))
        }))
}

/// Pigeonhole construction: given `ψ` injective on the factors of `z`, `v`
/// primitive and `ψ(z)` a factor of some `v^k`, finds a primitive `u` with
/// `u^ell` a factor of `z` and `ρ(ψ(u)) ∼ v`. Returns `u` and the exponent of
/// the run of `u` found in `z`.
///
/// `|z| >= (ell + 1)|v|` guarantees success; shorter inputs are accepted when
/// the residue classes still provide `ell + 1` aligned cut points.
pub fn find_power_in_preimage(psi: &Morphism, z: &[Letter], v: &[Letter], ell: usize) -> Result<(Word, usize)> {
    if ell < 2 {
        return Err(Error::Precondition("ell must be at least 2".into()));
    }
    if !is_primitive(v) {
        return Err(Error::Precondition("v must be primitive".into()));
    }
    if !psi.is_non_erasing() {
        return Err(Error::Precondition("map must be non-erasing".into()));
    }
    check_injective_on_factors(psi, z)?;

    let image = psi.apply(z);
    let p = v.len();
    if image.len() < p {
        return Err(Error::Precondition("image of z is shorter than v".into()));
    }
    let head = &image[..p];
    if !is_conjugate(head, v) || (p..image.len()).any(|i| image[i] != image[i - p]) {
        return Err(Error::Precondition("image of z is not a factor of a power of v".into()));
    }

    // Cut points j of z grouped by |ψ(z[..j])| mod |v|.
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); p];
    let mut acc = 0usize;
    for j in 0..=z.len() {
        classes[acc % p].push(j);
        if j < z.len() {
            acc += psi.image(z[j]).len();
        }
    }
    let cuts = classes
        .into_iter()
        .find(|c| c.len() > ell)
        .ok_or_else(|| Error::Precondition("z is too short for the pigeonhole argument".into()))?;
    let (start, next, end) = (cuts[0], cuts[1], *cuts.last().expect("non-empty class"));
    let (u, _) = primitive_root(&z[start..next])?;
    let run = &z[start..end];
    if !run.len().is_multiple_of(u.len()) || *run != *u.pow(run.len() / u.len()) {
        return Err(Error::NotInjective("aligned blocks have different roots".into()));
    }
    let (root, _) = primitive_root(&psi.apply(&u))?;
    debug_assert!(is_conjugate(&root, v));
    let exponent = run.len() / u.len();
    Ok((u, exponent))
}

fn check_injective_on_factors(psi: &Morphism, z: &[Letter]) -> Result<()> {
    let mut images: std::collections::HashMap<Word, Word> = std::collections::HashMap::new();
    let letters: BTreeSet<Letter> = psi.domain().letters().collect();
    let mut words: HashSet<Word> = letters.iter().map(|&a| Word::new(vec![a])).collect();
    for len in 1..=z.len() {
        for f in z.windows(len) {
            words.insert(Word::from_slice(f));
        }
    }
    let mut sorted: Vec<Word> = words.into_iter().collect();
    sorted.sort();
    for w in sorted {
        let img = psi.apply(&w);
        if let Some(prev) = images.insert(img, w.clone()) {
            return Err(Error::NotInjective(format!(
                "{} and {} have the same image",
                psi.domain().render(&prev),
                psi.domain().render(&w)
            )));
        }
    }
    Ok(())
}
