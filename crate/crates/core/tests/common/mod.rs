//! Independent oracles and random system generation shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use df0l::words::{Alphabet, Letter, Word};
use df0l::{Interpretation, Morphism, System};
use rand::Rng;

/// Random PDF0L system with `1..=max_letters` letters, images of length
/// `1..=max_image` and one or two axioms of length `1..=max_axiom`.
pub fn random_system<R: Rng>(rng: &mut R, max_letters: usize, max_image: usize, max_axiom: usize) -> System {
    let n = rng.gen_range(1..=max_letters);
    let tokens: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let alphabet = Alphabet::new(tokens).unwrap();
    let random_word =
        |rng: &mut R, len: usize| -> Word { (0..len).map(|_| Letter(rng.gen_range(0..n as u32))).collect() };
    let images = (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=max_image);
            random_word(rng, len)
        })
        .collect();
    let axioms = (0..rng.gen_range(1..=2))
        .map(|_| {
            let len = rng.gen_range(1..=max_axiom);
            random_word(rng, len)
        })
        .collect();
    System::new(Morphism::endo(alphabet, images).unwrap(), axioms).unwrap()
}

fn windows_upto(text: &[Letter], max_len: usize, out: &mut BTreeSet<Word>) {
    for len in 1..=max_len.min(text.len()) {
        for w in text.windows(len) {
            out.insert(Word::from_slice(w));
        }
    }
}

/// Factors of length `<= max_len` of `φ^k(W)` for `k = 0, 1, ...`, unrolled
/// until the union stops growing.
///
/// Only length-`max_len` windows of each `φ^k(W)` are kept: a window of
/// `φ^{k+1}(w)` of length `<= max_len` is covered by the image of a window of
/// `φ^k(w)` that is no longer than itself, so no factor is lost.
pub fn unrolled_language(system: &System, max_len: usize) -> BTreeSet<Word> {
    let phi = system.morphism();
    let mut generation = BTreeSet::new();
    for w in system.axioms() {
        windows_upto(w, max_len, &mut generation);
    }
    let mut all: BTreeSet<Word> = generation.clone();
    loop {
        let mut next = BTreeSet::new();
        for v in &generation {
            windows_upto(&phi.apply(v), max_len, &mut next);
        }
        let before = all.len();
        all.extend(next.iter().cloned());
        if all.len() == before {
            break;
        }
        generation = next;
    }
    all.insert(Word::empty());
    all
}

/// Every minimal interpretation of every word of length `1..=max_len`, by a
/// full scan of the images of all members of length `<= max_len + 2`.
pub fn naive_interpretations(system: &System, max_len: usize) -> HashMap<Word, BTreeSet<Interpretation>> {
    let language = unrolled_language(system, max_len + 2);
    let phi = system.morphism();
    let mut out: HashMap<Word, BTreeSet<Interpretation>> = HashMap::new();
    for w in language.iter().filter(|w| !w.is_empty()) {
        let image = phi.apply(w);
        let first = phi.image(w[0]).len();
        let last = phi.image(w[w.len() - 1]).len();
        for i in 0..image.len() {
            for j in i + 1..=image.len().min(i + max_len) {
                let it = Interpretation {
                    s: image.slice(0, i),
                    w: w.clone(),
                    t: image.slice(j, image.len()),
                };
                if it.s.len() < first && it.t.len() < last {
                    out.entry(image.slice(i, j)).or_default().insert(it);
                }
            }
        }
    }
    out
}

pub fn word(system: &System, text: &str) -> Word {
    system.parse_word(text).unwrap()
}
