//! Bounded/unbounded letters, the invariant exponent and minimal invariant
//! subalphabets.
//!
//! A letter `a` is unbounded iff, in the graph with an edge `x -> y` whenever
//! `y` occurs in `φ(x)`, it reaches a letter `c` that lies on a cycle and has
//! `|φ(c)| >= 2`. Such a `c` returns to itself after `n` steps while emitting
//! at least one extra letter, so `|φ^{kn}(c)| >= k + 1`. If every reachable
//! cyclic letter has an image of length one, cyclic letters are permuted
//! among themselves and the acyclic part stabilises within `#A` steps. The
//! argument needs a non-erasing morphism.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::Morphism;
use crate::error::{Error, Result};
use crate::words::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub bounded: Vec<Letter>,
    pub unbounded: Vec<Letter>,
    pub invariant_exponent: usize,
    pub minimal_invariant_subalphabets: Vec<BTreeSet<Letter>>,
}

fn require_non_erasing(m: &Morphism) -> Result<()> {
    match m.erasing_letters().first() {
        Some(&a) => Err(Error::Erasing(m.domain().token(a).to_string())),
        None => Ok(()),
    }
}

/// `reach[a][b]` iff `b` is reachable from `a` in one or more steps.
fn reachability(m: &Morphism) -> Vec<Vec<bool>> {
    let n = m.domain().len();
    let mut reach = vec![vec![false; n]; n];
    for (row, image) in reach.iter_mut().zip(m.images()) {
        let mut stack: Vec<usize> = image.iter().map(|l| l.index()).collect();
        while let Some(b) = stack.pop() {
            if row[b] {
                continue;
            }
            row[b] = true;
            stack.extend(m.images()[b].iter().map(|l| l.index()));
        }
    }
    reach
}

/// One flag per letter: `true` for unbounded letters.
pub fn unbounded_letters(m: &Morphism) -> Result<Vec<bool>> {
    require_non_erasing(m)?;
    let n = m.domain().len();
    let reach = reachability(m);
    let growing: Vec<bool> = (0..n).map(|c| reach[c][c] && m.images()[c].len() >= 2).collect();
    Ok((0..n)
        .map(|a| growing[a] || (0..n).any(|c| reach[a][c] && growing[c]))
        .collect())
}

fn step_alphabets(m: &Morphism, current: &[BTreeSet<Letter>]) -> Vec<BTreeSet<Letter>> {
    current
        .iter()
        .map(|set| set.iter().flat_map(|b| m.image(*b).iter().copied()).collect())
        .collect()
}

/// Smallest `p >= 1` with `alph(φ^p(a)) = alph(φ^{pk}(a))` for all letters and `k >= 1`.
///
/// The sequence `k -> (alph(φ^k(a)))_a` over the finite lattice of
/// subalphabet tuples is eventually periodic with preperiod `q` and period
/// `r`; the answer is the least multiple of `r` that is at least `max(q, 1)`.
pub fn invariant_exponent(m: &Morphism) -> Result<usize> {
    require_non_erasing(m)?;
    let mut seen: HashMap<Vec<BTreeSet<Letter>>, usize> = HashMap::new();
    let mut state: Vec<BTreeSet<Letter>> = m.domain().letters().map(|a| BTreeSet::from([a])).collect();
    let mut k = 0usize;
    let (q, r) = loop {
        if let Some(&first) = seen.get(&state) {
            break (first, k - first);
        }
        seen.insert(state.clone(), k);
        state = step_alphabets(m, &state);
        k += 1;
    };
    let lower = q.max(1);
    Ok(lower.div_ceil(r) * r)
}

fn alph_power(m: &Morphism, a: Letter, p: usize) -> BTreeSet<Letter> {
    let mut set = BTreeSet::from([a]);
    for _ in 0..p {
        set = set.iter().flat_map(|b| m.image(*b).iter().copied()).collect();
    }
    set
}

/// Inclusion-minimal sets among `{alph(φ^p(g)) : g unbounded}`, in canonical order.
///
/// `p` should come from [`invariant_exponent`]; for other values the returned
/// sets need not be `p`-invariant.
pub fn minimal_invariant_subalphabets(m: &Morphism, p: usize) -> Result<Vec<BTreeSet<Letter>>> {
    let unbounded = unbounded_letters(m)?;
    let mut candidates: Vec<BTreeSet<Letter>> = m
        .domain()
        .letters()
        .filter(|g| unbounded[g.index()])
        .map(|g| alph_power(m, g, p))
        .collect();
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    candidates.dedup();
    let minimal = candidates
        .iter()
        .filter(|set| !candidates.iter().any(|other| other != *set && other.is_subset(set)))
        .cloned()
        .collect();
    Ok(minimal)
}

pub fn classify_letters(m: &Morphism) -> Result<GrowthReport> {
    let flags = unbounded_letters(m)?;
    let (unbounded, bounded): (Vec<Letter>, Vec<Letter>) = m.domain().letters().partition(|a| flags[a.index()]);
    let p = invariant_exponent(m)?;
    Ok(GrowthReport {
        bounded,
        unbounded,
        invariant_exponent: p,
        minimal_invariant_subalphabets: minimal_invariant_subalphabets(m, p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::words::{Alphabet, Word};
    use proptest::prelude::*;

    fn names(m: &Morphism, set: &[Letter]) -> Vec<String> {
        set.iter().map(|&a| m.domain().token(a).to_string()).collect()
    }

    fn set_names(m: &Morphism, set: &BTreeSet<Letter>) -> Vec<String> {
        set.iter().map(|&a| m.domain().token(a).to_string()).collect()
    }

    #[test]
    fn classification_examples() {
        let e5 = catalog::bounded_tails();
        let r = classify_letters(e5.morphism()).unwrap();
        assert_eq!(names(e5.morphism(), &r.bounded), ["c", "d"]);
        assert_eq!(names(e5.morphism(), &r.unbounded), ["a", "b"]);

        let tm = catalog::thue_morse();
        assert!(classify_letters(tm.morphism()).unwrap().bounded.is_empty());

        let e8 = catalog::repetitive_bc();
        assert!(classify_letters(e8.morphism()).unwrap().bounded.is_empty());
    }

    #[test]
    fn invariant_exponents() {
        assert_eq!(invariant_exponent(catalog::thue_morse().morphism()).unwrap(), 1);
        assert_eq!(invariant_exponent(catalog::bounded_tails().morphism()).unwrap(), 2);
        let id = Morphism::identity(Alphabet::new(["a", "b"]).unwrap());
        assert_eq!(invariant_exponent(&id).unwrap(), 1);
        // alph(φ(a)) = {a, c} but alph(φ^k(a)) = {a, b, c} for k >= 2
        assert_eq!(invariant_exponent(catalog::repetitive_bc().morphism()).unwrap(), 2);
    }

    #[test]
    fn minimal_subalphabets() {
        let tm = catalog::thue_morse();
        let sets = minimal_invariant_subalphabets(tm.morphism(), 1).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(set_names(tm.morphism(), &sets[0]), ["a", "b"]);

        let e8 = catalog::repetitive_bc();
        let sets = minimal_invariant_subalphabets(e8.morphism(), 2).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(set_names(e8.morphism(), &sets[0]), ["b", "c"]);

        let id = Morphism::identity(Alphabet::new(["a"]).unwrap());
        assert!(minimal_invariant_subalphabets(&id, 1).unwrap().is_empty());
    }

    #[test]
    fn erasing_is_refused() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let m = Morphism::endo(ab, vec![Word::new(vec![Letter(0), Letter(1)]), Word::empty()]).unwrap();
        assert!(matches!(unbounded_letters(&m), Err(Error::Erasing(_))));
        assert!(invariant_exponent(&m).is_err());
    }

    fn random_morphism() -> impl Strategy<Value = Morphism> {
        (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0..n as u32, 1..=3), n).prop_map(move |imgs| {
                let tokens: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
                let alphabet = Alphabet::new(tokens).unwrap();
                let images = imgs.into_iter().map(|v| v.into_iter().map(Letter).collect()).collect();
                Morphism::endo(alphabet, images).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn unbounded_rule_matches_orbit_oracle(m in random_morphism()) {
            let flags = unbounded_letters(&m).unwrap();
            for a in m.domain().letters() {
                // Bounded orbits over at most four letters repeat within nine steps
                // and never exceed 3^4 letters.
                let mut orbit = vec![Word::new(vec![a])];
                for _ in 0..12 {
                    let next = m.apply(orbit.last().unwrap());
                    let long = next.len() > 10_000;
                    orbit.push(next);
                    if long {
                        break;
                    }
                }
                let lens: Vec<usize> = orbit.iter().map(|w| w.len()).collect();
                prop_assert!(lens.windows(2).all(|p| p[0] <= p[1]));
                let repeats = (0..orbit.len()).any(|i| orbit[i + 1..].contains(&orbit[i]));
                prop_assert_eq!(flags[a.index()], !repeats);
            }
        }

        #[test]
        fn invariant_exponent_is_stable(m in random_morphism()) {
            let p = invariant_exponent(&m).unwrap();
            for a in m.domain().letters() {
                let base = alph_power(&m, a, p);
                prop_assert_eq!(&base, &alph_power(&m, a, 2 * p));
                prop_assert_eq!(&base, &alph_power(&m, a, 3 * p));
            }
            for set in minimal_invariant_subalphabets(&m, p).unwrap() {
                let closure: BTreeSet<Letter> =
                    set.iter().flat_map(|&b| alph_power(&m, b, p)).collect();
                prop_assert_eq!(&closure, &set);
                let flags = unbounded_letters(&m).unwrap();
                prop_assert!(set.iter().any(|b| flags[b.index()]));
            }
        }
    }
}
