//! Weak and strong circularity threshold searches.
//!
//! Both searches are level scans that stop at the first level where every
//! check passes. Extending a synchronized word (or a strongly synchronizing
//! pair) keeps it synchronized, so a passing level settles every longer one.
//! That also justifies the weak-search pruning: a word of length `L` can
//! only fail when both of its length `L - 1` borders failed.
//!
//! The strong search checks pairs with `|u'| = |u''| = D + 1` exactly: an
//! admissible pair with longer sides restricts to an admissible pair at that
//! level (suffix of `u'`, prefix of `u''`), which then lifts back up.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interpretations::{admissible_at, common_cuts, strong_at, Interpreter};
use crate::repetitiveness::{default_period_bound, detect_unbounded_repetitive, RepetitivenessVerdict};
use crate::system::System;
use crate::words::{Letter, Word};

/// Maximum number of surviving words or pairs kept in a report.
pub const SURVIVOR_SAMPLE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Weak,
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ThresholdStatus {
    Found(usize),
    CutoffExceeded { last_level: usize },
    NotStronglyCircular,
}

/// A non-synchronized word (weak mode) or a failing admissible pair (strong mode).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Word(Word),
    Pair { left: Word, right: Word },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub mode: Mode,
    pub status: ThresholdStatus,
    /// For `Found(D)` with `D >= 1`: a failure at level `D`, showing `D` is tight.
    pub witness: Option<Witness>,
    /// For `CutoffExceeded`: a canonical sample of the failures at the last level.
    pub survivors: Vec<Witness>,
    /// Outcome of the repetitiveness pre-check (strong mode only).
    pub repetition: Option<RepetitivenessVerdict>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StrongOptions {
    pub skip_repetition_check: bool,
    /// Defaults to [`default_period_bound`].
    pub period_bound: Option<usize>,
}

fn check_cutoff(system: &System, cutoff: usize) -> Result<()> {
    system.require_pdf0l()?;
    if cutoff == 0 {
        return Err(Error::Precondition("cutoff must be at least 1".into()));
    }
    Ok(())
}

/// Smallest `D` such that every word of `L(S)` longer than `D` is weakly synchronized.
pub fn weak_threshold(system: &System, cutoff: usize) -> Result<ThresholdReport> {
    check_cutoff(system, cutoff)?;
    let mut interp = Interpreter::new(system)?;
    let mut previous: Vec<Word> = Vec::new();

    for len in 1..=cutoff {
        let prev_set: HashSet<&[Letter]> = previous.iter().map(|w| w.letters()).collect();
        let candidates: HashSet<Word> = interp
            .language(len)
            .words_of_len(len)
            .iter()
            .filter(|u| len == 1 || (prev_set.contains(&u[..len - 1]) && prev_set.contains(&u[1..])))
            .cloned()
            .collect();
        let interps = interp.interpretations_where(len, |u| candidates.contains(u));
        let phi = system.morphism();
        let mut failing: Vec<Word> = candidates
            .into_iter()
            .filter(|u| {
                let list = interps.get(u).map(Vec::as_slice).unwrap_or(&[]);
                common_cuts(phi, list, len).is_empty()
            })
            .collect();
        failing.sort();
        if failing.is_empty() {
            return Ok(ThresholdReport {
                mode: Mode::Weak,
                status: ThresholdStatus::Found(len - 1),
                witness: previous.first().cloned().map(Witness::Word),
                survivors: Vec::new(),
                repetition: None,
            });
        }
        previous = failing;
    }
    Ok(ThresholdReport {
        mode: Mode::Weak,
        status: ThresholdStatus::CutoffExceeded { last_level: cutoff },
        witness: None,
        survivors: previous.into_iter().take(SURVIVOR_SAMPLE).map(Witness::Word).collect(),
        repetition: None,
    })
}

/// Smallest `D` such that every admissible pair with both sides longer than
/// `D` is strongly synchronizing, with the default options.
pub fn strong_threshold(system: &System, cutoff: usize) -> Result<ThresholdReport> {
    strong_threshold_with(system, cutoff, StrongOptions::default())
}

pub fn strong_threshold_with(system: &System, cutoff: usize, options: StrongOptions) -> Result<ThresholdReport> {
    check_cutoff(system, cutoff)?;
    let repetition = if options.skip_repetition_check {
        None
    } else {
        let bound = options.period_bound.unwrap_or_else(|| default_period_bound(system));
        Some(detect_unbounded_repetitive(system, bound)?)
    };
    if let Some(verdict) = repetition.as_ref().filter(|v| v.is_repetitive()) {
        let witness = match verdict {
            RepetitivenessVerdict::Repetitive { witness, .. } => Some(Witness::Word(witness.clone())),
            RepetitivenessVerdict::NoWitnessUpTo { .. } => None,
        };
        return Ok(ThresholdReport {
            mode: Mode::Strong,
            status: ThresholdStatus::NotStronglyCircular,
            witness,
            survivors: Vec::new(),
            repetition,
        });
    }

    let mut interp = Interpreter::new(system)?;
    let mut previous: Vec<Witness> = Vec::new();
    for d in 0..cutoff {
        let failing = failing_pairs(&mut interp, d + 1);
        if failing.is_empty() {
            return Ok(ThresholdReport {
                mode: Mode::Strong,
                status: ThresholdStatus::Found(d),
                witness: previous.into_iter().next(),
                survivors: Vec::new(),
                repetition,
            });
        }
        previous = failing;
    }
    previous.truncate(SURVIVOR_SAMPLE);
    Ok(ThresholdReport {
        mode: Mode::Strong,
        status: ThresholdStatus::CutoffExceeded { last_level: cutoff },
        witness: None,
        survivors: previous,
        repetition,
    })
}

/// Admissible pairs with `|u'| = |u''| = m` that are not strongly synchronizing, canonically.
fn failing_pairs(interp: &mut Interpreter, m: usize) -> Vec<Witness> {
    let n = 2 * m;
    let interps = interp.interpretations_of_len(n);
    let phi = interp.morphism().clone();
    interp
        .language(n)
        .words_of_len(n)
        .iter()
        .filter(|u| {
            let list = interps.get(*u).map(Vec::as_slice).unwrap_or(&[]);
            admissible_at(&phi, list, n, m) && !strong_at(&phi, list, n, m).holds()
        })
        .map(|u| Witness::Pair {
            left: u.slice(0, m),
            right: u.slice(m, n),
        })
        .collect()
}

/// `⌈φ⌉ · max_{x ∈ W} |φ^{k-2}(x)|`: beyond this length, a word weakly
/// synchronized in `S^k` is weakly synchronized in `S`.
pub fn weak_power_transfer_bound(system: &System, k: usize) -> Result<usize> {
    system.require_pdf0l()?;
    if k < 2 {
        return Err(Error::Precondition("power must be at least 2".into()));
    }
    let phi = system.morphism();
    let longest = system
        .axioms()
        .iter()
        .map(|x| phi.apply_power(x, k - 2).len())
        .max()
        .unwrap_or(0);
    Ok(phi.max_image_len() * longest)
}

/// One inequality `lhs <= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    /// `rhs - lhs`, negative when violated.
    pub slack: i64,
}

impl BoundCheck {
    fn new(lhs: usize, rhs: usize) -> Self {
        BoundCheck {
            lhs,
            rhs,
            holds: lhs <= rhs,
            slack: rhs as i64 - lhs as i64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThresholdBounds {
    /// `D_w <= 2 D_s + ⌈φ⌉`.
    pub weak_from_strong: BoundCheck,
    /// `D_s <= D_w + δ + 1`, only when the system is known eventually injective.
    pub strong_from_weak: Option<BoundCheck>,
}

pub fn check_threshold_bounds(system: &System, dw: usize, ds: usize, delta: Option<usize>) -> ThresholdBounds {
    let ceil = system.morphism().max_image_len();
    ThresholdBounds {
        weak_from_strong: BoundCheck::new(dw, 2 * ds + ceil),
        strong_from_weak: delta.map(|delta| BoundCheck::new(ds, dw + delta + 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::interpretations::{is_strongly_synchronizing, Interpreter};

    fn word(s: &System, text: &str) -> Word {
        s.parse_word(text).unwrap()
    }

    #[test]
    fn thue_morse_thresholds() {
        let tm = catalog::thue_morse();
        let weak = weak_threshold(&tm, 10).unwrap();
        assert_eq!(weak.status, ThresholdStatus::Found(3));
        assert_eq!(weak.witness, Some(Witness::Word(word(&tm, "a b a"))));
        let strong = strong_threshold(&tm, 10).unwrap();
        assert_eq!(strong.status, ThresholdStatus::Found(1));
        match strong.witness {
            Some(Witness::Pair { left, right }) => {
                assert_eq!((left.len(), right.len()), (1, 1));
                assert!(!is_strongly_synchronizing(&tm, &left, &right).unwrap());
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(matches!(
            strong.repetition,
            Some(RepetitivenessVerdict::NoWitnessUpTo { .. })
        ));
    }

    #[test]
    fn weak_found_is_tight() {
        for s in [
            catalog::thue_morse(),
            catalog::eventually_injective(),
            catalog::repetitive_bc(),
        ] {
            let ThresholdStatus::Found(d) = weak_threshold(&s, 12).unwrap().status else {
                panic!("weak search did not terminate");
            };
            let mut it = Interpreter::new(&s).unwrap();
            for u in it.language(d + 1).words_of_len(d + 1).to_vec() {
                assert!(it.is_weakly_synchronized(&u).unwrap());
            }
            if d > 0 {
                let level: Vec<Word> = it.language(d).words_of_len(d).to_vec();
                assert!(level.iter().any(|u| !it.is_weakly_synchronized(u).unwrap()));
            }
        }
    }

    #[test]
    fn repetitive_bc_thresholds() {
        let e8 = catalog::repetitive_bc();
        assert_eq!(weak_threshold(&e8, 10).unwrap().status, ThresholdStatus::Found(1));
        let strong = strong_threshold(&e8, 10).unwrap();
        assert_eq!(strong.status, ThresholdStatus::NotStronglyCircular);
        assert_eq!(strong.witness, Some(Witness::Word(word(&e8, "b c"))));
    }

    #[test]
    fn skipping_the_precheck_runs_the_level_scan() {
        let e8 = catalog::repetitive_bc();
        let options = StrongOptions {
            skip_repetition_check: true,
            period_bound: None,
        };
        let report = strong_threshold_with(&e8, 6, options).unwrap();
        assert_eq!(report.status, ThresholdStatus::CutoffExceeded { last_level: 6 });
        assert!(!report.survivors.is_empty());
        assert!(report.repetition.is_none());
    }

    #[test]
    fn cutoff_and_erasing_errors() {
        let tm = catalog::thue_morse();
        assert!(weak_threshold(&tm, 0).is_err());
        let s = System::from_rules(&["a", "c"], &[("a", "a c"), ("c", "")], &["a"]).unwrap();
        assert!(matches!(weak_threshold(&s, 3), Err(Error::Erasing(_))));
        assert!(matches!(strong_threshold(&s, 3), Err(Error::Erasing(_))));
    }

    #[test]
    fn transfer_bounds() {
        let tm = catalog::thue_morse();
        assert_eq!(weak_power_transfer_bound(&tm, 2).unwrap(), 2);
        assert_eq!(weak_power_transfer_bound(&tm, 3).unwrap(), 4);
        assert_eq!(weak_power_transfer_bound(&catalog::repetitive_bc(), 2).unwrap(), 3);
        assert!(weak_power_transfer_bound(&tm, 1).is_err());
    }

    #[test]
    fn inequality_reports() {
        let b = check_threshold_bounds(&catalog::thue_morse(), 3, 1, Some(0));
        assert_eq!(
            b.weak_from_strong,
            BoundCheck {
                lhs: 3,
                rhs: 4,
                holds: true,
                slack: 1
            }
        );
        assert_eq!(b.strong_from_weak.unwrap().rhs, 4);

        let b = check_threshold_bounds(&catalog::eventually_injective(), 3, 3, Some(11));
        assert_eq!(b.weak_from_strong.rhs, 11);
        assert_eq!(b.strong_from_weak.unwrap().rhs, 15);

        let b = check_threshold_bounds(&catalog::not_eventually_injective(), 3, 9, None);
        assert_eq!(b.weak_from_strong.rhs, 23);
        assert!(b.strong_from_weak.is_none());

        assert_eq!(BoundCheck::new(5, 3).slack, -2);
    }
}
