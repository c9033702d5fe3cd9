//! Injectivity collisions of `φ` on `L(S)` and twined morphisms.
//!
//! Whether a morphism is eventually injective on its language is not known to
//! be decidable, so collision sets are always length-bounded slices.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::language::FactorSet;
use crate::system::{Morphism, System};
use crate::words::{Letter, Word};

/// `{u, v} ⊆ L(S)` with `u != v` and `φ(u) = φ(v)`; `u` precedes `v` canonically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CollisionPair {
    pub u: Word,
    pub v: Word,
}

/// All collisions among members of length `<= max_len`, in canonical order.
pub fn collisions_upto(system: &System, max_len: usize) -> Result<Vec<CollisionPair>> {
    let language = FactorSet::new(system, max_len)?;
    Ok(collisions_in(&language, max_len))
}

fn collisions_in(language: &FactorSet, max_len: usize) -> Vec<CollisionPair> {
    let phi = language.system().morphism();
    let mut groups: HashMap<Word, Vec<Word>> = HashMap::new();
    for u in language.words_up_to(max_len) {
        groups.entry(phi.apply(&u)).or_default().push(u);
    }
    let mut pairs = Vec::new();
    for (image, mut members) in groups {
        members.sort();
        for (i, u) in members.iter().enumerate() {
            for v in &members[i + 1..] {
                debug_assert!(phi.apply(u) == image && phi.apply(v) == image);
                pairs.push(CollisionPair {
                    u: u.clone(),
                    v: v.clone(),
                });
            }
        }
    }
    pairs.sort();
    pairs
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaEstimate {
    /// `max |φ(u)|` over the collisions found; a lower bound for `δ_S`.
    pub lower_bound: usize,
    pub pairs: Vec<CollisionPair>,
}

pub fn delta_estimate(system: &System, max_len: usize) -> Result<DeltaEstimate> {
    let pairs = collisions_upto(system, max_len)?;
    let phi = system.morphism();
    let lower_bound = pairs.iter().map(|p| phi.image_len(&p.u)).max().unwrap_or(0);
    Ok(DeltaEstimate { lower_bound, pairs })
}

/// The pairs `u_{k+1} = u_1 φ(u_k)`, `v_{k+1} = v_1 φ(v_k)` for `k < n`.
pub fn collision_family(phi: &Morphism, u1: &[Letter], v1: &[Letter], n: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::with_capacity(n);
    let (mut u, mut v) = (Word::from_slice(u1), Word::from_slice(v1));
    for _ in 0..n {
        out.push((u.clone(), v.clone()));
        u = Word::from_slice(u1).concat(&phi.apply(&u));
        v = Word::from_slice(v1).concat(&phi.apply(&v));
    }
    out
}

/// Every pair of the family up to `n` is a genuine collision inside `L(S)`.
pub fn collision_family_check(system: &System, u1: &[Letter], v1: &[Letter], n: usize) -> Result<bool> {
    let family = collision_family(system.morphism(), u1, v1, n);
    let longest = family.iter().map(|(u, v)| u.len().max(v.len())).max().unwrap_or(0);
    let language = FactorSet::new(system, longest)?;
    let phi = system.morphism();
    Ok(family
        .iter()
        .all(|(u, v)| u != v && phi.apply(u) == phi.apply(v) && language.contains(u) && language.contains(v)))
}

/// `φ = β∘α` over `A` and `ψ = α∘β` over `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinedData {
    pub phi: Morphism,
    pub psi: Morphism,
    pub alpha: Morphism,
    pub beta: Morphism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinedSide {
    /// `β(α(a)) = φ(a)`.
    Phi,
    /// `α(β(b)) = ψ(b)`.
    Psi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TwinedVerdict {
    Twined,
    Fails { side: TwinedSide, letter: String },
}

impl TwinedVerdict {
    pub fn holds(&self) -> bool {
        *self == TwinedVerdict::Twined
    }
}

impl TwinedData {
    pub fn new(phi: Morphism, psi: Morphism, alpha: Morphism, beta: Morphism) -> Result<Self> {
        let shapes_agree = phi.is_endomorphism()
            && psi.is_endomorphism()
            && alpha.domain() == phi.domain()
            && alpha.codomain() == psi.domain()
            && beta.domain() == psi.domain()
            && beta.codomain() == phi.domain();
        if !shapes_agree {
            return Err(Error::Precondition(
                "twined maps must go A -> B and B -> A with φ over A and ψ over B".into(),
            ));
        }
        Ok(TwinedData { phi, psi, alpha, beta })
    }

    /// The trivial twining `α = id_A`, `β = ψ = φ`.
    pub fn identity(phi: Morphism) -> Self {
        TwinedData {
            alpha: Morphism::identity(phi.domain().clone()),
            beta: phi.clone(),
            psi: phi.clone(),
            phi,
        }
    }
}

/// Checks both twining identities letter by letter, reporting the first failure.
pub fn verify_twined(data: &TwinedData) -> TwinedVerdict {
    for a in data.phi.domain().letters() {
        if data.beta.apply(data.alpha.image(a)) != *data.phi.image(a) {
            return TwinedVerdict::Fails {
                side: TwinedSide::Phi,
                letter: data.phi.domain().token(a).to_string(),
            };
        }
    }
    for b in data.psi.domain().letters() {
        if data.alpha.apply(data.beta.image(b)) != *data.psi.image(b) {
            return TwinedVerdict::Fails {
                side: TwinedSide::Psi,
                letter: data.psi.domain().token(b).to_string(),
            };
        }
    }
    TwinedVerdict::Twined
}

/// `α(φ^k(w)) = ψ^k(α(w))` and `φ^k(β(α(w))) = β(ψ^k(α(w)))` on each sample.
pub fn twined_commutation_check(data: &TwinedData, k: usize, samples: &[Word]) -> bool {
    samples.iter().all(|w| {
        let z = data.alpha.apply(w);
        let left = data.alpha.apply(&data.phi.apply_power(w, k)) == data.psi.apply_power(&z, k);
        let right = data.phi.apply_power(&data.beta.apply(&z), k) == data.beta.apply(&data.psi.apply_power(&z, k));
        left && right
    })
}

/// The simplified system `T = (B, ψ, α(W))`.
pub fn simplified_system(system: &System, data: &TwinedData) -> Result<System> {
    System::new(
        data.psi.clone(),
        system.axioms().iter().map(|w| data.alpha.apply(w)).collect(),
    )
}

/// `α(L(S)) ⊆ L(T)` and `β(L(T)) ⊆ L(S)` on words of length `<= max_len`.
pub fn simplification_language_check(system: &System, data: &TwinedData, max_len: usize) -> Result<bool> {
    if system.morphism() != &data.phi {
        return Err(Error::Precondition("system morphism differs from φ".into()));
    }
    let target = simplified_system(system, data)?;
    let alpha_max = data.alpha.max_image_len().max(1);
    let beta_max = data.beta.max_image_len().max(1);

    let source_small = FactorSet::new(system, max_len)?;
    let target_big = FactorSet::new(&target, max_len * alpha_max)?;
    let forward = source_small.iter().all(|u| target_big.contains(&data.alpha.apply(u)));
    if !forward {
        return Ok(false);
    }
    let target_small = FactorSet::new(&target, max_len)?;
    let source_big = FactorSet::new(system, max_len * beta_max)?;
    let backward = target_small.iter().all(|z| source_big.contains(&data.beta.apply(z)));
    Ok(backward)
}
