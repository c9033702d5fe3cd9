//! Named systems used throughout the documentation and tests.

use crate::injectivity::TwinedData;
use crate::system::{Morphism, System};
use crate::words::Alphabet;

fn build(letters: &[&str], rules: &[(&str, &str)], axioms: &[&str]) -> System {
    System::from_rules(letters, rules, axioms).expect("catalog systems are well-formed")
}

/// Thue–Morse: `a -> ab, b -> ba`, axiom `a`.
pub fn thue_morse() -> System {
    build(&["a", "b"], &[("a", "a b"), ("b", "b a")], &["a"])
}

/// `a -> abacc, b -> aba, c -> aba`, axiom `a`. Eventually injective.
pub fn eventually_injective() -> System {
    build(
        &["a", "b", "c"],
        &[("a", "a b a c c"), ("b", "a b a"), ("c", "a b a")],
        &["a"],
    )
}

/// `a -> abaca, b -> aba, c -> aba`, axiom `a`. Not eventually injective.
pub fn not_eventually_injective() -> System {
    build(
        &["a", "b", "c"],
        &[("a", "a b a c a"), ("b", "a b a"), ("c", "a b a")],
        &["a"],
    )
}

/// `a -> cb, b -> ad, c -> c, d -> d`, axiom `b`.
pub fn bounded_tails() -> System {
    build(
        &["a", "b", "c", "d"],
        &[("a", "c b"), ("b", "a d"), ("c", "c"), ("d", "d")],
        &["b"],
    )
}

/// `a -> aac, b -> bc, c -> bc`, axiom `a`. Weakly circular, but its square is not.
pub fn repetitive_bc() -> System {
    build(&["a", "b", "c"], &[("a", "a a c"), ("b", "b c"), ("c", "b c")], &["a"])
}

/// Twining of [`eventually_injective`] through `B = {a', b'}`: `α` merges `b` and `c`,
/// `ψ: a' -> a'b'a'b'b', b' -> a'b'a'`.
pub fn eventually_injective_twining() -> TwinedData {
    let a = eventually_injective().alphabet().clone();
    let b = Alphabet::new(["a'", "b'"]).expect("valid tokens");
    let alpha = Morphism::from_tokens(a.clone(), b.clone(), &[("a", "a'"), ("b", "b'"), ("c", "b'")]);
    let beta = Morphism::from_tokens(b.clone(), a, &[("a'", "a b a c c"), ("b'", "a b a")]);
    let psi = Morphism::from_tokens(b.clone(), b, &[("a'", "a' b' a' b' b'"), ("b'", "a' b' a'")]);
    TwinedData::new(
        eventually_injective().morphism().clone(),
        psi.expect("valid map"),
        alpha.expect("valid map"),
        beta.expect("valid map"),
    )
    .expect("maps have matching shapes")
}
