mod common;

use std::collections::BTreeSet;

use df0l::language::factor_language;
use df0l::{catalog, Interpretation, Interpreter, System, Word};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{naive_interpretations, random_system, unrolled_language};

fn agree_with_oracles(s: &System, lang_len: usize, interp_len: usize) -> Result<(), String> {
    let fast: BTreeSet<Word> = factor_language(s, lang_len).unwrap().iter().cloned().collect();
    if fast != unrolled_language(s, lang_len) {
        return Err("factor languages differ".into());
    }
    let naive = naive_interpretations(s, interp_len);
    let mut it = Interpreter::new(s).unwrap();
    for u in fast.iter().filter(|u| !u.is_empty() && u.len() <= interp_len) {
        let got: BTreeSet<Interpretation> = it.minimal_interpretations(u).unwrap().into_iter().collect();
        if got != naive.get(u).cloned().unwrap_or_default() {
            return Err(format!("interpretations of {} differ", s.render_word(u)));
        }
    }
    Ok(())
}

#[test]
fn catalog_systems_agree() {
    for s in [
        catalog::thue_morse(),
        catalog::eventually_injective(),
        catalog::not_eventually_injective(),
        catalog::bounded_tails(),
        catalog::repetitive_bc(),
    ] {
        agree_with_oracles(&s, 10, 8).unwrap();
    }
}

#[test]
fn bulk_and_single_word_interpretations_agree() {
    let s = catalog::eventually_injective();
    let mut it = Interpreter::new(&s).unwrap();
    for n in 1..=8 {
        let bulk = it.interpretations_of_len(n);
        for u in it.language(n).words_of_len(n).to_vec() {
            let single = it.minimal_interpretations(&u).unwrap();
            assert_eq!(bulk.get(&u).cloned().unwrap_or_default(), single, "{u}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_systems_agree(seed in any::<u64>()) {
        let s = random_system(&mut ChaCha8Rng::seed_from_u64(seed), 4, 4, 3);
        if let Err(why) = agree_with_oracles(&s, 9, 7) {
            prop_assert!(false, "{}", why);
        }
    }
}
