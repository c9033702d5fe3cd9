//! The line-oriented system file format.
//!
//! ```text
//! # Thue–Morse
//! alphabet: a b
//! map a -> a b
//! map b -> b a
//! axiom: a
//! ```
//!
//! `#` starts a comment running to the end of the line; tokens are separated
//! by spaces or tabs. The alphabet is declared once, before any other line.
//! Every letter needs exactly one `map` line; an empty right side is an
//! erasing image, accepted here and refused by the analyses. At least one
//! `axiom:` line is required.

use crate::error::{Error, Result};
use crate::system::{Morphism, System};
use crate::words::{Alphabet, Letter, Word};

const ARROW: &str = "->";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code).trim()
}

/// Splits `"<key>:<rest>"`, accepting optional blanks before the colon.
fn keyed<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?.trim_start();
    rest.strip_prefix(':')
}

fn parse_tokens(alphabet: &Alphabet, tokens: &[&str], line: usize) -> Result<Word> {
    tokens
        .iter()
        .map(|t| {
            alphabet
                .letter(t)
                .ok_or_else(|| parse_error(line, format!("unknown letter {t:?}")))
        })
        .collect()
}

pub fn parse_system(text: &str) -> Result<System> {
    let mut alphabet: Option<(Alphabet, usize)> = None;
    let mut images: Vec<Option<(Word, usize)>> = Vec::new();
    let mut first_use: Vec<Option<usize>> = Vec::new();
    let mut axioms: Vec<Word> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = keyed(line, "alphabet") {
            if let Some((_, first)) = &alphabet {
                return Err(parse_error(
                    line_no,
                    format!("alphabet already declared on line {first}"),
                ));
            }
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            if tokens.contains(&ARROW) {
                return Err(parse_error(line_no, "\"->\" cannot be a letter"));
            }
            let parsed = Alphabet::new(tokens.iter().copied()).map_err(|e| parse_error(line_no, e.to_string()))?;
            images = vec![None; parsed.len()];
            first_use = vec![None; parsed.len()];
            alphabet = Some((parsed, line_no));
            continue;
        }

        let Some((alpha, _)) = &alphabet else {
            return Err(parse_error(line_no, "alphabet must be declared first"));
        };
        let mut note_uses = |w: &[Letter]| {
            for l in w {
                first_use[l.index()].get_or_insert(line_no);
            }
        };

        if let Some(rest) = keyed(line, "axiom") {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            if tokens.is_empty() {
                return Err(parse_error(line_no, "axiom must be a non-empty word"));
            }
            let w = parse_tokens(alpha, &tokens, line_no)?;
            note_uses(&w);
            axioms.push(w);
        } else if let Some(rest) = line.strip_prefix("map").filter(|r| r.starts_with([' ', '\t'])) {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            let (letter, arrow, image) = match tokens.as_slice() {
                [letter, arrow, image @ ..] => (*letter, *arrow, image),
                _ => return Err(parse_error(line_no, "expected `map <letter> -> <word>`")),
            };
            if arrow != ARROW {
                return Err(parse_error(line_no, "expected `->` after the mapped letter"));
            }
            let a = alpha
                .letter(letter)
                .ok_or_else(|| parse_error(line_no, format!("unknown letter {letter:?}")))?;
            if let Some((_, previous)) = &images[a.index()] {
                return Err(parse_error(
                    line_no,
                    format!("duplicate map for {letter:?} (first on line {previous})"),
                ));
            }
            let w = parse_tokens(alpha, image, line_no)?;
            note_uses(&w);
            images[a.index()] = Some((w, line_no));
        } else {
            return Err(parse_error(line_no, format!("unrecognised line {line:?}")));
        }
    }

    let Some((alphabet, alphabet_line)) = alphabet else {
        return Err(parse_error(text.lines().count().max(1), "missing alphabet declaration"));
    };
    let mut complete = Vec::with_capacity(alphabet.len());
    for (a, image) in alphabet.letters().zip(images) {
        match image {
            Some((w, _)) => complete.push(w),
            None => {
                let line = first_use[a.index()].unwrap_or(alphabet_line);
                return Err(parse_error(line, format!("missing map for {:?}", alphabet.token(a))));
            }
        }
    }
    if axioms.is_empty() {
        return Err(parse_error(
            text.lines().count().max(1),
            "at least one axiom is required",
        ));
    }
    let morphism = Morphism::endo(alphabet, complete)?;
    System::new(morphism, axioms)
}

/// Renders a system in the file format; `parse_system(render_system(s)) == s`.
pub fn render_system(system: &System) -> String {
    let alphabet = system.alphabet();
    let mut out = format!("alphabet: {}\n", alphabet.tokens().join(" "));
    for a in alphabet.letters() {
        out.push_str("map ");
        out.push_str(&system.morphism().render_rule(a));
        out.push('\n');
    }
    for w in system.axioms() {
        out.push_str("axiom: ");
        out.push_str(&system.render_word(w));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    const THUE_MORSE: &str = "# Thue-Morse\nalphabet: a b\nmap a -> a b\nmap b -> b a   # swap\naxiom: a\n";

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_thue_morse() {
        assert_eq!(parse_system(THUE_MORSE).unwrap(), catalog::thue_morse());
    }

    #[test]
    fn eventually_injective_has_long_images() {
        let text = "alphabet: a b c\nmap a -> a b a c c\nmap b -> a b a\nmap c -> a b a\naxiom: a\n";
        let s = parse_system(text).unwrap();
        assert_eq!(s.morphism().max_image_len(), 5);
        assert_eq!(s, catalog::eventually_injective());
    }

    #[test]
    fn tabs_and_multichar_letters() {
        let s =
            parse_system("alphabet:\tx1  y_2\nmap x1 ->\tx1 y_2\nmap y_2 -> x1\naxiom: y_2\naxiom: x1 x1\n").unwrap();
        assert_eq!(s.axioms().len(), 2);
        assert_eq!(s.render_word(&s.axioms()[1]), "x1 x1");
    }

    #[test]
    fn erasing_image_is_accepted() {
        let s = parse_system("alphabet: a c\nmap a -> a c\nmap c ->\naxiom: a\n").unwrap();
        assert!(!s.is_pdf0l());
    }

    #[test]
    fn line_numbered_errors() {
        assert_eq!(
            line_of(parse_system("alphabet: a b\nmap a -> a b\naxiom: a\n").unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_system("alphabet: a\nmap a -> a\nmap a -> a\naxiom: a").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_system("alphabet: a\nmap a -> a z\naxiom: a").unwrap_err()),
            2
        );
        assert_eq!(line_of(parse_system("alphabet: a\nmap a -> a\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_system("map a -> a\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_system("alphabet: a\naxiom:\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_system("alphabet: a a\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_system("alphabet: a\nmap a a\naxiom: a").unwrap_err()), 2);
        assert_eq!(line_of(parse_system("alphabet: a\nfoo\n").unwrap_err()), 2);
        assert!(parse_system("").is_err());
    }

    #[test]
    fn missing_map_points_at_first_use() {
        let err = parse_system("alphabet: a b\n\nmap a -> a b\naxiom: a\n").unwrap_err();
        assert_eq!(line_of(err), 3);
        let err = parse_system("alphabet: a b\nmap a -> a\naxiom: a\n").unwrap_err();
        assert_eq!(line_of(err), 1);
    }

    #[test]
    fn catalog_round_trips() {
        for s in [
            catalog::thue_morse(),
            catalog::eventually_injective(),
            catalog::not_eventually_injective(),
            catalog::bounded_tails(),
            catalog::repetitive_bc(),
            catalog::bounded_tails().power(2).unwrap(),
        ] {
            assert_eq!(parse_system(&render_system(&s)).unwrap(), s);
        }
    }

    proptest! {
        #[test]
        fn random_systems_round_trip(
            images in prop::collection::vec(prop::collection::vec(0u32..3, 0..4), 3),
            axioms in prop::collection::vec(prop::collection::vec(0u32..3, 1..4), 1..3),
        ) {
            let alphabet = Alphabet::new(["p", "q", "r"]).unwrap();
            let m = Morphism::endo(alphabet, images.into_iter().map(|v| v.into_iter().map(Letter).collect()).collect()).unwrap();
            let s = System::new(m, axioms.into_iter().map(|v| v.into_iter().map(Letter).collect()).collect()).unwrap();
            prop_assert_eq!(parse_system(&render_system(&s)).unwrap(), s);
        }
    }
}
