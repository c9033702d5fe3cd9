//! Command-line front end.
//!
//! Exit codes: 0 when a verdict was computed (including cutoff exhaustion and
//! bounded negatives), 2 for usage, input and parse errors, 3 when an analysis
//! precondition fails (erasing system, word outside the language, ...).

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::circularity::{strong_threshold_with, weak_threshold, StrongOptions};
use crate::error::{Error, Result};
use crate::format::{parse_system, render_system};
use crate::injectivity::{
    delta_estimate, simplification_language_check, twined_commutation_check, verify_twined, TwinedData,
};
use crate::interpretations::Interpreter;
use crate::language::{contains, factor_language};
use crate::repetitiveness::{default_period_bound, detect_unbounded_repetitive};
use crate::report::{self, Report, SystemEcho};
use crate::system::{classify_letters, Morphism, System};
use crate::words::{Alphabet, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Longest words sampled when checking a twining on the source language.
const TWINED_SAMPLE_LEN: usize = 4;
const TWINED_MAX_POWER: usize = 3;

#[derive(Debug, Parser)]
#[command(
    name = "df0l",
    version,
    about = "Circularity and repetitiveness analysis for PDF0L systems"
)]
pub struct Cli {
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SyncMode {
    Weak,
    Strong,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the factor language up to a length
    Language {
        file: PathBuf,
        #[arg(short = 'L', long = "max-len")]
        max_len: usize,
    },
    /// Minimal interpretations of a word
    Interpretations { file: PathBuf, word: String },
    /// Test a split (u', u'') for weak or strong synchronization
    Sync {
        file: PathBuf,
        left: String,
        right: String,
        #[arg(long, value_enum, default_value = "weak")]
        mode: SyncMode,
    },
    /// Search for the weak or strong circularity threshold
    Threshold {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "weak")]
        mode: SyncMode,
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        /// Skip the repetitiveness pre-check of the strong search
        #[arg(long)]
        skip_repetitive_check: bool,
        #[arg(long)]
        period_bound: Option<usize>,
    },
    /// Build the power system S^k
    Power {
        file: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Bounded and unbounded letters, invariant exponent and subalphabets
    Letters { file: PathBuf },
    /// Look for a certificate of unbounded repetitiveness
    Repetitive {
        file: PathBuf,
        #[arg(long)]
        period_bound: Option<usize>,
    },
    /// Injectivity collisions up to a length and the resulting delta lower bound
    Delta {
        file: PathBuf,
        #[arg(short = 'L', long = "max-len")]
        max_len: usize,
    },
    /// Check twined morphisms between this system and the morphism of FILE2
    Twined {
        file: PathBuf,
        file2: PathBuf,
        /// One `x -> y ...` rule per source letter
        #[arg(long, required = true)]
        alpha: Vec<String>,
        /// One `y -> x ...` rule per target letter
        #[arg(long, required = true)]
        beta: Vec<String>,
    },
    /// Membership of a word in the language
    Contains { file: PathBuf, word: String },
    /// Parse a system file and report its basic properties
    Validate { file: PathBuf },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_PRECONDITION
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let started = Instant::now();
    match dispatch(&cli.command) {
        Ok(mut report) => {
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            let stdout = if cli.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            Outcome {
                code: EXIT_OK,
                stdout,
                stderr: String::new(),
            }
        }
        Err(err) => {
            let code = exit_code(&err);
            let stdout = if cli.json {
                let kind = if code == EXIT_INPUT { "input" } else { "precondition" };
                serde_json::to_string_pretty(&json!({ "error": err.to_string(), "kind": kind }))
                    .expect("error payload serializes")
                    + "\n"
            } else {
                String::new()
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {err}\n"),
            }
        }
    }
}

fn load(path: &Path) -> Result<System> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_system(&text)
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn path_value(path: &Path) -> Value {
    Value::String(path.display().to_string())
}

fn envelope(command: &str, system: &System, inputs: Map<String, Value>, result: Value) -> Report {
    Report {
        command: command.to_string(),
        inputs,
        system: SystemEcho::of(system),
        result,
        elapsed_ms: 0,
    }
}

/// Parses `"x -> y z"` rules into a morphism from `domain` to `codomain`.
fn parse_rules(domain: &Alphabet, codomain: &Alphabet, rules: &[String]) -> Result<Morphism> {
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    for (i, rule) in rules.iter().enumerate() {
        let (lhs, rhs) = rule.split_once("->").ok_or_else(|| Error::Parse {
            line: i + 1,
            message: format!("expected `x -> y ...`, got {rule:?}"),
        })?;
        let lhs = lhs.trim();
        if pairs.iter().any(|(l, _)| *l == lhs) {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("duplicate rule for {lhs:?}"),
            });
        }
        pairs.push((lhs, rhs));
    }
    Morphism::from_tokens(domain.clone(), codomain.clone(), &pairs)
}

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Language { file, max_len } => {
            let s = load(file)?;
            let set = factor_language(&s, *max_len)?;
            let listed: Vec<&Word> = set.iter().collect();
            let result = json!({ "count": listed.len(), "words": report::words(&s, listed) });
            Ok(envelope(
                "language",
                &s,
                inputs(&[("file", path_value(file)), ("max_len", (*max_len).into())]),
                result,
            ))
        }
        Command::Interpretations { file, word } => {
            let s = load(file)?;
            let u = s.parse_word(word)?;
            let list = Interpreter::new(&s)?.minimal_interpretations(&u)?;
            Ok(envelope(
                "interpretations",
                &s,
                inputs(&[("file", path_value(file)), ("word", word.as_str().into())]),
                report::interpretations(&s, &u, &list),
            ))
        }
        Command::Sync {
            file,
            left,
            right,
            mode,
        } => {
            let s = load(file)?;
            let (u1, u2) = (s.parse_word(left)?, s.parse_word(right)?);
            let mut it = Interpreter::new(&s)?;
            let admissible = it.is_admissible(&u1, &u2)?;
            let (mode_name, holds) = match mode {
                SyncMode::Weak => ("weak", it.is_weakly_synchronizing(&u1, &u2)?),
                SyncMode::Strong => ("strong", it.is_strongly_synchronizing(&u1, &u2)?),
            };
            let whole = u1.concat(&u2);
            let outcome = it.weak_sync(&whole)?;
            let result = json!({
                "mode": mode_name,
                "admissible": admissible,
                "synchronizing": holds,
                "word": report::sync_outcome(&s, &whole, &outcome),
            });
            Ok(envelope(
                "sync",
                &s,
                inputs(&[
                    ("file", path_value(file)),
                    ("left", left.as_str().into()),
                    ("right", right.as_str().into()),
                    ("mode", mode_name.into()),
                ]),
                result,
            ))
        }
        Command::Threshold {
            file,
            mode,
            cutoff,
            skip_repetitive_check,
            period_bound,
        } => {
            let s = load(file)?;
            let found = match mode {
                SyncMode::Weak => weak_threshold(&s, *cutoff)?,
                SyncMode::Strong => strong_threshold_with(
                    &s,
                    *cutoff,
                    StrongOptions {
                        skip_repetition_check: *skip_repetitive_check,
                        period_bound: *period_bound,
                    },
                )?,
            };
            let mode_name = if *mode == SyncMode::Weak { "weak" } else { "strong" };
            Ok(envelope(
                "threshold",
                &s,
                inputs(&[
                    ("file", path_value(file)),
                    ("mode", mode_name.into()),
                    ("cutoff", (*cutoff).into()),
                    ("skip_repetitive_check", (*skip_repetitive_check).into()),
                ]),
                report::threshold(&s, &found),
            ))
        }
        Command::Power { file, k, output } => {
            let s = load(file)?;
            let p = s.power(*k)?;
            let text = render_system(&p);
            if let Some(out) = output {
                fs::write(out, &text)
                    .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", out.display())))?;
            }
            let rules: Vec<String> = p.alphabet().letters().map(|a| p.morphism().render_rule(a)).collect();
            let mut result = json!({
                "k": k,
                "axioms": report::words(&p, p.axioms()),
                "rules": rules,
            });
            match output {
                Some(out) => result["output"] = path_value(out),
                None => result["system"] = Value::String(text),
            }
            Ok(envelope(
                "power",
                &s,
                inputs(&[("file", path_value(file)), ("k", (*k).into())]),
                result,
            ))
        }
        Command::Letters { file } => {
            let s = load(file)?;
            let growth = classify_letters(s.morphism())?;
            Ok(envelope(
                "letters",
                &s,
                inputs(&[("file", path_value(file))]),
                report::growth(&s, &growth),
            ))
        }
        Command::Repetitive { file, period_bound } => {
            let s = load(file)?;
            let bound = period_bound.unwrap_or_else(|| default_period_bound(&s));
            let verdict = detect_unbounded_repetitive(&s, bound)?;
            Ok(envelope(
                "repetitive",
                &s,
                inputs(&[("file", path_value(file)), ("period_bound", bound.into())]),
                report::repetition(&s, &verdict),
            ))
        }
        Command::Delta { file, max_len } => {
            let s = load(file)?;
            let estimate = delta_estimate(&s, *max_len)?;
            Ok(envelope(
                "delta",
                &s,
                inputs(&[("file", path_value(file)), ("max_len", (*max_len).into())]),
                report::delta(&s, *max_len, &estimate),
            ))
        }
        Command::Twined {
            file,
            file2,
            alpha,
            beta,
        } => {
            let s = load(file)?;
            let t = load(file2)?;
            let alpha_map = parse_rules(s.alphabet(), t.alphabet(), alpha)?;
            let beta_map = parse_rules(t.alphabet(), s.alphabet(), beta)?;
            let data = TwinedData::new(s.morphism().clone(), t.morphism().clone(), alpha_map, beta_map)?;
            let verdict = verify_twined(&data);
            let (commutation, languages) = if verdict.holds() && s.is_pdf0l() && t.is_pdf0l() {
                let samples: Vec<Word> = factor_language(&s, TWINED_SAMPLE_LEN)?.iter().cloned().collect();
                let commutes = (1..=TWINED_MAX_POWER).all(|k| twined_commutation_check(&data, k, &samples));
                (
                    Some(commutes),
                    Some(simplification_language_check(&s, &data, TWINED_SAMPLE_LEN)?),
                )
            } else {
                (None, None)
            };
            Ok(envelope(
                "twined",
                &s,
                inputs(&[
                    ("file", path_value(file)),
                    ("file2", path_value(file2)),
                    ("alpha", alpha.clone().into()),
                    ("beta", beta.clone().into()),
                ]),
                report::twined(&verdict, commutation, languages),
            ))
        }
        Command::Contains { file, word } => {
            let s = load(file)?;
            let u = s.parse_word(word)?;
            let member = contains(&s, &u)?;
            Ok(envelope(
                "contains",
                &s,
                inputs(&[("file", path_value(file)), ("word", word.as_str().into())]),
                json!({ "word": report::word(&s, &u), "contains": member }),
            ))
        }
        Command::Validate { file } => {
            let s = load(file)?;
            let v = s.validate();
            Ok(envelope(
                "validate",
                &s,
                inputs(&[("file", path_value(file))]),
                serde_json::to_value(v).expect("validation report serializes"),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_with_input_code() {
        assert_eq!(run(["df0l", "threshold"]).code, EXIT_INPUT);
        assert_eq!(run(["df0l", "frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run(["df0l", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn missing_file_is_an_input_error() {
        let out = run(["df0l", "validate", "/nonexistent/system.txt"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("cannot read"));
    }

    #[test]
    fn rule_parsing() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let m = parse_rules(&a, &a, &["a -> a b".into(), "b -> b a".into()]).unwrap();
        assert_eq!(m.render_rule(crate::words::Letter(1)), "b -> b a");
        assert!(parse_rules(&a, &a, &["a a b".into()]).is_err());
        assert!(parse_rules(&a, &a, &["a -> a".into(), "a -> b".into()]).is_err());
        assert!(matches!(
            parse_rules(&a, &a, &["a -> a".into()]),
            Err(Error::MissingImage(_))
        ));
    }
}
