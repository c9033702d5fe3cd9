//! JSON payloads for analysis results, with words rendered as token strings.
//!
//! Every report has the same envelope: the command name, an echo of the
//! inputs, a `system` block with the image-length bounds and the PDF0L flag,
//! the `result` payload and `elapsed_ms`. Lists are in canonical order, so two
//! runs of the same command differ at most in `elapsed_ms`.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::circularity::{ThresholdReport, ThresholdStatus, Witness};
use crate::injectivity::{DeltaEstimate, TwinedVerdict};
use crate::interpretations::{Interpretation, SyncOutcome};
use crate::repetitiveness::RepetitivenessVerdict;
use crate::system::{GrowthReport, System};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystemEcho {
    pub letters: Vec<String>,
    pub min_image_len: usize,
    pub max_image_len: usize,
    pub pdf0l: bool,
}

impl SystemEcho {
    pub fn of(system: &System) -> Self {
        let (min_image_len, max_image_len) = system.morphism().image_length_bounds();
        SystemEcho {
            letters: system.alphabet().tokens().to_vec(),
            min_image_len,
            max_image_len,
            pdf0l: system.is_pdf0l(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub system: SystemEcho,
    pub result: Value,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// A plain `key: value` rendering of the result payload.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render_text(&self.result, 0, &mut out);
        out
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) if !is_flat(v) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{key}: {}\n", scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) if s.is_empty() => "ε".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

pub fn word(system: &System, w: &[Letter]) -> Value {
    Value::String(system.render_word(w))
}

pub fn words<'a>(system: &System, ws: impl IntoIterator<Item = &'a Word>) -> Value {
    Value::Array(ws.into_iter().map(|w| word(system, w)).collect())
}

fn letter(system: &System, a: Letter) -> Value {
    Value::String(system.alphabet().token(a).to_string())
}

pub fn interpretation(system: &System, it: &Interpretation) -> Value {
    json!({ "s": word(system, &it.s), "w": word(system, &it.w), "t": word(system, &it.t) })
}

pub fn interpretations(system: &System, u: &[Letter], list: &[Interpretation]) -> Value {
    json!({
        "word": word(system, u),
        "count": list.len(),
        "interpretations": list.iter().map(|it| interpretation(system, it)).collect::<Vec<_>>(),
    })
}

pub fn sync_outcome(system: &System, u: &[Letter], outcome: &SyncOutcome) -> Value {
    json!({
        "word": word(system, u),
        "synchronized": outcome.is_synchronized(),
        "split": outcome.split,
        "vacuous": outcome.vacuous,
        "interpretations": outcome.interpretations,
    })
}

fn witness(system: &System, w: &Witness) -> Value {
    match w {
        Witness::Word(u) => word(system, u),
        Witness::Pair { left, right } => json!({ "left": word(system, left), "right": word(system, right) }),
    }
}

pub fn repetition(system: &System, verdict: &RepetitivenessVerdict) -> Value {
    match verdict {
        RepetitivenessVerdict::Repetitive {
            letter: a,
            power,
            witness: u,
            exponent,
        } => json!({
            "status": "repetitive",
            "letter": letter(system, *a),
            "power": power,
            "witness": word(system, u),
            "exponent": exponent,
        }),
        RepetitivenessVerdict::NoWitnessUpTo {
            power_bound,
            period_bound,
        } => json!({
            "status": "no_witness",
            "power_bound": power_bound,
            "period_bound": period_bound,
        }),
    }
}

pub fn threshold(system: &System, report: &ThresholdReport) -> Value {
    let mut out = Map::new();
    out.insert(
        "mode".into(),
        serde_json::to_value(report.mode).expect("mode serializes"),
    );
    match report.status {
        ThresholdStatus::Found(d) => {
            out.insert("status".into(), "found".into());
            out.insert("D".into(), d.into());
        }
        ThresholdStatus::CutoffExceeded { last_level } => {
            out.insert("status".into(), "cutoff_exceeded".into());
            out.insert("last_level".into(), last_level.into());
        }
        ThresholdStatus::NotStronglyCircular => {
            out.insert("status".into(), "not_strongly_circular".into());
        }
    }
    out.insert(
        "witness".into(),
        report.witness.as_ref().map_or(Value::Null, |w| witness(system, w)),
    );
    out.insert(
        "survivors".into(),
        Value::Array(report.survivors.iter().map(|w| witness(system, w)).collect()),
    );
    if let Some(verdict) = &report.repetition {
        out.insert("repetition".into(), repetition(system, verdict));
    }
    Value::Object(out)
}

pub fn growth(system: &System, report: &GrowthReport) -> Value {
    let names = |ls: &[Letter]| ls.iter().map(|&a| letter(system, a)).collect::<Vec<_>>();
    json!({
        "bounded": names(&report.bounded),
        "unbounded": names(&report.unbounded),
        "invariant_exponent": report.invariant_exponent,
        "minimal_invariant_subalphabets": report
            .minimal_invariant_subalphabets
            .iter()
            .map(|set| system.alphabet().render_set(set))
            .collect::<Vec<_>>(),
    })
}

pub fn delta(system: &System, max_len: usize, estimate: &DeltaEstimate) -> Value {
    json!({
        "max_len": max_len,
        "lower_bound": estimate.lower_bound,
        "pairs": estimate
            .pairs
            .iter()
            .map(|p| vec![system.render_word(&p.u), system.render_word(&p.v)])
            .collect::<Vec<_>>(),
    })
}

pub fn twined(verdict: &TwinedVerdict, commutation: Option<bool>, languages: Option<bool>) -> Value {
    let mut out = match serde_json::to_value(verdict).expect("verdict serializes") {
        Value::Object(map) => map,
        _ => unreachable!("verdicts serialize as objects"),
    };
    out.insert("commutation".into(), commutation.into());
    out.insert("languages".into(), languages.into());
    Value::Object(out)
}
