mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use df0l::circularity::ThresholdStatus;
use df0l::format::parse_system;
use df0l::{catalog, Interpreter};
use serde_json::Value;

use common::word;

fn systems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../systems")
}

fn system_path(name: &str) -> String {
    systems_dir().join(name).display().to_string()
}

fn df0l(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_df0l")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = df0l(&full);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn shipped_files_match_the_catalog() {
    for (file, system) in [
        ("thue_morse.txt", catalog::thue_morse()),
        ("eventually_injective.txt", catalog::eventually_injective()),
        ("not_eventually_injective.txt", catalog::not_eventually_injective()),
        ("bounded_tails.txt", catalog::bounded_tails()),
        ("repetitive_bc.txt", catalog::repetitive_bc()),
    ] {
        let text = std::fs::read_to_string(systems_dir().join(file)).unwrap();
        assert_eq!(parse_system(&text).unwrap(), system, "{file}");
    }
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let tm = system_path("thue_morse.txt");
    let runs = [
        ["threshold", tm.as_str(), "--mode", "strong"],
        ["language", tm.as_str(), "-L", "6"],
    ];
    for args in runs {
        let mut a = json(&args);
        let mut b = json(&args);
        a.as_object_mut().unwrap().remove("elapsed_ms");
        b.as_object_mut().unwrap().remove("elapsed_ms");
        assert_eq!(a, b);
    }
}

#[test]
fn envelope_echoes_the_system() {
    let report = json(&["validate", &system_path("eventually_injective.txt")]);
    assert_eq!(report["command"], "validate");
    assert_eq!(report["system"]["min_image_len"], 3);
    assert_eq!(report["system"]["max_image_len"], 5);
    assert_eq!(report["system"]["pdf0l"], true);
    assert!(report["elapsed_ms"].is_u64());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let erasing = write(
        dir.path(),
        "erasing.txt",
        "alphabet: a c\nmap a -> a c\nmap c ->\naxiom: a\n",
    );
    let (code, _, stderr) = df0l(&["threshold", &erasing]);
    assert_eq!(code, 3, "{stderr}");

    let tm = system_path("thue_morse.txt");
    assert_eq!(df0l(&["contains", &tm, "a z"]).0, 2);
    assert_eq!(df0l(&["interpretations", &tm, "a a a"]).0, 3);
    assert_eq!(
        df0l(&["contains", &dir.path().join("missing.txt").display().to_string(), "a"]).0,
        2
    );

    let broken = write(dir.path(), "broken.txt", "alphabet: a b\nmap a -> a b\naxiom: a b\n");
    let (code, _, stderr) = df0l(&["validate", &broken]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"), "{stderr}");

    // CutoffExceeded is a computed verdict, not a failure.
    let (code, stdout, _) = df0l(&[
        "--json",
        "threshold",
        &system_path("repetitive_bc.txt"),
        "--mode",
        "strong",
        "--skip-repetitive-check",
        "--cutoff",
        "3",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["status"], "cutoff_exceeded");
}

#[test]
fn witnesses_revalidate() {
    let s = catalog::not_eventually_injective();
    let mut it = Interpreter::new(&s).unwrap();
    let file = system_path("not_eventually_injective.txt");

    let weak = json(&["threshold", &file, "--mode", "weak"]);
    let w = word(&s, weak["result"]["witness"].as_str().unwrap());
    assert!(!it.is_weakly_synchronized(&w).unwrap());

    let strong = json(&["threshold", &file, "--mode", "strong"]);
    let pair = &strong["result"]["witness"];
    let (left, right) = (
        word(&s, pair["left"].as_str().unwrap()),
        word(&s, pair["right"].as_str().unwrap()),
    );
    assert_eq!(left.len(), 9);
    assert!(it.is_admissible(&left, &right).unwrap());
    assert!(!it.is_strongly_synchronizing(&left, &right).unwrap());

    let sync = json(&[
        "sync",
        &file,
        pair["left"].as_str().unwrap(),
        pair["right"].as_str().unwrap(),
        "--mode",
        "strong",
    ]);
    assert_eq!(sync["result"]["synchronizing"], false);
}

#[test]
fn repetitive_payload() {
    let v = json(&["repetitive", &system_path("repetitive_bc.txt")]);
    let r = &v["result"];
    assert_eq!(
        (r["status"].as_str(), r["letter"].as_str(), r["power"].as_u64()),
        (Some("repetitive"), Some("b"), Some(1))
    );
    assert_eq!(r["witness"], "b c");
}

#[test]
fn power_writes_a_parseable_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("square.txt");
    let out_str = out.display().to_string();
    let v = json(&["power", &system_path("bounded_tails.txt"), "-k", "2", "-o", &out_str]);
    assert_eq!(v["result"]["output"], out_str.as_str());
    let square = parse_system(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(square, catalog::bounded_tails().power(2).unwrap());
    let report = df0l::circularity::weak_threshold(&square, 10).unwrap();
    assert!(matches!(
        report.status,
        ThresholdStatus::Found(_) | ThresholdStatus::CutoffExceeded { .. }
    ));
}

#[test]
fn text_output_is_readable() {
    let (code, stdout, _) = df0l(&["threshold", &system_path("thue_morse.txt")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("status: found"), "{stdout}");
    assert!(stdout.contains("D: 3"), "{stdout}");
}

#[test]
fn twined_command_accepts_the_shipped_twining() {
    let dir = tempfile::tempdir().unwrap();
    let target = write(
        dir.path(),
        "target.txt",
        "alphabet: a' b'\nmap a' -> a' b' a' b' b'\nmap b' -> a' b' a'\naxiom: a'\n",
    );
    let v = json(&[
        "twined",
        &system_path("eventually_injective.txt"),
        &target,
        "--alpha",
        "a -> a'",
        "--alpha",
        "b -> b'",
        "--alpha",
        "c -> b'",
        "--beta",
        "a' -> a b a c c",
        "--beta",
        "b' -> a b a",
    ]);
    assert_eq!(v["result"]["status"], "twined", "{v}");
    assert_eq!(v["result"]["commutation"], true);
}
