use std::path::PathBuf;

use assert_cmd::Command;
use predicates::prelude::*;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

fn cob2() -> Command {
    Command::cargo_bin("cob2").unwrap()
}

/// Compares JSON output with `tests/golden/<name>.json`. Set
/// `UPDATE_GOLDEN=1` to rewrite the files.
fn golden(name: &str, args: &[&str], code: i32) {
    let out = cob2()
        .args(args)
        .arg("--json")
        .assert()
        .code(code)
        .get_output()
        .stdout
        .clone();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let actual: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let expected: serde_json::Value = serde_json::from_str(&expected).unwrap();
    assert_eq!(actual, expected, "{name}");
}

#[test]
fn two_crosscaps_equal_klein_bottle() {
    cob2()
        .args([
            "eq",
            "mul . (theta * theta)",
            "mul . (phi * id) . comul . unit",
        ])
        .assert()
        .code(0)
        .stdout("equal\n");
}

#[test]
fn unequal_terms_exit_one() {
    cob2()
        .args(["eq", "phi", "id"])
        .assert()
        .code(1)
        .stdout("not equal\n");
}

#[test]
fn crosscap_is_not_orientable_member() {
    cob2()
        .args(["member", "--flavor", "orientable", "theta"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("-1").and(predicate::str::contains("X = -1 is odd")));
}

#[test]
fn klein_bottle_is_orientable_member() {
    cob2()
        .args([
            "member",
            "--flavor",
            "orientable",
            "mul . (phi * id) . comul . unit",
        ])
        .assert()
        .code(0);
    cob2()
        .args([
            "member",
            "--flavor",
            "oriented",
            "mul . (phi * id) . comul . unit",
        ])
        .assert()
        .code(1);
}

#[test]
fn cp1_has_no_theta() {
    cob2()
        .args(["find-theta", "--algebra", &data("cp1.json")])
        .assert()
        .code(1)
        .stdout("none over Q\n");
}

#[test]
fn torus_in_cp1_is_two() {
    cob2()
        .args([
            "eval",
            "--algebra",
            &data("cp1.json"),
            "counit . mul . comul . unit",
        ])
        .assert()
        .code(0)
        .stdout("[2]\n");
}

#[test]
fn input_errors_exit_two() {
    cob2()
        .args(["parse", "mul . (id * unit"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("byte 16"));
    cob2()
        .args(["parse", "mul . counit"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("arity mismatch"));
    cob2().args(["eq", "mul", "id"]).assert().code(2);
    cob2()
        .args(["eq", "--flavor", "oriented", "phi", "id"])
        .assert()
        .code(2);
    cob2()
        .args(["normalize", "--flavor", "sideways", "id"])
        .assert()
        .code(2);
    cob2()
        .args(["eval", "--algebra", "/nonexistent.json", "id"])
        .assert()
        .code(2);
    cob2()
        .args(["eval", "--algebra", &data("cp1.json"), "theta"])
        .assert()
        .code(2);
    cob2()
        .args(["synth", "--flavor", "orientable", "theta"])
        .assert()
        .code(2);
    cob2().arg("frobnicate").assert().code(2);
}

#[test]
fn synth_output_renormalizes() {
    let out = cob2()
        .args([
            "synth",
            "(theta * phi * (comul . mul)) . (swap * (mul . comul))",
        ])
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let word = String::from_utf8(out).unwrap();
    let a = cob2()
        .args(["normalize", word.trim()])
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    let b = cob2()
        .args([
            "normalize",
            "(theta * phi * (comul . mul)) . (swap * (mul . comul))",
        ])
        .assert()
        .code(0)
        .get_output()
        .stdout
        .clone();
    assert_eq!(a, b);
}

#[test]
fn json_outputs_match_golden_files() {
    golden("parse", &["parse", "comul . mul . mul * id"], 0);
    golden(
        "normalize_twisted_pants",
        &["normalize", "mul . (phi * id)"],
        0,
    );
    golden(
        "normalize_mixed",
        &[
            "normalize",
            "(counit . theta) * (mul . (theta * id) . mul . comul . unit) * swap",
        ],
        0,
    );
    golden(
        "eq_klein",
        &[
            "eq",
            "mul . (theta * theta)",
            "mul . (phi * id) . comul . unit",
        ],
        0,
    );
    golden(
        "member_theta",
        &["member", "--flavor", "orientable", "theta"],
        1,
    );
    golden(
        "member_klein",
        &[
            "member",
            "--flavor",
            "orientable",
            "mul . (phi * id) . comul . unit",
        ],
        0,
    );
    golden("synth_klein", &["synth", "mul . (theta * theta)"], 0);
    golden(
        "eval_qq_swap_comul",
        &["eval", "--algebra", &data("qq_swap.json"), "comul"],
        0,
    );
    golden(
        "check_algebra_cp1",
        &["check-algebra", "--algebra", &data("cp1.json")],
        1,
    );
    golden(
        "find_theta_cp1",
        &["find-theta", "--algebra", &data("cp1.json")],
        1,
    );
    golden(
        "find_theta_qq_swap",
        &["find-theta", "--algebra", &data("qq_swap.json")],
        0,
    );
}

#[test]
fn selftest_passes() {
    cob2()
        .args(["selftest", "--seed", "0", "--cases", "200"])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("all suites pass"));
}

#[test]
fn output_is_deterministic() {
    let run = || {
        cob2()
            .args(["selftest", "--seed", "5", "--cases", "25", "--json"])
            .assert()
            .code(0)
            .get_output()
            .stdout
            .clone()
    };
    assert_eq!(run(), run());
}
