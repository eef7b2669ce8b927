mod common;

use std::process::{Command, Output};

use common::fixture_path;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defeasible-alc"))
        .args(args)
        .env_remove("DEFEASIBLE_ALC_MAX_NODES")
        .output()
        .expect("binary runs")
}

fn fx(name: &str) -> String {
    fixture_path(name).display().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn rank_command() {
    let kb = fx("kb1.dl");
    assert_eq!(json(&["rank", &kb, "Penguin"])["rank_lhs"], 1);
    assert_eq!(json(&["rank", &kb, "Bird"])["rank_lhs"], 0);
    let v = json(&["rank", &kb, "A and not A"]);
    assert_eq!(v["rank_lhs"], "inf");
    assert_eq!(v["strata"].as_array().unwrap().len(), 2);
    let text = String::from_utf8(run(&["rank", &kb, "Penguin"]).stdout).unwrap();
    assert!(text.starts_with("rank(Penguin) = 1\n"));
    assert!(text.contains("D1: T(Penguin) <= not Fly"));
}

#[test]
fn entails_command() {
    let v = json(&[
        "entails",
        &fx("kb1.dl"),
        "--method",
        "mp",
        "T(Penguin) <= HasNiceFeather",
    ]);
    assert_eq!(v["entailed"], true);
    assert_eq!(v["bases"].as_array().unwrap().len(), 1);
    let v = json(&[
        "entails",
        &fx("kb3.dl"),
        "--method",
        "mp",
        "T(Penguin) <= C",
    ]);
    assert_eq!(v["entailed"], false);
    let v = json(&[
        "entails",
        &fx("kb3.dl"),
        "--method",
        "lex",
        "T(Penguin) <= C",
    ]);
    assert_eq!(v["entailed"], true);
    let v = json(&["entails", &fx("kb1.dl"), "T(Penguin) <= HasNiceFeather"]);
    assert_eq!(v["method"], "rc");
    assert_eq!(v["entailed"], false);
    assert_eq!(v["rank_lhs"], 1);
    assert_eq!(v["rank_lhs_and_neg_rhs"], 1);
    let v = json(&[
        "entails",
        &fx("kb4.dl"),
        "--method",
        "oracle-s",
        "T(BabyPenguin) <= not Fly",
    ]);
    assert_eq!(v["entailed"], true);
    let v = json(&[
        "entails",
        &fx("kb1.dl"),
        "--method",
        "classical",
        "Penguin <= Bird",
    ]);
    assert_eq!(v["entailed"], true);
}

#[test]
fn explain_prints_bases() {
    let out = run(&[
        "entails",
        &fx("kb2.dl"),
        "--method",
        "mp",
        "--explain",
        "T(Penguin) <= C",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("base 1: {T(Penguin) <= not Fly, T(Bird) <= H} -> true"));
    assert!(text.contains("base 2: {T(Penguin) <= not Fly, T(Bird) <= A} -> true"));
}

#[test]
fn bases_command() {
    let count = |kb: &str, method: &str| {
        json(&["bases", &fx(kb), "--method", method, "Penguin"])["bases"]
            .as_array()
            .unwrap()
            .len()
    };
    assert_eq!(count("kb2.dl", "mp"), 2);
    assert_eq!(count("kb1.dl", "mp"), 1);
    assert_eq!(count("kb3.dl", "lex"), 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["bases", &fx("kb3.dl"), "--method", "mp", "Penguin"];
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(json(&args)), strip(json(&args)));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["check", &fx("kb_abox.dl")]), Some(0));
    assert_eq!(code(&["rank", &fx("kb1.dl"), "Bird and"]), Some(2));
    assert_eq!(code(&["check", &fx("kb_inconsistent.dl")]), Some(3));
    assert_eq!(
        code(&["rank", &fx("kb_inconsistent.dl"), "Penguin"]),
        Some(3)
    );
    assert_eq!(
        code(&["rank", &fx("kb4.dl"), "BabyPenguin", "--max-nodes", "1"]),
        Some(4)
    );
    assert_eq!(
        code(&[
            "entails",
            &fx("kb2.dl"),
            "--method",
            "oracle-s",
            "T(Penguin) <= C"
        ]),
        Some(5)
    );
    assert_eq!(
        code(&[
            "entails",
            &fx("kb2.dl"),
            "--method",
            "oracle-s",
            "--max-atoms",
            "6",
            "--max-domain",
            "32",
            "T(Penguin) <= C"
        ]),
        Some(0)
    );
    assert_eq!(
        code(&[
            "entails",
            &fx("kb_abox.dl"),
            "--method",
            "oracle-rc",
            "T(Bird) <= Fly"
        ]),
        Some(5)
    );
}

#[test]
fn node_budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_defeasible-alc"))
        .args(["rank", &fx("kb4.dl"), "BabyPenguin"])
        .env("DEFEASIBLE_ALC_MAX_NODES", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
