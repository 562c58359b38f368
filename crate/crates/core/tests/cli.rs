use std::path::PathBuf;
use std::process::{Command, Output};

use pwlab_core::cli::config::{parse_config_text, Flags, RunConfig};
use pwlab_core::rootdata::TypeLetter;
use serde_json::Value;

fn pwlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pwlab"))
        .args(args)
        .env_remove("PWLAB_MAX_DIM")
        .output()
        .unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pwlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_a1_passes_with_schema() {
    let out = pwlab(&["verify", "--type", "A", "--rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["suite"], "verify");
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["config"]["lambda"], serde_json::json!([1]));
    assert_eq!(r["config"]["max_degree"], 3);
    for c in r["checks"].as_array().unwrap() {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 5);
        for k in ["id", "anchor", "status", "witness", "ms"] {
            assert!(keys.contains(&k));
        }
        assert_eq!(c["status"], "pass");
        assert_eq!(c["ms"], 0);
    }
    let ids: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    for n in 0..=3 {
        assert!(ids.contains(&format!("iso.principal/{n}").as_str()));
    }
}

#[test]
fn census_a3_csv() {
    let csv = tmp("a3.csv");
    let json = tmp("a3.json");
    let out = pwlab(&[
        "census", "--type", "A", "--rank", "3", "--csv", csv.to_str().unwrap(), "--out", json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "I,w_length,dim_a,dim_pi,finite,orbit_count");
    assert_eq!(lines.len(), 9);
    let inf: Vec<&&str> = lines.iter().filter(|l| l.ends_with(",inf")).collect();
    assert_eq!(inf, vec![&"\"{1,3}\",2,2,1,false,inf"]);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(r["verdict"], "pass");
}

#[test]
fn census_small_types() {
    for (t, rank, rows) in [("A", "1", 2), ("A", "2", 4), ("B", "2", 4)] {
        let csv = tmp(&format!("{t}{rank}.csv"));
        let out = pwlab(&["census", "--type", t, "--rank", rank, "--csv", csv.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let text = std::fs::read_to_string(&csv).unwrap();
        assert_eq!(text.lines().count(), rows + 1);
        assert!(!text.contains("inf"));
    }
}

#[test]
fn general_a2_and_torus() {
    let out = pwlab(&["general", "--type", "A", "--rank", "2", "--subset", "1", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["config"]["subset"], serde_json::json!([1]));
    assert_eq!(r["config"]["s_params"], serde_json::json!([0, 3]));
    let out = pwlab(&["general", "--type", "A", "--rank", "1", "--subset", "", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn config_errors_exit_two() {
    // θ = ω1 + ω3 is not regular
    let out = pwlab(&["verify", "--type", "A", "--rank", "3", "--lambda", "1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda not regular"));
    assert_eq!(pwlab(&["verify", "--type", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(pwlab(&["verify", "--type", "A", "--rank", "2", "--subset", "4"]).status.code(), Some(2));
    assert_eq!(pwlab(&["general", "--type", "A", "--rank", "2", "--s-params", "1,-1", "--subset", ""]).status.code(), Some(2));
    assert_eq!(pwlab(&["verify", "--rank", "2"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_pwlab"))
        .args(["verify", "--type", "A", "--rank", "2"])
        .env("PWLAB_MAX_DIM", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let cfg = tmp("run.cfg");
    std::fs::write(&cfg, "# census run\ntype = A\nrank=3\nmax_degree = 1\nseed=5\n").unwrap();
    let out = pwlab(&["census", "--config", cfg.to_str().unwrap(), "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["config"]["rank"], 2);
    assert_eq!(r["config"]["seed"], 5);
    std::fs::write(&cfg, "type=A\nrank=2\ncolour=blue\n").unwrap();
    assert_eq!(pwlab(&["census", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn resolve_defaults() {
    let flags = Flags {
        type_letter: Some("a".into()),
        rank: Some(2),
        ..Flags::default()
    };
    let c = RunConfig::resolve(&flags, None).unwrap();
    assert_eq!(c.type_letter, TypeLetter::A);
    assert_eq!(c.lambda, vec![1, 1]);
    assert_eq!(c.max_degree, 2);
    assert_eq!(c.max_dim, 5000);
    let c = RunConfig::resolve(&flags, Some("77")).unwrap();
    assert_eq!(c.max_dim, 77);
    let a3 = Flags {
        type_letter: Some("A".into()),
        rank: Some(3),
        ..Flags::default()
    };
    // 2ρ in root coordinates
    assert_eq!(RunConfig::resolve(&a3, None).unwrap().lambda, vec![3, 4, 3]);
}

#[test]
fn config_text_parsing() {
    let m = parse_config_text("a_b = 1\n\n# note\nc=x,y\n").unwrap();
    assert_eq!(m["a-b"], "1");
    assert_eq!(m["c"], "x,y");
    assert!(parse_config_text("nonsense").is_err());
}

#[test]
fn reports_are_deterministic() {
    let run = || pwlab(&["general", "--type", "A", "--rank", "2", "--subset", "1", "--seed", "11"]).stdout;
    assert_eq!(run(), run());
}
