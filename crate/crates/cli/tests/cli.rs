use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_schurweyl"));
    c.env_remove("SCHURWEYL_OUT_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn preset(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn rsk_variants() {
    let o = run(&["rsk", "--word", "2,1,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1,2/2 1,3/2\n");
    assert_eq!(stdout(&run(&["rsk", "--word", ""])), "∅ ∅\n");
    assert_eq!(
        stdout(&run(&["rsk", "--variant", "star", "--word", "2,1"])),
        "1/2 1/2\n"
    );
    assert_eq!(
        stdout(&run(&["rsk", "--variant", "mixed", "--word", "1*,1*"])),
        "1*/1* 1/2\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["--format", "json", "rsk", "--word", "2,1,2"]))).unwrap();
    assert_eq!(json["p"], "1,2/2");
    assert_eq!(json["shape"], "(2,1)");
    let csv = stdout(&run(&["--format", "csv", "rsk", "--word", "2,1,2"]));
    assert_eq!(csv, "word,p,q,shape\n\"2,1,2\",\"1,2/2\",\"1,3/2\",\"(2,1)\"\n");
}

#[test]
fn rsk_rejects_bad_words() {
    let o = run(&["rsk", "--word", "2,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot parse word"));
    let o = run(&["rsk", "--word", "1*"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph_export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let a = run(&["--out", out, "--format", "json", "graph", "--k", "2", "--depth", "3"]);
    assert!(a.status.success());
    let path = dir.path().join("graph-k2-l0-d3.json");
    let first = fs::read(&path).unwrap();
    run(&["--out", out, "--format", "json", "graph", "--k", "2", "--depth", "3"]);
    assert_eq!(first, fs::read(&path).unwrap());
    let json: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(json["levels"][3].as_array().unwrap().len(), 6);

    let single = stdout(&run(&["graph", "--k", "2", "--depth", "0"]));
    assert_eq!(single, "# schur-weyl graph k=2 l=0 depth=0\nv 0 0 ∅\n");
    let csv = stdout(&run(&[
        "--format", "csv", "graph", "--k", "1", "--l", "1", "--depth", "1",
    ]));
    assert_eq!(csv.lines().count(), 3);
    assert_eq!(run(&["graph", "--k", "6", "--depth", "12"]).status.code(), Some(2));
}

#[test]
fn graph_via_env_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .env("SCHURWEYL_OUT_DIR", dir.path())
        .args(["--quiet", "graph", "--k", "2", "--depth", "2"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(dir.path().join("graph-k2-l0-d2.txt").exists());
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "dims"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS dims cases="));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["--format", "json", "verify", "duality"]))).unwrap();
    assert_eq!(json[0]["name"], "duality");
    assert_eq!(json[0]["failure_count"], 0);
    let o = run(&["verify", "nonexistent"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn verify_all_aggregates() {
    let o = run(&["verify", "all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    for name in [
        "bijection",
        "duality",
        "focus",
        "shape",
        "vandermonde",
        "dims",
        "densities",
        "thoma",
        "asymptotics",
        "mixed-duality",
        "graph",
    ] {
        assert!(text.contains(&format!("PASS {name} ")), "{name} missing from\n{text}");
    }
}

#[test]
fn experiment_preset_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a");
    let o = run(&["--out", out.to_str().unwrap(), "experiment", &preset("thoma-k2.json")]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let summary = stdout(&o);
    assert!(
        summary.starts_with("PASS thoma k=2 l=0 n=10000 m=3 seeds=[1, 2, 3, 4, 5]"),
        "{summary}"
    );
    let report = fs::read_to_string(out.join("thoma-k2.json")).unwrap();
    let csv = fs::read_to_string(out.join("thoma-k2.csv")).unwrap();
    assert!(csv.starts_with("seed,item,key,estimate,reference,deviation\n"));
    let json: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(json["pass"], true);

    let replay = dir.path().join("b");
    let log = out.join("thoma-k2.words.jsonl");
    let o = run(&[
        "--out",
        replay.to_str().unwrap(),
        "--quiet",
        "experiment",
        &preset("thoma-k2.json"),
        "--resume",
        log.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(report, fs::read_to_string(replay.join("thoma-k2.json")).unwrap());
}

#[test]
fn seed_override_changes_only_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&[
        "--out",
        out,
        "--quiet",
        "experiment",
        &preset("thoma-k2.json"),
        "--seed-override",
        "11,12",
    ]);
    assert!(o.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("thoma-k2.json")).unwrap()).unwrap();
    let original: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(preset("thoma-k2.json")).unwrap()).unwrap();
    assert_eq!(json["config"]["seeds"], serde_json::json!([11, 12]));
    assert_eq!(json["config"]["n"], original["n"]);
    assert_eq!(json["config"]["m"], original["m"]);
    assert_eq!(json["outcome"]["report"]["seeds"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_configs_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("syntax.json", "{ not json", "config"),
        ("sum.json", r#"{"k":2,"p":[0.5,0.2],"n":10,"seeds":[1]}"#, "p:"),
        ("m.json", r#"{"k":2,"p":[0.5,0.5],"n":10,"m":20,"seeds":[1]}"#, "m:"),
    ];
    for (name, body, field) in cases {
        let path = dir.path().join(name);
        fs::write(&path, body).unwrap();
        let o = run(&[
            "--out",
            dir.path().to_str().unwrap(),
            "experiment",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(field), "{name}: {err}");
    }
    let o = run(&["experiment", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failing_experiment_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tight.json");
    fs::write(
        &path,
        r#"{"experiment":"density","k":2,"p":[0.7,0.3],"n":201,"seeds":[1],"tolerance":1e-9}"#,
    )
    .unwrap();
    let o = run(&[
        "--out",
        dir.path().to_str().unwrap(),
        "experiment",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL density"));
}
