use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsprocess"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn rsprocess")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prob_prints_exact_form() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.json");
    std::fs::write(&q, r#"{"theta":1,"pins":[{"time":-0.5,"diagram":[1]},{"time":0,"diagram":[1]}]}"#).unwrap();
    let out = run(&["prob", q.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["exact"], "1/2 * exp(-1)");
    assert!((v["probability"].as_f64().unwrap() - 0.5 * (-1f64).exp()).abs() < 1e-15);

    let out = run(&["prob", q.to_str().unwrap(), "--k", "10"], dir.path());
    assert_eq!(out.status.code(), Some(0));

    std::fs::write(&q, r#"{"theta":1,"pins":[{"time":0.5,"diagram":[1]}]}"#).unwrap();
    assert_eq!(run(&["prob", q.to_str().unwrap()], dir.path()).status.code(), Some(2));
}

#[test]
fn sampling_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["sample", "--theta", "2", "--samples", "5", "--seed", "9", "--streams", "2"],
        vec!["sample", "--model", "discrete", "--theta", "2", "--k", "5", "--samples", "3"],
        vec!["sample", "--model", "arches", "--theta", "0.5", "--lines", "2", "--samples", "3"],
    ] {
        let a = run(&args, dir.path());
        let b = run(&args, dir.path());
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout);
        let n: usize = args[args.iter().position(|&x| x == "--samples").unwrap() + 1].parse().unwrap();
        assert_eq!(stdout(&a).lines().count(), n);
    }
    let bad = run(&["sample", "--model", "discrete", "--theta", "2", "--k", "1"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn trajectory_csv_feeds_render() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let out = run(
        &["trajectory", "--theta", "3", "--format", "csv", "--out", csv.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("line_index,event_time,new_value"));

    let svg = dir.path().join("t.svg");
    let out = run(
        &["render", "--input", csv.to_str().unwrap(), "--theta", "3", "--out", svg.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.json");
    let report = dir.path().join("out/report.json");

    std::fs::write(&cfg, format!(r#"{{"checks":["bijections"],"out":{:?}}}"#, report)).unwrap();
    let ok = run(&["verify", cfg.to_str().unwrap()], dir.path());
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rep["passed"], true);

    let experiment = r#"{"name":"tight","model":"continuous","theta":1,"pins":[{"time":0,"diagram":[1]}],"samples":2000}"#;
    std::fs::write(
        &cfg,
        format!(r#"{{"checks":[],"threshold":1e-9,"experiments":[{experiment}],"out":{:?}}}"#, report),
    )
    .unwrap();
    assert_eq!(run(&["verify", cfg.to_str().unwrap()], dir.path()).status.code(), Some(1));

    std::fs::write(&cfg, r#"{"bogus":true}"#).unwrap();
    assert_eq!(run(&["verify", cfg.to_str().unwrap()], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["verify", "--checks", "nope"], dir.path()).status.code(), Some(2));
}
