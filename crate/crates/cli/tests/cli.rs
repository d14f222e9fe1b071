use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "corpus", &format!("{name}.rot")].iter().collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d2color")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn color_icosahedron() {
    let o = run(&["color", "--in", &corpus("icosahedron")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["palette"], 16);
    let colors = v["colors"].as_object().unwrap();
    assert_eq!(colors.len(), 12);
    assert!(colors.values().all(|c| (1..=16).contains(&c.as_u64().unwrap())));
}

#[test]
fn color_trace_lines_precede_coloring() {
    let o = run(&["color", "--trace", "--in", &corpus("dodecahedron")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["step"], 0);
    assert!(lines[4].starts_with("{\"palette\":16"));
}

#[test]
fn chi2_of_c5() {
    let o = run(&["chi2", "--in", &corpus("c5")]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "5"));
    let o = run(&["chi2", "--format", "text", "--budget", "1", "--in", &corpus("dodecahedron")]);
    assert_eq!(stdout(&o).trim(), "unknown");
}

#[test]
fn discharge_cube() {
    let o = run(&["discharge", "--in", &corpus("cube")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["conservation"], "-8");
    assert_eq!(v["falsification"], false);
}

#[test]
fn detect_from_stdin() {
    let text = std::fs::read(corpus("c5")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_d2color"))
        .args(["detect", "--in", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    std::io::Write::write_all(&mut child.stdin.take().unwrap(), &text).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"rule":"R-δ2","binding":{"v":0,"v1":1,"v2":4},"claimed_bound":10,"observed_d2":4}"#
    );
}

#[test]
fn validate_reports_conflicts() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let bad = dir.path().join("bad.json");
    std::fs::write(&good, r#"{"palette":16,"colors":{"0":1,"1":2,"2":3,"3":4,"4":5}}"#).unwrap();
    std::fs::write(&bad, r#"{"palette":16,"colors":{"0":1,"1":2,"2":3,"3":4,"4":1}}"#).unwrap();
    let c5 = corpus("c5");
    let o = run(&["validate", "--in", &c5, "--coloring", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["validate", "--in", &c5, "--coloring", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["valid"], false);
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(run(&["chi2", "--in", "/definitely/missing.rot"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["color"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("broken.rot");
    std::fs::write(&f, "2 1\n0: 1\n1: 1\n").unwrap();
    assert_eq!(run(&["color", "--in", f.to_str().unwrap()]).status.code(), Some(2));
    let hub = dir.path().join("hub.rot");
    std::fs::write(&hub, "7 6\n0: 1 2 3 4 5 6\n1: 0\n2: 0\n3: 0\n4: 0\n5: 0\n6: 0\n").unwrap();
    assert_eq!(run(&["detect", "--in", hub.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn gen_writes_files_that_reload() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["gen", "--n", "40", "--seed", "5", "--count", "3", "--dump", d]);
    assert_eq!(o.status.code(), Some(0));
    for s in 5..8 {
        let path = dir.path().join(format!("random-n40-s{s}.rot"));
        assert_eq!(run(&["color", "--in", path.to_str().unwrap()]).status.code(), Some(0));
    }
    let o = run(&["gen", "--name", "k4"]);
    assert!(stdout(&o).starts_with("4 6\n"));
}

#[test]
fn batch_is_ordered_and_deterministic() {
    let args = ["batch", "--count", "20", "--n", "60", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 15 + 20 + 1);
    for (i, l) in lines[..35].iter().enumerate() {
        assert_eq!(l["index"], i);
        assert_eq!(l["valid"], true);
    }
    let s = &lines[35]["summary"];
    assert_eq!((s["graphs"].as_u64(), s["failures"].as_u64(), s["anomalies"].as_u64()), (Some(35), Some(0), Some(0)));
    assert!(s["max_colors"].as_u64().unwrap() <= 16);
}
