use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pathhom(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathhom"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn setup(files: &[(&str, &str)]) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

const DIAMOND: &str = "0 1\n0 2\n1 3\n2 3\n";
const K22: &str = "a c\na d\nb c\nb d\n";
const CHORD: &str = "0 1\n1 2\n0 2\n";

#[test]
fn betti_examples() {
    let dir = setup(&[("diamond.edges", DIAMOND), ("k22.edges", K22)]);
    let r = json(&pathhom(
        dir.path(),
        &["betti", "diamond.edges", "--dim", "1"],
    ));
    assert_eq!(r["results"][0]["betti"], 0);
    assert_eq!(r["results"][0]["algorithm"], "general");

    let r = json(&pathhom(dir.path(), &["betti", "k22.edges", "--track"]));
    let res = &r["results"][0];
    assert_eq!(res["betti"], 1);
    assert_eq!(res["dimension"], 1);
    assert_eq!(res["algorithm"], "recursive");
    assert_eq!(res["basis"][0]["terms"].as_array().unwrap().len(), 4);
    assert!(res.get("elapsed_ms").is_none());

    let r = json(&pathhom(
        dir.path(),
        &["betti", "diamond.edges", "--dim", "max", "--timings"],
    ));
    assert_eq!(r["results"][0]["betti"], 0);
    assert_eq!(r["results"][0]["dimension"], 2);
    assert!(r["results"][0]["elapsed_ms"].is_number());
}

#[test]
fn betti_batches_keep_input_order() {
    let dir = setup(&[("a.edges", DIAMOND), ("b.edges", K22)]);
    let r = json(&pathhom(
        dir.path(),
        &["betti", "b.edges", "a.edges", "--threads", "2"],
    ));
    assert_eq!(r["results"][0]["input"], "b.edges");
    assert_eq!(r["results"][1]["input"], "a.edges");
}

#[test]
fn explicit_layers() {
    let dir = setup(&[("g.edges", "a c\nb c\nx\n"), ("g.layers", "a b x\nc\n")]);
    let r = json(&pathhom(
        dir.path(),
        &["betti", "g.edges", "--layers", "g.layers"],
    ));
    assert_eq!(r["results"][0]["betti"], 0);
    assert_eq!(r["config"]["layers"], "file");
    let out = pathhom(
        dir.path(),
        &["betti", "g.edges", "g.edges", "--layers", "g.layers"],
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn exit_codes() {
    let dir = setup(&[
        ("chord.edges", CHORD),
        ("bad.edges", "a b c d\n"),
        ("loop.edges", "a a\n"),
        ("cycle.edges", "a b\nb a\n"),
        ("big.edges", K22),
    ]);
    assert_eq!(code(&pathhom(dir.path(), &["betti", "chord.edges"])), 3);
    assert_eq!(code(&pathhom(dir.path(), &["betti", "bad.edges"])), 2);
    assert_eq!(code(&pathhom(dir.path(), &["betti", "loop.edges"])), 3);
    assert_eq!(
        code(&pathhom(
            dir.path(),
            &["betti", "cycle.edges", "--dim", "max"]
        )),
        3
    );
    assert_eq!(code(&pathhom(dir.path(), &["betti", "missing.edges"])), 1);
    let guarded = pathhom(
        dir.path(),
        &["betti", "big.edges", "--dim", "1", "--guard", "3"],
    );
    assert_eq!(code(&guarded), 4);
    assert_eq!(
        code(&pathhom(dir.path(), &["betti", "k22", "--dim", "x"])),
        2
    );
}

#[test]
fn sample_counts_and_files() {
    let dir = setup(&[]);
    let r = json(&pathhom(
        dir.path(),
        &[
            "sample",
            "--sizes",
            "4,10,10,10",
            "--rho",
            "0.1",
            "--seed",
            "5",
            "--out-dir",
            "out",
        ],
    ));
    assert_eq!(r["summary"]["per_pair"], serde_json::json!([4, 10, 10]));
    assert_eq!(r["config"]["rng"], "chacha8");
    let edges = fs::read_to_string(dir.path().join("out/sample_0000.edges")).unwrap();
    let records: Vec<usize> = edges.lines().map(|l| l.split(' ').count()).collect();
    assert_eq!(records.iter().filter(|&&n| n == 2).count(), 24);
    let vertices: std::collections::BTreeSet<&str> = edges.split_whitespace().collect();
    assert_eq!(vertices.len(), 34);

    let r = json(&pathhom(
        dir.path(),
        &["sample", "--base", "1", "--rho", "1", "--out-dir", "full"],
    ));
    assert_eq!(r["results"][0]["edges"], 100);
    let b = json(&pathhom(
        dir.path(),
        &[
            "betti",
            "full/sample_0000.edges",
            "--layers",
            "full/sample_0000.layers",
        ],
    ));
    assert_eq!(b["results"][0]["betti"], 81);

    let bad = pathhom(
        dir.path(),
        &["sample", "--sizes", "2,2", "--rho", "1.5", "--out-dir", "x"],
    );
    assert_eq!(code(&bad), 3);
}

#[test]
fn sampled_files_reproduce_in_memory_samples() {
    let dir = setup(&[]);
    json(&pathhom(
        dir.path(),
        &[
            "sample",
            "--sizes",
            "3,4,3",
            "--rho",
            "0.5",
            "--count",
            "3",
            "--seed",
            "2",
            "--out-dir",
            "s",
        ],
    ));
    let files = json(&pathhom(
        dir.path(),
        &[
            "compare",
            "s/sample_0000.edges",
            "s/sample_0001.edges",
            "s/sample_0002.edges",
            "--layers",
            "s/sample_0000.layers",
            "--layers",
            "s/sample_0001.layers",
            "--layers",
            "s/sample_0002.layers",
        ],
    ));
    let sampled = json(&pathhom(
        dir.path(),
        &[
            "compare", "--sizes", "3,4,3", "--rho", "0.5", "--count", "3", "--seed", "2",
        ],
    ));
    for i in 0..3 {
        assert_eq!(
            files["results"][i]["recursive"],
            sampled["results"][i]["recursive"]
        );
    }
}

#[test]
fn compare_agrees_and_detects_faults() {
    let dir = setup(&[("one.edges", "v\n")]);
    let r = json(&pathhom(
        dir.path(),
        &[
            "compare", "--base", "1", "--rho", "0.5", "--count", "50", "--seed", "3",
        ],
    ));
    assert_eq!(r["summary"]["agree"], true);
    assert_eq!(r["summary"]["count"], 50);

    let r = json(&pathhom(dir.path(), &["compare", "one.edges"]));
    assert_eq!(r["results"][0]["recursive"], 0);
    assert_eq!(r["results"][0]["general"], 0);

    let r = json(&pathhom(
        dir.path(),
        &[
            "compare", "--sizes", "3,3,3", "--rho", "0.7", "--count", "5", "--dim", "max",
        ],
    ));
    assert_eq!(r["summary"]["agree"], true);

    let out = pathhom(
        dir.path(),
        &[
            "compare",
            "--base",
            "1",
            "--rho",
            "0.5",
            "--count",
            "2",
            "--inject-fault",
        ],
    );
    assert_eq!(code(&out), 5);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["summary"]["mismatches"], 1);
}

#[test]
fn persist_outputs() {
    let dir = setup(&[
        ("w.edges", "a c 0.5\na d 0.5\nb c 0.5\nb d 0.5\n"),
        ("low.edges", "a c 0.5\na d 0.5\nb c 0.5\nb d 0.25\n"),
        ("k22.edges", K22),
    ]);
    let out = pathhom(dir.path(), &["persist", "w.edges"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "threshold,betti\n0.5,0\n"
    );
    let out = pathhom(dir.path(), &["persist", "low.edges", "--baseline"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "threshold,betti\n-0.75,1\n0.25,0\n0.5,0\n"
    );
    let out = pathhom(dir.path(), &["persist", "w.edges", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"][0]["threshold"], "0.5");
    assert_eq!(v["baseline"], Value::Null);
    let out = pathhom(
        dir.path(),
        &["persist", "w.edges", "--format", "dat", "-o", "curve.dat"],
    );
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(dir.path().join("curve.dat")).unwrap(),
        "# threshold betti\n0.5 0\n"
    );
    assert_eq!(code(&pathhom(dir.path(), &["persist", "k22.edges"])), 3);
}

#[test]
fn preprocess_operations() {
    let dir = setup(&[
        ("chord.edges", CHORD),
        ("chain.edges", "0 1\n1 2\n"),
        ("two.edges", "a b\nc d\n"),
        ("k22.edges", K22),
    ]);
    let r = json(&pathhom(
        dir.path(),
        &[
            "preprocess",
            "chord.edges",
            "--op",
            "longest-subgraph",
            "--out",
            "star",
        ],
    ));
    assert_eq!(r["results"][0]["edges"], 2);
    assert_eq!(
        fs::read_to_string(dir.path().join("star.edges")).unwrap(),
        "0 1\n1 2\n"
    );
    assert_eq!(
        fs::read_to_string(dir.path().join("star.layers")).unwrap(),
        "0\n1\n2\n"
    );

    let r = json(&pathhom(
        dir.path(),
        &["preprocess", "chain.edges", "--op", "trim", "--out", "t"],
    ));
    assert_eq!(r["results"][0]["trivial"], true);
    assert!(!dir.path().join("t.edges").exists());

    let r = json(&pathhom(
        dir.path(),
        &[
            "preprocess",
            "k22.edges",
            "--op",
            "trim-connected",
            "--out",
            "k",
        ],
    ));
    assert_eq!(r["results"][0]["trivial"], false);
    assert_eq!(r["results"][0]["edges"], 4);

    let r = json(&pathhom(
        dir.path(),
        &[
            "preprocess",
            "two.edges",
            "--op",
            "components",
            "--out",
            "part",
        ],
    ));
    assert_eq!(r["results"][0]["components"], 2);
    assert_eq!(
        fs::read_to_string(dir.path().join("part_0.edges")).unwrap(),
        "a b\n"
    );
    assert_eq!(
        fs::read_to_string(dir.path().join("part_1.edges")).unwrap(),
        "c d\n"
    );

    let r = json(&pathhom(
        dir.path(),
        &[
            "preprocess",
            "k22.edges",
            "--op",
            "infer-layers",
            "--out",
            "k22",
        ],
    ));
    assert_eq!(r["results"][0]["depth"], 1);
    assert_eq!(
        fs::read_to_string(dir.path().join("k22.layers")).unwrap(),
        "a b\nc d\n"
    );

    let out = pathhom(
        dir.path(),
        &[
            "preprocess",
            "chord.edges",
            "--op",
            "infer-layers",
            "--out",
            "c",
        ],
    );
    assert_eq!(code(&out), 3);
}
