use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bipart::graph::{Instance, Part, TwoPartition};
use bipart::io::{parse_instance, parse_labels, parse_partition, write_partition};
use bipart::oracle::Answer;
use tempfile::TempDir;

const C4: &str = "digraph 4\n0 1\n1 2\n2 3\n3 0\n";
// (x1 | x2 | x2) & (~x1 | ~x2 | ~x2): satisfiable, but not by a constant assignment
const MIXED: &str = "p cnf 2 2\n1 2 0\n-1 -2 0\n";

fn bipart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipart"))
        .args(args)
        .env_remove("BIPART_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn poly_decide_on_c4_yields_checkable_witness() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "c4.txt", C4);
    let out = bipart(&["decide", s(&input), "--spec", "out-in 1 1", "--mode", "poly"]);
    assert_eq!(code(&out), 0);
    let (answer, witness) = parse_partition(&stdout(&out), 4).unwrap();
    assert_eq!(answer, Answer::Yes);
    assert!(witness.is_some());

    let cert = file(&dir, "cert.txt", &stdout(&out));
    let ok = bipart(&["verify", s(&input), s(&cert), "--spec", "out-in 1 1"]);
    assert_eq!((code(&ok), stdout(&ok).as_str()), (0, "ok\n"));
}

#[test]
fn verify_names_violations_and_rejects_mismatches() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "c4.txt", C4);
    let mut p = TwoPartition::from_second_part(4, &[1, 3]);
    p.set(1, Part::One);
    let moved = file(&dir, "moved.txt", &write_partition(Answer::Yes, Some(&p)));
    let bad = bipart(&["verify", s(&input), s(&moved), "--spec", "out-in 1 1"]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("violation: vertex 0"), "{}", stdout(&bad));

    let mismatch = bipart(&["verify", s(&input), s(&moved), "--spec", "und 1 1"]);
    assert_eq!(code(&mismatch), 2);
    let pinned = bipart(&["verify", s(&input), s(&moved), "--spec", "out-out 0 0", "--pin", "1=2"]);
    assert_eq!(code(&pinned), 1);
    assert!(stdout(&pinned).contains("pinned"));
}

#[test]
fn zero_demand_side_takes_everything() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "c4.txt", C4);
    for mode in ["poly", "exact"] {
        let out = bipart(&["decide", s(&input), "--spec", "out-out 1 0", "--mode", mode]);
        assert_eq!(code(&out), 0, "{mode}");
    }
    let out = bipart(&["decide", s(&input), "--spec", "out-out 1 0", "--mode", "poly"]);
    let (_, w) = parse_partition(&stdout(&out), 4).unwrap();
    assert_eq!(w, Some(TwoPartition::uniform(4, Part::Two)));
}

#[test]
fn euler_counterexample_has_no_strong_crossing() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("d2.txt");
    let made = bipart(&["gadget", "euler-counterexample", "--r", "2", "--out", s(&out)]);
    assert_eq!(code(&made), 0);
    let instance = parse_instance(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(instance.order(), 15);
    let decided = bipart(&["decide", s(&out), "--spec", "strong-b"]);
    assert_eq!(code(&decided), 1);
    assert!(stdout(&decided).starts_with("answer no\n"));
}

#[test]
fn gadget_output_is_deterministic_and_reparses() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", MIXED);
    for generator in ["m-of-f", "und-nae", "und-1k", "w", "w-prime", "q", "q22", "hypergraph"] {
        let extra: Vec<&str> = if generator == "hypergraph" {
            vec!["--hypergraph"]
        } else {
            vec!["--cnf"]
        };
        let src = if generator == "hypergraph" {
            file(&dir, "h.txt", "hypergraph 4 3\n0 1 2\n1 2 3\n")
        } else {
            cnf.clone()
        };
        let mut texts = Vec::new();
        for round in 0..2 {
            let out = dir.path().join(format!("{generator}{round}.txt"));
            let mut args = vec!["gadget", generator];
            args.extend(&extra);
            args.extend([s(&src), "--out", s(&out)]);
            let o = bipart(&args);
            assert_eq!(code(&o), 0, "{generator}: {}", String::from_utf8_lossy(&o.stderr));
            let text = std::fs::read_to_string(&out).unwrap();
            let labels = std::fs::read_to_string(format!("{}.labels", out.display())).unwrap();
            let instance = parse_instance(&text).unwrap();
            assert_eq!(
                bipart::io::write_instance(&instance),
                text,
                "{generator} re-parses identically"
            );
            let parsed = parse_labels(&labels).unwrap();
            assert!(parsed.iter().all(|(_, v)| v < instance.order()));
            texts.push((text, labels));
        }
        assert_eq!(texts[0], texts[1], "{generator} is deterministic");
    }
}

#[test]
fn pinned_gadget_matches_formula() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", MIXED);
    let out = dir.path().join("w.txt");
    let made = bipart(&["gadget", "w", "--cnf", s(&cnf), "--out", s(&out)]);
    let hint = stdout(&made);
    assert!(hint.contains("--pin 0=2 --pin 1=1"), "{hint}");
    let decided = bipart(&[
        "decide",
        s(&out),
        "--spec",
        "out-in 1 1",
        "--pin",
        "0=2",
        "--pin",
        "1=1",
    ]);
    assert_eq!(code(&decided), 0);

    // unsatisfiable: every assignment of x1 falsifies a clause
    let unsat = file(&dir, "u.cnf", "p cnf 2 3\n1 1 1 0\n-1 -1 -1 0\n1 2 -2 0\n");
    let made = bipart(&["gadget", "q", "--cnf", s(&unsat), "--k1", "2", "--out", s(&out)]);
    assert_eq!(code(&made), 0);
    let decided = bipart(&["decide", s(&out), "--spec", "out-in 2 1", "--strong"]);
    assert_eq!(code(&decided), 1);
}

#[test]
fn gadget_preconditions_are_reported() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", MIXED);
    let out = dir.path().join("x.txt");
    let o = bipart(&["gadget", "q", "--cnf", s(&cnf), "--k1", "1", "--out", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("k1 >= 2"));
    let o = bipart(&["gadget", "m-of-f", "--out", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--cnf"));
}

#[test]
fn fuzz_is_reproducible_and_agrees() {
    let args = [
        "fuzz",
        "--spec",
        "out-in 1 1",
        "--strong",
        "--n",
        "4..8",
        "--trials",
        "500",
        "--seed",
        "17",
    ];
    let a = bipart(&args);
    let b = bipart(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("500/500 agree\n"), "{}", stdout(&a));

    let und = bipart(&["fuzz", "--spec", "und 1 2", "--n", "4..9", "--trials", "200"]);
    assert_eq!(code(&und), 0);
    assert!(stdout(&und).contains("200/200 agree"));
}

#[test]
fn errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "c4.txt", C4);
    assert_eq!(code(&bipart(&["decide", s(&input), "--spec", "out-in one"])), 2);
    assert_eq!(
        code(&bipart(&["decide", s(&input), "--spec", "strong-b", "--mode", "poly"])),
        2
    );
    assert_eq!(code(&bipart(&["fuzz", "--spec", "out-in 1 1"])), 2);
    assert_eq!(code(&bipart(&["decide", "/nonexistent", "--spec", "strong-b"])), 2);
    let path = file(&dir, "path.txt", "digraph 3\n0 1\n1 2\n");
    assert_eq!(
        code(&bipart(&["decide", s(&path), "--spec", "strong-b", "--strong"])),
        2
    );

    let big = file(&dir, "k.txt", &{
        let mut t = String::from("digraph 14\n");
        for u in 0..14 {
            for v in 0..14 {
                if u != v {
                    t.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        t
    });
    let starved = Command::new(env!("CARGO_BIN_EXE_bipart"))
        .args(["decide", s(&big), "--spec", "cyclefactor-b"])
        .env("BIPART_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(code(&starved), 2);
    assert!(String::from_utf8_lossy(&starved.stderr).contains("resource"));
}

#[test]
fn graph_instances_round_trip_through_decide() {
    let dir = TempDir::new().unwrap();
    let path = file(&dir, "p.txt", "graph 3\n0 1\n1 2\n");
    let out = bipart(&["decide", s(&path), "--spec", "und 1 2", "--mode", "poly"]);
    assert_eq!(code(&out), 0);
    let (_, w) = parse_partition(&stdout(&out), 3).unwrap();
    assert_eq!(w, Some(TwoPartition::from_second_part(3, &[1])));
    assert!(matches!(parse_instance("graph 3\n0 1\n").unwrap(), Instance::Graph(_)));
}

#[test]
fn digraph_input_generators() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", MIXED);
    let c4 = file(&dir, "c4.txt", C4);
    let path = file(&dir, "p3.txt", "digraph 3\n0 1\n1 2\n");
    let out = dir.path().join("o.txt");
    let cases: [(&[&str], usize); 3] = [
        (&["lift", "--input", s(&c4)], 6),
        (&["pattern", "--input", s(&path), "--cnf", s(&cnf)], 0),
        (&["gr", "--input", s(&c4), "--x", "0,2"], 0),
    ];
    for (args, order) in cases {
        let mut full = vec!["gadget"];
        full.extend(args);
        full.extend(["--out", s(&out)]);
        let o = bipart(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let instance = parse_instance(&std::fs::read_to_string(&out).unwrap()).unwrap();
        if order > 0 {
            assert_eq!(instance.order(), order);
        }
    }
    let lifted = bipart(&["decide", s(&out), "--spec", "strong-b"]);
    assert_ne!(code(&lifted), 2);
}
