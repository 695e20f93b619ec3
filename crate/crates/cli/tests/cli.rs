use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contraction")).current_dir(dir).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

const K4: &str = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";

/// Edges as 0-based pairs, read back from `e u v` lines.
fn edges(text: &str) -> Vec<(usize, usize)> {
    text.lines()
        .filter_map(|l| l.strip_prefix("e "))
        .map(|l| {
            let mut it = l.split_whitespace().map(|x| x.parse::<usize>().unwrap() - 1);
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect()
}

#[test]
fn gen_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(dir.path(), &["--seed", "5", "gen", "--n", "6"]);
    let b = run(dir.path(), &["--seed", "5", "gen", "--n", "6"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(run(dir.path(), &["gen", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn solve_prints_a_proper_coloring() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["--seed", "2", "gen", "--n", "7", "--out", "g.txt"])), 0);
    let graph = fs::read_to_string(dir.path().join("g.txt")).unwrap();
    let out = run(dir.path(), &["solve", "--problem", "3col", "g.txt"]);
    let text = stdout(&out);
    if code(&out) == 0 {
        assert!(text.starts_with("yes"));
        let mut color = vec![0; 7];
        for l in text.lines().filter_map(|l| l.strip_prefix("col ")) {
            let v: Vec<usize> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
            color[v[0] - 1] = v[1];
        }
        assert!(color.iter().all(|&c| (1..=3).contains(&c)));
        for (u, v) in edges(&graph) {
            assert_ne!(color[u], color[v]);
        }
    } else {
        assert_eq!(code(&out), 1);
        assert!(text.starts_with("no"));
    }
}

#[test]
fn no_answers_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k4.txt", K4);
    write(dir.path(), "c4.txt", C4);
    let out = run(dir.path(), &["solve", "--problem", "3col", "k4.txt"]);
    assert_eq!((code(&out), stdout(&out).trim()), (1, "no"));
    assert_eq!(code(&run(dir.path(), &["recognize", "--class", "chordal", "c4.txt"])), 1);
    assert_eq!(code(&run(dir.path(), &["recognize", "--class", "chordal", "k4.txt"])), 0);
    let split = run(dir.path(), &["recognize", "--class", "split", "k4.txt"]);
    assert_eq!(code(&split), 0);
    assert!(stdout(&split).contains("part K"));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.txt", "problem hadwiger\n");
    write(dir.path(), "loop.txt", "p edge 2 1\ne 1 1\n");
    assert_eq!(code(&run(dir.path(), &["solve", "--problem", "hadwiger", "bad.txt"])), 2);
    assert_eq!(code(&run(dir.path(), &["solve", "--problem", "3col", "loop.txt"])), 2);
    assert_eq!(code(&run(dir.path(), &["solve", "--problem", "3col", "missing.txt"])), 2);
    assert_eq!(code(&run(dir.path(), &["recognize", "--class", "bogus", "loop.txt"])), 2);
    assert_eq!(code(&run(dir.path(), &["verify", "hop", "--hop", "lsh", "--mutation", "drop-ac"])), 2);
}

#[test]
fn guard_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k4.txt", K4);
    let out = run(dir.path(), &["--guard", "3", "solve", "--problem", "3col", "k4.txt"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
}

#[test]
fn chain_writes_every_hop_and_keeps_the_answer() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["--seed", "3", "gen", "--n", "5", "--out", "g.txt"])), 0);
    let source = code(&run(dir.path(), &["solve", "--problem", "3col", "g.txt"]));
    assert_eq!(code(&run(dir.path(), &["reduce", "--chain", "3col..fcon", "--class", "split", "g.txt", "out"])), 0);
    for file in ["3col.txt", "lsh.txt", "lsi.txt", "xmatch.txt", "structured.txt", "fcon-split.txt", "manifest.txt"] {
        assert!(dir.path().join("out").join(file).exists(), "{file}");
    }
    let manifest = fs::read_to_string(dir.path().join("out/manifest.txt")).unwrap();
    assert!(manifest.lines().any(|l| l.starts_with("hop=fcon:split ")));
    let target = run(dir.path(), &["solve", "--problem", "fcon", "--restricted", "out/fcon-split.txt"]);
    assert_eq!(code(&target), source);
    let xmatch = code(&run(dir.path(), &["solve", "--problem", "xmatch", "out/xmatch.txt"]));
    assert_eq!(xmatch, source);
}

#[test]
fn single_hops_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k4.txt", K4);
    assert_eq!(code(&run(dir.path(), &["reduce", "--from", "3col", "--to", "lsh", "k4.txt", "lsh.txt"])), 0);
    assert_eq!(code(&run(dir.path(), &["solve", "--problem", "lsh", "lsh.txt"])), 1);
    assert_eq!(code(&run(dir.path(), &["reduce", "--from", "lsh", "--to", "lsi", "lsh.txt", "stream"])), 0);
    let count = fs::read_dir(dir.path().join("stream")).unwrap().count();
    assert!(count > 0);
    for entry in fs::read_dir(dir.path().join("stream")).unwrap() {
        let path = entry.unwrap().path();
        assert_eq!(code(&run(dir.path(), &["solve", "--problem", "lsi", path.to_str().unwrap()])), 1);
    }
}

#[test]
fn verify_reports_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    let chain = run(
        dir.path(),
        &["--seed", "1", "verify", "chain", "--trials", "2", "--n-max", "5", "--classes", "chordal,perfect", "--report", "r.txt"],
    );
    assert_eq!(code(&chain), 0);
    assert!(stdout(&chain).contains("failed=0"));
    assert!(fs::read_to_string(dir.path().join("r.txt")).unwrap().contains("verdict="));

    let hop = run(dir.path(), &["verify", "hop", "--hop", "xmatch", "--trials", "20"]);
    assert_eq!(code(&hop), 0);
    let mutated = run(
        dir.path(),
        &["verify", "hop", "--hop", "fcon:perfect", "--mutation", "drop-pendants", "--trials", "20", "--max-size", "1"],
    );
    assert_eq!(code(&mutated), 1);
    assert!(stdout(&mutated).contains("counterexample"));
}
