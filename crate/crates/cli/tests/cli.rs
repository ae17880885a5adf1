use std::path::PathBuf;
use std::process::{Command, Output};

use pcelim::elimination::{beta_generators, is_tfsa};
use pcelim::factorization::ElimPlan;
use pcelim::group::extend_alphabet;
use pcelim::lie::lie_basis;
use pcelim::series::{mobius_polynomial, trace_counts, witt_dimensions};
use pcelim::IndependenceAlphabet;

const TRIANGLE_GAP: &str = "letters a b c\nedge a b\n";
const PATH3: &str = "letters a b c\nedge a b\nedge b c\n";
const PATH4: &str = "letters a b c d\nedge a b\nedge b c\nedge c d\n";
const EDGE: &str = "letters a b\nedge a b\n";
const PLAN: &str = "c;acc;b;d;ac;a";

fn alphabet_file(tag: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("pcelim-cli-{}-{tag}.alpha", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn pcelim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcelim")).args(args).output().unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = pcelim(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tfsa_reports_witness_path() {
    let f = alphabet_file("tfsa", TRIANGLE_GAP);
    let out = run_ok(&["tfsa", "--alphabet", f.to_str().unwrap(), "--subset", "c"]);
    assert_eq!(out, "NOT TFSA\nwitness: a - c - b\n");

    let f = alphabet_file("tfsa-path", PATH3);
    let out = run_ok(&["tfsa", "--alphabet", f.to_str().unwrap(), "--subset", "c", "--format", "machine"]);
    assert_eq!(out, "tfsa\ttrue\n");
}

#[test]
fn tfsa_machine_format_matches_library() {
    let f = alphabet_file("tfsa-machine", TRIANGLE_GAP);
    let out = run_ok(&["tfsa", "--alphabet", f.to_str().unwrap(), "--subset", "c", "--format", "machine"]);
    let alpha = IndependenceAlphabet::parse(TRIANGLE_GAP).unwrap();
    let v = is_tfsa(&alpha, &alpha.parse_letter_set("c").unwrap());
    let path: Vec<&str> = v.witness.unwrap().iter().map(|&l| alpha.name(l)).collect();
    assert_eq!(out, format!("tfsa\tfalse\nwitness\t{}\n", path.join("\t")));
}

#[test]
fn beta_matches_library() {
    let f = alphabet_file("beta", PATH3);
    let out = run_ok(&["beta", "--alphabet", f.to_str().unwrap(), "--subset", "c", "--maxlen", "5", "--format", "machine"]);
    let alpha = IndependenceAlphabet::parse(PATH3).unwrap();
    let beta = beta_generators(&alpha, &alpha.parse_letter_set("c").unwrap(), 5).unwrap();
    let gens: Vec<String> = out
        .lines()
        .filter_map(|l| l.strip_prefix("generator\t"))
        .map(str::to_string)
        .collect();
    let expected: Vec<String> = beta.generators().iter().map(|g| g.to_string()).collect();
    assert_eq!(gens, expected);
    assert_eq!(gens, ["a", "b", "ac", "acc", "accc", "acccc"]);
    let edges = out.lines().filter(|l| l.starts_with("edge\t")).count();
    assert_eq!(edges, beta.relation().len());
}

#[test]
fn mobius_and_counts() {
    let f = alphabet_file("mobius", PATH4);
    let p = f.to_str().unwrap();
    assert_eq!(run_ok(&["mobius", "--alphabet", p]), "1 - a - b - c - d + ab + bc + cd\n");

    let alpha = IndependenceAlphabet::parse(PATH4).unwrap();
    assert_eq!(
        run_ok(&["mobius", "--alphabet", p, "--format", "machine"]).lines().count(),
        mobius_polynomial(&alpha).len()
    );

    let out = run_ok(&["counts", "--alphabet", p, "--maxlen", "5", "--format", "machine"]);
    let counts = trace_counts(&alpha, 5);
    let dims = witt_dimensions(&alpha, 5).unwrap();
    let expected: String = (1..=5)
        .map(|m| format!("{m}\t{}\t{}\n", counts[m], dims[m - 1]))
        .collect();
    assert_eq!(out, expected);
}

#[test]
fn factorize_decomposes_word() {
    let f = alphabet_file("factorize", PATH4);
    let out = run_ok(&["factorize", "--alphabet", f.to_str().unwrap(), "--plan", PLAN, "--word", "cab"]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("c*.(acc)*.b*.d*.(ac)*.a*."), "{first}");
    assert_eq!(out.lines().filter(|l| l.starts_with("step ")).count(), 6);
    assert!(out.lines().all(|l| !l.starts_with("step ") || l.ends_with(" TFSA")));
    assert!(out.contains("bca = c [c*] . b [b*] . a [a*]"), "{out}");
}

#[test]
fn lie_basis_profile() {
    let f = alphabet_file("lie", PATH4);
    let out = run_ok(&["lie-basis", "--alphabet", f.to_str().unwrap(), "--plan", PLAN, "--degree", "3"]);
    let degrees: Vec<usize> = out
        .lines()
        .map(|l| l.split(' ').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(degrees.len(), 15);
    let profile: Vec<usize> = (1..=3).map(|d| degrees.iter().filter(|&&x| x == d).count()).collect();
    assert_eq!(profile, [4, 3, 8]);

    let alpha = IndependenceAlphabet::parse(PATH4).unwrap();
    let plan = ElimPlan::parse(&alpha, PLAN, 3).unwrap();
    let expected: String = lie_basis(&plan, 3)
        .unwrap()
        .iter()
        .map(|e| format!("{} {} {}\n", e.degree(), e.tree, e.polynomial))
        .collect();
    assert_eq!(out, expected);
}

#[test]
fn group_reduce() {
    let f = alphabet_file("group", EDGE);
    let p = f.to_str().unwrap();
    assert_eq!(run_ok(&["group-reduce", "--alphabet", p, "--word", "a b a'"]), "b\n");
    assert_eq!(run_ok(&["group-reduce", "--alphabet", p, "--word", "a b a' b'"]), "1\n");

    let alpha = IndependenceAlphabet::parse(TRIANGLE_GAP).unwrap();
    let dbl = extend_alphabet(&alpha);
    let f = alphabet_file("group-c", TRIANGLE_GAP);
    let out = run_ok(&["group-reduce", "--alphabet", f.to_str().unwrap(), "--word", "c' a c c' b"]);
    assert_eq!(out, format!("{}\n", dbl.parse("c' a c c' b").unwrap()));
}

#[test]
fn output_is_deterministic() {
    let f = alphabet_file("det", PATH4);
    let args = ["lie-basis", "--alphabet", f.to_str().unwrap(), "--plan", PLAN, "--degree", "4", "--format", "machine"];
    assert_eq!(run_ok(&args), run_ok(&args));
}

#[test]
fn exit_codes() {
    let f = alphabet_file("exit", TRIANGLE_GAP);
    let p = f.to_str().unwrap();
    assert_eq!(pcelim(&["tfsa", "--alphabet", p, "--subset", "z"]).status.code(), Some(1));
    assert_eq!(pcelim(&["tfsa", "--alphabet", "/nonexistent/x.alpha", "--subset", "c"]).status.code(), Some(1));
    assert_eq!(pcelim(&["factorize", "--alphabet", p, "--plan", "c"]).status.code(), Some(1));
    assert_eq!(pcelim(&["tfsa", "--alphabet", p, "--bogus"]).status.code(), Some(2));
    assert_eq!(pcelim(&["beta", "--alphabet", p, "--subset", "c", "--maxlen", "0"]).status.code(), Some(2));
    assert_eq!(pcelim(&["frobnicate"]).status.code(), Some(2));

    let bad = alphabet_file("bad", "letters a a\n");
    let out = pcelim(&["mobius", "--alphabet", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate letter"));
}

#[test]
fn verify_single_criterion() {
    let out = run_ok(&["verify", "--criterion", "1", "--format", "machine"]);
    assert!(out.starts_with("1\tpass\tcode examples\t"), "{out}");
    assert_eq!(pcelim(&["verify", "--criterion", "11"]).status.code(), Some(2));
}
