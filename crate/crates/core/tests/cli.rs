use std::process::{Command, Output};

use kostka_forge::algebra::json::scalar_from_json;
use kostka_forge::cli::render::{ExpansionJson, KostkaJson};
use kostka_forge::macdonald::{nonsym_cal_e, nonsym_e};
use kostka_forge::weights::{compositions, Composition};
use kostka_forge::{QtPoly, QtRational};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostka-forge"))
        .env_remove("KOSTKA_FORGE_THREADS")
        .args(args)
        .output()
        .expect("run kostka-forge")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn expansion(args: &[&str]) -> ExpansionJson {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn coeffs(x: &ExpansionJson) -> Vec<QtRational> {
    x.coeffs
        .iter()
        .map(|c| match c {
            kostka_forge::cli::render::CoeffJson::Qt(s) => scalar_from_json(s).unwrap(),
            other => panic!("unexpected coefficient {other:?}"),
        })
        .collect()
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("error JSON on stderr");
    assert!(v["error"]["message"].is_string());
    v["error"]["kind"].as_str().unwrap().to_string()
}

fn poly(terms: &[((u32, u32), i64)]) -> QtPoly {
    QtPoly::from_terms(terms.iter().map(|&((a, b), c)| ((a, b), c.into())))
}

#[test]
fn expand_augmented_partial_t_monomials() {
    let x = expansion(&["expand", "--n", "2", "--lambda", "1,0", "--form", "calE", "--basis", "tmon-aug", "--m", "1"]);
    assert_eq!(x.labels, vec![vec![1, 0], vec![0, 1]]);
    let one_minus_qt = QtRational::from_poly(poly(&[((0, 0), 1), ((1, 1), -1)]));
    let qt = QtRational::from_poly(poly(&[((1, 1), 1)]));
    assert_eq!(coeffs(&x), vec![one_minus_qt, qt]);
    assert_eq!(x.integral, vec![true, true]);
}

#[test]
fn expand_trivial_weight_is_one() {
    let x = expansion(&["expand", "--n", "2", "--lambda", "0,0", "--form", "E"]);
    assert_eq!(x.labels, vec![vec![0, 0]]);
    assert_eq!(coeffs(&x), vec![QtRational::from_i64(1)]);
}

#[test]
fn expand_e_in_monomials() {
    let x = expansion(&["expand", "--n", "2", "--lambda", "1,0", "--form", "E", "--basis", "monomial"]);
    assert_eq!(x.labels, vec![vec![1, 0], vec![0, 1]]);
    let ratio = QtRational::new(poly(&[((0, 0), 1), ((0, 1), -1)]), poly(&[((0, 0), 1), ((1, 1), -1)])).unwrap();
    assert_eq!(coeffs(&x), vec![QtRational::from_i64(1), ratio]);
    assert_eq!(x.integral, vec![true, false]);
}

#[test]
fn expand_latex() {
    let out = run(&["--format", "latex", "expand", "--n", "2", "--lambda", "1,0", "--form", "E"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), r"z_{1} + \frac{1 - t}{1 - q t} \, z_{2}");
}

#[test]
fn expand_json_round_trips() {
    for n in 1..=3 {
        for lambda in (0..=3).flat_map(|d| compositions(n, d)) {
            let parts: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
            let joined = parts.join(",");
            let ns = n.to_string();
            for (form, expected) in [("E", nonsym_e(&lambda).unwrap()), ("calE", nonsym_cal_e(&lambda).unwrap())] {
                let x = expansion(&["expand", "--n", &ns, "--lambda", &joined, "--form", form]);
                assert_eq!(x.to_polynomial().unwrap(), expected, "{form} {lambda:?}");
            }
        }
    }
}

#[test]
fn expand_writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let out = run(&["-o", path.to_str().unwrap(), "expand", "--n", "2", "--lambda", "0,1", "--form", "E"]);
    assert_eq!(out.status.code(), Some(0));
    let x: ExpansionJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(x.to_polynomial().unwrap(), nonsym_e(&Composition::new(vec![0, 1])).unwrap());
}

#[test]
fn expand_validation_errors_exit_2() {
    for args in [
        &["expand", "--n", "2", "--lambda", "1,0,1"][..],
        &["expand", "--n", "3", "--lambda", "0,1,0", "--form", "calJ"],
        &["expand", "--n", "2", "--lambda", "1,x"],
        &["expand", "--n", "2", "--lambda", "1,0", "--basis", "nonsense"],
        &["--parallel", "0", "expand", "--n", "2", "--lambda", "1,0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_kind(&out), "validation", "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn expand_below_length_is_not_in_span() {
    let out = run(&["expand", "--n", "2", "--lambda", "1,0", "--form", "calE", "--basis", "tmon-aug", "--m", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_kind(&out), "not_in_span");
}

fn kostka(args: &[&str]) -> KostkaJson {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn entries(k: &KostkaJson) -> Vec<Vec<QtRational>> {
    k.entries.iter().map(|row| row.iter().map(|c| scalar_from_json(c).unwrap()).collect()).collect()
}

#[test]
fn kostka_degree_two() {
    let k = kostka(&["kostka", "--degree", "2", "--n", "2"]);
    assert_eq!(k.labels, vec![vec![2, 0], vec![1, 1]]);
    let one = QtRational::from_i64(1);
    assert_eq!(entries(&k), vec![vec![one.clone(), QtRational::q()], vec![QtRational::t(), one]]);
    assert!(k.unit_diagonal);
    assert_eq!(k.dominance_violations, vec![(vec![1, 1], vec![2, 0])]);
}

#[test]
fn kostka_degree_one() {
    let k = kostka(&["kostka", "--degree", "1", "--n", "1"]);
    assert_eq!(entries(&k), vec![vec![QtRational::from_i64(1)]]);
}

#[test]
fn kostka_specializes_to_identity() {
    let k = kostka(&["kostka", "--degree", "3", "--n", "3", "--specialize", "q=0,t=0"]);
    assert_eq!(k.specialize.q, Some(0));
    let e = entries(&k);
    for (i, row) in e.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            assert_eq!(*c, QtRational::from_i64((i == j) as i64));
        }
    }
}

#[test]
fn kostka_csv() {
    let out = run(&["--format", "csv", "kostka", "--degree", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "lambda\\mu,(2),\"(1,1)\"\n(2),1,q\n\"(1,1)\",t,1\n");
}

#[test]
fn kostka_needs_enough_variables() {
    let out = run(&["kostka", "--degree", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "validation");
    let out = run(&["kostka", "--degree", "2", "--n", "2", "--specialize", "r=1"]);
    assert_eq!(out.status.code(), Some(2));
}

fn verify(args: &[&str]) -> (Option<i32>, Value) {
    let out = run(args);
    (out.status.code(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn verify_hecke_relations_pass() {
    let (code, report) = verify(&["verify", "--suite", "hecke-relations", "--n", "3", "--trials", "50", "--seed", "7"]);
    assert_eq!(code, Some(0));
    assert_eq!(report["passed"], Value::Bool(true));
    for p in report["properties"].as_array().unwrap() {
        assert_eq!(p["failed"], 0, "{p}");
        // random relations run once per trial; xi_triangular sweeps all weights instead
        if p["name"] != "xi_triangular" {
            assert!(p["checked"].as_u64().unwrap() >= 50, "{p}");
        }
    }
}

#[test]
fn verify_integrality_pass() {
    let (code, report) = verify(&["verify", "--suite", "integrality", "--n", "3", "--maxdeg", "5"]);
    assert_eq!(code, Some(0), "{report}");
}

#[test]
fn verify_jack_pass() {
    let (code, report) = verify(&["verify", "--suite", "jack", "--n", "3", "--maxdeg", "4"]);
    assert_eq!(code, Some(0), "{report}");
}

#[test]
fn verify_failure_exits_5() {
    // dominance triangularity of the Kostka matrix fails from degree 2 on
    let (code, report) = verify(&["verify", "--suite", "kostka", "--n", "2", "--maxdeg", "2"]);
    assert_eq!(code, Some(5));
    assert_eq!(report["passed"], Value::Bool(false));
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "validation");
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["verify", "--suite", "hecke-relations", "--n", "2", "--trials", "10", "--seed", "3"];
    let a = run(&args);
    let b = run(&["--parallel", "3"].iter().chain(&args).copied().collect::<Vec<_>>());
    assert_eq!(a.stdout, b.stdout);
}
