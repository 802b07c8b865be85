use std::collections::BTreeMap;

use glab_cli::parse::{parse_mpoly, print_mpoly, MPoly, ParseContext};
use glab_cli::scenario::{catalog, run_scenario};
use glab_cli::{run, CliError};
use glab_core::exactalg::{FqElem, FqField};
use proptest::prelude::*;

fn glab(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("glab").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn every_scenario_passes() {
    for s in catalog() {
        let (code, out, err) = glab(&["scenario", "run", &s.id]);
        assert_eq!(code, 0, "{}: {out}{err}", s.id);
        assert!(!out.contains("FAIL"), "{}", s.id);
    }
}

#[test]
fn scenario_output_is_deterministic() {
    for id in ["example1", "psl27-fields", "torsion-29-7"] {
        let a = glab(&["scenario", "run", id]);
        let b = glab(&["scenario", "run", id]);
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn failed_expectation_reports_first_mismatch() {
    let mut s = catalog().into_iter().find(|s| s.id == "example1").unwrap();
    s.expect.iter_mut().find(|e| e.key == "j2").unwrap().value = "5".into();
    let r = run_scenario(&s).unwrap();
    assert_eq!(r.failure.as_deref(), Some("j2: expected 5 observed 2"));
    assert_eq!(CliError::Assertion(String::new()).exit_code(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(glab(&["scenario", "run", "missing"]).0, 2);
    assert_eq!(glab(&["zeta", "--curve", "0, 0", "--q", "7"]).0, 2);
    assert_eq!(glab(&["split", "y^2 - x^3 - 1", "--place", "x -* 1"]).0, 2);
    assert_eq!(glab(&["no-such-verb"]).0, 2);
    let (code, out, _) = glab(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("scenario"));
}

#[test]
fn unknown_generator_over_prime_field() {
    let (code, _, err) = glab(&["split", "y^2 - a^3*x", "--place", "x", "--q", "7"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown generator 'a' at 6"), "{err}");
}

#[test]
fn verbs_report_expected_values() {
    let (_, out, _) = glab(&["zeta", "--curve", "E/F_7: a=3, b=1", "--q", "7"]);
    assert!(out.contains("numerator=7*T^2 + 4*T + 1"));
    let (_, out, _) = glab(&["split", "y^2 - x^3 - 1", "--place", "x - 1"]);
    assert!(out.contains("pattern={1,1}"), "{out}");
    let (_, out, _) = glab(&["split", "y^2 - x^3 - 3*x - 1", "--place", "x - 1"]);
    assert!(out.contains("pattern={2}"), "{out}");
    let (_, out, _) = glab(&["lfun", "--quad", "x^3 + 1", "--q", "7"]);
    assert!(out.contains("numerator=7*T^2 + 4*T + 1"), "{out}");
    let (_, out, _) = glab(&[
        "cft", "params", "--p", "7", "--q", "49", "--order", "168", "--h", "1",
    ]);
    assert!(out.contains("l=5"), "{out}");
    let (_, out, _) = glab(&["clgroup", "--curve", "3, 0"]);
    assert!(out.contains("group=Z/4 + Z/2"), "{out}");
    let (_, out, _) = glab(&["igusa", "--q", "29", "--l", "7"]);
    assert!(out.contains("trivial=true"), "{out}");
    let (_, out, _) = glab(&["divpoly", "--curve", "t, t + 1", "--q", "29", "--l", "7"]);
    assert!(out.contains("degree=24"), "{out}");
    let (_, out, _) = glab(&["gassmann", "--group", "PSL2(7)", "--index", "7"]);
    assert!(out.contains("nontrivial_pairs=1"), "{out}");
    let (code, out, _) = glab(&["criteria", "--group", "S4", "--count", "6", "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("instances=6"), "{out}");
}

#[test]
fn json_output_is_flat() {
    let (code, out, _) = glab(&[
        "--json",
        "split-equiv",
        "y^2 - x^3 - 1",
        "y^2 - x^3 - 3*x - 1",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["witness"], "x - 1");
    assert!(v
        .as_object()
        .unwrap()
        .values()
        .all(|x| !x.is_object() && !x.is_array()));
}

#[test]
fn polynomial_arguments_may_be_files() {
    let dir = std::env::temp_dir().join(format!("glab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("f.poly");
    std::fs::write(&f, "y^2 - x^3 - 1\n").unwrap();
    let (code, out, _) = glab(&["split", f.to_str().unwrap(), "--place", "x - 1"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 0);
    assert!(out.contains("pattern={1,1}"));
}

fn mpoly() -> impl Strategy<Value = (u64, BTreeMap<Vec<u32>, u32>)> {
    (
        prop::sample::select(vec![2u64, 3, 7, 11, 49]),
        prop::collection::btree_map(prop::collection::vec(0u32..6, 2), 1u32..49, 0..6),
    )
}

proptest! {
    #[test]
    fn print_parse_round_trip((q, terms) in mpoly()) {
        let field = FqField::of_order(q).unwrap();
        let ctx = ParseContext::new(&field, &["y", "x"]);
        let p = MPoly {
            terms: terms
                .into_iter()
                .map(|(e, c)| (e, FqElem(c % q as u32)))
                .filter(|(_, c)| c.0 != 0)
                .collect(),
        };
        let text = print_mpoly(&p, &ctx);
        let back = parse_mpoly(&text, &ctx).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(print_mpoly(&back, &ctx), text);
    }
}
