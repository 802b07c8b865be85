//! The embedded scenario catalog and its runner.

use std::collections::BTreeMap;

use glab_core::groups::DEFAULT_ORDER_BOUND;

use crate::commands;
use crate::error::CliError;
use crate::report::Report;

const CATALOG: &str = include_str!("../catalog/scenarios.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub key: String,
    pub value: String,
    pub basis: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub id: String,
    pub kind: String,
    pub summary: String,
    pub inputs: BTreeMap<String, String>,
    pub expect: Vec<Expectation>,
}

impl Scenario {
    fn input(&self, key: &str) -> Result<&str, CliError> {
        self.inputs
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| CliError::Usage(format!("scenario {}: missing input '{key}'", self.id)))
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<T, CliError> {
        self.input(key)?
            .parse()
            .map_err(|_| CliError::Usage(format!("scenario {}: bad number for '{key}'", self.id)))
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<Scenario>, CliError> {
    let mut out: Vec<Scenario> = Vec::new();
    let mut bases: Vec<BTreeMap<String, String>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(id) = line
            .strip_prefix("[scenario.")
            .and_then(|s| s.strip_suffix(']'))
        {
            out.push(Scenario {
                id: id.to_string(),
                kind: String::new(),
                summary: String::new(),
                inputs: BTreeMap::new(),
                expect: Vec::new(),
            });
            bases.push(BTreeMap::new());
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("catalog line {}: expected key = value", n + 1))
        })?;
        let (k, v) = (k.trim().to_string(), v.trim().to_string());
        let s = out
            .last_mut()
            .ok_or_else(|| CliError::Usage(format!("catalog line {}: outside a section", n + 1)))?;
        if let Some(key) = k.strip_prefix("expect.") {
            s.expect.push(Expectation {
                key: key.to_string(),
                value: v,
                basis: None,
            });
        } else if let Some(key) = k.strip_prefix("basis.") {
            bases
                .last_mut()
                .expect("section")
                .insert(key.to_string(), v);
        } else if k == "kind" {
            s.kind = v;
        } else if k == "summary" {
            s.summary = v;
        } else {
            s.inputs.insert(k, v);
        }
    }
    for (s, b) in out.iter_mut().zip(bases) {
        for e in &mut s.expect {
            e.basis = b.get(&e.key).cloned();
        }
    }
    Ok(out)
}

pub fn catalog() -> Vec<Scenario> {
    parse_catalog(CATALOG).expect("embedded catalog parses")
}

pub fn find(id: &str) -> Result<Scenario, CliError> {
    catalog()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| CliError::UnknownScenario(id.to_string()))
}

pub fn list() -> Report {
    let mut r = Report::new();
    for s in catalog() {
        r.line(format!("{:<15} {:<20} {}", s.id, s.kind, s.summary));
        r.quiet_field(&s.id, &s.kind);
    }
    r
}

/// Copy `from` in `src` to `to` in `dst`.
fn take(dst: &mut Report, src: &Report, from: &str, to: &str) {
    if let Some(v) = src.get(from) {
        dst.quiet_field(to, v);
    }
}

fn observe(s: &Scenario) -> Result<Report, CliError> {
    let mut o = Report::new();
    match s.kind.as_str() {
        "curve-pair" => {
            let q = s.num("q")?;
            let bound = s.num("bound")?;
            for i in ["1", "2"] {
                let curve = s.input(&format!("curve{i}"))?;
                take(
                    &mut o,
                    &commands::zeta(q, curve, 4)?,
                    "numerator",
                    &format!("zeta{i}"),
                );
                take(
                    &mut o,
                    &commands::j_invariant(q, curve)?,
                    "j",
                    &format!("j{i}"),
                );
            }
            let e = commands::split_equiv(q, s.input("field1")?, s.input("field2")?, bound)?;
            take(&mut o, &e, "equivalent", "split_equivalent");
            take(&mut o, &e, "witness", "witness");
            take(&mut o, &e, "witness_patterns", "witness_patterns");
        }
        "character-contrast" => {
            let r = commands::quaternion()?;
            for k in ["induced_equal", "irreducible", "conjugate"] {
                take(&mut o, &r, k, k);
            }
        }
        "monomial-rigidity" => {
            let (g, h, l) = (s.input("group")?, s.input("subgroup")?, s.num("l")?);
            let r = commands::rigidity(g, h, l, DEFAULT_ORDER_BOUND)?;
            for k in ["order", "index", "violations"] {
                take(&mut o, &r, k, k);
            }
            let d = commands::diagonal(g, h, l, DEFAULT_ORDER_BOUND)?;
            take(&mut o, &d, "diagonal", "diagonal");
            take(&mut o, &d, "trace", "trace");
        }
        "gassmann-fields" => {
            let g = s.input("group")?;
            let r = commands::gassmann(g, None, None, Some(s.num("index")?))?;
            take(&mut o, &r, "order", "order");
            let pairs: usize = r
                .get("nontrivial_pairs")
                .unwrap_or("0")
                .parse()
                .unwrap_or(0);
            o.quiet_field("equivalent", pairs > 0);
            o.quiet_field("trivial", pairs == 0);
            let q = s.num("q")?;
            let e =
                commands::split_equiv(q, s.input("field1")?, s.input("field2")?, s.num("bound")?)?;
            take(&mut o, &e, "equivalent", "split_equivalent");
            for i in ["1", "2"] {
                let c = commands::clgroup(q, s.input(&format!("curve{i}"))?)?;
                take(&mut o, &c, "group", &format!("class_group{i}"));
            }
        }
        "split-pair" => {
            let e = commands::split_equiv(
                s.num("q")?,
                s.input("field1")?,
                s.input("field2")?,
                s.num("bound")?,
            )?;
            take(&mut o, &e, "equivalent", "split_equivalent");
        }
        "quadratic-pair" => {
            let r =
                commands::motivating(s.num("q")?, s.input("f1")?, s.input("f2")?, s.num("bound")?)?;
            for k in ["zetas_equal", "pole_orders", "distinct"] {
                take(&mut o, &r, k, k);
            }
        }
        "torsion" => {
            let (q, l) = (s.num("q")?, s.num("l")?);
            let curve = format!("{}, {}", s.input("a")?, s.input("b")?);
            let r = commands::torsion_resultant(q, &curve, l, s.num("checks")?, 0)?;
            for k in [
                "division_degree",
                "resultant_degree",
                "separable",
                "specializations",
            ] {
                take(&mut o, &r, k, k);
            }
            let i = commands::igusa(q, l)?;
            take(&mut o, &i, "trivial", "igusa_trivial");
            take(&mut o, &i, "projective_group", "projective_group");
        }
        "cft" => {
            let (p, q, h) = (s.num("p")?, s.num("q")?, s.num("h")?);
            let c = commands::cft_params(p, q, s.num("order")?, h, 1)?;
            take(&mut o, &c, "l", "l");
            take(&mut o, &c, "t_step", "t_step");
            let r = commands::cft_ray(h, q, s.num("t")?, Some(s.num("ray_l")?))?;
            take(&mut o, &r, "order", "ray_order");
            take(&mut o, &r, "divisible", "ray_divisible");
        }
        other => {
            return Err(CliError::Usage(format!(
                "scenario {}: unknown kind '{other}'",
                s.id
            )))
        }
    }
    Ok(o)
}

/// Run a catalog scenario by id.
pub fn run(id: &str) -> Result<Report, CliError> {
    run_scenario(&find(id)?)
}

/// Run a scenario and compare every expectation; `failure` records the
/// first mismatch.
pub fn run_scenario(s: &Scenario) -> Result<Report, CliError> {
    let observed = observe(s)?;
    let mut r = Report::new();
    r.line(format!("scenario {} ({})", s.id, s.kind));
    let mut passed = 0;
    for e in &s.expect {
        let got = observed.get(&e.key).unwrap_or("<missing>");
        let ok = got == e.value;
        let basis = e.basis.as_deref().unwrap_or("-");
        r.line(format!(
            "check {} [{basis}] expected={} observed={} {}",
            e.key,
            e.value,
            got,
            if ok { "ok" } else { "FAIL" }
        ));
        r.quiet_field(&e.key, got);
        if ok {
            passed += 1;
        } else if r.failure.is_none() {
            r.failure = Some(format!("{}: expected {} observed {}", e.key, e.value, got));
        }
    }
    r.field("passed", format!("{passed}/{}", s.expect.len()));
    Ok(r)
}
