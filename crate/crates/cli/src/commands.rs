//! The verbs behind the command line, each producing a [`Report`].

use std::sync::Arc;

use glab_core::chars::{
    diagonal_evidence, gassmann_test, irreducible_characters, monomial_rigidity_verify,
    quaternion_contrast, random_criteria_instances, triviality_screen,
};
use glab_core::elliptic::{igusa_criterion, CurveOverFqt, WeierstrassCurve};
use glab_core::exactalg::{FqElem, FqField, Integers, Poly, PolyRing, Ring};
use glab_core::ffext::{
    choose_parameters, find_split_prime, motivating_example_check, quad_lfun, ray_class_order,
    rings, splitting_equivalent, Fx, Place, Splitter,
};
use glab_core::groups::{catalog, subgroup_classes, Perm, PermGroup, Subgroup};

use crate::error::CliError;
use crate::parse::{
    parse_bivariate, parse_mpoly, parse_univariate, print_bivariate, print_univariate,
    to_univariate, ParseContext,
};
use crate::report::Report;

pub fn field(q: u64) -> Result<FqField, CliError> {
    Ok(FqField::of_order(q)?)
}

/// Literal text, or the contents of a file when the argument names one.
pub fn text_arg(arg: &str) -> Result<String, CliError> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

/// `a, b`, or `E/F_q: a=<..>, b=<..>`, as polynomials in `vars`.
fn curve_parts(
    text: &str,
    field: &FqField,
    var: Option<&str>,
) -> Result<(Poly<FqElem>, Poly<FqElem>), CliError> {
    let body = match text.split_once(':') {
        Some((head, rest)) if head.trim_start().starts_with("E/") => rest,
        _ => text,
    };
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "expected `a, b` in curve '{text}'"
        )));
    }
    let strip = |s: &str, key: &str| -> String {
        let s = s.trim();
        s.strip_prefix(key)
            .map(|r| r.trim_start().trim_start_matches('=').to_string())
            .unwrap_or_else(|| s.to_string())
    };
    let ring = PolyRing::new(field.clone(), var.unwrap_or("t"));
    let ctx = ParseContext::new(field, &var.map_or(vec![], |v| vec![v]));
    let parse = |s: String| -> Result<Poly<FqElem>, CliError> {
        let m = parse_mpoly(&s, &ctx)?;
        if var.is_none() {
            let c = m.terms.values().next().copied().unwrap_or(field.zero());
            return Ok(ring.constant(c));
        }
        Ok(to_univariate(&m, &ring))
    };
    Ok((parse(strip(parts[0], "a"))?, parse(strip(parts[1], "b"))?))
}

pub fn parse_curve(text: &str, field: &FqField) -> Result<WeierstrassCurve, CliError> {
    let (a, b) = curve_parts(text, field, None)?;
    let c = |p: &Poly<FqElem>| p.coeff(0).copied().unwrap_or(field.zero());
    Ok(WeierstrassCurve::new(field, c(&a), c(&b))?)
}

pub fn parse_curve_t(text: &str, field: &FqField) -> Result<CurveOverFqt, CliError> {
    let (a, b) = curve_parts(text, field, Some("t"))?;
    Ok(CurveOverFqt::new(field, a, b)?)
}

pub fn group(name: &str) -> Result<Arc<PermGroup>, CliError> {
    catalog::by_name(name).ok_or_else(|| CliError::Usage(format!("unknown group '{name}'")))
}

/// Subgroup generated by `;`-separated permutations in cycle notation.
pub fn subgroup(g: &Arc<PermGroup>, gens: &str) -> Result<Subgroup, CliError> {
    let perms = gens
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Perm::parse(s, g.degree()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subgroup::generated(g, perms)?)
}

pub fn place_text(place: &Place, fx: &Fx) -> String {
    match place {
        Place::Finite(p) => print_univariate(p, fx),
        Place::Infinity => "inf".to_string(),
    }
}

fn degrees_text(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn t_poly(c: &[i128]) -> String {
    let zr = PolyRing::new(Integers, "T");
    zr.render(&zr.from_coeffs(c.to_vec()))
}

pub fn split(q: u64, poly: &str, place: &str) -> Result<Report, CliError> {
    let f = field(q)?;
    let (fx, fxy) = rings(&f, "x", "y");
    let poly = parse_bivariate(&text_arg(poly)?, &fxy)?;
    let place = if place.trim() == "inf" {
        Place::Infinity
    } else {
        Place::finite(&fx, parse_univariate(place, &fx)?)?
    };
    let s = Splitter::new(&fxy, &poly)?;
    let pat = s.pattern(&place)?;
    let mut r = Report::new();
    r.field("poly", print_bivariate(&poly, &fxy))
        .field("place", place_text(&place, &fx))
        .field("degree", place.degree())
        .field("pattern", degrees_text(&pat.degrees))
        .field("ramified", pat.ramified);
    Ok(r)
}

pub fn split_equiv(q: u64, f1: &str, f2: &str, bound: usize) -> Result<Report, CliError> {
    let f = field(q)?;
    let (fx, fxy) = rings(&f, "x", "y");
    let a = parse_bivariate(&text_arg(f1)?, &fxy)?;
    let b = parse_bivariate(&text_arg(f2)?, &fxy)?;
    let e = splitting_equivalent(&fxy, &a, &b, bound)?;
    let mut r = Report::new();
    r.field("equivalent", e.equivalent);
    if let Some((p, da, db)) = &e.witness {
        r.field("witness", place_text(p, &fx)).field(
            "witness_patterns",
            format!("{} vs {}", degrees_text(da), degrees_text(db)),
        );
    }
    let ram: Vec<String> = e.ramified.iter().map(|p| place_text(p, &fx)).collect();
    r.field("compared", e.compared)
        .field("ramified", format!("[{}]", ram.join(", ")))
        .field("skipped", "inf");
    Ok(r)
}

pub fn split_prime(q: u64, poly: &str, t: usize) -> Result<Report, CliError> {
    let f = field(q)?;
    let (fx, fxy) = rings(&f, "x", "y");
    let poly = parse_bivariate(&text_arg(poly)?, &fxy)?;
    let p = find_split_prime(&fxy, &poly, t)?;
    let mut r = Report::new();
    r.field("place", place_text(&p, &fx))
        .field("degree", p.degree());
    Ok(r)
}

pub fn zeta(q: u64, curve: &str, bound: usize) -> Result<Report, CliError> {
    let f = field(q)?;
    let e = parse_curve(curve, &f)?;
    let z = e.zeta(bound)?;
    let mut r = Report::new();
    r.field("curve", e.render())
        .field("numerator", z.render_numerator())
        .field("class_number", z.class_number())
        .field("functional_equation", z.functional_equation_holds())
        .field("euler_product", z.euler_product_agrees());
    let counts: Vec<String> = z.place_counts.iter().map(|b| b.to_string()).collect();
    r.field("places", format!("[{}]", counts.join(", ")));
    Ok(r)
}

pub fn lfun(q: u64, quad: &str, bound: usize) -> Result<Report, CliError> {
    let f = field(q)?;
    let fx = PolyRing::new(f, "x");
    let poly = parse_univariate(&text_arg(quad)?, &fx)?;
    let l = quad_lfun(&fx, &poly, bound)?;
    if !l.euler_ok || !l.counts_ok {
        return Err(CliError::Invariant(format!(
            "L-polynomial checks failed: euler={} counts={}",
            l.euler_ok, l.counts_ok
        )));
    }
    let mut r = Report::new();
    r.field("f", print_univariate(&poly, &fx))
        .field("genus", l.genus)
        .field("numerator", l.render())
        .field("finite_euler", t_poly(&l.finite_euler))
        .field("euler_ok", l.euler_ok)
        .field("counts_ok", l.counts_ok);
    Ok(r)
}

pub fn motivating(q: u64, f1: &str, f2: &str, bound: usize) -> Result<Report, CliError> {
    let f = field(q)?;
    let fx = PolyRing::new(f, "x");
    let a = parse_univariate(f1, &fx)?;
    let b = parse_univariate(f2, &fx)?;
    let m = motivating_example_check(&fx, &a, &b, bound)?;
    let mut r = Report::new();
    r.field("zeta_k", t_poly(&m.zeta_k))
        .field("zeta_k2", t_poly(&m.zeta_k2))
        .field("zetas_equal", m.zetas_equal)
        .field("l_k", t_poly(&m.l_k))
        .field("l_k2", t_poly(&m.l_k2))
        .field("pole_orders", format!("{}, {}", m.pole_k, m.pole_k2))
        .field(
            "character_poles",
            format!("{}, {}", m.character_poles.0, m.character_poles.1),
        )
        .field("distinct", m.distinct);
    Ok(r)
}

pub fn cft_params(p: u64, q: u64, order: u64, h: u64, min_t: u64) -> Result<Report, CliError> {
    let c = choose_parameters(p, q, order, h);
    let mut r = Report::new();
    r.field("l", c.l)
        .field("t_step", c.t_step)
        .field("t", c.t_for(min_t));
    Ok(r)
}

pub fn cft_ray(h: u64, q: u64, t: u32, l: Option<u64>) -> Result<Report, CliError> {
    let o = ray_class_order(h, q, t, l);
    let show = |v: Option<u128>| v.map_or("overflow".to_string(), |v| v.to_string());
    let mut r = Report::new();
    r.field("order", show(o.order))
        .field("residue_units", show(o.residue_units));
    if let (Some(d), Some(u)) = (o.divisible, o.divides_residue_units) {
        r.field("divisible", d).field("divides_residue_units", u);
    }
    Ok(r)
}

pub fn count(q: u64, curve: &str, upto: u32) -> Result<Report, CliError> {
    let f = field(q)?;
    let e = parse_curve(curve, &f)?;
    let mut r = Report::new();
    r.field("curve", e.render());
    for i in 1..=upto {
        r.field(&format!("N{i}"), e.point_count(i)?);
    }
    Ok(r)
}

pub fn clgroup(q: u64, curve: &str) -> Result<Report, CliError> {
    let f = field(q)?;
    let e = parse_curve(curve, &f)?;
    let s = e.group_structure()?;
    let mut r = Report::new();
    r.field("curve", e.render())
        .field("order", s.order())
        .field("group", s)
        .field("d1", s.d1)
        .field("d2", s.d2);
    Ok(r)
}

pub fn j_invariant(q: u64, curve: &str) -> Result<Report, CliError> {
    let f = field(q)?;
    let e = parse_curve(curve, &f)?;
    let mut r = Report::new();
    r.field("curve", e.render())
        .field("j", f.render(&e.j_invariant()));
    Ok(r)
}

pub fn divpoly(q: u64, curve: &str, l: u64) -> Result<Report, CliError> {
    let f = field(q)?;
    let mut r = Report::new();
    if curve.contains('t') && !curve.contains("E/F_q") {
        let c = parse_curve_t(curve, &f)?;
        let psi = c.division_poly(l)?;
        let ftx = PolyRing::new(c.ring().clone(), "x");
        r.field("curve", c.render()).field("degree", psi.deg());
        r.quiet_field("psi", ftx.render(&psi));
    } else {
        let e = parse_curve(curve, &f)?;
        let psi = e.division_poly(l)?;
        let fx = PolyRing::new(f.clone(), "x");
        r.field("curve", e.render())
            .field("degree", psi.deg())
            .field("psi", print_univariate(&psi, &fx));
    }
    Ok(r)
}

pub fn torsion_resultant(
    q: u64,
    curve: &str,
    l: u64,
    checks: usize,
    seed: u64,
) -> Result<Report, CliError> {
    let f = field(q)?;
    let c = parse_curve_t(curve, &f)?;
    let t = c.torsion_field_resultant(l)?;
    let specs = c.verify_specializations(&t, checks, seed)?;
    let agree = specs.iter().filter(|s| s.agrees).count();
    let mut r = Report::new();
    r.field("curve", c.render())
        .field("division_degree", t.division_degree)
        .field("resultant_degree", t.degree_y())
        .field("separable", t.is_separable())
        .field("specializations", format!("{agree}/{}", specs.len()));
    if agree != specs.len() {
        return Err(CliError::Invariant(
            "specialized resultants disagree".into(),
        ));
    }
    Ok(r)
}

pub fn igusa(q: u64, l: u64) -> Result<Report, CliError> {
    let i = igusa_criterion(q, l)?;
    let h: Vec<String> = i.h.iter().map(|v| v.to_string()).collect();
    let mut r = Report::new();
    r.field("h", format!("{{{}}}", h.join(", ")))
        .field("h_order", i.h.len())
        .field("trivial", i.trivial)
        .field("geometric_group", &i.geometric_group)
        .field("projective_group", &i.projective_group);
    Ok(r)
}

/// Compare two subgroups, or screen all subgroup classes of index `index`.
pub fn gassmann(
    name: &str,
    h: Option<&str>,
    h2: Option<&str>,
    index: Option<usize>,
) -> Result<Report, CliError> {
    let g = group(name)?;
    let mut r = Report::new();
    r.field("group", name).field("order", g.order());
    match (h, h2, index) {
        (Some(a), Some(b), _) => {
            let rep = gassmann_test(&g, &subgroup(&g, a)?, &subgroup(&g, b)?)?;
            r.block(&rep.to_string());
            r.quiet_field("equivalent", rep.is_equivalent)
                .quiet_field("trivial", rep.is_trivial);
        }
        (None, None, Some(n)) => {
            if n == 0 || g.order() % n != 0 {
                return Err(CliError::Usage(format!("{n} does not divide |G|")));
            }
            let subs: Vec<Subgroup> = subgroup_classes(&g, g.order() / n)
                .into_iter()
                .filter(|s| s.index() == n)
                .collect();
            let hits = triviality_screen(&g, &subs)?;
            r.field("classes", subs.len())
                .field("nontrivial_pairs", hits.len());
            for (i, j) in hits {
                let gens = |s: &Subgroup| -> String {
                    let v: Vec<String> = s.group().gens().iter().map(|p| p.to_string()).collect();
                    v.join("; ")
                };
                r.line(format!("pair {} | {}", gens(&subs[i]), gens(&subs[j])));
            }
        }
        _ => return Err(CliError::Usage("give --h and --h2, or --index".into())),
    }
    Ok(r)
}

pub fn criteria(name: &str, count: usize, seed: u64) -> Result<Report, CliError> {
    let g = group(name)?;
    let irr = irreducible_characters(&g)?;
    let runs = random_criteria_instances(&g, &irr, count, seed)?;
    let mut r = Report::new();
    r.field("group", name).field("instances", runs.len());
    let equal = runs.iter().filter(|x| x.report.verdict()).count();
    for (k, x) in runs.iter().enumerate() {
        r.line(format!(
            "instance {k} mode={} |H|={} |H'|={} condition1={} condition2={} condition3={}",
            x.mode,
            x.h.order(),
            x.h2.order(),
            x.report.condition1,
            x.report.condition2,
            x.report.condition3
        ));
    }
    let coherent = runs.iter().all(|x| {
        let c = &x.report;
        [
            c.condition1,
            c.condition1_poles,
            c.condition2,
            c.condition2_poles,
        ]
        .iter()
        .all(|&v| v == c.condition3)
    });
    r.field("equal_inductions", equal)
        .field("coherent", coherent);
    if !coherent {
        return Err(CliError::Invariant("criteria verdicts disagree".into()));
    }
    Ok(r)
}

pub fn rigidity(name: &str, h: &str, l: u64, bound: usize) -> Result<Report, CliError> {
    let g = group(name)?;
    let h = subgroup(&g, h)?;
    let rep = monomial_rigidity_verify(&g, &h, l, bound)?;
    let mut r = Report::new();
    r.field("order", rep.order)
        .field("index", rep.index)
        .field("subgroups_tested", rep.subgroups_tested)
        .field("pairs_tested", rep.pairs_tested)
        .field("matches", rep.matches)
        .field("violations", rep.violations.len());
    for v in &rep.violations {
        r.line(format!("violation {v}"));
    }
    Ok(r)
}

pub fn diagonal(name: &str, h: &str, l: u64, bound: usize) -> Result<Report, CliError> {
    let g = group(name)?;
    let h = subgroup(&g, h)?;
    let d = diagonal_evidence(&g, &h, l, bound)?;
    let mut r = Report::new();
    r.block(&d.to_string());
    r.quiet_field("diagonal", d.all_ok())
        .quiet_field("trace", &d.trace);
    Ok(r)
}

pub fn quaternion() -> Result<Report, CliError> {
    let q = quaternion_contrast()?;
    let mut r = Report::new();
    r.line(format!("Ind chi_a = {}", q.induced_a.render()))
        .line(format!("Ind chi_b = {}", q.induced_b.render()))
        .field("induced_equal", q.induced_equal)
        .field("irreducible", q.irreducible)
        .field("conjugate", q.conjugate);
    Ok(r)
}
