//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use glab_core::chars::{
    diagonal_evidence, frobenius_reciprocity_holds, gassmann_test, irreducible_characters,
    monomial_rigidity_verify, projection_formula_holds, quaternion_contrast,
    random_criteria_instances, triviality_screen,
};
use glab_core::elliptic::{igusa_criterion, CurveOverFqt, WeierstrassCurve};
use glab_core::exactalg::numtheory::{is_prime, pow_mod, prime_power};
use glab_core::exactalg::{FiniteField, FqField, PolyRing, Rational, Ring};
use glab_core::ffext::{
    bivariate, choose_parameters, quad_lfun, ray_class_order, rings, splitting_equivalent, Place,
};
use glab_core::groups::{catalog, subgroup_classes, PermGroup, Subgroup};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion1() -> Outcome {
    let f = FqField::prime(7).map_err(err)?;
    let e1 = WeierstrassCurve::from_i64(&f, 0, 1).map_err(err)?;
    let e2 = WeierstrassCurve::from_i64(&f, 3, 1).map_err(err)?;
    for e in [&e1, &e2] {
        let z = e.zeta(4).map_err(err)?;
        ensure(
            z.render_numerator() == "7*T^2 + 4*T + 1",
            format!("zeta {}", z.render_numerator()),
        )?;
    }
    ensure(
        e1.j_invariant().0 == 0 && e2.j_invariant().0 == 2,
        "j-invariants",
    )?;
    let (fx, fxy) = rings(&f, "x", "y");
    let k1 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-1, 0, 0)]);
    let k2 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-3, 0, 1), (-1, 0, 0)]);
    let s = splitting_equivalent(&fxy, &k1, &k2, 1).map_err(err)?;
    let x_minus_1 = fx.from_coeffs(vec![f.from_i64(-1), f.one()]);
    match &s.witness {
        Some((Place::Finite(p), _, _)) if !s.equivalent && *p == x_minus_1 => {
            Ok("zeta 7*T^2 + 4*T + 1 twice, j = 0 and 2, witness x - 1".into())
        }
        _ => Err(format!("split equivalence: {}", s.render(&fx))),
    }
}

fn nontrivial_pair(g: &Arc<PermGroup>, index: usize) -> Result<(Subgroup, Subgroup), String> {
    let subs: Vec<Subgroup> = subgroup_classes(g, g.order() / index)
        .into_iter()
        .filter(|s| s.index() == index)
        .collect();
    let hits = triviality_screen(g, &subs).map_err(err)?;
    let &(i, j) = hits.first().ok_or("no nontrivial triple")?;
    Ok((subs[i].clone(), subs[j].clone()))
}

fn criterion2() -> Outcome {
    let mut notes = Vec::new();
    for (p, order, index) in [(7u64, 168usize, 7usize), (11, 660, 11)] {
        let g = catalog::psl2(p);
        ensure(g.order() == order, format!("|PSL2({p})| = {}", g.order()))?;
        let (h, h2) = nontrivial_pair(&g, index)?;
        let r = gassmann_test(&g, &h, &h2).map_err(err)?;
        ensure(
            r.is_equivalent && !r.is_trivial,
            format!("PSL2({p}) report"),
        )?;
        notes.push(format!("PSL2({p}) index {index}"));
    }
    Ok(notes.join(", "))
}

fn criterion3() -> Outcome {
    let mut total = 0;
    for (name, g) in [
        ("S4", catalog::symmetric(4)),
        ("S5", catalog::symmetric(5)),
        ("A5", catalog::alternating(5)),
    ] {
        let subs = subgroup_classes(&g, g.order());
        let hits = triviality_screen(&g, &subs).map_err(err)?;
        ensure(hits.is_empty(), format!("{name} has a nontrivial triple"))?;
        total += subs.len();
    }
    let g = catalog::psl2(7);
    let subs: Vec<Subgroup> = subgroup_classes(&g, g.order())
        .into_iter()
        .filter(|s| s.index() <= 6)
        .collect();
    let hits = triviality_screen(&g, &subs).map_err(err)?;
    ensure(
        hits.is_empty(),
        "PSL2(7) index <= 6 has a nontrivial triple",
    )?;
    Ok(format!("{} subgroup classes screened", total + subs.len()))
}

fn criterion4() -> Outcome {
    let mut n = 0;
    for (name, count) in [
        ("S3", 20),
        ("D4", 20),
        ("Q8", 15),
        ("A4", 20),
        ("S4", 20),
        ("A5", 10),
    ] {
        let g = catalog::by_name(name).ok_or(name)?;
        let irr = irreducible_characters(&g).map_err(err)?;
        for (k, inst) in random_criteria_instances(&g, &irr, count, 7)
            .map_err(err)?
            .iter()
            .enumerate()
        {
            let r = &inst.report;
            let verdicts = [
                r.condition1,
                r.condition1_poles,
                r.condition2,
                r.condition2_poles,
                r.condition3,
            ];
            ensure(
                verdicts.iter().all(|&v| v == r.condition3),
                format!("{name} instance {k}: verdicts {verdicts:?}"),
            )?;
            ensure(
                (r.difference_norm == Rational::from_integer(0)) == r.condition3,
                format!("{name} instance {k}: norm"),
            )?;
            for (h, a) in [(&inst.h, &inst.alpha), (&inst.h2, &inst.alpha2)] {
                ensure(
                    frobenius_reciprocity_holds(h, a, &irr).map_err(err)?
                        && projection_formula_holds(h, a, &irr).map_err(err)?,
                    format!("{name} instance {k}: reciprocity"),
                )?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} instances coherent"))
}

fn criterion5() -> Outcome {
    let mut notes = Vec::new();
    for (name, gens, l) in [("S3", "(0 1)", 3), ("C3", "", 3), ("S3", "(0 1 2)", 3)] {
        let g = catalog::by_name(name).ok_or(name)?;
        let perms = if gens.is_empty() {
            vec![]
        } else {
            vec![glab_core::groups::Perm::parse(gens, g.degree()).map_err(err)?]
        };
        let h = Subgroup::generated(&g, perms).map_err(err)?;
        let r = monomial_rigidity_verify(&g, &h, l, 1_000_000).map_err(err)?;
        ensure(
            r.violations.is_empty(),
            format!("{name}: {:?}", r.violations),
        )?;
        let d = diagonal_evidence(&g, &h, l, 1_000_000).map_err(err)?;
        ensure(d.all_ok(), format!("{name}: diagonal evidence"))?;
        notes.push(format!("|G~|={} pairs={}", r.order, r.pairs_tested));
    }
    Ok(notes.join(", "))
}

fn criterion6() -> Outcome {
    let q = quaternion_contrast().map_err(err)?;
    ensure(
        q.induced_equal && q.irreducible && !q.conjugate,
        "quaternion contrast",
    )?;
    Ok("equal irreducible inductions from non-conjugate subgroups".into())
}

fn criterion7() -> Outcome {
    let f = FqField::prime(7).map_err(err)?;
    let (_fx, fxy) = rings(&f, "x", "y");
    let k1 = bivariate(&fxy, &[(1, 7, 0), (2, 3, 0), (2, 1, 0), (6, 0, 2)]);
    let k2 = bivariate(&fxy, &[(1, 7, 0), (1, 3, 0), (5, 1, 0), (4, 0, 2)]);
    let s = splitting_equivalent(&fxy, &k1, &k2, 3).map_err(err)?;
    ensure(s.equivalent, "splitting patterns differ")?;
    let c1 = WeierstrassCurve::from_i64(&f, 1, 0)
        .map_err(err)?
        .group_structure()
        .map_err(err)?;
    let c2 = WeierstrassCurve::from_i64(&f, 3, 0)
        .map_err(err)?
        .group_structure()
        .map_err(err)?;
    ensure(
        c1.to_string() == "Z/8" && c2.to_string() == "Z/4 + Z/2",
        format!("{c1} / {c2}"),
    )?;
    Ok(format!(
        "{} places agree, class groups {c1} and {c2}",
        s.compared
    ))
}

fn criterion8() -> Outcome {
    let f = FqField::prime(29).map_err(err)?;
    let ft = PolyRing::new(f.clone(), "t");
    let a = ft.gen();
    let b = ft.add(&ft.gen(), &ft.one());
    let c = CurveOverFqt::new(&f, a, b).map_err(err)?;
    let psi = c.division_poly(7).map_err(err)?;
    ensure(psi.deg() == 24, format!("deg psi_7 = {}", psi.deg()))?;
    let t = c.torsion_field_resultant(7).map_err(err)?;
    ensure(t.degree_y() == 48, format!("deg_y R = {}", t.degree_y()))?;
    let specs = c.verify_specializations(&t, 20, 29).map_err(err)?;
    ensure(
        specs.len() == 20 && specs.iter().all(|s| s.agrees),
        "specializations",
    )?;
    let i = igusa_criterion(29, 7).map_err(err)?;
    ensure(i.trivial, "Igusa subgroup not trivial")?;
    Ok("degree 24, resultant degree 48, 20/20 specializations".into())
}

fn criterion9() -> Outcome {
    for (p, q, order, h) in [
        (7, 7, 4, 12),
        (7, 49, 168, 1),
        (11, 11, 660, 12),
        (5, 25, 60, 3),
    ] {
        let c = choose_parameters(p, q, order, h);
        let l = c.l;
        ensure(
            l % 2 == 1
                && is_prime(l)
                && [p, q - 1, order, h].iter().all(|&n| n % l != 0)
                && c.t_step % (l - 1) == 0,
            format!("parameters for q={q}"),
        )?;
    }
    let mut checked = 0;
    for q in 2..=49u64 {
        let Some((p, _)) = prime_power(q) else {
            continue;
        };
        for l in [3u64, 5, 7, 11, 13] {
            if l == p {
                continue;
            }
            for t in (1..=48u64).filter(|t| t % (l - 1) == 0) {
                ensure(
                    pow_mod(q, t, l) == 1,
                    format!("{l} does not divide {q}^{t} - 1"),
                )?;
                let r = ray_class_order(1, q, t as u32, Some(l));
                ensure(
                    r.divides_residue_units == Some(true),
                    format!("ray order q={q} t={t} l={l}"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (q, l, T) triples"))
}

fn criterion10() -> Outcome {
    let mut curves = 0;
    for q in [5u64, 7, 11, 13, 25, 49] {
        let f = FqField::of_order(q).map_err(err)?;
        for a in f.elements() {
            for b in f.elements().step_by(3) {
                let Ok(e) = WeierstrassCurve::new(&f, a, b) else {
                    continue;
                };
                let n1 = e.point_count(1).map_err(err)? as i128;
                let tr = q as i128 + 1 - n1;
                ensure(tr * tr <= 4 * q as i128, format!("Hasse over F_{q}"))?;
                let z = e.zeta(4).map_err(err)?;
                ensure(
                    z.functional_equation_holds() && z.euler_product_agrees(),
                    format!("zeta over F_{q}"),
                )?;
                curves += 1;
            }
        }
    }
    let f7 = FqField::prime(7).map_err(err)?;
    let fx = PolyRing::new(f7.clone(), "x");
    for coeffs in [
        vec![1, 0, 0, 1],
        vec![1, 3, 0, 1],
        vec![2, 0, 1, 0, 0, 1],
        vec![3, 1, 0, 0, 0, 0, 1],
    ] {
        let g = fx.from_coeffs(coeffs.iter().map(|&c| f7.from_i64(c)).collect());
        let l = quad_lfun(&fx, &g, 2 * 2 + 2).map_err(err)?;
        ensure(l.euler_ok && l.counts_ok, "quadratic L-polynomial")?;
    }
    let names = [
        "C5", "V4", "S3", "D4", "D5", "Q8", "A4", "S4", "A5", "S5", "PSL2(7)",
    ];
    for name in names {
        let g = catalog::by_name(name).ok_or(name)?;
        let sizes: usize = g.classes().iter().map(|c| c.members.len()).sum();
        ensure(
            sizes == g.order() && g.classes().iter().all(|c| g.order() % c.members.len() == 0),
            format!("class equation for {name}"),
        )?;
        let irr = irreducible_characters(&g).map_err(err)?;
        for (i, x) in irr.iter().enumerate() {
            for (j, y) in irr.iter().enumerate() {
                let want = Rational::from_integer(i128::from(i == j));
                ensure(
                    x.inner_rational(y).map_err(err)? == want,
                    format!("orthonormality in {name}"),
                )?;
            }
        }
    }
    Ok(format!("{curves} curves, {} groups", names.len()))
}

fn main() {
    let criteria: [(fn() -> Outcome, Duration); 10] = [
        (criterion1, Duration::from_secs(1)),
        (criterion2, Duration::from_secs(60)),
        (criterion3, Duration::from_secs(120)),
        (criterion4, Duration::from_secs(600)),
        (criterion5, Duration::from_secs(300)),
        (criterion6, Duration::from_secs(1)),
        (criterion7, Duration::from_secs(120)),
        (criterion8, Duration::from_secs(60)),
        (criterion9, Duration::from_secs(1)),
        (criterion10, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (n, (check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took longer than {budget:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {status} ({:.2}s) {detail}",
            n + 1,
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
