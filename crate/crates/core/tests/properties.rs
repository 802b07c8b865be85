use std::collections::BTreeMap;
use std::sync::Arc;

use glab_core::chars::{
    frobenius_reciprocity_holds, irreducible_characters, projection_formula_holds,
    trace_inequality, ClassFunction,
};
use glab_core::elliptic::WeierstrassCurve;
use glab_core::exactalg::{
    factor, is_irreducible, resultant, CycloNum, FqElem, FqField, Integers, Poly, PolyRing, Ring,
};
use glab_core::groups::{catalog, subgroup_classes, PermGroup, Subgroup};
use proptest::prelude::*;

fn fq_ring(q: u64) -> PolyRing<FqField> {
    PolyRing::new(FqField::of_order(q).unwrap(), "x")
}

fn poly_from(ring: &PolyRing<FqField>, idx: &[u32]) -> Poly<FqElem> {
    let q = ring.base().q() as u32;
    ring.from_coeffs(idx.iter().map(|&c| FqElem(c % q)).collect())
}

fn factor_multiset(ring: &PolyRing<FqField>, f: &Poly<FqElem>) -> BTreeMap<Vec<u32>, u32> {
    let mut m = BTreeMap::new();
    for (p, e) in factor(ring, f).factors {
        *m.entry(p.coeffs().iter().map(|c| c.0).collect())
            .or_insert(0) += e;
    }
    m
}

fn nonzero_poly() -> impl Strategy<Value = (u64, Vec<u32>, Vec<u32>)> {
    (
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 9, 25, 49]),
        prop::collection::vec(0u32..49, 1..9),
        prop::collection::vec(0u32..49, 1..9),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_is_multiplicative((q, a, b) in nonzero_poly()) {
        let r = fq_ring(q);
        let f = poly_from(&r, &a);
        let g = poly_from(&r, &b);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = r.mul(&f, &g);
        let mut expected = factor_multiset(&r, &f);
        for (k, e) in factor_multiset(&r, &g) {
            *expected.entry(k).or_insert(0) += e;
        }
        prop_assert_eq!(factor_multiset(&r, &fg), expected);
    }

    #[test]
    fn factors_are_irreducible_and_multiply_back((q, a, _b) in nonzero_poly()) {
        let r = fq_ring(q);
        let f = poly_from(&r, &a);
        prop_assume!(!f.is_zero());
        let fac = factor(&r, &f);
        let mut prod = r.constant(fac.unit);
        for (p, e) in &fac.factors {
            prop_assert!(is_irreducible(&r, p));
            prop_assert!(r.is_monic(p));
            for _ in 0..*e {
                prod = r.mul(&prod, p);
            }
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor((q, a, b) in nonzero_poly()) {
        let r = fq_ring(q);
        let f = poly_from(&r, &a);
        let g = poly_from(&r, &b);
        prop_assume!(f.deg() >= 1 && g.deg() >= 1);
        let res = resultant(&r, &f, &g);
        let common = r.gcd(&f, &g).deg() >= 1;
        prop_assert_eq!(r.base().is_zero(&res), common);
    }

    #[test]
    fn resultant_is_multiplicative_and_antisymmetric(
        a in prop::collection::vec(-9i128..10, 2..6),
        b in prop::collection::vec(-9i128..10, 2..6),
        c in prop::collection::vec(-9i128..10, 2..6),
    ) {
        let r = PolyRing::new(Integers, "x");
        let (f, g, h) = (r.from_coeffs(a), r.from_coeffs(b), r.from_coeffs(c));
        prop_assume!(f.deg() >= 1 && g.deg() >= 1 && h.deg() >= 1);
        let fg = resultant(&r, &f, &g);
        let gf = resultant(&r, &g, &f);
        let sign = if (f.deg() * g.deg()) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(fg, sign * gf);
        let fh = resultant(&r, &f, &h);
        prop_assert_eq!(resultant(&r, &f, &r.mul(&g, &h)), fg * fh);
    }

    #[test]
    fn roots_of_unity_sum_to_zero(n in 2u64..40) {
        let mut s = CycloNum::zero();
        for k in 0..n as i64 {
            s = &s + &CycloNum::root_of_unity(n, k);
        }
        prop_assert!(s.is_zero());
    }

    #[test]
    fn trace_inequality_holds(n in 2usize..40, l in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
        prop_assert!(trace_inequality(n, l));
    }

    #[test]
    fn point_counts_match_character_sums(
        p in prop::sample::select(vec![5u64, 7, 11, 13, 17, 19, 23, 29]),
        a in 0i64..29,
        b in 0i64..29,
    ) {
        let f = FqField::prime(p).unwrap();
        let Ok(e) = WeierstrassCurve::from_i64(&f, a, b) else { return Ok(()); };
        let mut sum: i64 = 0;
        for x in 0..p as i64 {
            let v = ((x * x % p as i64 * x + a * x + b) % p as i64 + p as i64) % p as i64;
            sum += if v == 0 { 0 } else if (1..p as i64).any(|y| y * y % p as i64 == v) { 1 } else { -1 };
        }
        prop_assert_eq!(e.point_count(1).unwrap() as i64, p as i64 + 1 + sum);
    }
}

fn s4() -> (Arc<PermGroup>, Vec<Subgroup>, Vec<ClassFunction>) {
    let g = catalog::symmetric(4);
    let subs = subgroup_classes(&g, g.order());
    let irr = irreducible_characters(&g).unwrap();
    (g, subs, irr)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frobenius_reciprocity_on_s4(i in 0usize..64, j in 0usize..64) {
        let (_g, subs, irr) = s4();
        let h = &subs[i % subs.len()];
        let hirr = irreducible_characters(h.group()).unwrap();
        let chi = &hirr[j % hirr.len()];
        prop_assert!(frobenius_reciprocity_holds(h, chi, &irr).unwrap());
        prop_assert!(projection_formula_holds(h, chi, &irr).unwrap());
    }

    #[test]
    fn induction_in_stages_on_s4(i in 0usize..64, picks in prop::collection::vec(0usize..64, 1..3), r in 0usize..5) {
        let (g, subs, irr) = s4();
        let h = &subs[i % subs.len()];
        let gens: Vec<_> = picks
            .iter()
            .map(|&k| g.element(h.members()[k % h.order()]).clone())
            .collect();
        let k_in_h = Subgroup::generated(h.group(), gens.clone()).unwrap();
        let k_in_g = Subgroup::generated(&g, gens).unwrap();
        let rho = &irr[r % irr.len()];
        let direct = rho.restrict(&k_in_g).unwrap().induce(&k_in_g).unwrap();
        let staged = rho
            .restrict(h)
            .unwrap()
            .restrict(&k_in_h)
            .unwrap()
            .induce(&k_in_h)
            .unwrap()
            .induce(h)
            .unwrap();
        prop_assert_eq!(direct.values(), staged.values());
    }
}

#[test]
fn irreducible_characters_are_orthonormal_on_catalog_groups() {
    for name in ["C5", "V4", "S3", "S4", "A4", "A5", "D5", "Q8", "PSL2(7)"] {
        let g = catalog::by_name(name).unwrap();
        let irr = irreducible_characters(&g).unwrap();
        assert_eq!(irr.len(), g.num_classes(), "{name}");
        let squares: i128 = irr.iter().map(|c| c.degree_int().unwrap().pow(2)).sum();
        assert_eq!(squares as usize, g.order(), "{name}");
        for (a, x) in irr.iter().enumerate() {
            for (b, y) in irr.iter().enumerate() {
                let expected = if a == b { 1 } else { 0 };
                assert_eq!(x.inner_rational(y).unwrap(), expected.into(), "{name}");
            }
        }
    }
}
