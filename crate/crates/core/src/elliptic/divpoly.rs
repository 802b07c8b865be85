//! Division polynomials and the resultant `R(t, y)` whose roots are the
//! coordinates of `l`-torsion points of a curve over `F_q(t)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EllipticError, WeierstrassCurve};
use crate::exactalg::numtheory::is_prime;
use crate::exactalg::resultant::resultant_via_norm;
use crate::exactalg::{resultant, Domain, FiniteField, FqElem, FqField, Poly, PolyRing, Ring};

/// `f_0, ..., f_n` with `psi_n = f_n` for odd `n` and `psi_n = y f_n` for
/// even `n`, after substituting `y^2 = x^3 + ax + b`.
pub fn division_polynomials<R: Domain>(
    ring: &PolyRing<R>,
    a: &R::Elem,
    b: &R::Elem,
    n: usize,
) -> Vec<Poly<R::Elem>> {
    let k = ring.base();
    let c = |v: i64| k.from_i64(v);
    let poly = |terms: &[(R::Elem, usize)]| {
        terms.iter().fold(ring.zero(), |acc, (cf, e)| {
            ring.add(&acc, &ring.monomial(cf.clone(), *e))
        })
    };
    let a2 = k.mul(a, a);
    let a3 = k.mul(&a2, a);
    let ab = k.mul(a, b);
    let b2 = k.mul(b, b);
    let cubic = poly(&[(c(1), 3), (a.clone(), 1), (b.clone(), 0)]);
    let cubic2 = ring.mul(&cubic, &cubic);
    let mut f = vec![
        ring.zero(),
        ring.one(),
        ring.constant(c(2)),
        poly(&[
            (c(3), 4),
            (k.mul(&c(6), a), 2),
            (k.mul(&c(12), b), 1),
            (k.neg(&a2), 0),
        ]),
        ring.scale(
            &poly(&[
                (c(1), 6),
                (k.mul(&c(5), a), 4),
                (k.mul(&c(20), b), 3),
                (k.mul(&c(-5), &a2), 2),
                (k.mul(&c(-4), &ab), 1),
                (k.sub(&k.mul(&c(-8), &b2), &a3), 0),
            ]),
            &c(4),
        ),
    ];
    let two = c(2);
    let cube = |p: &Poly<R::Elem>| ring.mul(&ring.mul(p, p), p);
    let sq = |p: &Poly<R::Elem>| ring.mul(p, p);
    for idx in 5..=n {
        let m = idx / 2;
        let next = if idx % 2 == 1 {
            let mut u = ring.mul(&f[m + 2], &cube(&f[m]));
            let mut v = ring.mul(&f[m - 1], &cube(&f[m + 1]));
            if m % 2 == 0 {
                u = ring.mul(&cubic2, &u);
            } else {
                v = ring.mul(&cubic2, &v);
            }
            ring.sub(&u, &v)
        } else {
            let inner = ring.sub(
                &ring.mul(&f[m + 2], &sq(&f[m - 1])),
                &ring.mul(&f[m - 2], &sq(&f[m + 1])),
            );
            let p = ring.mul(&f[m], &inner);
            let coeffs = p
                .coeffs()
                .iter()
                .map(|x| k.div_exact(x, &two).expect("2 is invertible"))
                .collect();
            ring.from_coeffs(coeffs)
        };
        f.push(next);
    }
    f.truncate(n + 1);
    f
}

/// The `l`-division polynomial `psi_l` for odd `l`.
pub fn division_polynomial<R: Domain>(
    ring: &PolyRing<R>,
    a: &R::Elem,
    b: &R::Elem,
    l: usize,
) -> Poly<R::Elem> {
    division_polynomials(ring, a, b, l).pop().expect("nonempty")
}

fn check_prime(l: u64, p: u64) -> Result<(), EllipticError> {
    if l == 2 || l == p || !is_prime(l) {
        return Err(EllipticError::BadPrime(l));
    }
    Ok(())
}

impl WeierstrassCurve {
    /// `psi_l` in `F_q[x]` for an odd prime `l != p`.
    pub fn division_poly(&self, l: u64) -> Result<Poly<FqElem>, EllipticError> {
        check_prime(l, self.field().p())?;
        let fx = PolyRing::new(self.field().clone(), "x");
        Ok(division_polynomial(&fx, &self.a(), &self.b(), l as usize))
    }
}

/// `y^2 = x^3 + a(t) x + b(t)` over `F_q(t)` with polynomial coefficients.
#[derive(Clone, Debug)]
pub struct CurveOverFqt {
    ft: PolyRing<FqField>,
    a: Poly<FqElem>,
    b: Poly<FqElem>,
}

/// `R(t, y) = Res_x(psi_l(x), y^2 - (x^3 + ax + b))` in `F_q[t][y]`.
#[derive(Clone, Debug)]
pub struct TorsionResultant {
    pub l: u64,
    pub division_degree: usize,
    pub resultant: Poly<Poly<FqElem>>,
    /// A value `t0` at which `R(t0, y)` is separable of full degree, which
    /// certifies that `R` is separable over `F_q(t)`.
    pub separability_witness: Option<FqElem>,
}

impl TorsionResultant {
    pub fn degree_y(&self) -> usize {
        self.resultant.deg().max(0) as usize
    }

    pub fn is_separable(&self) -> bool {
        self.separability_witness.is_some()
    }
}

/// Agreement of `R(t0, y)` with the scalar resultant at `t = t0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub t0: FqElem,
    pub agrees: bool,
}

impl CurveOverFqt {
    pub fn new(field: &FqField, a: Poly<FqElem>, b: Poly<FqElem>) -> Result<Self, EllipticError> {
        if field.p() <= 3 {
            return Err(EllipticError::SmallCharacteristic(field.p()));
        }
        let ft = PolyRing::new(field.clone(), "t");
        let c = CurveOverFqt { ft, a, b };
        let d = c.ft.add(
            &c.ft.scale(&c.ft.pow(&c.a, 3), &field.from_i64(4)),
            &c.ft.scale(&c.ft.mul(&c.b, &c.b), &field.from_i64(27)),
        );
        if d.is_zero() {
            return Err(EllipticError::SingularCurve);
        }
        Ok(c)
    }

    pub fn ring(&self) -> &PolyRing<FqField> {
        &self.ft
    }

    pub fn field(&self) -> &FqField {
        self.ft.base()
    }

    pub fn a(&self) -> &Poly<FqElem> {
        &self.a
    }

    pub fn b(&self) -> &Poly<FqElem> {
        &self.b
    }

    pub fn specialize(&self, t0: &FqElem) -> Result<WeierstrassCurve, EllipticError> {
        WeierstrassCurve::new(
            self.field(),
            self.ft.eval(&self.a, t0),
            self.ft.eval(&self.b, t0),
        )
    }

    /// `psi_l` in `F_q[t][x]`.
    pub fn division_poly(&self, l: u64) -> Result<Poly<Poly<FqElem>>, EllipticError> {
        check_prime(l, self.field().p())?;
        let ftx = PolyRing::new(self.ft.clone(), "x");
        Ok(division_polynomial(&ftx, &self.a, &self.b, l as usize))
    }

    /// `R(t, y)` through the norm from `F_q[t][y][x] / (psi_l)`.
    pub fn torsion_field_resultant(&self, l: u64) -> Result<TorsionResultant, EllipticError> {
        let psi = self.division_poly(l)?;
        let fty = PolyRing::new(self.ft.clone(), "y");
        let ftyx = PolyRing::new(fty.clone(), "x");
        let psi_y = ftyx.from_coeffs(
            psi.coeffs()
                .iter()
                .map(|c| fty.constant(c.clone()))
                .collect(),
        );
        let ft = &self.ft;
        let cubic = ftyx.from_coeffs(vec![
            fty.from_coeffs(vec![ft.neg(&self.b), ft.zero(), ft.one()]),
            fty.constant(ft.neg(&self.a)),
            fty.zero(),
            fty.constant(ft.from_i64(-1)),
        ]);
        let resultant =
            resultant_via_norm(&ftyx, &cubic, &psi_y).expect("leading coefficient l is a unit");
        let mut out = TorsionResultant {
            l,
            division_degree: psi.deg() as usize,
            resultant,
            separability_witness: None,
        };
        out.separability_witness = self.field().elements().find(|t0| {
            let r = self.specialize_resultant(&out.resultant, t0);
            let fy = PolyRing::new(self.field().clone(), "y");
            r.deg() == out.resultant.deg() && fy.gcd(&r, &fy.derivative(&r)).deg() == 0
        });
        Ok(out)
    }

    /// `R(t0, y)` in `F_q[y]`.
    pub fn specialize_resultant(&self, r: &Poly<Poly<FqElem>>, t0: &FqElem) -> Poly<FqElem> {
        let fy = PolyRing::new(self.field().clone(), "y");
        fy.from_coeffs(r.coeffs().iter().map(|c| self.ft.eval(c, t0)).collect())
    }

    /// `Res_x(psi_l(t0, x), y^2 - (x^3 + a(t0) x + b(t0)))` by a Sylvester
    /// determinant over `F_q[y]`.
    pub fn scalar_resultant(&self, l: u64, t0: &FqElem) -> Result<Poly<FqElem>, EllipticError> {
        let f = self.field();
        let (a0, b0) = (self.ft.eval(&self.a, t0), self.ft.eval(&self.b, t0));
        let fy = PolyRing::new(f.clone(), "y");
        let fyx = PolyRing::new(fy.clone(), "x");
        let fx = PolyRing::new(f.clone(), "x");
        check_prime(l, f.p())?;
        let psi = division_polynomial(&fx, &a0, &b0, l as usize);
        let psi_y = fyx.from_coeffs(psi.coeffs().iter().map(|c| fy.constant(*c)).collect());
        let g = fyx.from_coeffs(vec![
            fy.from_coeffs(vec![f.neg(&b0), f.zero(), f.one()]),
            fy.constant(f.neg(&a0)),
            fy.zero(),
            fy.constant(f.from_i64(-1)),
        ]);
        Ok(resultant(&fyx, &psi_y, &g))
    }

    /// Compare `R(t0, y)` with scalar resultants at `count` random `t0`.
    pub fn verify_specializations(
        &self,
        r: &TorsionResultant,
        count: usize,
        seed: u64,
    ) -> Result<Vec<Specialization>, EllipticError> {
        let f = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let t0 = f.elem_at(rng.gen_range(0..f.q()));
                let scalar = self.scalar_resultant(r.l, &t0)?;
                Ok(Specialization {
                    t0,
                    agrees: scalar == self.specialize_resultant(&r.resultant, &t0),
                })
            })
            .collect()
    }

    pub fn render(&self) -> String {
        format!(
            "E/F_{}(t): a={}, b={}",
            self.field().q(),
            self.ft.render(&self.a),
            self.ft.render(&self.b)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve_t(p: u64) -> CurveOverFqt {
        let f = FqField::prime(p).unwrap();
        let ft = PolyRing::new(f.clone(), "t");
        let a = ft.gen();
        let b = ft.add(&ft.gen(), &ft.one());
        CurveOverFqt::new(&f, a, b).unwrap()
    }

    #[test]
    fn three_division_polynomial() {
        let f = FqField::prime(13).unwrap();
        let e = WeierstrassCurve::from_i64(&f, 2, 5).unwrap();
        let fx = PolyRing::new(f.clone(), "x");
        let want = fx.from_coeffs([-4, 60, 12, 0, 3].iter().map(|&c| f.from_i64(c)).collect());
        assert_eq!(e.division_poly(3).unwrap(), want);
    }

    #[test]
    fn degrees() {
        let f = FqField::prime(13).unwrap();
        let e = WeierstrassCurve::from_i64(&f, 2, 5).unwrap();
        for l in [3u64, 5, 7, 11] {
            assert_eq!(e.division_poly(l).unwrap().deg() as u64, (l * l - 1) / 2);
        }
        assert_eq!(curve_t(29).division_poly(7).unwrap().deg(), 24);
        assert_eq!(e.division_poly(13), Err(EllipticError::BadPrime(13)));
        assert_eq!(e.division_poly(2), Err(EllipticError::BadPrime(2)));
    }

    #[test]
    fn roots_are_torsion_abscissas() {
        for p in [7u64, 13] {
            let f = FqField::prime(p).unwrap();
            let fx = PolyRing::new(f.clone(), "x");
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    let Ok(e) = WeierstrassCurve::from_i64(&f, a, b) else {
                        continue;
                    };
                    let pts = e.points().unwrap();
                    for l in [3u64, 5].into_iter().filter(|&l| l != p) {
                        let psi = e.division_poly(l).unwrap();
                        for pt in &pts {
                            let torsion = pt.is_some() && e.mul(pt, l).is_none();
                            if let Some((x, _)) = pt {
                                assert_eq!(f.is_zero(&fx.eval(&psi, x)), torsion);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_torsion_resultant() {
        let c = curve_t(29);
        let r = c.torsion_field_resultant(3).unwrap();
        assert_eq!(r.degree_y(), 8);
        assert!(r.is_separable());
        let checks = c.verify_specializations(&r, 20, 7).unwrap();
        assert!(checks.iter().all(|s| s.agrees));
    }
}
