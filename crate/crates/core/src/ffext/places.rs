//! Places of `F_q(x)` and the splitting of `f(x, y)` above them.

use super::{FfError, Fx, Fxy};
use crate::exactalg::factor::{factor, is_irreducible, monic_irreducibles};
use crate::exactalg::numtheory::divisors;
use crate::exactalg::{discriminant, Domain, ExtField, FqElem, FqField, Poly, PolyRing, Ring};

/// A place of `F_q(x)`: a monic irreducible polynomial or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(Poly<FqElem>),
    Infinity,
}

impl Place {
    /// A finite place; `p` must be monic irreducible.
    pub fn finite(fx: &Fx, p: Poly<FqElem>) -> Result<Self, FfError> {
        if !fx.is_monic(&p) || !is_irreducible(fx, &p) {
            return Err(FfError::NotIrreducible);
        }
        Ok(Place::Finite(p))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn render(&self, fx: &Fx) -> String {
        match self {
            Place::Finite(p) => fx.render(p),
            Place::Infinity => "inf".to_string(),
        }
    }

    /// `F_q[x]/(p)`, or `None` at infinity.
    pub fn residue_field(&self, fx: &Fx) -> Option<ExtField<FqField>> {
        match self {
            Place::Finite(p) => Some(ExtField::new_unchecked(fx.base().clone(), p.clone())),
            Place::Infinity => None,
        }
    }
}

/// Every place of degree at most `bound`: degree-ascending, lexicographic on
/// coefficients from the top within a degree, infinity last in degree 1.
pub fn places_up_to(fx: &Fx, bound: usize) -> Vec<Place> {
    let mut out = Vec::new();
    for d in 1..=bound {
        out.extend(monic_irreducibles(fx, d).into_iter().map(Place::Finite));
        if d == 1 {
            out.push(Place::Infinity);
        }
    }
    out
}

/// Residue degrees of the places above a place, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingPattern {
    pub place: Place,
    pub degrees: Vec<usize>,
    pub ramified: bool,
}

impl SplittingPattern {
    pub fn render(&self, fx: &Fx) -> String {
        if self.ramified {
            return format!("{}: ramified", self.place.render(fx));
        }
        format!(
            "{}: {}",
            self.place.render(fx),
            render_degrees(&self.degrees)
        )
    }
}

fn render_degrees(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Build `sum c * y^i * x^j` from `(c, i, j)` triples.
pub fn bivariate(fxy: &Fxy, terms: &[(i64, usize, usize)]) -> Poly<Poly<FqElem>> {
    let fx = fxy.base();
    let field = fx.base();
    terms.iter().fold(fxy.zero(), |acc, &(c, i, j)| {
        let xc = fx.monomial(field.from_i64(c), j);
        fxy.add(&acc, &fxy.monomial(xc, i))
    })
}

/// A polynomial monic in `y` with its discriminant, ready for repeated
/// reduction at places.
#[derive(Clone, Debug)]
pub struct Splitter {
    fxy: Fxy,
    f: Poly<Poly<FqElem>>,
    disc: Poly<FqElem>,
}

impl Splitter {
    /// `f` must have a nonzero constant leading coefficient in `y` (it is
    /// rescaled to be monic) and a nonzero discriminant.
    pub fn new(fxy: &Fxy, f: &Poly<Poly<FqElem>>) -> Result<Self, FfError> {
        let fx = fxy.base();
        let lc = f.lc().ok_or(FfError::ConstantPolynomial)?;
        if f.degree() == Some(0) {
            return Err(FfError::ConstantPolynomial);
        }
        if lc.degree() != Some(0) {
            return Err(FfError::NotMonic);
        }
        let inv = fx.div_exact(&fx.one(), lc).ok_or(FfError::NotMonic)?;
        let f = fxy.scale(f, &inv);
        let disc = discriminant(fxy, &f);
        if disc.is_zero() {
            return Err(FfError::Inseparable);
        }
        Ok(Splitter {
            fxy: fxy.clone(),
            f,
            disc,
        })
    }

    pub fn fx(&self) -> &Fx {
        self.fxy.base()
    }

    pub fn poly(&self) -> &Poly<Poly<FqElem>> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }

    pub fn discriminant(&self) -> &Poly<FqElem> {
        &self.disc
    }

    pub fn is_ramified(&self, p: &Poly<FqElem>) -> bool {
        self.fx().rem(&self.disc, p).is_zero()
    }

    /// Distinct irreducible factors of `f mod p` over the residue field, as
    /// `(degree, multiplicity)`.
    pub fn residue_factors(&self, place: &Place) -> Result<Vec<(usize, u32)>, FfError> {
        let ext = place
            .residue_field(self.fx())
            .ok_or(FfError::InfinitePlaceUnsupported)?;
        let ring = PolyRing::new(ext.clone(), "y");
        let reduced = ring.from_coeffs(self.f.coeffs().iter().map(|c| ext.reduce(c)).collect());
        let fac = factor(&ring, &reduced);
        Ok(fac
            .factors
            .iter()
            .map(|(p, m)| (p.degree().unwrap(), *m))
            .collect())
    }

    /// The pattern at a finite place, flagged when ramified.
    pub fn pattern(&self, place: &Place) -> Result<SplittingPattern, FfError> {
        let Place::Finite(p) = place else {
            return Err(FfError::InfinitePlaceUnsupported);
        };
        if self.is_ramified(p) {
            return Ok(SplittingPattern {
                place: place.clone(),
                degrees: Vec::new(),
                ramified: true,
            });
        }
        let mut degrees: Vec<usize> = self
            .residue_factors(place)?
            .iter()
            .flat_map(|&(d, m)| std::iter::repeat(d).take(m as usize))
            .collect();
        degrees.sort_unstable();
        debug_assert_eq!(degrees.iter().sum::<usize>(), self.degree());
        Ok(SplittingPattern {
            place: place.clone(),
            degrees,
            ramified: false,
        })
    }

    /// `#{(x, y) in F_{q^d}^2 : f(x, y) = 0}`, assembled from residue
    /// factorizations at places of degree dividing `d`.
    pub fn affine_point_count(&self, d: usize) -> Result<u64, FfError> {
        let fx = self.fx();
        let mut total = 0u64;
        for e in divisors(d as u64) {
            let e = e as usize;
            for p in monic_irreducibles(fx, e) {
                let roots: usize = self
                    .residue_factors(&Place::Finite(p))?
                    .iter()
                    .filter(|&&(k, _)| (d / e) % k == 0)
                    .map(|&(k, _)| k)
                    .sum();
                total += (e * roots) as u64;
            }
        }
        Ok(total)
    }
}

/// The splitting pattern of `f` at a finite unramified place.
pub fn splitting_pattern(
    fxy: &Fxy,
    f: &Poly<Poly<FqElem>>,
    place: &Place,
) -> Result<SplittingPattern, FfError> {
    let pat = Splitter::new(fxy, f)?.pattern(place)?;
    if pat.ramified {
        return Err(FfError::RamifiedPlace);
    }
    Ok(pat)
}

#[derive(Clone, Debug)]
pub struct SplitEquivalence {
    pub equivalent: bool,
    /// First disagreeing place with the patterns of `f` and `g`.
    pub witness: Option<(Place, Vec<usize>, Vec<usize>)>,
    pub compared: usize,
    /// Places ramified for `f` or `g`, excluded from the comparison.
    pub ramified: Vec<Place>,
}

impl SplitEquivalence {
    pub fn render(&self, fx: &Fx) -> String {
        let mut out = format!("equivalent={}\n", self.equivalent);
        if let Some((p, a, b)) = &self.witness {
            out.push_str(&format!(
                "witness={} f={} g={}\n",
                p.render(fx),
                render_degrees(a),
                render_degrees(b)
            ));
        }
        let ram: Vec<String> = self.ramified.iter().map(|p| p.render(fx)).collect();
        out.push_str(&format!("compared={}\n", self.compared));
        out.push_str(&format!("ramified=[{}]\nskipped=inf", ram.join(", ")));
        out
    }
}

/// Compare splitting patterns at every finite place of degree at most
/// `bound` unramified for both polynomials.
pub fn splitting_equivalent(
    fxy: &Fxy,
    f: &Poly<Poly<FqElem>>,
    g: &Poly<Poly<FqElem>>,
    bound: usize,
) -> Result<SplitEquivalence, FfError> {
    if f.degree() != g.degree() {
        return Err(FfError::DegreeMismatch);
    }
    let sf = Splitter::new(fxy, f)?;
    let sg = Splitter::new(fxy, g)?;
    let mut report = SplitEquivalence {
        equivalent: true,
        witness: None,
        compared: 0,
        ramified: Vec::new(),
    };
    for place in places_up_to(fxy.base(), bound) {
        if place == Place::Infinity {
            continue;
        }
        let a = sf.pattern(&place)?;
        let b = sg.pattern(&place)?;
        if a.ramified || b.ramified {
            report.ramified.push(place);
            continue;
        }
        report.compared += 1;
        if a.degrees != b.degrees && report.witness.is_none() {
            report.equivalent = false;
            report.witness = Some((place, a.degrees, b.degrees));
        }
    }
    Ok(report)
}

/// The first unramified place of degree `t` at which `f` splits into
/// distinct linear factors.
pub fn find_split_prime(fxy: &Fxy, f: &Poly<Poly<FqElem>>, t: usize) -> Result<Place, FfError> {
    let s = Splitter::new(fxy, f)?;
    let n = s.degree();
    for p in monic_irreducibles(fxy.base(), t) {
        let place = Place::Finite(p);
        let pat = s.pattern(&place)?;
        if !pat.ramified && pat.degrees == vec![1; n] {
            return Ok(place);
        }
    }
    Err(FfError::NotFound(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::numtheory::irreducible_count;
    use crate::ffext::rings;

    fn f7() -> (Fx, Fxy) {
        rings(&FqField::prime(7).unwrap(), "x", "y")
    }

    fn linear(fx: &Fx, c: i64) -> Place {
        Place::Finite(fx.from_coeffs(vec![fx.base().from_i64(c), fx.base().one()]))
    }

    #[test]
    fn place_counts() {
        let (fx, _) = f7();
        assert_eq!(places_up_to(&fx, 1).len(), 8);
        assert_eq!(places_up_to(&fx, 2).len(), 8 + 21);
        let (f2, _) = rings(&FqField::prime(2).unwrap(), "x", "y");
        let deg3 = places_up_to(&f2, 3)
            .iter()
            .filter(|p| p.degree() == 3)
            .count();
        assert_eq!(deg3 as u64, irreducible_count(2, 3));
        assert_eq!(places_up_to(&fx, 1).last(), Some(&Place::Infinity));
    }

    #[test]
    fn quadratic_patterns() {
        let (fx, fxy) = f7();
        let e1 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-1, 0, 0)]);
        let e2 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-3, 0, 1), (-1, 0, 0)]);
        let at = |f, c| splitting_pattern(&fxy, f, &linear(&fx, c)).unwrap().degrees;
        assert_eq!(at(&e1, 0), vec![1, 1]);
        assert_eq!(at(&e2, -1), vec![2]);
        assert_eq!(at(&e1, -1), vec![1, 1]);
        assert_eq!(
            splitting_pattern(&fxy, &e1, &linear(&fx, 1)).unwrap_err(),
            FfError::RamifiedPlace
        );
    }

    #[test]
    fn example_one_is_not_split_equivalent() {
        let (fx, fxy) = f7();
        let e1 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-1, 0, 0)]);
        let e2 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-3, 0, 1), (-1, 0, 0)]);
        let r = splitting_equivalent(&fxy, &e1, &e2, 1).unwrap();
        assert!(!r.equivalent);
        assert_eq!(r.witness.unwrap().0, linear(&fx, -1));
        assert!(splitting_equivalent(&fxy, &e1, &e1, 2).unwrap().equivalent);
    }

    #[test]
    fn split_primes() {
        let (fx, fxy) = f7();
        let e1 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-1, 0, 0)]);
        assert_eq!(find_split_prime(&fxy, &e1, 1).unwrap(), linear(&fx, 0));
        let trivial = bivariate(&fxy, &[(1, 1, 0), (-1, 0, 1)]);
        let first = monic_irreducibles(&fx, 2).remove(0);
        assert_eq!(
            find_split_prime(&fxy, &trivial, 2).unwrap(),
            Place::Finite(first)
        );
        let nonsquare = bivariate(&fxy, &[(1, 2, 0), (-3, 0, 0)]);
        assert_eq!(
            find_split_prime(&fxy, &nonsquare, 1).unwrap_err(),
            FfError::NotFound(1)
        );
    }

    #[test]
    fn point_count_from_places() {
        let (_, fxy) = f7();
        let e1 = bivariate(&fxy, &[(1, 2, 0), (-1, 0, 3), (-1, 0, 0)]);
        let s = Splitter::new(&fxy, &e1).unwrap();
        // affine points of y^2 = x^3 + 1 over F_7, by direct count
        let direct = (0..7i64)
            .flat_map(|x| (0..7i64).map(move |y| (x, y)))
            .filter(|(x, y)| (y * y - x * x * x - 1).rem_euclid(7) == 0)
            .count() as u64;
        assert_eq!(s.affine_point_count(1).unwrap(), direct);
    }
}
