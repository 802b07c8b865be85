//! Resultants and discriminants over integral domains.

use super::poly::{Poly, PolyRing};
use super::ring::{Domain, Ring};

/// Fraction-free determinant (Bareiss). Division steps are exact.
pub fn det_bareiss<R: Domain>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = ring.mul(&m[i][j], &m[k][k]);
                let b = ring.mul(&m[i][k], &m[k][j]);
                m[i][j] = ring
                    .div_exact(&ring.sub(&a, &b), &prev)
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Sylvester matrix for formal degrees `m = deg f` and `n = deg g`, rows of
/// `f` first, coefficients in descending order.
pub fn sylvester_matrix<R: Ring>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    m: usize,
    g: &Poly<R::Elem>,
    n: usize,
) -> Vec<Vec<R::Elem>> {
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, count) in [(f, m, n), (g, n, m)] {
        for r in 0..count {
            let mut row = vec![ring.base().zero(); size];
            for k in 0..=deg {
                row[r + deg - k] = ring.coeff(p, k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant with explicit formal degrees (at least the true degrees).
pub fn resultant_formal<R: Domain>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    m: usize,
    g: &Poly<R::Elem>,
    n: usize,
) -> R::Elem {
    det_bareiss(ring.base(), sylvester_matrix(ring, f, m, g, n))
}

/// `Res(f, g)`; zero if either argument is zero.
pub fn resultant<R: Domain>(ring: &PolyRing<R>, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> R::Elem {
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => resultant_formal(ring, f, m, g, n),
        _ => ring.base().zero(),
    }
}

/// `Res(f, g)` for `g` with invertible leading coefficient, through the
/// norm: `Res(g, f) = lc(g)^deg f * det(multiplication by f on R[x]/(g))`.
pub fn resultant_via_norm<R: Domain>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Option<R::Elem> {
    let base = ring.base();
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Some(base.zero()),
    };
    let u = g.lc()?.clone();
    let u_inv = base.div_exact(&base.one(), &u)?;
    let monic = ring.scale(g, &u_inv);
    let norm = det_bareiss(base, multiplication_matrix(ring, f, &monic));
    let mut r = base.mul(&base.pow(&u, m as u64), &norm);
    if (m * n) % 2 == 1 {
        r = base.neg(&r);
    }
    Some(r)
}

/// Matrix of `h -> f*h` on `R[x]/(g)` in the basis `1, x, ..., x^(n-1)`, for
/// monic `g`. Column `j` holds `x^j f mod g`.
pub fn multiplication_matrix<R: Domain>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Vec<Vec<R::Elem>> {
    let n = g.deg().max(0) as usize;
    let reduce = |p: &Poly<R::Elem>| ring.long_division(p, g).expect("monic divisor").1;
    let mut col = reduce(f);
    let mut m = vec![vec![ring.base().zero(); n]; n];
    for j in 0..n {
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = ring.coeff(&col, i);
        }
        col = reduce(&ring.shift(&col, 1));
    }
    m
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)` with `f'` at formal degree `n - 1`.
pub fn discriminant<R: Domain>(ring: &PolyRing<R>, f: &Poly<R::Elem>) -> R::Elem {
    let base = ring.base();
    let n = match f.degree() {
        None | Some(0) => return base.zero(),
        Some(1) => return base.one(),
        Some(n) => n,
    };
    let r = resultant_formal(ring, f, n, &ring.derivative(f), n - 1);
    let d = base
        .div_exact(&r, f.lc().unwrap())
        .expect("leading coefficient divides Res(f, f')");
    if (n * (n - 1) / 2) % 2 == 1 {
        base.neg(&d)
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::fq::FqField;
    use crate::exactalg::ring::Integers;

    #[test]
    fn integer_resultants() {
        let zx = PolyRing::new(Integers, "x");
        // Res(x^2 - 2, x - 1) = (sqrt2 - 1)(-sqrt2 - 1)
        let f = zx.from_coeffs(vec![-2, 0, 1]);
        let g = zx.from_coeffs(vec![-1, 1]);
        assert_eq!(resultant(&zx, &f, &g), -1);
        assert_eq!(resultant(&zx, &g, &f), -1);
        // disc(x^2 + b x + c) = b^2 - 4c
        let h = zx.from_coeffs(vec![3, 5, 1]);
        assert_eq!(discriminant(&zx, &h), 13);
        // disc(x^3 + a x + b) = -4a^3 - 27b^2
        let c = zx.from_coeffs(vec![2, -1, 0, 1]);
        assert_eq!(discriminant(&zx, &c), 4 - 108);
    }

    #[test]
    fn norm_route_matches_sylvester() {
        let zx = PolyRing::new(Integers, "x");
        let f = zx.from_coeffs(vec![3, -1, 4, 1, 5]);
        let g = zx.from_coeffs(vec![2, 7, 1, -1]);
        assert_eq!(
            resultant_via_norm(&zx, &f, &g),
            Some(resultant(&zx, &f, &g))
        );
    }

    #[test]
    fn resultant_over_polynomial_ring() {
        // Res_y(y^2 - t, y - t) = t^2 - t over F_5[t]
        let f5 = FqField::prime(5).unwrap();
        let ft = PolyRing::new(f5.clone(), "t");
        let fty = PolyRing::new(ft.clone(), "y");
        let t = ft.gen();
        let f = fty.from_coeffs(vec![ft.neg(&t), ft.zero(), ft.one()]);
        let g = fty.from_coeffs(vec![ft.neg(&t), ft.one()]);
        assert_eq!(resultant(&fty, &f, &g), ft.sub(&ft.mul(&t, &t), &t));
    }
}
