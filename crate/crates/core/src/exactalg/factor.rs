//! Factorization of univariate polynomials over finite fields.
//!
//! Squarefree decomposition, then distinct-degree, then equal-degree
//! splitting (Cantor-Zassenhaus, trace map in characteristic 2). Randomness
//! comes from a ChaCha stream seeded by the input, so results are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::numtheory::prime_factors;
use super::poly::{Poly, PolyRing};
use super::ring::{Domain, FiniteField, Ring};

/// `unit * prod f_i^{e_i}` with monic, distinct irreducible `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, u32)>,
}

impl<E> Factorization<E> {
    /// Degrees of the irreducible factors, with multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, e)| std::iter::repeat(f.deg() as usize).take(*e as usize))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

/// Sort key: degree first, then coefficients from the top down by index.
pub fn poly_key<F: FiniteField>(field: &F, p: &Poly<F::Elem>) -> (isize, Vec<u64>) {
    (
        p.deg(),
        p.coeffs().iter().rev().map(|c| field.index_of(c)).collect(),
    )
}

/// The monic polynomial of degree `d` whose lower coefficients are the
/// base-`q` digits of `index`.
pub fn monic_at<F: FiniteField>(ring: &PolyRing<F>, d: usize, mut index: u64) -> Poly<F::Elem> {
    let f = ring.base();
    let q = f.order();
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(f.elem_at(index % q));
        index /= q;
    }
    coeffs.push(f.one());
    ring.from_coeffs(coeffs)
}

/// All monic irreducible polynomials of degree `d`, in [`poly_key`] order.
pub fn monic_irreducibles<F: FiniteField>(ring: &PolyRing<F>, d: usize) -> Vec<Poly<F::Elem>> {
    let q = ring.base().order();
    let total = q.checked_pow(d as u32).expect("enumeration too large");
    (0..total)
        .map(|i| monic_at(ring, d, i))
        .filter(|p| is_irreducible(ring, p))
        .collect()
}

/// The first monic irreducible of degree `d` in [`poly_key`] order.
pub fn first_irreducible<F: FiniteField>(ring: &PolyRing<F>, d: usize) -> Poly<F::Elem> {
    (0..)
        .map(|i| monic_at(ring, d, i))
        .find(|p| is_irreducible(ring, p))
        .expect("irreducibles exist in every degree")
}

/// `x^(Q^k) mod f` by repeated Frobenius.
fn frobenius_power<F: FiniteField>(
    ring: &PolyRing<F>,
    x: &Poly<F::Elem>,
    k: usize,
    f: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    let q = ring.base().order();
    let mut h = ring.rem(x, f);
    for _ in 0..k {
        h = ring.pow_mod(&h, q, f);
    }
    h
}

/// Rabin's irreducibility test.
pub fn is_irreducible<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = ring.monic(f);
    let x = ring.gen();
    if frobenius_power(ring, &x, n, &f) != ring.rem(&x, &f) {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = frobenius_power(ring, &x, n / r as usize, &f);
        ring.gcd(&f, &ring.sub(&h, &x)).deg() == 0
    })
}

fn pth_root_poly<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let p = ring.base().characteristic() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| ring.base().pth_root(c))
        .collect();
    ring.from_coeffs(coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree `g_i` with `f = prod g_i^{e_i}`.
pub fn squarefree_decomposition<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(Poly<F::Elem>, u32)> {
    let mut out = Vec::new();
    if f.deg() <= 0 {
        return out;
    }
    let p = ring.base().characteristic() as u32;
    let mut c = ring.gcd(f, &ring.derivative(f));
    let mut w = ring.div_exact(f, &c).expect("gcd divides");
    let mut i = 1;
    while w.deg() > 0 {
        let y = ring.gcd(&w, &c);
        let z = ring.div_exact(&w, &y).expect("gcd divides");
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        c = ring.div_exact(&c, &y).expect("gcd divides");
        w = y;
    }
    if c.deg() > 0 {
        let root = pth_root_poly(ring, &c);
        for (g, e) in squarefree_decomposition(ring, &root) {
            out.push((g, e * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(g_d, d)` where `g_d` is the product of the degree-`d` factors.
pub fn distinct_degree<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(Poly<F::Elem>, usize)> {
    let q = ring.base().order();
    let x = ring.gen();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = ring.rem(&x, &rest);
    let mut d = 1;
    while rest.deg() >= 2 * d as isize {
        h = ring.pow_mod(&h, q, &rest);
        let g = ring.gcd(&rest, &ring.sub(&h, &x));
        if g.deg() > 0 {
            rest = ring.div_exact(&rest, &g).expect("gcd divides");
            h = ring.rem(&h, &rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg() as usize;
        out.push((rest, d));
    }
    out
}

fn random_poly<F: FiniteField>(
    ring: &PolyRing<F>,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Poly<F::Elem> {
    let f = ring.base();
    let q = f.order();
    ring.from_coeffs((0..n).map(|_| f.elem_at(rng.gen_range(0..q))).collect())
}

/// One attempt at a proper factor of `f`, a product of degree-`d` irreducibles.
fn split_attempt<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Poly<F::Elem>> {
    let field = ring.base();
    let q = field.order();
    let n = f.deg() as usize;
    let a = random_poly(ring, n, rng);
    if a.deg() <= 0 {
        return None;
    }
    let g = ring.gcd(f, &a);
    if g.deg() > 0 && g.deg() < f.deg() {
        return Some(g);
    }
    let b = if field.characteristic() == 2 {
        // trace to F_2 of the degree-d extension: sum of a^(2^i), i < m*d
        let m = q.trailing_zeros() as usize;
        let mut t = ring.rem(&a, f);
        let mut acc = t.clone();
        for _ in 1..m * d {
            t = ring.mul_mod(&t, &t, f);
            acc = ring.add(&acc, &t);
        }
        acc
    } else {
        // a^((Q^d - 1)/2) = (prod_{i<d} a^(Q^i))^((Q-1)/2)
        let mut t = ring.rem(&a, f);
        let mut norm = t.clone();
        for _ in 1..d {
            t = ring.pow_mod(&t, q, f);
            norm = ring.mul_mod(&norm, &t, f);
        }
        let pw = ring.pow_mod(&norm, (q - 1) / 2, f);
        ring.sub(&pw, &ring.one())
    };
    let g = ring.gcd(f, &b);
    (g.deg() > 0 && g.deg() < f.deg()).then_some(g)
}

/// Equal-degree factorization of a monic squarefree product of degree-`d`
/// irreducibles.
pub fn equal_degree<F: FiniteField>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly<F::Elem>> {
    let n = f.deg() as usize;
    if n == d {
        return vec![f.clone()];
    }
    let g = loop {
        if let Some(g) = split_attempt(ring, f, d, rng) {
            break g;
        }
    };
    let h = ring.div_exact(f, &g).expect("factor divides");
    let mut out = equal_degree(ring, &g, d, rng);
    out.extend(equal_degree(ring, &h, d, rng));
    out
}

fn seed_for<F: FiniteField>(field: &F, f: &Poly<F::Elem>) -> u64 {
    f.coeffs().iter().fold(0xcbf2_9ce4_8422_2325u64, |h, c| {
        (h ^ field.index_of(c)).wrapping_mul(0x100_0000_01b3)
    })
}

/// Complete factorization into monic irreducibles, sorted by [`poly_key`].
/// Panics on the zero polynomial.
pub fn factor<F: FiniteField>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Factorization<F::Elem> {
    let field = ring.base();
    let unit = f.lc().expect("cannot factor the zero polynomial").clone();
    let monic = ring.monic(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(field, &monic));
    let mut factors = Vec::new();
    for (g, e) in squarefree_decomposition(ring, &monic) {
        for (h, d) in distinct_degree(ring, &g) {
            for irr in equal_degree(ring, &h, d, &mut rng) {
                factors.push((irr, e));
            }
        }
    }
    factors.sort_by_cached_key(|(g, _)| poly_key(field, g));
    Factorization { unit, factors }
}
