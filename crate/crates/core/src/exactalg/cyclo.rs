//! Exact elements of cyclotomic fields `Q(zeta_n)`.
//!
//! A value stores its level `n` and rational coefficients in the power basis
//! `1, z, ..., z^(phi(n)-1)` of `Q[z]/(Phi_n)`. Values at different levels
//! meet in `Q(zeta_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::numtheory::{divisors, gcd, lcm, mobius};
use super::ring::Rational;

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i128>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i128>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mul_int(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial.
fn div_int(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i];
        quot[i - db] = c;
        for (j, bc) in b.iter().enumerate() {
            rem[i - db + j] -= c * bc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// The cyclotomic polynomial `Phi_n`, ascending integer coefficients.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<i128>> {
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![1i128];
    let mut den = vec![1i128];
    for d in divisors(n) {
        let mut xd = vec![0i128; d as usize + 1];
        xd[0] = -1;
        xd[d as usize] = 1;
        match mobius(n / d) {
            1 => num = mul_int(&num, &xd),
            -1 => den = mul_int(&den, &xd),
            _ => {}
        }
    }
    let phi = Arc::new(div_int(&num, &den));
    cyclotomic_cache().lock().unwrap().insert(n, phi.clone());
    phi
}

#[derive(Clone, Debug)]
pub struct CycloNum {
    n: u64,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    /// Reduce exponent-indexed coefficients modulo `Phi_n`.
    fn reduce(n: u64, mut v: Vec<Rational>) -> Self {
        let phi = cyclotomic_poly(n);
        let d = phi.len() - 1;
        for i in (d..v.len()).rev() {
            let c = std::mem::replace(&mut v[i], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate().take(d) {
                if *pj != 0 {
                    v[i - d + j] -= c * Rational::from_integer(*pj);
                }
            }
        }
        v.resize(d, Rational::zero());
        CycloNum { n, coeffs: v }
    }

    /// Build from coefficients indexed by exponent mod `n`.
    fn from_exponents(n: u64, terms: impl IntoIterator<Item = (u64, Rational)>) -> Self {
        let mut v = vec![Rational::zero(); n as usize];
        for (k, c) in terms {
            v[(k % n) as usize] += c;
        }
        Self::reduce(n, v)
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum {
            n: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(k as i128))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n > 0);
        let e = k.rem_euclid(n as i64) as u64;
        Self::from_exponents(n, [(e, Rational::one())])
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The same number written at level `m`, a multiple of the current level.
    pub fn embed(&self, m: u64) -> Self {
        assert!(m % self.n == 0, "level {m} is not a multiple of {}", self.n);
        if m == self.n {
            return self.clone();
        }
        let step = m / self.n;
        Self::from_exponents(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u64 * step, *c)),
        )
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = lcm(a.n, b.n);
        (a.embed(m), b.embed(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if this number is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0])
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn scale(&self, r: Rational) -> Self {
        CycloNum {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Galois automorphism `zeta -> zeta^k` of `Q(zeta_n)`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as u64;
        assert!(gcd(k, n) == 1 || n == 1, "{k} is not a unit mod {n}");
        Self::from_exponents(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u64 * k) % n, *c)),
        )
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// `|a|^2 = a * conj(a)`.
    pub fn abs2(&self) -> Self {
        self * &self.conj()
    }

    /// Floating-point value under `zeta_n = exp(2 pi i / n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = *c.numer() as f64 / *c.denom() as f64;
            let t = 2.0 * std::f64::consts::PI * i as f64 / self.n as f64;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        let (mut a, b) = CycloNum::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.scale(-Rational::one())
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self + &(-rhs)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        let (a, b) = CycloNum::common(self, rhs);
        let n = a.n as usize;
        let mut v = vec![Rational::zero(); n.max(2 * a.coeffs.len())];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[(i + j) % n] += x * y;
                }
            }
        }
        CycloNum::reduce(a.n, v)
    }
}

impl fmt::Display for CycloNum {
    /// Sum of terms `c*E(n)^k`, `E(n)` the primitive root `exp(2 pi i / n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", render_rational(&r));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let root = match i {
                0 => None,
                1 => Some(format!("E({})", self.n)),
                _ => Some(format!("E({})^{}", self.n, i)),
            };
            match root {
                None => write!(f, "{}", render_rational(&mag))?,
                Some(r) if mag.is_one() => write!(f, "{r}")?,
                Some(r) => write!(f, "{}*{r}", render_rational(&mag))?,
            }
        }
        Ok(())
    }
}

fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() - 1, 48);
    }

    #[test]
    fn roots_of_unity_arithmetic() {
        let z = CycloNum::root_of_unity(6, 1);
        // zeta_6^2 - zeta_6 + 1 = 0
        let s = &(&(&z * &z) - &z) + &CycloNum::one();
        assert!(s.is_zero());
        // zeta_4 = zeta_12^3, and i^2 = -1
        let i = CycloNum::root_of_unity(4, 1);
        assert_eq!(i, CycloNum::root_of_unity(12, 3));
        assert_eq!(&i * &i, CycloNum::from_int(-1));
    }

    #[test]
    fn conjugation_and_norm() {
        let z = CycloNum::root_of_unity(5, 2);
        assert_eq!(z.abs2(), CycloNum::one());
        let a = &CycloNum::from_int(2) + &z;
        let (re, im) = a.abs2().to_complex();
        let t = 4.0 * std::f64::consts::PI / 5.0;
        assert!((re - (5.0 + 4.0 * t.cos())).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn display() {
        let z = CycloNum::root_of_unity(3, 1);
        assert_eq!(z.to_string(), "E(3)");
        assert_eq!(CycloNum::root_of_unity(3, 2).to_string(), "-1 - E(3)");
        assert_eq!(
            CycloNum::from_rational(Rational::new(-1, 2)).to_string(),
            "-1/2"
        );
    }
}
