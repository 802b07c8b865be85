//! Ray class orders for a single prime modulus and the choice of the
//! auxiliary prime `l` and degree `T`.

use std::fmt;

use crate::exactalg::numtheory::{gcd, is_prime, pow_mod};

/// `|Cl_m(K)| = h (q^T - 1) / (q - 1)` for a prime modulus of degree `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayClassReport {
    pub h: u64,
    pub q: u64,
    pub t: u32,
    /// `None` on overflow of `u128`.
    pub order: Option<u128>,
    /// `q^T - 1`, the order of `(O_K / m)^*`.
    pub residue_units: Option<u128>,
    pub l: Option<u64>,
    /// Whether `l` divides `order`.
    pub divisible: Option<bool>,
    /// Whether `l` divides `q^T - 1`.
    pub divides_residue_units: Option<bool>,
}

impl fmt::Display for RayClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u128>| v.map_or("overflow".to_string(), |v| v.to_string());
        write!(
            f,
            "h={} q={} T={} order={} q^T-1={}",
            self.h,
            self.q,
            self.t,
            show(self.order),
            show(self.residue_units)
        )?;
        if let (Some(l), Some(d), Some(u)) = (self.l, self.divisible, self.divides_residue_units) {
            write!(f, " l={l} divisible={d} l|q^T-1={u}")?;
        }
        Ok(())
    }
}

pub fn ray_class_order(h: u64, q: u64, t: u32, l: Option<u64>) -> RayClassReport {
    let residue_units = (q as u128).checked_pow(t).map(|v| v - 1);
    let order = residue_units.and_then(|u| (h as u128).checked_mul(u / (q as u128 - 1)));
    RayClassReport {
        h,
        q,
        t,
        order,
        residue_units,
        l,
        divisible: l.map(|l| {
            // h (1 + q + ... + q^(T-1)) mod l
            let (mut s, mut qi) = (0u64, 1u64);
            for _ in 0..t {
                s = (s + qi) % l;
                qi = qi * (q % l) % l;
            }
            (h % l) * s % l == 0
        }),
        divides_residue_units: l.map(|l| pow_mod(q, t as u64, l) == 1 % l),
    }
}

/// The prime `l` and the constraint `T = 0 mod (l - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CftParams {
    pub p: u64,
    pub q: u64,
    pub group_order: u64,
    pub h: u64,
    pub l: u64,
    pub t_step: u64,
}

impl CftParams {
    /// The least admissible `T` that is at least `min`.
    pub fn t_for(&self, min: u64) -> u64 {
        min.max(1).div_ceil(self.t_step) * self.t_step
    }
}

impl fmt::Display for CftParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "l={} T=0 mod {} (p={} q={} |G|={} h={})",
            self.l, self.t_step, self.p, self.q, self.group_order, self.h
        )
    }
}

/// The least odd prime coprime to `p`, `q - 1`, `|G|` and `h`.
pub fn choose_parameters(p: u64, q: u64, group_order: u64, h: u64) -> CftParams {
    let l = (3..)
        .step_by(2)
        .find(|&l| is_prime(l) && [p, q - 1, group_order, h].iter().all(|&n| gcd(l, n) == 1))
        .expect("infinitely many primes");
    CftParams {
        p,
        q,
        group_order,
        h,
        l,
        t_step: l - 1,
    }
}
