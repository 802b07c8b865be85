//! The constant-field part of the `l`-torsion field of a curve over
//! `F_q(t)`: the subgroup `H` of `F_l^*` generated by `q`.

use std::fmt;

use super::EllipticError;
use crate::exactalg::numtheory::{is_prime, multiplicative_order};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaReport {
    pub q: u64,
    pub l: u64,
    /// Elements of `H = <q mod l>`, ascending.
    pub h: Vec<u64>,
    /// `H` is trivial, so the extension is geometric.
    pub trivial: bool,
    /// Galois group of the geometric part.
    pub geometric_group: String,
    /// Its quotient by `+-1`.
    pub projective_group: String,
}

impl fmt::Display for IgusaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.h.iter().map(|v| v.to_string()).collect();
        writeln!(
            f,
            "q={} l={} H=<{}>={{{}}} |H|={}",
            self.q,
            self.l,
            self.q % self.l,
            h.join(", "),
            self.h.len()
        )?;
        write!(
            f,
            "trivial={} geometric={} projective={}",
            self.trivial, self.geometric_group, self.projective_group
        )
    }
}

pub fn igusa_criterion(q: u64, l: u64) -> Result<IgusaReport, EllipticError> {
    if l == 2 || !is_prime(l) || q % l == 0 {
        return Err(EllipticError::BadPrime(l));
    }
    let order = multiplicative_order(q % l, l).ok_or(EllipticError::BadPrime(l))?;
    let mut h: Vec<u64> = (0..order)
        .scan(1u64, |acc, _| {
            let v = *acc;
            *acc = *acc * (q % l) % l;
            Some(v)
        })
        .collect();
    h.sort_unstable();
    Ok(IgusaReport {
        q,
        l,
        trivial: order == 1,
        geometric_group: format!("SL2(F_{l})"),
        projective_group: format!("PSL2(F_{l})"),
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = igusa_criterion(29, 7).unwrap();
        assert!(r.trivial);
        assert_eq!(r.projective_group, "PSL2(F_7)");
        assert!(igusa_criterion(7, 3).unwrap().trivial);
        let r = igusa_criterion(2, 7).unwrap();
        assert!(!r.trivial);
        assert_eq!(r.h, vec![1, 2, 4]);
        assert_eq!(igusa_criterion(7, 7), Err(EllipticError::BadPrime(7)));
        assert_eq!(igusa_criterion(7, 2), Err(EllipticError::BadPrime(2)));
    }
}
