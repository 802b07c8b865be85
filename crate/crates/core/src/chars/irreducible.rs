//! Irreducible characters by decomposing induced and derived characters.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::classfn::ClassFunction;
use super::linear::{cyclic_character, linear_characters};
use super::CharError;
use crate::exactalg::numtheory::gcd;
use crate::exactalg::{CycloNum, Rational};
use crate::groups::{subgroup_classes, PermGroup, Subgroup};

struct Table {
    group: Arc<PermGroup>,
    irr: Vec<ClassFunction>,
    sum_sq: i128,
}

impl Table {
    fn complete(&self) -> bool {
        self.irr.len() == self.group.num_classes()
    }

    /// Remove the known constituents of `f`.
    fn peel(&self, f: &ClassFunction) -> Result<ClassFunction, CharError> {
        let mut r = f.clone();
        for chi in &self.irr {
            let m = f.inner_rational(chi)?;
            if !m.is_zero() {
                r = r.sub(&chi.scale(m))?;
            }
        }
        Ok(r)
    }

    /// Add `chi` and its Galois conjugates.
    fn add(&mut self, chi: ClassFunction) {
        let e = self.group.exponent();
        let mut orbit = vec![chi];
        for k in 2..e.max(2) {
            if gcd(k, e) == 1 {
                orbit.push(orbit[0].galois(k as i64));
            }
        }
        for c in orbit {
            if !self.irr.contains(&c) {
                self.sum_sq += c.degree_int().unwrap().pow(2);
                self.irr.push(c);
            }
        }
    }

    /// Accept a residual if it is an irreducible: positive degree and norm 1,
    /// or a multiple `k chi` of norm `k^2` when exactly one is missing.
    fn offer(&mut self, r: &ClassFunction) -> Result<bool, CharError> {
        if r.is_zero() {
            return Ok(false);
        }
        let norm = r.norm()?;
        let deg = r.degree().as_rational().unwrap_or_else(Rational::zero);
        if deg <= Rational::zero() || !norm.is_integer() {
            return Ok(false);
        }
        if norm.is_one() {
            self.add(r.clone());
            return Ok(true);
        }
        if self.group.num_classes() - self.irr.len() == 1 {
            let n = *norm.numer();
            let k = (n as f64).sqrt().round() as i128;
            if k * k == n {
                self.add(r.scale(Rational::new(1, k)));
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Characters induced from every linear character of every cyclic subgroup,
/// one subgroup per class of generators.
fn cyclic_inductions(g: &Arc<PermGroup>) -> Vec<ClassFunction> {
    let mut out = Vec::new();
    for class in g.classes().iter().skip(1) {
        let h = Subgroup::generated_by_indices(g, &[class.rep]);
        let o = g.elem_order(class.rep);
        for k in 0..o {
            let chi = cyclic_character(&h, class.rep, &CycloNum::root_of_unity(o, k as i64));
            out.push(chi.induce(&h).expect("subgroup of g"));
        }
    }
    out
}

/// The complete list of irreducible characters, trivial first, then by
/// degree. Candidates are induced from cyclic subgroups, then tensor
/// products and symmetric and exterior squares; if those fall short, linear
/// characters of every subgroup class are induced. The list is checked for
/// `sum deg^2 = |G|`, one character per class, and orthonormality.
pub fn irreducible_characters(g: &Arc<PermGroup>) -> Result<Vec<ClassFunction>, CharError> {
    let mut t = Table {
        group: g.clone(),
        irr: Vec::new(),
        sum_sq: 0,
    };
    for chi in linear_characters(g)? {
        t.add(chi);
    }
    let mut pool = vec![ClassFunction::permutation_character(g)];
    pool.extend(cyclic_inductions(g));

    let mut rounds = 0;
    while !t.complete() && rounds < 4 {
        rounds += 1;
        let mut residuals = Vec::new();
        for f in &pool {
            if t.complete() {
                break;
            }
            let r = t.peel(f)?;
            if !t.offer(&r)? && !r.is_zero() {
                residuals.push(r);
            }
        }
        // differences of residuals that share constituents
        let mut i = 0;
        while i < residuals.len() && !t.complete() {
            let a = t.peel(&residuals[i])?;
            for b in residuals.iter().skip(i + 1) {
                if t.complete() {
                    break;
                }
                let b = t.peel(b)?;
                if a.is_zero() || b.is_zero() || a.inner_rational(&b)?.is_zero() {
                    continue;
                }
                let d = a.sub(&b)?;
                if !t.offer(&d)? {
                    t.offer(&d.neg())?;
                }
            }
            i += 1;
        }
        // tensor products of known irreducibles
        let known = t.irr.clone();
        pool = Vec::new();
        for (i, a) in known.iter().enumerate() {
            pool.push(a.sym2());
            pool.push(a.alt2());
            for b in &known[i..] {
                pool.push(a.tensor(b)?);
            }
        }
        pool.extend(residuals);
    }

    if !t.complete() {
        for h in subgroup_classes(g, g.order() / 2) {
            if t.complete() {
                break;
            }
            if h.order() == 1 {
                continue;
            }
            for lambda in linear_characters(h.group())? {
                let r = t.peel(&lambda.induce(&h)?)?;
                t.offer(&r)?;
            }
        }
    }

    let order = g.order() as i128;
    if !t.complete() || t.sum_sq != order {
        return Err(CharError::IncompleteDecomposition {
            found: t.irr.len(),
            expected: g.num_classes(),
        });
    }
    let mut irr = t.irr;
    irr.sort_by_key(|c| (c.degree_int().unwrap(), !is_trivial(c)));
    for (i, a) in irr.iter().enumerate() {
        if !a.inverse_symmetric() {
            return Err(CharError::InvariantViolation(format!(
                "irreducible {} is not inverse-symmetric",
                a.render()
            )));
        }
        for (j, b) in irr.iter().enumerate() {
            let want = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            if a.inner_rational(b)? != want {
                return Err(CharError::InvariantViolation(
                    "irreducible characters are not orthonormal".into(),
                ));
            }
        }
    }
    Ok(irr)
}

fn is_trivial(c: &ClassFunction) -> bool {
    c.values().iter().all(|v| *v == CycloNum::one())
}
