//! Concrete permutation groups used throughout the examples.

use std::sync::Arc;

use super::group::PermGroup;
use super::perm::Perm;
use super::subgroup::Subgroup;
use crate::exactalg::numtheory::{is_prime, pow_mod};

fn build(degree: usize, gens: Vec<Perm>) -> Arc<PermGroup> {
    PermGroup::closure(degree, gens).expect("catalog group within bound")
}

fn cycle(n: usize, pts: &[u32]) -> Perm {
    Perm::from_cycles(n, &[pts]).expect("valid cycle")
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Arc<PermGroup> {
    let pts: Vec<u32> = (0..n as u32).collect();
    build(n, vec![cycle(n, &pts)])
}

/// `C_2 x C_2` acting regularly on 4 points.
pub fn klein_four() -> Arc<PermGroup> {
    build(
        4,
        vec![
            Perm::parse("(0 1)(2 3)", 4).unwrap(),
            Perm::parse("(0 2)(1 3)", 4).unwrap(),
        ],
    )
}

pub fn symmetric(n: usize) -> Arc<PermGroup> {
    if n < 2 {
        return build(n, vec![]);
    }
    let pts: Vec<u32> = (0..n as u32).collect();
    build(n, vec![cycle(n, &[0, 1]), cycle(n, &pts)])
}

pub fn alternating(n: usize) -> Arc<PermGroup> {
    if n < 3 {
        return build(n, vec![]);
    }
    let gens = (2..n as u32).map(|k| cycle(n, &[0, 1, k])).collect();
    build(n, gens)
}

/// Dihedral group of order `2n` on `n` points.
pub fn dihedral(n: usize) -> Arc<PermGroup> {
    let pts: Vec<u32> = (0..n as u32).collect();
    let refl =
        Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect()).unwrap();
    build(n, vec![cycle(n, &pts), refl])
}

/// Quaternion units as `(sign, unit)` with unit 0..4 = 1, i, j, k; point
/// `2*unit + sign` with sign 0 for `+`.
fn quat_mul(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    // unit products: row * column, as (sign, unit)
    const T: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (s, u) = T[a.1 as usize][b.1 as usize];
    ((a.0 + b.0 + s) % 2, u)
}

fn quat_point(x: (u32, u32)) -> u32 {
    2 * x.1 + x.0
}

fn left_mult(a: (u32, u32)) -> Perm {
    let images = (0..8u32)
        .map(|p| quat_point(quat_mul(a, (p % 2, p / 2))))
        .collect();
    Perm::from_images(images).unwrap()
}

/// `Q_8` in its left regular representation on 8 points. The generators
/// are left multiplication by `i` and by `j`.
pub fn quaternion() -> Arc<PermGroup> {
    build(8, vec![left_mult((0, 1)), left_mult((0, 2))])
}

/// Left multiplication by `i` and by `j`.
pub fn quaternion_generators() -> (Perm, Perm) {
    (left_mult((0, 1)), left_mult((0, 2)))
}

/// The cyclic subgroups `<i>` and `<j>` of [`quaternion`].
pub fn quaternion_subgroups(q: &Arc<PermGroup>) -> (Subgroup, Subgroup) {
    let (a, b) = quaternion_generators();
    (
        Subgroup::generated(q, vec![a]).unwrap(),
        Subgroup::generated(q, vec![b]).unwrap(),
    )
}

/// `PSL_2(F_p)` on the projective line `0..p-1, inf = p`, generated by
/// `x -> x + 1` and `x -> -1/x`.
pub fn psl2(p: u64) -> Arc<PermGroup> {
    assert!(is_prime(p) && p > 2);
    let n = p as usize + 1;
    let inf = p as u32;
    let shift: Vec<u32> = (0..p as u32)
        .map(|x| (x + 1) % p as u32)
        .chain([inf])
        .collect();
    let invert: Vec<u32> = (0..=p)
        .map(|x| match x {
            0 => inf,
            _ if x == p => 0,
            _ => ((p - pow_mod(x, p - 2, p)) % p) as u32,
        })
        .collect();
    build(
        n,
        vec![
            Perm::from_images(shift).unwrap(),
            Perm::from_images(invert).unwrap(),
        ],
    )
}

/// Look up a catalog group by name: `C<n>`, `V4`, `S<n>`, `A<n>`, `D<n>`,
/// `Q8`, `PSL2(<p>)`.
pub fn by_name(name: &str) -> Option<Arc<PermGroup>> {
    let name = name.trim();
    let num = |s: &str| s.parse::<usize>().ok();
    if name == "Q8" {
        return Some(quaternion());
    }
    if name == "V4" {
        return Some(klein_four());
    }
    if let Some(p) = name.strip_prefix("PSL2(").and_then(|s| s.strip_suffix(')')) {
        let p = num(p)? as u64;
        return (is_prime(p) && p > 2 && p < 40).then(|| psl2(p));
    }
    let (head, tail) = name.split_at(1);
    let k = num(tail)?;
    if k == 0 || k > 12 {
        return None;
    }
    match head {
        "C" => Some(cyclic(k)),
        "S" if k <= 8 => Some(symmetric(k)),
        "A" if k <= 8 => Some(alternating(k)),
        "D" => Some(dihedral(k)),
        _ => None,
    }
}
