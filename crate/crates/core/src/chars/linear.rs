//! Degree-one characters through the abelianization.

use std::collections::HashSet;
use std::sync::Arc;

use super::classfn::ClassFunction;
use super::CharError;
use crate::exactalg::numtheory::lcm;
use crate::exactalg::CycloNum;
use crate::groups::lowindex::small_generating_set;
use crate::groups::{PermGroup, Subgroup};

/// Members of the commutator subgroup: the normal closure of the
/// commutators of the generators.
pub fn derived_subgroup(g: &PermGroup) -> Vec<usize> {
    let gens: Vec<usize> = g.gens().iter().map(|p| g.index_of(p).unwrap()).collect();
    let mut dgens = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            if c != 0 {
                dgens.push(c);
            }
        }
    }
    loop {
        let span = g.generated_indices(&dgens, g.order()).unwrap();
        let mut inside = vec![false; g.order()];
        for &x in &span {
            inside[x] = true;
        }
        let missing: Vec<usize> = dgens
            .iter()
            .flat_map(|&d| gens.iter().map(move |&s| (d, s)))
            .map(|(d, s)| g.conj(d, s))
            .filter(|&x| !inside[x])
            .collect();
        if missing.is_empty() {
            return span;
        }
        dgens.extend(missing);
    }
}

/// All homomorphisms `G -> C^*`, as class functions. Each is found as an
/// assignment of `Z/e` exponents to generators that extends consistently
/// along a breadth-first spanning tree; the count is checked against
/// `[G : G']`.
pub fn linear_characters(g: &Arc<PermGroup>) -> Result<Vec<ClassFunction>, CharError> {
    let n = g.order();
    let derived = derived_subgroup(g);
    let mut in_d = vec![false; n];
    for &x in &derived {
        in_d[x] = true;
    }
    let abel = n / derived.len();
    // order of x modulo G'
    let ord_mod = |x: usize| -> u64 {
        let mut y = x;
        let mut k = 1;
        while !in_d[y] {
            y = g.mul(y, x);
            k += 1;
        }
        k
    };
    let e = (0..n).fold(1, |acc, x| lcm(acc, ord_mod(x)));
    let gens = small_generating_set(g);
    if gens.is_empty() {
        return Ok(vec![ClassFunction::trivial(g)]);
    }
    let choices: Vec<Vec<u64>> = gens
        .iter()
        .map(|&s| {
            let o = ord_mod(s);
            (0..e).filter(|v| (v * o) % e == 0).collect()
        })
        .collect();

    // spanning tree
    let mut steps = vec![(usize::MAX, 0usize); n];
    steps[0] = (0, usize::MAX);
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        for (k, &s) in gens.iter().enumerate() {
            let x = g.mul(s, order[i]);
            if steps[x].0 == usize::MAX {
                steps[x] = (order[i], k);
                order.push(x);
            }
        }
        i += 1;
    }
    let table: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..n).map(|x| g.mul(s, x)).collect())
        .collect();

    let mut found: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let mut pick = vec![0usize; gens.len()];
    'outer: loop {
        let vals: Vec<u64> = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
        let mut phi = vec![0u64; n];
        for &x in &order[1..] {
            let (prev, k) = steps[x];
            phi[x] = (vals[k] + phi[prev]) % e;
        }
        let consistent = (0..n).all(|x| {
            gens.iter()
                .enumerate()
                .all(|(k, _)| phi[table[k][x]] == (vals[k] + phi[x]) % e)
        });
        if consistent {
            let reps: Vec<u64> = g.classes().iter().map(|c| phi[c.rep]).collect();
            if found.insert(reps.clone()) {
                out.push(ClassFunction::new(
                    g,
                    reps.iter()
                        .map(|&k| CycloNum::root_of_unity(e, k as i64))
                        .collect(),
                ));
            }
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                break 'outer;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
    if out.len() != abel {
        return Err(CharError::IncompleteDecomposition {
            found: out.len(),
            expected: abel,
        });
    }
    // trivial character first
    out.sort_by_key(|c| !c.values().iter().all(|v| *v == CycloNum::one()));
    Ok(out)
}

/// The character of the cyclic subgroup `<gen>` sending `gen` to `root`,
/// where `root` is a root of unity whose order divides that of `gen`.
pub fn cyclic_character(h: &Subgroup, gen: usize, root: &CycloNum) -> ClassFunction {
    let parent = h.parent();
    let hg = h.group();
    let o = parent.elem_order(gen);
    assert_eq!(hg.order() as u64, o, "subgroup must be generated by gen");
    let mut value = vec![None; hg.order()];
    let mut x = 0usize;
    let mut v = CycloNum::one();
    for _ in 0..o {
        let own = hg.index_of(parent.element(x)).unwrap();
        value[own] = Some(v.clone());
        x = parent.mul(gen, x);
        v = &v * root;
    }
    ClassFunction::from_fn(hg, |i| value[i].clone().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn counts() {
        assert_eq!(linear_characters(&catalog::klein_four()).unwrap().len(), 4);
        assert_eq!(linear_characters(&catalog::symmetric(3)).unwrap().len(), 2);
        assert_eq!(linear_characters(&catalog::quaternion()).unwrap().len(), 4);
        assert_eq!(linear_characters(&catalog::cyclic(6)).unwrap().len(), 6);
        assert_eq!(
            linear_characters(&catalog::alternating(5)).unwrap().len(),
            1
        );
        assert_eq!(derived_subgroup(&catalog::symmetric(4)).len(), 12);
    }

    #[test]
    fn linear_characters_are_orthonormal() {
        let g = catalog::alternating(4);
        let lin = linear_characters(&g).unwrap();
        for (i, a) in lin.iter().enumerate() {
            for (j, b) in lin.iter().enumerate() {
                let want = if i == j { 1 } else { 0 };
                assert_eq!(a.inner_rational(b).unwrap(), want.into());
            }
        }
    }
}
