//! Test-side oracles written independently of the library algorithms.
#![allow(dead_code)]

use bimlab_core::order::FinitePoset;
use bimlab_core::OrderedAlgebra;

/// Residuated, lattice order, unit on top, multiplication is meet.
pub fn is_brouwerian(a: &OrderedAlgebra) -> bool {
    let n = a.size();
    a.is_lattice_ordered()
        && a.is_residuated()
        && a.one == a.top()
        && (0..n).all(|x| (0..n).all(|y| Some(a.mul(x, y)) == a.meet(x, y)))
}

/// Brouwerian with a Boolean interval `[0, 1]`.
pub fn is_boolean_pointed(a: &OrderedAlgebra) -> bool {
    if !is_brouwerian(a) {
        return false;
    }
    let (z, o) = (a.zero(), a.one());
    let interval: Vec<usize> = (0..a.size()).filter(|&x| a.leq(z, x) && a.leq(x, o)).collect();
    interval
        .iter()
        .all(|&x| interval.iter().any(|&y| a.meet(x, y) == Some(z) && a.join(x, y) == Some(o)))
}

/// Discrete order, `+ = ·`, `0 = 1`, inverses.
pub fn is_group(a: &OrderedAlgebra) -> bool {
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| a.leq(x, y) == (x == y) && a.mul(x, y) == a.add(x, y)))
        && a.one == a.zero
        && (0..n).all(|x| (0..n).any(|y| a.mul(x, y) == a.one()))
}

/// Closed sets of the frame on `A²` (`⟨a,b⟩ ⊑ ⟨c,d⟩ ⟺ a·d ≤ b+c`), enumerated bottom-up
/// by adding one pair at a time and closing, without any quotient.
pub fn naive_completion_order(a: &OrderedAlgebra) -> FinitePoset {
    let n = a.size();
    let m = n * n;
    let sq = |p: usize, q: usize| a.leq(a.mul(p / n, q % n), a.add(p % n, q / n));
    let close = |x: &[bool]| -> Vec<bool> {
        let upper: Vec<usize> = (0..m).filter(|&q| (0..m).all(|p| !x[p] || sq(p, q))).collect();
        (0..m).map(|p| upper.iter().all(|&q| sq(p, q))).collect()
    };
    let mut sets = vec![close(&vec![false; m])];
    let mut i = 0;
    while i < sets.len() {
        for p in 0..m {
            if !sets[i][p] {
                let mut x = sets[i].clone();
                x[p] = true;
                let c = close(&x);
                if !sets.contains(&c) {
                    sets.push(c);
                }
            }
        }
        i += 1;
    }
    let k = sets.len();
    FinitePoset::from_fn(k, None, |x, y| (0..m).all(|p| !sets[x][p] || sets[y][p])).unwrap()
}

/// Every semilattice-ordered monoid on at most `max` elements, as (join table, mul table),
/// up to nothing: all labelled structures.
pub fn sl_monoids(max: usize) -> Vec<(usize, Vec<usize>, Vec<usize>, usize)> {
    let mut out = Vec::new();
    for n in 1..=max {
        let cells = n * n;
        let mut joins = Vec::new();
        let mut t = vec![0usize; cells];
        loop {
            let j = |x: usize, y: usize| t[x * n + y];
            let ok = (0..n).all(|x| j(x, x) == x)
                && (0..n).all(|x| (0..n).all(|y| j(x, y) == j(y, x)))
                && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| j(j(x, y), z) == j(x, j(y, z)))));
            if ok {
                joins.push(t.clone());
            }
            if !odometer(&mut t, n) {
                break;
            }
        }
        let mut muls = Vec::new();
        let mut t = vec![0usize; cells];
        loop {
            let mu = |x: usize, y: usize| t[x * n + y];
            let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| mu(mu(x, y), z) == mu(x, mu(y, z)))));
            if assoc {
                if let Some(u) = (0..n).find(|&u| (0..n).all(|x| mu(u, x) == x && mu(x, u) == x)) {
                    muls.push((t.clone(), u));
                }
            }
            if !odometer(&mut t, n) {
                break;
            }
        }
        for j in &joins {
            for (mt, u) in &muls {
                let jn = |x: usize, y: usize| j[x * n + y];
                let mu = |x: usize, y: usize| mt[x * n + y];
                let dist = (0..n).all(|x| {
                    (0..n).all(|y| {
                        (0..n).all(|z| mu(x, jn(y, z)) == jn(mu(x, y), mu(x, z)) && mu(jn(y, z), x) == jn(mu(y, x), mu(z, x)))
                    })
                });
                if dist {
                    out.push((n, j.clone(), mt.clone(), *u));
                }
            }
        }
    }
    out
}

fn odometer(t: &mut [usize], n: usize) -> bool {
    for c in t.iter_mut() {
        *c += 1;
        if *c < n {
            return true;
        }
        *c = 0;
    }
    false
}

/// An sℓ-monoid as an ordered algebra (`x ≤ y ⟺ x ∨ y = y`, multiplication only).
pub fn sl_monoid_algebra(n: usize, join: &[usize], mul: &[usize], unit: usize) -> OrderedAlgebra {
    let p = FinitePoset::from_fn(n, None, |x, y| join[x * n + y] == y).unwrap();
    OrderedAlgebra::new("slm", p, Some(mul.to_vec()), Some(unit), None, None, false)
}
