//! Brute-force isomorphism search between small ordered algebras.

use crate::algebra::OrderedAlgebra;

/// Finds a bijection preserving and reflecting `≤` and preserving `·`, `+`, `1`, `0`.
/// `fixed` pins some images in advance.
pub fn find_isomorphism_with(a: &OrderedAlgebra, b: &OrderedAlgebra, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() || a.has_mul() != b.has_mul() || a.has_add() != b.has_add() {
        return None;
    }
    if a.one.is_some() != b.one.is_some() || a.zero.is_some() != b.zero.is_some() {
        return None;
    }
    let mut pins: Vec<(usize, usize)> = fixed.to_vec();
    if let (Some(x), Some(y)) = (a.one, b.one) {
        pins.push((x, y));
    }
    if let (Some(x), Some(y)) = (a.zero, b.zero) {
        pins.push((x, y));
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in &pins {
        if map[x] != usize::MAX && map[x] != y {
            return None;
        }
        if map[x] == usize::MAX && used[y] {
            return None;
        }
        map[x] = y;
        used[y] = true;
    }
    let sig = |alg: &OrderedAlgebra, x: usize| {
        let below = (0..n).filter(|&y| alg.leq(y, x)).count();
        let above = (0..n).filter(|&y| alg.leq(x, y)).count();
        (below, above)
    };
    let sa: Vec<_> = (0..n).map(|x| sig(a, x)).collect();
    let sb: Vec<_> = (0..n).map(|x| sig(b, x)).collect();
    let order: Vec<usize> = (0..n).filter(|&x| map[x] == usize::MAX).collect();
    let consistent = |map: &[usize]| {
        for x in 0..n {
            if map[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if map[y] == usize::MAX {
                    continue;
                }
                if a.leq(x, y) != b.leq(map[x], map[y]) {
                    return false;
                }
                if a.has_mul() {
                    let m = map[a.mul(x, y)];
                    if m != usize::MAX && m != b.mul(map[x], map[y]) {
                        return false;
                    }
                }
                if a.has_add() {
                    let m = map[a.add(x, y)];
                    if m != usize::MAX && m != b.add(map[x], map[y]) {
                        return false;
                    }
                }
            }
        }
        true
    };
    if !consistent(&map) {
        return None;
    }
    fn go(
        k: usize,
        order: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sa: &[(usize, usize)],
        sb: &[(usize, usize)],
        consistent: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for c in 0..map.len() {
            if used[c] || sa[x] != sb[c] {
                continue;
            }
            map[x] = c;
            used[c] = true;
            if consistent(map) && go(k + 1, order, map, used, sa, sb, consistent) {
                return true;
            }
            used[c] = false;
            map[x] = usize::MAX;
        }
        false
    }
    go(0, &order, &mut map, &mut used, &sa, &sb, &consistent).then_some(map)
}

pub fn find_isomorphism(a: &OrderedAlgebra, b: &OrderedAlgebra) -> Option<Vec<usize>> {
    find_isomorphism_with(a, b, &[])
}

pub fn is_isomorphic(a: &OrderedAlgebra, b: &OrderedAlgebra) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, ordinal_sum, sugihara};

    #[test]
    fn chain_is_isomorphic_to_itself_only_by_identity() {
        let a = catalog("chain:4:3").unwrap();
        assert_eq!(find_isomorphism(&a, &a), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn h5_variants_differ() {
        assert!(!is_isomorphic(&catalog("H5c").unwrap(), &catalog("H5one").unwrap()));
    }

    #[test]
    fn ordinal_sum_associative_on_singletons() {
        let s = sugihara(1).unwrap();
        let left = ordinal_sum(&[ordinal_sum(&[s.clone(), s.clone()]).unwrap(), s.clone()]);
        // an ordinal sum of a 2-chain with a singleton needs the 2-chain to be bi-integral
        let flat = ordinal_sum(&[s.clone(), s.clone(), s.clone()]).unwrap();
        let right = ordinal_sum(&[s.clone(), ordinal_sum(&[s.clone(), s]).unwrap()]).unwrap();
        assert!(is_isomorphic(&flat, &right));
        if let Ok(l) = left {
            assert!(is_isomorphic(&flat, &l));
        }
    }
}
