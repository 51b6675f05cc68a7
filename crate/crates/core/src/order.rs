//! Finite posets over dense indices `0..n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
    names: Vec<String>,
}

impl FinitePoset {
    /// Checks a square relation without closing it.
    pub fn validate(relation: &[Vec<bool>], names: Option<Vec<String>>) -> Result<Self> {
        let n = relation.len();
        let mut leq = Vec::with_capacity(n * n);
        for row in relation {
            if row.len() != n {
                return Err(Error::Format("relation matrix is not square".into()));
            }
            leq.extend_from_slice(row);
        }
        Self::from_flat(n, leq, names)
    }

    pub fn from_flat(n: usize, leq: Vec<bool>, names: Option<Vec<String>>) -> Result<Self> {
        assert_eq!(leq.len(), n * n);
        for x in 0..n {
            if !leq[x * n + x] {
                return Err(Error::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::NotAntisymmetric(x, y));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq[x * n + y] {
                    continue;
                }
                for z in 0..n {
                    if leq[y * n + z] && !leq[x * n + z] {
                        return Err(Error::NotTransitive(x, y, z));
                    }
                }
            }
        }
        let names = match names {
            Some(v) => {
                if v.len() != n {
                    return Err(Error::Format(format!("expected {n} names, got {}", v.len())));
                }
                for i in 0..n {
                    if v[..i].contains(&v[i]) {
                        return Err(Error::DuplicateName(v[i].clone()));
                    }
                }
                v
            }
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        Ok(FinitePoset { n, leq, names })
    }

    /// Reflexive-transitive closure of `pairs` (each `(x, y)` means `x <= y`).
    pub fn from_cover_pairs(n: usize, pairs: &[(usize, usize)], names: Option<Vec<String>>) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::Format(format!("cover pair ({x}, {y}) out of range")));
            }
            leq[x * n + y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_flat(n, leq, names)
    }

    pub fn from_fn(n: usize, names: Option<Vec<String>>, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut leq = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                leq.push(f(x, y));
            }
        }
        Self::from_flat(n, leq, names)
    }

    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, None, |x, y| x <= y).expect("chain")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_fn(n, None, |x, y| x == y).expect("antichain")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        let p = Self::from_flat(self.n, std::mem::take(&mut self.leq), Some(names))?;
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn relation(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|x| self.leq[x * self.n..(x + 1) * self.n].to_vec()).collect()
    }

    /// Least upper bound of `xs`; the empty set yields the bottom if any.
    pub fn join_set(&self, xs: &[usize]) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.n).filter(|&u| xs.iter().all(|&x| self.leq(x, u))).collect();
        ubs.iter().copied().find(|&u| ubs.iter().all(|&v| self.leq(u, v)))
    }

    pub fn meet_set(&self, xs: &[usize]) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.n).filter(|&l| xs.iter().all(|&x| self.leq(l, x))).collect();
        lbs.iter().copied().find(|&l| lbs.iter().all(|&v| self.leq(v, l)))
    }

    pub fn meet(&self, x: usize, y: usize) -> Result<usize> {
        self.meet_set(&[x, y]).ok_or(Error::NoBound(x, y))
    }

    pub fn join(&self, x: usize, y: usize) -> Result<usize> {
        self.join_set(&[x, y]).ok_or(Error::NoBound(x, y))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.join_set(&[])
    }

    pub fn top(&self) -> Option<usize> {
        self.meet_set(&[])
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.meet(x, y).is_ok() && self.join(x, y).is_ok()))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn dualize(&self) -> Self {
        let n = self.n;
        let leq = (0..n * n).map(|k| self.leq[(k % n) * n + k / n]).collect();
        FinitePoset { n, leq, names: self.names.clone() }
    }

    /// Cover relation: `x < y` with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(x, y) && !(0..self.n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn export_dot(&self, labels: Option<&[String]>) -> String {
        let labels = labels.unwrap_or(&self.names);
        let mut s = String::from("digraph {\n  rankdir=BT;\n");
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(s, "  \"{}\" [label=\"{}\"];", self.names[i], l.replace('"', "\\\""));
        }
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.names[x], self.names[y]);
        }
        s.push_str("}\n");
        s
    }

    /// Brute-force order isomorphism; returns `f` with `x <= y` iff `f(x) <= f(y)`.
    pub fn find_isomorphism(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        fn go(p: &FinitePoset, q: &FinitePoset, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
            if i == p.n {
                return true;
            }
            for c in 0..q.n {
                if used[c] {
                    continue;
                }
                let ok = (0..i).all(|j| p.leq(i, j) == q.leq(c, map[j]) && p.leq(j, i) == q.leq(map[j], c));
                if ok {
                    map[i] = c;
                    used[c] = true;
                    if go(p, q, i + 1, map, used) {
                        return true;
                    }
                    used[c] = false;
                }
            }
            false
        }
        go(self, other, 0, &mut map, &mut used).then_some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h5() -> FinitePoset {
        FinitePoset::from_cover_pairs(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)], None).unwrap()
    }

    #[test]
    fn singleton_is_valid() {
        let p = FinitePoset::validate(&[vec![true]], None).unwrap();
        assert_eq!(p.size(), 1);
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let r = vec![vec![true, true], vec![true, true]];
        assert_eq!(FinitePoset::validate(&r, None), Err(Error::NotAntisymmetric(0, 1)));
    }

    #[test]
    fn non_closed_relation_is_not_transitive() {
        let r = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        assert_eq!(FinitePoset::validate(&r, None), Err(Error::NotTransitive(0, 1, 2)));
    }

    #[test]
    fn h5_meets_and_joins() {
        let p = h5();
        assert_eq!(p.size(), 5);
        assert_eq!(p.meet(1, 2), Ok(0));
        assert_eq!(p.join(1, 2), Ok(3));
        assert!(p.is_lattice());
        for x in 0..5 {
            assert_eq!(p.meet(x, x), Ok(x));
        }
    }

    #[test]
    fn antichain_has_no_meet() {
        let p = FinitePoset::antichain(2);
        assert_eq!(p.meet(0, 1), Err(Error::NoBound(0, 1)));
    }

    #[test]
    fn dual_of_two_chain() {
        let p = FinitePoset::chain(2);
        let d = p.dualize();
        assert!(d.leq(1, 0) && !d.leq(0, 1));
        assert_eq!(d.dualize(), p);
    }

    #[test]
    fn chain_dot_has_n_minus_one_edges() {
        let dot = FinitePoset::chain(3).export_dot(None);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.starts_with("digraph {\n  rankdir=BT;"));
    }
}
