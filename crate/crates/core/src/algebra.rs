//! Ordered algebras carrying a multiplicative monoid `(·, 1)` and an additive
//! monoid `(+, 0)` over a finite poset, plus involutive and interior-operator
//! expansions.

use crate::error::{Error, Result};
use crate::order::FinitePoset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedAlgebra {
    pub name: String,
    pub poset: FinitePoset,
    pub mul: Option<Vec<usize>>,
    pub one: Option<usize>,
    pub add: Option<Vec<usize>>,
    pub zero: Option<usize>,
    /// Declares lattice order with the distributive laws of `·` over `∨` and `+` over `∧`.
    pub lattice: bool,
    meet_t: Option<Vec<usize>>,
    join_t: Option<Vec<usize>>,
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            t.push(f(x, y));
        }
    }
    t
}

fn violation(axiom: &str, witness: Vec<usize>) -> Error {
    Error::AxiomViolation { axiom: axiom.to_string(), witness }
}

impl OrderedAlgebra {
    pub fn new(
        name: impl Into<String>,
        poset: FinitePoset,
        mul: Option<Vec<usize>>,
        one: Option<usize>,
        add: Option<Vec<usize>>,
        zero: Option<usize>,
        lattice: bool,
    ) -> Self {
        let n = poset.size();
        for t in [&mul, &add].into_iter().flatten() {
            assert_eq!(t.len(), n * n, "operation table must be n x n");
            assert!(t.iter().all(|&v| v < n), "operation table leaves the carrier");
        }
        let (meet_t, join_t) = if poset.is_lattice() {
            (
                Some(table(n, |x, y| poset.meet(x, y).unwrap())),
                Some(table(n, |x, y| poset.join(x, y).unwrap())),
            )
        } else {
            (None, None)
        };
        OrderedAlgebra { name: name.into(), poset, mul, one, add, zero, lattice, meet_t, join_t }
    }

    /// Builds tables from closures.
    pub fn from_fns(
        name: impl Into<String>,
        poset: FinitePoset,
        mul: impl Fn(usize, usize) -> usize,
        one: Option<usize>,
        add: Option<&dyn Fn(usize, usize) -> usize>,
        zero: Option<usize>,
        lattice: bool,
    ) -> Self {
        let n = poset.size();
        let m = table(n, mul);
        let a = add.map(|f| table(n, f));
        Self::new(name, poset, Some(m), one, a, zero, lattice)
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn elem_name(&self, x: usize) -> &str {
        self.poset.name(x)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.poset.index_of(name)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn has_add(&self) -> bool {
        self.add.is_some()
    }

    /// Both operations and both units present.
    pub fn is_bimonoid_signature(&self) -> bool {
        self.mul.is_some() && self.add.is_some() && self.one.is_some() && self.zero.is_some()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.as_ref().expect("multiplication")[x * self.size() + y]
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.as_ref().expect("addition")[x * self.size() + y]
    }

    pub fn one(&self) -> usize {
        self.one.expect("multiplicative unit")
    }

    pub fn zero(&self) -> usize {
        self.zero.expect("additive unit")
    }

    pub fn is_lattice_ordered(&self) -> bool {
        self.meet_t.is_some()
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet_t.as_ref().map(|t| t[x * self.size() + y])
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join_t.as_ref().map(|t| t[x * self.size() + y])
    }

    pub fn bottom(&self) -> Option<usize> {
        self.poset.bottom()
    }

    pub fn top(&self) -> Option<usize> {
        self.poset.top()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        let comm = |t: &Option<Vec<usize>>| {
            t.as_ref().map_or(true, |t| (0..n).all(|x| (0..n).all(|y| t[x * n + y] == t[y * n + x])))
        };
        comm(&self.mul) && comm(&self.add)
    }

    pub fn require_commutative_bimonoid(&self) -> Result<()> {
        if self.mul.is_none() || self.one.is_none() {
            return Err(Error::MissingOperation("multiplication with unit"));
        }
        if self.add.is_none() || self.zero.is_none() {
            return Err(Error::MissingOperation("addition with unit"));
        }
        if !self.is_commutative() {
            return Err(Error::NotCommutative);
        }
        Ok(())
    }

    /// Sets the lattice flag iff the order is a lattice and the distributive laws hold.
    pub fn with_inferred_lattice(mut self) -> Self {
        self.lattice = true;
        self.lattice = self.is_lattice_ordered() && self.satisfies_lattice_laws();
        self
    }

    /// Order dual: reverses `≤` and swaps `·` with `+`, `1` with `0`.
    pub fn dual(&self) -> Self {
        Self::new(
            format!("{}^d", self.name),
            self.poset.dualize(),
            self.add.clone(),
            self.zero,
            self.mul.clone(),
            self.one,
            self.lattice,
        )
    }

    /// Bisemigroup reduct: units dropped.
    pub fn without_units(&self) -> Self {
        OrderedAlgebra { one: None, zero: None, ..self.clone() }
    }

    /// Same algebra with elements renamed.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        let poset = self.poset.clone().with_names(names)?;
        Ok(Self::new(self.name.clone(), poset, self.mul.clone(), self.one, self.add.clone(), self.zero, self.lattice))
    }

    /// Checks, in order: `·` associativity, isotonicity, unit; the same for `+`;
    /// both hemidistributive laws; the lattice laws when declared. Witnesses are
    /// the lexicographically first failing tuple.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        if let Some(m) = &self.mul {
            check_monoid(n, &self.poset, m, self.one, "mul")?;
        }
        if let Some(a) = &self.add {
            check_monoid(n, &self.poset, a, self.zero, "add")?;
        }
        if self.mul.is_some() && self.add.is_some() {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !self.leq(self.mul(x, self.add(y, z)), self.add(self.mul(x, y), z)) {
                            return Err(violation("hemidistributivity", vec![x, y, z]));
                        }
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !self.leq(self.mul(self.add(z, y), x), self.add(z, self.mul(y, x))) {
                            return Err(violation("hemidistributivity-mirror", vec![x, y, z]));
                        }
                    }
                }
            }
        }
        if self.lattice {
            self.check_lattice_laws()?;
        }
        Ok(())
    }

    fn check_lattice_laws(&self) -> Result<()> {
        let n = self.size();
        if !self.is_lattice_ordered() {
            let (x, y) = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .find(|&(x, y)| self.poset.meet(x, y).is_err() || self.poset.join(x, y).is_err())
                .unwrap();
            return Err(violation("lattice", vec![x, y]));
        }
        let j = |x, y| self.join(x, y).unwrap();
        let m = |x, y| self.meet(x, y).unwrap();
        if self.mul.is_some() {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if self.mul(x, j(y, z)) != j(self.mul(x, y), self.mul(x, z))
                            || self.mul(j(y, z), x) != j(self.mul(y, x), self.mul(z, x))
                        {
                            return Err(violation("mul-distributes-over-join", vec![x, y, z]));
                        }
                    }
                }
            }
        }
        if self.add.is_some() {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if self.add(x, m(y, z)) != m(self.add(x, y), self.add(x, z))
                            || self.add(m(y, z), x) != m(self.add(y, x), self.add(z, x))
                        {
                            return Err(violation("add-distributes-over-meet", vec![x, y, z]));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff the poset is a lattice and the distributive laws of the
    /// declared operations hold.
    pub fn satisfies_lattice_laws(&self) -> bool {
        self.check_lattice_laws().is_ok()
    }

    /// Greatest `c` with `a·c ≤ b`.
    pub fn residual(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.size();
        let sols: Vec<usize> = (0..n).filter(|&c| self.leq(self.mul(a, c), b)).collect();
        sols.iter()
            .copied()
            .find(|&c| sols.iter().all(|&d| self.leq(d, c)))
            .ok_or(Error::NoResidual { a, b })
    }

    pub fn is_residuated(&self) -> bool {
        self.residual_table().is_ok()
    }

    pub fn residual_table(&self) -> Result<Vec<usize>> {
        if !self.has_mul() {
            return Err(Error::MissingOperation("multiplication"));
        }
        let n = self.size();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.residual(a, b)?);
            }
        }
        Ok(t)
    }

    /// All `y` with `x·y ≤ 0` and `1 ≤ x+y`; at most one by uniqueness of complements.
    pub fn complement_candidates(&self, x: usize) -> Vec<usize> {
        let (one, zero) = (self.one(), self.zero());
        (0..self.size())
            .filter(|&y| {
                self.leq(self.mul(x, y), zero)
                    && self.leq(self.mul(y, x), zero)
                    && self.leq(one, self.add(x, y))
                    && self.leq(one, self.add(y, x))
            })
            .collect()
    }

    pub fn complement_of(&self, x: usize) -> Result<usize> {
        self.complement_candidates(x).first().copied().ok_or(Error::NoComplement(x))
    }

    pub fn make_involutive(&self) -> Result<InvolutiveAlgebra> {
        let comp = (0..self.size())
            .map(|x| self.complement_of(x).map_err(|_| Error::NotComplemented(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(InvolutiveAlgebra { base: self.clone(), comp })
    }

    /// `(⋁X)·y = ⋁{x·y}` and the mirror law for every `y`.
    pub fn is_admissible_join(&self, subset: &[usize]) -> Result<bool> {
        let j = self.poset.join_set(subset).ok_or(Error::NoJoin)?;
        for y in 0..self.size() {
            let right: Vec<usize> = subset.iter().map(|&x| self.mul(x, y)).collect();
            let left: Vec<usize> = subset.iter().map(|&x| self.mul(y, x)).collect();
            if self.poset.join_set(&right) != Some(self.mul(j, y)) || self.poset.join_set(&left) != Some(self.mul(y, j)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dual notion: `(⋀X)+y = ⋀{x+y}`.
    pub fn is_admissible_meet(&self, subset: &[usize]) -> Result<bool> {
        let m = self.poset.meet_set(subset).ok_or(Error::NoJoin)?;
        for y in 0..self.size() {
            let right: Vec<usize> = subset.iter().map(|&x| self.add(x, y)).collect();
            let left: Vec<usize> = subset.iter().map(|&x| self.add(y, x)).collect();
            if self.poset.meet_set(&right) != Some(self.add(m, y)) || self.poset.meet_set(&left) != Some(self.add(y, m)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_mul_integral(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.leq(self.mul(x, y), x) && self.leq(self.mul(x, y), y)))
    }

    pub fn is_add_integral(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.leq(x, self.add(x, y)) && self.leq(y, self.add(x, y))))
    }

    pub fn is_bi_integral(&self) -> bool {
        self.is_mul_integral() && self.is_add_integral()
    }

    pub fn is_mul_idempotent(&self) -> bool {
        (0..self.size()).all(|x| self.mul(x, x) == x)
    }

    pub fn is_add_idempotent(&self) -> bool {
        (0..self.size()).all(|x| self.add(x, x) == x)
    }

    /// Idempotent bi-integral bisemigroups are exactly distributive lattices with `· = ∧`, `+ = ∨`.
    pub fn is_distributive_lattice_shortcut(&self) -> bool {
        self.has_mul() && self.has_add() && self.is_mul_idempotent() && self.is_add_idempotent() && self.is_bi_integral()
    }

    /// Carrier subsets as index lists, in binary counting order.
    pub fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let n = self.size();
        (0u64..(1u64 << n)).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
    }
}

fn check_monoid(n: usize, p: &FinitePoset, t: &[usize], unit: Option<usize>, tag: &str) -> Result<()> {
    let op = |x: usize, y: usize| t[x * n + y];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    return Err(violation(&format!("{tag}-associativity"), vec![x, y, z]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !p.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if !p.leq(op(x, z), op(y, z)) || !p.leq(op(z, x), op(z, y)) {
                    return Err(violation(&format!("{tag}-isotonicity"), vec![x, y, z]));
                }
            }
        }
    }
    if let Some(u) = unit {
        for x in 0..n {
            if op(u, x) != x || op(x, u) != x {
                return Err(violation(&format!("{tag}-unit"), vec![x]));
            }
        }
    }
    Ok(())
}

/// A bimonoid together with its complementation map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutiveAlgebra {
    pub base: OrderedAlgebra,
    pub comp: Vec<usize>,
}

impl InvolutiveAlgebra {
    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn comp(&self, x: usize) -> usize {
        self.comp[x]
    }

    /// Base axioms, then the complement predicate, double negation and De Morgan.
    pub fn validate(&self) -> Result<()> {
        let a = &self.base;
        a.validate()?;
        a.require_commutative_bimonoid()?;
        let n = a.size();
        for x in 0..n {
            let y = self.comp[x];
            if !a.leq(a.mul(x, y), a.zero()) || !a.leq(a.one(), a.add(x, y)) {
                return Err(violation("complement", vec![x]));
            }
            if self.comp[y] != x {
                return Err(violation("double-negation", vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.comp[a.mul(x, y)] != a.add(self.comp[y], self.comp[x]) {
                    return Err(violation("de-morgan-mul", vec![x, y]));
                }
                if self.comp[a.add(x, y)] != a.mul(self.comp[y], self.comp[x]) {
                    return Err(violation("de-morgan-add", vec![x, y]));
                }
            }
        }
        Ok(())
    }

    /// `a → b = ā + b`.
    pub fn residual(&self, a: usize, b: usize) -> usize {
        self.base.add(self.comp[a], b)
    }
}

/// An involutive algebra with a designated unary map `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorOperator {
    pub algebra: InvolutiveAlgebra,
    pub sigma: Vec<usize>,
}

impl InteriorOperator {
    pub fn sigma(&self, x: usize) -> usize {
        self.sigma[x]
    }

    pub fn image(&self) -> Vec<usize> {
        (0..self.sigma.len()).filter(|&x| self.sigma[x] == x).collect()
    }

    /// Isotone, decreasing, idempotent.
    pub fn check_laws(&self) -> Result<()> {
        let a = &self.algebra.base;
        let n = a.size();
        for x in 0..n {
            if !a.leq(self.sigma[x], x) {
                return Err(violation("sigma-decreasing", vec![x]));
            }
            if self.sigma[self.sigma[x]] != self.sigma[x] {
                return Err(violation("sigma-idempotent", vec![x]));
            }
            for y in 0..n {
                if a.leq(x, y) && !a.leq(self.sigma[x], self.sigma[y]) {
                    return Err(violation("sigma-isotone", vec![x, y]));
                }
            }
        }
        Ok(())
    }

    /// `σ(x)·σ(y) ≤ σ(x·y)` and `σ(1) = 1`.
    pub fn check_conucleus(&self) -> Result<()> {
        let a = &self.algebra.base;
        let n = a.size();
        if self.sigma[a.one()] != a.one() {
            return Err(violation("conucleus-unit", vec![a.one()]));
        }
        for x in 0..n {
            for y in 0..n {
                if !a.leq(a.mul(self.sigma[x], self.sigma[y]), self.sigma[a.mul(x, y)]) {
                    return Err(violation("conucleus", vec![x, y]));
                }
            }
        }
        Ok(())
    }

    /// Image is a sub-bimonoid and `x = σ(x)·comp(σ(comp x))` everywhere.
    pub fn check_normal(&self) -> Result<()> {
        self.check_laws()?;
        let a = &self.algebra.base;
        let n = a.size();
        let fixed = |x: usize| self.sigma[x] == x;
        for u in [a.one(), a.zero()] {
            if !fixed(u) {
                return Err(violation("sigma-image-units", vec![u]));
            }
        }
        let img = self.image();
        for &x in &img {
            for &y in &img {
                if !fixed(a.mul(x, y)) || !fixed(a.add(x, y)) {
                    return Err(violation("sigma-image-closed", vec![x, y]));
                }
                if a.lattice && (!fixed(a.meet(x, y).unwrap()) || !fixed(a.join(x, y).unwrap())) {
                    return Err(violation("sigma-image-closed", vec![x, y]));
                }
            }
        }
        for x in 0..n {
            let c = &self.algebra.comp;
            if a.mul(self.sigma[x], c[self.sigma[c[x]]]) != x {
                return Err(violation("normality", vec![x]));
            }
        }
        Ok(())
    }
}

/// Options for [`check_morphism`].
#[derive(Debug, Clone, Copy, Default)]
pub struct MorphismOptions {
    pub embedding: bool,
    pub complete: bool,
}

/// Returns `Err(description)` naming the first failure.
pub fn check_morphism(
    f: &[usize],
    src: &OrderedAlgebra,
    dst: &OrderedAlgebra,
    opts: MorphismOptions,
) -> std::result::Result<(), String> {
    let n = src.size();
    if f.len() != n || f.iter().any(|&v| v >= dst.size()) {
        return Err("map is not total into the target".into());
    }
    for x in 0..n {
        for y in 0..n {
            if src.leq(x, y) && !dst.leq(f[x], f[y]) {
                return Err(format!("order not preserved at ({x}, {y})"));
            }
            if opts.embedding && dst.leq(f[x], f[y]) && !src.leq(x, y) {
                return Err(format!("order not reflected at ({x}, {y})"));
            }
            if src.has_mul() && dst.has_mul() && f[src.mul(x, y)] != dst.mul(f[x], f[y]) {
                return Err(format!("multiplication not preserved at ({x}, {y})"));
            }
            if src.has_add() && dst.has_add() && f[src.add(x, y)] != dst.add(f[x], f[y]) {
                return Err(format!("addition not preserved at ({x}, {y})"));
            }
        }
    }
    if let (Some(u), Some(v)) = (src.one, dst.one) {
        if f[u] != v {
            return Err("multiplicative unit not preserved".into());
        }
    }
    if let (Some(u), Some(v)) = (src.zero, dst.zero) {
        if f[u] != v {
            return Err("additive unit not preserved".into());
        }
    }
    if opts.complete {
        for s in src.subsets() {
            let image: Vec<usize> = s.iter().map(|&x| f[x]).collect();
            if let Some(j) = src.poset.join_set(&s) {
                if dst.poset.join_set(&image) != Some(f[j]) {
                    return Err(format!("join of {s:?} not preserved"));
                }
            }
            if let Some(m) = src.poset.meet_set(&s) {
                if dst.poset.meet_set(&image) != Some(f[m]) {
                    return Err(format!("meet of {s:?} not preserved"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice_bimonoid(p: FinitePoset, add_join: bool) -> OrderedAlgebra {
        let top = p.top().unwrap();
        let bot = p.bottom().unwrap();
        let q = p.clone();
        let r = p.clone();
        let join = move |x, y| r.join(x, y).unwrap();
        OrderedAlgebra::from_fns(
            "t",
            p,
            move |x, y| q.meet(x, y).unwrap(),
            Some(top),
            if add_join { Some(&join) } else { None },
            if add_join { Some(bot) } else { None },
            false,
        )
    }

    fn m3() -> FinitePoset {
        FinitePoset::from_cover_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], None).unwrap()
    }

    #[test]
    fn m3_fails_hemidistributivity_at_atoms() {
        let a = lattice_bimonoid(m3(), true);
        assert_eq!(
            a.validate(),
            Err(Error::AxiomViolation { axiom: "hemidistributivity".into(), witness: vec![1, 2, 3] })
        );
    }

    #[test]
    fn m3_residual_of_atom_into_bottom_is_missing() {
        let a = lattice_bimonoid(m3(), true);
        assert_eq!(a.residual(1, 0), Err(Error::NoResidual { a: 1, b: 0 }));
        assert!(!a.is_residuated());
    }

    #[test]
    fn boolean_square_complement() {
        let p = FinitePoset::from_cover_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], None).unwrap();
        let a = lattice_bimonoid(p, true);
        a.validate().unwrap();
        assert_eq!(a.complement_of(1), Ok(2));
        assert_eq!(a.complement_of(a.one()), Ok(a.zero()));
        assert_eq!(a.complement_of(a.zero()), Ok(a.one()));
        let inv = a.make_involutive().unwrap();
        inv.validate().unwrap();
    }

    #[test]
    fn singleton_validates() {
        let p = FinitePoset::chain(1);
        let a = OrderedAlgebra::from_fns("one", p, |_, _| 0, Some(0), Some(&|_, _| 0), Some(0), true);
        a.validate().unwrap();
    }

    #[test]
    fn constant_map_is_not_an_embedding() {
        let a = lattice_bimonoid(FinitePoset::chain(2), false);
        let opts = MorphismOptions { embedding: true, complete: false };
        assert!(check_morphism(&[1, 1], &a, &a, opts).is_err());
        assert!(check_morphism(&[0, 1], &a, &a, opts).is_ok());
    }

    #[test]
    fn empty_join_admissible_when_bottom_absorbs() {
        let a = lattice_bimonoid(FinitePoset::chain(3), true);
        assert_eq!(a.is_admissible_join(&[]), Ok(true));
    }
}
