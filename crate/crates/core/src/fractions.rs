//! Transformation functions, the complemented bimonoid of fractions (as a quotient
//! of `A²` and, for normal tables, on normal pairs), `π`, `σ÷` and the round trips.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::algebra::{check_morphism, InteriorOperator, InvolutiveAlgebra, MorphismOptions, OrderedAlgebra};
use crate::error::{Error, Result};
use crate::order::FinitePoset;

/// `a·b̄ = α(a,b) + β(a,b)‾`; entries at `a·n + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationTable {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl TransformationTable {
    pub fn from_fns(n: usize, alpha: impl Fn(usize, usize) -> usize, beta: impl Fn(usize, usize) -> usize) -> Self {
        let mut t = TransformationTable { n, alpha: Vec::with_capacity(n * n), beta: Vec::with_capacity(n * n) };
        for a in 0..n {
            for b in 0..n {
                t.alpha.push(alpha(a, b));
                t.beta.push(beta(a, b));
            }
        }
        t
    }

    pub fn alpha(&self, a: usize, b: usize) -> usize {
        self.alpha[a * self.n + b]
    }

    pub fn beta(&self, a: usize, b: usize) -> usize {
        self.beta[a * self.n + b]
    }
}

/// `α = a`, `β = a→b`.
pub fn brouwerian_terms(alg: &OrderedAlgebra) -> Result<TransformationTable> {
    let imp = alg.residual_table()?;
    let n = alg.size();
    Ok(TransformationTable::from_fns(n, |a, _| a, |a, b| imp[a * n + b]))
}

/// `α = 0·a`, `β = a→b`.
pub fn boolean_pointed_terms(alg: &OrderedAlgebra) -> Result<TransformationTable> {
    let imp = alg.residual_table()?;
    let n = alg.size();
    Ok(TransformationTable::from_fns(n, |a, _| alg.mul(alg.zero(), a), |a, b| imp[a * n + b]))
}

/// `α = a`, `β = b`.
pub fn group_terms(alg: &OrderedAlgebra) -> TransformationTable {
    TransformationTable::from_fns(alg.size(), |a, _| a, |_, b| b)
}

fn pairs_where(n: usize, f: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| f(u, v)).collect()
}

/// Decides `a·b̄ = x+ȳ` in the completion: `a·y ≤ b+x` and
/// `u·y ≤ v+x & a·q ≤ b+p ⟹ u·q ≤ v+p`.
pub fn check_transformation_pair(alg: &OrderedAlgebra, a: usize, b: usize, x: usize, y: usize) -> bool {
    if !alg.leq(alg.mul(a, y), alg.add(b, x)) {
        return false;
    }
    let n = alg.size();
    let uv = pairs_where(n, |u, v| alg.leq(alg.mul(u, y), alg.add(v, x)));
    let pq = pairs_where(n, |p, q| alg.leq(alg.mul(a, q), alg.add(b, p)));
    uv.iter().all(|&(u, v)| pq.iter().all(|&(p, q)| alg.leq(alg.mul(u, q), alg.add(v, p))))
}

/// Residuated form: `y ≤ a→(b+x)` and `(a→(b+p))·(y→(x+q)) ≤ p+q`.
pub fn check_transformation_pair_residuated(alg: &OrderedAlgebra, a: usize, b: usize, x: usize, y: usize) -> Result<bool> {
    if !alg.leq(y, alg.residual(a, alg.add(b, x))?) {
        return Ok(false);
    }
    let n = alg.size();
    for p in 0..n {
        for q in 0..n {
            let l = alg.mul(alg.residual(a, alg.add(b, p))?, alg.residual(y, alg.add(x, q))?);
            if !alg.leq(l, alg.add(p, q)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn check_table(alg: &OrderedAlgebra, t: &TransformationTable) -> Result<()> {
    let n = alg.size();
    if t.n != n {
        return Err(Error::InvalidTransformation { a: 0, b: 0 });
    }
    for a in 0..n {
        for b in 0..n {
            if !check_transformation_pair(alg, a, b, t.alpha(a, b), t.beta(a, b)) {
                return Err(Error::InvalidTransformation { a, b });
            }
        }
    }
    Ok(())
}

/// Per pair: the terms `0·a`, `a→a·b` (residuated only), then `y = a→(b+x)` over `x`,
/// then the first `(x, y)` in lexicographic order. `None` iff some pair has no solution.
pub fn find_transformation(alg: &OrderedAlgebra) -> Option<TransformationTable> {
    alg.require_commutative_bimonoid().ok()?;
    let n = alg.size();
    let imp = alg.residual_table().ok();
    let mut alpha = Vec::with_capacity(n * n);
    let mut beta = Vec::with_capacity(n * n);
    let check = |a, b, x, y| check_transformation_pair(alg, a, b, x, y);
    for a in 0..n {
        for b in 0..n {
            let mut found = None;
            if let Some(imp) = &imp {
                let (x, y) = (alg.mul(alg.zero(), a), imp[a * n + alg.mul(a, b)]);
                if check(a, b, x, y) {
                    found = Some((x, y));
                }
                if found.is_none() {
                    found = (0..n).map(|x| (x, imp[a * n + alg.add(b, x)])).find(|&(x, y)| check(a, b, x, y));
                }
            }
            if found.is_none() {
                found = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| check(a, b, x, y));
            }
            let (x, y) = found?;
            alpha.push(x);
            beta.push(y);
        }
    }
    Some(TransformationTable { n, alpha, beta })
}

/// `π⟨a,b⟩ = ⟨β→α, a→b⟩`.
pub fn pi(alg: &OrderedAlgebra, t: &TransformationTable, a: usize, b: usize) -> Result<(usize, usize)> {
    let r = |x, y| alg.residual(x, y).map_err(|_| Error::NotResiduated);
    Ok((r(t.beta(a, b), t.alpha(a, b))?, r(a, b)?))
}

/// The full `π` table, row `a`, column `b`.
pub fn pi_table(alg: &OrderedAlgebra, t: &TransformationTable) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = alg.size();
    (0..n).map(|a| (0..n).map(|b| pi(alg, t, a, b)).collect()).collect()
}

/// `a→(b+x) = (β→α)→((a→b)+x)` for all `a, b, x`.
pub fn check_normal(alg: &OrderedAlgebra, t: &TransformationTable) -> Result<bool> {
    let imp = alg.residual_table().map_err(|_| Error::NotResiduated)?;
    let n = alg.size();
    let r = |x: usize, y: usize| imp[x * n + y];
    for a in 0..n {
        for b in 0..n {
            let s = r(t.beta(a, b), t.alpha(a, b));
            for x in 0..n {
                if r(a, alg.add(b, x)) != r(s, alg.add(r(a, b), x)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn pair_name(alg: &OrderedAlgebra, (a, b): (usize, usize)) -> String {
    format!("{}|{}", alg.elem_name(a), alg.elem_name(b))
}

/// Quotient of `A²` by the preorder; classes listed by their lex-least pair.
#[derive(Debug, Clone)]
pub struct FractionsQuotient {
    pub algebra: InvolutiveAlgebra,
    pub embed: Vec<usize>,
    pub reps: Vec<(usize, usize)>,
    /// Class of `⟨a,b⟩` at `a·n + b`.
    pub class_of: Vec<usize>,
    /// `σ÷`, present when `A` is residuated.
    pub sigma: Option<Vec<usize>>,
}

impl FractionsQuotient {
    pub fn class(&self, a: usize, b: usize) -> usize {
        self.class_of[a * self.embed.len() + b]
    }
}

pub fn fractions_quotient(alg: &OrderedAlgebra, t: &TransformationTable) -> Result<FractionsQuotient> {
    alg.require_commutative_bimonoid()?;
    check_table(alg, t)?;
    let n = alg.size();
    // ⟨a,b⟩ ≼ ⟨c,d⟩ ⟺ S(c,d) ⊆ S(a,b) with S(a,b) = {(x,y) : x·a ≤ y+b}
    let profile = |a: usize, b: usize| {
        let mut s = FixedBitSet::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                s.set(x * n + y, alg.leq(alg.mul(x, a), alg.add(y, b)));
            }
        }
        s
    };
    let profiles: Vec<FixedBitSet> = (0..n * n).map(|p| profile(p / n, p % n)).collect();
    let mut seen: HashMap<&FixedBitSet, usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(n * n);
    let mut reps = Vec::new();
    for (p, s) in profiles.iter().enumerate() {
        let next = reps.len();
        let c = *seen.entry(s).or_insert(next);
        if c == next {
            reps.push((p / n, p % n));
        }
        class_of.push(c);
    }
    let k = reps.len();
    let cls = |a: usize, b: usize| class_of[a * n + b];
    let rep_profile = |i: usize| &profiles[reps[i].0 * n + reps[i].1];
    let names: Vec<String> = reps.iter().map(|&p| pair_name(alg, p)).collect();
    let poset = FinitePoset::from_fn(k, Some(names), |i, j| rep_profile(j).is_subset(rep_profile(i)))?;
    let mut mul = Vec::with_capacity(k * k);
    let mut add = Vec::with_capacity(k * k);
    for &(a, b) in &reps {
        for &(c, d) in &reps {
            mul.push(cls(alg.mul(a, c), alg.add(b, d)));
            let (b1, b2) = (t.beta(a, b), t.beta(c, d));
            let (a1, a2) = (t.alpha(a, b), t.alpha(c, d));
            let (p, q) = (alg.mul(b1, b2), alg.add(a1, a2));
            add.push(cls(t.beta(p, q), t.alpha(p, q)));
        }
    }
    let comp: Vec<usize> = reps.iter().map(|&(a, b)| cls(t.beta(a, b), t.alpha(a, b))).collect();
    let one = cls(alg.one(), alg.zero());
    let zero = cls(alg.zero(), alg.zero());
    let base = OrderedAlgebra::new(format!("{}^div", alg.name), poset, Some(mul), Some(one), Some(add), Some(zero), false)
        .with_inferred_lattice();
    let algebra = InvolutiveAlgebra { base, comp };
    // congruence: operations on arbitrary members agree with those on representatives
    for p in 0..n * n {
        let (a, b) = (p / n, p % n);
        if algebra.comp[class_of[p]] != cls(t.beta(a, b), t.alpha(a, b)) {
            return Err(Error::InvalidTransformation { a, b });
        }
        for (j, &(c, d)) in reps.iter().enumerate() {
            if algebra.base.mul(class_of[p], j) != cls(alg.mul(a, c), alg.add(b, d)) {
                return Err(Error::InvalidTransformation { a, b });
            }
        }
    }
    algebra.validate()?;
    let embed: Vec<usize> = (0..n).map(|a| cls(a, alg.zero())).collect();
    check_morphism(&embed, alg, &algebra.base, MorphismOptions { embedding: true, complete: false })
        .map_err(|m| Error::PreconditionViolated(format!("embedding: {m}")))?;
    let fb = &algebra.base;
    for a in 0..n {
        for b in 0..n {
            if fb.mul(embed[a], algebra.comp(embed[b])) != cls(a, b) {
                return Err(Error::InvalidTransformation { a, b });
            }
        }
    }
    let additive: Vec<usize> = (0..n * n).map(|p| fb.add(embed[p / n], algebra.comp(embed[p % n]))).collect();
    if let Some(e) = (0..k).find(|e| !additive.contains(e)) {
        return Err(Error::PreconditionViolated(format!("{} has no additive representation", fb.elem_name(e))));
    }
    let sigma = match alg.residual_table() {
        Ok(imp) => {
            let mut s = vec![usize::MAX; k];
            for p in 0..n * n {
                let (a, b) = (p / n, p % n);
                let v = embed[imp[t.beta(a, b) * n + t.alpha(a, b)]];
                let c = class_of[p];
                if s[c] != usize::MAX && s[c] != v {
                    return Err(Error::InvalidTransformation { a, b });
                }
                s[c] = v;
            }
            Some(s)
        }
        Err(_) => None,
    };
    Ok(FractionsQuotient { algebra, embed, reps, class_of, sigma })
}

/// Fractions on the normal pairs, with `σ÷` and `ι÷`.
#[derive(Debug, Clone)]
pub struct NormalFractions {
    pub algebra: InvolutiveAlgebra,
    pub pairs: Vec<(usize, usize)>,
    pub sigma: Vec<usize>,
    pub embed: Vec<usize>,
}

impl NormalFractions {
    pub fn index_of_pair(&self, a: usize, b: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (a, b))
    }

    pub fn interior(&self) -> InteriorOperator {
        InteriorOperator { algebra: self.algebra.clone(), sigma: self.sigma.clone() }
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

pub fn fractions_normal(alg: &OrderedAlgebra, t: &TransformationTable) -> Result<NormalFractions> {
    alg.require_commutative_bimonoid()?;
    if !check_normal(alg, t)? {
        return Err(Error::NotNormal("the normality equation fails".into()));
    }
    check_table(alg, t)?;
    let n = alg.size();
    let p = |a, b| pi(alg, t, a, b);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if p(a, b)? == (a, b) {
                pairs.push((a, b));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let at = |q: (usize, usize)| -> Result<usize> {
        index.get(&q).copied().ok_or_else(|| Error::NotNormal(format!("{} is not normal", pair_name(alg, q))))
    };
    let k = pairs.len();
    let names: Vec<String> = pairs.iter().map(|&q| pair_name(alg, q)).collect();
    let poset = FinitePoset::from_fn(k, Some(names), |i, j| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        alg.leq(a, c) && alg.leq(d, b)
    })?;
    let swap = |(a, b): (usize, usize)| (b, a);
    let mut mul = Vec::with_capacity(k * k);
    let mut add = Vec::with_capacity(k * k);
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            mul.push(at(p(alg.mul(a, c), alg.add(b, d))?)?);
            add.push(at(swap(p(alg.mul(b, d), alg.add(a, c))?))?);
        }
    }
    let comp = pairs.iter().map(|&q| at(swap(q))).collect::<Result<Vec<_>>>()?;
    let one = at(p(alg.one(), alg.zero())?)?;
    let zero = at(p(alg.zero(), alg.zero())?)?;
    let base = OrderedAlgebra::new(format!("{}^div", alg.name), poset, Some(mul), Some(one), Some(add), Some(zero), false)
        .with_inferred_lattice();
    let algebra = InvolutiveAlgebra { base, comp };
    algebra.validate()?;
    let fb = &algebra.base;
    if alg.lattice {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate() {
                let join = at(p(alg.join(a, c).unwrap(), alg.meet(b, d).unwrap())?)?;
                // De Morgan dual of the join
                let meet = at(swap(p(alg.join(b, d).unwrap(), alg.meet(a, c).unwrap())?))?;
                if fb.join(i, j) != Some(join) || fb.meet(i, j) != Some(meet) {
                    return Err(Error::NotNormal(format!("lattice operations disagree at ({i}, {j})")));
                }
            }
        }
    }
    let embed = (0..n).map(|a| at(p(a, alg.zero())?)).collect::<Result<Vec<_>>>()?;
    check_morphism(&embed, alg, fb, MorphismOptions { embedding: true, complete: false })
        .map_err(|m| Error::NotNormal(format!("embedding: {m}")))?;
    for a in 0..n {
        for b in 0..n {
            if fb.mul(embed[a], algebra.comp(embed[b])) != at(p(a, b)?)? {
                return Err(Error::NotNormal(format!("ι(a)·comp ι(b) ≠ π⟨a,b⟩ at ({a}, {b})")));
            }
        }
    }
    let sigma: Vec<usize> = pairs.iter().map(|&(a, _)| embed[a]).collect();
    let nf = NormalFractions { algebra, pairs, sigma, embed };
    nf.interior().check_normal()?;
    Ok(nf)
}

/// `σ÷⟨a,b⟩ = ι(a)` on normal pairs.
pub fn sigma_div(nf: &NormalFractions, elem: usize) -> usize {
    nf.sigma[elem]
}

/// The sub-bimonoid on `elems` (sorted) with its inclusion map.
pub fn subalgebra(alg: &OrderedAlgebra, elems: &[usize]) -> Result<OrderedAlgebra> {
    let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let k = elems.len();
    let at = |x: usize| pos.get(&x).copied().ok_or_else(|| Error::PreconditionViolated(format!("{} not in the subset", alg.elem_name(x))));
    let names: Vec<String> = elems.iter().map(|&x| alg.elem_name(x).to_string()).collect();
    let poset = FinitePoset::from_fn(k, Some(names), |i, j| alg.leq(elems[i], elems[j]))?;
    let mut mul = Vec::with_capacity(k * k);
    let mut add = Vec::with_capacity(k * k);
    for &x in elems {
        for &y in elems {
            mul.push(at(alg.mul(x, y))?);
            add.push(at(alg.add(x, y))?);
        }
    }
    let one = at(alg.one())?;
    let zero = at(alg.zero())?;
    Ok(OrderedAlgebra::new(format!("{}_sub", alg.name), poset, Some(mul), Some(one), Some(add), Some(zero), false)
        .with_inferred_lattice())
}

/// `Σ(B, σ)`: the image of `σ` as a sub-bimonoid, and the image list.
pub fn sigma_image(b: &InvolutiveAlgebra, sigma: &[usize]) -> Result<(OrderedAlgebra, Vec<usize>)> {
    let img: Vec<usize> = (0..sigma.len()).filter(|&x| sigma[x] == x).collect();
    Ok((subalgebra(&b.base, &img)?, img))
}

/// `a ↦ π⟨a,0⟩` is an isomorphism of `A` onto the `σ÷`-image.
pub fn check_unit_roundtrip(alg: &OrderedAlgebra, nf: &NormalFractions) -> std::result::Result<(), String> {
    let (_, img) = sigma_image(&nf.algebra, &nf.sigma).map_err(|e| e.to_string())?;
    let mut e = nf.embed.clone();
    e.sort_unstable();
    if e != img {
        return Err("unit map is not onto the σ÷-image".into());
    }
    check_morphism(&nf.embed, alg, &nf.algebra.base, MorphismOptions { embedding: true, complete: false })
}

/// `÷(Σ(B,σ)) ≅ (B,σ)` via `⟨a,b⟩ ↦ a·b̄`. Returns the counit on success.
pub fn check_counit_roundtrip(b: &InvolutiveAlgebra, sigma: &[usize]) -> std::result::Result<Vec<usize>, String> {
    let (a, img) = sigma_image(b, sigma).map_err(|e| e.to_string())?;
    let t = find_transformation(&a).ok_or("σ-image has no transformation functions")?;
    let nf = fractions_normal(&a, &t).map_err(|e| e.to_string())?;
    let bb = &b.base;
    let eps: Vec<usize> = nf.pairs.iter().map(|&(x, y)| bb.mul(img[x], b.comp(img[y]))).collect();
    let mut sorted = eps.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != bb.size() || eps.len() != bb.size() {
        return Err(format!("counit is not a bijection ({} pairs onto {} elements)", eps.len(), bb.size()));
    }
    check_morphism(&eps, &nf.algebra.base, bb, MorphismOptions { embedding: true, complete: false })?;
    for i in 0..eps.len() {
        if eps[nf.algebra.comp(i)] != b.comp(eps[i]) {
            return Err(format!("counit does not preserve comp at {}", nf.algebra.base.elem_name(i)));
        }
        if eps[nf.sigma[i]] != sigma[eps[i]] {
            return Err(format!("counit does not commute with σ at {}", nf.algebra.base.elem_name(i)));
        }
    }
    Ok(eps)
}

/// `⟨a,b⟩ ↦ ⟨h(a),h(b)⟩` is a homomorphism commuting with complement and `σ÷`.
pub fn check_functor(
    a1: &OrderedAlgebra,
    nf1: &NormalFractions,
    a2: &OrderedAlgebra,
    nf2: &NormalFractions,
    h: &[usize],
) -> std::result::Result<Vec<usize>, String> {
    check_morphism(h, a1, a2, MorphismOptions::default())?;
    let f = nf1
        .pairs
        .iter()
        .map(|&(a, b)| nf2.index_of_pair(h[a], h[b]).ok_or_else(|| format!("image of {} is not normal", pair_name(a1, (a, b)))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    check_morphism(&f, &nf1.algebra.base, &nf2.algebra.base, MorphismOptions::default())?;
    for i in 0..f.len() {
        if f[nf1.algebra.comp(i)] != nf2.algebra.comp(f[i]) || f[nf1.sigma[i]] != nf2.sigma[f[i]] {
            return Err(format!("lifted map fails at {}", nf1.algebra.base.elem_name(i)));
        }
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub unit: std::result::Result<(), String>,
    pub counit: std::result::Result<(), String>,
    pub identity_functor: std::result::Result<(), String>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.unit.is_ok() && self.counit.is_ok() && self.identity_functor.is_ok()
    }
}

/// Both round trips starting from `A`, plus the functor law on the identity.
pub fn roundtrip_checks(alg: &OrderedAlgebra) -> Result<RoundtripReport> {
    let t = find_transformation(alg).ok_or_else(|| Error::NotNormal("no transformation functions".into()))?;
    let nf = fractions_normal(alg, &t)?;
    let unit = check_unit_roundtrip(alg, &nf);
    let counit = check_counit_roundtrip(&nf.algebra, &nf.sigma).map(|_| ());
    let id: Vec<usize> = (0..alg.size()).collect();
    let identity_functor = check_functor(alg, &nf, alg, &nf, &id).and_then(|f| {
        if f.iter().enumerate().all(|(i, &x)| i == x) {
            Ok(())
        } else {
            Err("÷(id) is not the identity".into())
        }
    });
    Ok(RoundtripReport { unit, counit, identity_functor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    fn h5c() -> OrderedAlgebra {
        catalog("H5c").unwrap()
    }

    #[test]
    fn h5c_pi_examples() {
        let a = h5c();
        let t = find_transformation(&a).unwrap();
        let ix = |s: &str| a.index_of(s).unwrap();
        assert_eq!(pi(&a, &t, ix("c"), ix("bot")).unwrap(), (ix("1"), ix("bot")));
        assert_eq!(pi(&a, &t, ix("a"), ix("b")).unwrap(), (ix("a"), ix("b")));
        assert_eq!(pi(&a, &t, ix("a"), ix("c")).unwrap(), (ix("a"), ix("1")));
    }

    #[test]
    fn h5c_unified_terms_are_boolean_pointed() {
        let a = h5c();
        assert_eq!(find_transformation(&a).unwrap(), boolean_pointed_terms(&a).unwrap());
    }

    #[test]
    fn residuated_form_agrees() {
        for name in ["H5c", "L3", "chain:3:1", "sugihara:3"] {
            let a = catalog(name).unwrap();
            let n = a.size();
            for p in 0..n * n {
                for q in 0..n * n {
                    let (x, y, u, v) = (p / n, p % n, q / n, q % n);
                    assert_eq!(
                        check_transformation_pair(&a, x, y, u, v),
                        check_transformation_pair_residuated(&a, x, y, u, v).unwrap(),
                        "{name}"
                    );
                }
            }
        }
    }

    #[test]
    fn h5c_normal_and_quotient_sizes() {
        let a = h5c();
        let t = find_transformation(&a).unwrap();
        assert_eq!(fractions_normal(&a, &t).unwrap().size(), 10);
        assert_eq!(fractions_quotient(&a, &t).unwrap().algebra.size(), 10);
    }

    #[test]
    fn h5c_roundtrip() {
        assert!(roundtrip_checks(&h5c()).unwrap().passed());
    }
}
