//! Involutive frames, their Galois algebras, and the complemented
//! Dedekind–MacNeille completion of a commutative bimonoid.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::algebra::{check_morphism, InvolutiveAlgebra, MorphismOptions, OrderedAlgebra};
use crate::error::{Error, Result};
use crate::order::FinitePoset;

pub const DEFAULT_SIZE_CAP: usize = 20_000;

/// Commutative involutive frame; `r∘ = ℓ∘` and `r⊕ = ℓ⊕`.
#[derive(Debug, Clone)]
pub struct GaloisFrame {
    pub l_names: Vec<String>,
    pub r_names: Vec<String>,
    pub circ: Vec<usize>,
    pub one_l: usize,
    pub oplus: Vec<usize>,
    pub zero_r: usize,
    pub sq: Vec<bool>,
    pub ell_circ: Vec<usize>,
    pub ell_oplus: Vec<usize>,
    /// `λ: A → L`, empty when the frame is not an A-frame.
    pub lambda: Vec<usize>,
    /// `ρ: A → R`.
    pub rho: Vec<usize>,
}

impl GaloisFrame {
    pub fn nl(&self) -> usize {
        self.l_names.len()
    }

    pub fn nr(&self) -> usize {
        self.r_names.len()
    }

    #[inline]
    pub fn sq(&self, x: usize, y: usize) -> bool {
        self.sq[x * self.nr() + y]
    }

    #[inline]
    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.circ[x * self.nl() + y]
    }

    #[inline]
    pub fn oplus(&self, y: usize, z: usize) -> usize {
        self.oplus[y * self.nr() + z]
    }

    pub fn empty_l(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.nl())
    }

    pub fn full_l(&self) -> FixedBitSet {
        let mut s = self.empty_l();
        s.insert_range(..);
        s
    }

    pub fn singleton_l(&self, x: usize) -> FixedBitSet {
        let mut s = self.empty_l();
        s.insert(x);
        s
    }

    /// `y^◁ = {x : x ⊑ y}`.
    pub fn column(&self, y: usize) -> FixedBitSet {
        let mut s = self.empty_l();
        for x in 0..self.nl() {
            if self.sq(x, y) {
                s.insert(x);
            }
        }
        s
    }

    /// `X^▷ = {y : X ⊑ y}`.
    pub fn right(&self, xs: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.nr());
        for y in 0..self.nr() {
            if xs.ones().all(|x| self.sq(x, y)) {
                out.insert(y);
            }
        }
        out
    }

    /// `Y^◁ = {x : x ⊑ Y}`.
    pub fn left(&self, ys: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_l();
        for x in 0..self.nl() {
            if ys.ones().all(|y| self.sq(x, y)) {
                out.insert(x);
            }
        }
        out
    }

    /// `X^▷◁`.
    pub fn closure_right(&self, xs: &FixedBitSet) -> FixedBitSet {
        self.left(&self.right(xs))
    }

    /// `Y^◁▷`.
    pub fn closure_left(&self, ys: &FixedBitSet) -> FixedBitSet {
        self.right(&self.left(ys))
    }

    pub fn circ_set(&self, xs: &FixedBitSet, ys: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_l();
        for x in xs.ones() {
            for y in ys.ones() {
                out.insert(self.circ(x, y));
            }
        }
        out
    }

    pub fn oplus_set(&self, ys: &FixedBitSet, zs: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.nr());
        for y in ys.ones() {
            for z in zs.ones() {
                out.insert(self.oplus(y, z));
            }
        }
        out
    }

    /// Monoid laws, commutativity and both nuclearity chains.
    pub fn check_nuclearity(&self) -> Result<()> {
        let (nl, nr) = (self.nl(), self.nr());
        let fail = |m: String| Err(Error::FrameAxiomViolation(m));
        for x in 0..nl {
            if self.circ(self.one_l, x) != x {
                return fail(format!("1∘ is not a unit at {}", self.l_names[x]));
            }
            for y in 0..nl {
                if self.circ(x, y) != self.circ(y, x) {
                    return fail(format!("∘ not commutative at ({}, {})", self.l_names[x], self.l_names[y]));
                }
                for z in 0..nl {
                    if self.circ(self.circ(x, y), z) != self.circ(x, self.circ(y, z)) {
                        return fail("∘ not associative".into());
                    }
                }
            }
        }
        for y in 0..nr {
            if self.oplus(self.zero_r, y) != y {
                return fail(format!("0⊕ is not a unit at {}", self.r_names[y]));
            }
            for z in 0..nr {
                if self.oplus(y, z) != self.oplus(z, y) {
                    return fail("⊕ not commutative".into());
                }
                for w in 0..nr {
                    if self.oplus(self.oplus(y, z), w) != self.oplus(y, self.oplus(z, w)) {
                        return fail("⊕ not associative".into());
                    }
                }
            }
        }
        for x in 0..nl {
            for y in 0..nl {
                for z in 0..nr {
                    let a = self.sq(self.circ(x, y), z);
                    let b = self.sq(y, self.oplus(self.ell_circ[x], z));
                    let c = self.sq(x, self.oplus(z, self.ell_circ[y]));
                    if a != b || a != c {
                        return fail(format!(
                            "∘-nuclearity at ({}, {}, {})",
                            self.l_names[x], self.l_names[y], self.r_names[z]
                        ));
                    }
                }
            }
        }
        for x in 0..nl {
            for y in 0..nr {
                for z in 0..nr {
                    let a = self.sq(x, self.oplus(y, z));
                    let b = self.sq(self.circ(x, self.ell_oplus[z]), y);
                    let c = self.sq(self.circ(self.ell_oplus[y], x), z);
                    if a != b || a != c {
                        return fail(format!(
                            "⊕-nuclearity at ({}, {}, {})",
                            self.l_names[x], self.r_names[y], self.r_names[z]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Identity, Cut, the Gentzen conditions for the signature of `a`, and faithfulness.
    /// Unit rules are skipped when `a` lacks the corresponding unit.
    pub fn check_a_frame(&self, a: &OrderedAlgebra) -> Result<()> {
        let n = a.size();
        let (nl, nr) = (self.nl(), self.nr());
        let (lam, rho) = (&self.lambda, &self.rho);
        let fail = |m: &str, w: String| Err(Error::FrameAxiomViolation(format!("{m} at {w}")));
        for x in 0..n {
            if !self.sq(lam[x], rho[x]) {
                return fail("Identity", a.elem_name(x).into());
            }
            for y in 0..n {
                if self.sq(lam[x], rho[y]) && !a.leq(x, y) {
                    return fail("faithfulness", format!("({}, {})", a.elem_name(x), a.elem_name(y)));
                }
            }
        }
        for g in 0..n {
            for x in 0..nl {
                if !self.sq(x, rho[g]) {
                    continue;
                }
                for y in 0..nr {
                    if self.sq(lam[g], y) && !self.sq(x, y) {
                        return fail("Cut", format!("({}, {}, {})", a.elem_name(g), self.l_names[x], self.r_names[y]));
                    }
                }
            }
        }
        if let Some(one) = a.one {
            if !self.sq(self.one_l, rho[one]) {
                return fail("1-right", String::new());
            }
            for y in 0..nr {
                if self.sq(self.one_l, y) && !self.sq(lam[one], y) {
                    return fail("1-left", self.r_names[y].clone());
                }
            }
        }
        if let Some(zero) = a.zero {
            if !self.sq(lam[zero], self.zero_r) {
                return fail("0-left", String::new());
            }
            for x in 0..nl {
                if self.sq(x, self.zero_r) && !self.sq(x, rho[zero]) {
                    return fail("0-right", self.l_names[x].clone());
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                let (m, s) = (a.mul(p, q), a.add(p, q));
                for x in 0..nl {
                    if self.sq(x, self.oplus(rho[p], rho[q])) && !self.sq(x, rho[s]) {
                        return fail("+-right", format!("({p}, {q}, {x})"));
                    }
                }
                for y in 0..nr {
                    if self.sq(self.circ(lam[p], lam[q]), y) && !self.sq(lam[m], y) {
                        return fail("·-left", format!("({p}, {q}, {y})"));
                    }
                }
                let lx: Vec<usize> = (0..nr).filter(|&y| self.sq(lam[p], y)).collect();
                let ly: Vec<usize> = (0..nr).filter(|&y| self.sq(lam[q], y)).collect();
                for &y1 in &lx {
                    for &y2 in &ly {
                        if !self.sq(lam[s], self.oplus(y1, y2)) {
                            return fail("+-left", format!("({p}, {q})"));
                        }
                    }
                }
                let rx: Vec<usize> = (0..nl).filter(|&x| self.sq(x, rho[p])).collect();
                let ry: Vec<usize> = (0..nl).filter(|&x| self.sq(x, rho[q])).collect();
                for &x1 in &rx {
                    for &x2 in &ry {
                        if !self.sq(self.circ(x1, x2), rho[m]) {
                            return fail("·-right", format!("({p}, {q})"));
                        }
                    }
                }
                if a.lattice {
                    let (j, mt) = (a.join(p, q).unwrap(), a.meet(p, q).unwrap());
                    for y in 0..nr {
                        if self.sq(lam[p], y) && self.sq(lam[q], y) && !self.sq(lam[j], y) {
                            return fail("∨-left", format!("({p}, {q})"));
                        }
                        if (self.sq(lam[p], y) || self.sq(lam[q], y)) && !self.sq(lam[mt], y) {
                            return fail("∧-left", format!("({p}, {q})"));
                        }
                    }
                    for x in 0..nl {
                        if self.sq(x, rho[p]) && self.sq(x, rho[q]) && !self.sq(x, rho[mt]) {
                            return fail("∧-right", format!("({p}, {q})"));
                        }
                        if (self.sq(x, rho[p]) || self.sq(x, rho[q])) && !self.sq(x, rho[j]) {
                            return fail("∨-right", format!("({p}, {q})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Identifies `L`-elements with equal rows and `R`-elements with equal columns.
    pub fn quotient(&self) -> GaloisFrame {
        let (nl, nr) = (self.nl(), self.nr());
        let row = |x: usize| (0..nr).map(|y| self.sq(x, y)).collect::<Vec<_>>();
        let col = |y: usize| (0..nl).map(|x| self.sq(x, y)).collect::<Vec<_>>();
        let (lcls, lreps) = classes(nl, row);
        let (rcls, rreps) = classes(nr, col);
        let (ql, qr) = (lreps.len(), rreps.len());
        let mut circ = Vec::with_capacity(ql * ql);
        for &x in &lreps {
            for &y in &lreps {
                circ.push(lcls[self.circ(x, y)]);
            }
        }
        let mut oplus = Vec::with_capacity(qr * qr);
        for &y in &rreps {
            for &z in &rreps {
                oplus.push(rcls[self.oplus(y, z)]);
            }
        }
        let mut sq = Vec::with_capacity(ql * qr);
        for &x in &lreps {
            for &y in &rreps {
                sq.push(self.sq(x, y));
            }
        }
        GaloisFrame {
            l_names: lreps.iter().map(|&x| self.l_names[x].clone()).collect(),
            r_names: rreps.iter().map(|&y| self.r_names[y].clone()).collect(),
            circ,
            one_l: lcls[self.one_l],
            oplus,
            zero_r: rcls[self.zero_r],
            sq,
            ell_circ: lreps.iter().map(|&x| rcls[self.ell_circ[x]]).collect(),
            ell_oplus: rreps.iter().map(|&y| lcls[self.ell_oplus[y]]).collect(),
            lambda: self.lambda.iter().map(|&x| lcls[x]).collect(),
            rho: self.rho.iter().map(|&y| rcls[y]).collect(),
        }
    }
}

fn classes<K: Eq + std::hash::Hash>(n: usize, key: impl Fn(usize) -> K) -> (Vec<usize>, Vec<usize>) {
    let mut seen: HashMap<K, usize> = HashMap::new();
    let mut cls = Vec::with_capacity(n);
    let mut reps = Vec::new();
    for i in 0..n {
        let k = key(i);
        let next = reps.len();
        let c = *seen.entry(k).or_insert(next);
        if c == next {
            reps.push(i);
        }
        cls.push(c);
    }
    (cls, reps)
}

/// The frame `W(A)`: `L = R = A²`, `⟨a,b⟩ ⊑ ⟨c,d⟩ ⟺ a·d ≤ b+c`.
/// Pair `⟨a,b⟩` sits at index `a·n + b`.
pub fn frame_of_bimonoid(a: &OrderedAlgebra) -> Result<GaloisFrame> {
    a.require_commutative_bimonoid()?;
    let n = a.size();
    let pair = |x: usize, y: usize| x * n + y;
    let split = |p: usize| (p / n, p % n);
    let nn = n * n;
    let mut circ = Vec::with_capacity(nn * nn);
    let mut oplus = Vec::with_capacity(nn * nn);
    for p in 0..nn {
        let (a1, b1) = split(p);
        for q in 0..nn {
            let (a2, b2) = split(q);
            circ.push(pair(a.mul(a1, a2), a.add(b1, b2)));
            oplus.push(pair(a.add(a1, a2), a.mul(b1, b2)));
        }
    }
    let mut sq = Vec::with_capacity(nn * nn);
    for p in 0..nn {
        let (x, y) = split(p);
        for q in 0..nn {
            let (c, d) = split(q);
            sq.push(a.leq(a.mul(x, d), a.add(y, c)));
        }
    }
    let swap: Vec<usize> = (0..nn).map(|p| pair(p % n, p / n)).collect();
    let names: Vec<String> = (0..nn).map(|p| format!("{}*~{}", a.elem_name(p / n), a.elem_name(p % n))).collect();
    let r_names: Vec<String> = (0..nn).map(|p| format!("{}+~{}", a.elem_name(p / n), a.elem_name(p % n))).collect();
    let f = GaloisFrame {
        l_names: names,
        r_names,
        circ,
        one_l: pair(a.one(), a.zero()),
        oplus,
        zero_r: pair(a.zero(), a.one()),
        sq,
        ell_circ: swap.clone(),
        ell_oplus: swap,
        lambda: (0..n).map(|x| pair(x, a.zero())).collect(),
        rho: (0..n).map(|x| pair(x, a.one())).collect(),
    };
    f.check_nuclearity()?;
    f.check_a_frame(a)?;
    Ok(f)
}

#[derive(Debug, Clone, Copy)]
pub struct CompletionOptions {
    pub quotient: bool,
    pub cap: usize,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions { quotient: true, cap: DEFAULT_SIZE_CAP }
    }
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub algebra: InvolutiveAlgebra,
    /// Closed subsets of `L` (of the possibly quotiented frame), ordered as the algebra.
    pub sets: Vec<FixedBitSet>,
    pub frame: GaloisFrame,
    /// `a ↦ ρ(a)^◁`; empty for frames without `ρ`.
    pub embed: Vec<usize>,
    /// Per element, the `L`-elements whose closures are the maximal principal sets below it.
    pub gen_index: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl CompletionResult {
    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    pub fn base(&self) -> &OrderedAlgebra {
        &self.algebra.base
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn export_dot(&self) -> String {
        self.base().poset.export_dot(Some(&self.labels))
    }
}

/// Enumerates closed sets as intersections of columns, then installs the operations.
pub fn galois_algebra(frame: &GaloisFrame, opts: CompletionOptions) -> Result<CompletionResult> {
    let frame = if opts.quotient { frame.quotient() } else { frame.clone() };
    let f = &frame;
    let mut index: HashMap<FixedBitSet, ()> = HashMap::new();
    let mut list: Vec<FixedBitSet> = Vec::new();
    let mut push = |s: FixedBitSet, list: &mut Vec<FixedBitSet>| -> Result<()> {
        if index.insert(s.clone(), ()).is_none() {
            list.push(s);
            if list.len() > opts.cap {
                return Err(Error::SizeCap(opts.cap));
            }
        }
        Ok(())
    };
    push(f.full_l(), &mut list)?;
    for y in 0..f.nr() {
        push(f.column(y), &mut list)?;
    }
    let mut i = 0;
    while i < list.len() {
        let mut j = 0;
        while j < i {
            let mut s = list[i].clone();
            s.intersect_with(&list[j]);
            push(s, &mut list)?;
            j += 1;
        }
        i += 1;
    }
    list.sort_by(|a, b| a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| a.ones().cmp(b.ones())));
    let pos: HashMap<FixedBitSet, usize> = list.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let k = list.len();
    let idx = |s: &FixedBitSet| pos[s];

    let poset = FinitePoset::from_fn(k, None, |x, y| list[x].is_subset(&list[y]))?;
    let mut mul = Vec::with_capacity(k * k);
    let mut add = Vec::with_capacity(k * k);
    let rights: Vec<FixedBitSet> = list.iter().map(|s| f.right(s)).collect();
    for x in 0..k {
        for y in 0..k {
            mul.push(idx(&f.closure_right(&f.circ_set(&list[x], &list[y]))));
            add.push(idx(&f.left(&f.oplus_set(&rights[x], &rights[y]))));
        }
    }
    let one = idx(&f.closure_right(&f.singleton_l(f.one_l)));
    let mut zr = FixedBitSet::with_capacity(f.nr());
    zr.insert(f.zero_r);
    let zero = idx(&f.left(&zr));
    let comp: Vec<usize> = list
        .iter()
        .map(|s| {
            let mut ys = FixedBitSet::with_capacity(f.nr());
            for x in s.ones() {
                ys.insert(f.ell_circ[x]);
            }
            idx(&f.left(&ys))
        })
        .collect();
    let embed: Vec<usize> = f.rho.iter().map(|&y| idx(&f.column(y))).collect();

    // principal sets x^▷◁ and the maximal ones below each element
    let principal: Vec<usize> = (0..f.nl()).map(|x| idx(&f.closure_right(&f.singleton_l(x)))).collect();
    let mut gen_index = Vec::with_capacity(k);
    for e in 0..k {
        let below: Vec<usize> = (0..f.nl()).filter(|&x| list[e].contains(x)).collect();
        let mut maxes: Vec<usize> = Vec::new();
        for &x in &below {
            let px = principal[x];
            let dominated = below.iter().any(|&y| principal[y] != px && list[px].is_subset(&list[principal[y]]));
            if !dominated && !maxes.iter().any(|&m| principal[m] == px) {
                maxes.push(x);
            }
        }
        gen_index.push(maxes);
    }
    let labels: Vec<String> = (0..k)
        .map(|e| match (0..f.nl()).find(|&x| principal[x] == e) {
            Some(x) => f.l_names[x].clone(),
            None => gen_index[e].iter().map(|&x| f.l_names[x].clone()).collect::<Vec<_>>().join(" v "),
        })
        .collect();
    let labels = dedupe(labels);
    let poset = poset.with_names(labels.clone())?;
    let alg = OrderedAlgebra::new("galois", poset, Some(mul), Some(one), Some(add), Some(zero), true);
    Ok(CompletionResult { algebra: InvolutiveAlgebra { base: alg, comp }, sets: list, frame, embed, gen_index, labels })
}

fn dedupe(mut labels: Vec<String>) -> Vec<String> {
    for i in 0..labels.len() {
        if labels[..i].contains(&labels[i]) || labels[i].is_empty() {
            labels[i] = format!("{}#{}", labels[i], i);
        }
    }
    labels
}

/// Generator sides: `Mul(a,b)` is `a·b̄`, `Add(a,b)` is `a+b̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    Mul(usize, usize),
    Add(usize, usize),
}

/// Decides `lhs ≤ rhs` in the completion from the tables of `a` alone.
pub fn compare_generators(a: &OrderedAlgebra, lhs: Gen, rhs: Gen) -> bool {
    let n = a.size();
    let le = |x: usize, y: usize| a.leq(x, y);
    match (lhs, rhs) {
        (Gen::Mul(p, q), Gen::Add(c, d)) => le(a.mul(p, d), a.add(q, c)),
        (Gen::Mul(p, q), Gen::Mul(c, d)) => {
            (0..n).all(|x| (0..n).all(|y| !le(a.mul(x, c), a.add(y, d)) || le(a.mul(x, p), a.add(y, q))))
        }
        (Gen::Add(p, q), Gen::Mul(c, d)) => {
            let left: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| le(a.mul(u, q), a.add(v, p))).collect();
            let right: Vec<(usize, usize)> =
                (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| le(a.mul(x, c), a.add(y, d))).collect();
            left.iter().all(|&(u, v)| right.iter().all(|&(x, y)| le(a.mul(u, x), a.add(v, y))))
        }
        (Gen::Add(p, q), Gen::Add(c, d)) => compare_generators(a, Gen::Mul(d, c), Gen::Mul(q, p)),
    }
}

/// Element of the completion denoted by a generator.
pub fn generator_element(c: &CompletionResult, g: Gen) -> usize {
    let b = c.base();
    match g {
        Gen::Mul(x, y) => b.mul(c.embed[x], c.algebra.comp(c.embed[y])),
        Gen::Add(x, y) => b.add(c.embed[x], c.algebra.comp(c.embed[y])),
    }
}

/// `frame_of_bimonoid` then `galois_algebra`, relabelled and checked for double density.
pub fn dm_completion(a: &OrderedAlgebra) -> Result<CompletionResult> {
    dm_completion_with(a, CompletionOptions::default())
}

pub fn dm_completion_with(a: &OrderedAlgebra, opts: CompletionOptions) -> Result<CompletionResult> {
    a.validate()?;
    let frame = frame_of_bimonoid(a)?;
    let mut c = galois_algebra(&frame, opts)?;
    relabel_bimonoid(a, &mut c)?;
    verify_completion(a, &c)?;
    Ok(c)
}

/// Labels prefer `x`, then `~y`, then the lex-least `a*~b`; other elements are
/// joins of their maximal generators.
fn relabel_bimonoid(a: &OrderedAlgebra, c: &mut CompletionResult) -> Result<()> {
    let n = a.size();
    let k = c.size();
    let mut gen_label: Vec<Option<(u8, String)>> = vec![None; k];
    for x in 0..n {
        let e = c.embed[x];
        gen_label[e].get_or_insert((0, a.elem_name(x).to_string()));
    }
    for y in 0..n {
        let e = c.algebra.comp(c.embed[y]);
        gen_label[e].get_or_insert((1, format!("~{}", a.elem_name(y))));
    }
    let mut gens = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let e = generator_element(c, Gen::Mul(p, q));
            gens.push(e);
            gen_label[e].get_or_insert((2, format!("{}*~{}", a.elem_name(p), a.elem_name(q))));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let b = &c.algebra.base;
    let mut labels = Vec::with_capacity(k);
    let mut gen_index = Vec::with_capacity(k);
    for e in 0..k {
        let below: Vec<usize> = gens.iter().copied().filter(|&g| b.leq(g, e)).collect();
        let mut maxes: Vec<usize> = below.iter().copied().filter(|&g| !below.iter().any(|&h| b.lt(g, h))).collect();
        maxes.sort_by(|&x, &y| gen_label[x].cmp(&gen_label[y]));
        let label = match &gen_label[e] {
            Some((_, l)) => l.clone(),
            None => maxes.iter().map(|&g| gen_label[g].as_ref().unwrap().1.clone()).collect::<Vec<_>>().join(" v "),
        };
        labels.push(label);
        gen_index.push(maxes);
    }
    let labels = dedupe(labels);
    c.algebra.base = c.algebra.base.renamed(labels.clone())?;
    c.algebra.base.name = format!("{}^D", a.name);
    c.labels = labels;
    c.gen_index = gen_index;
    Ok(())
}

trait Lt {
    fn lt(&self, x: usize, y: usize) -> bool;
}

impl Lt for OrderedAlgebra {
    fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }
}

/// Involutive axioms, completeness, double density, embedding, and (ℓ case) preservation of `∨`, `∧`.
pub fn verify_completion(a: &OrderedAlgebra, c: &CompletionResult) -> Result<()> {
    let fail = |m: String| Err(Error::FrameAxiomViolation(m));
    c.algebra.validate()?;
    let b = c.base();
    if !b.poset.is_lattice() {
        return fail("completion is not a lattice".into());
    }
    let n = a.size();
    let mut mul_gens = Vec::new();
    let mut add_gens = Vec::new();
    for p in 0..n {
        for q in 0..n {
            mul_gens.push(generator_element(c, Gen::Mul(p, q)));
            add_gens.push(generator_element(c, Gen::Add(p, q)));
        }
    }
    for e in 0..c.size() {
        let below: Vec<usize> = mul_gens.iter().copied().filter(|&g| b.leq(g, e)).collect();
        if b.poset.join_set(&below) != Some(e) {
            return fail(format!("{} is not a join of generators a*~b", c.label(e)));
        }
        let above: Vec<usize> = add_gens.iter().copied().filter(|&g| b.leq(e, g)).collect();
        if b.poset.meet_set(&above) != Some(e) {
            return fail(format!("{} is not a meet of generators a+~b", c.label(e)));
        }
    }
    let opts = MorphismOptions { embedding: true, complete: false };
    check_morphism(&c.embed, a, b, opts).map_err(|m| Error::FrameAxiomViolation(format!("embedding: {m}")))?;
    if a.lattice {
        for x in 0..n {
            for y in 0..n {
                let (j, m) = (a.join(x, y).unwrap(), a.meet(x, y).unwrap());
                if b.join(c.embed[x], c.embed[y]) != Some(c.embed[j]) || b.meet(c.embed[x], c.embed[y]) != Some(c.embed[m]) {
                    return fail(format!("embedding does not preserve lattice operations at ({x}, {y})"));
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunayamaReport {
    pub all_joins_admissible: bool,
    pub embedding_preserves_joins: bool,
    /// First subset (binary counting order) whose join is not admissible.
    pub non_admissible: Option<Vec<usize>>,
    /// First subset whose join the embedding fails to preserve.
    pub not_preserved: Option<Vec<usize>>,
}

impl FunayamaReport {
    pub fn equivalence_holds(&self) -> bool {
        self.all_joins_admissible == self.embedding_preserves_joins
    }
}

pub fn check_funayama(a: &OrderedAlgebra) -> Result<FunayamaReport> {
    let c = dm_completion(a)?;
    Ok(funayama_with(a, &c))
}

pub fn funayama_with(a: &OrderedAlgebra, c: &CompletionResult) -> FunayamaReport {
    let b = c.base();
    let mut non_admissible = None;
    let mut not_preserved = None;
    for s in a.subsets() {
        let Some(j) = a.poset.join_set(&s) else { continue };
        if non_admissible.is_none() && !a.is_admissible_join(&s).unwrap() {
            non_admissible = Some(s.clone());
        }
        let image: Vec<usize> = s.iter().map(|&x| c.embed[x]).collect();
        if not_preserved.is_none() && b.poset.join_set(&image) != Some(c.embed[j]) {
            not_preserved = Some(s.clone());
        }
    }
    FunayamaReport {
        all_joins_admissible: non_admissible.is_none(),
        embedding_preserves_joins: not_preserved.is_none(),
        non_admissible,
        not_preserved,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Unital completion of a commutative bisemigroup relative to an upset `F`,
/// a downset `I` and a sign.
pub fn dm_completion_bisemigroup(a: &OrderedAlgebra, f_set: &[usize], i_set: &[usize], alpha: Sign) -> Result<CompletionResult> {
    if !a.has_mul() || !a.has_add() {
        return Err(Error::MissingOperation("bisemigroup needs both operations"));
    }
    if !a.is_commutative() {
        return Err(Error::NotCommutative);
    }
    a.validate()?;
    let n = a.size();
    let in_f: Vec<bool> = (0..n).map(|x| f_set.contains(&x)).collect();
    let in_i: Vec<bool> = (0..n).map(|x| i_set.contains(&x)).collect();
    let bad = |m: String| Err(Error::IncompatibleFIAlpha(m));
    for x in 0..n {
        for y in 0..n {
            if in_f[x] && a.leq(x, y) && !in_f[y] {
                return bad("F is not an upset".into());
            }
            if in_i[y] && a.leq(x, y) && !in_i[x] {
                return bad("I is not a downset".into());
            }
            if in_f[x] && !a.leq(y, a.mul(y, x)) {
                return bad(format!("{} in F but {} > {}·{}", a.elem_name(x), a.elem_name(y), a.elem_name(y), a.elem_name(x)));
            }
            if in_i[x] && !a.leq(a.add(y, x), y) {
                return bad(format!("{} in I but {}+{} > {}", a.elem_name(x), a.elem_name(y), a.elem_name(x), a.elem_name(y)));
            }
        }
    }
    if (0..n).any(|x| in_f[x] && in_i[x]) && alpha == Sign::Minus {
        return bad("F and I meet, so alpha must be +".into());
    }
    // L: 0 = 1, 1+a = a, 1+n+b = ~b, 1+2n+a*n+b = a*~b; R likewise with 0, c, ~d, c+~d
    #[derive(Clone, Copy)]
    enum G {
        Unit,
        Pos(usize),
        Neg(usize),
        Pair(usize, usize),
    }
    let size = 1 + 2 * n + n * n;
    let dec = |i: usize| {
        if i == 0 {
            G::Unit
        } else if i <= n {
            G::Pos(i - 1)
        } else if i <= 2 * n {
            G::Neg(i - 1 - n)
        } else {
            let p = i - 1 - 2 * n;
            G::Pair(p / n, p % n)
        }
    };
    let enc = |g: G| match g {
        G::Unit => 0,
        G::Pos(x) => 1 + x,
        G::Neg(x) => 1 + n + x,
        G::Pair(x, y) => 1 + 2 * n + x * n + y,
    };
    // ∘ on L: positives multiply, negatives add under the bar
    let circ_g = |p: G, q: G| -> G {
        match (p, q) {
            (G::Unit, g) | (g, G::Unit) => g,
            (G::Pos(x), G::Pos(y)) => G::Pos(a.mul(x, y)),
            (G::Neg(x), G::Neg(y)) => G::Neg(a.add(x, y)),
            (G::Pos(x), G::Neg(y)) | (G::Neg(y), G::Pos(x)) => G::Pair(x, y),
            (G::Pos(x), G::Pair(c, d)) | (G::Pair(c, d), G::Pos(x)) => G::Pair(a.mul(x, c), d),
            (G::Neg(y), G::Pair(c, d)) | (G::Pair(c, d), G::Neg(y)) => G::Pair(c, a.add(y, d)),
            (G::Pair(x, y), G::Pair(c, d)) => G::Pair(a.mul(x, c), a.add(y, d)),
        }
    };
    // ⊕ on R: positives add, negatives multiply under the bar
    let oplus_g = |p: G, q: G| -> G {
        match (p, q) {
            (G::Unit, g) | (g, G::Unit) => g,
            (G::Pos(x), G::Pos(y)) => G::Pos(a.add(x, y)),
            (G::Neg(x), G::Neg(y)) => G::Neg(a.mul(x, y)),
            (G::Pos(x), G::Neg(y)) | (G::Neg(y), G::Pos(x)) => G::Pair(x, y),
            (G::Pos(x), G::Pair(c, d)) | (G::Pair(c, d), G::Pos(x)) => G::Pair(a.add(x, c), d),
            (G::Neg(y), G::Pair(c, d)) | (G::Pair(c, d), G::Neg(y)) => G::Pair(c, a.mul(y, d)),
            (G::Pair(x, y), G::Pair(c, d)) => G::Pair(a.add(x, c), a.mul(y, d)),
        }
    };
    let ell = |g: G| -> G {
        match g {
            G::Unit => G::Unit,
            G::Pos(x) => G::Neg(x),
            G::Neg(x) => G::Pos(x),
            G::Pair(x, y) => G::Pair(y, x),
        }
    };
    let le = |x: usize, y: usize| a.leq(x, y);
    let sq_g = |l: G, r: G| -> bool {
        match (l, r) {
            (G::Unit, G::Unit) => alpha == Sign::Plus,
            (G::Pos(x), G::Unit) => in_i[x],
            (G::Neg(y), G::Unit) => in_f[y],
            (G::Pair(x, y), G::Unit) => le(x, y),
            (G::Unit, G::Pos(c)) => in_f[c],
            (G::Pos(x), G::Pos(c)) => le(x, c),
            (G::Neg(y), G::Pos(c)) => in_f[a.add(y, c)],
            (G::Pair(x, y), G::Pos(c)) => le(x, a.add(y, c)),
            (G::Unit, G::Neg(d)) => in_i[d],
            (G::Pos(x), G::Neg(d)) => in_i[a.mul(x, d)],
            (G::Neg(y), G::Neg(d)) => le(d, y),
            (G::Pair(x, y), G::Neg(d)) => le(a.mul(x, d), y),
            (G::Unit, G::Pair(c, d)) => le(d, c),
            (G::Pos(x), G::Pair(c, d)) => le(a.mul(x, d), c),
            (G::Neg(y), G::Pair(c, d)) => le(d, a.add(y, c)),
            (G::Pair(x, y), G::Pair(c, d)) => le(a.mul(x, d), a.add(y, c)),
        }
    };
    let nm = |x: usize| a.elem_name(x).to_string();
    let l_name = |g: G| match g {
        G::Unit => "1".to_string(),
        G::Pos(x) => nm(x),
        G::Neg(x) => format!("~{}", nm(x)),
        G::Pair(x, y) => format!("{}*~{}", nm(x), nm(y)),
    };
    let r_name = |g: G| match g {
        G::Unit => "0".to_string(),
        G::Pos(x) => nm(x),
        G::Neg(x) => format!("~{}", nm(x)),
        G::Pair(x, y) => format!("{}+~{}", nm(x), nm(y)),
    };
    let mut circ = Vec::with_capacity(size * size);
    let mut oplus = Vec::with_capacity(size * size);
    let mut sq = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            circ.push(enc(circ_g(dec(i), dec(j))));
            oplus.push(enc(oplus_g(dec(i), dec(j))));
            sq.push(sq_g(dec(i), dec(j)));
        }
    }
    let ells: Vec<usize> = (0..size).map(|i| enc(ell(dec(i)))).collect();
    let frame = GaloisFrame {
        l_names: (0..size).map(|i| l_name(dec(i))).collect(),
        r_names: (0..size).map(|i| r_name(dec(i))).collect(),
        circ,
        one_l: 0,
        oplus,
        zero_r: 0,
        sq,
        ell_circ: ells.clone(),
        ell_oplus: ells,
        lambda: (0..n).map(|x| 1 + x).collect(),
        rho: (0..n).map(|x| 1 + x).collect(),
    };
    frame.check_nuclearity()?;
    // units are not part of the bisemigroup signature
    let stripped = a.without_units();
    frame.check_a_frame(&stripped)?;
    let mut c = galois_algebra(&frame, CompletionOptions::default())?;
    c.algebra.validate()?;
    let b = &c.algebra.base;
    let (one, zero) = (b.one(), b.zero());
    for x in 0..n {
        if b.leq(one, c.embed[x]) != in_f[x] || b.leq(c.embed[x], zero) != in_i[x] {
            return Err(Error::FrameAxiomViolation(format!("unit flags wrong at {}", a.elem_name(x))));
        }
    }
    if b.leq(one, zero) != (alpha == Sign::Plus) {
        return Err(Error::FrameAxiomViolation("1 <= 0 disagrees with alpha".into()));
    }
    let opts = MorphismOptions { embedding: true, complete: false };
    check_morphism(&c.embed, &stripped, b, opts).map_err(|m| Error::FrameAxiomViolation(format!("embedding: {m}")))?;
    c.algebra.base.name = format!("{}^D1", a.name);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, l3};

    #[test]
    fn l3_frame_relation() {
        let a = l3();
        let f = frame_of_bimonoid(&a).unwrap();
        let n = 3;
        let (ea, eb, e1) = (1, 0, 2);
        // ⟨a,0⟩ ⊑ ⟨b,1⟩ ⟺ a·1 ≤ 0+b = b, false
        assert!(!f.sq(ea * n + a.zero(), eb * n + e1));
        assert!(f.sq(f.one_l, f.rho[a.one()]));
    }

    #[test]
    fn l3_completion_has_eight_elements() {
        let c = dm_completion(&l3()).unwrap();
        assert_eq!(c.size(), 8);
        let mut labels = c.labels.clone();
        labels.sort();
        let mut want = vec!["b", "a", "a*~a", "1", "a*~b", "~a", "~b", "1 v a*~b"];
        want.sort();
        assert_eq!(labels, want);
        let fix: Vec<&str> = (0..8).filter(|&x| c.algebra.comp(x) == x).map(|x| c.label(x)).collect();
        let mut fix = fix;
        fix.sort();
        assert_eq!(fix, vec!["1", "a*~b"]);
    }

    #[test]
    fn closure_in_l3_of_lambda_a() {
        let a = l3();
        let f = frame_of_bimonoid(&a).unwrap();
        let cl = f.closure_right(&f.singleton_l(f.lambda[1]));
        let col = f.column(f.rho[1]);
        assert_eq!(cl, col);
    }

    #[test]
    fn boolean_two_is_its_own_completion() {
        let a = catalog("boolean:1").unwrap();
        assert_eq!(dm_completion(&a).unwrap().size(), 2);
        let s = catalog("sugihara:3").unwrap();
        assert_eq!(dm_completion(&s).unwrap().size(), 3);
    }

    #[test]
    fn compare_generators_l3() {
        let a = l3();
        let (aa, one, zero) = (1, a.one(), a.zero());
        assert!(compare_generators(&a, Gen::Mul(aa, aa), Gen::Mul(one, zero)));
        assert!(!compare_generators(&a, Gen::Mul(one, zero), Gen::Mul(aa, aa)));
    }

    #[test]
    fn bisemigroup_singleton() {
        let s = catalog("sugihara:1").unwrap();
        let c = dm_completion_bisemigroup(&s, &[], &[], Sign::Minus).unwrap();
        let b = c.base();
        assert!(!b.leq(b.one(), b.zero()));
        assert!(matches!(dm_completion_bisemigroup(&s, &[0], &[0], Sign::Minus), Err(Error::IncompatibleFIAlpha(_))));
    }
}
