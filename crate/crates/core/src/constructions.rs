//! Builders for the standard example families and the named catalog.

use crate::algebra::{InvolutiveAlgebra, OrderedAlgebra};
use crate::error::{Error, Result};
use crate::order::FinitePoset;

fn names(v: &[&str]) -> Option<Vec<String>> {
    Some(v.iter().map(|s| s.to_string()).collect())
}

/// `· = + = ∧` with `1 = 0 = ⊤` over a meet-semilattice with top.
pub fn meet_semilattice_bimonoid(name: &str, poset: FinitePoset) -> Result<OrderedAlgebra> {
    let top = poset.top().ok_or(Error::MissingBound("top"))?;
    let n = poset.size();
    for x in 0..n {
        for y in 0..n {
            poset.meet(x, y)?;
        }
    }
    let p = poset.clone();
    let meet = move |x, y| p.meet(x, y).unwrap();
    let alg = OrderedAlgebra::from_fns(name, poset, &meet, Some(top), Some(&meet), Some(top), false);
    Ok(alg.with_inferred_lattice())
}

/// `· = ∧`, `+ = ∨`, `1 = ⊤`, `0 = ⊥`.
pub fn lattice_bimonoid(name: &str, poset: FinitePoset) -> Result<OrderedAlgebra> {
    if !poset.is_lattice() {
        return Err(Error::PreconditionViolated("order is not a lattice".into()));
    }
    let top = poset.top().ok_or(Error::MissingBound("top"))?;
    let bot = poset.bottom().ok_or(Error::MissingBound("bottom"))?;
    let (p, q) = (poset.clone(), poset.clone());
    let join = move |x, y| q.join(x, y).unwrap();
    Ok(OrderedAlgebra::from_fns(name, poset, move |x, y| p.meet(x, y).unwrap(), Some(top), Some(&join), Some(bot), true))
}

/// The Brouwerian reduct `⟨A, ∧, 1⟩` over a lattice; fails unless `∧` is residuated.
pub fn brouwerian_algebra(name: &str, poset: FinitePoset) -> Result<OrderedAlgebra> {
    if !poset.is_lattice() {
        return Err(Error::NotBrouwerian("order is not a lattice".into()));
    }
    let top = poset.top().ok_or(Error::NotBrouwerian("no top".into()))?;
    let p = poset.clone();
    let alg = OrderedAlgebra::from_fns(name, poset, move |x, y| p.meet(x, y).unwrap(), Some(top), None, None, true);
    if !alg.is_residuated() {
        return Err(Error::NotBrouwerian("meet is not residuated".into()));
    }
    Ok(alg)
}

/// `x + y = (0 → (x ∧ y)) ∧ (x ∨ y)` on a Brouwerian algebra given by its `∧`-reduct.
pub fn from_pointed_brouwerian(lattice: &OrderedAlgebra, zero: usize) -> Result<OrderedAlgebra> {
    if !lattice.is_lattice_ordered() || !lattice.has_mul() {
        return Err(Error::NotBrouwerian("need a lattice with multiplication".into()));
    }
    let n = lattice.size();
    let top = lattice.top().unwrap();
    if lattice.one != Some(top) {
        return Err(Error::NotBrouwerian("unit is not the top".into()));
    }
    for x in 0..n {
        for y in 0..n {
            if lattice.mul(x, y) != lattice.meet(x, y).unwrap() {
                return Err(Error::NotBrouwerian(format!("multiplication is not meet at ({x}, {y})")));
            }
        }
    }
    let imp = lattice.residual_table().map_err(|_| Error::NotBrouwerian("not residuated".into()))?;
    let add = |x: usize, y: usize| {
        let m = lattice.meet(x, y).unwrap();
        lattice.meet(imp[zero * n + m], lattice.join(x, y).unwrap()).unwrap()
    };
    let name = format!("{}[0={}]", lattice.name, lattice.elem_name(zero));
    let meet = |x: usize, y: usize| lattice.meet(x, y).unwrap();
    Ok(OrderedAlgebra::from_fns(name, lattice.poset.clone(), meet, Some(top), Some(&add), Some(zero), true))
}

/// `+ := ·` and `0 := 1`.
pub fn trivial_bimonoid(pomonoid: &OrderedAlgebra) -> OrderedAlgebra {
    OrderedAlgebra::new(
        pomonoid.name.clone(),
        pomonoid.poset.clone(),
        pomonoid.mul.clone(),
        pomonoid.one,
        pomonoid.mul.clone(),
        pomonoid.one,
        pomonoid.lattice,
    )
}

/// `x + y := ⊤`; a bisemigroup without additive unit.
pub fn drastic_top(pomonoid: &OrderedAlgebra) -> Result<OrderedAlgebra> {
    let top = pomonoid.top().ok_or(Error::MissingBound("top"))?;
    let n = pomonoid.size();
    Ok(OrderedAlgebra::new(
        format!("{}+top", pomonoid.name),
        pomonoid.poset.clone(),
        pomonoid.mul.clone(),
        pomonoid.one,
        Some(vec![top; n * n]),
        None,
        false,
    ))
}

/// `x + y := 1` when both exceed `⊥`, otherwise the other argument; `0 := ⊥`.
/// Needs an integral pomonoid with `x·y = ⊥ ⟺ x = ⊥ or y = ⊥`.
pub fn drastic_bottom_unit(pomonoid: &OrderedAlgebra) -> Result<OrderedAlgebra> {
    let bot = pomonoid.bottom().ok_or(Error::MissingBound("bottom"))?;
    let one = pomonoid.one.ok_or(Error::MissingOperation("multiplicative unit"))?;
    let n = pomonoid.size();
    if !pomonoid.is_mul_integral() {
        return Err(Error::PreconditionViolated("pomonoid is not integral".into()));
    }
    for x in 0..n {
        for y in 0..n {
            if (pomonoid.mul(x, y) == bot) != (x == bot || y == bot) {
                return Err(Error::PreconditionViolated(format!(
                    "{} * {} violates the zero-divisor condition",
                    pomonoid.elem_name(x),
                    pomonoid.elem_name(y)
                )));
            }
        }
    }
    let add = |x: usize, y: usize| {
        if x == bot {
            y
        } else if y == bot {
            x
        } else {
            one
        }
    };
    let alg = OrderedAlgebra::from_fns(
        format!("{}+bot", pomonoid.name),
        pomonoid.poset.clone(),
        |x, y| pomonoid.mul(x, y),
        Some(one),
        Some(&add),
        Some(bot),
        false,
    );
    Ok(alg)
}

/// Appends a new bottom `⊥` to an integral pomonoid with `⊥·x = ⊥`.
pub fn append_bottom(pomonoid: &OrderedAlgebra) -> OrderedAlgebra {
    let n = pomonoid.size();
    let mut nm = vec!["bot".to_string()];
    nm.extend(pomonoid.poset.names().iter().cloned());
    let poset = FinitePoset::from_fn(n + 1, Some(nm), |x, y| x == 0 || (y > 0 && pomonoid.leq(x - 1, y - 1)))
        .expect("appended bottom");
    let mul = |x: usize, y: usize| if x == 0 || y == 0 { 0 } else { pomonoid.mul(x - 1, y - 1) + 1 };
    OrderedAlgebra::from_fns(format!("{}_bot", pomonoid.name), poset, mul, pomonoid.one.map(|u| u + 1), None, None, false)
}

/// Parts are listed from the bottom of the index chain upwards.
pub fn ordinal_sum(parts: &[OrderedAlgebra]) -> Result<OrderedAlgebra> {
    if parts.len() < 2 {
        return Err(Error::PreconditionViolated("ordinal sums need a non-trivial chain".into()));
    }
    for (i, p) in parts.iter().enumerate() {
        if !p.has_mul() || !p.has_add() || !p.is_bi_integral() {
            return Err(Error::NotBiIntegral(i));
        }
    }
    let mut owner = Vec::new();
    let mut offsets = Vec::new();
    let mut nm = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        offsets.push(owner.len());
        for x in 0..p.size() {
            owner.push((i, x));
            nm.push(format!("{}.{}", i, p.elem_name(x)));
        }
    }
    let total = owner.len();
    let poset = FinitePoset::from_fn(total, Some(nm), |a, b| {
        let ((i, x), (j, y)) = (owner[a], owner[b]);
        i < j || (i == j && parts[i].leq(x, y))
    })?;
    let mul = |a: usize, b: usize| {
        let ((i, x), (j, y)) = (owner[a], owner[b]);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Equal => offsets[i] + parts[i].mul(x, y),
        }
    };
    let add = |a: usize, b: usize| {
        let ((i, x), (j, y)) = (owner[a], owner[b]);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Equal => offsets[i] + parts[i].add(x, y),
        }
    };
    let last = parts.len() - 1;
    let one = parts[last].one.map(|u| offsets[last] + u);
    let zero = parts[0].zero;
    let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(" (+) ");
    Ok(OrderedAlgebra::from_fns(name, poset, mul, one, Some(&add), zero, false))
}

/// Adds a new `⊥` (index 0) and `⊤` (last index).
pub fn bounded_extension(alg: &OrderedAlgebra) -> OrderedAlgebra {
    let n = alg.size();
    let (bot, top) = (0, n + 1);
    let mut nm = vec!["BOT".to_string()];
    nm.extend(alg.poset.names().iter().cloned());
    nm.push("TOP".to_string());
    let poset = FinitePoset::from_fn(n + 2, Some(nm), |x, y| {
        x == bot || y == top || (x != top && y != bot && alg.leq(x - 1, y - 1))
    })
    .expect("bounded extension order");
    let mul = |x: usize, y: usize| {
        if x == bot || y == bot {
            bot
        } else if x == top || y == top {
            top
        } else {
            alg.mul(x - 1, y - 1) + 1
        }
    };
    let add = |x: usize, y: usize| {
        if x == top || y == top {
            top
        } else if x == bot || y == bot {
            bot
        } else {
            alg.add(x - 1, y - 1) + 1
        }
    };
    let has_add = alg.has_add();
    let add_ref: &dyn Fn(usize, usize) -> usize = &add;
    OrderedAlgebra::from_fns(
        format!("{}_bounded", alg.name),
        poset,
        mul,
        alg.one.map(|u| u + 1),
        has_add.then_some(add_ref),
        alg.zero.map(|u| u + 1),
        false,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Mirror copy below, `a′·b′ = ⊤′`.
    Upper,
    /// Mirror copy above, `a′·b′ = ⊥′`.
    Lower,
}

/// Doubles a commutative residuated pomonoid `A` into `A ∪ A′` with `comp(a) = a′`.
/// Indices `0..n` are `A`, `n..2n` are `A′`.
pub fn reflection_star(pomonoid: &OrderedAlgebra, flavor: Flavor) -> Result<InvolutiveAlgebra> {
    let n = pomonoid.size();
    let imp = pomonoid.residual_table().map_err(|_| Error::PreconditionViolated("pomonoid is not residuated".into()))?;
    let one = pomonoid.one.ok_or(Error::MissingOperation("multiplicative unit"))?;
    let bound = match flavor {
        Flavor::Upper => pomonoid.top().ok_or(Error::MissingBound("top"))?,
        Flavor::Lower => pomonoid.bottom().ok_or(Error::MissingBound("bottom"))?,
    };
    if flavor == Flavor::Lower {
        for x in 0..n {
            for y in 0..n {
                if pomonoid.mul(x, y) == bound && x != bound && y != bound {
                    return Err(Error::PreconditionViolated(format!(
                        "{} * {} is the bottom; the lower flavor needs no zero divisors",
                        pomonoid.elem_name(x),
                        pomonoid.elem_name(y)
                    )));
                }
            }
        }
    }
    let mut nm: Vec<String> = pomonoid.poset.names().to_vec();
    nm.extend(pomonoid.poset.names().iter().map(|s| format!("{s}'")));
    let poset = FinitePoset::from_fn(2 * n, Some(nm), |x, y| match (x < n, y < n) {
        (true, true) => pomonoid.leq(x, y),
        (false, false) => pomonoid.leq(y - n, x - n),
        (false, true) => flavor == Flavor::Upper,
        (true, false) => flavor == Flavor::Lower,
    })?;
    let mul = |x: usize, y: usize| match (x < n, y < n) {
        (true, true) => pomonoid.mul(x, y),
        // the lower flavor keeps ⊥ absorbing on all of A ∪ A′
        (true, false) if flavor == Flavor::Lower && x == bound => bound,
        (false, true) if flavor == Flavor::Lower && y == bound => bound,
        (false, true) => n + imp[y * n + (x - n)],
        (true, false) => n + imp[x * n + (y - n)],
        (false, false) => n + bound,
    };
    let comp: Vec<usize> = (0..2 * n).map(|x| if x < n { x + n } else { x - n }).collect();
    let add = |x: usize, y: usize| comp[mul(comp[x], comp[y])];
    let suffix = if flavor == Flavor::Upper { "*" } else { "_*" };
    let alg = OrderedAlgebra::from_fns(format!("{}{}", pomonoid.name, suffix), poset, mul, Some(one), Some(&add), Some(n + one), false);
    Ok(InvolutiveAlgebra { base: alg.with_inferred_lattice(), comp })
}

pub fn l3() -> OrderedAlgebra {
    let p = FinitePoset::from_cover_pairs(3, &[(0, 1), (1, 2)], names(&["b", "a", "1"])).unwrap();
    // a·a = b, b absorbing, 1 unit
    let mul = |x: usize, y: usize| if x == 2 { y } else if y == 2 { x } else { 0 };
    let m = OrderedAlgebra::from_fns("L3", p, mul, Some(2), None, None, true);
    trivial_bimonoid(&m)
}

fn h5_order() -> FinitePoset {
    FinitePoset::from_cover_pairs(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)], names(&["bot", "a", "b", "c", "1"])).unwrap()
}

pub fn h5(zero: &str) -> OrderedAlgebra {
    let base = brouwerian_algebra("H5", h5_order()).unwrap();
    let z = base.index_of(zero).expect("H5 element");
    let mut alg = from_pointed_brouwerian(&base, z).unwrap();
    alg.name = format!("H5{}", if zero == "1" { "one" } else { zero });
    alg
}

pub fn m3() -> OrderedAlgebra {
    let p = FinitePoset::from_cover_pairs(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        names(&["bot", "p", "q", "r", "top"]),
    )
    .unwrap();
    meet_semilattice_bimonoid("M3", p).unwrap()
}

pub fn n5() -> OrderedAlgebra {
    let p = FinitePoset::from_cover_pairs(5, &[(0, 1), (1, 3), (0, 2), (2, 4), (3, 4)], names(&["bot", "x", "y", "z", "top"]))
        .unwrap();
    meet_semilattice_bimonoid("N5", p).unwrap()
}

/// `n`-element Brouwerian chain with `0` at height `pos` (0 is the bottom).
pub fn chain(n: usize, pos: usize) -> Result<OrderedAlgebra> {
    if n == 0 || pos >= n {
        return Err(Error::PreconditionViolated(format!("chain:{n}:{pos} out of range")));
    }
    let nm: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let p = FinitePoset::chain(n).with_names(nm)?;
    let base = brouwerian_algebra("chain", p)?;
    let mut alg = from_pointed_brouwerian(&base, pos)?;
    alg.name = format!("chain:{n}:{pos}");
    Ok(alg)
}

/// Boolean lattice `2^k`; with `0 = ⊥` the pointed-Brouwerian addition is `∨`.
pub fn boolean(k: usize) -> Result<OrderedAlgebra> {
    if k > 6 {
        return Err(Error::PreconditionViolated("boolean:k is limited to k <= 6".into()));
    }
    let n = 1usize << k;
    let nm: Vec<String> = (0..n).map(|m| if k == 0 { "e".into() } else { format!("{m:0k$b}") }).collect();
    let p = FinitePoset::from_fn(n, Some(nm), |x, y| x & !y == 0)?;
    let base = brouwerian_algebra("boolean", p)?;
    let mut alg = from_pointed_brouwerian(&base, 0)?;
    alg.name = format!("boolean:{k}");
    Ok(alg)
}

/// Odd Sugihara chain `-k < … < k`; index `i` holds the value `i - k`.
pub fn sugihara(n: usize) -> Result<OrderedAlgebra> {
    if n % 2 == 0 {
        return Err(Error::PreconditionViolated("Sugihara chains here have odd size".into()));
    }
    let k = (n / 2) as i64;
    let val = |i: usize| i as i64 - k;
    let nm: Vec<String> = (0..n).map(|i| if val(i) > 0 { format!("+{}", val(i)) } else { val(i).to_string() }).collect();
    let p = FinitePoset::chain(n).with_names(nm)?;
    let mul = |x: usize, y: usize| {
        let (a, b) = (val(x), val(y));
        if a.abs() > b.abs() || (a.abs() == b.abs() && a <= b) {
            x
        } else {
            y
        }
    };
    let add = |x: usize, y: usize| {
        let (a, b) = (val(x), val(y));
        if a.abs() > b.abs() || (a.abs() == b.abs() && a >= b) {
            x
        } else {
            y
        }
    };
    let mid = k as usize;
    Ok(OrderedAlgebra::from_fns(format!("sugihara:{n}"), p, mul, Some(mid), Some(&add), Some(mid), true))
}

/// `Z_n` under addition mod `n`, discrete order, `+ = ·`.
pub fn cyclic(n: usize) -> Result<OrderedAlgebra> {
    if n == 0 {
        return Err(Error::PreconditionViolated("cyclic:0".into()));
    }
    let nm: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let p = FinitePoset::antichain(n).with_names(nm)?;
    let op = |x: usize, y: usize| (x + y) % n;
    Ok(OrderedAlgebra::from_fns(format!("cyclic:{n}"), p, op, Some(0), Some(&op), Some(0), n == 1))
}

/// Meets of the H5 order over the lattice `⊥ < a, 1, b < c`, with `0 = 1`.
pub fn diamond_fig5() -> InvolutiveAlgebra {
    let h = h5_order();
    let p = FinitePoset::from_cover_pairs(5, &[(0, 1), (0, 4), (0, 2), (1, 3), (4, 3), (2, 3)], names(&["bot", "a", "b", "c", "1"]))
        .unwrap();
    let comp = vec![3, 2, 1, 0, 4];
    let mul = move |x: usize, y: usize| h.meet(x, y).unwrap();
    let add = |x: usize, y: usize| comp[mul(comp[x], comp[y])];
    let alg = OrderedAlgebra::from_fns("diamond_fig5", p, mul.clone(), Some(4), Some(&add), Some(4), true);
    InvolutiveAlgebra { base: alg, comp }
}

/// Catalog names resolvable by [`catalog`] whose carriers have at most `max_size` elements.
pub fn catalog_names(max_size: usize) -> Vec<String> {
    let mut v: Vec<String> = ["L3", "H5c", "H5one", "M3", "N5", "diamond_fig5"].iter().map(|s| s.to_string()).collect();
    for n in 1..=6 {
        for pos in 0..n {
            v.push(format!("chain:{n}:{pos}"));
        }
    }
    for k in 0..=2 {
        v.push(format!("boolean:{k}"));
    }
    for n in [1, 3, 5] {
        v.push(format!("sugihara:{n}"));
    }
    for n in 1..=5 {
        v.push(format!("cyclic:{n}"));
    }
    v.retain(|s| catalog(s).map_or(false, |a| a.size() <= max_size));
    v
}

fn parse_num(s: &str, full: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::UnknownName(full.to_string()))
}

pub fn catalog(name: &str) -> Result<OrderedAlgebra> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["L3"] => Ok(l3()),
        ["H5c"] => Ok(h5("c")),
        ["H5one"] => Ok(h5("1")),
        ["M3"] => Ok(m3()),
        ["N5"] => Ok(n5()),
        ["diamond_fig5"] => Ok(diamond_fig5().base),
        ["chain", n, pos] => chain(parse_num(n, name)?, parse_num(pos, name)?),
        ["boolean", k] => boolean(parse_num(k, name)?),
        ["sugihara", n] => sugihara(parse_num(n, name)?),
        ["cyclic", n] => cyclic(parse_num(n, name)?),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
