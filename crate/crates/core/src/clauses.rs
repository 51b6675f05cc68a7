//! Terms and universal clauses over the bimonoid signature: parsing, printing,
//! model checking, linearization and the translation used for subreducts.
//!
//! Grammar: variables `[a-z][a-z0-9]*` (except `v`), constants `1` `0`, prefix `~`,
//! binary `*` `+` `^` `v` `->` (tightest first; `->` associates to the right),
//! atoms `t <= u`, `t >= u`, `t = u`, clauses `P1 & P2 => C1 | C2`.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{InvolutiveAlgebra, OrderedAlgebra};
use crate::completion::dm_completion;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    One,
    Zero,
    Comp(Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Add(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    /// Left-folded product; the empty product is `1`.
    pub fn product(ts: impl IntoIterator<Item = Term>) -> Term {
        ts.into_iter().reduce(Term::mul).unwrap_or(Term::One)
    }

    /// Left-folded sum; the empty sum is `0`.
    pub fn sum(ts: impl IntoIterator<Item = Term>) -> Term {
        ts.into_iter().reduce(Term::add).unwrap_or(Term::Zero)
    }

    /// Left-folded join; `None` for the empty join.
    pub fn join_all(ts: impl IntoIterator<Item = Term>) -> Option<Term> {
        ts.into_iter().reduce(Term::join)
    }

    fn prec(&self) -> u8 {
        match self {
            Term::Imp(..) => 0,
            Term::Join(..) => 1,
            Term::Meet(..) => 2,
            Term::Add(..) => 3,
            Term::Mul(..) => 4,
            Term::Comp(..) => 5,
            _ => 6,
        }
    }

    /// Variables in order of first occurrence.
    pub fn vars_into(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::One | Term::Zero => {}
            Term::Comp(a) => a.vars_into(out),
            Term::Mul(a, b) | Term::Add(a, b) | Term::Meet(a, b) | Term::Join(a, b) | Term::Imp(a, b) => {
                a.vars_into(out);
                b.vars_into(out);
            }
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.prec();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            Term::Var(v) => write!(f, "{v}")?,
            Term::One => write!(f, "1")?,
            Term::Zero => write!(f, "0")?,
            Term::Comp(a) => {
                write!(f, "~")?;
                a.write(f, 5)?;
            }
            Term::Imp(a, b) => {
                a.write(f, 1)?;
                write!(f, " -> ")?;
                b.write(f, 0)?;
            }
            Term::Mul(a, b) | Term::Add(a, b) | Term::Meet(a, b) | Term::Join(a, b) => {
                let op = match self {
                    Term::Mul(..) => "*",
                    Term::Add(..) => "+",
                    Term::Meet(..) => " ^ ",
                    _ => " v ",
                };
                a.write(f, p)?;
                write!(f, "{op}")?;
                b.write(f, p + 1)?;
            }
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Le,
    Eq,
}

/// `lhs <= rhs` or `lhs = rhs`; `>=` is stored swapped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub lhs: Term,
    pub rel: Rel,
    pub rhs: Term,
}

impl Atom {
    pub fn le(lhs: Term, rhs: Term) -> Atom {
        Atom { lhs, rel: Rel::Le, rhs }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = if self.rel == Rel::Le { "<=" } else { "=" };
        write!(f, "{} {r} {}", self.lhs, self.rhs)
    }
}

/// Conjunction of premises implying a nonempty disjunction of conclusions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub premises: Vec<Atom>,
    pub conclusions: Vec<Atom>,
}

impl Clause {
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for a in self.premises.iter().chain(&self.conclusions) {
            a.lhs.vars_into(&mut out);
            a.rhs.vars_into(&mut out);
        }
        out
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Atom], sep: &str| xs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(sep);
        if !self.premises.is_empty() {
            write!(f, "{} => ", join(&self.premises, " & "))?;
        }
        write!(f, "{}", join(&self.conclusions, " | "))
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    One,
    Zero,
    Tilde,
    Star,
    Plus,
    Caret,
    Vee,
    Arrow,
    LParen,
    RParen,
    Le,
    Ge,
    Eq,
    Amp,
    Implies,
    Bar,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
    while i < bytes.len() {
        let c = bytes[i];
        let next = bytes.get(i + 1).copied();
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'a'..=b'z' => {
                while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit()) {
                    i += 1;
                }
                let word = &text[start..i];
                out.push((start, if word == "v" { Tok::Vee } else { Tok::Ident(word.to_string()) }));
                continue;
            }
            b'0' | b'1' => {
                if next.is_some_and(|d| d.is_ascii_alphanumeric()) {
                    return Err(err(start, "constants are 0 and 1"));
                }
                if c == b'1' {
                    Tok::One
                } else {
                    Tok::Zero
                }
            }
            b'~' => Tok::Tilde,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'-' if next == Some(b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'<' if next == Some(b'=') => {
                i += 1;
                Tok::Le
            }
            b'>' if next == Some(b'=') => {
                i += 1;
                Tok::Ge
            }
            b'=' if next == Some(b'>') => {
                i += 1;
                Tok::Implies
            }
            b'=' => Tok::Eq,
            _ => return Err(err(start, &format!("unexpected character {:?}", c as char))),
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.to_string() })
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return self.fail("unexpected trailing input");
        }
        Ok(())
    }

    fn term(&mut self) -> Result<Term> {
        let l = self.binary(1)?;
        if self.eat(&Tok::Arrow) {
            return Ok(Term::Imp(Box::new(l), Box::new(self.term()?)));
        }
        Ok(l)
    }

    fn binary(&mut self, level: u8) -> Result<Term> {
        if level == 5 {
            return self.unary();
        }
        let (tok, make): (Tok, fn(Box<Term>, Box<Term>) -> Term) = match level {
            1 => (Tok::Vee, Term::Join),
            2 => (Tok::Caret, Term::Meet),
            3 => (Tok::Plus, Term::Add),
            _ => (Tok::Star, Term::Mul),
        };
        let mut l = self.binary(level + 1)?;
        while self.eat(&tok) {
            let r = self.binary(level + 1)?;
            l = make(Box::new(l), Box::new(r));
        }
        Ok(l)
    }

    fn unary(&mut self) -> Result<Term> {
        let t = self.peek().cloned();
        match t {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(Term::Comp(Box::new(self.unary()?)))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Term::Var(v))
            }
            Some(Tok::One) => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some(Tok::Zero) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return self.fail("expected )");
                }
                Ok(t)
            }
            _ => self.fail("expected a term"),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let l = self.term()?;
        let rel = match self.peek() {
            Some(Tok::Le) => Tok::Le,
            Some(Tok::Ge) => Tok::Ge,
            Some(Tok::Eq) => Tok::Eq,
            _ => return self.fail("expected <=, >= or ="),
        };
        self.pos += 1;
        let r = self.term()?;
        Ok(match rel {
            Tok::Le => Atom::le(l, r),
            Tok::Ge => Atom::le(r, l),
            _ => Atom { lhs: l, rel: Rel::Eq, rhs: r },
        })
    }

    fn clause(&mut self) -> Result<Clause> {
        let mut first = Vec::new();
        if !self.eat(&Tok::Implies) {
            first.push(self.atom()?);
            while self.eat(&Tok::Amp) {
                first.push(self.atom()?);
            }
            if !self.eat(&Tok::Implies) {
                if first.len() > 1 {
                    return self.fail("expected =>");
                }
                while self.eat(&Tok::Bar) {
                    first.push(self.atom()?);
                }
                return Ok(Clause { premises: vec![], conclusions: first });
            }
        }
        let mut conclusions = vec![self.atom()?];
        while self.eat(&Tok::Bar) {
            conclusions.push(self.atom()?);
        }
        Ok(Clause { premises: first, conclusions })
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_atom(text: &str) -> Result<Atom> {
    let mut p = Parser::new(text)?;
    let a = p.atom()?;
    p.finish()?;
    Ok(a)
}

pub fn parse_clause(text: &str) -> Result<Clause> {
    let mut p = Parser::new(text)?;
    let c = p.clause()?;
    p.finish()?;
    Ok(c)
}

// ---------------------------------------------------------------- evaluation

/// An algebra prepared for term evaluation.
#[derive(Debug, Clone)]
pub struct Model<'a> {
    pub alg: &'a OrderedAlgebra,
    comp: Option<&'a [usize]>,
    joins: Vec<Option<usize>>,
    meets: Vec<Option<usize>>,
    imp: Option<Vec<usize>>,
}

impl<'a> Model<'a> {
    pub fn new(alg: &'a OrderedAlgebra) -> Self {
        let n = alg.size();
        let mut joins = Vec::with_capacity(n * n);
        let mut meets = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                joins.push(alg.poset.join(x, y).ok());
                meets.push(alg.poset.meet(x, y).ok());
            }
        }
        let imp = if alg.has_mul() { alg.residual_table().ok() } else { None };
        Model { alg, comp: None, joins, meets, imp }
    }

    pub fn involutive(alg: &'a InvolutiveAlgebra) -> Self {
        let mut m = Model::new(&alg.base);
        m.comp = Some(&alg.comp);
        m
    }

    pub fn size(&self) -> usize {
        self.alg.size()
    }

    /// `UnsupportedOperator` unless every operator of `t` is defined everywhere.
    pub fn supports(&self, t: &Term) -> Result<()> {
        let a = self.alg;
        let missing = |what: &str| Err(Error::UnsupportedOperator(what.to_string()));
        match t {
            Term::Var(_) => Ok(()),
            Term::One if a.one.is_none() => missing("1"),
            Term::Zero if a.zero.is_none() => missing("0"),
            Term::One | Term::Zero => Ok(()),
            Term::Comp(x) => {
                if self.comp.is_none() {
                    return missing("~ (algebra is not involutive)");
                }
                self.supports(x)
            }
            Term::Mul(x, y) | Term::Add(x, y) | Term::Meet(x, y) | Term::Join(x, y) | Term::Imp(x, y) => {
                let ok = match t {
                    Term::Mul(..) => a.has_mul(),
                    Term::Add(..) => a.has_add(),
                    Term::Meet(..) => self.meets.iter().all(Option::is_some),
                    Term::Join(..) => self.joins.iter().all(Option::is_some),
                    _ => self.imp.is_some(),
                };
                if !ok {
                    let name = match t {
                        Term::Mul(..) => "*",
                        Term::Add(..) => "+",
                        Term::Meet(..) => "^ (order has no meets)",
                        Term::Join(..) => "v (order has no joins)",
                        _ => "-> (not residuated)",
                    };
                    return missing(name);
                }
                self.supports(x)?;
                self.supports(y)
            }
        }
    }

    /// Evaluates with variables looked up through `env`; assumes `supports` passed.
    pub fn eval(&self, t: &Term, env: &dyn Fn(&str) -> usize) -> usize {
        let n = self.size();
        let a = self.alg;
        match t {
            Term::Var(v) => env(v),
            Term::One => a.one(),
            Term::Zero => a.zero(),
            Term::Comp(x) => self.comp.unwrap()[self.eval(x, env)],
            Term::Mul(x, y) => a.mul(self.eval(x, env), self.eval(y, env)),
            Term::Add(x, y) => a.add(self.eval(x, env), self.eval(y, env)),
            Term::Meet(x, y) => self.meets[self.eval(x, env) * n + self.eval(y, env)].unwrap(),
            Term::Join(x, y) => self.joins[self.eval(x, env) * n + self.eval(y, env)].unwrap(),
            Term::Imp(x, y) => self.imp.as_ref().unwrap()[self.eval(x, env) * n + self.eval(y, env)],
        }
    }

    fn holds(&self, atom: &Atom, env: &dyn Fn(&str) -> usize) -> bool {
        let (l, r) = (self.eval(&atom.lhs, env), self.eval(&atom.rhs, env));
        match atom.rel {
            Rel::Le => self.alg.leq(l, r),
            Rel::Eq => l == r,
        }
    }

    fn check_clause(&self, c: &Clause) -> Result<()> {
        for a in c.premises.iter().chain(&c.conclusions) {
            self.supports(&a.lhs)?;
            self.supports(&a.rhs)?;
        }
        Ok(())
    }

    /// Truth of `c` at one valuation.
    pub fn clause_at(&self, c: &Clause, valuation: &HashMap<String, usize>) -> Result<bool> {
        self.check_clause(c)?;
        for v in c.vars() {
            if !valuation.contains_key(&v) {
                return Err(Error::Format(format!("no value for variable {v}")));
            }
        }
        let env = |v: &str| valuation[v];
        Ok(!c.premises.iter().all(|a| self.holds(a, &env)) || c.conclusions.iter().any(|a| self.holds(a, &env)))
    }

    /// First falsifying valuation with variables ranging over `domain`, in
    /// lexicographic order (first variable slowest).
    pub fn counterexample_in(&self, c: &Clause, domain: &[usize]) -> Result<Option<Vec<(String, usize)>>> {
        self.check_clause(c)?;
        let vars = c.vars();
        let k = vars.len();
        if domain.is_empty() {
            return Ok(None);
        }
        let slot: HashMap<&str, usize> = vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut idx = vec![0usize; k];
        loop {
            let vals: Vec<usize> = idx.iter().map(|&i| domain[i]).collect();
            let env = |v: &str| vals[slot[v]];
            let ok = !c.premises.iter().all(|a| self.holds(a, &env)) || c.conclusions.iter().any(|a| self.holds(a, &env));
            if !ok {
                return Ok(Some(vars.iter().cloned().zip(vals).collect()));
            }
            let mut j = k;
            loop {
                if j == 0 {
                    return Ok(None);
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < domain.len() {
                    break;
                }
                idx[j] = 0;
            }
        }
    }

    pub fn counterexample(&self, c: &Clause) -> Result<Option<Vec<(String, usize)>>> {
        let all: Vec<usize> = (0..self.size()).collect();
        self.counterexample_in(c, &all)
    }
}

/// Outcome of model checking a clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOutcome {
    pub holds: bool,
    /// First falsifying valuation as `(variable, element name)`.
    pub witness: Option<Vec<(String, String)>>,
}

fn outcome(alg: &OrderedAlgebra, w: Option<Vec<(String, usize)>>) -> ClauseOutcome {
    ClauseOutcome {
        holds: w.is_none(),
        witness: w.map(|w| w.into_iter().map(|(v, x)| (v, alg.elem_name(x).to_string())).collect()),
    }
}

pub fn eval_clause(alg: &OrderedAlgebra, c: &Clause) -> Result<ClauseOutcome> {
    Ok(outcome(alg, Model::new(alg).counterexample(c)?))
}

pub fn eval_clause_involutive(alg: &InvolutiveAlgebra, c: &Clause) -> Result<ClauseOutcome> {
    Ok(outcome(&alg.base, Model::involutive(alg).counterexample(c)?))
}

/// Truth of `c` at a valuation given by element names.
pub fn eval_clause_at(alg: &OrderedAlgebra, c: &Clause, valuation: &[(&str, &str)]) -> Result<bool> {
    let mut env = HashMap::new();
    for (v, e) in valuation {
        let x = alg.index_of(e).ok_or_else(|| Error::Format(format!("unknown element {e:?}")))?;
        env.insert(v.to_string(), x);
    }
    Model::new(alg).clause_at(c, &env)
}

// ---------------------------------------------------------------- linearization

/// Join of products; each product is a list of variables (empty for `1`).
type Polynomial = Vec<Vec<String>>;

fn sl_monoid_poly(t: &Term) -> Result<Polynomial> {
    let bad = || Err(Error::NotSlMonoidal(t.to_string()));
    match t {
        Term::Var(v) => Ok(vec![vec![v.clone()]]),
        Term::One => Ok(vec![vec![]]),
        Term::Join(a, b) => {
            let mut p = sl_monoid_poly(a)?;
            for m in sl_monoid_poly(b)? {
                if !p.contains(&m) {
                    p.push(m);
                }
            }
            Ok(p)
        }
        Term::Mul(a, b) => {
            let (p, q) = (sl_monoid_poly(a)?, sl_monoid_poly(b)?);
            let mut out: Polynomial = Vec::new();
            for m in &p {
                for k in &q {
                    let prod: Vec<String> = m.iter().chain(k).cloned().collect();
                    if !out.contains(&prod) {
                        out.push(prod);
                    }
                }
            }
            Ok(out)
        }
        _ => bad(),
    }
}

fn product_term(m: &[String]) -> Term {
    Term::product(m.iter().map(|v| Term::var(v)))
}

fn poly_term(p: &Polynomial) -> Term {
    Term::join_all(p.iter().map(|m| product_term(m))).unwrap_or(Term::One)
}

/// Splits an `{∨,·,1}` inequality into equivalent linear inequalities.
pub fn linearize(atom: &Atom) -> Result<Vec<Atom>> {
    if atom.rel != Rel::Le {
        return Err(Error::NotSlMonoidal(format!("{atom}: only inequalities")));
    }
    let left = sl_monoid_poly(&atom.lhs)?;
    let right = sl_monoid_poly(&atom.rhs)?;
    let mut used = Vec::new();
    atom.lhs.vars_into(&mut used);
    atom.rhs.vars_into(&mut used);
    let mut out: Vec<Atom> = Vec::new();
    for m in &left {
        let mut fresh: HashMap<&str, Vec<String>> = HashMap::new();
        let mut taken = used.clone();
        let mut seen: Vec<&str> = Vec::new();
        for v in m {
            if !seen.contains(&v.as_str()) {
                seen.push(v);
            }
        }
        for &v in &seen {
            let k = m.iter().filter(|w| w.as_str() == v).count();
            if k > 1 {
                let mut names = Vec::new();
                let mut i = 1;
                while names.len() < k {
                    let cand = format!("{v}{i}");
                    if !taken.contains(&cand) {
                        taken.push(cand.clone());
                        names.push(cand);
                    }
                    i += 1;
                }
                fresh.insert(v, names);
            }
        }
        let mut counter: HashMap<&str, usize> = HashMap::new();
        let new_left: Vec<String> = m
            .iter()
            .map(|v| match fresh.get(v.as_str()) {
                Some(names) => {
                    let c = counter.entry(v).or_insert(0);
                    *c += 1;
                    names[*c - 1].clone()
                }
                None => v.clone(),
            })
            .collect();
        // each right-hand occurrence of a split variable becomes the join of its copies
        let mut new_right: Polynomial = Vec::new();
        for k in &right {
            let mut partial: Polynomial = vec![vec![]];
            for v in k {
                let choices = fresh.get(v.as_str()).cloned().unwrap_or_else(|| vec![v.clone()]);
                partial = partial
                    .iter()
                    .flat_map(|p| choices.iter().map(move |c| p.iter().cloned().chain([c.clone()]).collect()))
                    .collect();
            }
            for p in partial {
                if !new_right.contains(&p) {
                    new_right.push(p);
                }
            }
        }
        let a = Atom::le(product_term(&new_left), poly_term(&new_right));
        if !out.contains(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Left side a product of distinct variables (or `1`), right side a join of products.
pub fn is_linear(atom: &Atom) -> bool {
    if atom.rel != Rel::Le {
        return false;
    }
    let Ok(left) = sl_monoid_poly(&atom.lhs) else { return false };
    if left.len() != 1 || sl_monoid_poly(&atom.rhs).is_err() {
        return false;
    }
    let m = &left[0];
    (0..m.len()).all(|i| !m[i + 1..].contains(&m[i]))
}

// ---------------------------------------------------------------- translation

fn fresh_names() -> impl Iterator<Item = String> {
    let letters: Vec<char> = ('a'..='z').filter(|&c| c != 'v').collect();
    (0usize..).map(move |i| {
        let l = letters[i % letters.len()];
        if i < letters.len() {
            l.to_string()
        } else {
            format!("{l}{}", i / letters.len())
        }
    })
}

/// Translates a linear positive clause over `{∨,·,1}` into a clause in `·`, `+`
/// that holds in a commutative bimonoid iff the original holds in its completion.
/// Variable `x` becomes `a·b̄` and each disjunct gets a meet generator `e+f̄`.
pub fn translate_subreduct(clause: &Clause) -> Result<Clause> {
    if !clause.premises.is_empty() {
        return Err(Error::NotLinear("premises are not supported; the clause must be positive".into()));
    }
    for a in &clause.conclusions {
        if !is_linear(a) {
            return Err(Error::NotLinear(a.to_string()));
        }
    }
    let vars = clause.vars();
    let mut names = fresh_names();
    let pairs: HashMap<String, (String, String)> =
        vars.iter().map(|v| (v.clone(), (names.next().unwrap(), names.next().unwrap()))).collect();
    let disj: Vec<(String, String)> = clause.conclusions.iter().map(|_| (names.next().unwrap(), names.next().unwrap())).collect();
    // (Πa_i)(Σb_i)‾ ≤ e + f̄  ⟺  (Πa_i)·f ≤ (Σb_i) + e
    let encode = |m: &[String], (e, f): &(String, String)| {
        let l = Term::product(m.iter().map(|v| Term::var(&pairs[v].0)).chain([Term::var(f)]));
        let r = Term::sum(m.iter().map(|v| Term::var(&pairs[v].1)).chain([Term::var(e)]));
        Atom::le(l, r)
    };
    let mut premises: Vec<Atom> = Vec::new();
    let mut conclusions = Vec::new();
    for (a, ef) in clause.conclusions.iter().zip(&disj) {
        for m in sl_monoid_poly(&a.rhs)? {
            let p = encode(&m, ef);
            if !premises.contains(&p) {
                premises.push(p);
            }
        }
        let left = &sl_monoid_poly(&a.lhs)?[0];
        conclusions.push(encode(left, ef));
    }
    premises.sort_by_key(|p| p.to_string());
    Ok(Clause { premises, conclusions })
}

/// Evaluates the original clause on the completion of `alg`.
pub fn subreduct_oracle(alg: &OrderedAlgebra, clause: &Clause) -> Result<bool> {
    let c = dm_completion(alg)?;
    Ok(Model::involutive(&c.algebra).counterexample(clause)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnottedFamily {
    /// `x ≤ xⁿ` and `n·x ≤ x`.
    Standard,
    /// `1 ≤ xⁿ` and `n·x ≤ 0`; experimental.
    UnitVariant,
}

fn power(alg: &OrderedAlgebra, x: usize, n: usize, add: bool) -> usize {
    let op = |a, b| if add { alg.add(a, b) } else { alg.mul(a, b) };
    (1..n).fold(x, |acc, _| op(acc, x))
}

/// Whether `alg` satisfies the two inequalities of the knotted family for `n ≥ 2`.
pub fn knotted_subreduct(alg: &OrderedAlgebra, family: KnottedFamily, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::PreconditionViolated("n must be at least 2".into()));
    }
    alg.require_commutative_bimonoid()?;
    Ok((0..alg.size()).all(|x| {
        let (p, s) = (power(alg, x, n, false), power(alg, x, n, true));
        match family {
            KnottedFamily::Standard => alg.leq(x, p) && alg.leq(s, x),
            KnottedFamily::UnitVariant => alg.leq(alg.one(), p) && alg.leq(s, alg.zero()),
        }
    }))
}

/// `x ≤ xⁿ` written as a clause.
pub fn knotted_clause(n: usize) -> Clause {
    let p = Term::product(std::iter::repeat(Term::var("x")).take(n));
    Clause { premises: vec![], conclusions: vec![Atom::le(Term::var("x"), p)] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, l3};

    #[test]
    fn parse_and_print() {
        let c = parse_clause("x*y <= x v y").unwrap();
        assert_eq!(c.to_string(), "x*y <= x v y");
        let t = parse_term("a -> b -> c").unwrap();
        assert_eq!(t.to_string(), "a -> b -> c");
        assert_eq!(parse_term("(a -> b) -> c").unwrap().to_string(), "(a -> b) -> c");
        assert_eq!(parse_term("~(a*b)+c ^ d v e").unwrap().to_string(), "~(a*b)+c ^ d v e");
        assert_eq!(parse_atom("y >= x").unwrap(), parse_atom("x <= y").unwrap());
        assert!(matches!(parse_clause("x <= "), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_clause("x & y"), Err(Error::Parse { .. })));
    }

    #[test]
    fn linearize_square() {
        let out = linearize(&parse_atom("x*x <= x").unwrap()).unwrap();
        assert_eq!(out.iter().map(|a| a.to_string()).collect::<Vec<_>>(), vec!["x1*x2 <= x1 v x2"]);
        let out = linearize(&parse_atom("x*x*y <= x v y").unwrap()).unwrap();
        assert_eq!(out[0].to_string(), "x1*x2*y <= x1 v x2 v y");
        assert_eq!(linearize(&parse_atom("x <= 1").unwrap()).unwrap()[0].to_string(), "x <= 1");
        assert!(linearize(&parse_atom("x+x <= x").unwrap()).is_err());
    }

    #[test]
    fn worked_translations() {
        let q = translate_subreduct(&parse_clause("x*y <= x v y").unwrap()).unwrap();
        assert_eq!(q.to_string(), "a*f <= b+e & c*f <= d+e => a*c*f <= b+d+e");
        let l = translate_subreduct(&parse_clause("x <= y | y <= x").unwrap()).unwrap();
        assert_eq!(l.to_string(), "a*h <= b+g & c*f <= d+e => a*f <= b+e | c*h <= d+g");
    }

    #[test]
    fn l3_witness() {
        let l = translate_subreduct(&parse_clause("x <= y | y <= x").unwrap()).unwrap();
        let val = [("a", "1"), ("b", "1"), ("c", "a"), ("d", "b"), ("e", "b"), ("f", "a"), ("g", "1"), ("h", "1")];
        assert!(!eval_clause_at(&l3(), &l, &val).unwrap());
    }

    #[test]
    fn knotted_examples() {
        assert!(knotted_subreduct(&catalog("H5c").unwrap(), KnottedFamily::Standard, 2).unwrap());
        assert!(!knotted_subreduct(&l3(), KnottedFamily::Standard, 2).unwrap());
        assert!(knotted_subreduct(&catalog("sugihara:3").unwrap(), KnottedFamily::Standard, 2).unwrap());
    }

    #[test]
    fn unsupported_operator() {
        let c = parse_clause("~x <= x").unwrap();
        assert!(matches!(eval_clause(&l3(), &c), Err(Error::UnsupportedOperator(_))));
    }
}
