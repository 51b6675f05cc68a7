//! JSON algebra documents.
//!
//! ```json
//! { "name": "L3", "elements": ["b", "a", "1"], "leq": [["b", "a"], ["a", "1"]],
//!   "mul": [["b","b","b"],["b","b","a"],["b","a","1"]], "one": "1", "add": "mul", "zero": "1" }
//! ```
//! `leq` lists cover pairs and is closed reflexively and transitively. `mul` may be
//! the keyword `"meet"`; `add` may be `"join"`, `"meet"`, `"mul"` or `"pbr"`.

use serde::{Deserialize, Serialize};

use crate::algebra::OrderedAlgebra;
use crate::constructions::from_pointed_brouwerian;
use crate::error::{Error, Result};
use crate::order::FinitePoset;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum TableSpec {
    Keyword(String),
    Table(Vec<Vec<String>>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<TableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<TableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
}

fn lookup(elems: &[String], s: &str) -> Result<usize> {
    elems.iter().position(|e| e == s).ok_or_else(|| Error::Format(format!("unknown element {s:?}")))
}

fn read_table(elems: &[String], rows: &[Vec<String>], what: &str) -> Result<Vec<usize>> {
    let n = elems.len();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Format(format!("{what} table must be {n} x {n}")));
    }
    rows.iter().flatten().map(|s| lookup(elems, s)).collect()
}

fn lattice_table(p: &FinitePoset, join: bool, what: &str) -> Result<Vec<usize>> {
    let n = p.size();
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let v = if join { p.join(x, y) } else { p.meet(x, y) };
            t.push(v.map_err(|_| Error::Format(format!("{what}: order is not a lattice")))?);
        }
    }
    Ok(t)
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<OrderedAlgebra> {
        let elems = &self.elements;
        let n = elems.len();
        let pairs = self
            .leq
            .iter()
            .map(|(a, b)| Ok((lookup(elems, a)?, lookup(elems, b)?)))
            .collect::<Result<Vec<_>>>()?;
        let poset = FinitePoset::from_cover_pairs(n, &pairs, Some(elems.clone()))?;
        let one = self.one.as_deref().map(|s| lookup(elems, s)).transpose()?;
        let zero = self.zero.as_deref().map(|s| lookup(elems, s)).transpose()?;
        let mul = match &self.mul {
            None => None,
            Some(TableSpec::Table(rows)) => Some(read_table(elems, rows, "mul")?),
            Some(TableSpec::Keyword(k)) if k == "meet" => Some(lattice_table(&poset, false, "mul")?),
            Some(TableSpec::Keyword(k)) => return Err(Error::Format(format!("unknown mul keyword {k:?}"))),
        };
        let add = match &self.add {
            None => None,
            Some(TableSpec::Table(rows)) => Some(read_table(elems, rows, "add")?),
            Some(TableSpec::Keyword(k)) => match k.as_str() {
                "join" => Some(lattice_table(&poset, true, "add")?),
                "meet" => Some(lattice_table(&poset, false, "add")?),
                "mul" => Some(mul.clone().ok_or_else(|| Error::Format("add = \"mul\" needs a mul table".into()))?),
                "pbr" => {
                    let z = zero.ok_or_else(|| Error::Format("add = \"pbr\" needs zero".into()))?;
                    let base = OrderedAlgebra::new(self.name.clone(), poset.clone(), mul.clone(), one, None, None, true);
                    Some(from_pointed_brouwerian(&base, z)?.add.unwrap())
                }
                _ => return Err(Error::Format(format!("unknown add keyword {k:?}"))),
            },
        };
        let alg = OrderedAlgebra::new(self.name.clone(), poset, mul, one, add, zero, false);
        Ok(alg.with_inferred_lattice())
    }

    /// Explicit tables and Hasse cover pairs; reloads to the same algebra.
    pub fn from_algebra(alg: &OrderedAlgebra) -> Self {
        let nm = alg.poset.names();
        let n = alg.size();
        let tab = |t: &Option<Vec<usize>>| {
            t.as_ref().map(|t| TableSpec::Table((0..n).map(|x| (0..n).map(|y| nm[t[x * n + y]].clone()).collect()).collect()))
        };
        AlgebraDoc {
            name: alg.name.clone(),
            elements: nm.to_vec(),
            leq: alg.poset.hasse_edges().into_iter().map(|(x, y)| (nm[x].clone(), nm[y].clone())).collect(),
            mul: tab(&alg.mul),
            one: alg.one.map(|u| nm[u].clone()),
            add: tab(&alg.add),
            zero: alg.zero.map(|u| nm[u].clone()),
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<OrderedAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    doc.to_algebra()
}

pub fn to_json(alg: &OrderedAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraDoc::from_algebra(alg)).expect("serializable")
}
