//! JSON exchange format for resolution data.
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "mode": "exceptionalFiberOnly",
//!   "strataKind": "open",
//!   "components": [{ "id": "E", "discrepancy": 0 }],
//!   "strata": [{ "subset": ["E"], "hodge": [{ "i": 1, "j": 1, "coeff": 1 }, { "i": 0, "j": 0, "coeff": 1 }] }]
//! }
//! ```
//!
//! `mode` is `fullVariety` or `exceptionalFiberOnly`. `strataKind` is `open`
//! (the default: strata are `D_J°`) or `closed` (strata are `D_J`). Coefficients
//! and discrepancies are integers or strings `"p/q"`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{Component, Mode, ResolutionData};
use crate::algebra::BiPoly;
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum StrataKind {
    #[default]
    Open,
    Closed,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
enum ModeJson {
    FullVariety,
    ExceptionalFiberOnly,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentJson {
    id: String,
    discrepancy: Number,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialJson {
    i: u32,
    j: u32,
    coeff: Number,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumJson {
    subset: Vec<String>,
    hodge: Vec<MonomialJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct ResolutionJson {
    dimension: u32,
    mode: ModeJson,
    #[serde(default)]
    strata_kind: StrataKind,
    components: Vec<ComponentJson>,
    strata: Vec<StratumJson>,
}

fn parse_number(n: &Number) -> Result<BigRational> {
    match n {
        Number::Int(k) => Ok(BigRational::from_integer((*k).into())),
        Number::Text(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s, "1"),
            };
            let bad = || Error::InvalidInput(format!("`{s}` is not a rational number"));
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
    }
}

fn number(x: &BigRational) -> Number {
    match x.is_integer().then(|| x.to_integer().to_i64()).flatten() {
        Some(k) => Number::Int(k),
        None => Number::Text(x.to_string()),
    }
}

/// Parses resolution data; malformed documents raise `InvalidInput`.
pub fn from_json(text: &str) -> Result<ResolutionData> {
    let doc: ResolutionJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("resolution JSON: {e}")))?;
    let components = doc
        .components
        .iter()
        .map(|c| Ok(Component { id: c.id.clone(), discrepancy: parse_number(&c.discrepancy)? }))
        .collect::<Result<Vec<_>>>()?;
    let mode = match doc.mode {
        ModeJson::FullVariety => Mode::FullVariety,
        ModeJson::ExceptionalFiberOnly => Mode::ExceptionalFiberOnly,
    };
    let mut strata = BTreeMap::new();
    for s in &doc.strata {
        let mut j = Subset::EMPTY;
        for id in &s.subset {
            let i = components
                .iter()
                .position(|c| &c.id == id)
                .ok_or_else(|| Error::UnknownComponent(id.clone()))?;
            j = j.with(i);
        }
        let mut h = BiPoly::zero();
        for m in &s.hodge {
            h.add_term(m.i, m.j, parse_number(&m.coeff)?);
        }
        if strata.insert(j, h).is_some() {
            return Err(Error::InvalidInput(format!("stratum {:?} listed twice", s.subset)));
        }
    }
    match doc.strata_kind {
        StrataKind::Open => ResolutionData::from_open_strata(doc.dimension, mode, components, strata),
        StrataKind::Closed => ResolutionData::from_closed_strata(doc.dimension, mode, components, &strata),
    }
}

/// Serializes with open strata, in a form accepted back by [`from_json`].
pub fn to_json(data: &ResolutionData) -> String {
    let doc = ResolutionJson {
        dimension: data.dimension(),
        mode: match data.mode() {
            Mode::FullVariety => ModeJson::FullVariety,
            Mode::ExceptionalFiberOnly => ModeJson::ExceptionalFiberOnly,
        },
        strata_kind: StrataKind::Open,
        components: data
            .components()
            .iter()
            .map(|c| ComponentJson { id: c.id.clone(), discrepancy: number(&c.discrepancy) })
            .collect(),
        strata: data
            .open_strata()
            .iter()
            .map(|(&j, h)| StratumJson {
                subset: data.subset_ids(j).into_iter().map(String::from).collect(),
                hodge: h
                    .terms()
                    .rev()
                    .map(|(&(i, j), c)| MonomialJson { i, j, coeff: number(c) })
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}
