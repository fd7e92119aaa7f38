//! JSON documents for algebras, posets and element maps.
//!
//! ```json
//! {
//!   "name": "H3",
//!   "elements": ["0", "a", "1"],
//!   "imp": [[2, 2, 2], [0, 2, 2], [0, 1, 2]],
//!   "one": 2,
//!   "zero": 0,
//!   "tau": [1, 2, 2]
//! }
//! ```
//!
//! `elements` is either a count or a list of labels; indices follow document
//! order. Unknown fields are rejected.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{check_axioms, AxiomClass, FiniteHilbertAlgebra, UnaryMap};
use crate::error::{Error, Result};
use crate::frontal::{check_frontal, Flavor};
use crate::poset::FinitePoset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Elements {
    Count(usize),
    Labels(Vec<String>),
}

impl Elements {
    pub fn len(&self) -> usize {
        match self {
            Elements::Count(n) => *n,
            Elements::Labels(l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn labels(&self) -> Option<Vec<String>> {
        match self {
            Elements::Count(_) => None,
            Elements::Labels(l) => Some(l.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Elements,
    pub imp: Vec<Vec<usize>>,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Elements,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub map: Vec<usize>,
}

/// A validated algebra document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub name: Option<String>,
    pub algebra: FiniteHilbertAlgebra,
    pub tau: Option<UnaryMap>,
    /// non-fatal findings, such as a non-frontal `tau` accepted on request
    pub warnings: Vec<String>,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses and validates an algebra document.
///
/// The algebra must pass the axioms of the class its optional fields declare.
/// A `tau` that is not frontal is an error unless `allow_non_frontal` is set,
/// in which case the failure becomes a warning.
pub fn parse_algebra(text: &str, allow_non_frontal: bool) -> Result<LoadedAlgebra> {
    let doc: AlgebraDocument = from_json(text)?;
    load_algebra(doc, allow_non_frontal)
}

/// Parses an algebra document checking only shapes and ranges, so that a
/// caller can report axiom failures itself.
pub fn parse_algebra_unchecked(text: &str) -> Result<LoadedAlgebra> {
    let doc: AlgebraDocument = from_json(text)?;
    let (algebra, tau) = assemble(&doc)?;
    Ok(LoadedAlgebra {
        name: doc.name,
        algebra,
        tau,
        warnings: Vec::new(),
    })
}

fn assemble(doc: &AlgebraDocument) -> Result<(FiniteHilbertAlgebra, Option<UnaryMap>)> {
    let n = doc.elements.len();
    if doc.imp.len() != n {
        return Err(Error::Malformed(format!("imp has {} rows for {n} elements", doc.imp.len())));
    }
    let mut algebra = FiniteHilbertAlgebra::new(doc.imp.clone(), doc.one)?;
    if let Some(labels) = doc.elements.labels() {
        algebra = algebra.with_labels(labels)?;
    }
    if let Some(z) = doc.zero {
        algebra = algebra.with_zero(z)?;
    }
    if let Some(m) = &doc.meet {
        algebra = algebra.with_meet(m.clone())?;
    }
    let tau = doc.tau.as_ref().map(|t| UnaryMap::new(t.clone(), n)).transpose()?;
    Ok((algebra, tau))
}

pub fn load_algebra(doc: AlgebraDocument, allow_non_frontal: bool) -> Result<LoadedAlgebra> {
    let (algebra, tau) = assemble(&doc)?;
    let class = AxiomClass::declared_by(&algebra);
    let report = check_axioms(&algebra, class)?;
    if let Some(v) = report.first() {
        return Err(Error::AxiomFailure {
            class: class.to_string(),
            violation: v.clone(),
        });
    }
    let mut warnings = Vec::new();
    let tau = match tau {
        None => None,
        Some(t) => {
            let report = check_frontal(&algebra, &t, Flavor::Hilbert)?;
            if let Some(v) = report.first() {
                if !allow_non_frontal {
                    return Err(Error::NotFrontal(v.clone()));
                }
                warnings.push(format!("tau is not frontal: {v}"));
            }
            Some(t)
        }
    };
    Ok(LoadedAlgebra {
        name: doc.name,
        algebra,
        tau,
        warnings,
    })
}

/// Parses a poset given by `leq` pairs (already transitive) or `covers`
/// (closed reflexively and transitively).
pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    let doc: PosetDocument = from_json(text)?;
    let n = doc.elements.len();
    match (doc.leq, doc.covers) {
        (Some(pairs), None) => FinitePoset::from_pairs(n, &pairs),
        (None, Some(covers)) => FinitePoset::from_covers(n, &covers),
        (None, None) => Err(Error::Malformed("poset needs either leq or covers".into())),
        (Some(_), Some(_)) => Err(Error::Malformed("poset has both leq and covers".into())),
    }
}

/// Parses `{"map": [...]}` for a source of `len` elements.
pub fn parse_map(text: &str, len: usize) -> Result<Vec<usize>> {
    let doc: MapDocument = from_json(text)?;
    if doc.map.len() != len {
        return Err(Error::Malformed(format!("map has {} entries, expected {len}", doc.map.len())));
    }
    Ok(doc.map)
}

pub fn algebra_document(alg: &FiniteHilbertAlgebra, tau: Option<&UnaryMap>, name: Option<&str>) -> AlgebraDocument {
    AlgebraDocument {
        name: name.map(str::to_string),
        elements: match alg.labels() {
            Some(l) => Elements::Labels(l.to_vec()),
            None => Elements::Count(alg.len()),
        },
        imp: alg.imp_table(),
        one: alg.one(),
        zero: alg.zero(),
        meet: alg.meet_table(),
        tau: tau.map(|t| t.as_slice().to_vec()),
    }
}

/// Writes a document with one table row per line.
pub fn emit_algebra(alg: &FiniteHilbertAlgebra, tau: Option<&UnaryMap>, name: Option<&str>) -> String {
    let value = serde_json::to_value(algebra_document(alg, tau, name)).expect("documents serialize");
    let Value::Object(fields) = value else { unreachable!() };
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| {
            let rendered = match v {
                Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
                    let lines: Vec<String> = rows.iter().map(|r| format!("    {r}")).collect();
                    format!("[\n{}\n  ]", lines.join(",\n"))
                }
                other => other.to_string(),
            };
            format!("  \"{k}\": {rendered}")
        })
        .collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}
