//! JSON documents for classes and symbols.
//!
//! ```json
//! {"n": 2, "basis": "MS", "terms": [
//!   {"family": "B'", "i": 1, "j": 1, "coeff": "2"},
//!   {"family": "C",  "i": 1, "j": 1, "coeff": "-4"}
//! ]}
//! ```
//!
//! Coefficients are strings `"p"` or `"p/q"`, never floats.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::class::{GradedClass, Rational};
use crate::error::{Error, Result};
use crate::symbol::{validate_symbol, BasisId, BasisSymbol, Family};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub family: String,
    pub i: i64,
    pub j: i64,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDocument {
    pub n: i64,
    /// `"MS"`, `"ES"`, `"BB"` or `"mixed"`.
    pub basis: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Deserialize)]
struct SymbolRecord {
    family: String,
    i: i64,
    j: i64,
    #[serde(default)]
    n: Option<i64>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        position: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn at(position: impl Into<String>, e: Error) -> Error {
    match e {
        Error::InvalidInput(message) => Error::Parse {
            position: position.into(),
            message,
        },
        other => other,
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("{s:?} is not a rational of the form p or p/q"));
    let int = |t: &str| -> Result<BigInt> { t.trim().parse::<BigInt>().map_err(|_| bad()) };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(int(p)?, q))
        }
    }
}

/// Smallest basis containing every family of `x`.
pub fn basis_tag(x: &GradedClass) -> &'static str {
    [BasisId::MS, BasisId::ES, BasisId::BB]
        .into_iter()
        .find(|b| x.families().all(|f| b.contains(f)))
        .map(BasisId::label)
        .unwrap_or("mixed")
}

pub fn to_document(x: &GradedClass) -> ClassDocument {
    ClassDocument {
        n: x.n() as i64,
        basis: basis_tag(x).to_string(),
        terms: x
            .iter()
            .map(|(s, q)| TermRecord {
                family: s.family().label().to_string(),
                i: s.i() as i64,
                j: s.j() as i64,
                coeff: format_rational(q),
            })
            .collect(),
    }
}

pub fn from_document(doc: &ClassDocument) -> Result<GradedClass> {
    let declared = match doc.basis.as_str() {
        "mixed" => None,
        tag => Some(tag.parse::<BasisId>().map_err(|e| at("basis", e))?),
    };
    validate_symbol(Family::C, 1, 1, doc.n).map_err(|e| at("n", e))?;
    let mut x = GradedClass::zero(doc.n as u32);
    for (idx, t) in doc.terms.iter().enumerate() {
        let family: Family = t
            .family
            .parse()
            .map_err(|e| at(format!("terms[{idx}].family"), e))?;
        if let Some(b) = declared {
            if !b.contains(family) {
                return Err(Error::WrongBasis(format!(
                    "terms[{idx}]: {family} is not in the declared {b} basis"
                )));
            }
        }
        let s = validate_symbol(family, t.i, t.j, doc.n)?;
        let q = parse_rational(&t.coeff).map_err(|e| at(format!("terms[{idx}].coeff"), e))?;
        x.add_term(s, q)?;
    }
    Ok(x)
}

/// Canonical JSON text for `x`.
pub fn emit_class(x: &GradedClass) -> String {
    serde_json::to_string(&to_document(x)).expect("document serializes")
}

pub fn parse_class(text: &str) -> Result<GradedClass> {
    let doc: ClassDocument = serde_json::from_str(text).map_err(json_error)?;
    from_document(&doc)
}

/// Parses `{"family": "B'", "i": 1, "j": 1}`; an `"n"` field, if present,
/// must agree with `n`.
pub fn parse_symbol(text: &str, n: u32) -> Result<BasisSymbol> {
    let rec: SymbolRecord = serde_json::from_str(text).map_err(json_error)?;
    if let Some(m) = rec.n {
        if m != n as i64 {
            return Err(Error::MixedAmbient(n, m.clamp(0, u32::MAX as i64) as u32));
        }
    }
    let family: Family = rec.family.parse().map_err(|e| at("family", e))?;
    validate_symbol(family, rec.i, rec.j, n as i64)
}
