//! Sparse exact linear combinations of basis cycles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::symbol::{BasisSymbol, Family};

pub type Rational = BigRational;

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A rational combination of basis symbols on a fixed `P^{n[2]}`.
///
/// Terms are kept sorted by `(family, i, j)` and no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    n: u32,
    terms: BTreeMap<BasisSymbol, Rational>,
}

impl GradedClass {
    pub fn zero(n: u32) -> Self {
        GradedClass {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_symbol(symbol: BasisSymbol) -> Self {
        let mut c = GradedClass::zero(symbol.n());
        c.terms.insert(symbol, Rational::one());
        c
    }

    pub fn from_terms<I>(n: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisSymbol, Rational)>,
    {
        let mut c = GradedClass::zero(n);
        for (s, q) in terms {
            c.add_term(s, q)?;
        }
        Ok(c)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisSymbol, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, symbol: &BasisSymbol) -> Rational {
        self.terms
            .get(symbol)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, symbol: BasisSymbol, coeff: Rational) -> Result<()> {
        if symbol.n() != self.n {
            return Err(Error::MixedAmbient(self.n, symbol.n()));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(symbol).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&symbol);
        }
        Ok(())
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, coeff: &Rational, other: &GradedClass) -> Result<()> {
        if other.n != self.n {
            return Err(Error::MixedAmbient(self.n, other.n));
        }
        for (s, q) in &other.terms {
            self.add_term(*s, coeff * q)?;
        }
        Ok(())
    }

    pub fn scaled(&self, coeff: &Rational) -> GradedClass {
        if coeff.is_zero() {
            return GradedClass::zero(self.n);
        }
        GradedClass {
            n: self.n,
            terms: self.terms.iter().map(|(s, q)| (*s, q * coeff)).collect(),
        }
    }

    pub fn families(&self) -> impl Iterator<Item = Family> + '_ {
        self.terms.keys().map(|s| s.family())
    }

    /// The common dimension of all terms; `Ok(None)` for the zero class.
    pub fn homogeneous_dimension(&self) -> Result<Option<u32>> {
        let mut dims = self.terms.keys().map(|s| s.dimension());
        let Some(first) = dims.next() else {
            return Ok(None);
        };
        if dims.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotHomogeneous(format!("{self} mixes dimensions")))
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_dimension().is_ok()
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (s, q)) in self.terms.iter().enumerate() {
            let negative = q.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = q.abs();
            if mag.is_one() {
                write!(f, "{s}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{s}")?;
            } else {
                write!(f, "({mag}){s}")?;
            }
        }
        Ok(())
    }
}

/// Exact sum `Σ coeff · class`. All operands must live on the same `P^n`.
pub fn linear_combine(pairs: &[(Rational, GradedClass)]) -> Result<GradedClass> {
    let Some((_, first)) = pairs.first() else {
        return Err(Error::InvalidInput(
            "empty combination has no ambient dimension".into(),
        ));
    };
    let mut out = GradedClass::zero(first.n());
    for (q, c) in pairs {
        out.add_scaled(q, c)?;
    }
    Ok(out)
}
