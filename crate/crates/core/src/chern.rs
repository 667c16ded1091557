//! Chern classes of the rank-two tautological bundles `O(d)^[2]`.

use num_bigint::BigInt;

use crate::class::{rat, GradedClass, Rational};
use crate::error::{Error, Result};
use crate::symbol::{BasisSymbol, Family};

/// `O_{P^n}(d)^[2]`, the pushforward of `O(d)` from the universal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TautBundle {
    pub n: u32,
    pub d: u32,
}

impl TautBundle {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidInput(format!(
                "tautological bundle needs n >= 1 and d >= 1, got n = {n}, d = {d}"
            )));
        }
        Ok(TautBundle { n, d })
    }
}

pub(crate) fn choose2(d: u32) -> BigInt {
    let d = BigInt::from(d);
    &d * (&d - 1) / 2
}

/// `(c1, c2)` in the MS basis:
///
/// `c1 = (d-1) A_{n-1,n} + C_{n-1,n}`, `c2 = C(d,2) B'_{n-1,n-1} + d C_{n-1,n-1}`.
///
/// On `P^1` the `C` terms do not exist and are dropped.
pub fn chern_taut(bundle: &TautBundle) -> Result<(GradedClass, GradedClass)> {
    let TautBundle { n, d } = TautBundle::new(bundle.n, bundle.d)?;
    let top = n as i64;
    let term = |c: &mut GradedClass, f: Family, i: i64, j: i64, q: Rational| {
        // C_{0,1} and C_{0,0} are absent when n = 1
        if let Some(s) = BasisSymbol::try_new(f, i, j, n) {
            c.add_term(s, q).expect("same n");
        }
    };
    let mut c1 = GradedClass::zero(n);
    term(&mut c1, Family::A, top - 1, top, rat(d as i64 - 1));
    term(&mut c1, Family::C, top - 1, top, rat(1));
    let mut c2 = GradedClass::zero(n);
    term(
        &mut c2,
        Family::Bp,
        top - 1,
        top - 1,
        Rational::from_integer(choose2(d)),
    );
    term(&mut c2, Family::C, top - 1, top - 1, rat(d as i64));
    Ok((c1, c2))
}
