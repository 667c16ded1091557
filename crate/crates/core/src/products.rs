//! Multiplication by the two top codimension-two classes `B'_{n-1,n-1}` and
//! `C_{n-1,n-1}`, and the closed form for powers of `B'_{n-1,n-1}`.
//!
//! Termwise rules (outputs with out-of-range indices are zero):
//!
//! ```text
//! B'_{n-1,n-1} · A_{i,j}  = 2 B'_{i-1,j-1}
//! B'_{n-1,n-1} · B_{i,j}  = 2 B_{i-2,j}
//! B'_{n-1,n-1} · C_{i,i}  =   B'_{i-1,i-1}
//! C_{n-1,n-1}  · A_{i,j}  =   A_{i-1,j-1}
//! C_{n-1,n-1}  · B'_{i,j} =   B'_{i-1,j-1}
//! ```
//!
//! `B'` terms are multiplied by `B'_{n-1,n-1}` through the change of basis
//! `B_{i,j} = 2(B'_{i,j} - A_{i,j})` (`i < j`) and
//! `B_{i,i} = 2(B'_{i,i} - 2 C_{i,i})` (`i > 0`).

use num_bigint::BigInt;
use num_traits::One;

use crate::class::{rat, GradedClass, Rational};
use crate::error::{Error, Result};
use crate::symbol::{BasisSymbol, Family};

/// `B'_{n-1,n-1}^a · C_{n-1,n-1}^b` on `P^{n[2]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialSpec {
    pub n: u32,
    pub a: u32,
    pub b: u32,
}

impl MonomialSpec {
    pub fn new(n: u32, a: u32, b: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
        }
        if a as u64 + b as u64 > n as u64 {
            return Err(Error::InvalidInput(format!(
                "codimension 2({a}+{b}) exceeds 2n = {}",
                2 * n
            )));
        }
        Ok(MonomialSpec { n, a, b })
    }
}

fn push(out: &mut GradedClass, family: Family, i: i64, j: i64, coeff: Rational) {
    if let Some(s) = BasisSymbol::try_new(family, i, j, out.n()) {
        out.add_term(s, coeff).expect("same ambient dimension");
    }
}

/// Rewrites a `B` symbol in MS coordinates.
pub fn to_ms(x: &BasisSymbol) -> Result<GradedClass> {
    if x.family() != Family::B {
        return Err(Error::UnsupportedFamily(format!(
            "to_ms expects a B symbol, got {x}"
        )));
    }
    let (i, j) = (x.i() as i64, x.j() as i64);
    let mut out = GradedClass::zero(x.n());
    if i < j {
        push(&mut out, Family::Bp, i, j, rat(2));
        push(&mut out, Family::A, i, j, rat(-2));
    } else if i > 0 {
        push(&mut out, Family::Bp, i, i, rat(2));
        push(&mut out, Family::C, i, i, rat(-4));
    } else {
        // both B_{0,0} and B'_{0,0} are the class of a point
        push(&mut out, Family::Bp, 0, 0, rat(1));
    }
    Ok(out)
}

/// Replaces every `B` term by its MS expansion.
fn into_ms(x: GradedClass) -> GradedClass {
    let mut out = GradedClass::zero(x.n());
    for (s, q) in x.iter() {
        if s.family() == Family::B {
            out.add_scaled(q, &to_ms(s).expect("B family"))
                .expect("same n");
        } else {
            out.add_term(*s, q.clone()).expect("same n");
        }
    }
    out
}

/// Product of `B'_{n-1,n-1}` with one symbol, possibly leaving `B` terms.
fn bprime_times(s: &BasisSymbol, q: &Rational, out: &mut GradedClass) -> Result<()> {
    let (i, j) = (s.i() as i64, s.j() as i64);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    match s.family() {
        Family::A => push(out, Family::Bp, i - 1, j - 1, q * rat(2)),
        Family::B => push(out, Family::B, i - 2, j, q * rat(2)),
        Family::C if i == j => push(out, Family::Bp, i - 1, i - 1, q.clone()),
        Family::Bp if i < j => {
            // B'_{i,j} = B_{i,j}/2 + A_{i,j}
            let b = BasisSymbol::try_new(Family::B, i, j, s.n()).expect("same ranges as B'");
            let a = BasisSymbol::try_new(Family::A, i, j, s.n()).expect("i < j < n");
            bprime_times(&b, &(q * &half), out)?;
            bprime_times(&a, q, out)?;
        }
        Family::Bp if i > 0 => {
            // B'_{i,i} = B_{i,i}/2 + 2 C_{i,i}
            let b = BasisSymbol::try_new(Family::B, i, i, s.n()).expect("same ranges as B'");
            let c = BasisSymbol::try_new(Family::C, i, i, s.n()).expect("0 < i < n");
            bprime_times(&b, &(q * &half), out)?;
            bprime_times(&c, &(q * rat(2)), out)?;
        }
        // B'_{0,0} is a point; anything of positive codimension kills it
        Family::Bp => {}
        Family::C => {
            return Err(Error::UnsupportedTerm(format!(
                "no rule for B'_{{n-1,n-1}} · {s} (unbalanced C)"
            )))
        }
        Family::Ap => {
            return Err(Error::UnsupportedTerm(format!(
                "no rule for B'_{{n-1,n-1}} · {s}"
            )))
        }
    }
    Ok(())
}

/// `B'_{n-1,n-1} · x`, returned in MS coordinates.
pub fn mul_bprime_top(x: &GradedClass) -> Result<GradedClass> {
    let mut out = GradedClass::zero(x.n());
    for (s, q) in x.iter() {
        bprime_times(s, q, &mut out)?;
    }
    Ok(into_ms(out))
}

/// `C_{n-1,n-1} · x` for `x` supported on `A` and `B'`.
pub fn mul_c_top(x: &GradedClass) -> Result<GradedClass> {
    let mut out = GradedClass::zero(x.n());
    for (s, q) in x.iter() {
        let (i, j) = (s.i() as i64, s.j() as i64);
        match s.family() {
            f @ (Family::A | Family::Bp) => push(&mut out, f, i - 1, j - 1, q.clone()),
            _ => {
                return Err(Error::UnsupportedTerm(format!(
                    "no rule for C_{{n-1,n-1}} · {s}"
                )))
            }
        }
    }
    Ok(out)
}

/// Closed form for `B'_{n-1,n-1}^k`, `1 <= k <= n`:
///
/// `2^{k-1} (B'_{n-k,n-k} + Σ_{i=1}^{r} (B'_{n-k-i,n-k+i} - A_{n-k-i,n-k+i}))`
///
/// with `r = k - 1` when `2k - 1 <= n` and `r = n - k` otherwise.
pub fn bprime_top_power(n: u32, k: u32) -> Result<GradedClass> {
    if n == 0 {
        return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidExponent(format!(
            "exponent {k} outside [1, {n}]"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    let scale = Rational::from_integer(BigInt::one() << (k - 1));
    let bound = if 2 * k - 1 <= n { k - 1 } else { n - k };
    let mut out = GradedClass::zero(n as u32);
    push(&mut out, Family::Bp, n - k, n - k, scale.clone());
    for i in 1..=bound {
        push(&mut out, Family::Bp, n - k - i, n - k + i, scale.clone());
        push(&mut out, Family::A, n - k - i, n - k + i, -scale.clone());
    }
    Ok(out)
}

/// `B'_{n-1,n-1}^a · C_{n-1,n-1}^b` for `a >= 1`.
pub fn eval_monomial(spec: &MonomialSpec) -> Result<GradedClass> {
    let spec = MonomialSpec::new(spec.n, spec.a, spec.b)?;
    if spec.a == 0 {
        return Err(Error::UnsupportedMonomial(format!(
            "no rule for a pure power C_{{n-1,n-1}}^{}",
            spec.b
        )));
    }
    let mut x = bprime_top_power(spec.n, spec.a)?;
    for _ in 0..spec.b {
        x = mul_c_top(&x)?;
    }
    Ok(x)
}
