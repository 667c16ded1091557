//! Degrees of secant varieties of complete intersections.
//!
//! For `X ⊂ P^n` cut out by hypersurfaces of degrees `d_1, ..., d_{n-m}`,
//! `dim X = m`, `2m + 1 < n`, the number `μ1(X) · deg Sec(X)` equals the
//! intersection number `C_{n-2m,n} · Π c2(O(d_i)^[2])` on `P^{n[2]}`.
//! Two routes evaluate it:
//!
//! * [`secant_degree_mu_closed`] sums the closed form over subsets;
//! * [`secant_degree_mu_intersection`] expands the product of `c2`'s and
//!   multiplies it out with the ring rules in [`crate::products`].
//!
//! [`secant_oracle`] gives classical counts for `m = 0` (chords through
//! finitely many points) and `m = 1` (curves, genus by adjunction).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chern::choose2;
use crate::class::{GradedClass, Rational};
use crate::error::{Error, Result};
use crate::pairing::{pair_classes, PairingConfig};
use crate::products::{eval_monomial, MonomialSpec};
use crate::symbol::{BasisSymbol, Family};

/// Power of two attached to the `k`-subset terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExponentVariant {
    /// `2^{k-1}`, as produced by the triple-product evaluation.
    #[default]
    Proof,
    /// `2^{k-1-m}`. Kept for comparison; disagrees with the curve oracle.
    Intro,
}

impl std::str::FromStr for ExponentVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proof" => Ok(ExponentVariant::Proof),
            "intro" => Ok(ExponentVariant::Intro),
            _ => Err(Error::InvalidInput(format!("unknown variant {s:?}"))),
        }
    }
}

impl std::fmt::Display for ExponentVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExponentVariant::Proof => "proof",
            ExponentVariant::Intro => "intro",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecantProblem {
    pub n: u32,
    pub degrees: Vec<u32>,
    /// Secant order: number of secant lines through a general point of `Sec(X)`.
    pub mu1: u32,
    pub variant: ExponentVariant,
}

/// Subsets are enumerated as bitmasks.
const MAX_HYPERSURFACES: usize = 30;

impl SecantProblem {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self> {
        let p = SecantProblem {
            n,
            degrees,
            mu1: 1,
            variant: ExponentVariant::Proof,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_mu1(mut self, mu1: u32) -> Result<Self> {
        self.mu1 = mu1;
        self.validate()?;
        Ok(self)
    }

    pub fn with_variant(mut self, variant: ExponentVariant) -> Self {
        self.variant = variant;
        self
    }

    /// Dimension of `X`.
    pub fn m(&self) -> u32 {
        self.n - self.degrees.len() as u32
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if self.degrees.is_empty() {
            return bad("at least one hypersurface degree is required".into());
        }
        if self.degrees.contains(&0) {
            return bad("hypersurface degrees must be >= 1".into());
        }
        if self.degrees.len() > self.n as usize {
            return bad(format!(
                "{} hypersurfaces in P^{} leave a negative-dimensional X",
                self.degrees.len(),
                self.n
            ));
        }
        if self.degrees.len() > MAX_HYPERSURFACES {
            return bad(format!(
                "at most {MAX_HYPERSURFACES} hypersurfaces are supported"
            ));
        }
        if self.mu1 == 0 {
            return bad("secant order mu1 must be >= 1".into());
        }
        let m = self.m();
        if 2 * m + 1 >= self.n {
            return bad(format!(
                "need 2m+1 < n, got m = {m}, n = {} (2m+1 = {})",
                self.n,
                2 * m + 1
            ));
        }
        Ok(())
    }

    pub fn has_linear_factor(&self) -> bool {
        self.degrees.contains(&1)
    }
}

/// `μ1 · deg Sec(X)` from the closed form: for `k` from `m+1` to `n-m`, sum
/// over `k`-subsets `S` of `Π_{S} C(d_j,2) · Π_{not S} d_l · 2^e`.
pub fn secant_degree_mu_closed(p: &SecantProblem) -> Result<BigInt> {
    p.validate()?;
    let (n, m) = (p.n, p.m());
    let r = p.degrees.len();
    let binoms: Vec<BigInt> = p.degrees.iter().map(|&d| choose2(d)).collect();
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << r) {
        let k = mask.count_ones();
        if k < m + 1 || k > n - m {
            continue;
        }
        let mut term = BigInt::one();
        for (idx, &d) in p.degrees.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                term *= &binoms[idx];
            } else {
                term *= d;
            }
        }
        let e = match p.variant {
            ExponentVariant::Proof => k - 1,
            ExponentVariant::Intro => k - 1 - m,
        };
        total += term << e;
    }
    Ok(total)
}

/// `μ1 · deg Sec(X)` as `C_{n-2m,n} · Π_i (C(d_i,2) B' + d_i C)` with
/// `B' = B'_{n-1,n-1}`, `C = C_{n-1,n-1}`, evaluated in the Chow ring.
pub fn secant_degree_mu_intersection(p: &SecantProblem) -> Result<BigInt> {
    p.validate()?;
    let (n, m) = (p.n, p.m());
    let r = p.degrees.len();
    // coefficient of B'^k C^{r-k} in the product of the c2's
    let mut poly = vec![BigInt::one()];
    for &d in &p.degrees {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c * d;
            next[k + 1] += c * choose2(d);
        }
        poly = next;
    }
    let cut = BasisSymbol::try_new(Family::C, (n - 2 * m) as i64, n as i64, n)
        .expect("2m+1 < n keeps C_{n-2m,n} in range");
    let cut = GradedClass::from_symbol(cut);
    let cfg = PairingConfig::default();
    let mut total = Rational::zero();
    // k = 0 is a pure C power; it pairs to zero with the cut for every m
    for (k, coeff) in poly.iter().enumerate().skip(1) {
        if coeff.is_zero() {
            continue;
        }
        let spec = MonomialSpec::new(n, k as u32, (r - k) as u32)?;
        let value = pair_classes(&eval_monomial(&spec)?, &cut, &cfg)?;
        total += Rational::from_integer(coeff.clone()) * value;
    }
    if !total.is_integer() {
        return Err(Error::InvalidInput(format!(
            "non-integral intersection number {total}"
        )));
    }
    Ok(total.to_integer())
}

/// Classical count of `μ1 · deg Sec(X)` when one is available (`m <= 1`).
pub fn secant_oracle(p: &SecantProblem) -> Result<Option<BigInt>> {
    p.validate()?;
    let deg: BigInt = p.degrees.iter().map(|&d| BigInt::from(d)).product();
    match p.m() {
        // Π d_i points, one line through each pair
        0 => Ok(Some(&deg * (&deg - 1) / 2)),
        // C(D-1, 2) - g, with 2g - 2 = D (Σ d_i - n - 1)
        1 => {
            let sum: i64 = p.degrees.iter().map(|&d| d as i64).sum();
            let twice_g_minus_2 = &deg * (sum - p.n as i64 - 1);
            let (half, rem) = twice_g_minus_2.div_rem(&BigInt::from(2));
            debug_assert!(rem.is_zero());
            let genus = half + 1;
            let chords = (&deg - 1) * (&deg - 2) / 2;
            Ok(Some(chords - genus))
        }
        _ => Ok(None),
    }
}

/// `deg Sec(X)` as an exact rational (closed form divided by `μ1`).
pub fn secant_degree(p: &SecantProblem) -> Result<Rational> {
    let total = secant_degree_mu_closed(p)?;
    Ok(Rational::new(total, BigInt::from(p.mu1)))
}
