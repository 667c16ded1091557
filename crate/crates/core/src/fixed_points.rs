//! Torus-fixed points of `P^{n[2]}` and their Białynicki-Birula cells.
//!
//! For a diagonal `C^*`-action with weights `a_0 << ... << a_n` the fixed
//! points are the monomial ideals of colength two. Each has `n - 1` linear
//! generators plus one quadratic generator, giving three shapes indexed by
//! `i < j`:
//!
//! * `I_{i,j}`: quadric `x_i x_j`, all other variables;
//! * `J_{i,j}`: quadric `x_j^2`, all variables except `x_i`, `x_j`;
//! * `K_{i,j}`: quadric `x_i^2`, all variables except `x_i`, `x_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::symbol::{BasisSymbol, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixedPointKind {
    I,
    J,
    K,
}

impl fmt::Display for FixedPointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixedPointKind::I => "I",
            FixedPointKind::J => "J",
            FixedPointKind::K => "K",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdealDescriptor {
    kind: FixedPointKind,
    i: u32,
    j: u32,
    n: u32,
}

impl MonomialIdealDescriptor {
    pub fn new(kind: FixedPointKind, i: u32, j: u32, n: u32) -> Result<Self> {
        if n == 0 || i >= j || j > n {
            return Err(Error::InvalidIndex(format!(
                "{kind}_{{{i},{j}}} on P^{n} needs 0 <= i < j <= n"
            )));
        }
        Ok(MonomialIdealDescriptor { kind, i, j, n })
    }

    pub fn kind(&self) -> FixedPointKind {
        self.kind
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Generators of the ideal, e.g. `(x0*x1, x2)` for `I_{0,1}` on `P^2`.
    pub fn generators(&self) -> Vec<String> {
        let (i, j) = (self.i, self.j);
        let quadric = match self.kind {
            FixedPointKind::I => format!("x{i}*x{j}"),
            FixedPointKind::J => format!("x{j}^2"),
            FixedPointKind::K => format!("x{i}^2"),
        };
        std::iter::once(quadric)
            .chain(
                (0..=self.n)
                    .filter(|&v| v != i && v != j)
                    .map(|v| format!("x{v}")),
            )
            .collect()
    }
}

impl fmt::Display for MonomialIdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.kind, self.i, self.j)
    }
}

/// All `3 * C(n+1, 2)` fixed points, grouped by kind then `(i, j)`.
pub fn enumerate_fixed_points(n: u32) -> Result<Vec<MonomialIdealDescriptor>> {
    if n == 0 {
        return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
    }
    let mut out = Vec::with_capacity(3 * (n as usize + 1) * n as usize / 2);
    for kind in [FixedPointKind::I, FixedPointKind::J, FixedPointKind::K] {
        for i in 0..n {
            for j in i + 1..=n {
                out.push(MonomialIdealDescriptor { kind, i, j, n });
            }
        }
    }
    Ok(out)
}

/// Class and dimension of the cell flowing to `fp`.
pub fn bb_cell_of(fp: &MonomialIdealDescriptor) -> (BasisSymbol, u32) {
    let (i, j) = (fp.i as i64, fp.j as i64);
    let (family, a, b) = match fp.kind {
        FixedPointKind::I => (Family::A, i, j),
        FixedPointKind::J => (Family::B, i, j - 1),
        FixedPointKind::K => (Family::C, i + 1, j),
    };
    let symbol = BasisSymbol::try_new(family, a, b, fp.n)
        .expect("descriptor invariants map into the family index ranges");
    (symbol, symbol.dimension())
}
