//! Cycle families, basis membership, grading, and Chow group ranks.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the five families of cycles on `P^{n[2]}`.
///
/// Variant order is the canonical term order used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    /// `A'`
    Ap,
    B,
    /// `B'`
    Bp,
    C,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::Ap, Family::B, Family::Bp, Family::C];

    pub fn label(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::Ap => "A'",
            Family::B => "B",
            Family::Bp => "B'",
            Family::C => "C",
        }
    }

    /// Whether `(i, j)` is in range for this family on `P^n`.
    pub fn admits(self, i: i64, j: i64, n: i64) -> bool {
        match self {
            Family::A | Family::Ap => 0 <= i && i < j && j <= n,
            Family::B | Family::Bp => 0 <= i && i <= j && j < n,
            Family::C => 0 < i && i <= j && j <= n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Family::A),
            "A'" | "Ap" => Ok(Family::Ap),
            "B" => Ok(Family::B),
            "B'" | "Bp" => Ok(Family::Bp),
            "C" => Ok(Family::C),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}

/// A single basis cycle `F_{i,j}` on `P^{n[2]}`; its dimension is `i + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisSymbol {
    family: Family,
    i: u32,
    j: u32,
    n: u32,
}

impl BasisSymbol {
    /// Like [`validate_symbol`] but returns `None` instead of an error.
    /// Product rules use this to drop symbols whose indices fall out of range.
    pub fn try_new(family: Family, i: i64, j: i64, n: u32) -> Option<BasisSymbol> {
        if n >= 1 && family.admits(i, j, n as i64) {
            Some(BasisSymbol {
                family,
                i: i as u32,
                j: j as u32,
                n,
            })
        } else {
            None
        }
    }

    pub fn family(&self) -> Family {
        self.family
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

    pub fn dimension(&self) -> u32 {
        self.i + self.j
    }

    pub fn codimension(&self) -> u32 {
        2 * self.n - self.dimension()
    }

    /// Indices `(n - j, n - i)` of the only partner that can pair nontrivially.
    pub fn complementary_indices(&self) -> (i64, i64) {
        let n = self.n as i64;
        (n - self.j as i64, n - self.i as i64)
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.family, self.i, self.j)
    }
}

pub fn validate_symbol(family: Family, i: i64, j: i64, n: i64) -> Result<BasisSymbol> {
    if n < 1 || n > u32::MAX as i64 / 2 {
        return Err(Error::InvalidInput(format!(
            "ambient dimension must be >= 1, got {n}"
        )));
    }
    BasisSymbol::try_new(family, i, j, n as u32).ok_or_else(|| {
        let rule = match family {
            Family::A | Family::Ap => "0 <= i < j <= n",
            Family::B | Family::Bp => "0 <= i <= j < n",
            Family::C => "0 < i <= j <= n",
        };
        Error::InvalidIndex(format!("{family}_{{{i},{j}}} on P^{n} violates {rule}"))
    })
}

/// The three bases of the Chow ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisId {
    /// `A ∪ B ∪ C`, closures of the torus cells.
    BB,
    /// `A' ∪ B ∪ C`, spans the effective cones.
    ES,
    /// `A ∪ B' ∪ C`, spans the nef cones.
    MS,
}

impl BasisId {
    /// Families in listing order.
    pub fn families(self) -> [Family; 3] {
        match self {
            BasisId::BB => [Family::A, Family::B, Family::C],
            BasisId::ES => [Family::Ap, Family::B, Family::C],
            BasisId::MS => [Family::A, Family::Bp, Family::C],
        }
    }

    pub fn contains(self, family: Family) -> bool {
        self.families().contains(&family)
    }

    pub fn label(self) -> &'static str {
        match self {
            BasisId::BB => "BB",
            BasisId::ES => "ES",
            BasisId::MS => "MS",
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "BB" => Ok(BasisId::BB),
            "ES" => Ok(BasisId::ES),
            "MS" => Ok(BasisId::MS),
            _ => Err(Error::InvalidInput(format!("unknown basis {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    Dim(u32),
    Codim(u32),
    All,
}

/// Lists a basis in the conventional order: families in basis order; within
/// a family, dimension-graded lists ascend in the first index and
/// codimension-graded lists descend. `Grading::All` lists each family
/// lexicographically by `(i, j)`.
pub fn enumerate_basis(n: u32, basis: BasisId, grading: Grading) -> Result<Vec<BasisSymbol>> {
    if n == 0 {
        return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
    }
    let n64 = n as i64;
    let mut out = Vec::new();
    match grading {
        Grading::Dim(k) | Grading::Codim(k) => {
            if k > 2 * n {
                return Err(Error::InvalidGrading(format!(
                    "degree {k} outside [0, {}]",
                    2 * n
                )));
            }
            let (dim, descending) = match grading {
                Grading::Dim(_) => (k as i64, false),
                _ => (2 * n64 - k as i64, true),
            };
            for family in basis.families() {
                let start = out.len();
                out.extend((0..=dim).filter_map(|i| BasisSymbol::try_new(family, i, dim - i, n)));
                if descending {
                    out[start..].reverse();
                }
            }
        }
        Grading::All => {
            for family in basis.families() {
                for i in 0..=n64 {
                    out.extend((i..=n64).filter_map(|j| BasisSymbol::try_new(family, i, j, n)));
                }
            }
        }
    }
    Ok(out)
}

/// Rank of the codimension-`k` Chow group of `P^{n[2]}`.
pub fn chow_rank(n: u32, k: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("ambient dimension must be >= 1".into()));
    }
    if k > 2 * n {
        return Err(Error::InvalidGrading(format!(
            "codimension {k} outside [0, {}]",
            2 * n
        )));
    }
    if k == 0 || k == 2 * n {
        return Ok(1);
    }
    // min(ceil(x/2), ceil(n - x/2)) with ceil(n - x/2) = n - floor(x/2)
    let count = |x: i64| -> i64 {
        let n = n as i64;
        let up = (x + 1).div_euclid(2);
        let down = n - x.div_euclid(2);
        up.min(down).max(0)
    };
    let k = k as i64;
    Ok((count(k) + count(k + 1) + count(k - 1)) as u64)
}
