//! Complementary-codimension intersection numbers and cone membership.
//!
//! Two kinds of pairings are known exactly:
//!
//! * MS against MS (`A`, `B'`, `C` on both sides);
//! * ES against MS (`A'`, `B`, `C` against `A`, `B'`, `C`), where the ES and
//!   MS bases are dual.
//!
//! In both cases a pairing vanishes unless the two symbols have
//! complementary indices, i.e. `(k, l) = (n - j, n - i)`.

use num_traits::{Signed, Zero};

use crate::class::{rat, GradedClass, Rational};
use crate::error::{Error, Result};
use crate::symbol::{enumerate_basis, BasisId, BasisSymbol, Family, Grading};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairingConfig {
    /// Value of `A'_{i,j} · A_{n-j,n-i}`. Only its positivity is known.
    pub ap_a_diagonal: u64,
}

impl PairingConfig {
    pub fn new(ap_a_diagonal: u64) -> Result<Self> {
        if ap_a_diagonal == 0 {
            return Err(Error::InvalidInput("A'·A diagonal must be >= 1".into()));
        }
        Ok(PairingConfig { ap_a_diagonal })
    }
}

impl Default for PairingConfig {
    fn default() -> Self {
        PairingConfig { ap_a_diagonal: 1 }
    }
}

fn in_ms(f: Family) -> bool {
    matches!(f, Family::A | Family::Bp | Family::C)
}

fn in_es(f: Family) -> bool {
    matches!(f, Family::Ap | Family::B | Family::C)
}

/// MS × MS entry on complementary indices.
fn ms_ms(x: &BasisSymbol, y: &BasisSymbol) -> i64 {
    use Family::*;
    match (x.family(), y.family()) {
        (A, A) | (A, Bp) | (Bp, A) | (Bp, C) | (C, Bp) => 1,
        (Bp, Bp) if x.i() == x.j() => 2,
        (Bp, Bp) => 1,
        _ => 0,
    }
}

/// ES × MS entry on complementary indices; `row` is the ES symbol.
fn es_ms(row: &BasisSymbol, col: &BasisSymbol, cfg: &PairingConfig) -> Rational {
    use Family::*;
    match (row.family(), col.family()) {
        (Ap, A) => Rational::from_integer(cfg.ap_a_diagonal.into()),
        (C, Bp) => rat(1),
        // B_{0,0} is the point class and meets the fundamental class once.
        (B, C) if row.dimension() == 0 => rat(1),
        (B, C) => rat(2),
        _ => rat(0),
    }
}

pub fn pair_symbols(x: &BasisSymbol, y: &BasisSymbol, cfg: &PairingConfig) -> Result<Rational> {
    if x.n() != y.n() {
        return Err(Error::MixedAmbient(x.n(), y.n()));
    }
    let n = x.n();
    if x.dimension() + y.dimension() != 2 * n {
        return Err(Error::NotComplementary(format!(
            "{x} (codim {}) and {y} (codim {}) on P^{n}",
            x.codimension(),
            y.codimension()
        )));
    }
    let (fx, fy) = (x.family(), y.family());
    enum Route<'a> {
        MsMs,
        EsMs(&'a BasisSymbol, &'a BasisSymbol),
    }
    let route = if in_ms(fx) && in_ms(fy) {
        Route::MsMs
    } else if in_es(fx) && in_ms(fy) {
        Route::EsMs(x, y)
    } else if in_ms(fx) && in_es(fy) {
        Route::EsMs(y, x)
    } else {
        return Err(Error::UnsupportedFamilyPair(format!(
            "{fx}·{fy} has no known values"
        )));
    };
    let (ci, cj) = x.complementary_indices();
    if (y.i() as i64, y.j() as i64) != (ci, cj) {
        return Ok(Rational::zero());
    }
    Ok(match route {
        Route::MsMs => rat(ms_ms(x, y)),
        Route::EsMs(row, col) => es_ms(row, col, cfg),
    })
}

/// Bilinear extension of [`pair_symbols`].
pub fn pair_classes(x: &GradedClass, y: &GradedClass, cfg: &PairingConfig) -> Result<Rational> {
    if x.n() != y.n() {
        return Err(Error::MixedAmbient(x.n(), y.n()));
    }
    let mut total = Rational::zero();
    for (s, a) in x.iter() {
        for (t, b) in y.iter() {
            let v = pair_symbols(s, t, cfg)?;
            if !v.is_zero() {
                total += a * b * v;
            }
        }
    }
    Ok(total)
}

/// Intersection numbers between dimension-`k` rows and codimension-`k`
/// columns, each listed in [`enumerate_basis`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    pub n: u32,
    pub k: u32,
    pub row_basis: BasisId,
    pub col_basis: BasisId,
    pub rows: Vec<BasisSymbol>,
    pub cols: Vec<BasisSymbol>,
    pub entries: Vec<Vec<Rational>>,
}

impl IntersectionMatrix {
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r][c]
    }

    /// For each column, the unique row meeting it nontrivially, provided every
    /// row and every column has exactly one nonzero entry and it is positive.
    /// This is what it means for the two lists to be dual bases.
    pub fn dual_rows(&self) -> Option<Vec<usize>> {
        if self.rows.len() != self.cols.len() {
            return None;
        }
        let mut partner = vec![usize::MAX; self.cols.len()];
        for (r, row) in self.entries.iter().enumerate() {
            let nonzero: Vec<usize> = (0..row.len()).filter(|&c| !row[c].is_zero()).collect();
            let [c] = nonzero[..] else { return None };
            if !row[c].is_positive() || partner[c] != usize::MAX {
                return None;
            }
            partner[c] = r;
        }
        Some(partner)
    }

    /// Rows reordered so that row `c` is the dual partner of column `c`.
    pub fn diagonalized(&self) -> Option<IntersectionMatrix> {
        let perm = self.dual_rows()?;
        Some(IntersectionMatrix {
            rows: perm.iter().map(|&r| self.rows[r]).collect(),
            entries: perm.iter().map(|&r| self.entries[r].clone()).collect(),
            ..self.clone()
        })
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows.len() == self.cols.len()
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(r, row)| row.iter().enumerate().all(|(c, v)| (r == c) || v.is_zero()))
    }

    /// Exact rank by Gaussian elimination over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let cols = self.cols.len();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[c].is_zero() {
                    let f = &row[c] / &pivot_row[c];
                    for (v, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                        *v -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

pub fn intersection_matrix(
    n: u32,
    k: u32,
    row_basis: BasisId,
    col_basis: BasisId,
    cfg: &PairingConfig,
) -> Result<IntersectionMatrix> {
    match (row_basis, col_basis) {
        (BasisId::ES, BasisId::MS) | (BasisId::MS, BasisId::MS) => {}
        (r, c) => {
            return Err(Error::UnsupportedBasisPair(format!(
                "{r} rows against {c} columns"
            )))
        }
    }
    let rows = enumerate_basis(n, row_basis, Grading::Dim(k))?;
    let cols = enumerate_basis(n, col_basis, Grading::Codim(k))?;
    let entries = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| pair_symbols(r, c, cfg))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntersectionMatrix {
        n,
        k,
        row_basis,
        col_basis,
        rows,
        cols,
        entries,
    })
}

fn require_ms(x: &GradedClass) -> Result<()> {
    match x.families().find(|f| !BasisId::MS.contains(*f)) {
        Some(f) => Err(Error::WrongBasis(format!(
            "{f} is not an MS family; convert first"
        ))),
        None => Ok(()),
    }
}

/// `x` written in the MS basis is nef in codimension `k` iff every
/// coefficient is nonnegative: the MS symbols span the (simplicial) nef cone.
pub fn is_nef(x: &GradedClass, k: u32) -> Result<bool> {
    require_ms(x)?;
    check_grade(x, 2 * x.n() as i64 - k as i64, k, "codimension")?;
    Ok(x.iter().all(|(_, q)| !q.is_negative()))
}

/// Dual-cone test: `x` of dimension `k` is effective iff it pairs
/// nonnegatively with every nef generator of codimension `k`.
pub fn is_effective(x: &GradedClass, k: u32, cfg: &PairingConfig) -> Result<bool> {
    Ok(effective_pairings(x, k, cfg)?
        .iter()
        .all(|v| !v.is_negative()))
}

/// Pairings of `x` against the codimension-`k` MS basis, in listing order.
pub fn effective_pairings(x: &GradedClass, k: u32, cfg: &PairingConfig) -> Result<Vec<Rational>> {
    require_ms(x)?;
    check_grade(x, k as i64, k, "dimension")?;
    enumerate_basis(x.n(), BasisId::MS, Grading::Codim(k))?
        .into_iter()
        .map(|y| pair_classes(x, &GradedClass::from_symbol(y), cfg))
        .collect()
}

fn check_grade(x: &GradedClass, dim: i64, k: u32, what: &str) -> Result<()> {
    if k > 2 * x.n() {
        return Err(Error::InvalidGrading(format!(
            "{what} {k} outside [0, {}]",
            2 * x.n()
        )));
    }
    match x.homogeneous_dimension()? {
        Some(d) if d as i64 != dim => Err(Error::NotHomogeneous(format!(
            "{x} does not have {what} {k}"
        ))),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::linear_combine;
    use crate::symbol::validate_symbol;

    fn s(f: Family, i: i64, j: i64, n: i64) -> BasisSymbol {
        validate_symbol(f, i, j, n).unwrap()
    }

    fn cls(n: u32, terms: &[(i64, Family, i64, i64)]) -> GradedClass {
        let pairs: Vec<_> = terms
            .iter()
            .map(|&(q, f, i, j)| (rat(q), GradedClass::from_symbol(s(f, i, j, n as i64))))
            .collect();
        if pairs.is_empty() {
            GradedClass::zero(n)
        } else {
            linear_combine(&pairs).unwrap()
        }
    }

    const CFG: PairingConfig = PairingConfig { ap_a_diagonal: 1 };

    #[test]
    fn symbol_examples() {
        use Family::*;
        for n in 2..8 {
            assert_eq!(
                pair_symbols(&s(A, 0, 1, n), &s(A, n - 1, n, n), &CFG).unwrap(),
                rat(1)
            );
            assert_eq!(
                pair_symbols(&s(Bp, 1, 1, n), &s(Bp, n - 1, n - 1, n), &CFG).unwrap(),
                rat(2)
            );
        }
        for n in 3..8 {
            assert_eq!(
                pair_symbols(&s(B, 1, 2, n), &s(C, n - 2, n - 1, n), &CFG).unwrap(),
                rat(2)
            );
            // A'_{0,1} against every complementary B'
            for t in
                crate::symbol::enumerate_basis(n as u32, BasisId::MS, Grading::Codim(1)).unwrap()
            {
                if t.family() == Bp {
                    assert_eq!(pair_symbols(&s(Ap, 0, 1, n), &t, &CFG).unwrap(), rat(0));
                }
            }
        }
    }

    #[test]
    fn errors() {
        use Family::*;
        assert!(matches!(
            pair_symbols(&s(A, 0, 1, 2), &s(A, 0, 1, 2), &CFG),
            Err(Error::NotComplementary(_))
        ));
        assert!(matches!(
            pair_symbols(&s(Ap, 0, 2, 2), &s(B, 1, 1, 2), &CFG),
            Err(Error::UnsupportedFamilyPair(_))
        ));
        assert!(matches!(
            pair_symbols(&s(B, 1, 1, 2), &s(B, 1, 1, 2), &CFG),
            Err(Error::UnsupportedFamilyPair(_))
        ));
        assert!(matches!(
            pair_symbols(&s(A, 0, 1, 2), &s(A, 0, 1, 3), &CFG),
            Err(Error::MixedAmbient(2, 3))
        ));
        assert!(PairingConfig::new(0).is_err());
    }

    #[test]
    fn ap_a_diagonal_is_configurable() {
        let cfg = PairingConfig::new(5).unwrap();
        let v = pair_symbols(&s(Family::Ap, 0, 2, 3), &s(Family::A, 1, 3, 3), &cfg).unwrap();
        assert_eq!(v, rat(5));
        let w = pair_symbols(&s(Family::A, 1, 3, 3), &s(Family::Ap, 0, 2, 3), &cfg).unwrap();
        assert_eq!(w, rat(5));
    }

    #[test]
    fn class_examples() {
        use Family::*;
        let x = cls(2, &[(2, Bp, 1, 1), (-4, C, 1, 1)]);
        let y = cls(2, &[(1, Bp, 1, 1)]);
        assert_eq!(pair_classes(&x, &y, &CFG).unwrap(), rat(0));
        assert_eq!(
            pair_classes(&GradedClass::zero(2), &y, &CFG).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn es_ms_matrix_n2_k2() {
        let m = intersection_matrix(2, 2, BasisId::ES, BasisId::MS, &CFG).unwrap();
        let rows: Vec<_> = m.rows.iter().map(|s| s.to_string()).collect();
        let cols: Vec<_> = m.cols.iter().map(|s| s.to_string()).collect();
        assert_eq!(rows, ["A'_{0,2}", "B_{1,1}", "C_{1,1}"]);
        assert_eq!(cols, ["A_{0,2}", "B'_{1,1}", "C_{1,1}"]);
        // each row meets exactly one column: A'·A = 1, B·C = 2, C·B' = 1
        assert_eq!(m.dual_rows().unwrap(), [0, 2, 1]);
        let d = m.diagonalized().unwrap();
        assert!(d.is_diagonal());
        let diag: Vec<_> = (0..3).map(|i| d.get(i, i).clone()).collect();
        assert_eq!(diag, [rat(1), rat(1), rat(2)]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn ms_ms_matrix_n1() {
        let m = intersection_matrix(1, 1, BasisId::MS, BasisId::MS, &CFG).unwrap();
        assert_eq!(m.rows.len(), 1);
        assert_eq!(m.entries, vec![vec![rat(1)]]);
        assert!(matches!(
            intersection_matrix(2, 1, BasisId::ES, BasisId::ES, &CFG),
            Err(Error::UnsupportedBasisPair(_))
        ));
    }

    #[test]
    fn ap_never_meets_c() {
        for n in 1..8u32 {
            for k in 0..=2 * n {
                let m = intersection_matrix(n, k, BasisId::ES, BasisId::MS, &CFG).unwrap();
                for (r, row) in m.rows.iter().enumerate() {
                    for (c, col) in m.cols.iter().enumerate() {
                        if row.family() == Family::Ap && col.family() == Family::C {
                            assert!(m.get(r, c).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cone_examples() {
        use Family::*;
        assert!(is_nef(&cls(3, &[(1, Bp, 1, 1)]), 4).unwrap());
        assert!(!is_nef(&cls(2, &[(1, A, 0, 2), (-1, C, 1, 1)]), 2).unwrap());
        assert!(is_nef(&GradedClass::zero(2), 2).unwrap());

        let b11 = cls(2, &[(2, Bp, 1, 1), (-4, C, 1, 1)]);
        assert_eq!(
            effective_pairings(&b11, 2, &CFG).unwrap(),
            [rat(0), rat(0), rat(2)]
        );
        assert!(is_effective(&b11, 2, &CFG).unwrap());
        assert!(!is_effective(&cls(2, &[(-1, A, 0, 2)]), 2, &CFG).unwrap());
        for n in 1..6u32 {
            for k in 0..=2 * n {
                for y in enumerate_basis(n, BasisId::MS, Grading::Dim(k)).unwrap() {
                    assert!(
                        is_effective(&GradedClass::from_symbol(y), k, &CFG).unwrap(),
                        "{y}"
                    );
                }
            }
        }
    }

    #[test]
    fn cone_errors() {
        use Family::*;
        assert!(matches!(
            is_nef(&cls(2, &[(1, B, 1, 1)]), 2),
            Err(Error::WrongBasis(_))
        ));
        assert!(matches!(
            is_nef(&cls(2, &[(1, A, 0, 1)]), 2),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(
            is_effective(&cls(2, &[(1, A, 0, 1), (1, C, 1, 1)]), 1, &CFG),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(
            is_effective(&cls(2, &[(1, Ap, 0, 1)]), 1, &CFG),
            Err(Error::WrongBasis(_))
        ));
    }

    #[test]
    fn symmetric_where_both_orders_supported() {
        for n in 1..=8u32 {
            for k in 0..=2 * n {
                for rb in [BasisId::ES, BasisId::MS] {
                    for x in enumerate_basis(n, rb, Grading::Dim(k)).unwrap() {
                        for y in enumerate_basis(n, BasisId::MS, Grading::Codim(k)).unwrap() {
                            assert_eq!(
                                pair_symbols(&x, &y, &CFG).unwrap(),
                                pair_symbols(&y, &x, &CFG).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
