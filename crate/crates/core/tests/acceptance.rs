//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use hilb2_core::{
    bb_cell_of, bprime_top_power, chern_taut, chow_rank, effective_pairings, enumerate_basis,
    enumerate_fixed_points, eval_monomial, intersection_matrix, is_effective, is_nef,
    mul_bprime_top, pair_classes, pair_symbols, secant_degree_mu_closed,
    secant_degree_mu_intersection, to_ms, validate_symbol, BasisId, BasisSymbol, ExponentVariant,
    Family, GradedClass, Grading, MonomialSpec, PairingConfig, Rational, SecantProblem, TautBundle,
};

type Check = Result<String, String>;
type Instances = Vec<(u32, Vec<u32>)>;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn sym(f: Family, i: i64, j: i64, n: u32) -> BasisSymbol {
    validate_symbol(f, i, j, n as i64).unwrap()
}

fn class(f: Family, i: i64, j: i64, n: u32) -> GradedClass {
    GradedClass::from_symbol(sym(f, i, j, n))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || b > a {
        return 0;
    }
    (0..b).fold(1, |acc, t| acc * (a - t) / (t + 1))
}

/// Symbols of a family with dimension `dim`, counted straight from the index ranges.
fn family_count(f: Family, n: i64, dim: i64) -> u64 {
    let mut c = 0;
    for i in 0..=n {
        for j in 0..=n {
            let ok = match f {
                Family::A | Family::Ap => i < j,
                Family::B | Family::Bp => i <= j && j < n,
                Family::C => 0 < i && i <= j,
            };
            if ok && i + j == dim {
                c += 1;
            }
        }
    }
    c
}

fn rank_identities() -> Check {
    let start = Instant::now();
    for n in 1..=30u32 {
        let ranks: Vec<u64> = (0..=2 * n).map(|k| chow_rank(n, k).unwrap()).collect();
        let total: u64 = ranks.iter().sum();
        ensure(total as i64 == 3 * binom(n as i64 + 1, 2), || {
            format!("n={n}: total {total}")
        })?;
        let mut cells = vec![0u64; 2 * n as usize + 1];
        for fp in enumerate_fixed_points(n).unwrap() {
            cells[bb_cell_of(&fp).1 as usize] += 1;
        }
        for k in 0..=2 * n {
            let dim = 2 * n - k;
            let r = ranks[k as usize];
            for b in [BasisId::BB, BasisId::ES, BasisId::MS] {
                let listed = enumerate_basis(n, b, Grading::Codim(k)).unwrap().len() as u64;
                let counted: u64 = b
                    .families()
                    .iter()
                    .map(|&f| family_count(f, n as i64, dim as i64))
                    .sum();
                ensure(listed == r && counted == r, || {
                    format!("n={n} k={k} {b}: rank {r}, listed {listed}, counted {counted}")
                })?;
            }
            ensure(cells[dim as usize] == r, || {
                format!(
                    "n={n} k={k}: {} fixed points with cell dimension {dim}, rank {r}",
                    cells[dim as usize]
                )
            })?;
        }
    }
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!("n = 1..30, {t:?}"))
}

fn closed_vs_iteration() -> Check {
    let start = Instant::now();
    let (mut short, mut long) = (0, 0);
    for n in 1..=12u32 {
        let top = class(Family::Bp, n as i64 - 1, n as i64 - 1, n);
        let mut iter = top.clone();
        for k in 1..=n {
            if k > 1 {
                iter = mul_bprime_top(&iter).unwrap();
            }
            let closed = bprime_top_power(n, k).unwrap();
            ensure(closed == iter, || {
                format!("n={n} k={k}: closed {closed}, iterated {iter}")
            })?;
            if 2 * k - 1 <= n {
                short += 1;
            } else {
                long += 1;
            }
        }
    }
    ensure(short > 0 && long > 0, || {
        "one regime never exercised".into()
    })?;
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!(
        "{short} cases with 2k-1 <= n, {long} with 2k-1 > n, {t:?}"
    ))
}

fn chern_table() -> Check {
    let cfg = PairingConfig::default();
    let mut checked = 0;
    for n in 2..=8u32 {
        for d in 1..=6i64 {
            let (c1, c2) = chern_taut(&TautBundle::new(n, d as u32).unwrap()).unwrap();
            let probes: [(&GradedClass, Family, i64, i64, i64); 6] = [
                (&c1, Family::A, 0, 1, d - 1),
                (&c1, Family::Bp, 0, 1, d),
                (&c2, Family::A, 0, 2, 0),
                (&c2, Family::Bp, 0, 2, 0),
                (&c2, Family::Bp, 1, 1, d * d),
                (&c2, Family::C, 1, 1, d * (d - 1) / 2),
            ];
            for (c, f, i, j, want) in probes {
                // B'_{0,2} needs j < n
                if !f.admits(i, j, n as i64) {
                    continue;
                }
                let got = pair_classes(c, &class(f, i, j, n), &cfg).unwrap();
                ensure(got == q(want), || {
                    format!(
                        "n={n} d={d} {}_{{{i},{j}}}: got {got}, want {want}",
                        f.label()
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairings, n = 2..8, d = 1..6"))
}

fn tuples(len: usize, entries: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| entries.iter().map(move |&e| [t.clone(), vec![e]].concat()))
            .collect();
    }
    out
}

/// Point (m = 0) and curve (m = 1) instances as (n, degrees).
fn oracle_instances() -> (Instances, Instances) {
    let points = (2..=6).flat_map(|n| tuples(n as usize, &[2, 3]).into_iter().map(move |t| (n, t)));
    let curves = (4..=8).flat_map(|n| {
        tuples(n as usize - 1, &[2, 3, 4])
            .into_iter()
            .map(move |t| (n, t))
    });
    (points.collect(), curves.collect())
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Chords through `D` points in general position.
fn points_oracle(degrees: &[u32]) -> BigInt {
    let deg: BigInt = degrees.iter().map(|&d| big(d as i64)).product();
    &deg * (&deg - 1) / 2
}

/// Secant degree of a smooth space curve of degree `D` and genus `g`:
/// `C(D-1, 2) - g`, with `2g - 2 = D(Σd - n - 1)` by adjunction.
fn curve_oracle(n: u32, degrees: &[u32]) -> BigInt {
    let deg: BigInt = degrees.iter().map(|&d| big(d as i64)).product();
    let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
    let g = &deg * (sum - n as i64 - 1) / 2 + 1;
    (&deg - 1) * (&deg - 2) / 2 - g
}

fn secant_oracles() -> Check {
    let start = Instant::now();
    let (points, curves) = oracle_instances();
    let pinned = [
        ((2, vec![2, 2]), 6),
        ((2, vec![2, 3]), 15),
        ((4, vec![2, 2, 2]), 16),
        ((4, vec![2, 2, 3]), 42),
    ];
    for ((n, d), want) in &pinned {
        let got = secant_degree_mu_closed(&SecantProblem::new(*n, d.clone()).unwrap()).unwrap();
        ensure(got == big(*want), || {
            format!("n={n} {d:?}: got {got}, want {want}")
        })?;
    }
    for (n, d) in &points {
        let got = secant_degree_mu_closed(&SecantProblem::new(*n, d.clone()).unwrap()).unwrap();
        let want = points_oracle(d);
        ensure(got == want, || {
            format!("m=0 n={n} {d:?}: got {got}, want {want}")
        })?;
    }
    for (n, d) in &curves {
        let got = secant_degree_mu_closed(&SecantProblem::new(*n, d.clone()).unwrap()).unwrap();
        let want = curve_oracle(*n, d);
        ensure(got == want, || {
            format!("m=1 n={n} {d:?}: got {got}, want {want}")
        })?;
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "{} point cases, {} curve cases, {t:?}",
        points.len(),
        curves.len()
    ))
}

fn path_equivalence() -> Check {
    let (points, curves) = oracle_instances();
    // m = 2 needs 2m + 1 < n, so n starts at 6
    let surfaces = (6..=8).flat_map(|n| {
        tuples(n as usize - 2, &[2, 3])
            .into_iter()
            .map(move |t| (n, t))
    });
    let all: Instances = points.into_iter().chain(curves).chain(surfaces).collect();
    for (n, d) in &all {
        let p = SecantProblem::new(*n, d.clone()).unwrap();
        let closed = secant_degree_mu_closed(&p).unwrap();
        let ring = secant_degree_mu_intersection(&p).unwrap();
        ensure(closed == ring, || {
            format!("n={n} {d:?}: closed {closed}, intersection {ring}")
        })?;
    }
    Ok(format!("{} instances (m = 0, 1, 2)", all.len()))
}

fn variant_regression() -> Check {
    let (_, curves) = oracle_instances();
    let p = SecantProblem::new(4, vec![2, 2, 2])
        .unwrap()
        .with_variant(ExponentVariant::Intro);
    let pinned = secant_degree_mu_closed(&p).unwrap();
    ensure(pinned == big(8), || {
        format!("intro on n=4 [2,2,2] gave {pinned}, expected 8")
    })?;
    for (n, d) in &curves {
        let p = SecantProblem::new(*n, d.clone())
            .unwrap()
            .with_variant(ExponentVariant::Intro);
        let got = secant_degree_mu_closed(&p).unwrap();
        ensure(got != curve_oracle(*n, d), || {
            format!("intro agrees with oracle on n={n} {d:?}")
        })?;
    }
    Ok(format!("intro differs on all {} curve cases", curves.len()))
}

/// Nonzero MS×MS values on complementary indices.
fn ms_table(x: &BasisSymbol, y: &BasisSymbol) -> i64 {
    let n = x.n() as i64;
    if (y.i() as i64, y.j() as i64) != (n - x.j() as i64, n - x.i() as i64) {
        return 0;
    }
    match (x.family(), y.family()) {
        (Family::A, Family::A) | (Family::A, Family::Bp) | (Family::Bp, Family::A) => 1,
        (Family::Bp, Family::C) | (Family::C, Family::Bp) => 1,
        (Family::Bp, Family::Bp) if x.i() == x.j() => 2,
        (Family::Bp, Family::Bp) => 1,
        _ => 0,
    }
}

/// Family pairs that vanish in complementary codimension regardless of indices.
const ALWAYS_ZERO: [(Family, Family); 6] = [
    (Family::A, Family::B),
    (Family::A, Family::C),
    (Family::Ap, Family::Bp),
    (Family::Ap, Family::C),
    (Family::B, Family::Bp),
    (Family::C, Family::C),
];

/// Family pairs that vanish unless the indices are complementary.
const ZERO_OFF_COMPLEMENT: [(Family, Family); 3] = [
    (Family::A, Family::Ap),
    (Family::B, Family::C),
    (Family::Bp, Family::C),
];

fn all_symbols(n: u32, f: Family) -> Vec<BasisSymbol> {
    (0..=n as i64)
        .flat_map(|i| (0..=n as i64).filter_map(move |j| BasisSymbol::try_new(f, i, j, n)))
        .collect()
}

fn duality_and_zeros() -> Check {
    let cfg = PairingConfig::default();
    let mut matrices = 0;
    let mut zero_pairs = 0;
    for n in 1..=10u32 {
        for k in 0..=2 * n {
            let es = intersection_matrix(n, k, BasisId::ES, BasisId::MS, &cfg).unwrap();
            let diag = es
                .diagonalized()
                .ok_or_else(|| format!("n={n} k={k}: ES×MS not dual"))?;
            ensure(diag.is_diagonal(), || format!("n={n} k={k}: not diagonal"))?;
            for c in 0..diag.cols.len() {
                ensure(diag.get(c, c).is_positive(), || {
                    format!("n={n} k={k}: nonpositive diagonal")
                })?;
            }
            let ms = intersection_matrix(n, k, BasisId::MS, BasisId::MS, &cfg).unwrap();
            for (r, x) in ms.rows.iter().enumerate() {
                for (c, y) in ms.cols.iter().enumerate() {
                    ensure(*ms.get(r, c) == q(ms_table(x, y)), || {
                        format!(
                            "n={n} k={k}: {x}·{y} = {}, table says {}",
                            ms.get(r, c),
                            ms_table(x, y)
                        )
                    })?;
                }
            }
            matrices += 2;
        }
        for (fx, fy) in ALWAYS_ZERO.iter().chain(&ZERO_OFF_COMPLEMENT) {
            let always = ALWAYS_ZERO.contains(&(*fx, *fy));
            for x in all_symbols(n, *fx) {
                for y in all_symbols(n, *fy) {
                    if x.dimension() != y.codimension() {
                        continue;
                    }
                    let complementary = (y.i() as i64, y.j() as i64) == x.complementary_indices();
                    if !always && complementary {
                        continue;
                    }
                    let v =
                        pair_symbols(&x, &y, &cfg).map_err(|e| format!("n={n} {x}·{y}: {e}"))?;
                    ensure(v.is_zero(), || format!("n={n} {x}·{y} = {v}, expected 0"))?;
                    zero_pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{matrices} matrices, {zero_pairs} vanishing pairs, n = 1..10"
    ))
}

fn cone_suite() -> Check {
    let cfg = PairingConfig::default();
    let mut count = 0;
    for n in 1..=8u32 {
        for k in 0..=2 * n {
            let nef = enumerate_basis(n, BasisId::MS, Grading::Codim(k)).unwrap();
            for y in &nef {
                ensure(is_nef(&GradedClass::from_symbol(*y), k).unwrap(), || {
                    format!("{y} not nef")
                })?;
            }
            for x in enumerate_basis(n, BasisId::ES, Grading::Dim(k)).unwrap() {
                // effective generators pair nonnegatively with nef generators
                for y in &nef {
                    let v = pair_symbols(&x, y, &cfg).unwrap();
                    ensure(!v.is_negative(), || format!("n={n}: {x}·{y} = {v}"))?;
                }
                if x.family() == Family::B {
                    let ms = to_ms(&x).unwrap();
                    ensure(is_effective(&ms, k, &cfg).unwrap(), || {
                        format!("n={n}: {x} = {ms} not effective")
                    })?;
                    count += 1;
                }
            }
        }
    }
    let x = GradedClass::from_terms(
        2,
        [
            (sym(Family::Bp, 1, 1, 2), q(2)),
            (sym(Family::C, 1, 1, 2), q(-4)),
        ],
    )
    .unwrap();
    let v = effective_pairings(&x, 2, &cfg).unwrap();
    ensure(v == [q(0), q(0), q(2)], || {
        format!("2B'_{{1,1}} - 4C_{{1,1}} pairings {v:?}")
    })?;
    ensure(is_effective(&x, 2, &cfg).unwrap(), || {
        "2B'_{1,1} - 4C_{1,1} not effective".into()
    })?;
    Ok(format!(
        "{count} B generators effective after conversion, n = 1..8; (0, 0, 2) pinned"
    ))
}

fn triple_vanishing() -> Check {
    let cfg = PairingConfig::default();
    let mut count = 0;
    for n in 2..=8u32 {
        for m in 1..n {
            if 2 * m + 1 >= n {
                continue;
            }
            let cut = class(Family::C, (n - 2 * m) as i64, n as i64, n);
            for k in 1..=m {
                let x = eval_monomial(&MonomialSpec::new(n, k, n - m - k).unwrap()).unwrap();
                let v = pair_classes(&x, &cut, &cfg).unwrap();
                ensure(v.is_zero(), || format!("n={n} m={m} k={k}: {v}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triple products vanish"))
}

fn main() {
    #[allow(clippy::type_complexity)]
    let criteria: [(&str, fn() -> Check); 9] = [
        ("rank identities", rank_identities),
        ("closed form vs iteration", closed_vs_iteration),
        ("Chern class pairing table", chern_table),
        ("secant oracles", secant_oracles),
        ("path equivalence", path_equivalence),
        ("exponent variant regression", variant_regression),
        ("duality and zero patterns", duality_and_zeros),
        ("cone suite", cone_suite),
        ("triple-product vanishing", triple_vanishing),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {} {name}: {detail}", idx + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name}: {why}", idx + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
