//! `hilb2`: command-line access to the intersection calculator.
//!
//! [`run_command`] is the whole program; the binary only prints its result.
//! Exit codes: 0 success, 1 oracle mismatch, 2 invalid input, 3 unsupported
//! operation.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hilb2_core::document::{format_rational, to_document};
use hilb2_core::{
    bb_cell_of, chern_taut, chow_rank, effective_pairings, enumerate_basis, enumerate_fixed_points,
    eval_monomial, intersection_matrix, is_nef, pair_classes, parse_class, parse_symbol,
    secant_degree, secant_degree_mu_closed, secant_degree_mu_intersection, secant_oracle, BasisId,
    BasisSymbol, Error, ExponentVariant, GradedClass, Grading, IntersectionMatrix, MonomialSpec,
    PairingConfig, SecantProblem, TautBundle,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// Matrices only.
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hilb2",
    about = "Exact intersection theory on the Hilbert scheme of two points on P^n"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Value of the A'_{i,j}·A_{n-j,n-i} pairing (only positivity is known).
    #[arg(long, global = true, default_value_t = 1)]
    dprime_diag: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Degree {
    #[arg(long, conflicts_with = "codim")]
    dim: Option<u32>,
    #[arg(long)]
    codim: Option<u32>,
}

impl Degree {
    fn grading(&self) -> Grading {
        match (self.dim, self.codim) {
            (Some(k), _) => Grading::Dim(k),
            (_, Some(k)) => Grading::Codim(k),
            _ => Grading::All,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank of a Chow group (all ranks if no grading is given).
    Rank {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        degree: Degree,
    },
    /// List a basis in conventional order.
    Basis {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "MS")]
        basis: String,
        #[command(flatten)]
        degree: Degree,
    },
    /// Torus-fixed points and their cells.
    FixedPoints {
        #[arg(long)]
        n: u32,
    },
    /// Intersection number of two symbols or classes of complementary codimension.
    Pair {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Intersection matrix of dimension-k rows against codimension-k columns.
    Matrix {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "ES")]
        rows: String,
        #[arg(long, default_value = "MS")]
        cols: String,
    },
    /// B'_{n-1,n-1}^a · C_{n-1,n-1}^b in the MS basis.
    Power {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        a: u32,
        #[arg(long, default_value_t = 0)]
        b: u32,
    },
    /// Chern classes of O(d)^[2].
    Chern {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Degree of the secant variety of a complete intersection.
    Secant {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        mu1: u32,
        #[arg(long, default_value = "proof")]
        variant: String,
        /// Compare against the classical count when one exists (m <= 1).
        #[arg(long)]
        check_oracle: bool,
    },
    /// Nef or effective cone membership of a class in MS coordinates.
    Cone {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        class: String,
        #[arg(long, value_parser = ["nef", "effective"])]
        test: String,
        /// Codimension (nef) or dimension (effective); inferred when omitted.
        #[arg(long)]
        k: Option<u32>,
    },
}

struct Output {
    code: i32,
    json: Value,
    text: String,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            code: EXIT_OK,
            json,
            text,
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let argv: Vec<&str> = argv.iter().map(|s| s.as_ref()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            return (code, e.render().to_string());
        }
    };
    let format = cli.format;
    if format == Format::Csv && !matches!(cli.command, Command::Matrix { .. }) {
        let e = Error::InvalidInput("--format csv is only available for `matrix`".into());
        return render_error(&e, Format::Text);
    }
    match dispatch(&cli) {
        Ok(out) => match format {
            Format::Json => (out.code, pretty(&out.json)),
            _ => (out.code, out.text),
        },
        Err(e) => render_error(&e, format),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn render_error(e: &Error, format: Format) -> (i32, String) {
    let code = if e.is_unsupported() {
        EXIT_UNSUPPORTED
    } else {
        EXIT_INVALID
    };
    let body = match format {
        Format::Json => pretty(&json!({"error": {"kind": e.kind(), "message": e.to_string()}})),
        _ => format!("error: {e}"),
    };
    (code, body)
}

fn symbol_json(s: &BasisSymbol) -> Value {
    json!({"family": s.family().label(), "i": s.i(), "j": s.j(), "dim": s.dimension()})
}

fn class_json(x: &GradedClass) -> Value {
    serde_json::to_value(to_document(x)).expect("document serializes")
}

/// `--x`/`--y`/`--class` accept either a symbol record or a class document.
fn parse_operand(text: &str, n: u32) -> Result<GradedClass, Error> {
    let is_class = serde_json::from_str::<Value>(text)
        .map(|v| v.get("terms").is_some())
        .unwrap_or(false);
    let x = if is_class {
        parse_class(text)?
    } else {
        GradedClass::from_symbol(parse_symbol(text, n)?)
    };
    if x.n() != n {
        return Err(Error::MixedAmbient(n, x.n()));
    }
    Ok(x)
}

fn grading_json(g: Grading) -> Value {
    match g {
        Grading::Dim(k) => json!({"kind": "dim", "k": k}),
        Grading::Codim(k) => json!({"kind": "codim", "k": k}),
        Grading::All => json!({"kind": "all"}),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    let cfg = PairingConfig::new(cli.dprime_diag)?;
    match &cli.command {
        Command::Rank { n, degree } => rank(*n, degree.grading()),
        Command::Basis { n, basis, degree } => {
            let b: BasisId = basis.parse()?;
            let g = degree.grading();
            let symbols = enumerate_basis(*n, b, g)?;
            let text = symbols
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::ok(
                json!({
                    "command": "basis", "n": n, "basis": b.label(), "grading": grading_json(g),
                    "symbols": symbols.iter().map(symbol_json).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::FixedPoints { n } => {
            let fps = enumerate_fixed_points(*n)?;
            let mut lines = Vec::new();
            let mut points = Vec::new();
            for fp in &fps {
                let (cell, dim) = bb_cell_of(fp);
                let gens = fp.generators().join(", ");
                lines.push(format!("{fp} = ({gens}) -> {cell} (dim {dim})"));
                points.push(json!({
                    "kind": fp.kind().to_string(), "i": fp.i(), "j": fp.j(),
                    "generators": fp.generators(), "cell": symbol_json(&cell), "dim": dim,
                }));
            }
            Ok(Output::ok(
                json!({"command": "fixed-points", "n": n, "count": fps.len(), "points": points}),
                lines.join("\n"),
            ))
        }
        Command::Pair { n, x, y } => {
            let x = parse_operand(x, *n)?;
            let y = parse_operand(y, *n)?;
            let v = format_rational(&pair_classes(&x, &y, &cfg)?);
            Ok(Output::ok(
                json!({"command": "pair", "n": n, "value": v}),
                v,
            ))
        }
        Command::Matrix { n, k, rows, cols } => {
            let m = intersection_matrix(*n, *k, rows.parse()?, cols.parse()?, &cfg)?;
            let text = if cli.format == Format::Csv {
                matrix_csv(&m)
            } else {
                matrix_text(&m)
            };
            Ok(Output::ok(matrix_json(&m), text))
        }
        Command::Power { n, a, b } => {
            let x = eval_monomial(&MonomialSpec::new(*n, *a, *b)?)?;
            Ok(Output::ok(
                json!({"command": "power", "n": n, "a": a, "b": b, "class": class_json(&x)}),
                x.to_string(),
            ))
        }
        Command::Chern { n, d } => {
            let (c1, c2) = chern_taut(&TautBundle::new(*n, *d)?)?;
            Ok(Output::ok(
                json!({"command": "chern", "n": n, "d": d, "c1": class_json(&c1), "c2": class_json(&c2)}),
                format!("c1 = {c1}\nc2 = {c2}"),
            ))
        }
        Command::Secant {
            n,
            degrees,
            mu1,
            variant,
            check_oracle,
        } => {
            let variant: ExponentVariant = variant.parse()?;
            let p = SecantProblem::new(*n, degrees.clone())?
                .with_mu1(*mu1)?
                .with_variant(variant);
            secant(&p, *check_oracle)
        }
        Command::Cone { n, class, test, k } => {
            let x = parse_operand(class, *n)?;
            let dim = x.homogeneous_dimension()?;
            if test == "nef" {
                let k = k.or(dim.map(|d| 2 * n - d)).unwrap_or(0);
                let result = is_nef(&x, k)?;
                Ok(Output::ok(
                    json!({"command": "cone", "n": n, "test": "nef", "k": k, "result": result}),
                    result.to_string(),
                ))
            } else {
                let k = k.or(dim).unwrap_or(0);
                let pairings = effective_pairings(&x, k, &cfg)?;
                let result = pairings.iter().all(|v| *v >= num_zero());
                let strs: Vec<String> = pairings.iter().map(format_rational).collect();
                Ok(Output::ok(
                    json!({"command": "cone", "n": n, "test": "effective", "k": k,
                           "result": result, "pairings": strs}),
                    format!("{result}\npairings ({})", strs.join(", ")),
                ))
            }
        }
    }
}

fn num_zero() -> hilb2_core::Rational {
    hilb2_core::Rational::from_integer(0.into())
}

fn rank(n: u32, g: Grading) -> Result<Output, Error> {
    let one = |k: u32| chow_rank(n, k);
    match g {
        Grading::Codim(k) | Grading::Dim(k) => {
            let codim = match g {
                Grading::Dim(_) if k <= 2 * n => 2 * n - k,
                Grading::Dim(_) => {
                    return Err(Error::InvalidGrading(format!(
                        "dimension {k} outside [0, {}]",
                        2 * n
                    )))
                }
                _ => k,
            };
            let r = one(codim)?;
            Ok(Output::ok(
                json!({"command": "rank", "n": n, "codim": codim, "rank": r}),
                r.to_string(),
            ))
        }
        Grading::All => {
            let ranks = (0..=2 * n).map(one).collect::<Result<Vec<_>, _>>()?;
            let total: u64 = ranks.iter().sum();
            let text = ranks
                .iter()
                .enumerate()
                .map(|(k, r)| format!("codim {k}: {r}"))
                .chain(std::iter::once(format!("total: {total}")))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::ok(
                json!({"command": "rank", "n": n, "ranks": ranks, "total": total}),
                text,
            ))
        }
    }
}

fn secant(p: &SecantProblem, check_oracle: bool) -> Result<Output, Error> {
    let mut warnings = Vec::new();
    if p.has_linear_factor() {
        warnings.push(
            "a degree-1 hypersurface makes X degenerate in P^n; the count is computed as given"
                .to_string(),
        );
    }
    let closed = secant_degree_mu_closed(p)?;
    let proof = p.clone().with_variant(ExponentVariant::Proof);
    let ring = secant_degree_mu_intersection(&proof)?;
    let degree = format_rational(&secant_degree(p)?);
    let mut code = EXIT_OK;
    let mut lines: Vec<String> = warnings.iter().map(|w| format!("warning: {w}")).collect();
    lines.push(format!("degree {degree}"));
    if p.mu1 != 1 {
        lines.push(format!("mu1*degree {closed}"));
    }
    let (oracle, status) = if check_oracle {
        match secant_oracle(p)? {
            Some(o) => {
                let ok = o == closed;
                if !ok {
                    code = EXIT_MISMATCH;
                }
                lines.push(format!("oracle {o}"));
                lines.push(if ok { "OK" } else { "MISMATCH" }.to_string());
                (
                    Value::String(o.to_string()),
                    json!(if ok { "OK" } else { "MISMATCH" }),
                )
            }
            None => {
                lines.push("oracle unavailable (m >= 2)".to_string());
                (Value::Null, json!("UNAVAILABLE"))
            }
        }
    } else {
        (Value::Null, Value::Null)
    };
    let json = json!({
        "command": "secant", "n": p.n, "m": p.m(), "degrees": p.degrees, "mu1": p.mu1,
        "variant": p.variant.to_string(), "degree": degree,
        "mu_degree": closed.to_string(), "mu_degree_intersection": ring.to_string(),
        "oracle": oracle, "check": status, "warnings": warnings,
    });
    Ok(Output {
        code,
        json,
        text: lines.join("\n"),
    })
}

fn matrix_json(m: &IntersectionMatrix) -> Value {
    json!({
        "command": "matrix", "n": m.n, "k": m.k,
        "rows_basis": m.row_basis.label(), "cols_basis": m.col_basis.label(),
        "rows": m.rows.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "cols": m.cols.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "entries": m.entries.iter()
            .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "dual": m.dual_rows().is_some(),
    })
}

fn matrix_text(m: &IntersectionMatrix) -> String {
    let mut table: Vec<Vec<String>> = vec![std::iter::once(String::new())
        .chain(m.cols.iter().map(|s| s.to_string()))
        .collect()];
    for (r, row) in m.rows.iter().zip(&m.entries) {
        table.push(
            std::iter::once(r.to_string())
                .chain(row.iter().map(format_rational))
                .collect(),
        );
    }
    let width = table
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0);
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Header row: an empty corner cell then the column symbols; one row per row
/// symbol, led by that symbol.
pub fn matrix_csv(m: &IntersectionMatrix) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once(String::new())
        .chain(m.cols.iter().map(|s| s.to_string()))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for (r, row) in m.rows.iter().zip(&m.entries) {
        let rec: Vec<String> = std::iter::once(r.to_string())
            .chain(row.iter().map(format_rational))
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}
