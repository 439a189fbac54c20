//! Command-line front end: distribution polynomials, triangle tables, the
//! three bijections, and exhaustive verification suites.
//!
//! Exit status: 0 on success, 1 on verification failure, 2 on usage or
//! input errors.

mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::json;

use mmp132::bijections::{
    canonical_decreasing_labels, dyck_to_perm, perm_to_dyck, perm_to_tree, phi, phi_inverse,
    tree_to_perm, DyckPath, ParkingFunction, Shape,
};
use mmp132::distribution::{distribution_table, q_polynomial, Quadrant};
use mmp132::perm::{MeshPattern, Permutation};
use mmp132::triangles::{catalan_triangle_rows, narayana_rows, q_zero_rows};

#[derive(Parser)]
#[command(
    name = "mmp132",
    version,
    about = "Distributions of simple marked mesh patterns over 132-avoiding permutations"
)]
struct Cli {
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of Q_{n,132}^{(a,b,c,d)}(x) for one length n.
    Qpoly {
        #[arg(long)]
        n: usize,
        /// Pattern thresholds as a,b,c,d.
        #[arg(long)]
        pattern: String,
    },
    /// Distribution or triangle tables (csv, json or OEIS b-file style).
    Table {
        /// Distribution table for this quadrant (I, II or III); needs --ell and --max-n.
        #[arg(long)]
        quadrant: Option<String>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        /// Triangle table: catalan or narayana; needs --rows.
        #[arg(long)]
        triangle: Option<String>,
        /// The x = 0 specialization grid; needs --rows.
        #[arg(long)]
        qzero: bool,
        #[arg(long)]
        rows: Option<usize>,
        /// Number of columns for --qzero (defaults to --rows).
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long, default_value = "csv")]
        format: String,
        /// Column to emit in b-file format (k index as labeled in the csv header).
        #[arg(long)]
        column: Option<usize>,
    },
    /// Apply one of the bijections (dyck, parking or tree) in either direction.
    Bijection {
        kind: String,
        /// Forward direction: a 132-avoiding permutation.
        #[arg(long, conflicts_with = "inverse")]
        perm: Option<String>,
        /// Inverse direction: a Dyck word, parking function or tree shape.
        #[arg(long)]
        inverse: Option<String>,
    },
    /// Run an exhaustive verification suite for one published statement.
    Verify {
        /// One of: 2.1 2.2 3.1 3.2 3.3 3.5 3.6 4.1 4.2 4.4 props-3.7-3.9 eq-11 eq-14
        #[arg(long)]
        theorem: String,
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
    },
}

/// Usage/input failures exit with status 2; verification failures with 1.
enum Failure {
    Usage(String),
    Verification,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(output) => {
            if emit(&cli.output, &output).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

fn emit(target: &Option<PathBuf>, output: &str) -> std::io::Result<()> {
    match target {
        Some(path) => std::fs::write(path, output),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn usage(message: impl ToString) -> Failure {
    Failure::Usage(message.to_string())
}

fn parse<T: FromStr>(input: &str) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    input.parse().map_err(usage)
}

fn run(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Qpoly { n, pattern } => {
            let pattern: MeshPattern = parse(pattern)?;
            let q = q_polynomial(*n, pattern);
            let coeffs: Vec<String> = q.coeffs().iter().map(|c| c.to_string()).collect();
            Ok(format!("{}\n{}\n", coeffs.join(","), q))
        }
        Command::Table {
            quadrant,
            ell,
            max_n,
            triangle,
            qzero,
            rows,
            cols,
            format,
            column,
        } => {
            let modes = usize::from(quadrant.is_some())
                + usize::from(triangle.is_some())
                + usize::from(*qzero);
            if modes != 1 {
                return Err(usage(
                    "choose exactly one of --quadrant, --triangle or --qzero",
                ));
            }
            let (table_rows, k_start, header) = if let Some(q) = quadrant {
                let quadrant: Quadrant = parse(q)?;
                let ell = ell.ok_or_else(|| usage("--quadrant needs --ell"))?;
                let max_n = max_n.ok_or_else(|| usage("--quadrant needs --max-n"))?;
                if ell == 0 || max_n == 0 {
                    return Err(usage("--ell and --max-n must be at least 1"));
                }
                let table = distribution_table(quadrant, ell, max_n);
                let header = json!({
                    "pattern": pattern_as_json(quadrant.pattern(ell)),
                    "version": 1,
                });
                (table.rows().to_vec(), 0usize, header)
            } else if let Some(kind) = triangle {
                let rows = rows.ok_or_else(|| usage("--triangle needs --rows"))?;
                let table = match kind.as_str() {
                    "catalan" => catalan_triangle_rows(rows),
                    "narayana" => narayana_rows(rows),
                    _ => return Err(usage(format!("unknown triangle {kind:?}"))),
                }
                .map_err(usage)?;
                (table, 1usize, json!({"triangle": kind, "version": 1}))
            } else {
                let rows = rows.ok_or_else(|| usage("--qzero needs --rows"))?;
                let cols = cols.unwrap_or(rows);
                let table = q_zero_rows(rows, cols).map_err(usage)?;
                (table, 1usize, json!({"table": "qzero", "version": 1}))
            };
            match format.as_str() {
                "csv" => Ok(render_csv(&table_rows, k_start)),
                "json" => render_json(&table_rows, header).map_err(usage),
                "bfile" => {
                    let column =
                        column.ok_or_else(|| usage("b-file output needs --column"))?;
                    render_bfile(&table_rows, k_start, column)
                }
                other => Err(usage(format!("unknown format {other:?}"))),
            }
        }
        Command::Bijection {
            kind,
            perm,
            inverse,
        } => {
            let result = match (kind.as_str(), perm, inverse) {
                ("dyck", Some(perm), None) => {
                    let sigma: Permutation = parse(perm)?;
                    perm_to_dyck(&sigma).map_err(usage)?.to_string()
                }
                ("dyck", None, Some(word)) => {
                    let path: DyckPath = parse(word)?;
                    dyck_to_perm(&path).to_string()
                }
                ("parking", Some(perm), None) => {
                    let sigma: Permutation = parse(perm)?;
                    phi(&sigma).map_err(usage)?.to_string()
                }
                ("parking", None, Some(pf)) => {
                    let pf: ParkingFunction = parse(pf)?;
                    phi_inverse(&pf).to_string()
                }
                ("tree", Some(perm), None) => {
                    let sigma: Permutation = parse(perm)?;
                    perm_to_tree(&sigma).map_err(usage)?.shape().to_parens()
                }
                ("tree", None, Some(parens)) => {
                    let shape: Shape = parse(parens)?;
                    let tree = canonical_decreasing_labels(&shape)
                        .ok_or_else(|| usage("the empty shape has no permutation"))?;
                    tree_to_perm(&tree).map_err(usage)?.to_string()
                }
                ("dyck" | "parking" | "tree", _, _) => {
                    return Err(usage("give exactly one of --perm or --inverse"))
                }
                (other, _, _) => {
                    return Err(usage(format!(
                        "unknown bijection {other:?} (expected dyck, parking or tree)"
                    )))
                }
            };
            Ok(format!("{result}\n"))
        }
        Command::Verify { theorem, max_n } => {
            if *max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            if *max_n > 8 {
                eprintln!("warning: exhaustive checks above n = 8 can take a while");
            }
            let outcome = verify::run(theorem, *max_n).ok_or_else(|| {
                usage(format!(
                    "unknown theorem {theorem:?} (known: {})",
                    verify::THEOREM_IDS.join(", ")
                ))
            })?;
            match outcome.failure {
                None => Ok(format!(
                    "theorem {theorem}: {} checks up to n = {max_n}: PASS\n",
                    outcome.checked
                )),
                Some(witness) => {
                    eprintln!(
                        "theorem {theorem}: FAIL after {} checks: {witness}",
                        outcome.checked
                    );
                    Err(Failure::Verification)
                }
            }
        }
    }
}

fn pattern_as_json(p: MeshPattern) -> serde_json::Value {
    json!([p.a, p.b, p.c, p.d])
}

/// Header `n,k<start>,...`; one row per n with empty cells where the row is
/// shorter than the widest one.
fn render_csv(rows: &[Vec<u128>], k_start: usize) -> String {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = String::from("n");
    for k in 0..width {
        write!(out, ",k{}", k + k_start).expect("string write");
    }
    out.push('\n');
    for (i, row) in rows.iter().enumerate() {
        write!(out, "{}", i + 1).expect("string write");
        for k in 0..width {
            match row.get(k) {
                Some(v) => write!(out, ",{v}").expect("string write"),
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}

fn render_json(rows: &[Vec<u128>], header: serde_json::Value) -> Result<String, String> {
    let mut object = match header {
        serde_json::Value::Object(map) => map,
        _ => unreachable!("headers are objects"),
    };
    let mut row_map = serde_json::Map::new();
    for (i, row) in rows.iter().enumerate() {
        let values: Result<Vec<u64>, String> = row
            .iter()
            .map(|&v| u64::try_from(v).map_err(|_| "value exceeds the JSON integer range".into()))
            .collect();
        row_map.insert((i + 1).to_string(), json!(values?));
    }
    object.insert("rows".into(), serde_json::Value::Object(row_map));
    let mut out = serde_json::Value::Object(object).to_string();
    out.push('\n');
    Ok(out)
}

/// OEIS b-file style: `n value` per line for one column of the table.
fn render_bfile(rows: &[Vec<u128>], k_start: usize, column: usize) -> Result<String, Failure> {
    if column < k_start {
        return Err(usage(format!("--column must be at least {k_start}")));
    }
    let idx = column - k_start;
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let value = row.get(idx).copied().unwrap_or(0);
        writeln!(out, "{} {value}", i + 1).expect("string write");
    }
    Ok(out)
}
