//! Command-line surface: show / expand / verify / eval / table.
//!
//! Exit codes: 0 on success, 1 when the verification suite has a hard
//! failure, 2 on usage or expression errors.  Diagnostics go to stderr;
//! data goes to stdout.  Output is byte-stable across identical
//! invocations; timings are only included with `--timings`.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pqhermite::emit;
use pqhermite::exprlang::{self, Mode, Value};
use pqhermite::hermite::{self, Family, FamilySpec};
use pqhermite::numeric::EvalPoint;
use pqhermite::pqcore::SymbolTable;
use pqhermite::series::zw_trunc;
use pqhermite::vars::VarId;
use pqhermite::verify::{run_suite, suite_failed, SuiteParams};
use pqhermite::Complex64;

#[derive(Parser)]
#[command(
    name = "pqhermite",
    about = "Exact two-base calculus: polynomial families, identity verifier, evaluators",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member in canonical form.
    Show {
        /// Family name: H, G, Hmod, hmod, qH, qh.
        family: String,
        m: u32,
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Truncation order for the series-valued family `hmod`.
        #[arg(long, default_value_t = 10)]
        trunc: i64,
    },
    /// Evaluate an expression symbolically and print it (series print
    /// per-degree slices with their denominator schedules).
    Expand {
        expr: String,
        /// Truncation order for series-valued subexpressions.
        #[arg(long, default_value_t = 10)]
        trunc: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the identity catalog.
    Verify(VerifyArgs),
    /// Evaluate an expression numerically at a point.
    Eval {
        expr: String,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        /// Override sqrt(p) directly (generating-function factors).
        #[arg(long)]
        s: Option<String>,
        /// Override sqrt(q) directly.
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// Working precision in bits (defaults to double; the
        /// PQHERMITE_PRECISION environment variable overrides the default).
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Export a family coefficient table as CSV.
    Table {
        family: String,
        #[arg(long, default_value_t = 4)]
        max: u32,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Only run catalog ids containing this substring.
    #[arg(long)]
    filter: Option<String>,
    /// Cap on family indices m, n.
    #[arg(long, default_value_t = 6)]
    max: u32,
    /// Base truncation order for series workspaces.
    #[arg(long, default_value_t = 10)]
    trunc: i64,
    /// Degree cap for the ratio variable r.
    #[arg(long, default_value_t = 10)]
    rtrunc: i64,
    /// Worker threads (report order is independent of this).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Seed for the randomized numeric cross-check section.
    #[arg(long, default_value_t = 20240614)]
    seed: u64,
    /// Treat fail-as-printed-pass-corrected as fatal.
    #[arg(long)]
    strict: bool,
    /// Include wall-clock timings in the output (non-reproducible bytes).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Show {
            family,
            m,
            n,
            format,
            trunc,
        } => {
            let tbl = SymbolTable::new();
            let fam = Family::from_name(&family).map_err(|e| e.to_string())?;
            if fam == Family::HModFn {
                let series = hermite::build_hmod_fn(&tbl, m, n, &zw_trunc(trunc))
                    .map_err(|e| e.to_string())?;
                match format {
                    Format::Text => print!("{}", emit::series_text(&series)),
                    Format::Json => println!("{}", emit::series_json(&series)),
                    Format::Latex | Format::Csv => {
                        return Err("hmod is series-valued; use --format text or json".into())
                    }
                }
            } else {
                let poly = hermite::family_poly(&tbl, &FamilySpec::new(fam, m, n))
                    .map_err(|e| e.to_string())?;
                print_poly(&poly, format)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand {
            expr,
            trunc,
            format,
        } => {
            let ast = exprlang::parse(&expr).map_err(|e| e.to_string())?;
            let tbl = SymbolTable::new();
            let value = exprlang::eval_ast(&ast, &Mode::Symbolic { order: trunc }, &tbl)
                .map_err(|e| e.to_string())?;
            match value {
                Value::Poly(p) => print_poly(&p, format)?,
                Value::Series(s) => match format {
                    Format::Text => print!("{}", emit::series_text(&s)),
                    Format::Json => println!("{}", emit::series_json(&s)),
                    Format::Latex | Format::Csv => {
                        return Err("series expand only to text or json".into())
                    }
                },
                Value::Scalar(c) => println!("{}", format_complex(c)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let suite = SuiteParams {
                max_mn: args.max,
                order: args.trunc,
                rorder: args.rtrunc,
            };
            let mut reports = run_suite(&suite, args.filter.as_deref(), args.jobs);
            // the randomized numeric cross-check runs unless filtered out
            let run_numeric = args
                .filter
                .as_deref()
                .map(|f| "numeric.crosscheck".contains(f))
                .unwrap_or(true);
            if run_numeric {
                reports.push(pqhermite::numeric::crosscheck_report(
                    args.seed,
                    100,
                    1e-10,
                    args.max.min(3),
                ));
            }
            match args.format {
                Format::Text => {
                    print!("{}", emit::report_text(&reports, args.timings));
                    if run_numeric {
                        println!("numeric cross-check seed: {}", args.seed);
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&emit::report_json(&reports, args.timings))
                        .unwrap()
                ),
                _ => return Err("verify reports only to text or json".into()),
            }
            if suite_failed(&reports, args.strict) {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Eval {
            expr,
            p,
            q,
            z,
            w,
            u,
            v,
            s,
            t,
            x,
            y,
            precision,
        } => {
            let ast = exprlang::parse(&expr).map_err(|e| e.to_string())?;
            let tbl = SymbolTable::new();
            let mut pt = EvalPoint::new(
                parse_complex_opt(&p)?.unwrap_or(Complex64::new(1.0, 0.0)),
                parse_complex_opt(&q)?.unwrap_or(Complex64::new(0.25, 0.0)),
                parse_complex_opt(&z)?.unwrap_or(Complex64::new(0.0, 0.0)),
                parse_complex_opt(&w)?.unwrap_or(Complex64::new(0.0, 0.0)),
            );
            for (flag, var) in [
                (&u, VarId::U),
                (&v, VarId::V),
                (&s, VarId::S),
                (&t, VarId::T),
                (&x, VarId::X),
                (&y, VarId::Y),
            ] {
                if let Some(val) = parse_complex_opt(flag)? {
                    pt = pt.set(var, val);
                }
            }
            pt.precision = precision
                .or_else(|| {
                    std::env::var("PQHERMITE_PRECISION")
                        .ok()
                        .and_then(|s| s.parse().ok())
                })
                .unwrap_or(53);
            let value = exprlang::eval_ast(&ast, &Mode::Numeric { point: pt }, &tbl)
                .map_err(|e| e.to_string())?;
            match value {
                Value::Scalar(c) => println!("{}", format_complex(c)),
                _ => unreachable!("numeric mode yields scalars"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { family, max, out } => {
            let tbl = SymbolTable::new();
            let fam = Family::from_name(&family).map_err(|e| e.to_string())?;
            let csv = emit::family_csv(&tbl, fam, max).map_err(|e| e.to_string())?;
            match out {
                None => print!("{}", csv),
                Some(path) => {
                    let mut f = std::fs::File::create(&path)
                        .map_err(|e| format!("cannot create {}: {}", path.display(), e))?;
                    f.write_all(csv.as_bytes())
                        .map_err(|e| format!("write failed: {}", e))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_poly(p: &pqhermite::LaurentPoly, format: Format) -> Result<(), String> {
    match format {
        Format::Text => println!("{}", emit::poly_text(p)),
        Format::Json => println!("{}", emit::poly_json(p)),
        Format::Latex => println!("{}", emit::poly_latex(p)),
        Format::Csv => return Err("csv is only for table-like values".into()),
    }
    Ok(())
}

fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("{}{}i", c.re, c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

fn parse_complex_opt(src: &Option<String>) -> Result<Option<Complex64>, String> {
    match src {
        None => Ok(None),
        Some(s) => parse_complex(s).map(Some),
    }
}

/// Accepts `A`, `Ai`, `A+Bi`, `A-Bi` with decimal or rational (`n/d`) parts.
fn parse_complex(src: &str) -> Result<Complex64, String> {
    let s = src.trim().replace(' ', "");
    let parse_real = |txt: &str| -> Result<f64, String> {
        let txt = if txt.is_empty() || txt == "+" {
            "1"
        } else if txt == "-" {
            "-1"
        } else {
            txt
        };
        if let Some((n, d)) = txt.split_once('/') {
            let n: f64 = n
                .parse()
                .map_err(|_| format!("cannot parse complex value '{}'", src))?;
            let d: f64 = d
                .parse()
                .map_err(|_| format!("cannot parse complex value '{}'", src))?;
            if d == 0.0 {
                return Err(format!("zero denominator in '{}'", src));
            }
            Ok(n / d)
        } else {
            txt.parse()
                .map_err(|_| format!("cannot parse complex value '{}'", src))
        }
    };
    if let Some(im_txt) = s.strip_suffix('i') {
        // find a +/- separating re and im (not leading, not after e or /)
        let bytes = im_txt.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-')
                && !matches!(bytes[k - 1], b'e' | b'E' | b'/')
            {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => Ok(Complex64::new(
                parse_real(&im_txt[..k])?,
                parse_real(&im_txt[k..])?,
            )),
            None => Ok(Complex64::new(0.0, parse_real(im_txt)?)),
        }
    } else {
        Ok(Complex64::new(parse_real(&s)?, 0.0))
    }
}
