//! The `qalg` command line.
//!
//! JSON documents are written with keys in sorted order and contain only
//! integers and strings, with one exception: `classify` prints `verdict`
//! before `case`. CSV follows RFC 4180.

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::OddPrime;
use crate::error::{Error, Result};
use crate::localsym::{hilbert, Place};
use crate::quadfield::{splitting_symbol, QuadraticField};
use crate::quatalg::{
    classify_extension, classify_quadratic, cross_validate, matching_propositions, primes_below,
    ramification_report, ExtensionDescriptor, QuaternionAlgebraQ,
};

/// Caps the number of worker threads used by `verify`.
pub const THREADS_ENV: &str = "QALG_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

pub const TABLE_HEADER: [&str; 8] = [
    "d",
    "delta",
    "p",
    "q",
    "verdict",
    "case",
    "leg_delta_p",
    "leg_delta_q",
];

#[derive(Parser, Debug)]
#[command(
    name = "qalg",
    version,
    about = "Split/division classification of quaternion algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtensionKind {
    Base,
    Quadratic,
    Dihedral,
    Unramified,
    Kummer,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert symbol (a, b)_v.
    #[command(allow_negative_numbers = true)]
    Hilbert {
        #[arg(short = 'a')]
        a: i64,
        #[arg(short = 'b')]
        b: i64,
        /// A prime, or `real`.
        #[arg(short = 'p', long = "place")]
        place: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Ramified places and reduced discriminant of H(a, b) over Q.
    #[command(allow_negative_numbers = true)]
    Ramify {
        #[arg(short = 'a')]
        a: i64,
        #[arg(short = 'b')]
        b: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Split or division for H(p, q) over a field.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long = "d")]
        d: Option<i64>,
        /// Defaults to `quadratic` when --d is given, `kummer` when --alpha
        /// is given, `base` otherwise.
        #[arg(long, value_enum)]
        kind: Option<ExtensionKind>,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'q')]
        q: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// One row per (d, p, q) over ranges of d and primes.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long)]
        d_min: i64,
        #[arg(long)]
        d_max: i64,
        #[arg(long)]
        prime_bound: u64,
        /// Include pairs no closed form covers.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Cross-validate every classifier on a grid.
    Verify {
        /// Every squarefree d with 1 ≤ |d| ≤ d-max, d ≠ 1.
        #[arg(long)]
        d_max: u64,
        #[arg(long)]
        prime_bound: u64,
    },
}

#[derive(Serialize)]
struct HilbertDoc {
    place: String,
    symbol: i8,
}

#[derive(Serialize)]
struct RamifyDoc {
    discriminant: u128,
    places: Vec<String>,
}

#[derive(Serialize)]
struct ClassifyDoc {
    verdict: &'static str,
    case: String,
}

/// One table row. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d: i64,
    pub delta: i64,
    pub p: u64,
    pub q: u64,
    pub verdict: &'static str,
    pub case: String,
    pub leg_delta_p: i8,
    pub leg_delta_q: i8,
}

/// [`TableRow`] with keys in sorted order for JSON.
#[derive(Serialize)]
struct TableRowJson<'a> {
    case: &'a str,
    d: i64,
    delta: i64,
    leg_delta_p: i8,
    leg_delta_q: i8,
    p: u64,
    q: u64,
    verdict: &'static str,
}

impl<'a> From<&'a TableRow> for TableRowJson<'a> {
    fn from(r: &'a TableRow) -> Self {
        TableRowJson {
            case: &r.case,
            d: r.d,
            delta: r.delta,
            leg_delta_p: r.leg_delta_p,
            leg_delta_q: r.leg_delta_q,
            p: r.p,
            q: r.q,
            verdict: r.verdict,
        }
    }
}

/// Rows ordered by `d`, then `p`, then `q`. Without `all`, only pairs some
/// closed-form criterion covers are listed.
pub fn table_rows(d_min: i64, d_max: i64, prime_bound: u64, all: bool) -> Result<Vec<TableRow>> {
    let primes = primes_below(prime_bound);
    let mut rows = Vec::new();
    if d_min > d_max {
        return Ok(rows);
    }
    for d in d_min..=d_max {
        let Ok(field) = QuadraticField::new(d) else {
            continue;
        };
        for &p in &primes {
            for &q in &primes {
                if p == q {
                    continue;
                }
                if !all && matching_propositions(&field, p, q)?.is_empty() {
                    continue;
                }
                let v = classify_quadratic(&field, p, q)?;
                rows.push(TableRow {
                    d,
                    delta: field.discriminant(),
                    p,
                    q,
                    verdict: v.result.as_str(),
                    case: v.case_label(),
                    leg_delta_p: splitting_symbol(&field, Place::finite(p)?),
                    leg_delta_q: splitting_symbol(&field, Place::finite(q)?),
                });
            }
        }
    }
    Ok(rows)
}

/// Writes a table in the requested format; an empty table still carries the
/// CSV/text header.
pub fn emit_table(rows: &[TableRow], format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(TABLE_HEADER).map_err(io_err)?;
            for r in rows {
                w.serialize(r).map_err(io_err)?;
            }
            let bytes = w.into_inner().map_err(|e| io_err(e.into_error()))?;
            out.write_all(&bytes).map_err(io_err)?;
        }
        OutputFormat::Json => {
            let docs: Vec<TableRowJson<'_>> = rows.iter().map(TableRowJson::from).collect();
            write_json(out, &docs)?;
        }
        OutputFormat::Text => {
            writeln!(out, "{}", TABLE_HEADER.join("\t")).map_err(io_err)?;
            for r in rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.d, r.delta, r.p, r.q, r.verdict, r.case, r.leg_delta_p, r.leg_delta_q
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(format!("output error: {e}"))
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, doc: &T) -> Result<()> {
    let s = serde_json::to_string(doc).map_err(io_err)?;
    writeln!(out, "{s}").map_err(io_err)
}

fn write_csv(out: &mut dyn Write, header: &[&str], row: &[String]) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io_err)?;
    w.write_record(row).map_err(io_err)?;
    let bytes = w.into_inner().map_err(|e| io_err(e.into_error()))?;
    out.write_all(&bytes).map_err(io_err)
}

fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::InvalidArgument(format!(
                "{THREADS_ENV} must be a positive integer, got {s:?}"
            ))),
        },
    }
}

fn descriptor(
    d: Option<i64>,
    kind: Option<ExtensionKind>,
    ell: Option<u64>,
    n: u32,
    alpha: Option<i64>,
) -> Result<ExtensionDescriptor> {
    let kind = kind.unwrap_or(match (d, alpha) {
        (Some(_), _) => ExtensionKind::Quadratic,
        (None, Some(_)) => ExtensionKind::Kummer,
        (None, None) => ExtensionKind::Base,
    });
    let field = || -> Result<QuadraticField> {
        QuadraticField::new(
            d.ok_or_else(|| Error::InvalidArgument("--d is required for this kind".into()))?,
        )
    };
    let ell = || -> Result<OddPrime> {
        OddPrime::new(
            ell.ok_or_else(|| Error::InvalidArgument("--ell is required for this kind".into()))?,
        )
    };
    let e = match kind {
        ExtensionKind::Base => ExtensionDescriptor::BaseQ,
        ExtensionKind::Quadratic => ExtensionDescriptor::Quadratic(field()?),
        ExtensionKind::Dihedral => ExtensionDescriptor::Dihedral {
            field: field()?,
            ell: ell()?,
        },
        ExtensionKind::Unramified => ExtensionDescriptor::UnramifiedAbelian {
            field: field()?,
            ell: ell()?,
            n,
        },
        ExtensionKind::Kummer => ExtensionDescriptor::kummer_cubic(
            alpha.ok_or_else(|| Error::InvalidArgument("--alpha is required for kummer".into()))?,
        )?,
    };
    e.validate()?;
    Ok(e)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Hilbert {
            a,
            b,
            place,
            format,
        } => {
            let v: Place = place.parse()?;
            let s = hilbert(a, b, v)?.value();
            match format {
                OutputFormat::Json => write_json(
                    out,
                    &HilbertDoc {
                        place: v.to_string(),
                        symbol: s,
                    },
                )?,
                OutputFormat::Csv => {
                    write_csv(out, &["place", "symbol"], &[v.to_string(), s.to_string()])?
                }
                OutputFormat::Text => writeln!(out, "({a}, {b})_{v} = {s:+}").map_err(io_err)?,
            }
        }
        Command::Ramify { a, b, format } => {
            let report = ramification_report(&QuaternionAlgebraQ::new(a, b)?)?;
            let places: Vec<String> = report.places.iter().map(Place::to_string).collect();
            match format {
                OutputFormat::Json => write_json(
                    out,
                    &RamifyDoc {
                        discriminant: report.reduced_discriminant,
                        places,
                    },
                )?,
                OutputFormat::Csv => write_csv(
                    out,
                    &["discriminant", "places"],
                    &[report.reduced_discriminant.to_string(), places.join(" ")],
                )?,
                OutputFormat::Text => writeln!(
                    out,
                    "D = {}; ramified at {{{}}}",
                    report.reduced_discriminant,
                    places.join(", ")
                )
                .map_err(io_err)?,
            }
        }
        Command::Classify {
            d,
            kind,
            ell,
            n,
            alpha,
            p,
            q,
            format,
        } => {
            let e = descriptor(d, kind, ell, n, alpha)?;
            let v = classify_extension(&e, p, q)?;
            let doc = ClassifyDoc {
                verdict: v.result.as_str(),
                case: v.case_label(),
            };
            match format {
                OutputFormat::Json => write_json(out, &doc)?,
                OutputFormat::Csv => write_csv(
                    out,
                    &["verdict", "case"],
                    &[doc.verdict.to_string(), doc.case],
                )?,
                OutputFormat::Text => {
                    writeln!(out, "{} ({})", doc.verdict, doc.case).map_err(io_err)?
                }
            }
        }
        Command::Table {
            d_min,
            d_max,
            prime_bound,
            all,
            format,
        } => {
            let rows = table_rows(d_min, d_max, prime_bound, all)?;
            emit_table(&rows, format, out)?;
        }
        Command::Verify { d_max, prime_bound } => {
            let d_max = i64::try_from(d_max)
                .map_err(|_| Error::InvalidArgument("--d-max out of range".into()))?;
            let ds: Vec<i64> = (-d_max..=d_max).collect();
            let report = match thread_cap()? {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?
                    .install(|| cross_validate(&ds, prime_bound))?,
                None => cross_validate(&ds, prime_bound)?,
            };
            write_json(out, &report)?;
            writeln!(
                err,
                "verify: {} grid points checked, {} mismatches",
                report.checked,
                report.mismatches.len()
            )
            .map_err(io_err)?;
            if !report.is_clean() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status: 0 success, 1 verification mismatch, 2 invalid input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    EXIT_INVALID
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}
