//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 valid input with a
//! negative answer (unsolvable Pell equation), 3 verification failure.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::catalog::{build, CatalogId, CatalogReport};
use crate::family::{family, ogrady_status, OgradyStatus};
use crate::lattice::{Lattice, Signature};
use crate::pell::{enumerate_negative, fundamental_negative, is_solvable_negative, is_square};
use crate::verify::{run_checks, standard_checks, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Human,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "epwlat", version, about = "Exact lattice and negative Pell computations for Hilbert squares of K3 surfaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve y^2 - D x^2 = -1.
    Pell {
        /// The coefficient D.
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Number of solutions to list.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        count: i64,
    },
    /// Report invariants of a catalog or inline lattice.
    Lattice(LatticeArgs),
    /// Tabulate the degree family d(n) = 8n^2 + 16n + 10.
    Family {
        #[arg(long, allow_negative_numbers = true)]
        n_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
    },
    /// Classify O'Grady's parameter r (genus r^2 + 2).
    Ogrady {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
    /// Run every built-in consistency check.
    Verify {
        #[arg(long, default_value_t = 100, allow_negative_numbers = true)]
        n_max: i64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LatticeSource {
    /// Catalog name, e.g. LAMBDA0, K3, NS_HILB(10), R(1), PI(2).
    #[arg(long)]
    pub id: Option<String>,
    /// Inline Gram matrix: rows separated by ';', entries by ','.
    #[arg(long, allow_hyphen_values = true)]
    pub gram: Option<String>,
    /// File containing an inline Gram matrix.
    #[arg(long)]
    pub gram_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub source: LatticeSource,
    #[arg(long, value_enum, default_value_t = LatticeOp::Report)]
    pub op: LatticeOp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeOp {
    Report,
    Disc,
    Signature,
    Even,
}

/// Parses `"a,b;c,d"` into a symmetric lattice.
pub fn parse_gram(s: &str) -> Result<Lattice, String> {
    let rows: Vec<Vec<BigInt>> = s
        .trim()
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|e| e.trim().parse::<BigInt>().map_err(|_| format!("bad entry {:?}", e.trim())))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    Lattice::from_rows(rows).map_err(|e| e.to_string())
}

/// A header plus rows, rendered as aligned text or CSV.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<D: Display>(&mut self, row: impl IntoIterator<Item = D>) {
        self.rows.push(row.into_iter().map(|d| d.to_string()).collect());
    }

    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Human => self.write_human(out),
        }
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }

    fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.headers[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String], out: &mut dyn Write| -> io::Result<()> {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(out, "{}", padded.join("  "))
        };
        line(&self.headers, out)?;
        for r in &self.rows {
            line(r, out)?;
        }
        Ok(())
    }

    /// Parses CSV produced by [`Table::write_csv`].
    pub fn read_csv(data: &str) -> Result<Table, csv::Error> {
        let mut r = csv::ReaderBuilder::new().from_reader(data.as_bytes());
        let headers = r.headers()?.iter().map(String::from).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
            .collect::<Result<_, _>>()?;
        Ok(Table { headers, rows })
    }
}

fn signature_str(s: Signature) -> String {
    if s.zero == 0 {
        format!("({},{})", s.positive, s.negative)
    } else {
        s.to_string()
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: OutputFormat,
}

impl Io<'_> {
    fn fail(&mut self, msg: impl Display) -> io::Result<i32> {
        writeln!(self.err, "error: {msg}")?;
        Ok(EXIT_USAGE)
    }
}

fn cmd_pell(io: &mut Io, d: i64, count: i64) -> io::Result<i32> {
    if d < 1 {
        return io.fail(format!("D must be >= 1, got {d}"));
    }
    if count < 1 {
        return io.fail(format!("count must be >= 1, got {count}"));
    }
    let du = d as u64;
    if du > 1 && is_square(du) {
        return io.fail(format!("D = {d} is a perfect square"));
    }
    let solvable = match is_solvable_negative(du) {
        Ok(s) => s,
        Err(e) => return io.fail(e),
    };
    if !solvable {
        match io.format {
            OutputFormat::Human => writeln!(io.out, "D={d}: unsolvable")?,
            OutputFormat::Csv => {
                let mut t = Table::new(["d", "solvable"]);
                t.push([d.to_string(), "false".into()]);
                t.write_csv(io.out)?;
            }
        }
        return Ok(EXIT_NEGATIVE);
    }
    let mut table = Table::new(["k", "y", "x"]);
    if du == 1 {
        // y^2 - x^2 = -1 has only (0, 1)
        table.push(["0", "0", "1"]);
    } else {
        let sols = match enumerate_negative(du, count as usize) {
            Ok(s) => s,
            Err(e) => return io.fail(e),
        };
        for (k, s) in sols.iter().enumerate() {
            table.push([k.to_string(), s.y().to_string(), s.x().to_string()]);
        }
    }
    if io.format == OutputFormat::Human {
        writeln!(io.out, "D={d}: solvable")?;
        if du > 1 {
            let fund = fundamental_negative(du).ok().flatten().expect("solvable");
            writeln!(io.out, "minimal solution (y, x) = {fund}")?;
        }
    }
    table.write(io.format, io.out)?;
    Ok(EXIT_OK)
}

fn cmd_lattice(io: &mut Io, args: &LatticeArgs) -> io::Result<i32> {
    let (label, lattice) = if let Some(id) = &args.source.id {
        match id.parse::<CatalogId>().and_then(|id| build(id).map(|l| (id.to_string(), l))) {
            Ok(v) => v,
            Err(e) => return io.fail(e),
        }
    } else {
        let text = match (&args.source.gram, &args.source.gram_file) {
            (Some(g), _) => g.clone(),
            (None, Some(path)) => match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return io.fail(format!("{}: {e}", path.display())),
            },
            (None, None) => return io.fail("one of --id, --gram, --gram-file is required"),
        };
        match parse_gram(&text) {
            Ok(l) => ("gram".to_string(), l),
            Err(e) => return io.fail(e),
        }
    };
    let report = CatalogReport::of(&lattice);
    let (headers, values): (Vec<&str>, Vec<String>) = match args.op {
        LatticeOp::Report => (
            vec!["lattice", "rank", "disc", "signature", "even"],
            vec![
                label,
                report.rank.to_string(),
                report.discriminant.to_string(),
                signature_str(report.signature),
                report.even.to_string(),
            ],
        ),
        LatticeOp::Disc => (vec!["disc"], vec![report.discriminant.to_string()]),
        LatticeOp::Signature => (
            vec!["positive", "negative", "zero"],
            vec![
                report.signature.positive.to_string(),
                report.signature.negative.to_string(),
                report.signature.zero.to_string(),
            ],
        ),
        LatticeOp::Even => (vec!["even"], vec![report.even.to_string()]),
    };
    match io.format {
        OutputFormat::Csv => {
            let mut t = Table::new(headers);
            t.push(values);
            t.write_csv(io.out)?;
        }
        OutputFormat::Human => {
            for (h, v) in headers.iter().zip(values) {
                writeln!(io.out, "{h}: {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// The family table for `n_min..=n_max`.
pub fn family_table(n_min: i64, n_max: i64) -> Result<Table, String> {
    if n_min < 1 || n_min > n_max {
        return Err(format!("need 1 <= n-min <= n-max, got {n_min}..{n_max}"));
    }
    let mut t = Table::new(["n", "d", "g", "r", "gamma_delta2", "disc_pi", "pell_y", "pell_x"]);
    for n in n_min..=n_max {
        let rec = family(n).map_err(|e| e.to_string())?;
        t.push([
            rec.n.to_string(),
            rec.d.to_string(),
            rec.g.to_string(),
            rec.ogrady_r.to_string(),
            rec.gamma_delta2.to_string(),
            rec.disc_pi.to_string(),
            rec.pell.y().to_string(),
            rec.pell.x().to_string(),
        ]);
    }
    Ok(t)
}

fn cmd_family(io: &mut Io, n_min: i64, n_max: i64) -> io::Result<i32> {
    match family_table(n_min, n_max) {
        Ok(t) => {
            t.write(io.format, io.out)?;
            Ok(EXIT_OK)
        }
        Err(e) => io.fail(e),
    }
}

fn cmd_ogrady(io: &mut Io, r: i64) -> io::Result<i32> {
    let status = match ogrady_status(r) {
        Ok(s) => s,
        Err(e) => return io.fail(e),
    };
    match io.format {
        OutputFormat::Human => writeln!(io.out, "r={r}: {status}")?,
        OutputFormat::Csv => {
            let (class, n, d) = match &status {
                OgradyStatus::KnownR0 => ("known_r0", String::new(), "2".to_string()),
                OgradyStatus::OgradyR2 => ("ogrady_r2", String::new(), "10".to_string()),
                OgradyStatus::EvenFamily { n, record } => ("even_family", n.to_string(), record.d.to_string()),
                OgradyStatus::OddOpen { .. } => ("odd_open", String::new(), (2 * r * r + 2).to_string()),
            };
            let mut t = Table::new(["r", "status", "n", "d"]);
            t.push([r.to_string(), class.to_string(), n, d]);
            t.write_csv(io.out)?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the given checks and maps the outcome to an exit code.
pub fn cmd_verify_with(checks: &[Check], n_max: i64, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    if n_max < 1 {
        writeln!(err, "error: n-max must be >= 1, got {n_max}")?;
        return Ok(EXIT_USAGE);
    }
    match run_checks(checks, n_max, out)? {
        None => {
            writeln!(out, "all checks passed")?;
            Ok(EXIT_OK)
        }
        Some((name, msg)) => {
            writeln!(err, "verification failed in {name}: counterexample: {msg}")?;
            Ok(EXIT_VERIFY_FAILED)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut io = Io { out, err, format: cli.format };
    let result = match &cli.command {
        Command::Pell { d, count } => cmd_pell(&mut io, *d, *count),
        Command::Lattice(args) => cmd_lattice(&mut io, args),
        Command::Family { n_min, n_max } => cmd_family(&mut io, *n_min, *n_max),
        Command::Ogrady { r } => cmd_ogrady(&mut io, *r),
        Command::Verify { n_max } => cmd_verify_with(&standard_checks(), *n_max, io.out, io.err),
    };
    result.unwrap_or(EXIT_USAGE)
}
