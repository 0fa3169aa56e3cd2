use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lehmer_core::bijections::{verify_map, MapId, MapReport};
use lehmer_core::identity::{
    compare_negative_table, negative_coefficient_table, IdentityReport, NegativeRow, Suite,
};
use lehmer_core::partition::ResidueSpec;
use lehmer_core::series::{derivative_difference, named_series, TruncatedSeries};
use lehmer_core::{Error, TheoremId, DEFAULT_ORDER};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "lehmer", version, about = "Exact checks of Lehmer's identity and its Beck-type companions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity for 0 ≤ n ≤ nmax by enumeration and by series.
    Check {
        #[arg(long)]
        thm: TheoremId,
        #[arg(long, default_value_t = 40)]
        nmax: u32,
        #[command(flatten)]
        residues: Residues,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Negative coefficients of the residue excess series for the class {2}.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(20..))]
        nmax: u32,
        /// Compare with the published table and exit 1 on any mismatch.
        #[arg(long)]
        compare_paper: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the coefficients c_0..c_N of a named series or an identity's series.
    Series {
        #[arg(long, conflicts_with = "thm", required_unless_present = "thm")]
        name: Option<String>,
        #[arg(long)]
        thm: Option<TheoremId>,
        #[arg(long = "N", env = "LEHMER_ORDER", default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        residues: Residues,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the objects counted by an identity's right-hand side at n.
    Witness {
        #[arg(long)]
        thm: TheoremId,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        residues: Residues,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check an injection exhaustively for 0 ≤ n ≤ nmax.
    VerifyMap {
        #[arg(long)]
        map: MapId,
        #[arg(long, default_value_t = 20)]
        nmax: u32,
        #[command(flatten)]
        residues: Residues,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Residues {
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Residues of L ∪ O as a comma list; even ones go to L, odd ones to O.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["ell", "l", "o"])]
    set: Vec<u32>,
    /// Shorthand for a single residue class.
    #[arg(long, conflicts_with_all = ["l", "o"])]
    ell: Option<u32>,
    #[arg(long = "L", value_delimiter = ',')]
    l: Vec<u32>,
    #[arg(long = "O", value_delimiter = ',')]
    o: Vec<u32>,
}

impl Residues {
    fn spec(&self) -> Result<ResidueSpec, Error> {
        if let Some(ell) = self.ell {
            ResidueSpec::singleton(self.r, ell)
        } else if !self.set.is_empty() {
            ResidueSpec::from_set(self.r, &self.set)
        } else {
            ResidueSpec::new(self.r, self.l.iter().copied(), self.o.iter().copied())
        }
    }
}

/// A failed run: bad input (exit 2) or a check that did not hold (exit 1).
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteMismatch { .. } | Error::Overflow(_) => {
                eprintln!("error: {e}");
                Failure::Check
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

#[derive(Serialize)]
struct CheckOutput<'a> {
    thm: TheoremId,
    params: &'a ResidueSpec,
    rows: &'a [lehmer_core::identity::Row],
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_check(rep: &IdentityReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            let doc = CheckOutput { thm: rep.thm, params: &rep.params, rows: &rep.rows };
            out = serde_json::to_string(&doc).expect("serializable report");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("n,lhs,rhs,series,ok,note\n");
            for row in &rep.rows {
                let series = row.series.map(|s| s.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    row.n,
                    row.lhs,
                    row.rhs,
                    series,
                    row.ok,
                    csv_field(&row.note)
                );
            }
        }
        Format::Text => {
            let _ = writeln!(out, "{} {}", rep.thm, rep.params);
            let _ = writeln!(out, "{:>4} {:>12} {:>12} {:>12}  ok", "n", "lhs", "rhs", "series");
            for row in &rep.rows {
                let series = row.series.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
                let mark = if row.ok { "yes" } else { "NO" };
                let _ = write!(out, "{:>4} {:>12} {:>12} {:>12}  {mark}", row.n, row.lhs, row.rhs, series);
                if !row.note.is_empty() {
                    let _ = write!(out, "  {}", row.note);
                }
                out.push('\n');
            }
            let verdict = if rep.all_ok() {
                "all rows hold".to_string()
            } else {
                format!("failing n: {:?}", rep.failures)
            };
            let _ = writeln!(out, "{verdict}");
        }
    }
    out
}

fn positions_braced(row: &NegativeRow, sep: &str) -> String {
    let pos = row.positions();
    if pos.is_empty() {
        "∅".into()
    } else {
        let inner: Vec<String> = pos.iter().map(u32::to_string).collect();
        format!("{{{}}}", inner.join(sep))
    }
}

fn render_table(rows: &[NegativeRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string(rows).expect("serializable table");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("r,n\n");
            for row in rows {
                let _ = writeln!(out, "{},{}", row.r, positions_braced(row, ";"));
            }
        }
        Format::Text => {
            for row in rows {
                let values: Vec<String> = row.entries.iter().map(|(_, c)| c.to_string()).collect();
                let _ = write!(out, "r = {:>2}: {}", row.r, positions_braced(row, ", "));
                if !values.is_empty() {
                    let _ = write!(out, "  values [{}]", values.join(", "));
                }
                out.push('\n');
            }
        }
    }
    out
}

fn render_series(s: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Json => {
            let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            format!("[{}]\n", coeffs.join(","))
        }
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{n},{c}");
            }
            out
        }
        Format::Text => format!("{s}\n"),
    }
}

fn render_map(reports: &[MapReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string(reports).expect("serializable reports");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("n,domain,codomain,image,unmapped,complement,excess,series_excess,passed\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.domain_size,
                    r.codomain_size,
                    r.image_size,
                    r.unmapped.len(),
                    r.complement.len(),
                    r.excess,
                    r.series_excess,
                    r.passed()
                );
            }
        }
        Format::Text => {
            for r in reports {
                let mark = if r.passed() { "ok" } else { "FAILED" };
                let _ = writeln!(
                    out,
                    "{} n = {:>2}: |A| = {}, |B| = {}, complement {}, unmapped {}, series {}  {mark}",
                    r.map,
                    r.n,
                    r.domain_size,
                    r.codomain_size,
                    r.complement.len(),
                    r.unmapped.len(),
                    r.series_excess
                );
                for v in &r.violations {
                    let _ = writeln!(out, "    {v}");
                }
            }
        }
    }
    out
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Check { thm, nmax, residues, format } => {
            let rep = Suite::new().check(thm, nmax, &residues.spec()?)?;
            print!("{}", render_check(&rep, format));
            if !rep.all_ok() {
                return Err(Failure::Check);
            }
        }
        Command::Table { rmax, nmax, compare_paper, format } => {
            let rows = negative_coefficient_table(rmax, nmax)?;
            print!("{}", render_table(&rows, format));
            if compare_paper {
                let diffs = compare_negative_table(&rows);
                for d in &diffs {
                    eprintln!("mismatch: {d}");
                }
                if !diffs.is_empty() {
                    return Err(Failure::Check);
                }
            }
        }
        Command::Series { name, thm, order, residues, format } => {
            let params = residues.spec()?;
            let s = match (name, thm) {
                (Some(name), _) => named_series(&name, &params, order)?,
                (None, Some(thm)) => derivative_difference(thm, &params, order)?,
                (None, None) => return Err(Failure::Usage("give --name or --thm".into())),
            };
            print!("{}", render_series(&s, format));
        }
        Command::Witness { thm, n, residues, format } => {
            let ws = Suite::new().witnesses(thm, n, &residues.spec()?)?;
            for w in &ws {
                match format {
                    Format::Json => println!("{}", serde_json::to_string(&w.to_string()).expect("string")),
                    Format::Csv | Format::Text => println!("{w}"),
                }
            }
        }
        Command::VerifyMap { map, nmax, residues, format } => {
            let params = residues.spec()?;
            let reports = (0..=nmax).map(|n| verify_map(map, n, &params)).collect::<Result<Vec<_>, _>>()?;
            print!("{}", render_map(&reports, format));
            if !reports.iter().all(MapReport::passed) {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
