//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
//! 3 math-domain refusal (JSON error object on stdout), 4 internal
//! convention failure.

mod verify;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::braid::BraidWord;
use crate::exec::{with_threads, Execution};
use crate::homology::{pairing_table, render_pairing_csv};
use crate::invariants::{colored_jones, lefschetz_table, InvariantError};
use crate::verma::{weight_space_dim, VermaError};

pub use verify::{golden_corpus, knot_corpus, relation_checks, GoldenCase, Suite};

const DEFAULT_MAX_DIM: u128 = 200_000;

#[derive(Debug, Parser)]
#[command(name = "coloredjones", version, about = "Colored Jones polynomials of braid closures")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Refuse blocks whose square dimension exceeds this many entries.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Colored Jones polynomial of a knot closure.
    Jones {
        /// Braid word, e.g. "[1,-2,1]" or "s1 s2^-1 s1".
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
        /// Color N (dimension of the simple module), at least 2.
        #[arg(long)]
        color: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Abelianized Lefschetz numbers at s = q^l for r = 1..=r_max.
    Lefschetz {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        r_max: u32,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Pairings <β·U(k), B(k)> at s = q^l as CSV.
    PairingTable {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        l: u32,
    },
}

enum Failure {
    Usage(String),
    Domain(serde_json::Value),
    Convention(String),
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::InvalidColor(_) => Failure::Usage(e.to_string()),
            InvariantError::NotAKnot { ref cycles } => Failure::Domain(json!({
                "error": "not_a_knot",
                "message": e.to_string(),
                "cycles": cycles,
            })),
            InvariantError::Verma(v) => v.into(),
        }
    }
}

impl From<VermaError> for Failure {
    fn from(e: VermaError) -> Self {
        match e {
            VermaError::NotAKnot { cycles } => InvariantError::NotAKnot { cycles }.into(),
            VermaError::Convention(m) => Failure::Convention(m),
        }
    }
}

fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, Failure> {
    BraidWord::parse(text, strands).map_err(|e| Failure::Usage(format!("invalid braid: {e}")))
}

fn check_dim(n: usize, r: u32, max_dim: u128) -> Result<(), Failure> {
    let dim = weight_space_dim(n, r);
    if dim.saturating_mul(dim) > max_dim {
        return Err(Failure::Domain(json!({
            "error": "block_too_large",
            "message": format!(
                "weight block V_{{{n},{r}}} has dimension C(r+n-1, n-1) = C({}, {}) = {dim}; \
                 {dim}^2 entries exceed --max-dim {max_dim}",
                r as usize + n - 1,
                n - 1
            ),
            "n": n,
            "r": r,
            "dimension": dim.to_string(),
        })));
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Result<i32, Failure>, io::Error> {
    let exec = Execution::default();
    let result = match &cli.command {
        Command::Jones { braid, strands, color, format } => (|| {
            let w = parse_braid(braid, *strands)?;
            if *color < 2 {
                return Err(InvariantError::InvalidColor(*color).into());
            }
            check_dim(w.strands(), w.strands() as u32 * (color - 1), cli.max_dim)?;
            Ok((colored_jones(&w, *color, exec)?, *format))
        })()
        .map(|(report, format)| match format {
            Format::Text => format!("{}\n", report.jones),
            Format::Json => format!("{}\n", serde_json::to_string(&report).expect("report serializes")),
        }),
        Command::Lefschetz { braid, strands, l, r_max } => (|| {
            let w = parse_braid(braid, *strands)?;
            if *r_max < 1 {
                return Err(Failure::Usage("--r-max must be at least 1".into()));
            }
            check_dim(w.strands(), *r_max, cli.max_dim)?;
            let rows = lefschetz_table(&w, *l, *r_max, exec)?;
            let mut s = String::from("r,lefschetz,classical,nonzero\n");
            for d in rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    d.r, d.lefschetz_abelianized, d.lefschetz_classical, d.nonzero_monomials
                ));
            }
            Ok(s)
        })(),
        Command::PairingTable { braid, strands, l } => (|| {
            let w = parse_braid(braid, *strands)?;
            if *l < 1 {
                return Err(Failure::Usage("--l must be at least 1".into()));
            }
            check_dim(w.strands(), w.strands() as u32 * l, cli.max_dim)?;
            let rows = pairing_table(&w, *l, exec)?;
            Ok(render_pairing_csv(w.strands(), &rows))
        })(),
        Command::Verify { suite, seed } => {
            let passed = verify::run_suite(*suite, *seed, exec, out)?;
            return Ok(Ok(if passed { 0 } else { 1 }));
        }
    };
    match result {
        Ok(s) => {
            out.write_all(s.as_bytes())?;
            Ok(Ok(0))
        }
        Err(f) => Ok(Err(f)),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    if cli.threads == Some(0) {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return 2;
    }
    let mut buf = Vec::new();
    let outcome = with_threads(cli.threads, || execute(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match outcome {
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Usage(m))) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Ok(Err(Failure::Domain(v))) => {
            let _ = writeln!(out, "{v}");
            3
        }
        Ok(Err(Failure::Convention(m))) => {
            let _ = writeln!(err, "internal convention check failed: {m}");
            4
        }
    }
}
