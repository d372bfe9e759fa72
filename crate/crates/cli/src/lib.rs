//! Command-line front end for `knotcert`.
//!
//! Exit codes: 0 on success, 1 when a certificate is inconclusive (or a
//! self-check fails), 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotcert::{
    alexander, build_family, load_matrix, primeness_certificate, AlexanderResult, FamilyKind,
    FamilySpec, PrimenessCertificate, SeifertMatrix, Verdict,
};
use serde_json::json;

pub mod selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "knotcert",
    version,
    about = "Alexander polynomials and primeness certificates from Seifert matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial of K_{n,m} (kind C) or K'_{n,m} (kind E).
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Alexander polynomial of a Seifert matrix read from a JSON file.
    Matrix {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Primeness certificate for a family member or a matrix file.
    Certify {
        #[arg(long, conflicts_with_all = ["kind", "n", "m"])]
        path: Option<PathBuf>,
        #[arg(long, required_unless_present = "path")]
        kind: Option<FamilyKind>,
        #[arg(long, required_unless_present = "path", value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form and oracle cross-checks for n <= 8.
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub kind: FamilyKind,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Label only; the invariants do not depend on m.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub m: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

enum Source {
    Family { spec: FamilySpec, m: i64 },
    File(PathBuf),
}

impl Source {
    fn label(&self) -> String {
        match self {
            Source::Family { spec, m } => spec.kind().label(spec.n(), *m),
            Source::File(path) => path.display().to_string(),
        }
    }

    fn load(&self) -> Result<SeifertMatrix, String> {
        match self {
            Source::Family { spec, .. } => Ok(build_family(*spec)),
            Source::File(path) => load_matrix(path).map_err(|e| e.to_string()),
        }
    }

    fn json_fields(&self) -> serde_json::Map<String, serde_json::Value> {
        let mut map = serde_json::Map::new();
        map.insert("knot".into(), json!(self.label()));
        match self {
            Source::Family { spec, m } => {
                map.insert("kind".into(), json!(spec.kind().to_string()));
                map.insert("n".into(), json!(spec.n()));
                map.insert("m".into(), json!(m));
            }
            Source::File(path) => {
                map.insert("path".into(), json!(path.display().to_string()));
            }
        }
        map
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Family { family, format } => {
            let spec = FamilySpec::new(family.kind, family.n).map_err(|e| e.to_string())?;
            describe(&Source::Family { spec, m: family.m }, format, out)
        }
        Command::Matrix { path, format } => describe(&Source::File(path), format, out),
        Command::Certify {
            path,
            kind,
            n,
            m,
            format,
        } => {
            let source = match (path, kind, n) {
                (Some(path), _, _) => Source::File(path),
                (None, Some(kind), Some(n)) => Source::Family {
                    spec: FamilySpec::new(kind, n).map_err(|e| e.to_string())?,
                    m: m.unwrap_or(0),
                },
                _ => return Err("certify needs --path or both --kind and --n".into()),
            };
            let s = source.load()?;
            let cert = primeness_certificate(&s).map_err(|e| e.to_string())?;
            print_certificate(&source, &cert, format, out).map_err(io)?;
            Ok(match cert.verdict {
                Verdict::Prime => EXIT_OK,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Selftest { format } => {
            let report = selftest::run_all();
            report.print(format, out).map_err(io)?;
            Ok(if report.failed() == 0 {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            })
        }
    }
}

fn describe(source: &Source, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let s = source.load()?;
    let r = alexander(&s).map_err(|e| e.to_string())?;
    print_alexander(source, &r, format, out).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn print_alexander(
    source: &Source,
    r: &AlexanderResult,
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut doc = source.json_fields();
            if let serde_json::Value::Object(fields) = alexander_json(r) {
                doc.extend(fields);
            }
            writeln!(out, "{}", serde_json::Value::Object(doc))
        }
        Format::Text => {
            writeln!(out, "knot: {}", source.label())?;
            writeln!(out, "raw: {}", r.raw)?;
            writeln!(out, "delta: {}", r.symmetric)?;
            writeln!(out, "unit: {}", r.unit)?;
            writeln!(out, "d: {}", r.d)?;
            writeln!(out, "genus_upper: {}", r.genus_upper)
        }
    }
}

pub fn alexander_json(r: &AlexanderResult) -> serde_json::Value {
    json!({
        "raw": r.raw.to_string(),
        "symmetric": r.symmetric.to_string(),
        "unit": r.unit,
        "d": r.d,
        "genus_upper": r.genus_upper,
    })
}

fn print_certificate(
    source: &Source,
    cert: &PrimenessCertificate,
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut doc = source.json_fields();
            if let serde_json::Value::Object(fields) = cert.to_json() {
                doc.extend(fields);
            }
            writeln!(out, "{}", serde_json::Value::Object(doc))
        }
        Format::Text => {
            writeln!(out, "knot: {}", source.label())?;
            writeln!(out, "delta: {}", cert.delta)?;
            writeln!(out, "d: {}", cert.d)?;
            match cert.genus {
                Some(g) => writeln!(out, "genus: {g}")?,
                None => writeln!(out, "genus: undetermined")?,
            }
            writeln!(out, "genus_argument: {}", cert.genus_argument)?;
            if let Some(fact) = &cert.factorization {
                writeln!(out, "unit: {}", fact.unit)?;
                for f in &fact.factors {
                    writeln!(out, "factor: {} ({})", f.poly, f.witness)?;
                }
            }
            for split in &cert.splits {
                let why = |v: &knotcert::AdmissibilityVerdict| {
                    if !v.symmetric_ok {
                        "not symmetrizable".to_string()
                    } else if !v.admissible {
                        format!("value {} at t = 1", v.eval_one)
                    } else {
                        "admissible".to_string()
                    }
                };
                writeln!(
                    out,
                    "split: {} | {} -> {} ({}; {})",
                    split.left,
                    split.right,
                    if split.rejected() {
                        "rejected"
                    } else {
                        "ADMISSIBLE"
                    },
                    why(&split.left_verdict),
                    why(&split.right_verdict),
                )?;
            }
            for reason in &cert.reasons {
                writeln!(out, "reason: {reason}")?;
            }
            writeln!(out, "verdict: {}", cert.verdict)
        }
    }
}
