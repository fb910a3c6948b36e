//! The `gbent` command line.
//!
//! Truth tables are given as arguments or read from `--input FILE`, one per line (blank lines
//! and lines starting with `#` are skipped). Boolean tables are `0`/`1` strings, octal tables are
//! strings of digits `0..=7`, index ascending. Output is text by default, one JSON object per
//! record with `--json`, or CSV with `--csv`.
//!
//! Exit codes: 0 success, 1 other error, 2 parse/usage error, 3 construction hypothesis failure,
//! 4 identity or route-agreement failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    characterize_spectra, classify_boolean, component_spectra, is_gbent_direct, norm_from_components,
    normalized_tuple, tuple_is_admissible, tuples_spectra,
};
use crate::construct::{ConstructionRecipe, Epsilon, Kind};
use crate::correlation::{autocorr_bool, autocorr_gen, crosscorr_bool, crosscorr_gen};
use crate::error::Error;
use crate::function::{BooleanFunction, OctalFunction};
use crate::sweep::{enumerate, verify_functions, verify_identities, Mode, SweepConfig};
use crate::transform::{gwht_fast, wht_fast};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_IDENTITY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "gbent", version, about = "Exact spectral analysis of Z8-valued Boolean functions")]
pub struct Cli {
    /// Emit one JSON object per record.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV with a header row.
    #[arg(long, global = true)]
    pub csv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Tables {
    /// Truth tables.
    pub tables: Vec<String>,
    /// Read truth tables from a file, one per line.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Require every table to have this many variables.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Walsh-Hadamard spectrum of Boolean functions.
    Wht(Tables),
    /// Generalized Walsh-Hadamard spectrum of octal functions, as Z[ζ8] coefficient vectors.
    Gwht(Tables),
    /// Bent/semibent status of Boolean functions.
    Classify(Tables),
    /// Gbent test of octal functions by the direct and characterization routes.
    GbentCheck(Tables),
    /// Component spectra, product condition and admissible patterns of octal functions.
    Characterize(Tables),
    /// Autocorrelation of octal functions (or Boolean ones with --boolean).
    Autocorr {
        #[command(flatten)]
        tables: Tables,
        #[arg(long)]
        boolean: bool,
    },
    /// Crosscorrelation of two functions.
    Crosscorr {
        f: String,
        g: String,
        #[arg(long)]
        boolean: bool,
    },
    /// Build a gbent function from Boolean ingredients.
    Construct {
        /// One of thm5, thm6, thm7f, thm7g, thm7h.
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        a: BooleanFunction,
        #[arg(long)]
        b: Option<BooleanFunction>,
        #[arg(long)]
        c: BooleanFunction,
        /// +1 or -1.
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<Epsilon>,
        /// Build even when the hypotheses fail.
        #[arg(long)]
        unchecked: bool,
    },
    /// Sweep a function space comparing the gbent routes.
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Draw this many random functions instead of enumerating all of them.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        workers: Option<usize>,
        /// Write the gbent truth tables found to this CSV file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check inversion, Parseval and correlation identities on random or given functions.
    Verify {
        #[command(flatten)]
        tables: Tables,
        #[arg(long, visible_alias = "trials", default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::BadLength { .. }
            | Error::BadValue { .. }
            | Error::ArityMismatch { .. }
            | Error::InvalidArity(_)
            | Error::InvalidEpsilon(_) => EXIT_PARSE,
            Error::Hypothesis(_) => EXIT_HYPOTHESIS,
            _ => EXIT_OTHER,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_OTHER,
            message: e.to_string(),
        }
    }
}

struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
    header_done: bool,
}

impl Emitter<'_> {
    fn emit<T: Serialize>(&mut self, record: &T) -> std::io::Result<()> {
        let value = serde_json::to_value(record).expect("records serialize");
        match self.format {
            Format::Json => writeln!(self.out, "{value}"),
            Format::Text => {
                let Value::Object(map) = value else {
                    return writeln!(self.out, "{value}");
                };
                for (k, v) in map {
                    match v {
                        Value::String(s) => writeln!(self.out, "{k}: {s}")?,
                        other => writeln!(self.out, "{k}: {other}")?,
                    }
                }
                writeln!(self.out)
            }
            Format::Csv => {
                let Value::Object(map) = value else {
                    return writeln!(self.out, "{}", csv_cell(&value));
                };
                if !self.header_done {
                    let keys: Vec<&str> = map.keys().map(String::as_str).collect();
                    writeln!(self.out, "{}", keys.join(","))?;
                    self.header_done = true;
                }
                let cells: Vec<String> = map.values().map(csv_cell).collect();
                writeln!(self.out, "{}", cells.join(","))
            }
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) if !s.contains([',', '"']) => s.clone(),
        Value::Number(_) | Value::Bool(_) | Value::Null => v.to_string(),
        other => {
            let raw = match other {
                Value::String(s) => s.clone(),
                _ => other.to_string(),
            };
            format!("\"{}\"", raw.replace('"', "\"\""))
        }
    }
}

impl Tables {
    fn load(&self) -> Result<Vec<String>, Failure> {
        let mut all = self.tables.clone();
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)?;
            all.extend(
                text.lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(String::from),
            );
        }
        if all.is_empty() {
            return Err(Failure {
                code: EXIT_PARSE,
                message: "no truth tables given".into(),
            });
        }
        Ok(all)
    }

    fn check_n(&self, n: u32) -> Result<(), Failure> {
        match self.n {
            Some(want) if want != n => Err(Error::ArityMismatch { left: want, right: n }.into()),
            _ => Ok(()),
        }
    }

    fn boolean(&self) -> Result<Vec<BooleanFunction>, Failure> {
        self.load()?
            .iter()
            .map(|s| {
                let f: BooleanFunction = s.parse()?;
                self.check_n(f.n())?;
                Ok(f)
            })
            .collect()
    }

    fn octal(&self) -> Result<Vec<OctalFunction>, Failure> {
        self.load()?
            .iter()
            .map(|s| {
                let f: OctalFunction = s.parse()?;
                self.check_n(f.n())?;
                Ok(f)
            })
            .collect()
    }
}

/// Parses `args` (including the program name) and runs the command, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let mut emitter = Emitter {
        format,
        out,
        header_done: false,
    };
    match execute(cli.command, &mut emitter) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, em: &mut Emitter<'_>) -> Result<i32, Failure> {
    let mut code = EXIT_OK;
    match command {
        Command::Wht(t) => {
            for f in t.boolean()? {
                em.emit(&wht_fast(&f))?;
            }
        }
        Command::Gwht(t) => {
            for f in t.octal()? {
                em.emit(&gwht_fast(&f))?;
            }
        }
        Command::Classify(t) => {
            for f in t.boolean()? {
                em.emit(&classify_boolean(&f))?;
            }
        }
        Command::GbentCheck(t) => {
            for f in t.octal()? {
                let direct = is_gbent_direct(&f);
                let cs = component_spectra(&f);
                let characterized = characterize_spectra(&cs);
                let tuples = tuples_spectra(&cs);
                let agree = direct.verdict == characterized.verdict;
                if !agree {
                    code = EXIT_IDENTITY;
                }
                em.emit(&json!({
                    "function": f.to_string(),
                    "n": f.n(),
                    "direct": direct.verdict_name(),
                    "characterized": characterized.verdict_name(),
                    "tuples": tuples.verdict_name(),
                    "agree": agree,
                }))?;
            }
        }
        Command::Characterize(t) => {
            for f in t.octal()? {
                let cs = component_spectra(&f);
                let points: Vec<Value> = (0..cs.len())
                    .map(|u| {
                        let [x, y, w, z] = cs.xywz(u);
                        let tuple = normalized_tuple(&cs, u);
                        json!({
                            "u": u,
                            "w": w, "x": x, "y": y, "z": z,
                            "star": x * y == w * z,
                            "tuple": tuple,
                            "admissible": tuple.is_some_and(|t| tuple_is_admissible(cs.n(), t)),
                            "norm_times_4_root2": norm_from_components(&cs, u),
                        })
                    })
                    .collect();
                em.emit(&json!({
                    "function": f.to_string(),
                    "n": f.n(),
                    "characterized": characterize_spectra(&cs),
                    "tuples": tuples_spectra(&cs),
                    "points": points,
                }))?;
            }
        }
        Command::Autocorr { tables, boolean } => {
            if boolean {
                for f in tables.boolean()? {
                    em.emit(&autocorr_bool(&f))?;
                }
            } else {
                for f in tables.octal()? {
                    em.emit(&autocorr_gen(&f))?;
                }
            }
        }
        Command::Crosscorr { f, g, boolean } => {
            if boolean {
                let (f, g): (BooleanFunction, BooleanFunction) = (f.parse()?, g.parse()?);
                em.emit(&crosscorr_bool(&f, &g)?)?;
            } else {
                let (f, g): (OctalFunction, OctalFunction) = (f.parse()?, g.parse()?);
                em.emit(&crosscorr_gen(&f, &g)?)?;
            }
        }
        Command::Construct {
            kind,
            a,
            b,
            c,
            epsilon,
            unchecked,
        } => {
            let recipe = ConstructionRecipe::new(kind, a, b, c, epsilon)?;
            let hypotheses = recipe.check_hypotheses();
            if !unchecked {
                hypotheses.clone()?;
            }
            let f = recipe.build()?;
            let gbent = is_gbent_direct(&f).is_gbent();
            if hypotheses.is_ok() && !gbent {
                code = EXIT_IDENTITY;
            }
            em.emit(&json!({
                "kind": kind.cli_name(),
                "n": f.n(),
                "function": f.to_string(),
                "hypotheses": hypotheses.err().map(|e| e.to_string()),
                "gbent": gbent,
            }))?;
        }
        Command::Enumerate {
            n,
            samples,
            seed,
            workers,
            output,
        } => {
            let cfg = SweepConfig {
                n,
                mode: if samples.is_some() { Mode::Random } else { Mode::Exhaustive },
                samples: samples.unwrap_or(1),
                workers,
                seed,
                output,
            };
            let summary = enumerate(&cfg)?;
            if !summary.routes_agree() {
                code = EXIT_IDENTITY;
            }
            em.emit(&summary)?;
        }
        Command::Verify { tables, samples, seed } => {
            let report = if tables.tables.is_empty() && tables.input.is_none() {
                let n = tables.n.ok_or_else(|| Failure {
                    code: EXIT_PARSE,
                    message: "verify needs --n or truth tables".into(),
                })?;
                verify_identities(n, samples, seed)?
            } else {
                verify_functions(&tables.octal()?)?
            };
            if !report.passed {
                code = EXIT_IDENTITY;
            }
            em.emit(&report)?;
        }
    }
    Ok(code)
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gbent").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gwht_json() {
        let (code, out, _) = call(&["--json", "gwht", "0004"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v, json!({"n": 2, "spectrum": [[2,0,0,0],[2,0,0,0],[2,0,0,0],[-2,0,0,0]]}));
    }

    #[test]
    fn gbent_check_json() {
        let (code, out, _) = call(&["--json", "gbent-check", "02"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["direct"], "gbent");
        assert_eq!(v["characterized"], "gbent");
        assert_eq!(v["agree"], true);
    }

    #[test]
    fn classify_json() {
        let (code, out, _) = call(&["--json", "classify", "0001"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["bent"], true);
    }

    #[test]
    fn parse_error_exit_code() {
        let (code, _, err) = call(&["wht", "01x1"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("position 2"), "{err}");
        assert_eq!(call(&["gwht", "08"]).0, EXIT_PARSE);
        assert_eq!(call(&["wht", "0001", "--n", "3"]).0, EXIT_PARSE);
        assert_eq!(call(&["no-such-command"]).0, EXIT_PARSE);
    }

    #[test]
    fn hypothesis_failure_exit_code() {
        let args = ["construct", "--kind", "thm7f", "--a", "0000", "--c", "0001", "--epsilon", "-1"];
        assert_eq!(call(&args).0, EXIT_HYPOTHESIS);
        let mut unchecked = args.to_vec();
        unchecked.push("--unchecked");
        let (code, out, _) = call(&unchecked);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("gbent: false"), "{out}");
    }

    #[test]
    fn construct_gbent() {
        let (code, out, _) = call(&[
            "--json", "construct", "--kind", "thm7f", "--a", "0001", "--c", "0001", "--epsilon", "+1",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["gbent"], true);
        assert_eq!(v["n"], 3);
    }

    #[test]
    fn disagreement_exit_code() {
        let (code, out, _) = call(&["--json", "gbent-check", "00"]);
        assert_eq!(code, EXIT_IDENTITY);
        assert!(out.contains("\"agree\":false"));
    }

    #[test]
    fn verify_and_enumerate() {
        assert_eq!(call(&["verify", "--n", "4", "--samples", "10", "--seed", "3"]).0, 0);
        assert_eq!(call(&["verify", "02"]).0, 0);
        let (code, out, _) = call(&["--json", "enumerate", "--n", "2"]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["agree"], 4096);
    }

    #[test]
    fn csv_output() {
        let (code, out, _) = call(&["--csv", "classify", "0001", "0111"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "bent,n,semibent");
    }
}
