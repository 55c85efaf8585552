//! The `linksig` command line.
//!
//! Every command reads one or more link files and prints JSON to stdout:
//! a single object for one file, an array for several. Exit codes: 0 on
//! success (including a `hypothesis_violated` verdict), 2 on input errors,
//! 3 when `check` finds quantities that disagree although the hypothesis
//! holds.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use linksig_core::linkfile::JsonInt;
use linksig_core::num_bigint::BigInt;
use linksig_core::{
    alexander_poly, check_theorem, hodge_aggregates, hypothesis_holds, linking_matrix,
    parse_link_file, signature_at, signature_profile, small_linking_matrix, AlexanderPolynomial,
    Error, GaussianRational, InertiaTriple, LinkFile, Matrix, Rational, Verdict,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "linksig",
    version,
    about = "Tristram-Levine signatures of links from Seifert matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Link files (JSON).
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Pretty-print the JSON and append a human-readable table.
    #[arg(long)]
    pretty: bool,
    /// Number of files processed in parallel.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Alexander polynomial det(tS - S^T).
    Alexander(Common),
    /// Signature of (1-z)S + (1-z̄)S^T at a unit-circle point.
    Signature {
        #[command(flatten)]
        common: Common,
        /// Point on the unit circle as "re,im" with rationals "p/q" (default -1,0).
        #[arg(long, value_name = "RE,IM")]
        at: Option<String>,
    },
    /// Signature and nullity on every root-free arc of the upper semicircle.
    Profile(Common),
    /// Limit of the signature at z = 1.
    Sigma1(Common),
    /// Linking matrix and small linking matrix.
    Linking {
        #[command(flatten)]
        common: Common,
        /// Row/column deleted for the small linking matrix (default: last).
        #[arg(long)]
        remove_index: Option<usize>,
    },
    /// Compare the limit signature with the linking-matrix signature.
    Check(Common),
    /// Eigenvalue-1 Hodge number aggregates.
    Hodge(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Alexander(c)
            | Command::Profile(c)
            | Command::Sigma1(c)
            | Command::Check(c)
            | Command::Hodge(c) => c,
            Command::Signature { common, .. } | Command::Linking { common, .. } => common,
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(mut msg: String) -> Self {
        if !msg.ends_with('\n') {
            msg.push('\n');
        }
        Self {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::input_error(text)
            };
        }
    };
    let at = match &cli.command {
        Command::Signature { at: Some(s), .. } => match parse_point(s) {
            Ok(z) => z,
            Err(msg) => return Outcome::input_error(msg),
        },
        _ => GaussianRational::real(Rational::from_integer(BigInt::from(-1))),
    };
    let common = cli.command.common();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(usize::from(common.jobs))
        .build()
    {
        Ok(p) => p,
        Err(e) => return Outcome::input_error(format!("thread pool: {e}")),
    };
    let results: Vec<Result<Report, String>> = pool.install(|| {
        use rayon::prelude::*;
        common
            .files
            .par_iter()
            .map(|path| process(&cli.command, path, &at))
            .collect()
    });

    let mut reports = Vec::with_capacity(results.len());
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => errors.push(e),
        }
    }
    if !errors.is_empty() {
        return Outcome::input_error(errors.join("\n"));
    }
    let counterexample = reports.iter().any(|r| r.counterexample);
    let values: Vec<Value> = reports.into_iter().map(|r| r.value).collect();
    let doc = if values.len() == 1 {
        values[0].clone()
    } else {
        Value::Array(values.clone())
    };
    let mut stdout = if common.pretty {
        serde_json::to_string_pretty(&doc)
    } else {
        serde_json::to_string(&doc)
    }
    .expect("reports serialize");
    stdout.push('\n');
    if common.pretty {
        for v in &values {
            stdout.push('\n');
            stdout.push_str(&table(v));
        }
    }
    let stderr = values
        .iter()
        .flat_map(|v| {
            v.get("warnings")
                .and_then(Value::as_array)
                .cloned()
                .unwrap_or_default()
        })
        .filter_map(|w| w.as_str().map(|s| format!("warning: {s}\n")))
        .collect();
    Outcome {
        code: if counterexample {
            EXIT_COUNTEREXAMPLE
        } else {
            EXIT_OK
        },
        stdout,
        stderr,
    }
}

struct Report {
    value: Value,
    counterexample: bool,
}

impl From<Value> for Report {
    fn from(value: Value) -> Self {
        Self {
            value,
            counterexample: false,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("not a rational number: {s:?}"))
}

/// Parses `"re,im"` and checks `|z|² = 1` exactly.
pub fn parse_point(s: &str) -> Result<GaussianRational, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM but got {s:?}"))?;
    let z = GaussianRational::new(parse_rational(re)?, parse_rational(im)?);
    if !z.is_on_unit_circle() {
        return Err(format!(
            "{s} is not on the unit circle (|z|^2 = {})",
            z.norm_sqr()
        ));
    }
    Ok(z)
}

fn load(path: &Path) -> Result<LinkFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_link_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn process(cmd: &Command, path: &Path, at: &GaussianRational) -> Result<Report, String> {
    let file = load(path)?;
    let err = |e: Error| format!("{}: {e}", path.display());
    let s = file.seifert_matrix().map_err(err)?;
    let mut warnings: Vec<String> = s.consistency_warning().into_iter().collect();
    let name = file.name.clone();

    let report: Report = match cmd {
        Command::Alexander(_) => {
            let a = alexander_poly(&s);
            json!({
                "name": name,
                "components": s.components(),
                "alexander": alexander_json(&a),
                "hypothesis_holds": hypothesis_holds(&a, s.components()),
                "warnings": warnings,
            })
            .into()
        }
        Command::Signature { .. } => {
            let i = signature_at(&s, at).map_err(err)?;
            json!({
                "name": name,
                "z": at.to_string(),
                "signature": i.signature(),
                "inertia": inertia_json(&i),
                "warnings": warnings,
            })
            .into()
        }
        Command::Profile(_) => match signature_profile(&s) {
            Ok(p) => {
                let arcs: Vec<Value> = p
                    .arcs
                    .iter()
                    .map(|a| {
                        json!({
                            "lower_x": a.arc.lower_x.to_string(),
                            "upper_x": a.arc.upper_x.to_string(),
                            "sample_z": a.arc.sample_z.to_string(),
                            "signature": a.signature,
                            "nullity": a.nullity,
                        })
                    })
                    .collect();
                json!({
                    "name": name,
                    "alexander": alexander_json(&p.alexander),
                    "arcs": arcs,
                    "value_at_minus1": p.value_at_minus1.as_ref().map(inertia_json),
                    "sigma_one": p.sigma_one,
                    "warnings": warnings,
                })
                .into()
            }
            Err(Error::ZeroAlexander) => {
                warnings.push(Error::ZeroAlexander.to_string());
                json!({
                    "name": name,
                    "alexander": alexander_json(&alexander_poly(&s)),
                    "arcs": [],
                    "value_at_minus1": null,
                    "sigma_one": null,
                    "warnings": warnings,
                })
                .into()
            }
            Err(e) => return Err(err(e)),
        },
        Command::Sigma1(_) => {
            let a = alexander_poly(&s);
            let holds = hypothesis_holds(&a, s.components());
            let sigma = match signature_profile(&s) {
                Ok(p) => Some(p.sigma_one),
                Err(Error::ZeroAlexander) => {
                    warnings.push(Error::ZeroAlexander.to_string());
                    None
                }
                Err(e) => return Err(err(e)),
            };
            if !holds && !a.is_zero {
                warnings.push(format!(
                    "(t-1)^{} divides the Alexander polynomial; σ¹ is not determined by the linking matrix",
                    s.components()
                ));
            }
            json!({
                "name": name,
                "sigma_one": sigma,
                "hypothesis_holds": holds,
                "warnings": warnings,
            })
            .into()
        }
        Command::Linking { remove_index, .. } => {
            let r = s.components();
            let lk = match file.linking().map_err(err)? {
                Some(lk) => lk,
                None if r == 1 => Default::default(),
                None => return Err(format!("{}: no linking_numbers in file", path.display())),
            };
            let a = linking_matrix(&lk, r).map_err(err)?;
            let h = small_linking_matrix(&a, remove_index.unwrap_or(r)).map_err(err)?;
            json!({
                "name": name,
                "linking_matrix": matrix_json(a.entries()),
                "inertia": inertia_json(&a.inertia()),
                "signature": a.signature(),
                "small_linking_matrix": matrix_json(h.entries()),
                "removed_index": h.removed_index(),
                "small_inertia": inertia_json(&h.inertia()),
                "small_signature": h.signature(),
                "warnings": warnings,
            })
            .into()
        }
        Command::Check(_) => {
            let lk = file.linking().map_err(err)?;
            let rep = check_theorem(&s, lk.as_ref()).map_err(err)?;
            let counterexample = rep.verdict == Verdict::Counterexample;
            Report {
                value: json!({
                    "name": name,
                    "verdict": rep.verdict,
                    "sigma_one": rep.f_sigma_one,
                    "linking_signature": rep.a_linking,
                    "quantities": {
                        "a_linking": rep.a_linking,
                        "b_small_linking": rep.b_small_linking,
                        "c_restricted": rep.c_restricted,
                        "d_restricted": rep.d_restricted,
                        "e_hodge": rep.e_hodge,
                        "f_sigma_one": rep.f_sigma_one,
                    },
                    "hypothesis": rep.hypothesis,
                    "warnings": rep.warnings,
                }),
                counterexample,
            }
        }
        Command::Hodge(_) => match hodge_aggregates(&s) {
            Ok(h) => {
                let mut v = serde_json::to_value(h).expect("aggregates serialize");
                v["name"] = json!(name);
                v["warnings"] = json!(warnings);
                v.into()
            }
            Err(Error::ZeroAlexander) => {
                warnings.push(Error::ZeroAlexander.to_string());
                json!({
                    "name": name,
                    "weighted_sum": null,
                    "count_sum": s.boundary_nullity(),
                    "p11_plus": null,
                    "p11_minus": null,
                    "resolved": false,
                    "warnings": warnings,
                })
                .into()
            }
            Err(e) => return Err(err(e)),
        },
    };
    Ok(report)
}

fn ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

fn alexander_json(a: &AlexanderPolynomial) -> Value {
    json!({
        "coefficients": ints(a.poly.coefficients()),
        "normalized": ints(a.normalized.coefficients()),
        "display": a.display(),
        "t1_multiplicity": a.t1_multiplicity,
        "is_zero": a.is_zero,
    })
}

fn inertia_json(i: &InertiaTriple) -> Value {
    json!({"positive": i.positive, "negative": i.negative, "zero": i.zero})
}

fn matrix_json(m: &Matrix<BigInt>) -> Value {
    json!(m.to_rows().iter().map(|r| ints(r)).collect::<Vec<_>>())
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

/// Two-column key/value table of a report; nested objects are flattened
/// with dotted keys and arrays of objects are indexed.
fn table(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, x, rows);
                }
            }
            Value::Array(a) if a.iter().any(Value::is_object) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, rows);
                }
            }
            other => rows.push((prefix.to_string(), cell(other))),
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    rows.iter()
        .map(|(k, x)| format!("{k:<width$}  {x}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use linksig_core::Rational;

    #[test]
    fn point_parsing() {
        let z = parse_point("4/5,3/5").unwrap();
        assert_eq!(z.re, "4/5".parse::<Rational>().unwrap());
        assert!(parse_point("-1,0").is_ok());
        assert!(parse_point("1/2,1/2").is_err());
        assert!(parse_point("1/2").is_err());
        assert!(parse_point("x,0").is_err());
    }

    #[test]
    fn table_flattens_nested_objects() {
        let v = json!({"a": 1, "b": {"c": "x"}, "d": [{"e": null}]});
        let t = table(&v);
        assert!(t.contains("b.c"));
        assert!(t.contains("d[0].e"));
    }
}
