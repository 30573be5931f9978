//! The `altbase` command line.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! with everything destined for stdout and stderr, so the binary is a thin
//! wrapper and tests can drive the whole interface in-process.
//!
//! Exit codes: 0 success, 1 negative verdict of a check, 2 invalid input,
//! 3 fuel exhausted.

pub mod basefile;
pub mod literal;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub use basefile::{parse_base_file, parse_rational, BaseFile, BaseFileError};
pub use literal::{format_word, parse_digit_string, parse_finite, SyntaxError};

use crate::algebraic::{EmbeddedValue, FieldElement};
use crate::bases::AlternateBase;
use crate::classify::{necessary_conditions, sufficient_report, NecessaryReport, SufficientReport};
use crate::expansion::{
    expansion_of_one, greedy_expand, value_of, Admissibility, EPWord, Expansion, ExpansionError,
    FiniteDigitString, OneExpansions, DEFAULT_FUEL,
};
use crate::rewrite::{
    add, check_gfs, normalize, subtract_traced, AdditionTrace, GfsResult, RewriteError,
    RewriteSystem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FUEL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "altbase",
    version,
    about = "Alternate-base numeration: expansions, rewriting and finiteness checks"
)]
struct Cli {
    /// Base description file.
    #[arg(long, global = true, value_name = "FILE")]
    base: Option<std::path::PathBuf>,
    /// Emit a single JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Step limit for greedy expansions and for rewriting.
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    fuel: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Greedy expansion of a value in [0, 1].
    Expand {
        /// A rational, or field coordinates as a comma-separated list.
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// Expansion of 1 in a shifted base.
    One {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Quasi-greedy expansion of 1 in a shifted base.
    Quasi {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Necessary and sufficient conditions for finiteness.
    Classify,
    /// Descending digit chain condition.
    Gfs,
    /// Rewriting rules.
    Rules {
        /// Largest k for Type 1 rules.
        #[arg(long)]
        kmax: Option<usize>,
        /// Keep Type 1 rules that Type 2 rules make redundant.
        #[arg(long)]
        no_prune: bool,
    },
    /// Weight function.
    Weights,
    /// Sum of two admissible strings.
    Add {
        a: String,
        b: String,
        #[arg(long)]
        trace: bool,
    },
    /// Difference of two admissible strings.
    Sub {
        a: String,
        b: String,
        #[arg(long)]
        trace: bool,
    },
    /// Admissible string with the same value.
    Normalize {
        s: String,
        #[arg(long)]
        trace: bool,
    },
    /// Admissibility test.
    Admissible { s: String },
    /// Exact value of a digit word.
    Value { s: String },
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failed command: exit code and message.
struct Failure {
    code: i32,
    message: String,
    /// Extra JSON fields, such as a partial trace.
    detail: Option<Value>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
            detail: None,
        }
    }
}

impl From<RewriteError> for Failure {
    fn from(e: RewriteError) -> Self {
        let message = e.to_string();
        let (code, detail) = match &e {
            RewriteError::FuelExhausted { trace, partial } => (
                EXIT_FUEL,
                Some(json!({ "partial": partial.to_string(), "trace": trace_json(trace) })),
            ),
            RewriteError::Expansion(ExpansionError::NotParry { .. }) => (EXIT_FUEL, None),
            RewriteError::GfsViolated { .. } | RewriteError::NoWeightFound { .. } => {
                (EXIT_NEGATIVE, None)
            }
            _ => (EXIT_INPUT, None),
        };
        Self {
            code,
            message,
            detail,
        }
    }
}

impl From<ExpansionError> for Failure {
    fn from(e: ExpansionError) -> Self {
        RewriteError::from(e).into()
    }
}

/// Text and JSON renderings of a successful command.
struct Report {
    code: i32,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self {
            code: EXIT_OK,
            text,
            json,
        }
    }
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.json).unwrap())
            } else {
                report.text
            };
            Outcome {
                code: report.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => {
            let stdout = if cli.json {
                let mut doc = json!({ "error": f.message, "exit_code": f.code });
                if let Some(Value::Object(extra)) = f.detail {
                    doc.as_object_mut().unwrap().extend(extra);
                }
                format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
            } else {
                String::new()
            };
            Outcome {
                code: f.code,
                stdout,
                stderr: format!("error: {}\n", f.message),
            }
        }
    }
}

fn load_base(cli: &Cli) -> Result<AlternateBase, Failure> {
    let path = cli
        .base
        .as_ref()
        .ok_or_else(|| Failure::input("--base FILE is required"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    parse_base_file(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn word_arg(text: &str) -> Result<EPWord, Failure> {
    parse_digit_string(text).map_err(|e| Failure::input(format!("{text:?}: {e}")))
}

fn finite_arg(text: &str) -> Result<FiniteDigitString, Failure> {
    parse_finite(text).map_err(|e| Failure::input(format!("{text:?}: {e}")))
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let base = load_base(cli)?;
    let fuel = cli.fuel;
    match &cli.command {
        Command::Expand { value } => expand(&base, value, fuel),
        Command::One { shift } => {
            let e = expansion_of_one(&base, *shift, fuel)?;
            expansion_report(&e, json!({ "shift": base.reduce_index(*shift) }))
        }
        Command::Quasi { shift } => {
            let data = OneExpansions::compute(&base, fuel)?;
            let l = base.reduce_index(*shift);
            let w = data.quasi(l);
            Ok(Report::ok(
                format!("{w}\n"),
                json!({ "shift": l, "expansion": w.to_string() }),
            ))
        }
        Command::Classify => classify(&base, fuel),
        Command::Gfs => match check_gfs(&base, fuel)? {
            GfsResult::Holds => Ok(Report::ok("holds\n".into(), json!({ "holds": true }))),
            GfsResult::Violated { shift, position } => Ok(Report {
                code: EXIT_NEGATIVE,
                text: format!("violated: shift {shift}, position {position}\n"),
                json: json!({ "holds": false, "shift": shift, "position": position }),
            }),
        },
        Command::Rules { kmax, no_prune } => {
            let sys = RewriteSystem::with_options(&base, fuel, !no_prune, *kmax)?;
            let set = sys.rules();
            let mut text = String::new();
            let mut rules = Vec::new();
            for r in &set.rules {
                writeln!(text, "{}: {} -> {}", r.id(), r.lhs, r.rhs).unwrap();
                rules.push(
                    json!({ "id": r.id(), "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string() }),
                );
            }
            let json = json!({ "k_bound": set.k_bound, "pruned": set.pruned, "rules": rules });
            Ok(Report::ok(text, json))
        }
        Command::Weights => weights(&base, fuel),
        Command::Add { a, b, trace } => {
            let sys = RewriteSystem::new(&base, fuel)?;
            let (a, b) = (finite_arg(a)?, finite_arg(b)?);
            let (sum, steps) = add(&sys, &a, &b)?;
            Ok(result_report(&sum, &steps, *trace))
        }
        Command::Sub { a, b, trace } => {
            let sys = RewriteSystem::new(&base, fuel)?;
            let (a, b) = (finite_arg(a)?, finite_arg(b)?);
            let (diff, steps) = subtract_traced(&sys, &a, &b)?;
            Ok(result_report(&diff, &steps, *trace))
        }
        Command::Normalize { s, trace } => {
            let sys = RewriteSystem::new(&base, fuel)?;
            let (out, steps) = normalize(&sys, &finite_arg(s)?)?;
            Ok(result_report(&out, &steps, *trace))
        }
        Command::Admissible { s } => {
            let w = word_arg(s)?;
            let data = OneExpansions::compute(&base, fuel)?;
            Ok(match data.admissible(&w) {
                Admissibility::Admissible => {
                    Report::ok("admissible\n".into(), json!({ "admissible": true }))
                }
                Admissibility::Violation { position } => Report {
                    code: EXIT_NEGATIVE,
                    text: format!("not admissible: position {position}\n"),
                    json: json!({ "admissible": false, "position": position }),
                },
            })
        }
        Command::Value { s } => {
            let w = word_arg(s)?;
            let v = value_of(&base, &w)?;
            Ok(Report::ok(
                format!("{v} ~ {}\n", v.to_f64()),
                json!({ "coordinates": coords_json(&v), "approx": v.to_f64() }),
            ))
        }
    }
}

fn expand(base: &AlternateBase, value: &str, fuel: usize) -> Result<Report, Failure> {
    let field = base
        .field()
        .ok_or_else(|| Failure::from(ExpansionError::SymbolicModeUnsupported))?;
    let inner = value.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(inner);
    let parts: Vec<BigRational> = inner
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<_, _>>()
        .map_err(Failure::input)?;
    let x = if parts.len() == 1 {
        FieldElement::from_rational(field, parts[0].clone())
    } else {
        FieldElement::new(field, parts).map_err(|e| Failure::input(e.to_string()))?
    };
    let e = greedy_expand(base, &x, fuel)?;
    expansion_report(&e, json!({ "value": coords_json(&x) }))
}

fn expansion_report(e: &Expansion, mut json: Value) -> Result<Report, Failure> {
    let obj = json.as_object_mut().unwrap();
    match e {
        Expansion::Truncated { prefix, .. } => {
            let shown = FiniteDigitString::new(prefix.clone());
            Err(Failure {
                code: EXIT_FUEL,
                message: format!("expansion not resolved within the fuel limit; prefix {shown}"),
                detail: Some(json!({ "prefix": prefix })),
            })
        }
        _ => {
            let w = e.word().unwrap();
            obj.insert("expansion".into(), json!(w.to_string()));
            obj.insert("finite".into(), json!(w.is_finite()));
            Ok(Report::ok(format!("{w}\n"), json))
        }
    }
}

fn result_report(result: &FiniteDigitString, trace: &AdditionTrace, full: bool) -> Report {
    let mut text = format!("{result}\n");
    for (n, st) in trace.steps.iter().enumerate() {
        if full {
            let weights = match (st.weight_before, st.weight_after) {
                (Some(a), Some(b)) => format!(" weight {a} -> {b}"),
                _ => String::new(),
            };
            writeln!(
                text,
                "{} i={} {} {} -> {}{weights}",
                n + 1,
                st.index,
                st.witness.rule,
                st.before,
                st.after
            )
            .unwrap();
        }
    }
    if !full && !trace.steps.is_empty() {
        let ids: Vec<String> = trace
            .steps
            .iter()
            .map(|s| s.witness.rule.to_string())
            .collect();
        writeln!(text, "rules: {}", ids.join(" ")).unwrap();
    }
    Report::ok(
        text,
        json!({ "result": result.to_string(), "trace": trace_json(trace) }),
    )
}

fn trace_json(trace: &AdditionTrace) -> Value {
    Value::Array(
        trace
            .steps
            .iter()
            .map(|st| {
                json!({
                    "index": st.index,
                    "rule": st.witness.rule.to_string(),
                    "before": st.before.to_string(),
                    "after": st.after.to_string(),
                    "j": st.witness.j,
                    "x": st.witness.x.to_string(),
                    "y": st.witness.y.to_string(),
                    "weight_before": st.weight_before,
                    "weight_after": st.weight_after,
                })
            })
            .collect(),
    )
}

fn rational_json(q: &BigRational) -> Value {
    json!(if q.is_integer() {
        q.numer().to_string()
    } else {
        q.to_string()
    })
}

fn coords_json(x: &FieldElement) -> Value {
    Value::Array(x.coords().iter().map(rational_json).collect())
}

fn weights(base: &AlternateBase, fuel: usize) -> Result<Report, Failure> {
    let sys = RewriteSystem::new(base, fuel)?;
    let Some(w) = sys.weight() else {
        return Err(RewriteError::NoWeightFound {
            reason: sys.weight_error().unwrap_or_default().to_string(),
        }
        .into());
    };
    let mut text = format!("u = {:?}\n", w.weight.u);
    let mut json = json!({ "u": w.weight.u });
    if let Some(c) = &w.construction {
        writeln!(text, "column sums = {:?}", c.column_sums).unwrap();
        writeln!(text, "K = {:?}", c.k).unwrap();
        writeln!(text, "R = {:?}", c.r).unwrap();
        writeln!(text, "M = {:?}", c.m).unwrap();
        writeln!(text, "kappa = {}", c.kappa).unwrap();
        writeln!(text, "K u = {:?}", c.ku).unwrap();
        json.as_object_mut().unwrap().insert(
            "construction".into(),
            json!({
                "column_sums": c.column_sums,
                "K": c.k,
                "R": c.r,
                "M": c.m,
                "kappa": c.kappa,
                "Ku": c.ku,
            }),
        );
    }
    Ok(Report::ok(text, json))
}

fn classify(base: &AlternateBase, fuel: usize) -> Result<Report, Failure> {
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    let mut code = EXIT_OK;
    if base.is_explicit() {
        let precision = BigRational::new(BigInt::from(1), BigInt::from(1u64 << 32));
        let r = necessary_conditions(base, &precision, fuel)?;
        if matches!(
            r.overall,
            crate::classify::NecessaryVerdict::ObstructionFound(_)
        ) {
            code = EXIT_NEGATIVE;
        }
        necessary_text(&r, &mut text);
        json.insert("necessary".into(), necessary_json(&r));
    }
    let s = sufficient_report(base, fuel);
    sufficient_text(&s, &mut text);
    json.insert("sufficient".into(), sufficient_json(&s));
    Ok(Report {
        code,
        text,
        json: Value::Object(json),
    })
}

fn embedded_f64(v: &EmbeddedValue) -> (f64, f64) {
    v.enclosure().to_f64()
}

fn necessary_text(r: &NecessaryReport, text: &mut String) {
    writeln!(text, "delta minimal polynomial: {}", r.delta_minpoly).unwrap();
    writeln!(text, "delta class: {}", r.delta_class).unwrap();
    writeln!(
        text,
        "betas in Q(delta): {}",
        if r.betas_in_q_delta { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(text, "parry class: {}", r.parry_class).unwrap();
    for (n, v) in r.embedding_vectors.iter().enumerate() {
        let (cr, ci) = v.conjugate.to_f64();
        let images: Vec<String> = v
            .images
            .iter()
            .map(|e| match e {
                EmbeddedValue::Real { sign, .. } => {
                    let s = match sign {
                        std::cmp::Ordering::Less => "-",
                        std::cmp::Ordering::Equal => "0",
                        std::cmp::Ordering::Greater => "+",
                    };
                    format!("{:.6} ({s})", embedded_f64(e).0)
                }
                EmbeddedValue::NonReal { .. } => {
                    let (re, im) = embedded_f64(e);
                    format!("{re:.6}{im:+.6}i")
                }
            })
            .collect();
        writeln!(
            text,
            "embedding {}: delta -> {cr:.6}{}, betas -> ({}), {}",
            n + 1,
            if ci == 0.0 {
                String::new()
            } else {
                format!("{ci:+.6}i")
            },
            images.join(", "),
            if v.positive {
                "positive"
            } else {
                "not positive"
            }
        )
        .unwrap();
    }
    for note in &r.notes {
        writeln!(text, "note: {note}").unwrap();
    }
    writeln!(text, "necessary: {}", r.overall).unwrap();
}

fn necessary_json(r: &NecessaryReport) -> Value {
    let vectors: Vec<Value> = r
        .embedding_vectors
        .iter()
        .map(|v| {
            let images: Vec<Value> = v
                .images
                .iter()
                .map(|e| {
                    let (re, im) = embedded_f64(e);
                    match e {
                        EmbeddedValue::Real { sign, .. } => {
                            json!({ "real": true, "approx": re, "sign": *sign as i8 })
                        }
                        EmbeddedValue::NonReal { .. } => {
                            json!({ "real": false, "approx": [re, im] })
                        }
                    }
                })
                .collect();
            json!({ "conjugate": v.conjugate.to_f64(), "images": images, "positive": v.positive })
        })
        .collect();
    let coords: Vec<Value> = r
        .beta_coordinates
        .iter()
        .map(|c| match c {
            Some(c) => Value::Array(c.iter().map(rational_json).collect()),
            None => Value::Null,
        })
        .collect();
    json!({
        "delta_minpoly": r.delta_minpoly.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "delta_class": r.delta_class.to_string(),
        "betas_in_q_delta": r.betas_in_q_delta,
        "beta_coordinates": coords,
        "parry_class": r.parry_class.to_string(),
        "embedding_vectors": vectors,
        "notes": r.notes,
        "overall": r.overall.to_string(),
    })
}

fn sufficient_text(s: &SufficientReport, text: &mut String) {
    let gfs = match s.gfs {
        None => "unknown".to_string(),
        Some(GfsResult::Holds) => "holds".to_string(),
        Some(GfsResult::Violated { shift, position }) => {
            format!("violated at shift {shift}, position {position}")
        }
    };
    writeln!(text, "gfs: {gfs}").unwrap();
    if s.gfs.is_none() {
        writeln!(text, "parry class: {}", s.parry_class).unwrap();
    }
    match &s.weight {
        Ok(w) => writeln!(text, "weight: {:?}", w.weight.u).unwrap(),
        Err(reason) => writeln!(text, "weight: none ({reason})").unwrap(),
    }
    writeln!(text, "sufficient: {}", s.verdict).unwrap();
}

fn sufficient_json(s: &SufficientReport) -> Value {
    let gfs = match s.gfs {
        None => Value::Null,
        Some(GfsResult::Holds) => json!({ "holds": true }),
        Some(GfsResult::Violated { shift, position }) => {
            json!({ "holds": false, "shift": shift, "position": position })
        }
    };
    let weight = match &s.weight {
        Ok(w) => json!({ "u": w.weight.u }),
        Err(reason) => json!({ "error": reason }),
    };
    json!({
        "gfs": gfs,
        "parry_class": s.parry_class.to_string(),
        "weight": weight,
        "verdict": s.verdict.to_string(),
    })
}
