//! Command-line front end. Every subcommand maps to one library operation
//! and produces a single [`Document`]; `--json` prints it as JSON, the
//! default prints a line-per-field rendering of the same document.
//!
//! Exit status: 0 on success, 2 on any error, 1 on a negative verdict
//! (`NOT_EQUAL`, `false`, no index found, failed checks) when `--strict`
//! is given.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::blowup::{self, CyclicQuotientType};
use crate::contraction::{contraction_profile, validate_profile};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::parse::{parse_monomial_ideal, parse_polynomial, parse_weight_entries};
use crate::symbolic::{as_primary, symbolic_equals_ordinary, symbolic_power};
use crate::weighted::{
    find_normality_index, power_equality, sigma_wt, weighted_ideal, Verdict, Weight,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "wblowup",
    version,
    about = "Weighted blow-ups and weighted monomial ideals"
)]
pub struct Cli {
    /// Print the structured output document as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Exit with status 1 on negative verdicts.
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    /// Nonzero part of the weight, `a1,a2,...,ak`.
    #[arg(long)]
    pub weight: String,

    /// Ambient dimension; defaults to the number of weight entries.
    #[arg(long = "n")]
    pub n: Option<usize>,
}

impl WeightArgs {
    fn resolve(&self) -> Result<Weight> {
        let nonzero = parse_weight_entries(&self.weight)?;
        let n = self.n.unwrap_or(nonzero.len());
        Weight::from_nonzero(&nonzero, n)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// σ-weight of a polynomial.
    Wt {
        #[command(flatten)]
        weight: WeightArgs,
        polynomial: String,
    },
    /// Minimal generators of I(σ, d).
    Ideal {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long = "d")]
        d: u64,
    },
    /// Power equality I(σ,L)^d = I(σ,dL), or the least such L up to bounds.
    Normality {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long = "L", required_unless_present = "l_max")]
        l: Option<u64>,
        #[arg(long = "d", requires = "l")]
        d: Option<u32>,
        #[arg(long = "d-max", requires = "l_max", conflicts_with = "l")]
        d_max: Option<u32>,
        #[arg(long = "L-max", requires = "d_max")]
        l_max: Option<u64>,
    },
    /// Symbolic power of an ideal with monomial prime radical.
    Symbolic {
        /// Generators, e.g. "(x1^2, x1*x2)"; requires --n.
        #[arg(long, conflicts_with_all = ["weight", "l"], requires = "n")]
        ideal: Option<String>,
        /// Use I(σ, L) as the ideal.
        #[arg(long, requires = "l")]
        weight: Option<String>,
        #[arg(long = "L")]
        l: Option<u64>,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long = "t")]
        t: u32,
    },
    /// Chart atlas and Cartier index of the weighted blow-up.
    Charts {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Terminality of 1/r(b1,...,bn), or of every chart of a blow-up.
    Terminal {
        #[arg(long, conflicts_with = "weight", requires = "twists")]
        order: Option<u64>,
        /// Comma-separated twists (may be negative).
        #[arg(long, allow_hyphen_values = true)]
        twists: Option<String>,
        #[arg(long, required_unless_present = "order")]
        weight: Option<String>,
        #[arg(long = "n")]
        n: Option<usize>,
    },
    /// Membership in the push-forward of O(-dE) via chart substitution.
    Push {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long = "d")]
        d: u64,
        polynomial: String,
    },
    /// Numerical profile of the contraction with data (n, r, b).
    Profile {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "r")]
        r: usize,
        #[arg(long = "b")]
        b: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Wt { .. } => "wt",
            Command::Ideal { .. } => "ideal",
            Command::Normality { .. } => "normality",
            Command::Symbolic { .. } => "symbolic",
            Command::Charts { .. } => "charts",
            Command::Terminal { .. } => "terminal",
            Command::Push { .. } => "push",
            Command::Profile { .. } => "profile",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorEntry {
    pub code: String,
    pub message: String,
}

/// The single output document of an invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub witnesses: Vec<String>,
    pub checks: Vec<CheckEntry>,
    pub error: Option<ErrorEntry>,
}

impl Document {
    fn new(command: &str) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: Value::Null,
            result: Value::Null,
            witnesses: Vec::new(),
            checks: Vec::new(),
            error: None,
        }
    }

    pub fn error(command: &str, err: &Error) -> Self {
        let mut doc = Document::new(command);
        doc.error = Some(ErrorEntry {
            code: err.code().to_string(),
            message: err.to_string(),
        });
        doc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Human-readable rendering of the same fields.
    pub fn render(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(err) = &self.error {
            out.push_str(&format!("error: {} ({})\n", err.message, err.code));
            return out;
        }
        if let Value::Object(map) = &self.inputs {
            for (k, v) in map {
                out.push_str(&format!("input {k}: {}\n", plain(v)));
            }
        }
        match &self.result {
            Value::Object(map) => {
                for (k, v) in map {
                    match v {
                        Value::Array(items) if items.iter().any(Value::is_object) => {
                            out.push_str(&format!("{k}:\n"));
                            for item in items {
                                out.push_str(&format!("  {}\n", plain(item)));
                            }
                        }
                        v => out.push_str(&format!("{k}: {}\n", plain(v))),
                    }
                }
            }
            v => out.push_str(&format!("result: {}\n", plain(v))),
        }
        if !self.witnesses.is_empty() {
            out.push_str(&format!("witnesses: {}\n", self.witnesses.join(", ")));
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("check {}: {mark} ({})\n", c.name, c.detail));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(", "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Array(_) => format!("{k}=[{}]", plain(v)),
                _ => format!("{k}={}", plain(v)),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// Result of running a command: the document and whether the verdict was
/// positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Document,
    pub positive: bool,
}

impl Outcome {
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.document.error.is_some() {
            2
        } else if strict && !self.positive {
            1
        } else {
            0
        }
    }
}

fn generators(i: &MonomialIdeal) -> Value {
    Value::Array(
        i.generators()
            .iter()
            .map(|g| json!(g.to_string()))
            .collect(),
    )
}

fn verdict_str(v: &Verdict) -> &'static str {
    if v.is_equal() {
        "EQUAL"
    } else {
        "NOT_EQUAL"
    }
}

fn witness_strings(v: &Verdict) -> Vec<String> {
    v.witnesses().iter().map(|m| m.to_string()).collect()
}

pub fn run(command: &Command) -> Outcome {
    let name = command.name();
    match execute(command) {
        Ok((document, positive)) => Outcome { document, positive },
        Err(err) => Outcome {
            document: Document::error(name, &err),
            positive: false,
        },
    }
}

fn execute(command: &Command) -> Result<(Document, bool)> {
    let mut doc = Document::new(command.name());
    let positive = match command {
        Command::Wt { weight, polynomial } => {
            let w = weight.resolve()?;
            let f = parse_polynomial(polynomial, w.n())?;
            let value = sigma_wt(&w, &f)?;
            doc.inputs = json!({ "weight": w.entries(), "n": w.n(), "polynomial": f.to_string() });
            doc.result = json!(value);
            true
        }
        Command::Ideal { weight, d } => {
            let w = weight.resolve()?;
            let ideal = weighted_ideal(&w, *d);
            doc.inputs = json!({ "weight": w.entries(), "n": w.n(), "d": d });
            doc.result = json!({ "generators": generators(&ideal) });
            true
        }
        Command::Normality {
            weight,
            l,
            d,
            d_max,
            l_max,
        } => {
            let w = weight.resolve()?;
            match (l, d_max, l_max) {
                (Some(l), _, _) => {
                    let d = d.unwrap_or(2);
                    let v = power_equality(&w, *l, d)?;
                    doc.inputs = json!({ "weight": w.entries(), "n": w.n(), "L": l, "d": d });
                    doc.result = json!(verdict_str(&v));
                    doc.witnesses = witness_strings(&v);
                    v.is_equal()
                }
                (None, Some(d_max), Some(l_max)) => {
                    let found = find_normality_index(&w, *d_max, *l_max)?;
                    doc.inputs = json!({
                        "weight": w.entries(), "n": w.n(), "d_max": d_max, "L_max": l_max
                    });
                    doc.result = json!({ "normality_index": found });
                    found.is_some()
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "give --L (and --d) or --d-max with --L-max".to_string(),
                    ))
                }
            }
        }
        Command::Symbolic {
            ideal,
            weight,
            l,
            n,
            t,
        } => {
            let (base, inputs) = match (ideal, weight, l) {
                (Some(text), _, _) => {
                    let n =
                        n.ok_or_else(|| Error::InvalidArgument("--n is required".to_string()))?;
                    let i = parse_monomial_ideal(text, n)?;
                    let inputs = json!({ "ideal": i.to_string(), "n": n, "t": t });
                    (i, inputs)
                }
                (None, Some(wtext), Some(l)) => {
                    let w = WeightArgs {
                        weight: wtext.clone(),
                        n: *n,
                    }
                    .resolve()?;
                    let inputs = json!({ "weight": w.entries(), "n": w.n(), "L": l, "t": t });
                    (weighted_ideal(&w, *l), inputs)
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "give --ideal with --n, or --weight with --L".to_string(),
                    ))
                }
            };
            let p = as_primary(&base)?;
            let symbolic = symbolic_power(&p, *t)?;
            let v = symbolic_equals_ordinary(&p, *t)?;
            doc.inputs = inputs;
            doc.result = json!({
                "verdict": verdict_str(&v),
                "radical_vars": p.radical_vars(),
                "symbolic_power": generators(&symbolic),
                "ordinary_power": generators(&base.power(*t)),
            });
            doc.witnesses = witness_strings(&v);
            v.is_equal()
        }
        Command::Charts { weight } => {
            let w = weight.resolve()?;
            let atlas = blowup::charts(&w);
            let charts: Vec<Value> = atlas
                .charts()
                .iter()
                .map(|c| {
                    json!({
                        "index": c.index(),
                        "quotient": c.quotient().to_string(),
                        "order": c.quotient().order(),
                        "twists": c.quotient().twists(),
                        "chart_map": c.chart_map().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "exceptional": format!("x{}", c.exceptional_local_eq()),
                    })
                })
                .collect();
            doc.inputs = json!({ "weight": w.entries(), "n": w.n() });
            doc.result = json!({ "cartier_index": atlas.cartier_index(), "charts": charts });
            true
        }
        Command::Terminal {
            order,
            twists,
            weight,
            n,
        } => match (order, twists, weight) {
            (Some(order), Some(twists), _) => {
                let b = twists
                    .split(',')
                    .map(|s| {
                        s.trim().parse::<i64>().map_err(|_| {
                            Error::InvalidArgument(format!("`{}` is not an integer", s.trim()))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let q = CyclicQuotientType::new(*order, &b)?;
                let terminal = blowup::is_terminal(&q)?;
                let ages = if q.is_smooth() {
                    Vec::new()
                } else {
                    blowup::reid_tai_ages(&q)?
                        .iter()
                        .map(|a| a.to_string())
                        .collect()
                };
                doc.inputs = json!({ "quotient": q.to_string() });
                doc.result = json!({ "terminal": terminal, "ages": ages });
                terminal
            }
            (None, _, Some(wtext)) => {
                let w = WeightArgs {
                    weight: wtext.clone(),
                    n: *n,
                }
                .resolve()?;
                let atlas = blowup::charts(&w);
                let mut charts = Vec::new();
                for c in atlas.charts() {
                    let q = c.quotient();
                    charts.push(json!({
                        "index": c.index(),
                        "quotient": q.to_string(),
                        "terminal": blowup::is_terminal(q)?,
                    }));
                }
                let terminal = blowup::is_terminal_blowup(&w)?;
                doc.inputs = json!({ "weight": w.entries(), "n": w.n() });
                doc.result = json!({ "terminal": terminal, "charts": charts });
                terminal
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "give --order with --twists, or --weight".to_string(),
                ))
            }
        },
        Command::Push {
            weight,
            d,
            polynomial,
        } => {
            let w = weight.resolve()?;
            let f = parse_polynomial(polynomial, w.n())?;
            let member = blowup::pushforward_membership(&w, *d, &f)?;
            doc.inputs = json!({
                "weight": w.entries(), "n": w.n(), "d": d, "polynomial": f.to_string()
            });
            doc.result = json!(member);
            member
        }
        Command::Profile { n, r, b } => {
            let p = contraction_profile(*n, *r, *b)?;
            let report = validate_profile(&p);
            doc.inputs = json!({ "n": n, "r": r, "b": b });
            doc.result = json!({
                "tau": p.tau.to_string(),
                "weight": p.weight.entries(),
                "center_codim": p.center_codim,
                "fiber_dim": p.fiber_dim,
                "discrepancy": p.discrepancy,
                "cartier_index": p.charts.cartier_index(),
                "charts": p.charts.charts().iter().map(|c| c.quotient().to_string()).collect::<Vec<_>>(),
                "terminal": p.terminal,
            });
            doc.checks = report
                .checks
                .iter()
                .map(|c| CheckEntry {
                    name: c.name.to_string(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect();
            report.all_passed()
        }
    };
    Ok((doc, positive))
}
