//! Command implementations behind the `rmcodes` binary. Each command writes
//! to the supplied sink and returns the process exit code.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use rmcodes::codes::{self, LinearCode};
use rmcodes::{AlgebraContext, WeightProfile};

pub mod commands;
pub mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNCORRECTABLE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Codeword sweeps in `params` stay below `p^k <= 2^20`.
pub const PARAMS_BRUTEFORCE_LOG2: u32 = 20;

#[derive(Debug, Parser)]
#[command(
    name = "rmcodes",
    version,
    about = "Reed-Muller codes in the modular algebra F_p[X]/(X^p - 1)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form parameters, checked against brute force when small enough.
    Params {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        json: bool,
    },
    /// Write the generator matrix.
    Genmat {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode messages (one per line with --in, or --message).
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message symbols, separated by spaces or commas.
        #[arg(long, allow_hyphen_values = true)]
        message: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode received words of a binary homogeneous code.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Received symbols; otherwise lines are read from --in or stdin.
        #[arg(long)]
        vector: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Binary symmetric channel simulation.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        crossover: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the construction and parameter cross-checks over a grid, or over a
    /// single instance when a family is given.
    Verify {
        #[command(flatten)]
        code: OptionalCodeArgs,
        /// Largest m in the default grid.
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        /// Flip one generator symbol before checking (harness self-test).
        #[arg(long, hide = true)]
        corrupt: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the reduced polynomial interpolating each vector.
    Interpolate {
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Print the evaluation vector of a polynomial such as `2*Y0^2*Y1 + 1`.
    Evaluate {
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Grm,
    Wrm,
    Hrm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Eval,
    Jennings,
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    /// Code family (may also be given as --family).
    #[arg(value_enum, conflicts_with = "family")]
    pub family_pos: Option<Family>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(short = 'p')]
    pub p: u32,
    #[arg(short = 'm')]
    pub m: usize,
    /// nu (grm), omega (wrm) or d (hrm).
    #[arg(long, default_value_t = 1)]
    pub order: u64,
    /// Ascending comma-separated weights (wrm only).
    #[arg(long)]
    pub weights: Option<String>,
    #[arg(long, value_enum)]
    pub construction: Option<ConstructionArg>,
}

#[derive(Debug, Clone, Args)]
pub struct OptionalCodeArgs {
    #[arg(value_enum, conflicts_with = "family")]
    pub family_pos: Option<Family>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(short = 'p')]
    pub p: Option<u32>,
    #[arg(short = 'm')]
    pub m: Option<usize>,
    #[arg(long)]
    pub order: Option<u64>,
    #[arg(long)]
    pub weights: Option<String>,
    #[arg(long, value_enum)]
    pub construction: Option<ConstructionArg>,
}

/// A fully validated code description.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub family: Family,
    pub ctx: AlgebraContext,
    pub order: u64,
    pub weights: WeightProfile,
    pub construction: ConstructionArg,
}

impl CodeSpec {
    pub fn from_args(a: &CodeArgs) -> Result<Self> {
        let family = a
            .family
            .or(a.family_pos)
            .context("a code family (grm, wrm or hrm) is required")?;
        let ctx = AlgebraContext::new(a.p, a.m)?;
        let weights = match (family, &a.weights) {
            (Family::Wrm, Some(w)) => w.parse::<WeightProfile>()?,
            (Family::Wrm, None) => bail!("--weights is required for wrm"),
            (_, Some(_)) => bail!("--weights only applies to wrm"),
            (_, None) => WeightProfile::unit(a.m),
        };
        if weights.len() != a.m {
            bail!("expected {} weights, got {}", a.m, weights.len());
        }
        let construction = match (family, a.construction) {
            (Family::Hrm, Some(ConstructionArg::Jennings)) if a.p != 2 => {
                bail!("the Jennings construction of hrm codes needs p = 2")
            }
            (_, Some(c)) => c,
            (Family::Hrm, None) if a.p != 2 => ConstructionArg::Eval,
            (_, None) => ConstructionArg::Jennings,
        };
        Ok(Self {
            family,
            ctx,
            order: a.order,
            weights,
            construction,
        })
    }

    pub fn build(&self) -> Result<LinearCode> {
        let (ctx, o) = (self.ctx, self.order);
        let code = match (self.family, self.construction) {
            (Family::Grm, ConstructionArg::Jennings) => codes::grm_code(o, ctx)?,
            (Family::Grm, ConstructionArg::Eval) => codes::grm_code_eval(o, ctx)?,
            (Family::Wrm, ConstructionArg::Jennings) => {
                codes::wrm_code_jennings(o, &self.weights, ctx)?
            }
            (Family::Wrm, ConstructionArg::Eval) => codes::wrm_code_eval(o, &self.weights, ctx)?,
            (Family::Hrm, ConstructionArg::Jennings) => codes::hrm_code_jennings_binary(o, ctx)?,
            (Family::Hrm, ConstructionArg::Eval) => codes::hrm_code_eval(o, ctx)?,
        };
        Ok(code)
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            Family::Grm => "grm",
            Family::Wrm => "wrm",
            Family::Hrm => "hrm",
        }
    }

    pub fn construction_name(&self) -> &'static str {
        match self.construction {
            ConstructionArg::Eval => "eval",
            ConstructionArg::Jennings => "jennings",
        }
    }
}

/// Ordered key/value report, rendered as `key: value` lines or JSON.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.entries {
            // repeated keys (warnings, failures) collect into an array
            if !self.repeated(k) {
                map.insert(k.clone(), v.clone());
            } else if let Some(Value::Array(a)) = map.get_mut(k) {
                a.push(v.clone());
            } else {
                map.insert(k.clone(), Value::Array(vec![v.clone()]));
            }
        }
        Value::Object(map)
    }

    fn repeated(&self, key: &str) -> bool {
        self.entries.iter().filter(|(k, _)| k == key).count() > 1
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
            s.push('\n');
            return s;
        }
        let mut s = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(s, "{k}: {}", text_value(v));
        }
        s
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(t) => t.clone(),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", text_value(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(a) => a.iter().map(text_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Parses a message or vector given as space- or comma-separated integers.
pub fn parse_symbols(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .with_context(|| format!("bad symbol {t:?}"))
        })
        .collect()
}

/// Non-empty, non-comment lines of a vector file.
pub fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}
