use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, ensure, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use rmcodes::codes::{self, parse_vector, LinearCode};
use rmcodes::decoder::{self, DecodeResult};
use rmcodes::oracle;
use rmcodes::{AlgebraContext, AlgebraElement, DecodeStatus, Fe, ReducedPolynomial};

use crate::verify;
use crate::{
    data_lines, parse_symbols, Cli, CodeSpec, Command, ConstructionArg, Family, Report, EXIT_OK,
    EXIT_UNCORRECTABLE, EXIT_VERIFY_FAILED, PARAMS_BRUTEFORCE_LOG2,
};

/// Runs one parsed command. Errors are usage or parameter errors (exit 1); other
/// outcomes are reported through the returned exit code.
pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Params { code, json } => {
            let spec = CodeSpec::from_args(&code)?;
            stdout.write_all(params(&spec)?.render(json).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Genmat { code, out } => {
            let spec = CodeSpec::from_args(&code)?;
            let text = spec.build()?.to_text();
            emit(&out, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Encode {
            code,
            message,
            input,
            out,
        } => {
            let spec = CodeSpec::from_args(&code)?;
            let code = spec.build()?;
            let text = match message {
                Some(m) => m,
                None => read_input(&input, stdin)?,
            };
            let mut buf = String::new();
            for line in data_lines(&text) {
                buf.push_str(&encode_line(&code, line)?.to_string());
                buf.push('\n');
            }
            emit(&out, stdout, &buf)?;
            Ok(EXIT_OK)
        }
        Command::Decode {
            code,
            vector,
            input,
            out,
            json,
        } => {
            let spec = CodeSpec::from_args(&code)?;
            let d = binary_hrm_degree(&spec)?;
            let text = match vector {
                Some(v) => v,
                None => read_input(&input, stdin)?,
            };
            let mut reports = Vec::new();
            let mut uncorrectable = false;
            for line in data_lines(&text) {
                let v = parse_received(spec.ctx, line)?;
                let r = decoder::decode(&v, d, spec.ctx.m())?;
                uncorrectable |= r.status == DecodeStatus::DetectedUncorrectable;
                reports.push(decode_report(&spec, d, &r));
            }
            ensure!(!reports.is_empty(), "no received vectors given");
            emit(&out, stdout, &render_many(&reports, json))?;
            Ok(if uncorrectable {
                EXIT_UNCORRECTABLE
            } else {
                EXIT_OK
            })
        }
        Command::Simulate {
            code,
            crossover,
            trials,
            seed,
            json,
        } => {
            let spec = CodeSpec::from_args(&code)?;
            let report = simulate(&spec, crossover, trials, seed)?;
            stdout.write_all(report.render(json).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            code,
            max_m,
            corrupt,
            json,
        } => {
            let outcome = verify::run(&code, max_m, corrupt)?;
            stdout.write_all(outcome.report().render(json).as_bytes())?;
            Ok(if outcome.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Interpolate { p, m, input } => {
            let ctx = AlgebraContext::new(p, m)?;
            let text = read_input(&input, stdin)?;
            for line in data_lines(&text) {
                let v = parse_received(ctx, line)?;
                writeln!(stdout, "{}", ReducedPolynomial::psi_inverse(&v))?;
            }
            Ok(EXIT_OK)
        }
        Command::Evaluate { p, m, poly } => {
            let ctx = AlgebraContext::new(p, m)?;
            let f = ReducedPolynomial::parse(ctx, &poly)?;
            writeln!(stdout, "{}", f.phi())?;
            Ok(EXIT_OK)
        }
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    match path {
        Some(p) => {
            s = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        None => {
            stdin.read_to_string(&mut s).context("reading stdin")?;
        }
    }
    Ok(s)
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => stdout.write_all(text.as_bytes()).map_err(Into::into),
    }
}

fn render_many(reports: &[Report], json: bool) -> String {
    if json && reports.len() > 1 {
        let all: Vec<Value> = reports.iter().map(Report::to_json).collect();
        let mut s = serde_json::to_string_pretty(&all).expect("json");
        s.push('\n');
        s
    } else {
        reports
            .iter()
            .map(|r| r.render(json))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Vector lines accept spaces or commas between symbols.
fn parse_received(ctx: AlgebraContext, line: &str) -> Result<AlgebraElement> {
    Ok(parse_vector(ctx, &line.replace(',', " "))?)
}

fn encode_line(code: &LinearCode, line: &str) -> Result<AlgebraElement> {
    let field = code.ctx().field();
    let msg = parse_symbols(line)?
        .into_iter()
        .map(|x| field.elem(x))
        .collect::<rmcodes::Result<Vec<Fe>>>()?;
    Ok(code.encode(&msg)?)
}

fn binary_hrm_degree(spec: &CodeSpec) -> Result<usize> {
    let m = spec.ctx.m();
    if spec.family != Family::Hrm || spec.ctx.p() != 2 {
        bail!("decoding is only available for hrm codes with p = 2");
    }
    if spec.order < 1 || spec.order as usize >= m {
        bail!(
            "decoding needs 1 <= order <= m - 1 (order {}, m {m})",
            spec.order
        );
    }
    Ok(spec.order as usize)
}

fn bits(v: &[Fe]) -> String {
    v.iter()
        .map(|x| x.value().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn decode_report(spec: &CodeSpec, d: usize, r: &DecodeResult) -> Report {
    let m = spec.ctx.m();
    let mut rep = Report::new();
    rep.push(
        "status",
        match r.status {
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::DetectedUncorrectable => "detected-uncorrectable",
        },
    );
    let mut tau = Map::new();
    for (eta, &bit) in &r.tau {
        tau.insert(eta.to_string(), json!(bit as u8));
    }
    rep.push("tau", Value::Object(tau));
    // the message is only meaningful against the Jennings generator rows
    if spec.construction == ConstructionArg::Jennings {
        rep.push("message", bits(&r.message(d, m)));
    }
    rep.push("codeword", bits(r.codeword.coeffs()));
    rep.push("residual", bits(r.residual.coeffs()));
    rep.push("residual_weight", r.residual.hamming_weight());
    rep.push("capability", decoder::capability(d, m).unwrap_or(0));
    rep
}

/// Closed-form parameters with a brute-force cross-check when `p^k` is small.
pub fn params(spec: &CodeSpec) -> Result<Report> {
    let ctx = spec.ctx;
    let (p, m) = (ctx.p() as u64, ctx.m());
    let code = spec.build()?;
    let rank = code.dimension() as u64;
    let (k_formula, d_formula) = match spec.family {
        Family::Grm => {
            let wp = codes::wrm_params(spec.order, &rmcodes::WeightProfile::unit(m), p, m)?;
            (wp.k, Some(wp.d))
        }
        Family::Wrm => {
            let wp = codes::wrm_params(spec.order, &spec.weights, p, m)?;
            (wp.k, Some(wp.d))
        }
        Family::Hrm => match codes::hrm_params(spec.order, m, p) {
            Ok(hp) => (hp.k, Some(hp.delta)),
            // the top degree has no closed form; fall back to the rank
            Err(_) => (rank, None),
        },
    };
    let d_brute = if oracle::within_bound(ctx.p(), code.dimension(), PARAMS_BRUTEFORCE_LOG2) {
        oracle::min_distance_bounded(&code, PARAMS_BRUTEFORCE_LOG2)?.map(|d| d as u64)
    } else {
        None
    };

    let mut rep = Report::new();
    rep.push("family", spec.family_name());
    rep.push("construction", spec.construction_name());
    rep.push("p", p);
    rep.push("m", m);
    rep.push("order", spec.order);
    if spec.family == Family::Wrm {
        rep.push("weights", spec.weights.to_string());
    }
    rep.push("n", ctx.len());
    rep.push("k", k_formula);
    if let Some(d) = d_formula {
        rep.push("d_formula", d);
    }
    if let Some(d) = d_brute {
        rep.push("d_bruteforce", d);
    }
    let d_shown = d_formula.or(d_brute);
    rep.push(
        "type",
        match d_shown {
            Some(d) => format!("[{},{},{}]", ctx.len(), k_formula, d),
            None => format!("[{},{},?]", ctx.len(), k_formula),
        },
    );
    let mut warnings = Vec::new();
    if k_formula != rank {
        warnings.push(format!("k formula {k_formula} != generator rank {rank}"));
    }
    if let (Some(f), Some(b)) = (d_formula, d_brute) {
        if f != b {
            warnings.push(format!("d formula {f} != brute-force distance {b}"));
        }
    }
    for w in warnings {
        rep.push("warning", w);
    }
    Ok(rep)
}

/// Binary symmetric channel simulation. Trial `t` draws from a ChaCha8
/// stream seeded with `seed` and stream index `t`, so trials are independent
/// of evaluation order.
pub fn simulate(spec: &CodeSpec, crossover: f64, trials: u64, seed: u64) -> Result<Report> {
    let d = binary_hrm_degree(spec)?;
    ensure!(
        (0.0..=1.0).contains(&crossover),
        "crossover must lie in [0, 1], got {crossover}"
    );
    ensure!(trials >= 1, "trials must be at least 1");
    let ctx = spec.ctx;
    let m = ctx.m();
    let code = spec.build()?;
    let k = code.dimension();
    let (mut corrected, mut miscorrected, mut detected) = (0u64, 0u64, 0u64);
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t);
        let msg: Vec<Fe> = (0..k)
            .map(|_| {
                if rng.random::<bool>() {
                    Fe::ONE
                } else {
                    Fe::ZERO
                }
            })
            .collect();
        let sent = code.encode(&msg)?;
        let flips: Vec<u32> = (0..ctx.len())
            .map(|_| rng.random_bool(crossover) as u32)
            .collect();
        let received = sent.add(&AlgebraElement::from_values(ctx, &flips)?)?;
        let r = decoder::decode(&received, d, m)?;
        match r.status {
            DecodeStatus::DetectedUncorrectable => detected += 1,
            DecodeStatus::Corrected if r.codeword == sent => corrected += 1,
            DecodeStatus::Corrected => miscorrected += 1,
        }
    }
    let mut rep = Report::new();
    rep.push("rng", "chacha8");
    rep.push("seed", seed);
    rep.push("family", spec.family_name());
    rep.push("p", 2);
    rep.push("m", m);
    rep.push("order", d);
    rep.push("crossover", crossover);
    rep.push("trials", trials);
    rep.push("corrected", corrected);
    rep.push("miscorrected", miscorrected);
    rep.push("detected", detected);
    rep.push(
        "block_error_rate",
        (miscorrected + detected) as f64 / trials as f64,
    );
    Ok(rep)
}
