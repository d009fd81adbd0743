//! Cross-checks behind `rmcodes verify`: the two constructions of each family
//! must span the same space and the closed-form `k`/`d` must match rank and
//! brute-force distance.

use anyhow::{bail, Result};

use rmcodes::codes::{self, LinearCode};
use rmcodes::oracle;
use rmcodes::{AlgebraContext, AlgebraElement, Fe, WeightProfile};

use crate::{CodeArgs, CodeSpec, Family, OptionalCodeArgs, Report};

/// Distances are brute-forced only when `p^k <= 2^16`.
pub const VERIFY_BRUTEFORCE_LOG2: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    /// `[n,k,d]` of the single instance, when one was requested.
    pub code_type: Option<String>,
}

impl Outcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn report(&self) -> Report {
        let mut rep = Report::new();
        if let Some(t) = &self.code_type {
            rep.push("type", t.as_str());
        }
        let failed = self.failures().count();
        rep.push("checks", self.checks.len());
        rep.push("passed", self.checks.len() - failed);
        rep.push("failed", failed);
        for c in self.failures() {
            rep.push(
                "failure",
                format!("{} {}: {}", c.name, c.instance, c.detail),
            );
        }
        rep.push("result", if failed == 0 { "pass" } else { "fail" });
        rep
    }
}

struct Runner {
    out: Outcome,
    /// Corrupt the next Jennings-side code handed to `same_code`.
    corrupt_next: bool,
}

impl Runner {
    fn record(&mut self, name: &'static str, instance: &str, passed: bool, detail: String) {
        self.out.checks.push(Check {
            name,
            instance: instance.to_string(),
            passed,
            detail,
        });
    }

    fn maybe_corrupt(&mut self, code: LinearCode) -> Result<LinearCode> {
        if !self.corrupt_next {
            return Ok(code);
        }
        self.corrupt_next = false;
        corrupt(&code)
    }

    fn same_code(
        &mut self,
        name: &'static str,
        instance: &str,
        a: LinearCode,
        b: &LinearCode,
    ) -> Result<()> {
        let a = self.maybe_corrupt(a)?;
        let eq = oracle::same_code(&a, b)?;
        let detail = if eq {
            String::new()
        } else {
            format!(
                "row spaces differ (dimensions {} and {})",
                a.dimension(),
                b.dimension()
            )
        };
        self.record(name, instance, eq, detail);
        Ok(())
    }

    fn dimension(&mut self, instance: &str, formula: u64, code: &LinearCode) {
        let rank = code.dimension() as u64;
        self.record(
            "dimension",
            instance,
            formula == rank,
            format!("formula {formula}, rank {rank}"),
        );
    }

    /// Returns the brute-force distance when it was computed.
    fn distance(&mut self, instance: &str, formula: u64, code: &LinearCode) -> Result<Option<u64>> {
        let ctx = code.ctx();
        if !oracle::within_bound(ctx.p(), code.dimension(), VERIFY_BRUTEFORCE_LOG2) {
            return Ok(None);
        }
        let brute = oracle::min_distance_bounded(code, VERIFY_BRUTEFORCE_LOG2)?.map(|d| d as u64);
        self.record(
            "distance",
            instance,
            brute == Some(formula),
            format!("formula {formula}, brute force {brute:?}"),
        );
        Ok(brute)
    }
}

/// Adds the unit vector `e_0` to the first generator row.
fn corrupt(code: &LinearCode) -> Result<LinearCode> {
    let ctx = code.ctx();
    let mut rows = code.rows().to_vec();
    if let Some(first) = rows.first_mut() {
        let mut e0 = AlgebraElement::zero(ctx).into_coeffs();
        e0[0] = Fe::ONE;
        *first = first.add(&AlgebraElement::from_coeffs(ctx, e0)?)?;
    }
    Ok(LinearCode::from_spanning(
        ctx,
        &rows,
        code.construction(),
        code.declared_params(),
    )?)
}

/// Runs the single instance described by `args` if a family is given,
/// otherwise the default grid `p in {2, 3}, 1 <= m <= max_m`.
pub fn run(args: &OptionalCodeArgs, max_m: usize, corrupt: bool) -> Result<Outcome> {
    let mut r = Runner {
        out: Outcome::default(),
        corrupt_next: corrupt,
    };
    match args.family.or(args.family_pos) {
        Some(family) => {
            let (Some(p), Some(m)) = (args.p, args.m) else {
                bail!("a single-instance verify needs -p and -m");
            };
            let spec = CodeSpec::from_args(&CodeArgs {
                family_pos: None,
                family: Some(family),
                p,
                m,
                order: args.order.unwrap_or(1),
                weights: args.weights.clone(),
                construction: args.construction,
            })?;
            instance(&mut r, &spec)?;
        }
        None => {
            if args.p.is_some() || args.m.is_some() || args.order.is_some() {
                bail!("give a family to verify a single instance");
            }
            for p in [2u32, 3] {
                for m in 1..=max_m {
                    grid_point(&mut r, AlgebraContext::new(p, m)?)?;
                }
            }
        }
    }
    Ok(r.out)
}

fn instance(r: &mut Runner, spec: &CodeSpec) -> Result<()> {
    let ctx = spec.ctx;
    let (p, m) = (ctx.p() as u64, ctx.m());
    let name = format!("{} p={p} m={m} order={}", spec.family_name(), spec.order);
    let code = spec.build()?;
    let n = ctx.len();
    let (k, d) = match spec.family {
        Family::Grm => {
            r.same_code(
                "grm-constructions",
                &name,
                codes::grm_code(spec.order, ctx)?,
                &codes::grm_code_eval(spec.order, ctx)?,
            )?;
            r.same_code(
                "grm-radical-power",
                &name,
                codes::radical_power(m as u64 * (p - 1) - spec.order, ctx)?,
                &code,
            )?;
            let wp = codes::wrm_params(spec.order, &WeightProfile::unit(m), p, m)?;
            (wp.k, Some(wp.d))
        }
        Family::Wrm => {
            r.same_code(
                "wrm-constructions",
                &name,
                codes::wrm_code_jennings(spec.order, &spec.weights, ctx)?,
                &codes::wrm_code_eval(spec.order, &spec.weights, ctx)?,
            )?;
            let wp = codes::wrm_params(spec.order, &spec.weights, p, m)?;
            (wp.k, Some(wp.d))
        }
        Family::Hrm => {
            if p == 2 {
                r.same_code(
                    "hrm-constructions",
                    &name,
                    codes::hrm_code_jennings_binary(spec.order, ctx)?,
                    &codes::hrm_code_eval(spec.order, ctx)?,
                )?;
            }
            match codes::hrm_params(spec.order, m, p) {
                Ok(hp) => (hp.k, Some(hp.delta)),
                Err(_) => (code.dimension() as u64, None),
            }
        }
    };
    // only still pending when no construction comparison ran
    let checked = r.maybe_corrupt(code)?;
    r.dimension(&name, k, &checked);
    let brute = match d {
        Some(d) => r.distance(&name, d, &checked)?,
        None => None,
    };
    let shown = d
        .or(brute)
        .map_or_else(|| "?".to_string(), |d| d.to_string());
    r.out.code_type = Some(format!("[{n},{k},{shown}]"));
    Ok(())
}

/// Non-decreasing sequences of length `m` over `1..=max_w`.
pub fn ascending_profiles(m: usize, max_w: u32) -> Vec<WeightProfile> {
    fn go(m: usize, lo: u32, max_w: u32, cur: &mut Vec<u32>, out: &mut Vec<WeightProfile>) {
        if cur.len() == m {
            out.push(WeightProfile::new(cur.clone()).expect("ascending"));
            return;
        }
        for w in lo..=max_w {
            cur.push(w);
            go(m, w, max_w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 1, max_w, &mut Vec::new(), &mut out);
    out
}

fn grid_point(r: &mut Runner, ctx: AlgebraContext) -> Result<()> {
    let (p, m) = (ctx.p() as u64, ctx.m());
    for w in ascending_profiles(m, 3) {
        for omega in 0..=w.max_order(p) {
            let name = format!("wrm p={p} m={m} w={w} order={omega}");
            let jen = codes::wrm_code_jennings(omega, &w, ctx)?;
            let wp = codes::wrm_params(omega, &w, p, m)?;
            r.dimension(&name, wp.k, &jen);
            r.distance(&name, wp.d, &jen)?;
            r.same_code(
                "wrm-constructions",
                &name,
                jen,
                &codes::wrm_code_eval(omega, &w, ctx)?,
            )?;
        }
    }
    let top = m as u64 * (p - 1);
    for nu in 0..=top {
        let name = format!("grm p={p} m={m} order={nu}");
        let grm = codes::grm_code(nu, ctx)?;
        r.same_code(
            "grm-constructions",
            &name,
            grm.clone(),
            &codes::grm_code_eval(nu, ctx)?,
        )?;
        r.same_code(
            "grm-radical-power",
            &name,
            codes::radical_power(top - nu, ctx)?,
            &grm,
        )?;
    }
    for d in 1..=top {
        let name = format!("hrm p={p} m={m} order={d}");
        let eval = codes::hrm_code_eval(d, ctx)?;
        if p == 2 {
            r.same_code(
                "hrm-constructions",
                &name,
                codes::hrm_code_jennings_binary(d, ctx)?,
                &eval,
            )?;
        }
        if let Ok(hp) = codes::hrm_params(d, m, p) {
            r.dimension(&name, hp.k, &eval);
            r.distance(&name, hp.delta, &eval)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_are_counted_by_stars_and_bars() {
        assert_eq!(ascending_profiles(1, 3).len(), 3);
        assert_eq!(ascending_profiles(2, 3).len(), 6);
        assert_eq!(ascending_profiles(3, 3).len(), 10);
    }

    #[test]
    fn corruption_changes_a_proper_code() {
        let ctx = AlgebraContext::new(2, 3).unwrap();
        let c = codes::grm_code(1, ctx).unwrap();
        assert!(!oracle::same_code(&corrupt(&c).unwrap(), &c).unwrap());
    }

    #[test]
    fn small_grid_passes() {
        let args = OptionalCodeArgs {
            family_pos: None,
            family: None,
            p: None,
            m: None,
            order: None,
            weights: None,
            construction: None,
        };
        let out = run(&args, 2, false).unwrap();
        assert!(out.all_passed(), "{:?}", out.failures().collect::<Vec<_>>());
        let bad = run(&args, 2, true).unwrap();
        assert_eq!(bad.failures().count(), 1);
    }
}
