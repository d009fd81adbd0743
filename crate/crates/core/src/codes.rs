//! Generalized, weighted and homogeneous Reed-Muller codes as subspaces of
//! `A`, built two ways (evaluation of monomials, and Jennings basis elements),
//! together with their closed-form parameters.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{b_subset, jennings_element, AlgebraContext, AlgebraElement, SubsetMask};
use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::oracle::RowSpace;
use crate::poly::{
    homogeneous_exponents_unreduced, monomials_up_to_weighted_degree, Polynomial,
    ReducedPolynomial, WeightProfile,
};

/// Which construction produced a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Grm,
    Wrm,
    HrmBinary,
    HrmEval,
    RadicalPower,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Grm => "GRM",
            Construction::Wrm => "WRM",
            Construction::HrmBinary => "HRM-binary",
            Construction::HrmEval => "HRM-eval",
            Construction::RadicalPower => "radical-power",
        })
    }
}

/// `[n, k, d]`; `d` is absent when no closed form applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub d: Option<u64>,
}

/// A linear code given by a basis of generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    ctx: AlgebraContext,
    rows: Vec<AlgebraElement>,
    declared: Option<CodeParams>,
    construction: Construction,
}

impl LinearCode {
    /// Checks that `rows` live in `ctx` and are linearly independent.
    pub fn new(
        ctx: AlgebraContext,
        rows: Vec<AlgebraElement>,
        construction: Construction,
        declared: Option<CodeParams>,
    ) -> Result<Self> {
        if rows.iter().any(|r| r.ctx() != ctx) {
            return Err(Error::ContextMismatch);
        }
        let rank = RowSpace::from_elements(ctx.field(), &rows)?.rank();
        if rank != rows.len() {
            return Err(Error::RankDeficient {
                construction: construction_name(construction),
                rank,
                expected: rows.len(),
            });
        }
        Ok(Self {
            ctx,
            rows,
            declared,
            construction,
        })
    }

    /// Reduces a spanning set to its echelon basis.
    pub fn from_spanning(
        ctx: AlgebraContext,
        span: &[AlgebraElement],
        construction: Construction,
        declared: Option<CodeParams>,
    ) -> Result<Self> {
        let space = RowSpace::with_width(
            ctx.field(),
            ctx.len(),
            &span.iter().map(|e| e.coeffs().to_vec()).collect::<Vec<_>>(),
        )?;
        let rows = space
            .rows()
            .iter()
            .map(|r| AlgebraElement::from_coeffs_unchecked(ctx, r.clone()))
            .collect();
        Ok(Self {
            ctx,
            rows,
            declared,
            construction,
        })
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn rows(&self) -> &[AlgebraElement] {
        &self.rows
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn length(&self) -> usize {
        self.ctx.len()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn declared_params(&self) -> Option<CodeParams> {
        self.declared
    }

    pub fn row_space(&self) -> Result<RowSpace> {
        RowSpace::from_elements(self.ctx.field(), &self.rows)
    }

    /// `sum_j msg_j * row_j`.
    pub fn encode(&self, msg: &[Fe]) -> Result<AlgebraElement> {
        if msg.len() != self.rows.len() {
            return Err(Error::LengthMismatch {
                expected: self.rows.len(),
                got: msg.len(),
            });
        }
        let mut out = AlgebraElement::zero(self.ctx);
        for (&s, row) in msg.iter().zip(&self.rows) {
            self.ctx.field().check(s)?;
            out.add_assign_scaled(row, s);
        }
        Ok(out)
    }

    /// `k x p^m` generator matrix, rows in construction order.
    pub fn generator_matrix(&self) -> Vec<Vec<Fe>> {
        self.rows.iter().map(|r| r.coeffs().to_vec()).collect()
    }

    /// Plain-text generator matrix: a `p m k` header line, then `k` lines of
    /// `p^m` space-separated symbols.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.ctx.p(), self.ctx.m(), self.rows.len());
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Reads the [`to_text`](Self::to_text) format (the construction tag is
    /// supplied by the caller since the format does not carry it).
    pub fn from_text(text: &str, construction: Construction) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header {header:?}")))
            })
            .collect::<Result<_>>()?;
        let [p, m, k] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be `p m k`, got {header:?}"
            )));
        };
        let ctx = AlgebraContext::new(p as u32, m)?;
        let rows = lines
            .map(|l| parse_vector(ctx, l))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: rows.len(),
            });
        }
        Self::new(ctx, rows, construction, None)
    }
}

/// Parses one line of `p^m` space-separated residues.
pub fn parse_vector(ctx: AlgebraContext, line: &str) -> Result<AlgebraElement> {
    let values = line
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad symbol {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraElement::from_values(ctx, &values)
}

fn construction_name(c: Construction) -> &'static str {
    match c {
        Construction::Grm => "GRM",
        Construction::Wrm => "WRM",
        Construction::HrmBinary => "HRM-binary",
        Construction::HrmEval => "HRM-eval",
        Construction::RadicalPower => "radical-power",
    }
}

fn out_of_range(what: &'static str, value: u64, min: u64, max: u64) -> Error {
    Error::OutOfRange {
        what,
        value: value as i64,
        min: min as i64,
        max: max as i64,
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            let mut r = q;
            while r.is_multiple_of(d) {
                r /= d;
            }
            return r == 1;
        }
        d += 1;
    }
    true
}

fn check_q(q: u64) -> Result<()> {
    if is_prime_power(q) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("q = {q} is not a prime power")))
    }
}

/// Largest ordinary degree `sum e_k` of a reduced monomial (`e_k < q`) with
/// weighted degree at most `omega`. Greedy: saturate the cheapest variables
/// to `q - 1` in order, then put as much as fits on the next one. Every unit
/// of degree costs the weight of its variable, so filling cheapest first is
/// optimal.
pub fn nu_max(omega: u64, w: &WeightProfile, q: u64) -> Result<u64> {
    check_q(q)?;
    let max = w.max_order(q);
    if omega > max {
        return Err(out_of_range("weighted order", omega, 0, max));
    }
    let mut budget = omega;
    let mut degree = 0;
    for &wk in w.as_slice() {
        let wk = wk as u64;
        let take = (budget / wk).min(q - 1);
        degree += take;
        budget -= take * wk;
        if take < q - 1 {
            break;
        }
    }
    Ok(degree)
}

/// Parameters of `WRMC_omega(m, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrmParams {
    pub omega: u64,
    pub weights: WeightProfile,
    pub q: u64,
    pub m: usize,
    pub nu_max: u64,
    /// Euclidean split `nu_max = big_q (q - 1) + r`, `0 <= r < q - 1`.
    pub big_q: u64,
    pub r: u64,
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

fn count_bounded_weighted(weights: &[u32], q: u64, budget: u64) -> u64 {
    match weights.split_first() {
        None => 1,
        Some((&w, rest)) => (0..q)
            .take_while(|&e| e * w as u64 <= budget)
            .map(|e| count_bounded_weighted(rest, q, budget - e * w as u64))
            .sum(),
    }
}

/// `k` counts the exponent tuples within the weighted budget; `d` is
/// `q^{m - Q - 1} (q - R)` from the split of `nu_max`. At the top order the
/// code is the whole space and `d = 1`.
pub fn wrm_params(omega: u64, w: &WeightProfile, q: u64, m: usize) -> Result<WrmParams> {
    if w.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: w.len(),
        });
    }
    let nu = nu_max(omega, w, q)?;
    let (big_q, r) = (nu / (q - 1), nu % (q - 1));
    let n = q.pow(m as u32);
    let k = count_bounded_weighted(w.as_slice(), q, omega);
    let d = if omega == w.max_order(q) || big_q >= m as u64 {
        1
    } else {
        q.pow((m as u64 - big_q - 1) as u32) * (q - r)
    };
    Ok(WrmParams {
        omega,
        weights: w.clone(),
        q,
        m,
        nu_max: nu,
        big_q,
        r,
        n,
        k,
        d,
    })
}

fn check_wrm_order(omega: u64, w: &WeightProfile, ctx: AlgebraContext) -> Result<WrmParams> {
    wrm_params(omega, w, ctx.p() as u64, ctx.m())
}

fn declared(p: &WrmParams) -> Option<CodeParams> {
    Some(CodeParams {
        n: p.n,
        k: p.k,
        d: Some(p.d),
    })
}

/// Evaluation vectors of the reduced monomials of weighted degree `<= omega`.
pub fn wrm_code_eval(omega: u64, w: &WeightProfile, ctx: AlgebraContext) -> Result<LinearCode> {
    let params = check_wrm_order(omega, w, ctx)?;
    let rows = monomials_up_to_weighted_degree(omega, w, ctx)?
        .into_iter()
        .map(|e| Ok(ReducedPolynomial::monomial(ctx, e)?.phi()))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::new(ctx, rows, Construction::Wrm, declared(&params))
}

/// Jennings elements `B_i` with `Wwt_p(i) >= (p - 1) sum w - omega`.
pub fn wrm_code_jennings(omega: u64, w: &WeightProfile, ctx: AlgebraContext) -> Result<LinearCode> {
    let params = check_wrm_order(omega, w, ctx)?;
    let threshold = w.max_order(ctx.p() as u64) - omega;
    let mut rows = Vec::new();
    for i in ctx.tuples() {
        if i.weighted_p_weight(w)? >= threshold {
            rows.push(jennings_element(ctx, &i)?);
        }
    }
    LinearCode::new(ctx, rows, Construction::Wrm, declared(&params))
}

fn check_grm_order(nu: u64, ctx: AlgebraContext) -> Result<()> {
    let max = ctx.m() as u64 * (ctx.p() as u64 - 1);
    if nu > max {
        return Err(out_of_range("order", nu, 0, max));
    }
    Ok(())
}

/// `C_nu(m, p)` from its Jennings basis (unit weights).
pub fn grm_code(nu: u64, ctx: AlgebraContext) -> Result<LinearCode> {
    check_grm_order(nu, ctx)?;
    let code = wrm_code_jennings(nu, &WeightProfile::unit(ctx.m()), ctx)?;
    Ok(LinearCode {
        construction: Construction::Grm,
        ..code
    })
}

/// `C_nu(m, p)` as evaluations of all reduced polynomials of degree `<= nu`.
pub fn grm_code_eval(nu: u64, ctx: AlgebraContext) -> Result<LinearCode> {
    check_grm_order(nu, ctx)?;
    let code = wrm_code_eval(nu, &WeightProfile::unit(ctx.m()), ctx)?;
    Ok(LinearCode {
        construction: Construction::Grm,
        ..code
    })
}

/// `P^j`: span of the Jennings elements with `wt_p(i) >= j`.
pub fn radical_power(j: u64, ctx: AlgebraContext) -> Result<LinearCode> {
    let max = ctx.m() as u64 * (ctx.p() as u64 - 1);
    if j > max {
        return Err(out_of_range("radical exponent", j, 0, max));
    }
    let rows = ctx
        .tuples()
        .filter(|i| i.p_weight() as u64 >= j)
        .map(|i| jennings_element(ctx, &i))
        .collect::<Result<Vec<_>>>()?;
    let k = rows.len() as u64;
    LinearCode::new(
        ctx,
        rows,
        Construction::RadicalPower,
        Some(CodeParams {
            n: ctx.len() as u64,
            k,
            d: None,
        }),
    )
}

/// Parameters of `HRMC_d(m, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HrmParams {
    pub n: u64,
    pub k: u64,
    pub delta: u64,
    /// `d - 1 = r (q - 1) + s`, `0 <= s < q - 1`.
    pub r: u64,
    pub s: u64,
}

/// `C(n, k)` with the convention that negative arguments give 0.
fn binom(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// `k = sum_{t = d mod (q-1), 0 < t <= d} sum_j (-1)^j C(m, j) C(t - jq + m - 1, t - jq)`
/// and `delta = (q - 1)(q - s) q^{m - r - 2}` for `1 <= d <= (m - 1)(q - 1)`.
pub fn hrm_params(d: u64, m: usize, q: u64) -> Result<HrmParams> {
    check_q(q)?;
    let max = (m as u64).saturating_sub(1) * (q - 1);
    if d < 1 || d > max {
        return Err(out_of_range("degree", d, 1, max));
    }
    let (m_i, q_i) = (m as i64, q as i64);
    let mut k: i128 = 0;
    for t in (1..=d as i64).filter(|t| (t - d as i64).rem_euclid(q_i - 1) == 0) {
        for j in 0..=m_i {
            let u = t - j * q_i;
            let term = binom(m_i, j) * binom(u + m_i - 1, u);
            k += if j % 2 == 0 { term } else { -term };
        }
    }
    let (r, s) = ((d - 1) / (q - 1), (d - 1) % (q - 1));
    // r <= m - 2 in range, so the exponent is non-negative
    let delta = (q - 1) * (q - s) * q.pow((m as u64 - r - 2) as u32);
    Ok(HrmParams {
        n: q.pow(m as u32),
        k: k as u64,
        delta,
        r,
        s,
    })
}

fn hrm_declared(d: u64, ctx: AlgebraContext, k: u64) -> Option<CodeParams> {
    let n = ctx.len() as u64;
    Some(match hrm_params(d, ctx.m(), ctx.p() as u64) {
        Ok(hp) => CodeParams {
            n,
            k: hp.k,
            d: Some(hp.delta),
        },
        Err(_) => CodeParams { n, k, d: None },
    })
}

fn check_hrm_degree(d: u64, ctx: AlgebraContext) -> Result<()> {
    let max = ctx.m() as u64 * (ctx.p() as u64 - 1);
    if d < 1 || d > max {
        return Err(out_of_range("degree", d, 1, max));
    }
    Ok(())
}

/// `HRMC_d(m, p)`: evaluations of every homogeneous degree-`d` polynomial.
/// Each degree-`d` monomial (exponents unbounded) is reduced, the distinct
/// reduced monomials are evaluated, and the span is brought to echelon form.
pub fn hrm_code_eval(d: u64, ctx: AlgebraContext) -> Result<LinearCode> {
    check_hrm_degree(d, ctx)?;
    let mut reduced = BTreeSet::new();
    for e in homogeneous_exponents_unreduced(d as u32, ctx.m()) {
        let mut f = Polynomial::zero(ctx);
        f.add_term(e, Fe::ONE)?;
        reduced.insert(f.reduce().terms().next().expect("monomial").0.clone());
    }
    let span = reduced
        .into_iter()
        .map(|e| Ok(ReducedPolynomial::monomial(ctx, e)?.phi()))
        .collect::<Result<Vec<_>>>()?;
    let code = LinearCode::from_spanning(ctx, &span, Construction::HrmEval, None)?;
    let k = code.dimension() as u64;
    Ok(LinearCode {
        declared: hrm_declared(d, ctx, k),
        ..code
    })
}

/// Subsets `eta` with `m - d <= |eta| < m` indexing the rows of the binary
/// Jennings construction, ordered by ascending bitmask of `eta^c` (the
/// multiplier set the decoder uses). For `d = 1` row `l` is `b({l}^c) + 1`.
pub fn hrm_binary_subsets(d: usize, m: usize) -> Vec<SubsetMask> {
    let full = SubsetMask::full(m);
    let mut out: Vec<SubsetMask> = SubsetMask::all(m)
        .filter(|eta| eta.len() < m && eta.len() + d >= m)
        .collect();
    out.sort_by_key(|eta| eta.complement(m).bits());
    debug_assert!(out.iter().all(|&e| e != full));
    out
}

/// Binary `HRMC_d(m, 2)` from the elements `b(eta) + 1` with `m - d <= |eta| < m`.
pub fn hrm_code_jennings_binary(d: u64, ctx: AlgebraContext) -> Result<LinearCode> {
    if ctx.p() != 2 {
        return Err(Error::UnsupportedField(ctx.p()));
    }
    let m = ctx.m();
    if d < 1 || d > m as u64 {
        return Err(out_of_range("degree", d, 1, m as u64));
    }
    let one = AlgebraElement::all_one(ctx);
    let rows = hrm_binary_subsets(d as usize, m)
        .into_iter()
        .map(|eta| b_subset(ctx, eta)?.add(&one))
        .collect::<Result<Vec<_>>>()?;
    let k = rows.len() as u64;
    LinearCode::new(ctx, rows, Construction::HrmBinary, hrm_declared(d, ctx, k))
}
