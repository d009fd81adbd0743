//! Reduced multivariate polynomials over F_p, weighted degree, the evaluation
//! map and its inverse, and the interpolation polynomials `H_i` whose
//! evaluation vectors are the Jennings basis elements.
//!
//! Point ordering: the point at flat index `i` has coordinates
//! `index_to_exponents(i)`. With this ordering the evaluation map `phi` and the
//! isomorphism `P(m, p) -> A` coincide on coefficient vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraContext, AlgebraElement, ExponentTuple};
use crate::error::{Error, Result};
use crate::gf::{Fe, PrimeField};

/// Ascending positive weights `w_0 <= .. <= w_{m-1}` attached to the variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightProfile(Vec<u32>);

impl WeightProfile {
    /// Rejects (rather than sorts) non-ascending input: sorting would silently
    /// permute the variable/coordinate correspondence.
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) || weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeights(weights));
        }
        Ok(Self(weights))
    }

    /// All weights equal to one.
    pub fn unit(m: usize) -> Self {
        Self(vec![1; m])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).sum()
    }

    /// Largest meaningful weighted order `(q - 1) sum w_k`.
    pub fn max_order(&self, q: u64) -> u64 {
        (q - 1) * self.total()
    }
}

impl FromStr for WeightProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad weight {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }
}

impl fmt::Display for WeightProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Weighted degree; the zero polynomial has degree `MinusInfinity`, which
/// compares below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightedDegree {
    MinusInfinity,
    Finite(u64),
}

impl WeightedDegree {
    pub fn at_most(self, bound: u64) -> bool {
        self <= WeightedDegree::Finite(bound)
    }
}

/// A point of `F_p^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point(pub Vec<Fe>);

impl Point {
    /// The point sitting at flat index `i`.
    pub fn at_index(ctx: AlgebraContext, i: usize) -> Result<Self> {
        let e = ctx.index_to_exponents(i)?;
        Ok(Point(
            e.0.into_iter()
                .map(|d| ctx.field().reduce(d as i64))
                .collect(),
        ))
    }
}

/// A polynomial with arbitrary (unreduced) exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: AlgebraContext,
    terms: BTreeMap<Vec<u32>, Fe>,
}

impl Polynomial {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    /// Adds `coeff * Y^exps`, combining like terms.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Fe) -> Result<()> {
        if exps.len() != self.ctx.m() {
            return Err(Error::LengthMismatch {
                expected: self.ctx.m(),
                got: exps.len(),
            });
        }
        let f = self.ctx.field();
        f.check(coeff)?;
        let entry = self.terms.entry(exps).or_insert(Fe::ZERO);
        *entry = f.add(*entry, coeff);
        self.terms.retain(|_, c| !c.is_zero());
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Fe)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn evaluate(&self, point: &Point) -> Result<Fe> {
        check_point(self.ctx, point)?;
        let f = self.ctx.field();
        Ok(self.terms.iter().fold(Fe::ZERO, |acc, (e, &c)| {
            let t = e
                .iter()
                .zip(&point.0)
                .fold(c, |t, (&ek, &a)| f.mul(t, f.pow(a, ek as u64)));
            f.add(acc, t)
        }))
    }

    /// Reduced form modulo `(Y_k^p - Y_k)`: each exponent `e >= 1` becomes
    /// `((e - 1) mod (p - 1)) + 1`, so a positive exponent never drops to 0.
    pub fn reduce(&self) -> ReducedPolynomial {
        let q1 = self.ctx.p() as u32 - 1;
        let mut out = ReducedPolynomial::zero(self.ctx);
        for (e, &c) in &self.terms {
            let r = ExponentTuple(
                e.iter()
                    .map(|&ek| {
                        if ek == 0 {
                            0
                        } else {
                            ((ek - 1) % q1 + 1) as u8
                        }
                    })
                    .collect(),
            );
            out.add_term_unchecked(r, c);
        }
        out
    }

    pub fn parse(ctx: AlgebraContext, s: &str) -> Result<Self> {
        parse_polynomial(ctx, s)
    }
}

fn check_point(ctx: AlgebraContext, point: &Point) -> Result<()> {
    if point.0.len() != ctx.m() {
        return Err(Error::LengthMismatch {
            expected: ctx.m(),
            got: point.0.len(),
        });
    }
    for &a in &point.0 {
        ctx.field().check(a)?;
    }
    Ok(())
}

/// A polynomial with every exponent below `p`; only nonzero terms are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPolynomial {
    ctx: AlgebraContext,
    terms: BTreeMap<ExponentTuple, Fe>,
}

impl ReducedPolynomial {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: AlgebraContext, c: Fe) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term_unchecked(ExponentTuple::zeros(ctx.m()), c);
        out
    }

    pub fn monomial(ctx: AlgebraContext, e: ExponentTuple) -> Result<Self> {
        ctx.validate(&e)?;
        let mut out = Self::zero(ctx);
        out.terms.insert(e, Fe::ONE);
        Ok(out)
    }

    /// The polynomial `Y_k`.
    pub fn variable(ctx: AlgebraContext, k: usize) -> Result<Self> {
        let mut e = ExponentTuple::zeros(ctx.m());
        *e.0.get_mut(k).ok_or(Error::IndexOutOfRange {
            index: k,
            bound: ctx.m(),
        })? = 1;
        Self::monomial(ctx, e)
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, Fe)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, e: &ExponentTuple) -> Fe {
        self.terms.get(e).copied().unwrap_or(Fe::ZERO)
    }

    pub fn add_term(&mut self, e: ExponentTuple, c: Fe) -> Result<()> {
        self.ctx.validate(&e)?;
        self.ctx.field().check(c)?;
        self.add_term_unchecked(e, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, e: ExponentTuple, c: Fe) {
        let f = self.ctx.field();
        let sum = f.add(self.coefficient(&e), c);
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term_unchecked(e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: Fe) -> Self {
        let f = self.ctx.field();
        let mut out = Self::zero(self.ctx);
        for (e, &c) in &self.terms {
            out.add_term_unchecked(e.clone(), f.mul(s, c));
        }
        out
    }

    /// Product followed by reduction.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let f = self.ctx.field();
        let mut prod = Polynomial::zero(self.ctx);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<u32> =
                    a.0.iter()
                        .zip(&b.0)
                        .map(|(&x, &y)| x as u32 + y as u32)
                        .collect();
                prod.add_term(e, f.mul(ca, cb))?;
            }
        }
        Ok(prod.reduce())
    }

    /// Ordinary total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.p_weight()).max()
    }

    pub fn weighted_degree(&self, w: &WeightProfile) -> Result<WeightedDegree> {
        let mut best = WeightedDegree::MinusInfinity;
        for e in self.terms.keys() {
            best = best.max(WeightedDegree::Finite(e.weighted_p_weight(w)?));
        }
        Ok(best)
    }

    pub fn evaluate(&self, point: &Point) -> Result<Fe> {
        check_point(self.ctx, point)?;
        let f = self.ctx.field();
        Ok(self.terms.iter().fold(Fe::ZERO, |acc, (e, &c)| {
            let t =
                e.0.iter()
                    .zip(&point.0)
                    .fold(c, |t, (&ek, &a)| f.mul(t, f.pow(a, ek as u64)));
            f.add(acc, t)
        }))
    }

    /// Evaluation vector `(F(P_0), .., F(P_{p^m - 1}))` in flat point order.
    pub fn phi(&self) -> AlgebraElement {
        let ctx = self.ctx;
        let f = ctx.field();
        let p = ctx.p() as usize;
        // powers[a][e] = a^e
        let powers: Vec<Vec<Fe>> = f
            .elements()
            .map(|a| (0..p).map(|e| f.pow(a, e as u64)).collect())
            .collect();
        let coeffs = (0..ctx.len())
            .map(|i| {
                let pt = ctx.digits(i);
                self.terms.iter().fold(Fe::ZERO, |acc, (e, &c)| {
                    let t =
                        e.0.iter()
                            .zip(&pt.0)
                            .fold(c, |t, (&ek, &a)| f.mul(t, powers[a as usize][ek as usize]));
                    f.add(acc, t)
                })
            })
            .collect();
        AlgebraElement::from_coeffs_unchecked(ctx, coeffs)
    }

    /// Unique reduced polynomial whose evaluation vector is `a`, by
    /// per-variable Lagrange interpolation on `F_p`.
    pub fn psi_inverse(a: &AlgebraElement) -> Self {
        let ctx = a.ctx();
        let f = ctx.field();
        let p = ctx.p() as usize;
        let lagrange = lagrange_coefficients(f);
        let mut cur = a.coeffs().to_vec();
        for k in 0..ctx.m() {
            let stride = ctx.stride(k);
            let mut next = vec![Fe::ZERO; ctx.len()];
            for base in 0..ctx.len() {
                if !(base / stride).is_multiple_of(p) {
                    continue;
                }
                for pt in 0..p {
                    let v = cur[base + pt * stride];
                    if v.is_zero() {
                        continue;
                    }
                    for (j, row) in lagrange.iter().enumerate() {
                        let slot = &mut next[base + j * stride];
                        *slot = f.add(*slot, f.mul(v, row[pt]));
                    }
                }
            }
            cur = next;
        }
        let mut out = Self::zero(ctx);
        for (i, c) in cur.into_iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(ctx.digits(i), c);
            }
        }
        out
    }

    pub fn parse(ctx: AlgebraContext, s: &str) -> Result<Self> {
        Ok(parse_polynomial(ctx, s)?.reduce())
    }
}

/// `L[j][a]`: coefficient of `Y^j` in the indicator polynomial of the point
/// `a`, namely `1 - (Y - a)^{p-1}`.
fn lagrange_coefficients(f: PrimeField) -> Vec<Vec<Fe>> {
    let p = f.p() as usize;
    let mut binom = vec![Fe::ONE; p];
    for j in 1..p {
        // C(p-1, j) = C(p-1, j-1) * (p-j) / j
        binom[j] = f
            .div(
                f.mul(binom[j - 1], f.reduce((p - j) as i64)),
                f.reduce(j as i64),
            )
            .expect("j < p is invertible");
    }
    (0..p)
        .map(|j| {
            f.elements()
                .map(|a| {
                    let term = f.mul(binom[j], f.pow(f.neg(a), (p - 1 - j) as u64));
                    let delta = if j == 0 { Fe::ONE } else { Fe::ZERO };
                    f.sub(delta, term)
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for ReducedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest flat index first
        let mut terms: Vec<(&ExponentTuple, &Fe)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let ia = a.0 .0.iter().rev().cmp(b.0 .0.iter().rev());
            ia.reverse()
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .map(|(k, &d)| {
                        if d == 1 {
                            format!("Y{k}")
                        } else {
                            format!("Y{k}^{d}")
                        }
                    })
                    .collect();
            match (vars.is_empty(), c.value()) {
                (true, _) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", vars.join("*"))?,
                (false, _) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Parses sums of terms like `2*Y0^2*Y1 + 1` (also accepting `-`).
fn parse_polynomial(ctx: AlgebraContext, s: &str) -> Result<Polynomial> {
    let f = ctx.field();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = Polynomial::zero(ctx);
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {s:?}")));
        }
        let mut coeff: i64 = sign;
        let mut exps = vec![0u32; ctx.m()];
        for factor in term.split('*') {
            if let Some(var) = factor.strip_prefix('Y') {
                let (idx, pow) = match var.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (var, "1"),
                };
                let k: usize = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                if k >= ctx.m() {
                    return Err(Error::Parse(format!(
                        "variable Y{k} out of range for m = {}",
                        ctx.m()
                    )));
                }
                let e: u32 = pow
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                exps[k] += e;
            } else {
                let c: i64 = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                coeff = f.reduce(coeff).value() as i64 * f.reduce(c).value() as i64;
            }
        }
        out.add_term(exps, f.reduce(coeff))?;
        if tail.is_empty() {
            break;
        }
        sign = if tail.starts_with('-') { -1 } else { 1 };
        rest = &tail[1..];
    }
    Ok(out)
}

/// `H_i(Y) = alpha_i prod_{j=1}^{p-1-i} (Y + j)` with `alpha_i = -i! mod p`,
/// as a univariate polynomial (context `m = 1`).
pub fn h_single(i: u8, field: PrimeField) -> Result<ReducedPolynomial> {
    let ctx = AlgebraContext::new(field.p() as u32, 1)?;
    let coeffs = h_single_coeffs(i, field)?;
    let mut out = ReducedPolynomial::zero(ctx);
    for (d, c) in coeffs.into_iter().enumerate() {
        out.add_term_unchecked(ExponentTuple(vec![d as u8]), c);
    }
    Ok(out)
}

/// Coefficients (ascending degree) of `H_i`.
fn h_single_coeffs(i: u8, f: PrimeField) -> Result<Vec<Fe>> {
    let p = f.p();
    if i >= p {
        return Err(Error::OutOfRange {
            what: "interpolation index",
            value: i as i64,
            min: 0,
            max: p as i64 - 1,
        });
    }
    let alpha = f.neg(f.factorial(i as u32));
    let mut poly = vec![alpha];
    for j in 1..=(p - 1 - i) {
        // multiply by (Y + j)
        let j = f.reduce(j as i64);
        let mut next = vec![Fe::ZERO; poly.len() + 1];
        for (d, &c) in poly.iter().enumerate() {
            next[d] = f.add(next[d], f.mul(c, j));
            next[d + 1] = f.add(next[d + 1], c);
        }
        poly = next;
    }
    Ok(poly)
}

/// `H_i(Y) = prod_l H_{i_l}(Y_l)`.
pub fn h_multi(ctx: AlgebraContext, i: &ExponentTuple) -> Result<ReducedPolynomial> {
    ctx.validate(i)?;
    let f = ctx.field();
    let mut terms: Vec<(Vec<u8>, Fe)> = vec![(Vec::new(), Fe::ONE)];
    for &il in &i.0 {
        let factor = h_single_coeffs(il, f)?;
        let mut next = Vec::new();
        for (e, c) in &terms {
            for (d, &fc) in factor.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2.push(d as u8);
                next.push((e2, f.mul(*c, fc)));
            }
        }
        terms = next;
    }
    let mut out = ReducedPolynomial::zero(ctx);
    for (e, c) in terms {
        out.add_term_unchecked(ExponentTuple(e), c);
    }
    Ok(out)
}

/// Reduced monomials of weighted degree at most `omega`, in flat-index order.
pub fn monomials_up_to_weighted_degree(
    omega: u64,
    w: &WeightProfile,
    ctx: AlgebraContext,
) -> Result<Vec<ExponentTuple>> {
    if w.len() != ctx.m() {
        return Err(Error::LengthMismatch {
            expected: ctx.m(),
            got: w.len(),
        });
    }
    let mut out = Vec::new();
    for e in ctx.tuples() {
        if e.weighted_p_weight(w)? <= omega {
            out.push(e);
        }
    }
    Ok(out)
}

/// Reduced exponent tuples of total degree exactly `d`, in flat-index order.
pub fn homogeneous_monomials(d: u32, ctx: AlgebraContext) -> Result<Vec<ExponentTuple>> {
    let max = ctx.m() as u32 * (ctx.p() as u32 - 1);
    if d > max {
        return Err(Error::OutOfRange {
            what: "degree",
            value: d as i64,
            min: 0,
            max: max as i64,
        });
    }
    Ok(ctx.tuples().filter(|e| e.p_weight() == d).collect())
}

/// All exponent vectors (unbounded entries) of `m` variables summing to `d`,
/// i.e. every monomial of a homogeneous degree-`d` polynomial.
pub fn homogeneous_exponents_unreduced(d: u32, m: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, k: usize, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k + 1 == m {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(left - e, k + 1, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(d, 0, m, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::jennings_element;

    fn ctx(p: u32, m: usize) -> AlgebraContext {
        AlgebraContext::new(p, m).unwrap()
    }

    fn rp(c: AlgebraContext, s: &str) -> ReducedPolynomial {
        ReducedPolynomial::parse(c, s).unwrap()
    }

    #[test]
    fn weight_profile_validation() {
        assert!(WeightProfile::new(vec![1, 2, 2, 3]).is_ok());
        assert!(WeightProfile::new(vec![2, 1]).is_err());
        assert!(WeightProfile::new(vec![0, 1]).is_err());
        assert!(WeightProfile::new(vec![]).is_err());
        assert_eq!(
            "1, 2,3".parse::<WeightProfile>().unwrap().as_slice(),
            &[1, 2, 3]
        );
        assert!("1,x".parse::<WeightProfile>().is_err());
    }

    #[test]
    fn reduce_examples() {
        let c = ctx(3, 1);
        assert_eq!(rp(c, "Y0^3"), rp(c, "Y0"));
        assert_eq!(rp(c, "Y0^4"), rp(c, "Y0^2"));
        let c2 = ctx(2, 2);
        assert_eq!(rp(c2, "Y0^2*Y1"), rp(c2, "Y0*Y1"));
        // Y^4 and Y^2 agree at every point of F_3
        let g = Polynomial::parse(c, "Y0^4").unwrap();
        for i in 0..3 {
            let pt = Point::at_index(c, i).unwrap();
            assert_eq!(g.evaluate(&pt).unwrap(), g.reduce().evaluate(&pt).unwrap());
        }
    }

    #[test]
    fn weighted_degree_examples() {
        let w = WeightProfile::new(vec![1, 2]).unwrap();
        let c = ctx(3, 2);
        assert_eq!(
            rp(c, "1").weighted_degree(&w).unwrap(),
            WeightedDegree::Finite(0)
        );
        assert_eq!(
            rp(c, "Y0^2*Y1").weighted_degree(&w).unwrap(),
            WeightedDegree::Finite(4)
        );
        let zero = ReducedPolynomial::zero(c);
        assert_eq!(
            zero.weighted_degree(&w).unwrap(),
            WeightedDegree::MinusInfinity
        );
        assert!(WeightedDegree::MinusInfinity < WeightedDegree::Finite(0));
        assert!(zero.weighted_degree(&w).unwrap().at_most(0));
        let f = rp(c, "Y0^2*Y1 + Y1^2 + 2");
        assert_eq!(
            f.weighted_degree(&WeightProfile::unit(2)).unwrap(),
            WeightedDegree::Finite(f.total_degree().unwrap() as u64)
        );
    }

    #[test]
    fn evaluate_examples() {
        let c = ctx(2, 2);
        let pt = Point::at_index(c, 3).unwrap();
        assert_eq!(rp(c, "Y0 + Y1").evaluate(&pt).unwrap(), Fe::ZERO);
        assert_eq!(ReducedPolynomial::zero(c).evaluate(&pt).unwrap(), Fe::ZERO);
        let h0 = h_single(0, PrimeField::new(3).unwrap()).unwrap();
        let origin = Point(vec![Fe::ZERO]);
        assert_eq!(h0.evaluate(&origin).unwrap(), Fe::ONE);
    }

    #[test]
    fn phi_examples() {
        let c = ctx(2, 2);
        assert_eq!(rp(c, "1").phi(), AlgebraElement::all_one(c));
        assert_eq!(rp(c, "Y0").phi().values(), vec![0, 1, 0, 1]);
        let c1 = ctx(2, 1);
        assert_eq!(rp(c1, "Y0 + 1").phi().values(), vec![1, 0]);
    }

    #[test]
    fn psi_inverse_examples() {
        let c = ctx(3, 2);
        assert!(ReducedPolynomial::psi_inverse(&AlgebraElement::zero(c)).is_zero());
        assert_eq!(
            ReducedPolynomial::psi_inverse(&AlgebraElement::all_one(c)),
            rp(c, "1")
        );
        let f = rp(c, "2*Y0^2*Y1 + Y1^2 + Y0 + 1");
        assert_eq!(ReducedPolynomial::psi_inverse(&f.phi()), f);
    }

    #[test]
    fn h_single_examples() {
        let f2 = PrimeField::new(2).unwrap();
        let c1 = ctx(2, 1);
        assert_eq!(h_single(1, f2).unwrap(), rp(c1, "1"));
        assert_eq!(h_single(0, f2).unwrap(), rp(c1, "Y0 + 1"));
        let f3 = PrimeField::new(3).unwrap();
        let c3 = ctx(3, 1);
        assert_eq!(h_single(2, f3).unwrap(), rp(c3, "1"));
        // 2(Y+1)(Y+2) = 2Y^2 + 6Y + 4 = 2Y^2 + 1 mod 3
        assert_eq!(h_single(0, f3).unwrap(), rp(c3, "2*Y0^2 + 1"));
        assert!(h_single(3, f3).is_err());
        let f7 = PrimeField::new(7).unwrap();
        for i in 0..7u8 {
            let h = h_single(i, f7).unwrap();
            assert_eq!(h.total_degree(), Some(6 - i as u32));
            let lead = h.coefficient(&ExponentTuple(vec![6 - i]));
            assert_eq!(lead, f7.neg(f7.factorial(i as u32)));
        }
    }

    #[test]
    fn h_multi_examples() {
        let c = ctx(2, 2);
        let h = h_multi(c, &ExponentTuple(vec![1, 0])).unwrap();
        assert_eq!(h, rp(c, "Y1 + 1"));
        assert_eq!(h.phi().values(), vec![1, 1, 0, 0]);
        assert_eq!(
            h.phi(),
            jennings_element(c, &ExponentTuple(vec![1, 0])).unwrap()
        );
        let c5 = ctx(2, 5);
        let top = h_multi(c5, &ExponentTuple(vec![1; 5])).unwrap();
        assert_eq!(top, rp(c5, "1"));
        assert_eq!(top.phi(), AlgebraElement::all_one(c5));
    }

    #[test]
    fn monomial_enumeration() {
        let c = ctx(3, 2);
        let w = WeightProfile::new(vec![1, 2]).unwrap();
        assert_eq!(
            monomials_up_to_weighted_degree(0, &w, c).unwrap(),
            vec![ExponentTuple(vec![0, 0])]
        );
        let got = monomials_up_to_weighted_degree(2, &w, c).unwrap();
        let want: Vec<ExponentTuple> = [[0, 0], [1, 0], [2, 0], [0, 1]]
            .iter()
            .map(|e| ExponentTuple(e.to_vec()))
            .collect();
        assert_eq!(got, want);
        assert_eq!(monomials_up_to_weighted_degree(6, &w, c).unwrap().len(), 9);
        assert_eq!(monomials_up_to_weighted_degree(60, &w, c).unwrap().len(), 9);
    }

    #[test]
    fn homogeneous_enumeration() {
        let c = ctx(2, 3);
        let got = homogeneous_monomials(2, c).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.iter().all(|e| e.p_weight() == 2));
        assert_eq!(
            homogeneous_monomials(0, c).unwrap(),
            vec![ExponentTuple::zeros(3)]
        );
        assert_eq!(homogeneous_monomials(1, ctx(2, 5)).unwrap().len(), 5);
        assert!(homogeneous_monomials(4, c).is_err());
        // C(d + m - 1, m - 1)
        assert_eq!(homogeneous_exponents_unreduced(3, 3).len(), 10);
        assert_eq!(homogeneous_exponents_unreduced(0, 4), vec![vec![0; 4]]);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let c = ctx(3, 2);
        let f = rp(c, "1 + 2*Y1*Y0^2");
        assert_eq!(f.to_string(), "2*Y0^2*Y1 + 1");
        assert_eq!(rp(c, &f.to_string()), f);
        assert_eq!(ReducedPolynomial::zero(c).to_string(), "0");
        assert_eq!(rp(c, "Y0 - Y0"), ReducedPolynomial::zero(c));
        assert_eq!(rp(c, "-1"), rp(c, "2"));
        assert!(ReducedPolynomial::parse(c, "Y2").is_err());
        assert!(ReducedPolynomial::parse(c, "Y0 +").is_err());
        assert!(ReducedPolynomial::parse(c, "").is_err());
        assert!(ReducedPolynomial::parse(c, "Z0").is_err());
    }
}
