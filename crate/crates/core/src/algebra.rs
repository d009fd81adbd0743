//! The modular algebra `A = F_p[X_0, .., X_{m-1}] / (X_0^p - 1, .., X_{m-1}^p - 1)`.
//!
//! An element is stored densely as its `p^m` coefficients. The coefficient of
//! `x_0^{i_0} .. x_{m-1}^{i_{m-1}}` lives at flat index `i = sum_k i_k p^k`
//! (little-endian, `i_0` varies fastest), so an element doubles as a codeword
//! of length `p^m`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, PrimeField};
use crate::poly::WeightProfile;

/// Upper bound on the ambient length `p^m`.
pub const MAX_AMBIENT: usize = 1 << 24;

/// Shape of the ambient algebra: field, number of variables and length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    field: PrimeField,
    m: usize,
    n: usize,
}

impl AlgebraContext {
    pub fn new(p: u32, m: usize) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if m == 0 {
            return Err(Error::NoVariables);
        }
        let mut n: usize = 1;
        for _ in 0..m {
            n = n
                .checked_mul(p as usize)
                .filter(|&n| n <= MAX_AMBIENT)
                .ok_or(Error::AmbientTooLarge { p: p as u8, m })?;
        }
        Ok(Self { field, m, n })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u8 {
        self.field.p()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Ambient length `p^m`.
    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// Never true; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Stride of variable `k` in the flat index, `p^k`.
    #[inline]
    pub fn stride(&self, k: usize) -> usize {
        (self.p() as usize).pow(k as u32)
    }

    pub fn index_to_exponents(&self, i: usize) -> Result<ExponentTuple> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n,
            });
        }
        Ok(self.digits(i))
    }

    pub(crate) fn digits(&self, mut i: usize) -> ExponentTuple {
        let p = self.p() as usize;
        let mut e = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            e.push((i % p) as u8);
            i /= p;
        }
        ExponentTuple(e)
    }

    pub fn exponents_to_index(&self, e: &ExponentTuple) -> Result<usize> {
        self.validate(e)?;
        Ok(e.0
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * self.p() as usize + d as usize))
    }

    pub fn validate(&self, e: &ExponentTuple) -> Result<()> {
        if e.0.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: e.0.len(),
            });
        }
        if let Some(&bad) = e.0.iter().find(|&&d| d >= self.p()) {
            return Err(Error::OutOfRange {
                what: "exponent",
                value: bad as i64,
                min: 0,
                max: self.p() as i64 - 1,
            });
        }
        Ok(())
    }

    /// Componentwise `p - 1 - i_k`: the index map `theta` that swaps the
    /// weighted p-weight `W` with `(p-1) sum w - W`.
    pub fn theta(&self, e: &ExponentTuple) -> Result<ExponentTuple> {
        self.validate(e)?;
        Ok(ExponentTuple(
            e.0.iter().map(|&d| self.p() - 1 - d).collect(),
        ))
    }

    /// Flat index of `theta(i)`.
    #[inline]
    pub fn theta_index(&self, i: usize) -> usize {
        self.n - 1 - i
    }

    /// All exponent tuples in flat-index order.
    pub fn tuples(&self) -> impl Iterator<Item = ExponentTuple> + '_ {
        (0..self.n).map(|i| self.digits(i))
    }

    /// Flat index of `u + v` with exponents added modulo `p`.
    #[inline]
    fn add_indices(&self, mut u: usize, mut v: usize) -> usize {
        let p = self.p() as usize;
        if p == 2 {
            return u ^ v;
        }
        let mut out = 0;
        let mut stride = 1;
        for _ in 0..self.m {
            out += ((u % p + v % p) % p) * stride;
            u /= p;
            v /= p;
            stride *= p;
        }
        out
    }
}

/// Exponent vector `(i_0, .., i_{m-1})` with every entry in `[0, p-1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTuple(pub Vec<u8>);

impl ExponentTuple {
    pub fn zeros(m: usize) -> Self {
        Self(vec![0; m])
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `wt_p(i)`, the digit sum.
    pub fn p_weight(&self) -> u32 {
        self.0.iter().map(|&d| d as u32).sum()
    }

    /// `Wwt_p(i) = sum_k i_k w_k`.
    pub fn weighted_p_weight(&self, w: &WeightProfile) -> Result<u64> {
        if w.len() != self.0.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.len(),
                got: w.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(w.as_slice())
            .map(|(&d, &wk)| d as u64 * wk as u64)
            .sum())
    }

    /// Componentwise `<=`.
    pub fn le(&self, other: &ExponentTuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<u8>> for ExponentTuple {
    fn from(v: Vec<u8>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A subset of `{0, .., m-1}` as a bitmask; indexes the binary Jennings
/// elements `b(eta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn new(bits: u32, m: usize) -> Result<Self> {
        if m < 32 && bits >> m != 0 {
            return Err(Error::OutOfRange {
                what: "subset mask",
                value: bits as i64,
                min: 0,
                max: (1i64 << m) - 1,
            });
        }
        Ok(Self(bits))
    }

    pub fn from_elements(elems: &[usize], m: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elems {
            if e >= m {
                return Err(Error::IndexOutOfRange { index: e, bound: m });
            }
            bits |= 1 << e;
        }
        Ok(Self(bits))
    }

    pub fn full(m: usize) -> Self {
        Self(((1u64 << m) - 1) as u32)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    /// `eta^c = {0..m-1} - eta`.
    #[inline]
    pub fn complement(self, m: usize) -> Self {
        Self(Self::full(m).0 & !self.0)
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&k| self.contains(k))
    }

    /// Indicator exponent tuple of length `m`.
    pub fn indicator(self, m: usize) -> ExponentTuple {
        ExponentTuple((0..m).map(|k| self.contains(k) as u8).collect())
    }

    /// All subsets of `{0..m-1}` of size `t`, ascending by bitmask.
    pub fn of_size(m: usize, t: usize) -> impl Iterator<Item = SubsetMask> {
        (0u32..(1u32 << m))
            .filter(move |b| b.count_ones() as usize == t)
            .map(SubsetMask)
    }

    /// All subsets of `{0..m-1}`, ascending by bitmask.
    pub fn all(m: usize) -> impl Iterator<Item = SubsetMask> {
        (0u32..(1u32 << m)).map(SubsetMask)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, k) in self.elements().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// An element of `A`, equivalently a vector in `F_p^{p^m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    ctx: AlgebraContext,
    coeffs: Vec<Fe>,
}

impl AlgebraElement {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            coeffs: vec![Fe::ZERO; ctx.len()],
        }
    }

    /// The multiplicative identity `x^(0,..,0)`.
    pub fn unit(ctx: AlgebraContext) -> Self {
        let mut a = Self::zero(ctx);
        a.coeffs[0] = Fe::ONE;
        a
    }

    /// The constant-one vector. For `p = 2` this is `b({0..m-1})`.
    pub fn all_one(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            coeffs: vec![Fe::ONE; ctx.len()],
        }
    }

    pub fn monomial(ctx: AlgebraContext, e: &ExponentTuple) -> Result<Self> {
        let i = ctx.exponents_to_index(e)?;
        let mut a = Self::zero(ctx);
        a.coeffs[i] = Fe::ONE;
        Ok(a)
    }

    /// The variable `x_k` as an element.
    pub fn variable(ctx: AlgebraContext, k: usize) -> Result<Self> {
        if k >= ctx.m() {
            return Err(Error::IndexOutOfRange {
                index: k,
                bound: ctx.m(),
            });
        }
        let mut a = Self::zero(ctx);
        a.coeffs[ctx.stride(k)] = Fe::ONE;
        Ok(a)
    }

    pub fn from_coeffs(ctx: AlgebraContext, coeffs: Vec<Fe>) -> Result<Self> {
        if coeffs.len() != ctx.len() {
            return Err(Error::LengthMismatch {
                expected: ctx.len(),
                got: coeffs.len(),
            });
        }
        for &c in &coeffs {
            ctx.field().check(c)?;
        }
        Ok(Self { ctx, coeffs })
    }

    /// Builds an element from plain residues, rejecting values `>= p`.
    pub fn from_values(ctx: AlgebraContext, values: &[u32]) -> Result<Self> {
        let field = ctx.field();
        let coeffs = values
            .iter()
            .map(|&v| field.elem(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(ctx, coeffs)
    }

    pub(crate) fn from_coeffs_unchecked(ctx: AlgebraContext, coeffs: Vec<Fe>) -> Self {
        debug_assert_eq!(coeffs.len(), ctx.len());
        Self { ctx, coeffs }
    }

    #[inline]
    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    #[inline]
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn values(&self) -> Vec<u8> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Fe {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
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
        let f = self.ctx.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Self::from_coeffs_unchecked(self.ctx, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let f = self.ctx.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Self::from_coeffs_unchecked(self.ctx, coeffs))
    }

    pub(crate) fn add_assign_scaled(&mut self, other: &Self, s: Fe) {
        debug_assert_eq!(self.ctx, other.ctx);
        if s.is_zero() {
            return;
        }
        let f = self.ctx.field();
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.add(*a, f.mul(s, b));
        }
    }

    pub fn scale(&self, s: Fe) -> Self {
        let f = self.ctx.field();
        Self::from_coeffs_unchecked(self.ctx, self.coeffs.iter().map(|&a| f.mul(s, a)).collect())
    }

    /// Product in `A`: an m-dimensional cyclic convolution, since `x_k^p = 1`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let ctx = self.ctx;
        let f = ctx.field();
        let mut out = vec![Fe::ZERO; ctx.len()];
        let rhs: Vec<(usize, Fe)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (i, c))
            .collect();
        for (u, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(v, b) in &rhs {
                let j = ctx.add_indices(u, v);
                out[j] = f.add(out[j], f.mul(a, b));
            }
        }
        Ok(Self::from_coeffs_unchecked(ctx, out))
    }

    /// Coordinatewise (Hadamard) product: the image of polynomial
    /// multiplication under evaluation. Not the product of `A`.
    pub fn multiply_pointwise(&self, other: &Self) -> Self {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
        let f = self.ctx.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.mul(a, b))
            .collect();
        Self::from_coeffs_unchecked(self.ctx, coeffs)
    }

    /// Multiplies by the single factor `(x_k - 1)` in `O(p^m)`.
    pub fn mul_x_minus_one(&self, k: usize) -> Result<Self> {
        let ctx = self.ctx;
        if k >= ctx.m() {
            return Err(Error::IndexOutOfRange {
                index: k,
                bound: ctx.m(),
            });
        }
        let f = ctx.field();
        let p = ctx.p() as usize;
        let stride = ctx.stride(k);
        let mut out = vec![Fe::ZERO; ctx.len()];
        for (j, slot) in out.iter_mut().enumerate() {
            let digit = (j / stride) % p;
            // index of x^{j - e_k}, with the k-th exponent wrapping cyclically
            let prev = if digit == 0 {
                j + (p - 1) * stride
            } else {
                j - stride
            };
            *slot = f.sub(self.coeffs[prev], self.coeffs[j]);
        }
        Ok(Self::from_coeffs_unchecked(ctx, out))
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `B_i = (x_0 - 1)^{i_0} .. (x_{m-1} - 1)^{i_{m-1}}`, built by repeated
/// multiplication with single `(x_k - 1)` factors.
pub fn jennings_element(ctx: AlgebraContext, i: &ExponentTuple) -> Result<AlgebraElement> {
    ctx.validate(i)?;
    let mut acc = AlgebraElement::unit(ctx);
    for (k, &e) in i.0.iter().enumerate() {
        for _ in 0..e {
            acc = acc.mul_x_minus_one(k)?;
        }
    }
    Ok(acc)
}

/// All `p^m` Jennings basis elements, ordered by flat index of the exponent.
pub fn jennings_basis(ctx: AlgebraContext) -> Vec<AlgebraElement> {
    ctx.tuples()
        .map(|i| jennings_element(ctx, &i).expect("tuples are in range"))
        .collect()
}

/// `b(eta) = prod_{k in eta} (x_k - 1)` in the binary algebra.
pub fn b_subset(ctx: AlgebraContext, eta: SubsetMask) -> Result<AlgebraElement> {
    if ctx.p() != 2 {
        return Err(Error::UnsupportedField(ctx.p()));
    }
    SubsetMask::new(eta.bits(), ctx.m())?;
    let mut acc = AlgebraElement::unit(ctx);
    for k in eta.elements() {
        acc = acc.mul_x_minus_one(k)?;
    }
    Ok(acc)
}

/// Coordinates of `a` in the Jennings basis, indexed by flat index of the
/// exponent tuple. Obtained by rewriting each variable around `x_k = 1`:
/// `x^e = sum_j C(e, j) (x - 1)^j`, exact because `e < p`.
pub fn jennings_coordinates(a: &AlgebraElement) -> Vec<Fe> {
    let ctx = a.ctx();
    let f = ctx.field();
    let p = ctx.p() as usize;
    let binom = binomial_table(f, p);
    let mut cur = a.coeffs().to_vec();
    for k in 0..ctx.m() {
        let stride = ctx.stride(k);
        let mut next = vec![Fe::ZERO; ctx.len()];
        for base in 0..ctx.len() {
            if !(base / stride).is_multiple_of(p) {
                continue;
            }
            for e in 0..p {
                let c = cur[base + e * stride];
                if c.is_zero() {
                    continue;
                }
                for j in 0..=e {
                    let slot = &mut next[base + j * stride];
                    *slot = f.add(*slot, f.mul(c, binom[e][j]));
                }
            }
        }
        cur = next;
    }
    cur
}

fn binomial_table(f: PrimeField, p: usize) -> Vec<Vec<Fe>> {
    let mut t = vec![vec![Fe::ZERO; p]; p];
    for e in 0..p {
        t[e][0] = Fe::ONE;
        for j in 1..=e {
            t[e][j] = f.add(t[e - 1][j - 1], if j < e { t[e - 1][j] } else { Fe::ZERO });
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32, m: usize) -> AlgebraContext {
        AlgebraContext::new(p, m).unwrap()
    }

    fn el(c: AlgebraContext, v: &[u32]) -> AlgebraElement {
        AlgebraElement::from_values(c, v).unwrap()
    }

    #[test]
    fn context_bounds() {
        assert!(AlgebraContext::new(2, 24).is_ok());
        assert_eq!(
            AlgebraContext::new(2, 25),
            Err(Error::AmbientTooLarge { p: 2, m: 25 })
        );
        assert_eq!(AlgebraContext::new(3, 0), Err(Error::NoVariables));
        assert_eq!(AlgebraContext::new(6, 2), Err(Error::NotPrime(6)));
    }

    #[test]
    fn index_examples() {
        assert_eq!(ctx(2, 5).index_to_exponents(0).unwrap().0, vec![0; 5]);
        assert_eq!(ctx(3, 2).index_to_exponents(5).unwrap().0, vec![2, 1]);
        assert_eq!(ctx(2, 3).index_to_exponents(6).unwrap().0, vec![0, 1, 1]);
        assert!(ctx(3, 2).index_to_exponents(9).is_err());
        let c = ctx(5, 3);
        for i in 0..c.len() {
            let e = c.index_to_exponents(i).unwrap();
            assert_eq!(c.exponents_to_index(&e).unwrap(), i);
        }
    }

    #[test]
    fn weights_and_theta() {
        assert_eq!(ExponentTuple(vec![0, 0, 0]).p_weight(), 0);
        assert_eq!(ExponentTuple(vec![2, 1]).p_weight(), 3);
        assert_eq!(ExponentTuple(vec![1; 5]).p_weight(), 5);
        let w = WeightProfile::new(vec![1, 2]).unwrap();
        assert_eq!(ExponentTuple(vec![2, 1]).weighted_p_weight(&w).unwrap(), 4);
        let w = WeightProfile::new(vec![1, 2, 3]).unwrap();
        assert_eq!(
            ExponentTuple(vec![1, 0, 1]).weighted_p_weight(&w).unwrap(),
            4
        );
        assert!(ExponentTuple(vec![1, 0]).weighted_p_weight(&w).is_err());
        assert_eq!(
            ctx(2, 3).theta(&ExponentTuple(vec![1, 0, 1])).unwrap().0,
            vec![0, 1, 0]
        );
        assert_eq!(
            ctx(3, 2).theta(&ExponentTuple(vec![2, 1])).unwrap().0,
            vec![0, 1]
        );
    }

    #[test]
    fn theta_is_an_involution_and_swaps_weights() {
        let c = ctx(3, 3);
        let w = WeightProfile::new(vec![1, 2, 3]).unwrap();
        let top = (c.p() as u64 - 1) * w.total();
        for i in c.tuples() {
            let t = c.theta(&i).unwrap();
            assert_eq!(c.theta(&t).unwrap(), i);
            assert_eq!(
                c.exponents_to_index(&t).unwrap(),
                c.theta_index(c.exponents_to_index(&i).unwrap())
            );
            assert_eq!(
                t.weighted_p_weight(&w).unwrap(),
                top - i.weighted_p_weight(&w).unwrap()
            );
        }
    }

    #[test]
    fn multiply_examples() {
        let c = ctx(2, 1);
        let xm1 = jennings_element(c, &ExponentTuple(vec![1])).unwrap();
        assert!(xm1.multiply(&xm1).unwrap().is_zero());

        let c = ctx(3, 1);
        let xm1 = el(c, &[2, 1, 0]);
        assert_eq!(xm1.multiply(&xm1).unwrap(), el(c, &[1, 1, 1]));

        let c = ctx(3, 2);
        let a = el(c, &[1, 2, 0, 0, 1, 2, 2, 2, 1]);
        assert_eq!(AlgebraElement::unit(c).multiply(&a).unwrap(), a);
    }

    #[test]
    fn add_examples() {
        let c = ctx(3, 1);
        assert_eq!(
            el(c, &[1, 2, 0]).add(&el(c, &[2, 2, 1])).unwrap(),
            el(c, &[0, 1, 1])
        );
        let c = ctx(2, 2);
        let a = el(c, &[1, 0, 1, 1]);
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(a.add(&AlgebraElement::zero(c)).unwrap(), a);
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = AlgebraElement::unit(ctx(2, 2));
        let b = AlgebraElement::unit(ctx(2, 3));
        let c = AlgebraElement::unit(ctx(3, 2));
        assert_eq!(a.add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.multiply(&c), Err(Error::ContextMismatch));
    }

    #[test]
    fn from_values_rejects_non_residues() {
        assert!(AlgebraElement::from_values(ctx(2, 1), &[0, 2]).is_err());
        assert!(AlgebraElement::from_values(ctx(2, 1), &[0, 1, 1]).is_err());
    }

    #[test]
    fn variables_have_order_p() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (7, 1)] {
            let c = ctx(p, m);
            for k in 0..m {
                let x = AlgebraElement::variable(c, k).unwrap();
                let mut acc = AlgebraElement::unit(c);
                for _ in 0..p {
                    acc = acc.multiply(&x).unwrap();
                }
                assert_eq!(acc, AlgebraElement::unit(c));
            }
        }
    }

    #[test]
    fn multiply_commutes_exhaustively_small() {
        for m in 1..=3 {
            let c = ctx(2, m);
            let all: Vec<AlgebraElement> = (0..1u32 << c.len())
                .map(|bits| {
                    let v: Vec<u32> = (0..c.len()).map(|i| bits >> i & 1).collect();
                    el(c, &v)
                })
                .collect();
            for a in &all {
                for b in &all {
                    assert_eq!(a.multiply(b).unwrap(), b.multiply(a).unwrap());
                }
            }
        }
    }

    #[test]
    fn sparse_factor_matches_convolution() {
        let c = ctx(3, 2);
        let a = el(c, &[1, 2, 0, 0, 1, 2, 2, 2, 1]);
        for k in 0..2 {
            let xm1 = AlgebraElement::variable(c, k)
                .unwrap()
                .sub(&AlgebraElement::unit(c))
                .unwrap();
            assert_eq!(a.mul_x_minus_one(k).unwrap(), a.multiply(&xm1).unwrap());
        }
    }

    #[test]
    fn jennings_examples() {
        let c = ctx(2, 5);
        assert_eq!(
            jennings_element(c, &ExponentTuple::zeros(5)).unwrap(),
            AlgebraElement::unit(c)
        );
        assert_eq!(
            jennings_element(c, &ExponentTuple(vec![1; 5])).unwrap(),
            AlgebraElement::all_one(c)
        );
        for i in c.tuples() {
            let b = jennings_element(c, &i).unwrap();
            assert_eq!(b.hamming_weight(), 1 << i.p_weight());
        }
        let c1 = ctx(2, 1);
        assert_eq!(
            jennings_basis(c1),
            vec![AlgebraElement::unit(c1), el(c1, &[1, 1])]
        );
        assert_eq!(jennings_basis(ctx(3, 2)).len(), 9);
    }

    #[test]
    fn b_subset_matches_indicator_and_rejects_odd_p() {
        let c = ctx(2, 4);
        for eta in SubsetMask::all(4) {
            assert_eq!(
                b_subset(c, eta).unwrap(),
                jennings_element(c, &eta.indicator(4)).unwrap()
            );
        }
        assert_eq!(
            b_subset(ctx(3, 2), SubsetMask::EMPTY),
            Err(Error::UnsupportedField(3))
        );
        assert!(b_subset(c, SubsetMask(1 << 4)).is_err());
        let c5 = ctx(2, 5);
        let eta = SubsetMask::from_elements(&[1, 2, 3, 4], 5).unwrap();
        assert_eq!(b_subset(c5, eta).unwrap().hamming_weight(), 16);
    }

    #[test]
    fn all_one_examples() {
        let c = ctx(2, 2);
        assert_eq!(AlgebraElement::all_one(c).values(), vec![1, 1, 1, 1]);
        assert_eq!(AlgebraElement::all_one(ctx(2, 5)).hamming_weight(), 32);
        assert_eq!(AlgebraElement::zero(c).hamming_weight(), 0);
    }

    #[test]
    fn jennings_coordinates_invert_the_basis() {
        for (p, m) in [(2, 3), (3, 2), (5, 2)] {
            let c = ctx(p, m);
            for (idx, b) in jennings_basis(c).iter().enumerate() {
                let coords = jennings_coordinates(b);
                for (j, &x) in coords.iter().enumerate() {
                    assert_eq!(x, if j == idx { Fe::ONE } else { Fe::ZERO });
                }
            }
        }
    }

    #[test]
    fn subset_mask_helpers() {
        let eta = SubsetMask::from_elements(&[0, 2], 4).unwrap();
        assert_eq!(eta.bits(), 0b0101);
        assert_eq!(eta.complement(4).bits(), 0b1010);
        assert_eq!(eta.len(), 2);
        assert_eq!(eta.to_string(), "{0,2}");
        assert_eq!(SubsetMask::of_size(5, 2).count(), 10);
        assert!(SubsetMask::from_elements(&[4], 4).is_err());
    }
}
