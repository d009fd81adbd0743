//! Landrock-Manz threshold decoding of binary homogeneous Reed-Muller codes.
//!
//! A codeword of `HRMC_d(m, 2)` is `c = sum tau(eta) (b(eta) + 1)` over
//! `m - d <= |eta| < m`. For `|kappa| = t`, multiplying by `b(kappa^c)` kills
//! every `b(eta)` with `eta` not inside `kappa` and kills the all-one word, so
//! once all layers below `t` are stripped off,
//! `v b(kappa^c) = tau(kappa) 1 + f b(kappa^c)` and the weight of the product
//! reveals `tau(kappa)` as long as `w(f) <= 2^{m-d-1} - 1`.
//!
//! Layers must be processed in increasing `|kappa|`; within a layer the tests
//! are independent of each other.

use std::collections::BTreeMap;

use crate::algebra::{b_subset, AlgebraContext, AlgebraElement, SubsetMask};
use crate::codes::hrm_binary_subsets;
use crate::error::{Error, Result};
use crate::gf::Fe;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeStatus {
    Corrected,
    DetectedUncorrectable,
}

/// One threshold test: the weight of `v b(kappa^c)` and the bit it implied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdStep {
    pub kappa: SubsetMask,
    pub product_weight: usize,
    pub bit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    /// `tau(eta)` for every `m - d <= |eta| < m`.
    pub tau: BTreeMap<SubsetMask, bool>,
    pub codeword: AlgebraElement,
    /// Estimated error `f`; `received = codeword + residual`.
    pub residual: AlgebraElement,
    pub status: DecodeStatus,
    pub steps: Vec<ThresholdStep>,
}

impl DecodeResult {
    /// `tau` laid out in the row order of
    /// [`hrm_code_jennings_binary`](crate::codes::hrm_code_jennings_binary),
    /// i.e. the message that encodes to `codeword`.
    pub fn message(&self, d: usize, m: usize) -> Vec<Fe> {
        hrm_binary_subsets(d, m)
            .into_iter()
            .map(|eta| {
                if self.tau.get(&eta).copied().unwrap_or(false) {
                    Fe::ONE
                } else {
                    Fe::ZERO
                }
            })
            .collect()
    }
}

/// Guaranteed error-correcting capability `2^{m-d-1} - 1` of `HRMC_d(m, 2)`.
pub fn capability(d: usize, m: usize) -> Result<usize> {
    if d < 1 || d + 1 > m {
        return Err(Error::OutOfRange {
            what: "degree",
            value: d as i64,
            min: 1,
            max: m as i64 - 1,
        });
    }
    Ok((1usize << (m - d - 1)) - 1)
}

fn check_binary(v: &AlgebraElement, m: usize) -> Result<AlgebraContext> {
    let ctx = v.ctx();
    if ctx.p() != 2 {
        return Err(Error::UnsupportedField(ctx.p()));
    }
    if ctx.m() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: ctx.m(),
        });
    }
    Ok(ctx)
}

/// `v * b(kappa^c)` via one sparse factor per element of the complement.
fn times_complement(v: &AlgebraElement, kappa: SubsetMask, m: usize) -> Result<AlgebraElement> {
    kappa
        .complement(m)
        .elements()
        .try_fold(v.clone(), |acc, k| acc.mul_x_minus_one(k))
}

fn threshold(v: &AlgebraElement, kappa: SubsetMask, m: usize) -> Result<ThresholdStep> {
    let product_weight = times_complement(v, kappa, m)?.hamming_weight();
    Ok(ThresholdStep {
        kappa,
        product_weight,
        // a weight of exactly 2^{m-1} reads as 1
        bit: product_weight >= 1 << (m - 1),
    })
}

/// `tau(kappa) = 0` iff `w(v b(kappa^c)) < 2^{m-1}`.
pub fn extract_coefficient(v: &AlgebraElement, kappa: SubsetMask, m: usize) -> Result<bool> {
    check_binary(v, m)?;
    SubsetMask::new(kappa.bits(), m)?;
    if kappa.len() >= m {
        return Err(Error::Precondition(
            "kappa must be a proper subset of {0..m-1}".into(),
        ));
    }
    Ok(threshold(v, kappa, m)?.bit)
}

/// Decodes a received word of `HRMC_d(m, 2)`. Always returns a result on
/// in-range input; when the leftover residual exceeds the capability the
/// best-effort estimate is returned with `DetectedUncorrectable`.
pub fn decode(v: &AlgebraElement, d: usize, m: usize) -> Result<DecodeResult> {
    let ctx = check_binary(v, m)?;
    let cap = capability(d, m)?;
    let one = AlgebraElement::all_one(ctx);
    let mut current = v.clone();
    let mut tau = BTreeMap::new();
    let mut steps = Vec::new();
    for t in (m - d)..m {
        // Tests within a layer do not see each other's updates: for distinct
        // kappa, kappa' of equal size, b(kappa) b(kappa'^c) = 0.
        for kappa in SubsetMask::of_size(m, t) {
            let step = threshold(&current, kappa, m)?;
            if step.bit {
                current = current.add(&b_subset(ctx, kappa)?.add(&one)?)?;
            }
            tau.insert(kappa, step.bit);
            steps.push(step);
        }
    }
    let residual = current;
    let codeword = v.add(&residual)?;
    let status = if residual.hamming_weight() <= cap {
        DecodeStatus::Corrected
    } else {
        DecodeStatus::DetectedUncorrectable
    };
    Ok(DecodeResult {
        tau,
        codeword,
        residual,
        status,
        steps,
    })
}
