//! Brute-force ground truth: exact Gaussian elimination over F_p, codeword
//! enumeration, minimum distance and nearest-codeword decoding.
//!
//! Nothing here uses the structure of the codes; it only sees generator rows.

use crate::algebra::AlgebraElement;
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Fe, PrimeField};

/// Default enumeration bound `p^k <= 2^24`.
pub const ENUMERATION_BOUND_LOG2: u32 = 24;

/// A row space in canonical reduced row echelon form: pivot columns strictly
/// increasing, pivots equal to one, zeros elsewhere in each pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSpace {
    width: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: PrimeField, rows: &[Vec<Fe>]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        Self::with_width(field, width, rows)
    }

    pub fn with_width(field: PrimeField, width: usize, rows: &[Vec<Fe>]) -> Result<Self> {
        for (row, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(Error::RaggedRows {
                    row,
                    expected: width,
                    got: r.len(),
                });
            }
        }
        let mut m: Vec<Vec<Fe>> = rows.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            if r == m.len() {
                break;
            }
            let Some(sel) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, sel);
            let inv = field.inv(m[r][col])?;
            for x in m[r].iter_mut() {
                *x = field.mul(*x, inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let s = field.neg(row[col]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.add(*x, field.mul(s, y));
                }
            }
            pivots.push(col);
            r += 1;
        }
        m.truncate(r);
        Ok(Self {
            width,
            rows: m,
            pivots,
        })
    }

    pub fn from_elements(field: PrimeField, elems: &[AlgebraElement]) -> Result<Self> {
        let rows: Vec<Vec<Fe>> = elems.iter().map(|e| e.coeffs().to_vec()).collect();
        Self::new(field, &rows)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, field: PrimeField, v: &[Fe]) -> bool {
        if v.len() != self.width {
            return false;
        }
        let mut w = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let s = w[col];
            if s.is_zero() {
                continue;
            }
            let s = field.neg(s);
            for (x, &y) in w.iter_mut().zip(row) {
                *x = field.add(*x, field.mul(s, y));
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, field: PrimeField, other: &RowSpace) -> bool {
        self.rows.iter().all(|r| other.contains(field, r))
    }
}

pub fn rank(field: PrimeField, rows: &[Vec<Fe>]) -> Result<usize> {
    Ok(RowSpace::new(field, rows)?.rank())
}

pub fn row_space_equal(field: PrimeField, a: &[Vec<Fe>], b: &[Vec<Fe>]) -> Result<bool> {
    let width = a.first().or(b.first()).map_or(0, |r| r.len());
    Ok(RowSpace::with_width(field, width, a)? == RowSpace::with_width(field, width, b)?)
}

/// Row-space equality of two codes.
pub fn same_code(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch);
    }
    Ok(a.row_space()? == b.row_space()?)
}

/// Row-space containment `a <= b`.
pub fn is_subcode(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch);
    }
    let field = a.ctx().field();
    Ok(a.row_space()?.is_subspace_of(field, &b.row_space()?))
}

fn check_bound(p: u8, k: usize, bound_log2: u32) -> Result<()> {
    let bits = (p as f64).log2() * k as f64;
    if bits > bound_log2 as f64 + 1e-9 {
        return Err(Error::EnumerationTooLarge { p, k, bound_log2 });
    }
    Ok(())
}

/// Whether `p^k <= 2^bound_log2`.
pub fn within_bound(p: u8, k: usize, bound_log2: u32) -> bool {
    check_bound(p, k, bound_log2).is_ok()
}

/// Visits every codeword in ascending message order (message read as a
/// base-p number, symbol 0 least significant). Each step adds one generator
/// row per message symbol that changes, so most steps cost a single row add.
/// The visitor returns `false` to stop early.
pub fn for_each_codeword<F>(code: &LinearCode, bound_log2: u32, mut visit: F) -> Result<()>
where
    F: FnMut(&[Fe], &[Fe]) -> bool,
{
    let ctx = code.ctx();
    let field = ctx.field();
    let k = code.dimension();
    check_bound(ctx.p(), k, bound_log2)?;
    let rows = code.rows();
    let mut msg = vec![Fe::ZERO; k];
    let mut word = vec![Fe::ZERO; ctx.len()];
    let p = ctx.p();
    loop {
        if !visit(&msg, &word) {
            return Ok(());
        }
        // odometer increment; a digit wrapping p-1 -> 0 is also +1 times its row
        let mut j = 0;
        loop {
            if j == k {
                return Ok(());
            }
            for (x, &y) in word.iter_mut().zip(rows[j].coeffs()) {
                *x = field.add(*x, y);
            }
            let next = msg[j].value() + 1;
            if next < p {
                msg[j] = Fe(next);
                break;
            }
            msg[j] = Fe::ZERO;
            j += 1;
        }
    }
}

fn weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Minimum Hamming weight over all nonzero codewords. The zero code has no
/// nonzero codeword and reports `None`.
pub fn min_distance_bruteforce(code: &LinearCode) -> Result<Option<usize>> {
    min_distance_bounded(code, ENUMERATION_BOUND_LOG2)
}

pub fn min_distance_bounded(code: &LinearCode, bound_log2: u32) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    let mut first = true;
    for_each_codeword(code, bound_log2, |_, word| {
        if first {
            first = false;
            return true;
        }
        let w = weight(word);
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        true
    })?;
    Ok(best)
}

/// Result of exhaustive nearest-codeword search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub codeword: AlgebraElement,
    pub message: Vec<Fe>,
    pub distance: usize,
}

/// Codeword closest to `v` in Hamming distance; ties go to the smallest
/// message in enumeration order.
pub fn nearest_codeword(code: &LinearCode, v: &AlgebraElement) -> Result<Nearest> {
    if v.ctx() != code.ctx() {
        return Err(Error::ContextMismatch);
    }
    let target = v.coeffs();
    let mut best: Option<(usize, Vec<Fe>, Vec<Fe>)> = None;
    for_each_codeword(code, ENUMERATION_BOUND_LOG2, |msg, word| {
        let dist = word.iter().zip(target).filter(|(a, b)| a != b).count();
        if best.as_ref().is_none_or(|(d, _, _)| dist < *d) {
            best = Some((dist, msg.to_vec(), word.to_vec()));
        }
        true
    })?;
    let (distance, message, word) = best.expect("the zero codeword is always visited");
    Ok(Nearest {
        codeword: AlgebraElement::from_coeffs_unchecked(code.ctx(), word),
        message,
        distance,
    })
}
