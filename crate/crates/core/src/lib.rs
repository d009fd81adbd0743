//! Generalized, weighted and homogeneous Reed-Muller codes realised inside the
//! modular algebra `A = F_p[X_0, .., X_{m-1}] / (X_0^p - 1, .., X_{m-1}^p - 1)`.
//!
//! Elements of `A` are identified with vectors of `F_p^{p^m}` through the
//! little-endian p-adic index `i = sum_k i_k p^k`. Codes are built both from
//! evaluations of monomials and from products of Jennings elements
//! `(x_k - 1)^{i_k}`; the [`oracle`] module checks the two against each other
//! and against the closed-form parameters. Binary homogeneous codes come with
//! a threshold decoder in [`decoder`].

pub mod algebra;
pub mod codes;
pub mod decoder;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod poly;

pub use algebra::{AlgebraContext, AlgebraElement, ExponentTuple, SubsetMask};
pub use codes::{CodeParams, Construction, LinearCode};
pub use decoder::{DecodeResult, DecodeStatus};
pub use error::{Error, Result};
pub use gf::{Fe, PrimeField};
pub use poly::{ReducedPolynomial, WeightProfile, WeightedDegree};
