//! Exact arithmetic layer: complex rationals, sparse polynomials, rational
//! functions, identity testing, and exact linear algebra.
//!
//! Everything in this module is exact; there is no floating-point fallback.
//! Floats only appear as one-way conversions out of the exact types.

mod linalg;
mod pit;
mod poly;
mod rational;
mod scalar;
mod vars;

pub use linalg::{nullspace, solve_affine, ExactMatrix};
pub use pit::{poly_identity_test, rational_identity_test, PitConfig, PitOutcome, Witness};
pub use poly::{Monomial, PolyFunction};
pub use rational::RationalFunction;
pub use scalar::ExactScalar;
pub use vars::{Letter, VarId};

use thiserror::Error;

/// Errors from the exact layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("division by exact zero")]
    DivisionByZero,
    #[error("evaluation point does not assign variable {0}")]
    UnassignedVariable(VarId),
    #[error("denominator vanishes at the evaluation point")]
    DenominatorZero,
    #[error("denominator polynomial is identically zero")]
    ZeroDenominator,
    #[error("term-count cap exceeded: {0} term products requested, cap is {1}")]
    CapExceeded(u64, u64),
    #[error("sampled {0} points without avoiding a denominator zero")]
    SamplingExhausted(u32),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("malformed scalar literal: {0:?}")]
    BadScalarLiteral(String),
}

/// Default cap on term-pair products in a single polynomial multiplication.
///
/// Guards against accidental term explosion in deep operator products; hitting
/// the cap is reported as [`ExactError::CapExceeded`], never a panic.
pub const DEFAULT_TERM_CAP: u64 = 10_000_000;
