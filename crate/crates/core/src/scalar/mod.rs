//! Exact scalars: cyclotomic reals, one quadratic extension on top, and
//! polynomials in symbolic parameters.

pub mod approx;
mod cyclo;
pub mod int;
mod poly;
mod quad;

pub use cyclo::{format_fixed, AlgScalar};
pub use poly::MPoly;
pub use quad::QuadExt;

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivideByZero,
    #[error("invalid Coxeter label {0}: labels must be at least 2")]
    InvalidLabel(i64),
    #[error("square-root radicand must be nonnegative")]
    NegativeRadicand,
    #[error("incompatible square-root radicands")]
    RadicandMismatch,
}

/// Commutative ring with exact equality; the determinant kernel needs nothing more.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Ring of real numbers with an exact sign oracle.
pub trait Real: Ring {
    fn sign(&self) -> i32;
    fn approx(&self) -> f64;
    /// Correctly rounded fixed-point decimal.
    fn decimal(&self, digits: u32) -> String;
    /// Exact human-readable expression.
    fn exact(&self) -> String;
}

/// Ring with exact division.
pub trait Field: Ring {
    fn try_div(&self, o: &Self) -> Result<Self, ScalarError>;
}

impl Ring for AlgScalar {
    fn zero() -> Self {
        AlgScalar::zero()
    }
    fn one() -> Self {
        AlgScalar::one()
    }
    fn from_i64(v: i64) -> Self {
        AlgScalar::from_i64(v)
    }
    fn is_zero(&self) -> bool {
        AlgScalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        AlgScalar::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
}

impl Real for AlgScalar {
    fn sign(&self) -> i32 {
        AlgScalar::sign(self)
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
    fn decimal(&self, digits: u32) -> String {
        self.to_float(digits)
    }
    fn exact(&self) -> String {
        self.exact_string()
    }
}

impl Field for AlgScalar {
    fn try_div(&self, o: &Self) -> Result<Self, ScalarError> {
        self.div(o)
    }
}

/// `2cos(π/m)`; `m < 2` is an invalid label.
pub fn two_cos_pi_over(m: i64) -> Result<AlgScalar, ScalarError> {
    if m < 2 {
        return Err(ScalarError::InvalidLabel(m));
    }
    let m = u32::try_from(m).map_err(|_| ScalarError::InvalidLabel(m))?;
    AlgScalar::two_cos_pi_over(m)
}
