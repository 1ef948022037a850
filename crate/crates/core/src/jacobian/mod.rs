//! The curve `y^2 + h(x) y = f(x)` and the group law on its Jacobian.
//!
//! Group elements are reduced divisors in Mumford form `(u, v)`; addition is
//! Cantor's composition and reduction, carried out with the full `h` term.

mod curve;
mod domain;
mod explicit;
mod genus2;
mod mumford;

use num_bigint::BigUint;
use thiserror::Error;

use crate::field::FieldError;

pub use curve::{CurveParams, Point};
pub use domain::DomainParams;
pub use explicit::{ExplicitDivisor, ExplicitForm};
pub use mumford::{FixedBaseTable, MumfordDivisor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JacobianError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("characteristic 2 (or p < 3) is not supported")]
    EvenCharacteristic,
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("{0}")]
    BadDegree(String),
    #[error("curve is singular: f + h^2/4 has a repeated root")]
    Singular,
    #[error("curve components live in different fields")]
    FieldMismatch,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("divisor is not reduced")]
    NotReduced,
    #[error("multiplicity configuration not supported")]
    UnsupportedMultiplicity,
    #[error("invalid Mumford divisor: {0}")]
    InvalidDivisor(&'static str),
    #[error("base divisor is the identity")]
    BaseIsIdentity,
    #[error("group order {0} is not prime")]
    OrderNotPrime(BigUint),
    #[error("r * R is not the identity")]
    OrderMismatch,
}
