use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use super::{CurveParams, FixedBaseTable, JacobianError, MumfordDivisor};
use crate::field::is_probable_prime;

/// Public system parameters: the curve, a base divisor `R` and its prime
/// order `r`. The group order is supplied by the caller, never computed here.
#[derive(Clone, Debug)]
pub struct DomainParams {
    curve: CurveParams,
    base: MumfordDivisor,
    order: BigUint,
    base_table: Arc<OnceLock<FixedBaseTable>>,
}

impl PartialEq for DomainParams {
    fn eq(&self, other: &Self) -> bool {
        self.curve == other.curve && self.base == other.base && self.order == other.order
    }
}

impl Eq for DomainParams {}

impl DomainParams {
    /// Checks that `R` is a valid non-identity divisor, `r` is prime and `r R = 0`.
    pub fn new(
        curve: CurveParams,
        base: MumfordDivisor,
        order: BigUint,
    ) -> Result<Self, JacobianError> {
        curve.validate_divisor(&base)?;
        if base.is_identity() {
            return Err(JacobianError::BaseIsIdentity);
        }
        if !is_probable_prime(&order) {
            return Err(JacobianError::OrderNotPrime(order));
        }
        if !curve.scalar_mul(&order, &base).is_identity() {
            return Err(JacobianError::OrderMismatch);
        }
        Ok(DomainParams {
            curve,
            base,
            order,
            base_table: Arc::new(OnceLock::new()),
        })
    }

    pub fn curve(&self) -> &CurveParams {
        &self.curve
    }

    /// The base divisor `R`.
    pub fn base(&self) -> &MumfordDivisor {
        &self.base
    }

    /// The prime order `r` of `R`.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Byte width of scalars modulo `r`.
    pub fn scalar_len(&self) -> usize {
        self.order.bits().div_ceil(8) as usize
    }

    /// `n R`, through a table built on first use.
    pub fn mul_base(&self, n: &BigUint) -> MumfordDivisor {
        let table = self
            .base_table
            .get_or_init(|| FixedBaseTable::new(&self.curve, &self.base, self.order.bits()));
        table.mul(&self.curve, n)
    }

    /// Is `d` a valid divisor killed by `r`?
    pub fn in_prime_subgroup(&self, d: &MumfordDivisor) -> bool {
        self.curve.is_valid_divisor(d) && self.curve.scalar_mul(&self.order, d).is_identity()
    }
}
