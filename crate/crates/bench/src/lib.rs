//! Shared inputs for the benchmarks.

use hecc_core::codec::read_domain_file;
use hecc_core::{CurveParams, DomainParams, Polynomial, PrimeField};
use num_bigint::BigUint;

/// Genus 2 over the 64-bit prime `2^64 - 95`, with a 119-bit subgroup.
pub fn demo64() -> DomainParams {
    read_domain_file(include_str!("../../core/tests/fixtures/demo64.dom")).expect("fixture parses")
}

/// `y^2 = x^5 + 3` over `2^127 - 1`. Too wide for the word-sized path, so it
/// measures generic Cantor arithmetic.
pub fn wide_curve() -> CurveParams {
    let p = (BigUint::from(1u32) << 127u32) - 1u32;
    let field = PrimeField::new(p).expect("Mersenne prime");
    let f = Polynomial::from_u64s(&field, &[3, 0, 0, 0, 0, 1]);
    CurveParams::new(field.clone(), 2, f, Polynomial::zero(&field)).expect("valid curve")
}
