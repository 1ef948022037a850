//! Sources of random integers for key generation, ephemeral scalars and
//! test-divisor sampling.

use std::collections::VecDeque;

use num_bigint::{BigUint, RandBigInt};
use num_traits::One;

pub trait ScalarSource {
    /// An integer in `[0, bound)`.
    fn below(&mut self, bound: &BigUint) -> BigUint;

    /// A scalar in `[1, r - 1]`.
    fn scalar(&mut self, r: &BigUint) -> BigUint {
        self.below(&(r - 1u32)) + 1u32
    }
}

impl<R: rand::RngCore + ?Sized> ScalarSource for R {
    fn below(&mut self, bound: &BigUint) -> BigUint {
        self.gen_biguint_below(bound)
    }
}

/// Replays a fixed sequence. `below` reduces each value modulo the bound;
/// `scalar` hands values out verbatim so tests can force exact scalars
/// (including out-of-range ones, which the protocols must reject).
///
/// Panics when exhausted.
#[derive(Clone, Debug, Default)]
pub struct PinnedSource {
    values: VecDeque<BigUint>,
}

impl PinnedSource {
    pub fn new<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        PinnedSource {
            values: values.into_iter().map(Into::into).collect(),
        }
    }

    pub fn push(&mut self, v: impl Into<BigUint>) {
        self.values.push_back(v.into());
    }

    pub fn remaining(&self) -> usize {
        self.values.len()
    }

    fn next(&mut self) -> BigUint {
        self.values
            .pop_front()
            .expect("pinned scalar source exhausted")
    }
}

impl ScalarSource for PinnedSource {
    fn below(&mut self, bound: &BigUint) -> BigUint {
        if bound.is_one() {
            // nothing to choose; do not consume
            return BigUint::default();
        }
        self.next() % bound
    }

    fn scalar(&mut self, _r: &BigUint) -> BigUint {
        self.next()
    }
}
