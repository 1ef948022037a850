use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use sha2::{Digest, Sha256};

use super::{check_order, check_scalar, hash_to_int, phi, KeyPair, ProtocolError};
use crate::codec::encode_scalar;
use crate::field::inv_big;
use crate::jacobian::{DomainParams, MumfordDivisor};
use crate::scalar::ScalarSource;

/// `(Q, s)`; the message travels separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    q: MumfordDivisor,
    s: BigUint,
}

impl Signature {
    pub fn new(q: MumfordDivisor, s: BigUint) -> Self {
        Signature { q, s }
    }

    /// The commitment `Q = kR`.
    pub fn commitment(&self) -> &MumfordDivisor {
        &self.q
    }

    pub fn s(&self) -> &BigUint {
        &self.s
    }
}

/// Where the per-signature nonce `k` comes from.
pub enum NonceMode<'a> {
    /// `k = 1 + (SHA-256(enc(a) || SHA-256(m) [|| counter]) mod (r - 1))`.
    /// The 4-byte counter is appended only on retries.
    Deterministic,
    Random(&'a mut dyn ScalarSource),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    ScalarOutOfRange,
    CommitmentIdentity,
    MalformedCommitment,
    InvalidPublicKey,
    EquationMismatch,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RejectReason::ScalarOutOfRange => "s outside [1, r - 1]",
            RejectReason::CommitmentIdentity => "commitment is the identity",
            RejectReason::MalformedCommitment => "commitment is not a divisor on the curve",
            RejectReason::InvalidPublicKey => "signer key is not in the order-r subgroup",
            RejectReason::EquationMismatch => "V != Q",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

fn deterministic_nonce(own: &KeyPair, m: &[u8], dp: &DomainParams, counter: u32) -> BigUint {
    let mut hasher = Sha256::new();
    hasher.update(encode_scalar(own.secret(), dp));
    hasher.update(Sha256::digest(m));
    if counter > 0 {
        hasher.update(counter.to_be_bytes());
    }
    let r1 = dp.order() - 1u32;
    BigUint::from_bytes_be(&hasher.finalize()) % r1 + 1u32
}

/// `Q = kR`, `s = k^-1 (H(m) + a phi(Q)) mod r`. A nonce giving `s = 0` or
/// `phi(Q) = 0` is discarded and a new one drawn.
pub fn sign(
    m: &[u8],
    own: &KeyPair,
    dp: &DomainParams,
    mut nonce: NonceMode<'_>,
) -> Result<Signature, ProtocolError> {
    check_order(dp)?;
    let r = dp.order();
    let h = hash_to_int(m);
    for counter in 0u32.. {
        let k = match &mut nonce {
            NonceMode::Deterministic => deterministic_nonce(own, m, dp, counter),
            NonceMode::Random(src) => src.scalar(r),
        };
        check_scalar(&k, dp)?;
        let q = dp.mul_base(&k);
        let e = phi(&q, dp);
        if e.is_zero() {
            continue;
        }
        let k_inv = inv_big(&k, r).expect("r is prime");
        let s = (k_inv * (&h + own.secret() * &e)) % r;
        if s.is_zero() {
            continue;
        }
        return Ok(Signature { q, s });
    }
    unreachable!("nonce counter exhausted")
}

/// Accepts iff `s^-1 H(m) R + s^-1 phi(Q) P` equals `Q` coefficient for
/// coefficient. Malformed inputs are rejections, never errors.
pub fn verify(
    m: &[u8],
    sig: &Signature,
    signer_public: &MumfordDivisor,
    dp: &DomainParams,
) -> Verdict {
    let curve = dp.curve();
    let r = dp.order();
    if sig.s.is_zero() || &sig.s >= r {
        return Verdict::Reject(RejectReason::ScalarOutOfRange);
    }
    if !curve.is_valid_divisor(&sig.q) {
        return Verdict::Reject(RejectReason::MalformedCommitment);
    }
    if sig.q.is_identity() {
        return Verdict::Reject(RejectReason::CommitmentIdentity);
    }
    if !dp.in_prime_subgroup(signer_public) {
        return Verdict::Reject(RejectReason::InvalidPublicKey);
    }
    let w = inv_big(&sig.s, r).expect("r is prime");
    let v1 = (&w * hash_to_int(m)) % r;
    let v2 = (&w * phi(&sig.q, dp)) % r;
    let v = curve.add(&dp.mul_base(&v1), &curve.scalar_mul(&v2, signer_public));
    if v == sig.q {
        Verdict::Accept
    } else {
        Verdict::Reject(RejectReason::EquationMismatch)
    }
}

/// Recovers the signer's secret from two signatures on different messages
/// that share a nonce. Returns `None` if the pair does not expose it.
pub fn recover_key_from_reused_nonce(
    m1: &[u8],
    sig1: &Signature,
    m2: &[u8],
    sig2: &Signature,
    dp: &DomainParams,
) -> Option<BigUint> {
    if sig1.q != sig2.q {
        return None;
    }
    let r = dp.order();
    let sub = |a: &BigUint, b: &BigUint| ((a + r) - (b % r)) % r;
    // s_i k = H_i + a phi  =>  k = (H1 - H2) / (s1 - s2),  a = (s1 k - H1) / phi
    let h1 = hash_to_int(m1) % r;
    let h2 = hash_to_int(m2) % r;
    let ds = inv_big(&sub(&sig1.s, &sig2.s), r)?;
    let k = (sub(&h1, &h2) * ds) % r;
    let e_inv = inv_big(&phi(&sig1.q, dp), r)?;
    Some((sub(&((&sig1.s * &k) % r), &h1) * e_inv) % r)
}
