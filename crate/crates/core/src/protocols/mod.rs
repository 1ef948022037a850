//! Diffie-Hellman, ElGamal and DSA-style signatures over a [`DomainParams`].

mod elgamal;
mod signature;

use num_bigint::BigUint;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::codec::encode_divisor;
use crate::jacobian::{DomainParams, MumfordDivisor};
use crate::scalar::ScalarSource;

pub use elgamal::{
    decode_message_block, elgamal_decrypt_bytes, elgamal_decrypt_divisor, elgamal_encrypt_bytes,
    elgamal_encrypt_divisor, encode_message_block, message_block_len, Ciphertext,
};
pub use signature::{
    recover_key_from_reused_nonce, sign, verify, NonceMode, RejectReason, Signature, Verdict,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProtocolError {
    #[error("group order r = {0} admits no scalar range")]
    OrderTooSmall(BigUint),
    #[error("scalar {0} is outside [1, r - 1]")]
    ScalarOutOfRange(BigUint),
    #[error("invalid peer public key: {0}")]
    InvalidPeer(&'static str),
    #[error("invalid message divisor")]
    InvalidMessage,
    #[error("invalid ciphertext: {0}")]
    InvalidCiphertext(&'static str),
    #[error("message embedding needs a prime of at least 32 bits (p has {0})")]
    FieldTooSmall(u64),
    #[error("block of {len} bytes exceeds the {max}-byte limit")]
    BlockTooLong { len: usize, max: usize },
    #[error("no embeddable x found for block")]
    EncodingFailed,
    #[error("divisor does not carry a message block")]
    NotABlock,
    #[error("decrypted payload failed integrity checks: {0}")]
    Integrity(&'static str),
}

/// A secret scalar `a` with its public divisor `P = aR`.
#[derive(Clone, PartialEq, Eq)]
pub struct KeyPair {
    secret: BigUint,
    public: MumfordDivisor,
}

impl std::fmt::Debug for KeyPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KeyPair")
            .field("public", &self.public)
            .finish_non_exhaustive()
    }
}

impl KeyPair {
    pub fn from_secret(secret: BigUint, dp: &DomainParams) -> Result<Self, ProtocolError> {
        check_scalar(&secret, dp)?;
        let public = dp.mul_base(&secret);
        Ok(KeyPair { secret, public })
    }

    pub fn secret(&self) -> &BigUint {
        &self.secret
    }

    pub fn public(&self) -> &MumfordDivisor {
        &self.public
    }
}

/// The Diffie-Hellman output `S`. `degenerate` is set when the peer key was
/// the identity, so `S` is the identity regardless of either secret.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedSecret {
    pub divisor: MumfordDivisor,
    pub degenerate: bool,
}

fn check_order(dp: &DomainParams) -> Result<(), ProtocolError> {
    if dp.order() < &BigUint::from(3u32) {
        return Err(ProtocolError::OrderTooSmall(dp.order().clone()));
    }
    Ok(())
}

fn check_scalar(n: &BigUint, dp: &DomainParams) -> Result<(), ProtocolError> {
    check_order(dp)?;
    if n == &BigUint::default() || n >= dp.order() {
        return Err(ProtocolError::ScalarOutOfRange(n.clone()));
    }
    Ok(())
}

fn draw_scalar<S: ScalarSource + ?Sized>(
    rng: &mut S,
    dp: &DomainParams,
) -> Result<BigUint, ProtocolError> {
    check_order(dp)?;
    let n = rng.scalar(dp.order());
    check_scalar(&n, dp)?;
    Ok(n)
}

fn check_peer(peer: &MumfordDivisor, dp: &DomainParams) -> Result<(), ProtocolError> {
    if !dp.curve().is_valid_divisor(peer) {
        return Err(ProtocolError::InvalidPeer(
            "not a reduced divisor on the curve",
        ));
    }
    if !dp.curve().scalar_mul(dp.order(), peer).is_identity() {
        return Err(ProtocolError::InvalidPeer("order does not divide r"));
    }
    Ok(())
}

/// Uniform `a` in `[1, r - 1]` and `P = aR`.
pub fn keygen<S: ScalarSource + ?Sized>(
    dp: &DomainParams,
    rng: &mut S,
) -> Result<KeyPair, ProtocolError> {
    let secret = draw_scalar(rng, dp)?;
    KeyPair::from_secret(secret, dp)
}

/// `S = a Q` after checking that `Q` is a valid divisor of order dividing r.
pub fn dh_shared(
    own: &KeyPair,
    peer_public: &MumfordDivisor,
    dp: &DomainParams,
) -> Result<SharedSecret, ProtocolError> {
    check_peer(peer_public, dp)?;
    Ok(SharedSecret {
        divisor: dp.curve().scalar_mul(&own.secret, peer_public),
        degenerate: peer_public.is_identity(),
    })
}

/// Leftmost 160 bits of SHA-256, as a big-endian integer.
pub fn hash_to_int(m: &[u8]) -> BigUint {
    let digest = Sha256::digest(m);
    BigUint::from_bytes_be(&digest[..20])
}

/// The canonical encoding of `d` read as a big-endian integer, reduced mod r.
pub fn phi(d: &MumfordDivisor, dp: &DomainParams) -> BigUint {
    if d.is_identity() {
        return BigUint::default();
    }
    BigUint::from_bytes_be(&encode_divisor(d)) % dp.order()
}
