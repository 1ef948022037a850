use num_bigint::BigUint;
use num_traits::Zero;

use super::{check_peer, draw_scalar, KeyPair, ProtocolError};
use crate::jacobian::{CurveParams, DomainParams, FixedBaseTable, MumfordDivisor};
use crate::poly::Polynomial;
use crate::scalar::ScalarSource;

const COUNTER_BITS: u32 = 16;

/// Ordered `(C1, C2)` pairs, one per message block, plus the plaintext length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext {
    chunks: Vec<(MumfordDivisor, MumfordDivisor)>,
    plaintext_len: u64,
}

impl Ciphertext {
    pub fn new(chunks: Vec<(MumfordDivisor, MumfordDivisor)>, plaintext_len: u64) -> Self {
        Ciphertext {
            chunks,
            plaintext_len,
        }
    }

    pub fn chunks(&self) -> &[(MumfordDivisor, MumfordDivisor)] {
        &self.chunks
    }

    pub fn plaintext_len(&self) -> u64 {
        self.plaintext_len
    }
}

/// `C1 = aR`, `C2 = M + aQ` with a fresh ephemeral `a`.
pub fn elgamal_encrypt_divisor<S: ScalarSource + ?Sized>(
    m: &MumfordDivisor,
    peer_public: &MumfordDivisor,
    dp: &DomainParams,
    rng: &mut S,
) -> Result<(MumfordDivisor, MumfordDivisor), ProtocolError> {
    if !dp.curve().is_valid_divisor(m) {
        return Err(ProtocolError::InvalidMessage);
    }
    check_peer(peer_public, dp)?;
    let a = draw_scalar(rng, dp)?;
    let c1 = dp.mul_base(&a);
    let c2 = dp.curve().add(m, &dp.curve().scalar_mul(&a, peer_public));
    Ok((c1, c2))
}

/// `M = C2 - b C1`.
pub fn elgamal_decrypt_divisor(
    ct: &(MumfordDivisor, MumfordDivisor),
    own: &KeyPair,
    dp: &DomainParams,
) -> Result<MumfordDivisor, ProtocolError> {
    let curve = dp.curve();
    if !curve.is_valid_divisor(&ct.0) || !curve.is_valid_divisor(&ct.1) {
        return Err(ProtocolError::InvalidCiphertext(
            "component is not a divisor on the curve",
        ));
    }
    Ok(curve.sub(&ct.1, &curve.scalar_mul(own.secret(), &ct.0)))
}

/// Bytes per embedded block: `ceil(bits(p) / 8) - 3`.
pub fn message_block_len(curve: &CurveParams) -> Result<usize, ProtocolError> {
    let bits = curve.field().bits();
    if bits < 32 {
        return Err(ProtocolError::FieldTooSmall(bits));
    }
    Ok(curve.field().byte_len() - 3)
}

/// Embeds `block` as the weight-one divisor `(X - x, y)` with
/// `x = block * 2^16 + j` for the least `j` putting a point above `x`.
pub fn encode_message_block(
    block: &[u8],
    curve: &CurveParams,
) -> Result<MumfordDivisor, ProtocolError> {
    let max = message_block_len(curve)?;
    if block.len() > max {
        return Err(ProtocolError::BlockTooLong {
            len: block.len(),
            max,
        });
    }
    let field = curve.field();
    let base = BigUint::from_bytes_be(block) << COUNTER_BITS;
    let two = field.element_u64(2);
    let half = two.inv().expect("odd characteristic");
    let four = field.element_u64(4);
    for j in 0..1u32 << COUNTER_BITS {
        let x = field.element(&(&base + j));
        let hx = curve.h().eval(&x).expect("same field");
        let fx = curve.f().eval(&x).expect("same field");
        let disc = &(&hx * &hx) + &(&four * &fx);
        let Some(root) = disc.sqrt() else { continue };
        let y = &(&root - &hx) * &half;
        let u = Polynomial::linear_root(&x);
        let v = Polynomial::constant(&y);
        return Ok(MumfordDivisor::new(u, v, curve).expect("point lies on the curve"));
    }
    Err(ProtocolError::EncodingFailed)
}

/// Inverse of [`encode_message_block`]; always returns a full-width block.
pub fn decode_message_block(
    d: &MumfordDivisor,
    curve: &CurveParams,
) -> Result<Vec<u8>, ProtocolError> {
    let width = message_block_len(curve)?;
    if d.u().degree() != Some(1) {
        return Err(ProtocolError::NotABlock);
    }
    let x = d.u().coeff(0).neg().value();
    let block = (x >> COUNTER_BITS).to_bytes_be();
    let block: &[u8] = if block == [0] { &[] } else { &block };
    if block.len() > width {
        return Err(ProtocolError::NotABlock);
    }
    let mut out = vec![0u8; width - block.len()];
    out.extend_from_slice(block);
    Ok(out)
}

/// Splits `msg` into blocks of [`message_block_len`] bytes and encrypts each
/// under its own ephemeral scalar.
pub fn elgamal_encrypt_bytes<S: ScalarSource + ?Sized>(
    msg: &[u8],
    peer_public: &MumfordDivisor,
    dp: &DomainParams,
    rng: &mut S,
) -> Result<Ciphertext, ProtocolError> {
    let curve = dp.curve();
    let width = message_block_len(curve)?;
    check_peer(peer_public, dp)?;
    let peer_table =
        (!msg.is_empty()).then(|| FixedBaseTable::new(curve, peer_public, dp.order().bits()));
    let mut chunks = Vec::with_capacity(msg.len().div_ceil(width));
    for block in msg.chunks(width) {
        let m = encode_message_block(block, curve)?;
        let a = draw_scalar(rng, dp)?;
        let shared = peer_table.as_ref().expect("non-empty").mul(curve, &a);
        chunks.push((dp.mul_base(&a), curve.add(&m, &shared)));
    }
    Ok(Ciphertext::new(chunks, msg.len() as u64))
}

pub fn elgamal_decrypt_bytes(
    ct: &Ciphertext,
    own: &KeyPair,
    dp: &DomainParams,
) -> Result<Vec<u8>, ProtocolError> {
    let curve = dp.curve();
    let width = message_block_len(curve)?;
    let len = usize::try_from(ct.plaintext_len())
        .map_err(|_| ProtocolError::InvalidCiphertext("plaintext length overflows"))?;
    if ct.chunks().len() != len.div_ceil(width) {
        return Err(ProtocolError::InvalidCiphertext(
            "chunk count does not match length",
        ));
    }
    let mut out = Vec::with_capacity(len);
    for chunk in ct.chunks() {
        let m = elgamal_decrypt_divisor(chunk, own, dp)?;
        let block = decode_message_block(&m, curve)
            .map_err(|_| ProtocolError::Integrity("chunk does not decode to a block"))?;
        // a short final block comes back left-padded with zeros
        let take = width.min(len - out.len());
        let (pad, data) = block.split_at(width - take);
        if pad.iter().any(|b| !b.is_zero()) {
            return Err(ProtocolError::Integrity("nonzero padding in final block"));
        }
        out.extend_from_slice(data);
    }
    Ok(out)
}
