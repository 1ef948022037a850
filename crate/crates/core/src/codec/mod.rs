//! Canonical byte encodings for every artifact, plus the text domain file.
//!
//! All integers are big-endian. Field elements occupy exactly
//! `ceil(bits(p) / 8)` bytes and scalars exactly `ceil(bits(r) / 8)` bytes.
//!
//! | artifact    | layout                                                        |
//! |-------------|---------------------------------------------------------------|
//! | polynomial  | count byte `n`, then `n` field elements, constant term first  |
//! | divisor     | `poly(u) ‖ poly(v)`                                           |
//! | public key  | divisor                                                       |
//! | secret key  | scalar                                                        |
//! | signature   | `divisor(Q) ‖ scalar(s)`                                      |
//! | ciphertext  | `"HECC1" ‖ 0x01 ‖ u64 length ‖ u32 count ‖ (C1 ‖ C2)*`        |

mod domain_file;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::field::{FieldElement, FieldError, PrimeField};
use crate::jacobian::{CurveParams, DomainParams, JacobianError, MumfordDivisor};
use crate::poly::Polynomial;
use crate::protocols::{Ciphertext, Signature};

pub use domain_file::{read_domain_file, write_domain_file};

pub const CIPHERTEXT_MAGIC: &[u8; 5] = b"HECC1";
pub const CIPHERTEXT_VERSION: u8 = 0x01;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("input truncated")]
    Truncated,
    #[error("{0} unexpected trailing bytes")]
    TrailingBytes(usize),
    #[error("bad ciphertext magic")]
    BadMagic,
    #[error("unsupported ciphertext version {0:#04x}")]
    UnsupportedVersion(u8),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("polynomial encoding has a zero leading coefficient")]
    NonCanonicalPolynomial,
    #[error("polynomial of degree {0} cannot be encoded (at most 255 coefficients)")]
    PolynomialTooLong(usize),
    #[error(transparent)]
    Divisor(#[from] JacobianError),
    #[error("scalar must lie in [1, r - 1]")]
    ScalarOutOfRange,
    #[error("ciphertext declares {declared} chunks but holds {found}")]
    ChunkCount { declared: u64, found: u64 },
    #[error("domain file line {line}: {msg}")]
    DomainFile { line: usize, msg: String },
    #[error("domain file is missing `{0}`")]
    MissingKey(&'static str),
}

/// Cursor over an input buffer with truncation checks.
struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(buf: &'a [u8]) -> Self {
        Reader { buf, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], CodecError> {
        let end = self.pos.checked_add(n).ok_or(CodecError::Truncated)?;
        let out = self.buf.get(self.pos..end).ok_or(CodecError::Truncated)?;
        self.pos = end;
        Ok(out)
    }

    fn u8(&mut self) -> Result<u8, CodecError> {
        Ok(self.take(1)?[0])
    }

    fn finish(&self) -> Result<(), CodecError> {
        match self.buf.len() - self.pos {
            0 => Ok(()),
            n => Err(CodecError::TrailingBytes(n)),
        }
    }
}

pub fn encode_field_element(e: &FieldElement) -> Vec<u8> {
    e.to_bytes_be()
}

fn read_field_element(r: &mut Reader<'_>, field: &PrimeField) -> Result<FieldElement, CodecError> {
    let bytes = r.take(field.byte_len())?;
    Ok(field.try_element(&BigUint::from_bytes_be(bytes))?)
}

pub fn decode_field_element(bytes: &[u8], field: &PrimeField) -> Result<FieldElement, CodecError> {
    let mut r = Reader::new(bytes);
    let e = read_field_element(&mut r, field)?;
    r.finish()?;
    Ok(e)
}

fn write_polynomial(out: &mut Vec<u8>, p: &Polynomial) -> Result<(), CodecError> {
    let coeffs = p.coefficients();
    let n = u8::try_from(coeffs.len()).map_err(|_| CodecError::PolynomialTooLong(coeffs.len()))?;
    out.push(n);
    for c in &coeffs {
        out.extend_from_slice(&c.to_bytes_be());
    }
    Ok(())
}

pub fn encode_polynomial(p: &Polynomial) -> Result<Vec<u8>, CodecError> {
    let mut out = Vec::new();
    write_polynomial(&mut out, p)?;
    Ok(out)
}

fn read_polynomial(r: &mut Reader<'_>, field: &PrimeField) -> Result<Polynomial, CodecError> {
    let n = r.u8()? as usize;
    let coeffs = (0..n)
        .map(|_| read_field_element(r, field))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.last().is_some_and(FieldElement::is_zero) {
        return Err(CodecError::NonCanonicalPolynomial);
    }
    Ok(Polynomial::from_elements(field, &coeffs).expect("same field"))
}

pub fn decode_polynomial(bytes: &[u8], field: &PrimeField) -> Result<Polynomial, CodecError> {
    let mut r = Reader::new(bytes);
    let p = read_polynomial(&mut r, field)?;
    r.finish()?;
    Ok(p)
}

fn write_divisor(out: &mut Vec<u8>, d: &MumfordDivisor) {
    // deg u <= g keeps both counts far below 255 for any supported genus
    write_polynomial(out, d.u()).expect("divisor polynomials are short");
    write_polynomial(out, d.v()).expect("divisor polynomials are short");
}

pub fn encode_divisor(d: &MumfordDivisor) -> Vec<u8> {
    let mut out = Vec::new();
    write_divisor(&mut out, d);
    out
}

fn read_divisor(r: &mut Reader<'_>, curve: &CurveParams) -> Result<MumfordDivisor, CodecError> {
    let u = read_polynomial(r, curve.field())?;
    let v = read_polynomial(r, curve.field())?;
    Ok(MumfordDivisor::new(u, v, curve)?)
}

/// Rejects anything that is not a valid reduced divisor on `curve`.
pub fn decode_divisor(bytes: &[u8], curve: &CurveParams) -> Result<MumfordDivisor, CodecError> {
    let mut r = Reader::new(bytes);
    let d = read_divisor(&mut r, curve)?;
    r.finish()?;
    Ok(d)
}

/// Fixed-width encoding of a scalar modulo `r`.
pub fn encode_scalar(n: &BigUint, dp: &DomainParams) -> Vec<u8> {
    let width = dp.scalar_len();
    let bytes = n.to_bytes_be();
    let mut out = vec![0u8; width];
    if !n.is_zero() {
        out[width - bytes.len()..].copy_from_slice(&bytes);
    }
    out
}

fn read_scalar(r: &mut Reader<'_>, dp: &DomainParams) -> Result<BigUint, CodecError> {
    let n = BigUint::from_bytes_be(r.take(dp.scalar_len())?);
    if n.is_zero() || &n >= dp.order() {
        return Err(CodecError::ScalarOutOfRange);
    }
    Ok(n)
}

/// Scalar in `[1, r - 1]`.
pub fn decode_scalar(bytes: &[u8], dp: &DomainParams) -> Result<BigUint, CodecError> {
    let mut r = Reader::new(bytes);
    let n = read_scalar(&mut r, dp)?;
    r.finish()?;
    Ok(n)
}

pub fn encode_signature(sig: &Signature, dp: &DomainParams) -> Vec<u8> {
    let mut out = encode_divisor(sig.commitment());
    out.extend_from_slice(&encode_scalar(sig.s(), dp));
    out
}

pub fn decode_signature(bytes: &[u8], dp: &DomainParams) -> Result<Signature, CodecError> {
    let mut r = Reader::new(bytes);
    let q = read_divisor(&mut r, dp.curve())?;
    let s = read_scalar(&mut r, dp)?;
    r.finish()?;
    Ok(Signature::new(q, s))
}

pub fn encode_ciphertext(ct: &Ciphertext) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(CIPHERTEXT_MAGIC);
    out.push(CIPHERTEXT_VERSION);
    out.extend_from_slice(&ct.plaintext_len().to_be_bytes());
    out.extend_from_slice(&(ct.chunks().len() as u32).to_be_bytes());
    for (c1, c2) in ct.chunks() {
        write_divisor(&mut out, c1);
        write_divisor(&mut out, c2);
    }
    out
}

pub fn decode_ciphertext(bytes: &[u8], curve: &CurveParams) -> Result<Ciphertext, CodecError> {
    let mut r = Reader::new(bytes);
    if r.take(CIPHERTEXT_MAGIC.len())? != CIPHERTEXT_MAGIC {
        return Err(CodecError::BadMagic);
    }
    let version = r.u8()?;
    if version != CIPHERTEXT_VERSION {
        return Err(CodecError::UnsupportedVersion(version));
    }
    let len = u64::from_be_bytes(r.take(8)?.try_into().expect("8 bytes"));
    let count = u32::from_be_bytes(r.take(4)?.try_into().expect("4 bytes"));
    let mut chunks = Vec::new();
    for _ in 0..count {
        let c1 = read_divisor(&mut r, curve)?;
        let c2 = read_divisor(&mut r, curve)?;
        chunks.push((c1, c2));
    }
    r.finish()?;
    Ok(Ciphertext::new(chunks, len))
}

/// Tag naming what an encoded byte string holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArtifactKind {
    FieldElement,
    Polynomial,
    Divisor,
    PublicKey,
    SecretKey,
    Ciphertext,
    Signature,
    DomainParams,
}

/// Any encodable value, tagged by kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    FieldElement(FieldElement),
    Polynomial(Polynomial),
    Divisor(MumfordDivisor),
    PublicKey(MumfordDivisor),
    SecretKey(BigUint),
    Ciphertext(Ciphertext),
    Signature(Signature),
    DomainParams(DomainParams),
}

impl Artifact {
    pub fn kind(&self) -> ArtifactKind {
        match self {
            Artifact::FieldElement(_) => ArtifactKind::FieldElement,
            Artifact::Polynomial(_) => ArtifactKind::Polynomial,
            Artifact::Divisor(_) => ArtifactKind::Divisor,
            Artifact::PublicKey(_) => ArtifactKind::PublicKey,
            Artifact::SecretKey(_) => ArtifactKind::SecretKey,
            Artifact::Ciphertext(_) => ArtifactKind::Ciphertext,
            Artifact::Signature(_) => ArtifactKind::Signature,
            Artifact::DomainParams(_) => ArtifactKind::DomainParams,
        }
    }

    /// `context` supplies p and r; a domain-parameter artifact is written as
    /// its text file.
    pub fn encode(&self, context: &DomainParams) -> Result<Vec<u8>, CodecError> {
        Ok(match self {
            Artifact::FieldElement(e) => encode_field_element(e),
            Artifact::Polynomial(p) => encode_polynomial(p)?,
            Artifact::Divisor(d) | Artifact::PublicKey(d) => encode_divisor(d),
            Artifact::SecretKey(n) => encode_scalar(n, context),
            Artifact::Ciphertext(ct) => encode_ciphertext(ct),
            Artifact::Signature(sig) => encode_signature(sig, context),
            Artifact::DomainParams(dp) => write_domain_file(dp).into_bytes(),
        })
    }

    pub fn decode(
        kind: ArtifactKind,
        bytes: &[u8],
        context: &DomainParams,
    ) -> Result<Artifact, CodecError> {
        let curve = context.curve();
        Ok(match kind {
            ArtifactKind::FieldElement => {
                Artifact::FieldElement(decode_field_element(bytes, curve.field())?)
            }
            ArtifactKind::Polynomial => {
                Artifact::Polynomial(decode_polynomial(bytes, curve.field())?)
            }
            ArtifactKind::Divisor => Artifact::Divisor(decode_divisor(bytes, curve)?),
            ArtifactKind::PublicKey => Artifact::PublicKey(decode_divisor(bytes, curve)?),
            ArtifactKind::SecretKey => Artifact::SecretKey(decode_scalar(bytes, context)?),
            ArtifactKind::Ciphertext => Artifact::Ciphertext(decode_ciphertext(bytes, curve)?),
            ArtifactKind::Signature => Artifact::Signature(decode_signature(bytes, context)?),
            ArtifactKind::DomainParams => {
                let text = std::str::from_utf8(bytes).map_err(|_| CodecError::DomainFile {
                    line: 0,
                    msg: "not UTF-8".into(),
                })?;
                Artifact::DomainParams(read_domain_file(text)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7_curve() -> CurveParams {
        CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 1], &[]).unwrap()
    }

    fn div(c: &CurveParams, u: &[u64], v: &[u64]) -> MumfordDivisor {
        MumfordDivisor::new(
            Polynomial::from_u64s(c.field(), u),
            Polynomial::from_u64s(c.field(), v),
            c,
        )
        .unwrap()
    }

    #[test]
    fn identity_encoding_is_fixed() {
        let c = f7_curve();
        assert_eq!(encode_divisor(&c.identity()), vec![1, 1, 0]);
        let big = CurveParams::from_u64s(65537, 2, &[1, 3, 0, 0, 0, 1], &[]).unwrap();
        assert_eq!(encode_divisor(&big.identity()), vec![1, 0, 0, 1, 0]);
    }

    #[test]
    fn divisor_golden_bytes() {
        let c = f7_curve();
        let d = div(&c, &[0, 5, 1], &[1, 4]);
        assert_eq!(encode_divisor(&d), vec![3, 0, 5, 1, 2, 1, 4]);
        assert_eq!(decode_divisor(&[3, 0, 5, 1, 2, 1, 4], &c).unwrap(), d);
    }

    #[test]
    fn decode_rejections() {
        let c = f7_curve();
        // truncated
        assert_eq!(decode_divisor(&[3, 0, 5], &c), Err(CodecError::Truncated));
        // non-canonical element (7 >= p)
        assert!(matches!(
            decode_divisor(&[2, 7, 1, 1, 1], &c),
            Err(CodecError::Field(FieldError::NonCanonical(_)))
        ));
        // leading zero coefficient
        assert_eq!(
            decode_divisor(&[3, 0, 1, 0, 0], &c),
            Err(CodecError::NonCanonicalPolynomial)
        );
        // u not monic
        assert!(matches!(
            decode_divisor(&[2, 0, 2, 1, 1], &c),
            Err(CodecError::Divisor(JacobianError::InvalidDivisor(_)))
        ));
        // deg v >= deg u
        assert!(matches!(
            decode_divisor(&[2, 0, 1, 2, 1, 1], &c),
            Err(CodecError::Divisor(JacobianError::InvalidDivisor(_)))
        ));
        // membership failure: (0, 2) is off the curve
        assert!(matches!(
            decode_divisor(&[2, 0, 1, 1, 2], &c),
            Err(CodecError::Divisor(JacobianError::InvalidDivisor(_)))
        ));
        // trailing garbage
        assert_eq!(
            decode_divisor(&[1, 1, 0, 9], &c),
            Err(CodecError::TrailingBytes(1))
        );
    }

    #[test]
    fn ciphertext_header_checks() {
        let c = f7_curve();
        let ct = Ciphertext::new(vec![(c.identity(), div(&c, &[0, 1], &[1]))], 1);
        let bytes = encode_ciphertext(&ct);
        assert_eq!(&bytes[..6], b"HECC1\x01");
        assert_eq!(&bytes[6..14], &1u64.to_be_bytes());
        assert_eq!(&bytes[14..18], &1u32.to_be_bytes());
        assert_eq!(decode_ciphertext(&bytes, &c).unwrap(), ct);

        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert_eq!(decode_ciphertext(&bad, &c), Err(CodecError::BadMagic));
        let mut bad = bytes.clone();
        bad[5] = 2;
        assert_eq!(
            decode_ciphertext(&bad, &c),
            Err(CodecError::UnsupportedVersion(2))
        );
        assert_eq!(
            decode_ciphertext(&bytes[..bytes.len() - 1], &c),
            Err(CodecError::Truncated)
        );
    }
}
