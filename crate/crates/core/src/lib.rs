//! Hyperelliptic curve cryptography over odd prime fields.
//!
//! Jacobian arithmetic on Mumford-represented divisors (Cantor's algorithm)
//! and three schemes built on it: Diffie-Hellman key agreement, ElGamal
//! encryption and DSA-style signatures.

pub mod codec;
pub mod field;
pub mod jacobian;
pub mod oracle;
pub mod poly;
pub mod protocols;
pub mod scalar;

pub use field::{FieldElement, PrimeField};
pub use jacobian::{
    CurveParams, DomainParams, ExplicitDivisor, ExplicitForm, MumfordDivisor, Point,
};
pub use poly::Polynomial;
pub use protocols::{Ciphertext, KeyPair, SharedSecret, Signature};
pub use scalar::{PinnedSource, ScalarSource};
