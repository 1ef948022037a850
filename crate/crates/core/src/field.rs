//! Arithmetic in the prime field F_p.
//!
//! A [`PrimeField`] is a cheap, shareable handle on the modulus and the data
//! needed for square roots. Residues are stored as machine words when
//! `p < 2^64` and as [`BigUint`] otherwise; the representation never leaks
//! through the public API, which speaks [`BigUint`] and [`FieldElement`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not a prime")]
    NotPrime(BigUint),
    #[error("operands belong to different fields")]
    ModulusMismatch,
    #[error("zero has no multiplicative inverse")]
    NotInvertible,
    #[error("value {0} is not a canonical residue (must be < p)")]
    NonCanonical(BigUint),
}

/// Raw residue, always canonical (< p) for the field that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Raw {
    Small(u64),
    Big(BigUint),
}

struct Inner {
    p: BigUint,
    small: Option<u64>,
    byte_len: usize,
    // p - 1 = odd_part * 2^two_adicity
    two_adicity: u64,
    odd_part: BigUint,
    nonresidue: Option<BigUint>,
}

/// Handle on F_p. Clones share the same modulus data.
#[derive(Clone)]
pub struct PrimeField(Arc<Inner>);

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.p)
    }
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.p == other.0.p
    }
}

impl Eq for PrimeField {}

impl PrimeField {
    /// Builds F_p, rejecting composite moduli. `p = 2` is accepted here; curve
    /// validation is where characteristic 2 is refused.
    pub fn new(p: BigUint) -> Result<Self, FieldError> {
        if !is_probable_prime(&p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self::new_unchecked(p))
    }

    pub fn from_u64(p: u64) -> Result<Self, FieldError> {
        Self::new(BigUint::from(p))
    }

    fn new_unchecked(p: BigUint) -> Self {
        let small = p.to_u64();
        let byte_len = p.bits().div_ceil(8) as usize;
        let pm1 = &p - 1u32;
        let two_adicity = pm1.trailing_zeros().unwrap_or(0);
        let odd_part = &pm1 >> two_adicity;
        let nonresidue = if p > BigUint::from(2u32) {
            let half = &pm1 >> 1u32;
            let mut z = BigUint::from(2u32);
            while z.modpow(&half, &p) != pm1 {
                z += 1u32;
            }
            Some(z)
        } else {
            None
        };
        let field = Inner {
            p,
            small,
            byte_len,
            two_adicity,
            odd_part,
            nonresidue,
        };
        PrimeField(Arc::new(field))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.0.p
    }

    /// Width in bytes of the canonical big-endian encoding, `ceil(bits(p) / 8)`.
    pub fn byte_len(&self) -> usize {
        self.0.byte_len
    }

    pub fn bits(&self) -> u64 {
        self.0.p.bits()
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(self.raw_zero())
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(self.raw_one())
    }

    /// Reduces `v` modulo p.
    pub fn element(&self, v: &BigUint) -> FieldElement {
        self.wrap(self.raw_from_big(v))
    }

    pub fn element_u64(&self, v: u64) -> FieldElement {
        self.wrap(self.raw_from_u64(v))
    }

    /// Signed convenience constructor: `-1` maps to `p - 1`.
    pub fn element_i64(&self, v: i64) -> FieldElement {
        let e = self.element_u64(v.unsigned_abs());
        if v < 0 {
            e.neg()
        } else {
            e
        }
    }

    /// Accepts only canonical values `0 <= v < p`.
    pub fn try_element(&self, v: &BigUint) -> Result<FieldElement, FieldError> {
        if v >= &self.0.p {
            return Err(FieldError::NonCanonical(v.clone()));
        }
        Ok(self.element(v))
    }

    pub(crate) fn wrap(&self, raw: Raw) -> FieldElement {
        FieldElement {
            field: self.clone(),
            raw,
        }
    }

    // ---- raw arithmetic: callers guarantee residues come from this field ----

    pub(crate) fn raw_zero(&self) -> Raw {
        match self.0.small {
            Some(_) => Raw::Small(0),
            None => Raw::Big(BigUint::zero()),
        }
    }

    pub(crate) fn raw_one(&self) -> Raw {
        self.raw_from_u64(1)
    }

    pub(crate) fn raw_from_u64(&self, v: u64) -> Raw {
        match self.0.small {
            Some(p) => Raw::Small(v % p),
            None => Raw::Big(BigUint::from(v)),
        }
    }

    pub(crate) fn raw_from_big(&self, v: &BigUint) -> Raw {
        match self.0.small {
            Some(p) => Raw::Small((v % p).to_u64().unwrap_or(0)),
            None => Raw::Big(v % &self.0.p),
        }
    }

    pub(crate) fn raw_to_big(&self, a: &Raw) -> BigUint {
        match a {
            Raw::Small(x) => BigUint::from(*x),
            Raw::Big(x) => x.clone(),
        }
    }

    pub(crate) fn raw_is_zero(a: &Raw) -> bool {
        match a {
            Raw::Small(x) => *x == 0,
            Raw::Big(x) => x.is_zero(),
        }
    }

    pub(crate) fn raw_is_one(a: &Raw) -> bool {
        match a {
            Raw::Small(x) => *x == 1,
            Raw::Big(x) => x.is_one(),
        }
    }

    pub(crate) fn raw_add(&self, a: &Raw, b: &Raw) -> Raw {
        match (a, b, self.0.small) {
            (Raw::Small(a), Raw::Small(b), Some(p)) => {
                let (s, carry) = a.overflowing_add(*b);
                Raw::Small(if carry || s >= p {
                    s.wrapping_sub(p)
                } else {
                    s
                })
            }
            (Raw::Big(a), Raw::Big(b), None) => {
                let s = a + b;
                Raw::Big(if s >= self.0.p { s - &self.0.p } else { s })
            }
            _ => unreachable!("residue representation does not match field"),
        }
    }

    pub(crate) fn raw_sub(&self, a: &Raw, b: &Raw) -> Raw {
        match (a, b, self.0.small) {
            (Raw::Small(a), Raw::Small(b), Some(p)) => {
                Raw::Small(if a >= b { a - b } else { p - (b - a) })
            }
            (Raw::Big(a), Raw::Big(b), None) => {
                Raw::Big(if a >= b { a - b } else { &self.0.p - (b - a) })
            }
            _ => unreachable!("residue representation does not match field"),
        }
    }

    pub(crate) fn raw_neg(&self, a: &Raw) -> Raw {
        match (a, self.0.small) {
            (Raw::Small(0), _) => Raw::Small(0),
            (Raw::Small(a), Some(p)) => Raw::Small(p - a),
            (Raw::Big(a), None) => {
                if a.is_zero() {
                    Raw::Big(BigUint::zero())
                } else {
                    Raw::Big(&self.0.p - a)
                }
            }
            _ => unreachable!("residue representation does not match field"),
        }
    }

    pub(crate) fn raw_mul(&self, a: &Raw, b: &Raw) -> Raw {
        match (a, b, self.0.small) {
            (Raw::Small(a), Raw::Small(b), Some(p)) => {
                Raw::Small(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            (Raw::Big(a), Raw::Big(b), None) => Raw::Big((a * b) % &self.0.p),
            _ => unreachable!("residue representation does not match field"),
        }
    }

    /// Extended Euclid; `None` for zero.
    pub(crate) fn raw_inv(&self, a: &Raw) -> Option<Raw> {
        match (a, self.0.small) {
            (Raw::Small(a), Some(p)) => inv_u64(*a, p).map(Raw::Small),
            (Raw::Big(a), None) => inv_big(a, &self.0.p).map(Raw::Big),
            _ => unreachable!("residue representation does not match field"),
        }
    }

    /// Square-and-multiply, most significant bit first. `a^0 = 1` for every a.
    pub(crate) fn raw_pow(&self, a: &Raw, e: &BigUint) -> Raw {
        let mut acc = self.raw_one();
        for i in (0..e.bits()).rev() {
            acc = self.raw_mul(&acc, &acc);
            if e.bit(i) {
                acc = self.raw_mul(&acc, a);
            }
        }
        acc
    }
}

fn inv_u64(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
/// Works for any modulus; returns `None` when `gcd(a, m) != 1`.
pub fn inv_big(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    use num_bigint::BigInt;
    let a = a % m;
    if a.is_zero() {
        return None;
    }
    let egcd = BigInt::from(a).extended_gcd(&BigInt::from(m.clone()));
    if !egcd.gcd.is_one() {
        return None;
    }
    let m_signed = BigInt::from(m.clone());
    egcd.x.mod_floor(&m_signed).to_biguint()
}

/// An element of F_p together with its field.
#[derive(Clone)]
pub struct FieldElement {
    field: PrimeField,
    pub(crate) raw: Raw,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.raw == other.raw
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by modulus, then by integer value.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .modulus()
            .cmp(other.field.modulus())
            .then_with(|| self.value().cmp(&other.value()))
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.value().hash(state);
    }
}

impl FieldElement {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// Canonical representative in `[0, p)`.
    pub fn value(&self) -> BigUint {
        self.field.raw_to_big(&self.raw)
    }

    pub fn is_zero(&self) -> bool {
        PrimeField::raw_is_zero(&self.raw)
    }

    pub fn is_one(&self) -> bool {
        PrimeField::raw_is_one(&self.raw)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::ModulusMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.raw_add(&self.raw, &other.raw)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.raw_sub(&self.raw, &other.raw)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.raw_mul(&self.raw, &other.raw)))
    }

    pub fn neg(&self) -> Self {
        self.field.wrap(self.field.raw_neg(&self.raw))
    }

    pub fn square(&self) -> Self {
        self.field.wrap(self.field.raw_mul(&self.raw, &self.raw))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        self.field
            .raw_inv(&self.raw)
            .map(|r| self.field.wrap(r))
            .ok_or(FieldError::NotInvertible)
    }

    /// `self^e`. By convention `0^0 = 1`.
    pub fn pow(&self, e: &BigUint) -> Self {
        self.field.wrap(self.field.raw_pow(&self.raw, e))
    }

    /// Legendre symbol: 0 for zero, +1 for a nonzero square, -1 otherwise.
    /// Only meaningful for odd p.
    pub fn legendre(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let e = (self.field.modulus() - 1u32) >> 1;
        if PrimeField::raw_is_one(&self.field.raw_pow(&self.raw, &e)) {
            1
        } else {
            -1
        }
    }

    /// Square root, or `None` for a non-residue. Of the two roots `{y, p - y}`
    /// the numerically smaller one is returned.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let field = &self.field;
        let inner = &field.0;
        if inner.p == BigUint::from(2u32) {
            return Some(self.clone());
        }
        if self.legendre() != 1 {
            return None;
        }
        let root = if inner.p.mod_floor(&BigUint::from(4u32)) == BigUint::from(3u32) {
            let e = (&inner.p + 1u32) >> 2;
            field.raw_pow(&self.raw, &e)
        } else {
            self.tonelli_shanks()
        };
        let root = field.wrap(root);
        let other = root.neg();
        Some(if other.value() < root.value() {
            other
        } else {
            root
        })
    }

    fn tonelli_shanks(&self) -> Raw {
        let field = &self.field;
        let inner = &field.0;
        let z = field.raw_from_big(inner.nonresidue.as_ref().expect("odd prime field"));
        let mut m = inner.two_adicity;
        let mut c = field.raw_pow(&z, &inner.odd_part);
        let mut t = field.raw_pow(&self.raw, &inner.odd_part);
        let mut r = field.raw_pow(&self.raw, &((&inner.odd_part + 1u32) >> 1));
        while !PrimeField::raw_is_one(&t) {
            // least i with t^(2^i) = 1
            let mut i = 0;
            let mut t2 = t.clone();
            while !PrimeField::raw_is_one(&t2) {
                t2 = field.raw_mul(&t2, &t2);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = field.raw_mul(&b, &b);
            }
            m = i;
            c = field.raw_mul(&b, &b);
            t = field.raw_mul(&t, &c);
            r = field.raw_mul(&r, &b);
        }
        r
    }

    /// Big-endian, fixed width `field().byte_len()`.
    pub fn to_bytes_be(&self) -> Vec<u8> {
        let width = self.field.byte_len();
        let mut out = vec![0u8; width];
        let bytes = self.value().to_bytes_be();
        if !self.is_zero() {
            out[width - bytes.len()..].copy_from_slice(&bytes);
        }
        out
    }
}

// Operator forms panic on mismatched fields; the `checked_*` methods report it.

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("elements of different fields")
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("elements of different fields")
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("elements of different fields")
    }
}

const MR_BASES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first twenty prime bases. Deterministic below
/// 3.3 * 10^24 and overwhelmingly reliable above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &b in &MR_BASES {
        let b = BigUint::from(b);
        if n == &b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let nm1 = n - 1u32;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> PrimeField {
        PrimeField::from_u64(7).unwrap()
    }

    fn e(f: &PrimeField, v: u64) -> FieldElement {
        f.element_u64(v)
    }

    #[test]
    fn arith_examples() {
        let f = f7();
        assert_eq!(e(&f, 5).checked_add(&e(&f, 4)).unwrap(), e(&f, 2));
        assert_eq!(e(&f, 0).checked_sub(&e(&f, 1)).unwrap(), e(&f, 6));
        assert_eq!(e(&f, 3).checked_mul(&e(&f, 5)).unwrap(), e(&f, 1));
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let f = f7();
        let g = PrimeField::from_u64(11).unwrap();
        assert_eq!(
            e(&f, 1).checked_add(&g.one()),
            Err(FieldError::ModulusMismatch)
        );
        assert_eq!(
            e(&f, 1).checked_mul(&g.one()),
            Err(FieldError::ModulusMismatch)
        );
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(
            PrimeField::from_u64(15),
            Err(FieldError::NotPrime(_))
        ));
        assert!(PrimeField::from_u64(1).is_err());
        assert!(PrimeField::from_u64(2).is_ok());
    }

    #[test]
    fn inverse_examples() {
        let f = f7();
        assert_eq!(e(&f, 3).inv().unwrap(), e(&f, 5));
        assert_eq!(e(&f, 1).inv().unwrap(), e(&f, 1));
        assert_eq!(e(&f, 0).inv(), Err(FieldError::NotInvertible));
    }

    #[test]
    fn pow_examples() {
        let f = f7();
        assert_eq!(e(&f, 3).pow(&BigUint::from(6u32)), e(&f, 1));
        assert_eq!(e(&f, 2).pow(&BigUint::from(5u32)), e(&f, 4));
        assert_eq!(e(&f, 4).pow(&BigUint::zero()), e(&f, 1));
        assert_eq!(e(&f, 0).pow(&BigUint::zero()), e(&f, 1));
    }

    #[test]
    fn sqrt_examples() {
        let f = f7();
        assert_eq!(e(&f, 2).sqrt(), Some(e(&f, 3)));
        assert_eq!(e(&f, 0).sqrt(), Some(e(&f, 0)));
        assert_eq!(e(&f, 5).sqrt(), None);
    }

    #[test]
    fn legendre_examples() {
        let f = f7();
        assert_eq!(e(&f, 0).legendre(), 0);
        assert_eq!(e(&f, 4).legendre(), 1);
        assert_eq!(e(&f, 5).legendre(), -1);
    }

    fn small_primes(limit: u64) -> Vec<u64> {
        (3..=limit)
            .filter(|n| (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0))
            .collect()
    }

    #[test]
    fn legendre_and_sqrt_agree_with_square_enumeration() {
        for p in small_primes(1000) {
            let f = PrimeField::from_u64(p).unwrap();
            let mut is_square = vec![false; p as usize];
            for y in 0..p {
                is_square[((y * y) % p) as usize] = true;
            }
            for a in 0..p {
                let fe = e(&f, a);
                let expected = if a == 0 {
                    0
                } else if is_square[a as usize] {
                    1
                } else {
                    -1
                };
                assert_eq!(fe.legendre(), expected, "p={p} a={a}");
                match fe.sqrt() {
                    Some(r) => {
                        assert!(is_square[a as usize]);
                        assert_eq!(r.square(), fe);
                        assert!(r.value() <= r.neg().value());
                    }
                    None => assert!(!is_square[a as usize]),
                }
            }
        }
    }

    #[test]
    fn tonelli_shanks_on_highly_two_adic_prime() {
        // p - 1 = 2^16 * 1 + ... : 65537 = 2^16 + 1
        let f = PrimeField::from_u64(65537).unwrap();
        for a in [2u64, 3, 9, 12345, 65536] {
            let fe = e(&f, a);
            if let Some(r) = fe.sqrt() {
                assert_eq!(r.square(), fe);
            } else {
                assert_eq!(fe.legendre(), -1);
            }
        }
    }

    #[test]
    fn big_and_small_paths_agree() {
        // 2^64 + 13 is prime and forces the BigUint path.
        let big_p = (BigUint::one() << 64u32) + 13u32;
        assert!(is_probable_prime(&big_p));
        let fb = PrimeField::new(big_p.clone()).unwrap();
        let a = fb.element(&(BigUint::from(u64::MAX) * 3u32));
        let b = fb.element(&BigUint::from(0x1234_5678_9abc_def0u64));
        let prod = a.checked_mul(&b).unwrap();
        assert_eq!(prod.value(), (a.value() * b.value()) % &big_p);
        assert_eq!(a.checked_mul(&a.inv().unwrap()).unwrap(), fb.one());
        let sq = a.square();
        assert_eq!(sq.sqrt().unwrap().square(), sq);
    }

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 7, 65537, 18446744073709551521];
        for p in primes {
            assert!(is_probable_prime(&BigUint::from(p)), "{p}");
        }
        // Carmichael numbers and a strong pseudoprime to base 2
        for n in [561u64, 1105, 2047, 3215031751, 4294967291 * 4294967279] {
            assert!(!is_probable_prime(&BigUint::from(n)), "{n}");
        }
    }

    #[test]
    fn fixed_width_bytes() {
        let f = PrimeField::from_u64(65537).unwrap();
        assert_eq!(f.byte_len(), 3);
        assert_eq!(e(&f, 0x0102).to_bytes_be(), vec![0, 1, 2]);
        assert_eq!(e(&f, 0).to_bytes_be(), vec![0, 0, 0]);
    }

    const P64: u64 = 18446744073709551521;

    proptest! {
        #[test]
        fn inverse_law(a in 1u64..P64) {
            let f = PrimeField::from_u64(P64).unwrap();
            let x = e(&f, a);
            prop_assert_eq!(x.checked_mul(&x.inv().unwrap()).unwrap(), f.one());
        }

        #[test]
        fn fermat(a in 1u64..P64) {
            let f = PrimeField::from_u64(P64).unwrap();
            let pm1 = BigUint::from(P64 - 1);
            prop_assert_eq!(e(&f, a).pow(&pm1), f.one());
        }

        #[test]
        fn sqrt_of_square(a in 0u64..P64) {
            let f = PrimeField::from_u64(P64).unwrap();
            let sq = e(&f, a).square();
            let r = sq.sqrt().unwrap();
            prop_assert_eq!(r.square(), sq);
        }

        #[test]
        fn results_are_canonical(a in any::<u64>(), b in any::<u64>()) {
            let f = PrimeField::from_u64(P64).unwrap();
            let (x, y) = (e(&f, a), e(&f, b));
            let p = BigUint::from(P64);
            for r in [x.checked_add(&y).unwrap(), x.checked_sub(&y).unwrap(),
                      x.checked_mul(&y).unwrap(), x.neg()] {
                prop_assert!(r.value() < p);
            }
            prop_assert_eq!(x.checked_add(&y).unwrap().value(),
                            (BigUint::from(a % P64) + BigUint::from(b % P64)) % &p);
        }
    }
}
