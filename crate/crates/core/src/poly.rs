//! Dense univariate polynomials over F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{FieldElement, PrimeField, Raw};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different fields")]
    ModulusMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial cannot be made monic")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
}

/// Coefficients are stored constant term first with trailing zeros trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<Raw>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if PrimeField::raw_is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.field.raw_to_big(c);
            let show_coeff = i == 0 || c != 1u32.into();
            match (i, show_coeff) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "{c}*x")?,
                (1, false) => write!(f, "x")?,
                (_, true) => write!(f, "{c}*x^{i}")?,
                (_, false) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub(crate) fn from_raw(field: &PrimeField, mut coeffs: Vec<Raw>) -> Self {
        while coeffs.last().is_some_and(PrimeField::raw_is_zero) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &PrimeField) -> Self {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &PrimeField) -> Self {
        Self::from_raw(field, vec![field.raw_one()])
    }

    /// The monomial `x`.
    pub fn x(field: &PrimeField) -> Self {
        Self::from_raw(field, vec![field.raw_zero(), field.raw_one()])
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::from_raw(c.field(), vec![c.raw.clone()])
    }

    /// `x - a`
    pub fn linear_root(a: &FieldElement) -> Self {
        let field = a.field();
        Self::from_raw(field, vec![field.raw_neg(&a.raw), field.raw_one()])
    }

    /// Coefficients constant term first; every element must live in `field`.
    pub fn from_elements(field: &PrimeField, coeffs: &[FieldElement]) -> Result<Self, PolyError> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(PolyError::ModulusMismatch);
        }
        Ok(Self::from_raw(
            field,
            coeffs.iter().map(|c| c.raw.clone()).collect(),
        ))
    }

    /// Coefficients constant term first, reduced mod p.
    pub fn from_u64s(field: &PrimeField, coeffs: &[u64]) -> Self {
        Self::from_raw(
            field,
            coeffs.iter().map(|&c| field.raw_from_u64(c)).collect(),
        )
    }

    pub fn from_i64s(field: &PrimeField, coeffs: &[i64]) -> Self {
        Self::from_raw(
            field,
            coeffs.iter().map(|&c| field.element_i64(c).raw).collect(),
        )
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub(crate) fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && PrimeField::raw_is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(PrimeField::raw_is_one)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|c| self.field.wrap(c.clone()))
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.wrap(
            self.coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(|| self.field.raw_zero()),
        )
    }

    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.coeffs
            .iter()
            .map(|c| self.field.wrap(c.clone()))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::ModulusMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.add_raw(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.sub_raw(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.mul_raw(other))
    }

    fn add_raw(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.raw_zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f.raw_add(a, b)
            })
            .collect();
        Self::from_raw(f, coeffs)
    }

    fn sub_raw(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.raw_zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f.raw_sub(a, b)
            })
            .collect();
        Self::from_raw(f, coeffs)
    }

    fn mul_raw(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.raw_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if PrimeField::raw_is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.raw_mul(a, b);
                out[i + j] = f.raw_add(&out[i + j], &t);
            }
        }
        Self::from_raw(f, out)
    }

    pub(crate) fn scale_raw(&self, c: &Raw) -> Self {
        let f = &self.field;
        Self::from_raw(f, self.coeffs.iter().map(|a| f.raw_mul(a, c)).collect())
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self, PolyError> {
        if c.field() != &self.field {
            return Err(PolyError::ModulusMismatch);
        }
        Ok(self.scale_raw(&c.raw))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.div_rem_raw(divisor))
    }

    pub(crate) fn div_rem_raw(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (Self::zero(f), self.clone());
        }
        let lead = divisor.coeffs.last().unwrap();
        let inv_lead = if PrimeField::raw_is_one(lead) {
            None
        } else {
            Some(f.raw_inv(lead).expect("leading coefficient is nonzero"))
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.raw_zero(); self.coeffs.len() - db];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + db];
            if PrimeField::raw_is_zero(top) {
                continue;
            }
            let q = match &inv_lead {
                Some(inv) => f.raw_mul(top, inv),
                None => top.clone(),
            };
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = f.raw_mul(&q, d);
                rem[k + j] = f.raw_sub(&rem[k + j], &t);
            }
            quot[k] = q;
        }
        rem.truncate(db);
        (Self::from_raw(f, quot), Self::from_raw(f, rem))
    }

    /// Remainder modulo `m`; panics if `m` is zero or from another field.
    pub(crate) fn rem(&self, m: &Self) -> Self {
        assert!(
            self.field == m.field,
            "polynomials belong to different fields"
        );
        if self.coeffs.len() < m.coeffs.len() {
            return self.clone();
        }
        self.div_rem_raw(m).1
    }

    /// Quotient of an exact division; panics on a nonzero remainder in debug builds.
    pub(crate) fn exact_div(&self, m: &Self) -> Self {
        assert!(
            self.field == m.field,
            "polynomials belong to different fields"
        );
        let (q, r) = self.div_rem_raw(m);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Extended gcd: returns `(d, s, t)` with `d = gcd(a, b)` monic and
    /// `s * a + t * b = d`.
    pub fn xgcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), PolyError> {
        a.check(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        Ok(Self::xgcd_raw(a, b))
    }

    pub(crate) fn xgcd_raw(a: &Self, b: &Self) -> (Self, Self, Self) {
        let f = &a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem_raw(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lead = r0.coeffs.last().expect("not both zero");
        if PrimeField::raw_is_one(lead) {
            return (r0, s0, t0);
        }
        let inv = f.raw_inv(lead).expect("nonzero");
        (r0.scale_raw(&inv), s0.scale_raw(&inv), t0.scale_raw(&inv))
    }

    /// Horner evaluation at `x0`.
    pub fn eval(&self, x0: &FieldElement) -> Result<FieldElement, PolyError> {
        if x0.field() != &self.field {
            return Err(PolyError::ModulusMismatch);
        }
        Ok(self.field.wrap(self.eval_raw(&x0.raw)))
    }

    pub(crate) fn eval_raw(&self, x0: &Raw) -> Raw {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.raw_zero(), |acc, c| f.raw_add(&f.raw_mul(&acc, x0), c))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.raw_mul(c, &f.raw_from_u64(i as u64)))
            .collect();
        Self::from_raw(f, coeffs)
    }

    /// Scales by the inverse of the leading coefficient.
    pub fn make_monic(&self) -> Result<Self, PolyError> {
        match self.coeffs.last() {
            None => Err(PolyError::ZeroPolynomial),
            Some(lead) if PrimeField::raw_is_one(lead) => Ok(self.clone()),
            Some(lead) => {
                let inv = self.field.raw_inv(lead).expect("nonzero");
                Ok(self.scale_raw(&inv))
            }
        }
    }

    /// `self^e mod m` by square-and-multiply.
    pub(crate) fn pow_mod(&self, e: &num_bigint::BigUint, m: &Self) -> Self {
        let mut acc = Self::one(&self.field).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(m);
            if e.bit(i) {
                acc = (&acc * &base).rem(m);
            }
        }
        acc
    }
}

// Operator forms panic on mismatched fields; the `try_*` methods report it.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(
            self.field == rhs.field,
            "polynomials belong to different fields"
        );
        self.add_raw(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(
            self.field == rhs.field,
            "polynomials belong to different fields"
        );
        self.sub_raw(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(
            self.field == rhs.field,
            "polynomials belong to different fields"
        );
        self.mul_raw(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial::from_raw(f, self.coeffs.iter().map(|c| f.raw_neg(c)).collect())
    }
}
