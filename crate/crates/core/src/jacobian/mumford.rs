use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::genus2::{FDiv, Genus2};
use super::{CurveParams, JacobianError};
use crate::field::PrimeField;
use crate::poly::Polynomial;
use crate::scalar::ScalarSource;

/// Reduced divisor class in Mumford form: `u` monic, `deg v < deg u <= g`,
/// `u | v^2 + v h - f`. The pair is unique per class, so equality is
/// coefficient-wise.
#[derive(Clone, PartialEq, Eq)]
pub struct MumfordDivisor {
    u: Polynomial,
    v: Polynomial,
}

impl fmt::Debug for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl fmt::Display for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u = {}, v = {})", self.u, self.v)
    }
}

impl MumfordDivisor {
    /// Validates membership on `curve`.
    pub fn new(u: Polynomial, v: Polynomial, curve: &CurveParams) -> Result<Self, JacobianError> {
        let d = MumfordDivisor { u, v };
        curve.validate_divisor(&d)?;
        Ok(d)
    }

    pub(crate) fn from_parts(u: Polynomial, v: Polynomial) -> Self {
        MumfordDivisor { u, v }
    }

    /// The neutral element `(1, 0)`.
    pub fn identity(field: &PrimeField) -> Self {
        MumfordDivisor {
            u: Polynomial::one(field),
            v: Polynomial::zero(field),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    /// Number of affine points (with multiplicity) in the reduced divisor.
    pub fn weight(&self) -> usize {
        self.u.degree().unwrap_or(0)
    }
}

impl CurveParams {
    pub fn identity(&self) -> MumfordDivisor {
        MumfordDivisor::identity(self.field())
    }

    /// Checks `u` monic, `deg v < deg u <= g` and `u | v^2 + v h - f`.
    pub fn validate_divisor(&self, d: &MumfordDivisor) -> Result<(), JacobianError> {
        if d.u.field() != self.field() || d.v.field() != self.field() {
            return Err(JacobianError::FieldMismatch);
        }
        if !d.u.is_monic() {
            return Err(JacobianError::InvalidDivisor("u is not monic"));
        }
        if d.u.deg() > self.genus() as isize {
            return Err(JacobianError::InvalidDivisor("deg u exceeds the genus"));
        }
        if d.v.deg() >= d.u.deg() {
            return Err(JacobianError::InvalidDivisor("deg v >= deg u"));
        }
        if !self.membership_residue(d).is_zero() {
            return Err(JacobianError::InvalidDivisor(
                "u does not divide v^2 + v h - f",
            ));
        }
        Ok(())
    }

    pub fn is_valid_divisor(&self, d: &MumfordDivisor) -> bool {
        self.validate_divisor(d).is_ok()
    }

    fn membership_residue(&self, d: &MumfordDivisor) -> Polynomial {
        let lhs = &(&(&d.v * &d.v) + &(&d.v * self.h())) - self.f();
        lhs.rem(&d.u)
    }

    /// Group law: Cantor composition followed by reduction. Inputs are
    /// trusted to be valid on this curve; see [`CurveParams::checked_add`].
    pub fn add(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
        if a.is_identity() {
            return b.clone();
        }
        if b.is_identity() {
            return a.clone();
        }
        if a == b {
            return self.double(a);
        }
        let (u1, v1, u2, v2) = (&a.u, &a.v, &b.u, &b.v);
        let (d1, e1, e2) = Polynomial::xgcd_raw(u1, u2);
        let (u, v) = if d1.is_one() {
            // coprime supports: plain CRT on v
            let u = u1 * u2;
            let v = &(&(&e1 * u1) * v2) + &(&(&e2 * u2) * v1);
            let v = v.rem(&u);
            (u, v)
        } else {
            let w = &(v1 + v2) + self.h();
            let (d, c1, c2) = Polynomial::xgcd_raw(&d1, &w);
            let s1 = &c1 * &e1;
            let s2 = &c1 * &e2;
            let s3 = c2;
            self.compose(u1, v1, u2, v2, &d, &s1, &s2, &s3)
        };
        self.reduce(u, v)
    }

    pub fn double(&self, a: &MumfordDivisor) -> MumfordDivisor {
        if a.is_identity() {
            return a.clone();
        }
        let (u1, v1) = (&a.u, &a.v);
        let w = &(v1 + v1) + self.h();
        let (d, c1, c2) = Polynomial::xgcd_raw(u1, &w);
        let zero = Polynomial::zero(self.field());
        let (u, v) = self.compose(u1, v1, u1, v1, &d, &c1, &zero, &c2);
        self.reduce(u, v)
    }

    #[allow(clippy::too_many_arguments)]
    fn compose(
        &self,
        u1: &Polynomial,
        v1: &Polynomial,
        u2: &Polynomial,
        v2: &Polynomial,
        d: &Polynomial,
        s1: &Polynomial,
        s2: &Polynomial,
        s3: &Polynomial,
    ) -> (Polynomial, Polynomial) {
        let u12 = u1 * u2;
        let u = if d.is_one() {
            u12
        } else {
            u12.exact_div(&(d * d))
        };
        let mut num = &(&(s1 * u1) * v2) + &(&(s2 * u2) * v1);
        if !s3.is_zero() {
            num = &num + &(s3 * &(&(v1 * v2) + self.f()));
        }
        let num = if d.is_one() { num } else { num.exact_div(d) };
        let v = num.rem(&u);
        (u, v)
    }

    fn reduce(&self, mut u: Polynomial, mut v: Polynomial) -> MumfordDivisor {
        let g = self.genus() as isize;
        while u.deg() > g {
            let num = &(self.f() - &(&v * self.h())) - &(&v * &v);
            let u_next = num.exact_div(&u).make_monic().expect("nonzero");
            v = (&(-self.h()) - &v).rem(&u_next);
            u = u_next;
        }
        let u = u.make_monic().expect("nonzero");
        let v = v.rem(&u);
        MumfordDivisor { u, v }
    }

    /// [`CurveParams::add`] with both operands validated first.
    pub fn checked_add(
        &self,
        a: &MumfordDivisor,
        b: &MumfordDivisor,
    ) -> Result<MumfordDivisor, JacobianError> {
        self.validate_divisor(a)?;
        self.validate_divisor(b)?;
        Ok(self.add(a, b))
    }

    /// `(u, -v - h mod u)`.
    pub fn negate(&self, a: &MumfordDivisor) -> MumfordDivisor {
        if a.is_identity() {
            return a.clone();
        }
        let v = (&(-&a.v) - self.h()).rem(&a.u);
        MumfordDivisor { u: a.u.clone(), v }
    }

    pub fn sub(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
        self.add(a, &self.negate(b))
    }

    /// `n * a` with a width-5 signed window.
    pub fn scalar_mul(&self, n: &BigUint, a: &MumfordDivisor) -> MumfordDivisor {
        if n.is_zero() || a.is_identity() {
            return self.identity();
        }
        match Genus2::for_curve(self) {
            Some(g) => {
                let fast = Fast { g: &g, curve: self };
                g.to_mumford(self, &wnaf_mul(&fast, n, &g.to_fast(a)))
            }
            None => wnaf_mul(self, n, a),
        }
    }

    /// Samples a divisor by adding `g` random rational points. Each point is
    /// drawn as an abscissa in `[0, p)`, rejected until it lifts to the curve,
    /// followed by one bit picking the smaller (0) or larger (1) ordinate.
    /// Meant for tests; not uniform over the group.
    pub fn random_divisor<S: ScalarSource + ?Sized>(&self, rng: &mut S) -> MumfordDivisor {
        let p = self.field().modulus().clone();
        let two = BigUint::from(2u32);
        let mut acc = self.identity();
        for _ in 0..self.genus() {
            let (x, y) = loop {
                let x = self.field().element(&rng.below(&p));
                if let Some((y_small, y_large)) = self.ys_over(&x) {
                    let y = if rng.below(&two).is_zero() {
                        y_small
                    } else {
                        y_large
                    };
                    break (x, y);
                }
            };
            let point = MumfordDivisor {
                u: Polynomial::linear_root(&x),
                v: Polynomial::constant(&y),
            };
            acc = self.add(&acc, &point);
        }
        acc
    }
}

/// Width-`w` non-adjacent form, least significant digit first. Nonzero digits
/// are odd and lie in `(-2^(w-1), 2^(w-1))`.
fn wnaf(n: &BigUint, w: u32) -> Vec<i32> {
    let modulus = 1i64 << w;
    let half = modulus / 2;
    let mut k = n.clone();
    let mut out = Vec::with_capacity(n.bits() as usize + 1);
    while !k.is_zero() {
        if k.bit(0) {
            let low = (k.iter_u64_digits().next().unwrap_or(0) & (modulus as u64 - 1)) as i64;
            let digit = if low >= half { low - modulus } else { low };
            if digit >= 0 {
                k -= BigUint::from(digit as u64);
            } else {
                k += BigUint::from((-digit) as u64);
            }
            out.push(digit as i32);
        } else {
            out.push(0);
        }
        k >>= 1u32;
    }
    out
}

/// The group operations scalar multiplication needs, so that the window
/// code runs unchanged over either divisor representation.
trait Arith {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn double(&self, a: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

impl Arith for CurveParams {
    type Elem = MumfordDivisor;
    fn zero(&self) -> MumfordDivisor {
        self.identity()
    }
    fn add(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
        CurveParams::add(self, a, b)
    }
    fn double(&self, a: &MumfordDivisor) -> MumfordDivisor {
        CurveParams::double(self, a)
    }
    fn neg(&self, a: &MumfordDivisor) -> MumfordDivisor {
        self.negate(a)
    }
}

struct Fast<'a> {
    g: &'a Genus2,
    curve: &'a CurveParams,
}

impl Arith for Fast<'_> {
    type Elem = FDiv;
    fn zero(&self) -> FDiv {
        FDiv::ZERO
    }
    fn add(&self, a: &FDiv, b: &FDiv) -> FDiv {
        self.g.add(self.curve, a, b)
    }
    fn double(&self, a: &FDiv) -> FDiv {
        self.g.double(self.curve, a)
    }
    fn neg(&self, a: &FDiv) -> FDiv {
        self.g.neg(a)
    }
}

fn wnaf_mul<A: Arith>(ar: &A, n: &BigUint, a: &A::Elem) -> A::Elem {
    const W: u32 = 5;
    let digits = wnaf(n, W);
    // odd multiples a, 3a, ..., (2^(W-1) - 1) a
    let twice = ar.double(a);
    let mut odd = Vec::with_capacity(1 << (W - 2));
    odd.push(a.clone());
    for i in 1..(1usize << (W - 2)) {
        let next = ar.add(&odd[i - 1], &twice);
        odd.push(next);
    }
    let mut acc = ar.zero();
    for &digit in digits.iter().rev() {
        acc = ar.double(&acc);
        if digit > 0 {
            acc = ar.add(&acc, &odd[(digit as usize) / 2]);
        } else if digit < 0 {
            acc = ar.add(&acc, &ar.neg(&odd[(-digit) as usize / 2]));
        }
    }
    acc
}

fn build_rows<A: Arith>(
    ar: &A,
    base: &A::Elem,
    n_rows: usize,
    per_row: usize,
) -> Vec<Vec<A::Elem>> {
    let mut rows = Vec::with_capacity(n_rows);
    let mut row_base = base.clone();
    for _ in 0..n_rows {
        let mut row = Vec::with_capacity(per_row);
        row.push(row_base.clone());
        for j in 1..per_row {
            let next = ar.add(&row[j - 1], &row_base);
            row.push(next);
        }
        row_base = ar.add(&row[per_row - 1], &row_base);
        rows.push(row);
    }
    rows
}

fn table_mul<A: Arith>(ar: &A, rows: &[Vec<A::Elem>], window: u32, n: &BigUint) -> A::Elem {
    let mut acc = ar.zero();
    for (i, row) in rows.iter().enumerate() {
        let low = i as u64 * window as u64;
        let digit = (0..window as u64)
            .filter(|&b| n.bit(low + b))
            .fold(0usize, |d, b| d | 1 << b);
        if digit != 0 {
            acc = ar.add(&acc, &row[digit - 1]);
        }
    }
    acc
}

/// Precomputed multiples of a fixed base, `rows[i][j] = (j + 1) * 2^(w i) * base`.
/// Scalar multiplication then costs one addition per nonzero window.
#[derive(Clone, Debug)]
pub struct FixedBaseTable {
    base: MumfordDivisor,
    rows: Rows,
}

#[derive(Clone, Debug)]
enum Rows {
    Generic(Vec<Vec<MumfordDivisor>>),
    Fast(Box<Genus2>, Vec<Vec<FDiv>>),
}

impl FixedBaseTable {
    const WINDOW: u32 = 6;

    /// Covers scalars of up to `max_bits` bits.
    pub fn new(curve: &CurveParams, base: &MumfordDivisor, max_bits: u64) -> Self {
        let per_row = (1usize << Self::WINDOW) - 1;
        let n_rows = max_bits.div_ceil(Self::WINDOW as u64).max(1) as usize;
        let rows = match Genus2::for_curve(curve) {
            Some(g) => {
                let fast = Fast { g: &g, curve };
                let rows = build_rows(&fast, &g.to_fast(base), n_rows, per_row);
                Rows::Fast(Box::new(g), rows)
            }
            None => Rows::Generic(build_rows(curve, base, n_rows, per_row)),
        };
        FixedBaseTable {
            base: base.clone(),
            rows,
        }
    }

    pub fn max_bits(&self) -> u64 {
        let n_rows = match &self.rows {
            Rows::Generic(r) => r.len(),
            Rows::Fast(_, r) => r.len(),
        };
        n_rows as u64 * Self::WINDOW as u64
    }

    /// `n * base`; falls back to the generic ladder for oversize scalars.
    pub fn mul(&self, curve: &CurveParams, n: &BigUint) -> MumfordDivisor {
        if n.bits() > self.max_bits() {
            return curve.scalar_mul(n, &self.base);
        }
        match &self.rows {
            Rows::Generic(rows) => table_mul(curve, rows, Self::WINDOW, n),
            Rows::Fast(g, rows) => {
                let fast = Fast { g, curve };
                g.to_mumford(curve, &table_mul(&fast, rows, Self::WINDOW, n))
            }
        }
    }
}
