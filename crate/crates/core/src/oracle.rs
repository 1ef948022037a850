//! Brute-force ground truth for small curves.
//!
//! Nothing here uses Cantor's algorithm to decide membership or count: points
//! and reduced divisors are found by exhaustive search, so the results can be
//! used to check the group law rather than trusting it.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::codec::encode_divisor;
use crate::field::{FieldElement, PrimeField};
use crate::jacobian::{CurveParams, DomainParams, JacobianError, MumfordDivisor, Point};
use crate::poly::Polynomial;

/// Largest p for point enumeration.
pub const MAX_POINT_FIELD: u64 = 1 << 20;
/// Largest `p^(2g)` for divisor enumeration.
pub const MAX_DIVISOR_SEARCH: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("p = {0} exceeds the enumeration limit")]
    FieldTooLarge(BigUint),
    #[error("p^(2g) = {0} exceeds the enumeration limit")]
    SearchTooLarge(BigUint),
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("order of the element exceeds the group order")]
    OrderNotFound,
    #[error("group order {0} has no prime factor of at least 3")]
    NoPrimeSubgroup(u64),
    #[error(transparent)]
    Jacobian(#[from] JacobianError),
}

fn small_modulus(field: &PrimeField) -> Result<u64, OracleError> {
    field
        .modulus()
        .to_u64()
        .filter(|&p| p <= MAX_POINT_FIELD)
        .ok_or_else(|| OracleError::FieldTooLarge(field.modulus().clone()))
}

/// Every affine solution of `y^2 + h(x) y = f(x)`, plus the point at infinity
/// (listed first).
pub fn enumerate_points(c: &CurveParams) -> Result<Vec<Point>, OracleError> {
    let p = small_modulus(c.field())?;
    let field = c.field();
    let mut out = vec![Point::Infinity];
    for x in 0..p {
        let x = field.element_u64(x);
        let fx = c.f().eval(&x).expect("same field");
        let hx = c.h().eval(&x).expect("same field");
        for y in 0..p {
            let y = field.element_u64(y);
            if &(&y * &y) + &(&y * &hx) == fx {
                out.push(Point::affine(x.clone(), y));
            }
        }
    }
    Ok(out)
}

/// All reduced divisors of a small curve, found without the group law.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    elements: Vec<MumfordDivisor>,
    index: HashMap<Vec<u8>, usize>,
}

impl EnumeratedGroup {
    pub fn elements(&self) -> &[MumfordDivisor] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, d: &MumfordDivisor) -> bool {
        self.index.contains_key(&encode_divisor(d))
    }

    /// Position of `d` in [`EnumeratedGroup::elements`].
    pub fn position(&self, d: &MumfordDivisor) -> Option<usize> {
        self.index.get(&encode_divisor(d)).copied()
    }

    /// One hex divisor encoding per line, in enumeration order.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for d in &self.elements {
            out.push_str(&hex::encode(encode_divisor(d)));
            out.push('\n');
        }
        out
    }
}

/// Coefficient tuples in `[0, p)^len`, little-endian counter order.
fn tuples(p: u64, len: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(len as u32);
    (0..total).map(move |mut n| {
        (0..len)
            .map(|_| {
                let d = n % p;
                n /= p;
                d
            })
            .collect()
    })
}

/// Every pair `(u, v)`: `u` monic with `deg u <= g`, `deg v < deg u`,
/// `u | v^2 + v h - f`. Ordered by `deg u`, then the coefficients of `u`, then
/// those of `v`.
pub fn enumerate_reduced_divisors(c: &CurveParams) -> Result<EnumeratedGroup, OracleError> {
    let p = small_modulus(c.field())?;
    let search = BigUint::from(p).pow(2 * c.genus() as u32);
    if search > BigUint::from(MAX_DIVISOR_SEARCH) {
        return Err(OracleError::SearchTooLarge(search));
    }
    let field = c.field();
    let mut elements = Vec::new();
    for deg in 0..=c.genus() {
        for mut uc in tuples(p, deg) {
            uc.push(1);
            let u = Polynomial::from_u64s(field, &uc);
            let f_mod = c.f().div_rem(&u).expect("monic").1;
            let h_mod = c.h().div_rem(&u).expect("monic").1;
            for vc in tuples(p, deg) {
                let v = Polynomial::from_u64s(field, &vc);
                let lhs = &(&(&v * &v) + &(&v * &h_mod)) - &f_mod;
                if lhs.div_rem(&u).expect("monic").1.is_zero() {
                    elements.push(MumfordDivisor::from_parts(u.clone(), v));
                }
            }
        }
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, d)| (encode_divisor(d), i))
        .collect();
    Ok(EnumeratedGroup { elements, index })
}

pub fn group_order_bruteforce(c: &CurveParams) -> Result<u64, OracleError> {
    Ok(enumerate_reduced_divisors(c)?.order())
}

/// Least `n >= 1` with `n d = 0`, by repeated addition.
pub fn element_order(
    d: &MumfordDivisor,
    c: &CurveParams,
    group: &EnumeratedGroup,
) -> Result<u64, OracleError> {
    let mut acc = d.clone();
    for n in 1..=group.order() {
        if acc.is_identity() {
            return Ok(n);
        }
        acc = c.add(&acc, d);
    }
    Err(OracleError::OrderNotFound)
}

/// Prime factors of `n` with multiplicity, ascending.
pub fn factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        while n.is_multiple_of(q) {
            out.push(q);
            n /= q;
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Domain parameters for a small curve: `r` is the largest prime factor of
/// the enumerated order, and `R = (N / r) D` for the first enumerated `D`
/// where that is not the identity.
pub fn test_domain(c: &CurveParams) -> Result<DomainParams, OracleError> {
    let group = enumerate_reduced_divisors(c)?;
    let n = group.order();
    let r = *factor(n).last().unwrap_or(&1);
    if r < 3 {
        return Err(OracleError::NoPrimeSubgroup(n));
    }
    let cofactor = BigUint::from(n / r);
    for d in group.elements() {
        let base = c.scalar_mul(&cofactor, d);
        if !base.is_identity() {
            return Ok(DomainParams::new(c.clone(), base, BigUint::from(r))?);
        }
    }
    Err(OracleError::NoPrimeSubgroup(n))
}

/// `(ceil((sqrt p - 1)^(2g)), floor((sqrt p + 1)^(2g)))`, exactly.
pub fn hasse_weil_interval(p: &BigUint, g: u32) -> (BigUint, BigUint) {
    // (p + 1 +- 2 sqrt p)^g = X +- Y sqrt p
    let a = p + 1u32;
    let (mut x, mut y) = (BigUint::one(), BigUint::zero());
    for _ in 0..g {
        let nx = &x * &a + &y * 2u32 * p;
        let ny = &x * 2u32 + &y * &a;
        x = nx;
        y = ny;
    }
    let s = (&y * &y * p).sqrt();
    (&x - &s, &x + &s)
}

/// `y^2 = x^3 + a x + b`, the textbook genus-1 group law.
#[derive(Clone, Debug)]
pub struct ShortWeierstrass {
    a: FieldElement,
    b: FieldElement,
}

impl ShortWeierstrass {
    pub fn new(a: FieldElement, b: FieldElement) -> Self {
        ShortWeierstrass { a, b }
    }

    /// The same curve as a genus-1 [`CurveParams`] with `h = 0`.
    pub fn as_curve(&self) -> Result<CurveParams, JacobianError> {
        let field = self.a.field().clone();
        let f = Polynomial::from_elements(
            &field,
            &[self.b.clone(), self.a.clone(), field.zero(), field.one()],
        )
        .expect("same field");
        CurveParams::new(field.clone(), 1, f, Polynomial::zero(&field))
    }

    pub fn contains(&self, pt: &Point) -> bool {
        match pt {
            Point::Infinity => true,
            Point::Affine { x, y } => y * y == &(&(&(x * x) * x) + &(&self.a * x)) + &self.b,
        }
    }

    pub fn add(&self, p1: &Point, p2: &Point) -> Result<Point, OracleError> {
        if !self.contains(p1) || !self.contains(p2) {
            return Err(OracleError::PointNotOnCurve);
        }
        let (x1, y1, x2, y2) = match (p1, p2) {
            (Point::Infinity, _) => return Ok(p2.clone()),
            (_, Point::Infinity) => return Ok(p1.clone()),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let field = x1.field();
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return Ok(Point::Infinity);
            }
            let num = &(&field.element_u64(3) * &(x1 * x1)) + &self.a;
            &num * &(y1 + y1).inv().expect("y != 0")
        } else {
            &(y2 - y1) * &(x2 - x1).inv().expect("x1 != x2")
        };
        let x3 = &(&(&lambda * &lambda) - x1) - x2;
        let y3 = &(&lambda * &(x1 - &x3)) - y1;
        Ok(Point::affine(x3, y3))
    }
}

/// Free-function form of [`ShortWeierstrass::add`].
pub fn ec_chord_tangent_add(
    p1: &Point,
    p2: &Point,
    curve: &ShortWeierstrass,
) -> Result<Point, OracleError> {
    curve.add(p1, p2)
}
