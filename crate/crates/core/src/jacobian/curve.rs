use std::fmt;

use num_bigint::BigUint;

use super::JacobianError;
use crate::field::{FieldElement, PrimeField};
use crate::poly::Polynomial;

/// The curve `y^2 + h(x) y = f(x)` of genus g over F_p, p odd.
#[derive(Clone, PartialEq, Eq)]
pub struct CurveParams {
    field: PrimeField,
    genus: usize,
    f: Polynomial,
    h: Polynomial,
}

impl fmt::Debug for CurveParams {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            fmt,
            "y^2 + ({})*y = {} over F_{} (genus {})",
            self.h,
            self.f,
            self.field.modulus(),
            self.genus
        )
    }
}

impl CurveParams {
    /// Builds and validates the curve.
    pub fn new(
        field: PrimeField,
        genus: usize,
        f: Polynomial,
        h: Polynomial,
    ) -> Result<Self, JacobianError> {
        let curve = CurveParams { field, genus, f, h };
        curve.validate()?;
        Ok(curve)
    }

    /// Convenience for small test curves: `p`, coefficients constant term first.
    pub fn from_u64s(p: u64, genus: usize, f: &[u64], h: &[u64]) -> Result<Self, JacobianError> {
        let field = PrimeField::from_u64(p)?;
        let f = Polynomial::from_u64s(&field, f);
        let h = Polynomial::from_u64s(&field, h);
        Self::new(field, genus, f, h)
    }

    /// Odd characteristic, `f` monic of degree `2g + 1`, `deg h <= g`, and
    /// `f + h^2/4` squarefree (nonsingular affine part).
    pub fn validate(&self) -> Result<(), JacobianError> {
        if self.field.modulus() < &BigUint::from(3u32) {
            return Err(JacobianError::EvenCharacteristic);
        }
        if self.genus == 0 {
            return Err(JacobianError::GenusZero);
        }
        if self.f.field() != &self.field || self.h.field() != &self.field {
            return Err(JacobianError::FieldMismatch);
        }
        if self.f.degree() != Some(2 * self.genus + 1) || !self.f.is_monic() {
            return Err(JacobianError::BadDegree(format!(
                "f must be monic of degree {}, got {}",
                2 * self.genus + 1,
                self.f
            )));
        }
        if self.h.degree().is_some_and(|d| d > self.genus) {
            return Err(JacobianError::BadDegree(format!(
                "h must have degree at most {}, got {}",
                self.genus, self.h
            )));
        }
        let completed = self.completed_square();
        let (d, _, _) = Polynomial::xgcd_raw(&completed, &completed.derivative());
        if !d.is_one() {
            return Err(JacobianError::Singular);
        }
        Ok(())
    }

    /// `F = f + h^2 / 4`; the curve is isomorphic to `Y^2 = F` with `Y = y + h/2`.
    fn completed_square(&self) -> Polynomial {
        let quarter = self.field.element_u64(4).inv().expect("odd characteristic");
        &self.f + &(&self.h * &self.h).scale(&quarter).expect("same field")
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    /// Does `(x, y)` satisfy `y^2 + h(x) y = f(x)`?
    pub fn contains(&self, x: &FieldElement, y: &FieldElement) -> bool {
        if x.field() != &self.field || y.field() != &self.field {
            return false;
        }
        let f = &self.field;
        let hx = self.h.eval_raw(&x.raw);
        let fx = self.f.eval_raw(&x.raw);
        let lhs = f.raw_add(&f.raw_mul(&y.raw, &y.raw), &f.raw_mul(&hx, &y.raw));
        lhs == fx
    }

    pub fn is_on_curve(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => self.contains(x, y),
        }
    }

    /// Hyperelliptic involution `(x, y) -> (x, -y - h(x))`, fixing infinity.
    pub fn opposite_point(&self, p: &Point) -> Result<Point, JacobianError> {
        match p {
            Point::Infinity => Ok(Point::Infinity),
            Point::Affine { x, y } => {
                if !self.contains(x, y) {
                    return Err(JacobianError::PointNotOnCurve);
                }
                let f = &self.field;
                let hx = self.h.eval_raw(&x.raw);
                let ny = f.raw_sub(&f.raw_neg(&y.raw), &hx);
                Ok(Point::Affine {
                    x: x.clone(),
                    y: f.wrap(ny),
                })
            }
        }
    }

    /// A point is special when it equals its opposite.
    pub fn is_special(&self, p: &Point) -> Result<bool, JacobianError> {
        Ok(&self.opposite_point(p)? == p)
    }

    /// The two `y` with `(x, y)` on the curve, smaller value first, or `None`
    /// if `x` is not the abscissa of a rational point. Equal for special points.
    pub fn ys_over(&self, x: &FieldElement) -> Option<(FieldElement, FieldElement)> {
        let f = &self.field;
        let hx = self.h.eval_raw(&x.raw);
        let fx = self.f.eval_raw(&x.raw);
        // (2y + h)^2 = h^2 + 4f
        let disc = f.raw_add(&f.raw_mul(&hx, &hx), &f.raw_mul(&f.raw_from_u64(4), &fx));
        let s = f.wrap(disc).sqrt()?;
        let half = f.raw_inv(&f.raw_from_u64(2)).expect("odd characteristic");
        let y1 = f.raw_mul(&f.raw_sub(&s.raw, &hx), &half);
        let y2 = f.raw_mul(&f.raw_sub(&f.raw_neg(&s.raw), &hx), &half);
        let (a, b) = (f.wrap(y1), f.wrap(y2));
        Some(if a <= b { (a, b) } else { (b, a) })
    }
}

/// A point of the curve: affine `(x, y)` or the single point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl Point {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        Point::Affine { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "inf"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7_curve() -> CurveParams {
        CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 1], &[]).unwrap()
    }

    #[test]
    fn test_curve_validates() {
        f7_curve();
    }

    #[test]
    fn wrong_degree_rejected() {
        // degree 2g = 4
        let err = CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 1], &[]).unwrap_err();
        assert!(matches!(err, JacobianError::BadDegree(_)));
        // not monic
        let err = CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 2], &[]).unwrap_err();
        assert!(matches!(err, JacobianError::BadDegree(_)));
        // deg h > g
        let err = CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 1], &[0, 0, 0, 1]).unwrap_err();
        assert!(matches!(err, JacobianError::BadDegree(_)));
    }

    #[test]
    fn characteristic_two_rejected() {
        let err = CurveParams::from_u64s(2, 2, &[1, 1, 0, 0, 0, 1], &[]).unwrap_err();
        assert_eq!(err, JacobianError::EvenCharacteristic);
    }

    #[test]
    fn singular_rejected() {
        // x^5 has a repeated root at 0
        let err = CurveParams::from_u64s(7, 2, &[0, 0, 0, 0, 0, 1], &[]).unwrap_err();
        assert_eq!(err, JacobianError::Singular);
        // y^2 + x y = x^5 - x^2/4 ... choose f so that f + h^2/4 = x^5 + x^2 * (stuff) with a double root:
        // over F_11 with h = x, f = x^5 - 3x^2 (since 1/4 = 3): F = x^5, singular.
        let err = CurveParams::from_u64s(11, 2, &[0, 0, 8, 0, 0, 1], &[0, 1]).unwrap_err();
        assert_eq!(err, JacobianError::Singular);
    }

    #[test]
    fn opposite_examples() {
        let c = f7_curve();
        let f = c.field().clone();
        let p = Point::affine(f.element_u64(0), f.element_u64(1));
        assert_eq!(
            c.opposite_point(&p).unwrap(),
            Point::affine(f.element_u64(0), f.element_u64(6))
        );
        assert_eq!(c.opposite_point(&Point::Infinity).unwrap(), Point::Infinity);
        let off = Point::affine(f.element_u64(0), f.element_u64(2));
        assert_eq!(c.opposite_point(&off), Err(JacobianError::PointNotOnCurve));
    }

    #[test]
    fn special_point_is_fixed() {
        // y^2 = x^5 + x over F_13 has the point (0, 0)
        let c = CurveParams::from_u64s(13, 2, &[0, 1, 0, 0, 0, 1], &[]).unwrap();
        let f = c.field().clone();
        let p = Point::affine(f.zero(), f.zero());
        assert!(c.is_special(&p).unwrap());
        assert_eq!(c.opposite_point(&p).unwrap(), p);
    }

    #[test]
    fn opposite_with_nonzero_h() {
        // y^2 + x y = x^5 + 1 over F_11
        let c = CurveParams::from_u64s(11, 2, &[1, 0, 0, 0, 0, 1], &[0, 1]).unwrap();
        let f = c.field().clone();
        for x in 0..11 {
            let x = f.element_u64(x);
            if let Some((y1, y2)) = c.ys_over(&x) {
                let p = Point::affine(x.clone(), y1.clone());
                assert!(c.is_on_curve(&p));
                assert!(c.contains(&x, &y2));
                let q = c.opposite_point(&p).unwrap();
                assert!(c.is_on_curve(&q));
                assert_eq!(c.opposite_point(&q).unwrap(), p);
            }
        }
    }
}
