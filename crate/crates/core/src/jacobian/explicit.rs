use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use super::{CurveParams, JacobianError, MumfordDivisor, Point};
use crate::field::FieldElement;
use crate::poly::Polynomial;

/// Finite formal sum `sum m_P [P]` of curve points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExplicitDivisor {
    terms: BTreeMap<Point, i64>,
}

impl fmt::Display for ExplicitDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, m) in &self.terms {
            let (sign, mag) = if *m < 0 { ("-", -m) } else { ("+", *m) };
            if first {
                if *m < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mag == 1 {
                write!(f, "[{p}]")?;
            } else {
                write!(f, "{mag}[{p}]")?;
            }
        }
        Ok(())
    }
}

impl ExplicitDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sums repeated points; zero multiplicities are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Point, i64)>>(terms: I) -> Self {
        let mut d = Self::new();
        for (p, m) in terms {
            d.add_term(p, m);
        }
        d
    }

    /// Affine part `sum m_i [P_i]` balanced by `-(sum m_i) [inf]`.
    pub fn balanced<I: IntoIterator<Item = (Point, i64)>>(affine: I) -> Self {
        let mut d = Self::from_terms(affine);
        let w: i64 = d
            .terms
            .iter()
            .filter(|(p, _)| **p != Point::Infinity)
            .map(|(_, m)| *m)
            .sum();
        d.add_term(Point::Infinity, -w);
        d
    }

    pub fn add_term(&mut self, p: Point, m: i64) {
        let entry = self.terms.entry(p.clone()).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.terms.iter().map(|(p, m)| (p, *m))
    }

    pub fn support(&self) -> impl Iterator<Item = &Point> {
        self.terms.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `deg D = sum m_P`.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `ord_P(D) = m_P`, zero off the support.
    pub fn order_at(&self, p: &Point) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    fn affine_weight(&self) -> i64 {
        self.terms
            .iter()
            .filter(|(p, _)| **p != Point::Infinity)
            .map(|(_, m)| *m)
            .sum()
    }

    /// Affine multiplicities non-negative, no opposite pair `{P, ~P}` with
    /// `P != ~P` in the support, special points of multiplicity at most one,
    /// and the coefficient of infinity equal to minus the affine weight.
    /// Points off the curve make the divisor not semi-reduced.
    pub fn is_semi_reduced(&self, curve: &CurveParams) -> bool {
        for (p, &m) in &self.terms {
            if *p == Point::Infinity {
                continue;
            }
            if m < 0 {
                return false;
            }
            let Ok(opp) = curve.opposite_point(p) else {
                return false;
            };
            if opp == *p {
                if m > 1 {
                    return false;
                }
            } else if self.terms.contains_key(&opp) {
                return false;
            }
        }
        self.order_at(&Point::Infinity) == -self.affine_weight()
    }

    /// Semi-reduced with affine weight at most g.
    pub fn is_reduced(&self, curve: &CurveParams) -> bool {
        self.is_semi_reduced(curve) && self.affine_weight() <= curve.genus() as i64
    }
}

/// Result of expanding a Mumford pair into points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExplicitForm {
    Split(ExplicitDivisor),
    /// `u` has a factor without roots in F_p: the points live in an extension.
    NotSplit,
}

impl CurveParams {
    /// `u = prod (x - x_i)^{m_i}` and `v` the unique branch with `deg v < deg u`
    /// through every `(x_i, y_i)`, lifted to `(x - x_i)^{m_i}` by Newton
    /// iteration and glued with the Chinese remainder theorem.
    pub fn explicit_to_mumford(
        &self,
        d: &ExplicitDivisor,
    ) -> Result<MumfordDivisor, JacobianError> {
        if !d.is_reduced(self) {
            return Err(JacobianError::NotReduced);
        }
        let field = self.field();
        let mut locals: Vec<(Polynomial, Polynomial)> = Vec::new();
        for (p, m) in d.terms() {
            let Point::Affine { x, y } = p else { continue };
            let modulus = pow_poly(&Polynomial::linear_root(x), m as usize);
            let branch = if m == 1 {
                Polynomial::constant(y)
            } else {
                self.lift_branch(y, &modulus, m as usize)?
            };
            locals.push((modulus, branch));
        }
        let mut u = Polynomial::one(field);
        for (m, _) in &locals {
            u = &u * m;
        }
        let mut v = Polynomial::zero(field);
        for (m, branch) in &locals {
            let cofactor = u.exact_div(m);
            let (g, s, _) = Polynomial::xgcd_raw(&cofactor, m);
            if !g.is_one() {
                return Err(JacobianError::UnsupportedMultiplicity);
            }
            let idempotent = &cofactor * &s;
            v = &v + &(&idempotent * branch);
        }
        let v = v.rem(&u);
        MumfordDivisor::new(u, v, self)
    }

    /// Newton lifting of the root `y` of `Y^2 + h Y - f` modulo `modulus`.
    fn lift_branch(
        &self,
        y: &FieldElement,
        modulus: &Polynomial,
        precision: usize,
    ) -> Result<Polynomial, JacobianError> {
        let mut v = Polynomial::constant(y);
        for _ in 0..precision {
            let value = (&(&(&v * &v) + &(&v * self.h())) - self.f()).rem(modulus);
            if value.is_zero() {
                break;
            }
            let slope = (&(&v + &v) + self.h()).rem(modulus);
            let (g, inv, _) = Polynomial::xgcd_raw(&slope, modulus);
            if !g.is_one() {
                // special point: 2y + h vanishes, no unique lift
                return Err(JacobianError::UnsupportedMultiplicity);
            }
            v = (&v - &(&value * &inv)).rem(modulus);
        }
        Ok(v)
    }

    /// Points of a reduced divisor, when `u` splits into linear factors over
    /// F_p. `NotSplit` is an ordinary outcome, not an error.
    pub fn mumford_to_explicit(&self, d: &MumfordDivisor) -> Result<ExplicitForm, JacobianError> {
        self.validate_divisor(d)?;
        let Some(roots) = split_roots(d.u()) else {
            return Ok(ExplicitForm::NotSplit);
        };
        let affine = roots.into_iter().map(|(x, m)| {
            let y = d.v().eval(&x).expect("same field");
            (Point::affine(x, y), m as i64)
        });
        Ok(ExplicitForm::Split(ExplicitDivisor::balanced(affine)))
    }
}

fn pow_poly(a: &Polynomial, n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(a.field()), |acc, _| &acc * a)
}

/// Fields this small are searched exhaustively for roots.
const EXHAUSTIVE_ROOT_LIMIT: u64 = 1 << 20;

/// Roots of `u` with multiplicities, or `None` if `u` does not split
/// completely over F_p.
pub(crate) fn split_roots(u: &Polynomial) -> Option<Vec<(FieldElement, usize)>> {
    let field = u.field();
    let deg = u.degree()?;
    if deg == 0 {
        return Some(Vec::new());
    }
    let distinct = if field.modulus() <= &BigUint::from(EXHAUSTIVE_ROOT_LIMIT) {
        let p = field.modulus().iter_u64_digits().next().unwrap_or(0);
        (0..p)
            .map(|x| field.element_u64(x))
            .filter(|x| u.eval(x).expect("same field").is_zero())
            .collect()
    } else {
        // gcd(u, x^p - x) is the product of the distinct linear factors
        let x = Polynomial::x(field);
        let xp = x.pow_mod(field.modulus(), u);
        let (linear, _, _) = Polynomial::xgcd_raw(u, &(&xp - &x));
        let mut roots = Vec::new();
        equal_degree_roots(&linear, &mut roots);
        roots
    };
    let mut out = Vec::new();
    let mut rest = u.clone();
    for x in distinct {
        let factor = Polynomial::linear_root(&x);
        let mut m = 0;
        loop {
            let (q, r) = rest.div_rem_raw(&factor);
            if !r.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        out.push((x, m));
    }
    if rest.degree() == Some(0) {
        out.sort();
        Some(out)
    } else {
        None
    }
}

/// Roots of a squarefree product of distinct linear factors, by
/// Cantor-Zassenhaus splitting with deterministic shifts `(x + delta)`.
fn equal_degree_roots(g: &Polynomial, out: &mut Vec<FieldElement>) {
    let field = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let monic = g.make_monic().expect("nonzero");
            out.push(monic.coeff(0).neg());
        }
        Some(_) => {
            let half = (field.modulus() - 1u32) >> 1u32;
            let mut delta = 0u64;
            loop {
                let shifted =
                    Polynomial::from_raw(field, vec![field.raw_from_u64(delta), field.raw_one()]);
                let t = &shifted.pow_mod(&half, g) - &Polynomial::one(field);
                let (d, _, _) = Polynomial::xgcd_raw(g, &t);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap_or(0) {
                    equal_degree_roots(&d, out);
                    equal_degree_roots(&g.exact_div(&d), out);
                    return;
                }
                delta += 1;
            }
        }
    }
}
