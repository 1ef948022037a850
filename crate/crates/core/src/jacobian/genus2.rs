//! Genus-2 group law for `p < 2^64` on fixed-size arrays.
//!
//! Works on the isomorphic model `y^2 = F(x)`, `F = f + h^2/4`, reached by
//! `v -> v + h/2 mod u`. Montgomery residues throughout. Only the generic
//! cases are handled here (two coprime weight-2 divisors; doubling a weight-2
//! divisor whose support avoids the ramification points); the rest falls back
//! to Cantor on the original curve.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{CurveParams, MumfordDivisor};
use crate::field::FieldElement;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug)]
struct Mont {
    p: u64,
    /// `-p^-1 mod 2^64`
    np: u64,
    /// `2^128 mod p`
    r2: u64,
}

impl Mont {
    fn new(p: u64) -> Self {
        debug_assert!(p % 2 == 1);
        let mut inv = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r1 = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r1 as u128 * r1 as u128) % p as u128) as u64;
        Mont {
            p,
            np: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        let t = a as u128 * b as u128;
        let m = (t as u64).wrapping_mul(self.np);
        let (s, carry) = t.overflowing_add(m as u128 * self.p as u128);
        let hi = (s >> 64) as u64;
        if carry || hi >= self.p {
            hi.wrapping_sub(self.p)
        } else {
            hi
        }
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let (s, carry) = a.overflowing_add(b);
        if carry || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a.wrapping_sub(b).wrapping_add(self.p)
        }
    }

    #[inline]
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn to_mont(self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    fn to_int(self, a: u64) -> u64 {
        self.mul(a, 1)
    }

    /// Fermat inversion; `a` must be nonzero.
    fn inv(&self, a: u64) -> u64 {
        let mut e = self.p - 2;
        let mut base = a;
        let mut acc = self.to_mont(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// A reduced divisor on the `h = 0` model: `u = x^w + u[1] x + u[0]`
/// (only the low `w` entries used), `v = v[1] x + v[0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct FDiv {
    w: u8,
    u: [u64; 2],
    v: [u64; 2],
}

impl FDiv {
    pub(crate) const ZERO: FDiv = FDiv {
        w: 0,
        u: [0; 2],
        v: [0; 2],
    };
}

#[derive(Clone, Debug)]
pub(crate) struct Genus2 {
    m: Mont,
    /// `F_0 .. F_4`; `F` is monic of degree 5
    f: [u64; 5],
    half_h: Polynomial,
}

impl Genus2 {
    pub(crate) fn for_curve(curve: &CurveParams) -> Option<Self> {
        if curve.genus() != 2 {
            return None;
        }
        let p = curve.field().modulus().to_u64()?;
        let m = Mont::new(p);
        let field = curve.field();
        let half = field.element_u64(2).inv().ok()?;
        let half_h = curve.h().scale(&half).ok()?;
        let big_f = curve.f() + &(&half_h * &half_h);
        let mut f = [0u64; 5];
        for (i, c) in f.iter_mut().enumerate() {
            *c = m.to_mont(big_f.coeff(i).value().to_u64()?);
        }
        Some(Genus2 { m, f, half_h })
    }

    fn lift(&self, e: &FieldElement) -> u64 {
        self.m.to_mont(e.value().to_u64().expect("p < 2^64"))
    }

    pub(crate) fn to_fast(&self, d: &MumfordDivisor) -> FDiv {
        let w = d.weight();
        if w == 0 {
            return FDiv::ZERO;
        }
        let v = (d.v() + &self.half_h).rem(d.u());
        let mut out = FDiv {
            w: w as u8,
            u: [0; 2],
            v: [0; 2],
        };
        for i in 0..w {
            out.u[i] = self.lift(&d.u().coeff(i));
            out.v[i] = self.lift(&v.coeff(i));
        }
        out
    }

    pub(crate) fn to_mumford(&self, curve: &CurveParams, d: &FDiv) -> MumfordDivisor {
        let field = curve.field();
        if d.w == 0 {
            return MumfordDivisor::identity(field);
        }
        let w = d.w as usize;
        let down = |a: u64| field.element(&BigUint::from(self.m.to_int(a)));
        let mut u: Vec<FieldElement> = d.u[..w].iter().map(|&c| down(c)).collect();
        u.push(field.one());
        let v: Vec<FieldElement> = d.v[..w].iter().map(|&c| down(c)).collect();
        let u = Polynomial::from_elements(field, &u).expect("same field");
        let v = Polynomial::from_elements(field, &v).expect("same field");
        let v = (&v - &self.half_h).rem(&u);
        MumfordDivisor::from_parts(u, v)
    }

    pub(crate) fn neg(&self, d: &FDiv) -> FDiv {
        FDiv {
            w: d.w,
            u: d.u,
            v: [self.m.neg(d.v[0]), self.m.neg(d.v[1])],
        }
    }

    pub(crate) fn add(&self, curve: &CurveParams, a: &FDiv, b: &FDiv) -> FDiv {
        if a.w == 0 {
            return *b;
        }
        if b.w == 0 {
            return *a;
        }
        if a == b {
            return self.double(curve, a);
        }
        if a.w == 2 && b.w == 2 {
            if let Some(d) = self.add22(a, b) {
                return d;
            }
        }
        let sum = curve.add(&self.to_mumford(curve, a), &self.to_mumford(curve, b));
        self.to_fast(&sum)
    }

    pub(crate) fn double(&self, curve: &CurveParams, a: &FDiv) -> FDiv {
        if a.w == 0 {
            return *a;
        }
        if a.w == 2 {
            if let Some(d) = self.double2(a) {
                return d;
            }
        }
        self.to_fast(&curve.double(&self.to_mumford(curve, a)))
    }

    /// `(F - v^2) / u` for weight-2 `(u, v)`; monic of degree 3.
    fn k_of(&self, a: &FDiv) -> [u64; 4] {
        let m = &self.m;
        let (u0, u1) = (a.u[0], a.u[1]);
        let (v0, v1) = (a.v[0], a.v[1]);
        let two = m.add(v0, v0);
        let mut n = [
            m.sub(self.f[0], m.mul(v0, v0)),
            m.sub(self.f[1], m.mul(two, v1)),
            m.sub(self.f[2], m.mul(v1, v1)),
            self.f[3],
            self.f[4],
            m.to_mont(1),
        ];
        let q = div_monic2(m, &mut n, u0, u1);
        [q[0], q[1], q[2], q[3]]
    }

    fn add22(&self, a: &FDiv, b: &FDiv) -> Option<FDiv> {
        let m = &self.m;
        // invert u1 mod u2, target v2 - v1
        let z = [m.sub(a.u[0], b.u[0]), m.sub(a.u[1], b.u[1])];
        let w = [m.sub(b.v[0], a.v[0]), m.sub(b.v[1], a.v[1])];
        self.compose_reduce(a, b.u, self.k_of(a), w, z)
    }

    fn double2(&self, a: &FDiv) -> Option<FDiv> {
        let m = &self.m;
        let k = self.k_of(a);
        // k mod u, inverted against 2v mod u
        let mut kr = [k[0], k[1], k[2], k[3]];
        let _ = div_monic2(m, &mut kr, a.u[0], a.u[1]);
        let z = [m.add(a.v[0], a.v[0]), m.add(a.v[1], a.v[1])];
        self.compose_reduce(a, a.u, k, [kr[0], kr[1]], z)
    }

    /// With `s = w z^-1 mod u2` and `V = v1 + s u1`, returns
    /// `u' = monic((F - V^2) / (u1 u2))`, `v' = -V mod u'`.
    /// `None` when `z` is not invertible mod `u2` or `deg s < 1`.
    fn compose_reduce(
        &self,
        a: &FDiv,
        u2: [u64; 2],
        k: [u64; 4],
        w: [u64; 2],
        z: [u64; 2],
    ) -> Option<FDiv> {
        let m = &self.m;
        let (b0, b1) = (u2[0], u2[1]);
        let (z0, z1) = (z[0], z[1]);
        // r = res(z, u2); r / z = (-z1) x + (z0 - b1 z1) mod u2
        let r = m.add(
            m.sub(m.mul(z0, z0), m.mul(m.mul(b1, z0), z1)),
            m.mul(b0, m.mul(z1, z1)),
        );
        if r == 0 {
            return None;
        }
        let i1 = m.neg(z1);
        let i0 = m.sub(z0, m.mul(b1, z1));
        let (w0, w1) = (w[0], w[1]);
        let t = m.mul(w1, i1);
        let sr1 = m.sub(m.add(m.mul(w1, i0), m.mul(w0, i1)), m.mul(t, b1));
        let sr0 = m.sub(m.mul(w0, i0), m.mul(t, b0));
        if sr1 == 0 {
            return None;
        }
        // one inversion for both 1/r and 1/s1
        let inv = m.inv(m.mul(r, sr1));
        let r_inv = m.mul(inv, sr1);
        let s1 = m.mul(sr1, r_inv);
        let s0 = m.mul(sr0, r_inv);
        let s1_inv = m.mul(m.mul(inv, r), r);

        let (a0, a1) = (a.u[0], a.u[1]);
        let (p0, p1) = (a.v[0], a.v[1]);
        // V = v1 + s u1
        let cap_v = [
            m.add(m.mul(s0, a0), p0),
            m.add(m.add(m.mul(s1, a0), m.mul(s0, a1)), p1),
            m.add(m.mul(s1, a1), s0),
            s1,
        ];
        // t = 2 v1 + s u1 = V + v1
        let tt = [m.add(cap_v[0], p0), m.add(cap_v[1], p1), cap_v[2], cap_v[3]];
        // num = k - s t, degree 4 with leading -s1^2
        let mut num = [
            m.sub(k[0], m.mul(s0, tt[0])),
            m.sub(k[1], m.add(m.mul(s0, tt[1]), m.mul(s1, tt[0]))),
            m.sub(k[2], m.add(m.mul(s0, tt[2]), m.mul(s1, tt[1]))),
            m.sub(k[3], m.add(m.mul(s0, tt[3]), m.mul(s1, tt[2]))),
            m.neg(m.mul(s1, tt[3])),
        ];
        let q = div_monic2(m, &mut num, b0, b1);
        // q = -s1^2 x^2 + q1 x + q0
        let lead_inv = m.neg(m.mul(s1_inv, s1_inv));
        let nu1 = m.mul(q[1], lead_inv);
        let nu0 = m.mul(q[0], lead_inv);
        // v' = -V mod u'
        let mut vr = cap_v;
        let _ = div_monic2(m, &mut vr, nu0, nu1);
        Some(FDiv {
            w: 2,
            u: [nu0, nu1],
            v: [m.neg(vr[0]), m.neg(vr[1])],
        })
    }
}

/// Divides `n` (coefficients low to high) by `x^2 + u1 x + u0` in place.
/// The remainder is left in `n[0..2]`; the quotient is returned.
fn div_monic2<const N: usize>(m: &Mont, n: &mut [u64; N], u0: u64, u1: u64) -> [u64; N] {
    let mut q = [0u64; N];
    for i in (2..N).rev() {
        let c = n[i];
        q[i - 2] = c;
        n[i] = 0;
        n[i - 1] = m.sub(n[i - 1], m.mul(c, u1));
        n[i - 2] = m.sub(n[i - 2], m.mul(c, u0));
    }
    q
}
