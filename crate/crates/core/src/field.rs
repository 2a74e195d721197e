//! Exact arithmetic in `K = Q(√-D)` over the integral basis `(1, ω)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::util::{fmt_rational, rat};
use crate::{Error, Rational, Result};

/// Which generator of `O_K` over `Z` is in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmegaKind {
    /// `ω = √-D`, for `D ≡ 1, 2 (mod 4)`.
    SqrtD,
    /// `ω = (1 + √-D)/2`, for `D ≡ 3 (mod 4)`.
    HalfOnePlusSqrtD,
}

/// The imaginary quadratic field `Q(√-D)` for squarefree `D ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: i64,
    disc: i64,
    omega: OmegaKind,
    unit_count: u32,
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidD(d));
        }
        if !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        let (disc, omega) = if d % 4 == 3 {
            (-d, OmegaKind::HalfOnePlusSqrtD)
        } else {
            (-4 * d, OmegaKind::SqrtD)
        };
        let unit_count = match d {
            1 => 4,
            3 => 6,
            _ => 2,
        };
        Ok(QuadField {
            d,
            disc,
            omega,
            unit_count,
        })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn omega_kind(&self) -> OmegaKind {
        self.omega
    }

    /// Number of roots of unity in `O_K`.
    pub fn unit_count(&self) -> u32 {
        self.unit_count
    }

    /// Trace of `ω`; its minimal polynomial is `x² - t·x + n`.
    pub fn omega_trace(&self) -> i64 {
        match self.omega {
            OmegaKind::SqrtD => 0,
            OmegaKind::HalfOnePlusSqrtD => 1,
        }
    }

    /// Norm of `ω`.
    pub fn omega_norm(&self) -> i64 {
        match self.omega {
            OmegaKind::SqrtD => self.d,
            OmegaKind::HalfOnePlusSqrtD => (1 + self.d) / 4,
        }
    }

    pub fn element(&self, u: Rational, v: Rational) -> FieldElement {
        FieldElement { field: *self, u, v }
    }

    pub fn int_element(&self, u: i64, v: i64) -> FieldElement {
        self.element(rat(u), rat(v))
    }

    pub fn rational(&self, r: Rational) -> FieldElement {
        self.element(r, Rational::zero())
    }

    pub fn zero(&self) -> FieldElement {
        self.int_element(0, 0)
    }

    pub fn one(&self) -> FieldElement {
        self.int_element(1, 0)
    }

    pub fn omega(&self) -> FieldElement {
        self.int_element(0, 1)
    }

    /// `√-D` written in the `(1, ω)` basis.
    pub fn sqrt_minus_d(&self) -> FieldElement {
        match self.omega {
            OmegaKind::SqrtD => self.int_element(0, 1),
            OmegaKind::HalfOnePlusSqrtD => self.int_element(-1, 2),
        }
    }

    /// Inverse of [`FieldElement::embed`].
    pub fn from_plane(&self, pt: &PlanePoint) -> FieldElement {
        match self.omega {
            OmegaKind::SqrtD => self.element(pt.p.clone(), pt.q.clone()),
            OmegaKind::HalfOnePlusSqrtD => {
                let v = &pt.q * rat(2);
                self.element(&pt.p - &pt.q, v)
            }
        }
    }

    /// All units of `O_K`, i.e. the integral elements of norm one.
    pub fn units(&self) -> Vec<FieldElement> {
        let mut out = vec![self.one(), -self.one()];
        match (self.d, self.omega) {
            (1, _) => {
                out.push(self.omega());
                out.push(-self.omega());
            }
            (3, _) => {
                // ω = (1+√-3)/2 is a primitive sixth root of unity
                let w = self.omega();
                let w2 = &w * &w;
                out.extend([w.clone(), -w, w2.clone(), -w2]);
            }
            _ => {}
        }
        out
    }
}

/// Trial-division squarefree test for `d ≥ 1`.
pub fn is_squarefree(d: i64) -> bool {
    let mut n = d;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Binary operations accepted by [`FieldElement::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElemOp {
    Add,
    Sub,
    Mul,
    /// Negates the first operand; the second is only checked for field agreement.
    Neg,
    /// Conjugates the first operand; the second is only checked for field agreement.
    Conj,
}

/// An element `u + v·ω` of `K` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: QuadField,
    u: Rational,
    v: Rational,
}

impl FieldElement {
    pub fn field(&self) -> &QuadField {
        &self.field
    }

    /// Coefficient of `1`.
    pub fn u(&self) -> &Rational {
        &self.u
    }

    /// Coefficient of `ω`.
    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.u.is_integer() && self.v.is_integer()
    }

    pub fn apply(&self, op: ElemOp, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(match op {
            ElemOp::Add => self + other,
            ElemOp::Sub => self - other,
            ElemOp::Mul => self * other,
            ElemOp::Neg => -self.clone(),
            ElemOp::Conj => self.conj(),
        })
    }

    pub fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.d, other.field.d));
        }
        Ok(())
    }

    /// Galois conjugate; `conj(ω) = t - ω`.
    pub fn conj(&self) -> FieldElement {
        let t = rat(self.field.omega_trace());
        FieldElement {
            field: self.field,
            u: &self.u + &t * &self.v,
            v: -&self.v,
        }
    }

    /// `e · conj(e) = u² + t·u·v + n·v²`.
    pub fn norm(&self) -> Rational {
        let t = rat(self.field.omega_trace());
        let n = rat(self.field.omega_norm());
        &self.u * &self.u + t * &self.u * &self.v + n * &self.v * &self.v
    }

    pub fn trace(&self) -> Rational {
        rat(2) * &self.u + rat(self.field.omega_trace()) * &self.v
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement {
            field: self.field,
            u: &self.u * r,
            v: &self.v * r,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(self.conj().scale(&n.recip()))
    }

    /// Image in the plane as `p + q·√D·i`.
    pub fn embed(&self) -> PlanePoint {
        match self.field.omega {
            OmegaKind::SqrtD => PlanePoint::new(self.u.clone(), self.v.clone()),
            OmegaKind::HalfOnePlusSqrtD => {
                let half = Rational::new(BigInt::one(), BigInt::from(2));
                let hv = &self.v * half;
                PlanePoint::new(&self.u + &hv, hv)
            }
        }
    }
}

impl fmt::Display for FieldElement {
    /// Renders `u + v·ω` in terms of `√-D`, e.g. `(1 + √-23)/2` or `3 + 2√-5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pt = self.embed();
        let root = format!("√-{}", self.field.d);
        let (re, im) = (pt.p, pt.q);
        let im_str = |im: &Rational| -> String {
            if im.abs().is_one() {
                root.clone()
            } else if im.is_integer() {
                format!("{}{}", im.abs(), root)
            } else {
                format!("({}){}", fmt_rational(&im.abs()), root)
            }
        };
        // a common denominator of two keeps the half-integral case readable
        let two = rat(2);
        let halves = !re.is_integer() && (&re * &two).is_integer() && (&im * &two).is_integer();
        if halves {
            let (r2, i2) = (&re * &two, &im * &two);
            let body = join_terms(&fmt_rational(&r2), &r2, &i2, &im_str(&i2));
            return write!(f, "({body})/2");
        }
        write!(
            f,
            "{}",
            join_terms(&fmt_rational(&re), &re, &im, &im_str(&im))
        )
    }
}

fn join_terms(re_s: &str, re: &Rational, im: &Rational, im_s: &str) -> String {
    match (re.is_zero(), im.is_zero()) {
        (_, true) => re_s.to_string(),
        (true, false) => {
            if im.is_negative() {
                format!("-{im_s}")
            } else {
                im_s.to_string()
            }
        }
        (false, false) => {
            let sign = if im.is_negative() { '-' } else { '+' };
            format!("{re_s} {sign} {im_s}")
        }
    }
}

fn same(a: &FieldElement, b: &FieldElement) {
    assert_eq!(
        a.field, b.field,
        "arithmetic on elements of different fields"
    );
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        same(self, rhs);
        FieldElement {
            field: self.field,
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        same(self, rhs);
        FieldElement {
            field: self.field,
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    /// Expands `ω² = t·ω - n`.
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        same(self, rhs);
        let t = rat(self.field.omega_trace());
        let n = rat(self.field.omega_norm());
        let vv = &self.v * &rhs.v;
        FieldElement {
            field: self.field,
            u: &self.u * &rhs.u - n * &vv,
            v: &self.u * &rhs.v + &self.v * &rhs.u + t * vv,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field,
            u: -self.u,
            v: -self.v,
        }
    }
}

/// A point `p + q·√D·i` of the complex plane with rational `p, q`.
///
/// The Euclidean inner product of two such points is `p₁p₂ + D·q₁q₂`, so the
/// caller supplies `D` where a metric is needed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePoint {
    pub p: Rational,
    pub q: Rational,
}

impl PlanePoint {
    pub fn new(p: Rational, q: Rational) -> Self {
        PlanePoint { p, q }
    }

    pub fn origin() -> Self {
        PlanePoint::new(Rational::zero(), Rational::zero())
    }

    pub fn dot(&self, other: &PlanePoint, d: i64) -> Rational {
        &self.p * &other.p + rat(d) * &self.q * &other.q
    }

    pub fn norm_sq(&self, d: i64) -> Rational {
        self.dot(self, d)
    }

    pub fn dist_sq(&self, other: &PlanePoint, d: i64) -> Rational {
        (self - other).norm_sq(d)
    }

    pub fn scale(&self, r: &Rational) -> PlanePoint {
        PlanePoint::new(&self.p * r, &self.q * r)
    }

    /// Floating-point Cartesian coordinates; only for rendering and sampling oracles.
    pub fn to_f64(&self, d: i64) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        (p, q * (d as f64).sqrt())
    }
}

impl Add for &PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: &PlanePoint) -> PlanePoint {
        PlanePoint::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: &PlanePoint) -> PlanePoint {
        PlanePoint::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Neg for &PlanePoint {
    type Output = PlanePoint;
    fn neg(self) -> PlanePoint {
        PlanePoint::new(-&self.p, -&self.q)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.p), fmt_rational(&self.q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn make_field_descriptors() {
        let k = QuadField::new(5).unwrap();
        assert_eq!(k.disc(), -20);
        assert_eq!(k.omega_kind(), OmegaKind::SqrtD);
        assert_eq!(k.unit_count(), 2);

        let k = QuadField::new(3).unwrap();
        assert_eq!(k.disc(), -3);
        assert_eq!(k.omega_kind(), OmegaKind::HalfOnePlusSqrtD);
        assert_eq!(k.unit_count(), 6);

        assert_eq!(QuadField::new(1).unwrap().unit_count(), 4);
        assert_eq!(QuadField::new(2).unwrap().disc(), -8);
        assert!(matches!(QuadField::new(12), Err(Error::NotSquarefree(12))));
        assert!(matches!(QuadField::new(0), Err(Error::InvalidD(0))));
        assert!(matches!(QuadField::new(-5), Err(Error::InvalidD(-5))));
    }

    #[test]
    fn omega_squared_from_minimal_polynomial() {
        let k = QuadField::new(7).unwrap();
        let w = k.omega();
        assert_eq!(&w * &w, k.int_element(-2, 1));
        let k = QuadField::new(5).unwrap();
        assert_eq!(&k.omega() * &k.omega(), k.int_element(-5, 0));
    }

    #[test]
    fn additive_identity() {
        let k = QuadField::new(13).unwrap();
        let e = k.element(r(3, 7), r(-2, 5));
        assert_eq!(&e + &k.zero(), e);
    }

    #[test]
    fn product_against_pair_multiplier() {
        // (1+ω)(1-ω) in D=5 by the pair rule (a,b)(c,d) = (ac - 5bd, ad + bc)
        let pair = |(a, b): (i64, i64), (c, d): (i64, i64)| (a * c - 5 * b * d, a * d + b * c);
        assert_eq!(pair((1, 1), (1, -1)), (6, 0));
        let k = QuadField::new(5).unwrap();
        let x = k.int_element(1, 1);
        let y = k.int_element(1, -1);
        assert_eq!(&x * &y, k.int_element(6, 0));
    }

    #[test]
    fn norms() {
        let k = QuadField::new(5).unwrap();
        assert_eq!(k.sqrt_minus_d().norm(), r(5, 1));
        let k = QuadField::new(7).unwrap();
        assert_eq!(k.omega().norm(), r(2, 1));
        let k = QuadField::new(23).unwrap();
        let w = k.omega();
        assert_eq!(w.norm(), r(6, 1));
        assert_eq!(w.embed().norm_sq(23), r(6, 1));
    }

    #[test]
    fn embeddings() {
        let k = QuadField::new(5).unwrap();
        assert_eq!(k.sqrt_minus_d().embed(), PlanePoint::new(r(0, 1), r(1, 1)));
        let e = k.int_element(3, 2);
        assert_eq!(e.embed(), PlanePoint::new(r(3, 1), r(2, 1)));
        assert_eq!(e.embed().norm_sq(5), r(29, 1));
        assert_eq!(e.norm(), r(29, 1));

        let k = QuadField::new(7).unwrap();
        assert_eq!(k.omega().embed(), PlanePoint::new(r(1, 2), r(1, 2)));
        let e = k.element(r(2, 3), r(-5, 4));
        assert_eq!(k.from_plane(&e.embed()), e);
    }

    #[test]
    fn units_have_norm_one() {
        for d in [1, 2, 3, 7] {
            let k = QuadField::new(d).unwrap();
            let units = k.units();
            assert_eq!(units.len() as u32, k.unit_count());
            for u in &units {
                assert!(u.is_integral());
                assert_eq!(u.norm(), r(1, 1));
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let a = QuadField::new(5).unwrap().one();
        let b = QuadField::new(7).unwrap().one();
        assert!(matches!(
            a.apply(ElemOp::Add, &b),
            Err(Error::FieldMismatch(5, 7))
        ));
        assert_eq!(a.apply(ElemOp::Neg, &a).unwrap(), -a.clone());
    }

    #[test]
    fn display() {
        let k = QuadField::new(23).unwrap();
        assert_eq!(k.int_element(1, 1).to_string(), "(3 + √-23)/2");
        assert_eq!(k.int_element(1, 2).to_string(), "2 + √-23");
        assert_eq!(k.omega().to_string(), "(1 + √-23)/2");
        let k = QuadField::new(5).unwrap();
        assert_eq!(k.int_element(3, 2).to_string(), "3 + 2√-5");
        assert_eq!(k.int_element(1, -1).to_string(), "1 - √-5");
        assert_eq!(k.int_element(2, 0).to_string(), "2");
        assert_eq!(k.int_element(0, 1).to_string(), "√-5");
    }
}
