//! Fractional ideals of `O_K` in normal form `scale · (aZ + (b + ω)Z)`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{FieldElement, QuadField};
use crate::forms::{reduced_forms, QuadForm};
use crate::lattice::PlanarLattice;
use crate::util::{gcd_all, is_prime_u64, lcm_denoms, rat_int, rat_mod};
use crate::{Error, Rational, Result};

/// A nonzero fractional ideal.
///
/// The primitive part `aZ + (b + ω)Z` satisfies `0 ≤ b < a` and
/// `a | Nm(b + ω)`, and `scale > 0`, so two ideals are equal exactly when
/// their fields, scales and `(a, b)` agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    field: QuadField,
    scale: Rational,
    a: BigInt,
    b: BigInt,
}

/// Ideal class, labelled by the canonical reduced form of the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealClassLabel {
    pub form: QuadForm,
}

impl IdealClassLabel {
    pub fn principal(field: &QuadField) -> Self {
        IdealClassLabel {
            form: QuadForm::identity(field.disc()),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.form.is_identity()
    }

    pub fn compose(&self, other: &IdealClassLabel) -> Self {
        IdealClassLabel {
            form: self.form.compose(&other.form),
        }
    }

    pub fn inverse(&self) -> Self {
        IdealClassLabel {
            form: self.form.inverse(),
        }
    }

    /// `self^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        IdealClassLabel {
            form: base.form.pow(e.unsigned_abs()),
        }
    }

    pub fn order(&self) -> u64 {
        self.form.order()
    }
}

impl fmt::Display for IdealClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

/// How a rational prime decomposes in `O_K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    Split,
    Ramified,
    Inert,
}

impl FracIdeal {
    /// The unit ideal `R = O_K`.
    pub fn unit(field: &QuadField) -> Self {
        FracIdeal {
            field: *field,
            scale: Rational::one(),
            a: BigInt::one(),
            b: BigInt::zero(),
        }
    }

    /// Builds an ideal from normal-form data, validating it.
    pub fn from_parts(field: &QuadField, scale: Rational, a: BigInt, b: BigInt) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::NotAnIdeal(format!("scale {scale} is not positive")));
        }
        if !a.is_positive() || b.is_negative() || b >= a {
            return Err(Error::NotAnIdeal(format!(
                "need 0 <= b < a, got a={a}, b={b}"
            )));
        }
        if !norm_b_omega(field, &b).is_multiple_of(&a) {
            return Err(Error::NotAnIdeal(format!(
                "{a} does not divide Nm({b} + ω)"
            )));
        }
        Ok(FracIdeal {
            field: *field,
            scale,
            a,
            b,
        })
    }

    /// Normal form of the Z-module spanned by `elems`, which must be an `O_K`-module of rank two.
    pub fn from_z_module(field: &QuadField, elems: &[FieldElement]) -> Result<Self> {
        for e in elems {
            if e.field() != field {
                return Err(Error::FieldMismatch(field.d(), e.field().d()));
            }
        }
        let l = lcm_denoms(elems.iter().flat_map(|e| [e.u(), e.v()]));
        let lr = rat_int(&l);
        let mut rows: Vec<(BigInt, BigInt)> = elems
            .iter()
            .map(|e| ((e.u() * &lr).to_integer(), (e.v() * &lr).to_integer()))
            .filter(|(x, y)| !(x.is_zero() && y.is_zero()))
            .collect();
        if rows.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        // Euclid on the ω column until a single row carries it
        let pivot = loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].1.is_zero()).collect();
            if nz.is_empty() {
                return Err(Error::NotAnIdeal("module has rank one".into()));
            }
            let p = *nz
                .iter()
                .min_by_key(|&&i| rows[i].1.abs())
                .expect("nonempty");
            if nz.len() == 1 {
                break p;
            }
            let (px, py) = rows[p].clone();
            for &i in nz.iter().filter(|&&i| i != p) {
                let q = rows[i].1.div_floor(&py);
                rows[i].0 -= &q * &px;
                rows[i].1 -= &q * &py;
            }
        };
        let (mut x0, mut y0) = rows.swap_remove(pivot);
        if y0.is_negative() {
            x0 = -x0;
            y0 = -y0;
        }
        let big_a = gcd_all(rows.iter().map(|(x, _)| x));
        if big_a.is_zero() {
            return Err(Error::NotAnIdeal("module has rank one".into()));
        }
        let big_b = x0.mod_floor(&big_a);
        if !big_a.is_multiple_of(&y0) || !big_b.is_multiple_of(&y0) {
            return Err(Error::NotAnIdeal(
                "not closed under multiplication by ω".into(),
            ));
        }
        let a = &big_a / &y0;
        let b = &big_b / &y0;
        if !norm_b_omega(field, &b).is_multiple_of(&a) {
            return Err(Error::NotAnIdeal(
                "not closed under multiplication by ω".into(),
            ));
        }
        Ok(FracIdeal {
            field: *field,
            scale: Rational::new(y0, l),
            a,
            b,
        })
    }

    /// The ideal generated (over `O_K`) by `gens`.
    pub fn from_generators(field: &QuadField, gens: &[FieldElement]) -> Result<Self> {
        let w = field.omega();
        let mut elems = Vec::with_capacity(2 * gens.len());
        for g in gens {
            if g.field() != field {
                return Err(Error::FieldMismatch(field.d(), g.field().d()));
            }
            elems.push(g.clone());
            elems.push(g * &w);
        }
        Self::from_z_module(field, &elems)
    }

    pub fn principal(g: &FieldElement) -> Result<Self> {
        Self::from_generators(g.field(), std::slice::from_ref(g))
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `scale² · a`; the index `|O_K / I|` for integral `I`.
    pub fn norm(&self) -> Rational {
        &self.scale * &self.scale * rat_int(&self.a)
    }

    /// The Z-basis `scale·a`, `scale·(b + ω)`.
    pub fn z_basis(&self) -> [FieldElement; 2] {
        let f = &self.field;
        let g1 = f.rational(&self.scale * rat_int(&self.a));
        let g2 = f
            .element(rat_int(&self.b), Rational::one())
            .scale(&self.scale);
        [g1, g2]
    }

    pub fn product(&self, other: &FracIdeal) -> Result<FracIdeal> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.d(), other.field.d()));
        }
        let [a1, a2] = self.z_basis();
        let [b1, b2] = other.z_basis();
        let prods = [&a1 * &b1, &a1 * &b2, &a2 * &b1, &a2 * &b2];
        Self::from_z_module(&self.field, &prods)
    }

    /// Galois conjugate ideal.
    pub fn conj(&self) -> FracIdeal {
        // conj(b + ω) = b + t - ω ≡ -(b + t) + ω  modulo aZ, up to sign
        let t = BigInt::from(self.field.omega_trace());
        let b = (-(&self.b) - t).mod_floor(&self.a);
        FracIdeal {
            field: self.field,
            scale: self.scale.clone(),
            a: self.a.clone(),
            b,
        }
    }

    /// `I⁻¹ = conj(I) / Nm(I)`.
    pub fn inverse(&self) -> FracIdeal {
        let c = self.conj();
        FracIdeal {
            scale: (&self.scale * rat_int(&self.a)).recip(),
            ..c
        }
    }

    pub fn pow(&self, e: i64) -> FracIdeal {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = FracIdeal::unit(&self.field);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// `g · I` for nonzero `g`.
    pub fn scaled_by(&self, g: &FieldElement) -> Result<FracIdeal> {
        self.product(&FracIdeal::principal(g)?)
    }

    pub fn contains(&self, e: &FieldElement) -> bool {
        if e.field() != &self.field {
            return false;
        }
        let k = e.v() / &self.scale;
        if !k.is_integer() {
            return false;
        }
        let x = e.u() - &k * &self.scale * rat_int(&self.b);
        (x / (&self.scale * rat_int(&self.a))).is_integer()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &FracIdeal) -> bool {
        other.z_basis().iter().all(|g| self.contains(g))
    }

    pub fn is_integral(&self) -> bool {
        self.scale.is_integer()
    }

    /// Membership in `E`, the fractional ideals containing `O_K`.
    pub fn in_e(&self) -> bool {
        self.contains(&self.field.one())
    }

    /// Canonical representative of `x` modulo this ideal: the unique
    /// congruent `X + Yω` with `0 ≤ Y < scale` and `0 ≤ X < scale·a`.
    pub fn coset_rep(&self, x: &FieldElement) -> FieldElement {
        let (k, y) = rat_mod(x.v(), &self.scale);
        let x1 = x.u() - rat_int(&k) * &self.scale * rat_int(&self.b);
        let (_, xr) = rat_mod(&x1, &(&self.scale * rat_int(&self.a)));
        self.field.element(xr, y)
    }

    pub fn class(&self) -> IdealClassLabel {
        let t = BigInt::from(self.field.omega_trace());
        let c = norm_b_omega(&self.field, &self.b) / &self.a;
        let form = QuadForm::new(self.a.clone(), -(BigInt::from(2) * &self.b + t), c);
        IdealClassLabel {
            form: form.reduce(),
        }
    }

    /// The primitive integral ideal `(A, (-B + √Δ)/2)` of a reduced form `(A, B, C)`.
    pub fn from_class(field: &QuadField, label: &IdealClassLabel) -> FracIdeal {
        let t = BigInt::from(field.omega_trace());
        let a = label.form.a.clone();
        let b: BigInt = (-&label.form.b - t) / 2;
        let b = b.mod_floor(&a);
        FracIdeal::from_parts(field, Rational::one(), a, b)
            .expect("reduced form of the field discriminant gives an ideal")
    }

    /// A generator when the ideal is principal: among the elements of norm
    /// `Nm(I)`, the one whose embedding is lexicographically largest.
    pub fn is_principal(&self) -> Option<FieldElement> {
        if !self.class().is_principal() {
            return None;
        }
        let norm = self.norm();
        let lattice = PlanarLattice::of_ideal(self);
        let [g1, g2] = self.z_basis();
        lattice
            .points_in_disk(&crate::field::PlanePoint::origin(), &norm)
            .into_iter()
            .map(|(x, y)| &g1.scale(&rat_int(&x)) + &g2.scale(&rat_int(&y)))
            .filter(|e| e.norm() == norm)
            .max_by(|e1, e2| e1.embed().cmp(&e2.embed()))
    }
}

impl Mul for &FracIdeal {
    type Output = FracIdeal;
    fn mul(self, rhs: &FracIdeal) -> FracIdeal {
        self.product(rhs)
            .expect("product of ideals in the same field")
    }
}

impl fmt::Display for FracIdeal {
    /// Shows the Z-basis, e.g. `(2, 1 + √-5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g1, g2] = self.z_basis();
        write!(f, "({g1}, {g2})")
    }
}

fn norm_b_omega(field: &QuadField, b: &BigInt) -> BigInt {
    let t = BigInt::from(field.omega_trace());
    let n = BigInt::from(field.omega_norm());
    b * b + t * b + n
}

/// Representatives of `I / C` for `C ⊆ I`: `Nm(C)/Nm(I)` elements of `I`,
/// each the canonical representative of its coset modulo `C`, zero first.
pub fn quotient_reps(i: &FracIdeal, c: &FracIdeal) -> Result<Vec<FieldElement>> {
    if i.field != c.field {
        return Err(Error::FieldMismatch(i.field.d(), c.field.d()));
    }
    if !i.contains_ideal(c) {
        return Err(Error::NotSubmodule);
    }
    let rows = (&c.scale / &i.scale).to_integer();
    let cols = (&c.scale * rat_int(&c.a) / (&i.scale * rat_int(&i.a))).to_integer();
    let [g1, g2] = i.z_basis();
    let mut out = Vec::new();
    let mut j = BigInt::zero();
    while j < rows {
        let base = g2.scale(&rat_int(&j));
        let mut k = BigInt::zero();
        while k < cols {
            let x = &base + &g1.scale(&rat_int(&k));
            out.push(c.coset_rep(&x));
            k += 1;
        }
        j += 1;
    }
    Ok(out)
}

/// Decomposition type of the rational prime `p`.
pub fn splitting(field: &QuadField, p: u64) -> Result<Splitting> {
    let roots = min_poly_roots(field, p)?;
    Ok(match roots.len() {
        0 => Splitting::Inert,
        1 => Splitting::Ramified,
        _ => Splitting::Split,
    })
}

fn min_poly_roots(field: &QuadField, p: u64) -> Result<Vec<u64>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let pp = p as i128;
    let t = field.omega_trace() as i128;
    let n = field.omega_norm() as i128;
    Ok((0..p)
        .filter(|&r| {
            let r = r as i128;
            (r * r - t * r + n).rem_euclid(pp) == 0
        })
        .collect())
}

/// Primes of `O_K` above `p` with their residue degrees. Each distinct root
/// `r` of the minimal polynomial of `ω` mod `p` gives `(p, ω - r)`; the list
/// is ordered by the normal-form `b`. An inert `p` gives `(p)` with degree 2.
pub fn primes_above(field: &QuadField, p: u64) -> Result<Vec<(FracIdeal, u32)>> {
    let roots = min_poly_roots(field, p)?;
    let pb = BigInt::from(p);
    if roots.is_empty() {
        let ideal = FracIdeal {
            field: *field,
            scale: Rational::from_integer(pb),
            a: BigInt::one(),
            b: BigInt::zero(),
        };
        return Ok(vec![(ideal, 2)]);
    }
    let mut out: Vec<(FracIdeal, u32)> = roots
        .into_iter()
        .map(|r| {
            let b = (-BigInt::from(r)).mod_floor(&pb);
            let ideal = FracIdeal::from_parts(field, Rational::one(), pb.clone(), b)
                .expect("(p, ω - r) is an ideal for a root r");
            (ideal, 1)
        })
        .collect();
    out.sort_by(|x, y| x.0.b.cmp(&y.0.b));
    Ok(out)
}

pub fn class_number(field: &QuadField) -> u64 {
    reduced_forms(field.disc()).len() as u64
}

/// One label per ideal class.
pub fn class_group(field: &QuadField) -> Vec<IdealClassLabel> {
    reduced_forms(field.disc())
        .into_iter()
        .map(|form| IdealClassLabel { form })
        .collect()
}
