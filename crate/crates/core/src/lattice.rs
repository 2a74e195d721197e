//! Planar lattices under the metric `|p + q√D·i|² = p² + D·q²`.
//!
//! Every computation is exact: Lagrange reduction, disk enumeration, closest
//! vectors, and the covering radius via the obtuse superbase, whose two
//! Delaunay triangles have the deep holes as circumcenters.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::PlanePoint;
use crate::ideal::FracIdeal;
use crate::util::{rat, rat_int, round_half_down};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarLattice {
    d: i64,
    v1: PlanePoint,
    v2: PlanePoint,
}

impl PlanarLattice {
    pub fn new(d: i64, v1: PlanePoint, v2: PlanePoint) -> Result<Self> {
        let l = PlanarLattice { d, v1, v2 };
        if l.det().is_zero() {
            return Err(Error::DegenerateLattice);
        }
        Ok(l)
    }

    /// The lattice spanned by the Z-basis of an ideal's normal form.
    pub fn of_ideal(ideal: &FracIdeal) -> Self {
        let [g1, g2] = ideal.z_basis();
        PlanarLattice {
            d: ideal.field().d(),
            v1: g1.embed(),
            v2: g2.embed(),
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn basis(&self) -> (&PlanePoint, &PlanePoint) {
        (&self.v1, &self.v2)
    }

    /// `p₁q₂ - p₂q₁`, proportional to the signed area of the basis cell.
    pub fn det(&self) -> Rational {
        &self.v1.p * &self.v2.q - &self.v2.p * &self.v1.q
    }

    /// Area of a fundamental cell in the true plane metric, squared.
    pub fn covolume_sq(&self) -> Rational {
        let det = self.det();
        &det * &det * rat(self.d)
    }

    pub fn gram(&self) -> (Rational, Rational, Rational) {
        (
            self.v1.norm_sq(self.d),
            self.v1.dot(&self.v2, self.d),
            self.v2.norm_sq(self.d),
        )
    }

    pub fn point(&self, x: &BigInt, y: &BigInt) -> PlanePoint {
        let (x, y) = (rat_int(x), rat_int(y));
        &self.v1.scale(&x) + &self.v2.scale(&y)
    }

    /// Real coordinates `(α, β)` with `z = α·v1 + β·v2`.
    pub fn coords(&self, z: &PlanePoint) -> (Rational, Rational) {
        let det = self.det();
        let alpha = (&z.p * &self.v2.q - &self.v2.p * &z.q) / &det;
        let beta = (&self.v1.p * &z.q - &z.p * &self.v1.q) / &det;
        (alpha, beta)
    }

    pub fn contains(&self, z: &PlanePoint) -> bool {
        let (a, b) = self.coords(z);
        a.is_integer() && b.is_integer()
    }

    /// Lagrange–Gauss reduction, normalized so the output depends only on the
    /// lattice: `|v1|² = λ₁²`, `|v2|² = λ₂²`, `⟨v1, v2⟩ ≤ 0`, and among the
    /// bases with those properties the lexicographically largest `(v1, v2)`.
    pub fn reduce(&self) -> PlanarLattice {
        let d = self.d;
        let (mut a, mut b) = (self.v1.clone(), self.v2.clone());
        if a.norm_sq(d) > b.norm_sq(d) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let mu = round_half_down(&(a.dot(&b, d) / a.norm_sq(d)));
            if !mu.is_zero() {
                b = &b - &a.scale(&rat_int(&mu));
            }
            if b.norm_sq(d) < a.norm_sq(d) {
                std::mem::swap(&mut a, &mut b);
            } else {
                break;
            }
        }
        let (m1, m2) = (a.norm_sq(d), b.norm_sq(d));
        let det_abs = (&a.p * &b.q - &b.p * &a.q).abs();
        let sum = &a + &b;
        let diff = &a - &b;
        let pool = [
            a.clone(),
            -&a,
            b.clone(),
            -&b,
            sum.clone(),
            -&sum,
            diff.clone(),
            -&diff,
        ];
        let mut best: Option<(PlanePoint, PlanePoint)> = None;
        for w1 in pool.iter().filter(|w| w.norm_sq(d) == m1) {
            for w2 in pool.iter().filter(|w| w.norm_sq(d) == m2) {
                if (&w1.p * &w2.q - &w2.p * &w1.q).abs() != det_abs {
                    continue;
                }
                if w1.dot(w2, d).is_positive() {
                    continue;
                }
                let cand = (w1.clone(), w2.clone());
                if best.as_ref().is_none_or(|bst| cand > *bst) {
                    best = Some(cand);
                }
            }
        }
        let (v1, v2) = best.expect("a Lagrange-reduced basis admits an obtuse sign choice");
        PlanarLattice { d, v1, v2 }
    }

    pub fn is_reduced(&self) -> bool {
        let d = self.d;
        let (n1, n2) = (self.v1.norm_sq(d), self.v2.norm_sq(d));
        n1 <= n2 && n2 <= (&self.v1 + &self.v2).norm_sq(d) && n2 <= (&self.v1 - &self.v2).norm_sq(d)
    }

    /// All lattice points `x·v1 + y·v2` with `|point - center|² ≤ r_sq`,
    /// returned as coefficient pairs in this basis, sorted.
    ///
    /// The bounds come from completing the square in the Gram form and are
    /// walked outward from the nearest integer, so no rounding is involved.
    pub fn points_in_disk(&self, center: &PlanePoint, r_sq: &Rational) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::new();
        if r_sq.is_negative() {
            return out;
        }
        let (g11, g12, g22) = self.gram();
        let det_g = &g11 * &g22 - &g12 * &g12;
        let (alpha, beta) = self.coords(center);
        let y_cost = |y: &BigInt| -> Rational {
            let dy = rat_int(y) - &beta;
            &det_g / &g11 * &dy * &dy
        };
        let scan_row = |y: &BigInt, out: &mut Vec<(BigInt, BigInt)>| -> bool {
            let rest = r_sq - y_cost(y);
            if rest.is_negative() {
                return false;
            }
            let dy = rat_int(y) - &beta;
            let c = &alpha - &g12 * &dy / &g11;
            let fits = |x: &BigInt| {
                let dx = rat_int(x) - &c;
                &g11 * &dx * &dx <= rest
            };
            let x0 = round_half_down(&c);
            if !fits(&x0) {
                return true;
            }
            let mut row = vec![x0.clone()];
            let mut x = &x0 - 1;
            while fits(&x) {
                row.push(x.clone());
                x -= 1;
            }
            let mut x = &x0 + 1;
            while fits(&x) {
                row.push(x.clone());
                x += 1;
            }
            out.extend(row.into_iter().map(|x| (x, y.clone())));
            true
        };
        let y0 = round_half_down(&beta);
        if scan_row(&y0, &mut out) {
            let mut y = &y0 - 1;
            while scan_row(&y, &mut out) {
                y -= 1;
            }
            let mut y = &y0 + 1;
            while scan_row(&y, &mut out) {
                y += 1;
            }
        }
        out.sort();
        out
    }

    /// A lattice point nearest to `z` and its squared distance. Ties go to
    /// the lexicographically smallest `(p, q)`.
    pub fn closest_vector(&self, z: &PlanePoint) -> (PlanePoint, Rational) {
        let reduced = self.reduce();
        let (alpha, beta) = reduced.coords(z);
        let babai = reduced.point(&round_half_down(&alpha), &round_half_down(&beta));
        let bound = babai.dist_sq(z, self.d);
        reduced
            .points_in_disk(z, &bound)
            .iter()
            .map(|(x, y)| {
                let pt = reduced.point(x, y);
                let dist = pt.dist_sq(z, self.d);
                (pt, dist)
            })
            .min_by(|(p1, d1), (p2, d2)| d1.cmp(d2).then_with(|| p1.cmp(p2)))
            .expect("the rounded point lies in its own disk")
    }

    /// Exact squared covering radius and a deep hole attaining it.
    ///
    /// With a reduced basis `⟨v1, v2⟩ ≤ 0`, the superbase `(v1, v2, -v1-v2)` is
    /// obtuse and the triangles `(0, v1, v1+v2)` and `(0, v2, v1+v2)` are
    /// non-obtuse Delaunay cells; the covering radius is their circumradius.
    pub fn covering_radius_sq(&self) -> Result<(Rational, PlanePoint)> {
        if self.det().is_zero() {
            return Err(Error::DegenerateLattice);
        }
        let red = self.reduce();
        let (v1, mut v2) = (red.v1.clone(), red.v2.clone());
        if v1.dot(&v2, self.d).is_positive() {
            v2 = -&v2;
        }
        let s = &v1 + &v2;
        let c1 = circumcenter(self.d, &v1, &s)?;
        let c2 = circumcenter(self.d, &v2, &s)?;
        let (r1, r2) = (c1.norm_sq(self.d), c2.norm_sq(self.d));
        Ok(if r2 > r1 { (r2, c2) } else { (r1, c1) })
    }
}

/// Circumcenter of the triangle `(0, a, b)`: solves `2⟨z, a⟩ = |a|²` and
/// `2⟨z, b⟩ = |b|²`.
fn circumcenter(d: i64, a: &PlanePoint, b: &PlanePoint) -> Result<PlanePoint> {
    let dd = rat(d);
    let (m11, m12) = (rat(2) * &a.p, rat(2) * &dd * &a.q);
    let (m21, m22) = (rat(2) * &b.p, rat(2) * &dd * &b.q);
    let (r1, r2) = (a.norm_sq(d), b.norm_sq(d));
    let det = &m11 * &m22 - &m12 * &m21;
    if det.is_zero() {
        return Err(Error::DegenerateLattice);
    }
    let p = (&r1 * &m22 - &m12 * &r2) / &det;
    let q = (&m11 * &r2 - &r1 * &m21) / &det;
    Ok(PlanePoint::new(p, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverKind {
    /// Every point of the plane lies in an open disk: `μ² < Nm(C)`.
    Covered,
    /// `μ² = Nm(C)`: only isolated points are missed.
    BoundaryTouch,
    /// `μ² > Nm(C)`: the complement contains an open set.
    OpenGap,
}

/// Outcome of comparing the covering radius of `C` with `√Nm(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverVerdict {
    pub kind: CoverKind,
    /// A deep hole; present unless the kind is `Covered`.
    pub witness: Option<PlanePoint>,
    pub covering_radius_sq: Rational,
    pub disk_radius_sq: Rational,
}

pub fn lattice_of_ideal(ideal: &FracIdeal) -> PlanarLattice {
    PlanarLattice::of_ideal(ideal)
}

pub fn covering_verdict(c: &FracIdeal) -> CoverVerdict {
    let lattice = PlanarLattice::of_ideal(c);
    let (mu_sq, hole) = lattice
        .covering_radius_sq()
        .expect("ideal lattices have full rank");
    let disk = c.norm();
    let kind = match mu_sq.cmp(&disk) {
        std::cmp::Ordering::Less => CoverKind::Covered,
        std::cmp::Ordering::Equal => CoverKind::BoundaryTouch,
        std::cmp::Ordering::Greater => CoverKind::OpenGap,
    };
    CoverVerdict {
        kind,
        witness: (kind != CoverKind::Covered).then_some(hole),
        covering_radius_sq: mu_sq,
        disk_radius_sq: disk,
    }
}
