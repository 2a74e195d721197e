//! Independent oracles shared by the integration tests. None of them goes
//! through lattice reduction, closest-vector pruning or principal generators.
#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use quadeuclid::ideal::quotient_reps;
use quadeuclid::{FieldElement, FracIdeal, PlanarLattice, PlanePoint, QuadField, Rational};

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn field(d: i64) -> QuadField {
    QuadField::new(d).unwrap()
}

/// Exhaustive search over a coefficient box large enough to contain every
/// lattice point closer to `z` than the origin-shifted rounding guess.
pub fn box_cvp(l: &PlanarLattice, z: &PlanePoint) -> (PlanePoint, Rational) {
    let d = l.d();
    let (v1, v2) = l.basis();
    let (a, b) = l.coords(z);
    let guess = l.point(&a.round().to_integer(), &b.round().to_integer());
    let bound = guess.dist_sq(z, d).to_f64().unwrap().sqrt();
    // |coefficient| ≤ radius · |other basis vector| / area
    let area = l.det().abs().to_f64().unwrap() * (d as f64).sqrt();
    let n1 = v1.norm_sq(d).to_f64().unwrap().sqrt();
    let n2 = v2.norm_sq(d).to_f64().unwrap().sqrt();
    let kx = (bound * n2 / area).ceil() as i64 + 2;
    let ky = (bound * n1 / area).ceil() as i64 + 2;
    let (cx, cy) = (a.round().to_integer(), b.round().to_integer());
    let mut best: Option<(PlanePoint, Rational)> = None;
    for dx in -kx..=kx {
        for dy in -ky..=ky {
            let p = l.point(&(&cx + dx), &(&cy + dy));
            let dist = p.dist_sq(z, d);
            let better = match &best {
                None => true,
                Some((bp, bd)) => dist < *bd || (dist == *bd && p < *bp),
            };
            if better {
                best = Some((p, dist));
            }
        }
    }
    best.unwrap()
}

/// Floating-point covering radius²: a grid over the fundamental cell finds the
/// neighbourhoods of the deep holes, and each of the best samples is polished
/// to the float circumcenter of its three nearest lattice points.
pub fn sampled_covering_radius_sq(l: &PlanarLattice) -> f64 {
    let sd = (l.d() as f64).sqrt();
    let (v1, v2) = l.basis();
    let f = |p: &PlanePoint| (p.p.to_f64().unwrap(), p.q.to_f64().unwrap() * sd);
    let (a, b) = (f(v1), f(v2));
    let mut pts = Vec::new();
    for i in -4i64..=5 {
        for j in -4i64..=5 {
            pts.push((
                i as f64 * a.0 + j as f64 * b.0,
                i as f64 * a.1 + j as f64 * b.1,
            ));
        }
    }
    let dists = |x: f64, y: f64| -> Vec<(f64, (f64, f64))> {
        let mut v: Vec<(f64, (f64, f64))> = pts
            .iter()
            .map(|&(px, py)| ((x - px).powi(2) + (y - py).powi(2), (px, py)))
            .collect();
        v.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        v
    };
    let nearest = |x: f64, y: f64| -> f64 {
        pts.iter()
            .map(|&(px, py)| (x - px).powi(2) + (y - py).powi(2))
            .fold(f64::INFINITY, f64::min)
    };
    let n = 120;
    let mut samples: Vec<(f64, f64, f64)> = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            let (s, t) = (i as f64 / n as f64, j as f64 / n as f64);
            let (x, y) = (s * a.0 + t * b.0, s * a.1 + t * b.1);
            samples.push((nearest(x, y), x, y));
        }
    }
    samples.sort_by(|p, q| q.0.partial_cmp(&p.0).unwrap());
    let mut best = samples[0].0;
    for &(_, x, y) in samples.iter().take(40) {
        let near = dists(x, y);
        let (p, q, r) = (near[0].1, near[1].1, near[2].1);
        let (bx, by) = (q.0 - p.0, q.1 - p.1);
        let (cx, cy) = (r.0 - p.0, r.1 - p.1);
        let den = 2.0 * (bx * cy - by * cx);
        if den.abs() < 1e-12 {
            continue;
        }
        let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
        let ux = p.0 + (cy * b2 - by * c2) / den;
        let uy = p.1 + (bx * c2 - cx * b2) / den;
        best = best.max(nearest(ux, uy));
    }
    best
}

/// Disk-enumeration decision of the level condition: for every nonzero coset
/// `x` of `IC / C`, some `y ∈ C` and `J ∈ prior` with `(x - y)·J = IC`.
/// Uses `Nm(x - y) = Nm(IC)/Nm(J)` to confine `y` to a circle.
pub fn member_by_disks(i: &FracIdeal, c: &FracIdeal, prior: &HashSet<FracIdeal>) -> bool {
    let f = *i.field();
    let ic = i * c;
    let cl = PlanarLattice::of_ideal(c);
    let reps = quotient_reps(&ic, c).unwrap();
    reps.iter().filter(|x| !x.is_zero()).all(|x| {
        let z = x.embed();
        prior.iter().any(|j| {
            let r_sq = ic.norm() / j.norm();
            cl.points_in_disk(&z, &r_sq).iter().any(|(a, b)| {
                let y = cl.point(a, b);
                if z.dist_sq(&y, f.d()) != r_sq {
                    return false;
                }
                let diff: FieldElement = f.from_plane(&(&z - &y));
                if diff.is_zero() {
                    return false;
                }
                let lhs = &FracIdeal::principal(&diff).unwrap() * j;
                lhs == ic
            })
        })
    })
}
