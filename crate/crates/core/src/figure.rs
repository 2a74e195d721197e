//! SVG drawings of a fundamental parallelogram of `C` together with the disks
//! of radius `√Nm(C)` centered at points of `C` that meet it.
//!
//! Geometry is decided in exact arithmetic; only the final coordinates are
//! converted to decimals (12 significant digits), so output is reproducible
//! byte for byte. The imaginary axis points up.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::PlanePoint;
use crate::ideal::FracIdeal;
use crate::lattice::{covering_verdict, CoverKind, PlanarLattice};
use crate::util::{floor, rat};
use crate::{Error, Rational, Result};

const WIDTH: f64 = 640.0;

/// Decimal with 12 significant digits, trailing zeros trimmed.
fn num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Squared distance from `z` to the segment `[a, b]`.
fn seg_dist_sq(z: &PlanePoint, a: &PlanePoint, b: &PlanePoint, d: i64) -> Rational {
    let ab = b - a;
    let az = z - a;
    let len = ab.norm_sq(d);
    let mut t = az.dot(&ab, d) / &len;
    if t.is_negative() {
        t = Rational::zero();
    } else if t > Rational::one() {
        t = Rational::one();
    }
    let foot = a + &ab.scale(&t);
    z.dist_sq(&foot, d)
}

/// Squared distance from `z` to the closed cell `{s·v1 + t·v2 : 0 ≤ s, t ≤ 1}`.
fn cell_dist_sq(lattice: &PlanarLattice, z: &PlanePoint) -> Rational {
    let (s, t) = lattice.coords(z);
    let unit = |r: &Rational| !r.is_negative() && *r <= Rational::one();
    if unit(&s) && unit(&t) {
        return Rational::zero();
    }
    let (v1, v2) = lattice.basis();
    let o = PlanePoint::origin();
    let w = v1 + v2;
    let d = lattice.d();
    [(&o, v1), (v1, &w), (&w, v2), (v2, &o)]
        .into_iter()
        .map(|(a, b)| seg_dist_sq(z, a, b, d))
        .min()
        .expect("four edges")
}

/// Lattice points whose closed disk of squared radius `r_sq` meets the cell.
fn disks_meeting_cell(lattice: &PlanarLattice, r_sq: &Rational) -> Vec<PlanePoint> {
    let (v1, v2) = lattice.basis();
    let d = lattice.d();
    let center = (v1 + v2).scale(&Rational::new(1.into(), 2.into()));
    let corner_sq = [PlanePoint::origin(), v1.clone(), v2.clone(), v1 + v2]
        .iter()
        .map(|c| c.dist_sq(&center, d))
        .max()
        .expect("four corners");
    // (|corner| + r)² ≤ 2·|corner|² + 2·r²
    let reach = rat(2) * corner_sq + rat(2) * r_sq;
    lattice
        .points_in_disk(&center, &reach)
        .iter()
        .map(|(x, y)| lattice.point(x, y))
        .filter(|p| cell_dist_sq(lattice, p) <= *r_sq)
        .collect()
}

/// Translates `z` into the half-open cell spanned by the basis.
fn into_cell(lattice: &PlanarLattice, z: &PlanePoint) -> PlanePoint {
    let (s, t) = lattice.coords(z);
    let shift = lattice.point(&floor(&s), &floor(&t));
    z - &shift
}

pub fn svg_for_ideal(c: &FracIdeal) -> String {
    let lattice = PlanarLattice::of_ideal(c);
    let d = lattice.d();
    let verdict = covering_verdict(c);
    let r_sq = c.norm();
    let r = r_sq.to_f64().unwrap_or(f64::NAN).sqrt();
    let centers = disks_meeting_cell(&lattice, &r_sq);

    let (v1, v2) = lattice.basis();
    let corners = [PlanePoint::origin(), v1.clone(), v1 + v2, v2.clone()];
    let xy = |p: &PlanePoint| {
        let (x, y) = p.to_f64(d);
        (x, -y)
    };
    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in &corners {
        let (x, y) = xy(p);
        min = (min.0.min(x - r), min.1.min(y - r));
        max = (max.0.max(x + r), max.1.max(y + r));
    }
    let (w, h) = (max.0 - min.0, max.1 - min.1);
    let height = WIDTH * h / w;
    let stroke = w / 400.0;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(WIDTH),
        num(height),
        num(min.0),
        num(min.1),
        num(w),
        num(h)
    )
    .unwrap();
    let kind = match verdict.kind {
        CoverKind::Covered => "Covered",
        CoverKind::BoundaryTouch => "BoundaryTouch",
        CoverKind::OpenGap => "OpenGap",
    };
    writeln!(s, "<title>D={d} C={c} {kind}</title>").unwrap();
    writeln!(
        s,
        r#"<g fill="steelblue" fill-opacity="0.25" stroke="steelblue" stroke-width="{}">"#,
        num(stroke)
    )
    .unwrap();
    for p in &centers {
        let (x, y) = xy(p);
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            num(x),
            num(y),
            num(r)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    let pts: Vec<String> = corners
        .iter()
        .map(|p| {
            let (x, y) = xy(p);
            format!("{},{}", num(x), num(y))
        })
        .collect();
    writeln!(
        s,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
        pts.join(" "),
        num(2.0 * stroke)
    )
    .unwrap();
    writeln!(s, r#"<g fill="black">"#).unwrap();
    for p in &centers {
        let (x, y) = xy(p);
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            num(x),
            num(y),
            num(3.0 * stroke)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    if verdict.kind == CoverKind::OpenGap {
        if let Some(hole) = &verdict.witness {
            let (x, y) = xy(&into_cell(&lattice, hole));
            let k = 6.0 * stroke;
            writeln!(
                s,
                r#"<path d="M {} {} L {} {} M {} {} L {} {}" stroke="red" stroke-width="{}"/>"#,
                num(x - k),
                num(y - k),
                num(x + k),
                num(y + k),
                num(x - k),
                num(y + k),
                num(x + k),
                num(y - k),
                num(stroke)
            )
            .unwrap();
        }
    }
    writeln!(s, "</svg>").unwrap();
    s
}

/// Writes the figure for `c ⊆ Q(√-d)` to `path`.
pub fn render_case_svg(d: i64, c: &FracIdeal, path: &Path) -> Result<()> {
    if c.field().d() != d {
        return Err(Error::FieldMismatch(d, c.field().d()));
    }
    std::fs::write(path, svg_for_ideal(c))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QuadField;
    use crate::ideal::primes_above;

    fn p2(d: i64) -> FracIdeal {
        let f = QuadField::new(d).unwrap();
        primes_above(&f, 2).unwrap()[0].0.clone()
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(1.5), "1.5");
        assert_eq!(num(-2.0), "-2");
        assert_eq!(num(2f64.sqrt()), "1.41421356237");
        assert_eq!(num(123.456), "123.456");
    }

    #[test]
    fn segment_and_cell_distance() {
        let l = PlanarLattice::of_ideal(&p2(5));
        assert!(cell_dist_sq(&l, &PlanePoint::origin()).is_zero());
        let far = l.point(&(-1).into(), &0.into());
        assert_eq!(cell_dist_sq(&l, &far), l.basis().0.norm_sq(5));
    }

    #[test]
    fn gap_marker_only_for_open_gap() {
        let covered = svg_for_ideal(&p2(5));
        assert!(!covered.contains("stroke=\"red\""));
        let gap = svg_for_ideal(&p2(13));
        assert!(gap.contains("stroke=\"red\""));
        assert!(gap.contains("OpenGap"));
    }

    #[test]
    fn deterministic_and_every_disk_meets_cell() {
        let c = p2(23);
        assert_eq!(svg_for_ideal(&c), svg_for_ideal(&c));
        let l = PlanarLattice::of_ideal(&c);
        let r_sq = c.norm();
        let centers = disks_meeting_cell(&l, &r_sq);
        // the four corners are always among them
        assert!(centers.len() >= 4);
        // a brute box search finds no additional meeting disk
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                let p = l.point(&x.into(), &y.into());
                if cell_dist_sq(&l, &p) <= r_sq {
                    assert!(centers.contains(&p), "missing ({x}, {y})");
                }
            }
        }
    }
}
