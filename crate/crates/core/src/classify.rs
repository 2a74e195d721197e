//! Field-by-field decision: does `Q(√-D)` have a Euclidean ideal class?
//!
//! A Euclidean ideal `C` satisfies `Nm(C) ≤ 3` when the unit group is `{±1}`,
//! so it is a degree-one prime over 2 or 3, and its class must generate the
//! class group. Each such prime is then decided by comparing the covering
//! radius of its lattice with `√Nm(C)`. `D = 1` and `D = 3` have more units and
//! are decided through `O_K` itself.

use crate::field::{is_squarefree, QuadField};
use crate::ideal::{class_number, primes_above, FracIdeal};
use crate::lattice::{covering_verdict, CoverKind, CoverVerdict};
use crate::par::{self, Execution};
use crate::{Error, Result};

pub const SUBCASE_EXTRA_UNITS: &str = "extra units, C = O_K";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub ideal: FracIdeal,
    /// Rational prime below the ideal; `None` for `O_K`.
    pub prime: Option<u64>,
    pub subcase: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateVerdict {
    pub ideal: FracIdeal,
    pub prime: Option<u64>,
    pub subcase: String,
    pub cover: CoverVerdict,
    /// The class of the ideal has order equal to the class number.
    pub generates: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    HasEuclideanIdeal { norm_euclidean: bool },
    NoEuclideanIdeal,
    Inconclusive,
}

impl Conclusion {
    pub fn is_euclidean(self) -> bool {
        matches!(self, Conclusion::HasEuclideanIdeal { .. })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::HasEuclideanIdeal { .. } => "HasEuclideanIdeal",
            Conclusion::NoEuclideanIdeal => "NoEuclideanIdeal",
            Conclusion::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldVerdict {
    pub d: i64,
    pub class_number: u64,
    pub candidates: Vec<CandidateVerdict>,
    pub conclusion: Conclusion,
}

impl FieldVerdict {
    /// The first candidate that is both covered and a class-group generator.
    pub fn witness(&self) -> Option<&CandidateVerdict> {
        self.candidates
            .iter()
            .find(|c| c.generates && c.cover.kind == CoverKind::Covered)
    }
}

fn subcase(d: i64, p: u64) -> &'static str {
    let dm4 = d.rem_euclid(4);
    match (p, dm4) {
        (2, 1) => "2 ramifies, D≡1 (mod 4)",
        (2, 2) => "2 ramifies, D≡2 (mod 4)",
        (2, _) => "2 splits, D≡7 (mod 8)",
        (3, 3) if d % 3 == 0 => "3 ramifies, D≡3 (mod 4)",
        (3, 3) => "3 splits, D≡3 (mod 4)",
        (3, _) if d % 3 == 0 => "3 ramifies, D≡1,2 (mod 4)",
        (3, _) => "3 splits, D≡1,2 (mod 4)",
        _ => unreachable!("only primes over 2 and 3 are candidates"),
    }
}

/// Candidate Euclidean ideals: `[O_K]` for `D ∈ {1, 3}`, otherwise one
/// degree-one prime over each of 2 and 3 (the one with smaller `b`; its
/// conjugate behaves identically). Empty when 2 and 3 are both inert.
pub fn candidate_classes(field: &QuadField) -> Vec<Candidate> {
    if field.unit_count() > 2 {
        return vec![Candidate {
            ideal: FracIdeal::unit(field),
            prime: None,
            subcase: SUBCASE_EXTRA_UNITS,
        }];
    }
    let mut out = Vec::new();
    for p in [2u64, 3] {
        let primes = primes_above(field, p).expect("2 and 3 are prime");
        if let Some((ideal, _)) = primes.into_iter().find(|(_, f)| *f == 1) {
            out.push(Candidate {
                ideal,
                prime: Some(p),
                subcase: subcase(field.d(), p),
            });
        }
    }
    out
}

fn conclude(candidates: &[CandidateVerdict]) -> Conclusion {
    let generating = || candidates.iter().filter(|c| c.generates);
    if generating().any(|c| c.cover.kind == CoverKind::Covered) {
        Conclusion::HasEuclideanIdeal {
            norm_euclidean: true,
        }
    } else if generating().any(|c| c.cover.kind == CoverKind::BoundaryTouch) {
        Conclusion::Inconclusive
    } else {
        Conclusion::NoEuclideanIdeal
    }
}

pub fn classify_field(d: i64) -> Result<FieldVerdict> {
    let field = QuadField::new(d)?;
    let h = class_number(&field);
    let candidates: Vec<CandidateVerdict> = candidate_classes(&field)
        .into_iter()
        .map(|c| {
            let generates = c.ideal.class().order() == h;
            CandidateVerdict {
                cover: covering_verdict(&c.ideal),
                ideal: c.ideal,
                prime: c.prime,
                subcase: c.subcase.to_string(),
                generates,
            }
        })
        .collect();
    let conclusion = conclude(&candidates);
    Ok(FieldVerdict {
        d,
        class_number: h,
        candidates,
        conclusion,
    })
}

/// Squarefree `D` in `1..=dmax`.
pub fn squarefree_up_to(dmax: i64) -> Vec<i64> {
    (1..=dmax).filter(|&d| is_squarefree(d)).collect()
}

pub fn classify_range(dmax: i64) -> Result<Vec<FieldVerdict>> {
    classify_range_with(dmax, Execution::default())
}

/// Classifies every squarefree `D ≤ dmax`, in increasing order.
pub fn classify_range_with(dmax: i64, exec: Execution) -> Result<Vec<FieldVerdict>> {
    if dmax < 1 {
        return Err(Error::InvalidD(dmax));
    }
    par::map(exec, squarefree_up_to(dmax), classify_field)
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::primes_above;

    fn euclidean_set(vs: &[FieldVerdict]) -> Vec<i64> {
        vs.iter()
            .filter(|v| v.conclusion.is_euclidean())
            .map(|v| v.d)
            .collect()
    }

    #[test]
    fn candidates_for_small_fields() {
        let k5 = QuadField::new(5).unwrap();
        let c = candidate_classes(&k5);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].subcase, "2 ramifies, D≡1 (mod 4)");
        assert_eq!(c[1].subcase, "3 splits, D≡1,2 (mod 4)");
        assert_eq!(c[0].ideal.class(), c[1].ideal.class());

        let k7 = QuadField::new(7).unwrap();
        let c = candidate_classes(&k7);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].subcase, "2 splits, D≡7 (mod 8)");

        let k1 = QuadField::new(1).unwrap();
        assert_eq!(candidate_classes(&k1)[0].ideal, FracIdeal::unit(&k1));

        // D = 19: 2 and 3 both inert
        let k19 = QuadField::new(19).unwrap();
        assert!(candidate_classes(&k19).is_empty());
        assert_eq!(
            classify_field(19).unwrap().conclusion,
            Conclusion::NoEuclideanIdeal
        );
    }

    #[test]
    fn named_fields() {
        let v = classify_field(15).unwrap();
        assert_eq!(v.class_number, 2);
        assert!(v.conclusion.is_euclidean());
        assert!(v
            .candidates
            .iter()
            .all(|c| c.cover.kind == CoverKind::Covered));

        let v = classify_field(6).unwrap();
        assert_eq!(v.conclusion, Conclusion::NoEuclideanIdeal);
        assert!(v
            .candidates
            .iter()
            .all(|c| c.cover.kind == CoverKind::OpenGap));

        let v = classify_field(23).unwrap();
        assert_eq!(v.class_number, 3);
        assert_eq!(v.conclusion, Conclusion::NoEuclideanIdeal);
        assert_eq!(v.candidates.len(), 2);
        assert!(v
            .candidates
            .iter()
            .all(|c| c.cover.kind == CoverKind::OpenGap));

        assert!(matches!(classify_field(12), Err(Error::NotSquarefree(12))));
    }

    #[test]
    fn small_ranges() {
        assert_eq!(euclidean_set(&classify_range(1).unwrap()), vec![1]);
        assert_eq!(
            euclidean_set(&classify_range(40).unwrap()),
            vec![1, 2, 3, 5, 7, 11, 15]
        );
        assert_eq!(squarefree_up_to(100).len(), 61);
    }

    #[test]
    fn conjugate_primes_agree() {
        for d in squarefree_up_to(60) {
            let f = QuadField::new(d).unwrap();
            for p in [2, 3] {
                let ps = primes_above(&f, p).unwrap();
                if ps.len() == 2 {
                    let a = covering_verdict(&ps[0].0);
                    let b = covering_verdict(&ps[1].0);
                    assert_eq!(a.kind, b.kind, "D={d} p={p}");
                    assert_eq!(a.covering_radius_sq, b.covering_radius_sq);
                }
            }
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        assert_eq!(
            classify_range_with(50, Execution::Sequential).unwrap(),
            classify_range_with(50, Execution::Parallel).unwrap()
        );
    }
}
