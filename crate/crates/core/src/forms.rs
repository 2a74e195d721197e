//! Positive definite binary quadratic forms `A·x² + B·xy + C·y²` of negative
//! discriminant: reduction, Gauss composition, and class enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::util::ext_gcd;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        QuadForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn disc(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// The principal form of discriminant `disc`.
    pub fn identity(disc: i64) -> Self {
        if disc.rem_euclid(4) == 0 {
            QuadForm::new(1, 0, -disc / 4)
        } else {
            QuadForm::new(1, 1, (1 - disc) / 4)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one()
    }

    /// True for the canonical reduced representative: `|B| ≤ A ≤ C`, with
    /// `B ≥ 0` whenever `|B| = A` or `A = C`.
    pub fn is_reduced(&self) -> bool {
        let QuadForm { a, b, c } = self;
        if !(b.abs() <= *a && a <= c) {
            return false;
        }
        if (b.abs() == *a || a == c) && b.is_negative() {
            return false;
        }
        true
    }

    /// Canonical reduced form in the same proper equivalence class.
    pub fn reduce(&self) -> Self {
        assert!(self.a.is_positive(), "form is not positive definite");
        let (mut a, mut b, mut c) = (self.a.clone(), self.b.clone(), self.c.clone());
        loop {
            // bring b into (-a, a] with x -> x + r·y
            let two_a = &a * 2;
            let r = (&a - &b).div_floor(&two_a);
            if !r.is_zero() {
                c = &a * &r * &r + &b * &r + &c;
                b = &b + &two_a * &r;
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b.is_negative() {
                b = -b;
            }
            return QuadForm { a, b, c };
        }
    }

    /// Inverse class: `(A, -B, C)`.
    pub fn inverse(&self) -> Self {
        QuadForm::new(self.a.clone(), -&self.b, self.c.clone()).reduce()
    }

    /// Gauss composition of two primitive forms of the same discriminant,
    /// returned reduced (Shanks/Cohen arrangement).
    pub fn compose(&self, other: &QuadForm) -> QuadForm {
        let disc = self.disc();
        assert_eq!(
            disc,
            other.disc(),
            "composing forms of different discriminants"
        );
        let (f1, f2) = if self.a > other.a {
            (other, self)
        } else {
            (self, other)
        };
        let (a1, b1) = (&f1.a, &f1.b);
        let (a2, b2, c2) = (&f2.a, &f2.b, &f2.c);
        let s: BigInt = (b1 + b2) / 2;
        let n: BigInt = b2 - &s;

        let (y1, d) = if a2.is_multiple_of(a1) {
            (BigInt::zero(), a1.clone())
        } else {
            // u·a2 + v·a1 = d
            let (d, u, _v) = ext_gcd(a2, a1);
            (u, d)
        };
        let (x2, y2, d1) = if s.is_multiple_of(&d) {
            (BigInt::zero(), -BigInt::one(), d.clone())
        } else {
            let (d1, x2, y2) = ext_gcd(&s, &d);
            (x2, -y2, d1)
        };
        let v1 = a1 / &d1;
        let v2 = a2 / &d1;
        let r = (&y1 * &y2 * &n - &x2 * c2).mod_floor(&v1);
        let b3 = b2 + BigInt::from(2) * &v2 * &r;
        let a3 = &v1 * &v2;
        let num = &b3 * &b3 - &disc;
        let four_a3 = BigInt::from(4) * &a3;
        debug_assert!(num.is_multiple_of(&four_a3));
        let c3 = num / four_a3;
        QuadForm::new(a3, b3, c3).reduce()
    }

    pub fn pow(&self, mut e: u64) -> QuadForm {
        let disc = self.disc();
        let disc = i64::try_from(disc).expect("discriminant fits in i64");
        let mut acc = QuadForm::identity(disc);
        let mut base = self.reduce();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order of the class in the class group.
    pub fn order(&self) -> u64 {
        let start = self.reduce();
        let mut cur = start.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.compose(&start);
            k += 1;
        }
        k
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// All canonical reduced forms of discriminant `disc < 0`, in `(A, B)` order.
///
/// `disc` is a fundamental discriminant here, so every form is primitive.
pub fn reduced_forms(disc: i64) -> Vec<QuadForm> {
    assert!(disc < 0);
    let n = -disc;
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            if (b - disc).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if num_integer::gcd(num_integer::gcd(a, b), c) != 1 {
                continue;
            }
            let f = QuadForm::new(a, b, c);
            if f.is_reduced() {
                out.push(f);
            }
        }
        a += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_numbers_by_enumeration() {
        assert_eq!(reduced_forms(-8).len(), 1);
        assert_eq!(reduced_forms(-20).len(), 2);
        assert_eq!(reduced_forms(-15).len(), 2);
        assert_eq!(reduced_forms(-3).len(), 1);
        assert_eq!(reduced_forms(-4).len(), 1);
        assert_eq!(
            reduced_forms(-23),
            vec![
                QuadForm::new(1, 1, 6),
                QuadForm::new(2, -1, 3),
                QuadForm::new(2, 1, 3)
            ]
        );
    }

    #[test]
    fn reduction_is_canonical() {
        // (2, -1, 3) and (2, 1, 3) are inequivalent; (3, 1, 2) reduces to (2, -1, 3)
        assert_eq!(QuadForm::new(3, 1, 2).reduce(), QuadForm::new(2, -1, 3));
        assert_eq!(QuadForm::new(2, 5, 6).reduce(), QuadForm::new(2, 1, 3));
        assert_eq!(QuadForm::new(6, 13, 8).reduce(), QuadForm::new(1, 1, 6));
        // boundary tie A = C
        assert_eq!(QuadForm::new(2, -2, 3).reduce(), QuadForm::new(2, 2, 3));
        for f in reduced_forms(-84) {
            assert_eq!(f.reduce(), f);
        }
    }

    #[test]
    fn composition_group_of_order_three() {
        let g = QuadForm::new(2, 1, 3);
        assert_eq!(g.order(), 3);
        assert_eq!(g.compose(&g), QuadForm::new(2, -1, 3));
        assert_eq!(g.compose(&g.inverse()), QuadForm::identity(-23));
        assert!(g.pow(3).is_identity());
    }

    #[test]
    fn composition_is_commutative_and_associative_on_small_group() {
        // disc -56 has class number 4 (cyclic)
        let forms = reduced_forms(-56);
        assert_eq!(forms.len(), 4);
        for f in &forms {
            for g in &forms {
                assert_eq!(f.compose(g), g.compose(f));
                for h in &forms {
                    assert_eq!(f.compose(g).compose(h), f.compose(&g.compose(h)));
                }
            }
        }
    }
}
