use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Floor of a rational as an integer.
pub(crate) fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Nearest integer, ties rounded down.
pub(crate) fn round_half_down(r: &Rational) -> BigInt {
    // ceil(r - 1/2)
    let shifted = r - Rational::new(BigInt::one(), BigInt::from(2));
    let fl = floor(&shifted);
    if rat_int(&fl) == shifted {
        fl
    } else {
        fl + 1
    }
}

/// `r mod m` for a positive rational modulus, in `[0, m)`.
pub(crate) fn rat_mod(r: &Rational, m: &Rational) -> (BigInt, Rational) {
    let k = floor(&(r / m));
    let rem = r - rat_int(&k) * m;
    (k, rem)
}

pub(crate) fn lcm_denoms<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub(crate) fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g >= 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub(crate) fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        let r = |n, d| Rational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(round_half_down(&r(1, 2)), BigInt::from(0));
        assert_eq!(round_half_down(&r(3, 2)), BigInt::from(1));
        assert_eq!(round_half_down(&r(-1, 2)), BigInt::from(-1));
        assert_eq!(round_half_down(&r(7, 3)), BigInt::from(2));
        assert_eq!(round_half_down(&r(-7, 3)), BigInt::from(-2));
        assert_eq!(floor(&r(-1, 3)), BigInt::from(-1));
    }

    #[test]
    fn rational_text() {
        let r = Rational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(fmt_rational(&r), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(r));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
