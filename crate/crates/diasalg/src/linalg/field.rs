//! Exact field scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! Every arithmetic operation is exact. There is no floating point anywhere
//! in this crate; all downstream rank and dimension computations depend on
//! scalars staying in canonical form (reduced fractions, residues in `[0, p)`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: the rationals or a prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composite or trivial moduli.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::ShapeError(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Prime { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Prime { p: *p, value: 1 % *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Prime { p: *p, value: r }
            }
        }
    }

    /// Parses "a", "-a", or "a/b" in this field. Prime-field fractions are
    /// resolved through the modular inverse.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::ShapeError(format!("cannot parse scalar {s:?}"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        match self {
            FieldSpec::Rational => {
                let num: BigInt = num_str.parse().map_err(|_| bad())?;
                let den: BigInt = match den_str {
                    Some(d) => d.parse().map_err(|_| bad())?,
                    None => BigInt::one(),
                };
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(_) => {
                let num: i64 = num_str.parse().map_err(|_| bad())?;
                let num = self.from_i64(num);
                match den_str {
                    None => Ok(num),
                    Some(d) => {
                        let den: i64 = d.parse().map_err(|_| bad())?;
                        let den = self.from_i64(den);
                        num.div(&den).ok_or_else(bad)
                    }
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element in canonical form.
///
/// Rationals are kept reduced with positive denominator (the `BigRational`
/// invariant); prime-field values are residues in `[0, p)`. Equality is
/// therefore structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { p, value } => *value == 1 % *p,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Prime { p, value } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Prime {
                        p: *p,
                        value: mod_inverse(*value, *p),
                    })
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|inv| self * &inv)
    }

    fn check_same_field(&self, other: &Scalar) {
        debug_assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across distinct fields"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }
}

/// Signed numerator magnitude used as a pivot-quality heuristic. Rationals
/// with small representation make better pivots; prime-field values are all
/// equivalent.
pub(crate) fn pivot_weight(s: &Scalar) -> usize {
    match s {
        Scalar::Rational(r) => r.numer().abs().bits() as usize + r.denom().bits() as usize,
        Scalar::Prime { .. } => 1,
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit intermediates
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit mod {p}");
    old_s.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin, valid for all u64 inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow_mod = |base: u64, mut exp: u64| -> u64 {
        let m = n as u128;
        let mut acc: u128 = 1;
        let mut b = base as u128 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        acc as u64
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_spec_rejects_composites() {
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(561).is_err()); // Carmichael
        assert!(FieldSpec::prime(2147483647).is_ok());
    }

    #[test]
    fn rational_arithmetic_is_canonical() {
        let f = FieldSpec::Rational;
        let a = f.parse("2/4").unwrap();
        let b = f.parse("1/2").unwrap();
        assert_eq!(a, b);
        assert_eq!((&a + &b).to_string(), "1");
        assert_eq!((&a - &b).to_string(), "0");
        assert_eq!(f.parse("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(f.parse("7").unwrap().to_string(), "7");
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("x").is_err());
    }

    #[test]
    fn gf7_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let three = f.from_i64(3);
        let five = f.from_i64(5);
        assert_eq!(&three * &five, f.from_i64(1));
        assert_eq!(&three + &five, f.from_i64(1));
        assert_eq!((-&three), f.from_i64(4));
        assert_eq!(three.inv().unwrap(), five);
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        // 3/2 = 3 * inv(2) = 3 * 4 = 5
        assert_eq!(f.parse("3/2").unwrap(), f.from_i64(5));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(FieldSpec::Rational.zero().inv().is_none());
        assert!(FieldSpec::prime(2).unwrap().zero().inv().is_none());
    }
}
