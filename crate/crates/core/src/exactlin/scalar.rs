use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field: the rationals or a prime field F_p (p < 2^31).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

/// An exact field element. Arithmetic between elements of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Box<BigRational>),
    P { v: u64, p: u64 },
}

fn is_prime(p: u64) -> bool {
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

impl FieldSpec {
    /// A prime field, validated.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Box::new(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::PrimeField(p) => Scalar::P {
                v: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Input("zero denominator".into()));
        }
        let d = self.int(den);
        if d.is_zero() {
            return Err(Error::Input(format!(
                "denominator {den} vanishes in the field"
            )));
        }
        Ok(&self.int(num) / &d)
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Box::new(BigRational::from_integer(n.clone()))),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor_u64(*p);
                Scalar::P { v: r, p: *p }
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        if d.is_zero() {
            return Err(Error::Input(format!(
                "denominator of {q} vanishes in the field"
            )));
        }
        Ok(&n / &d)
    }

    /// Parses "a", "-a" or "a/b".
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Input(format!("cannot parse scalar {s:?}"));
        match s.split_once('/') {
            None => Ok(self.from_bigint(&s.parse::<BigInt>().map_err(|_| bad())?)),
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(bad());
                }
                self.from_rational(&BigRational::new(a, b))
            }
        }
    }

    /// All field elements, for small prime fields only.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::PrimeField(p) if *p <= 256 => {
                Some((0..*p as i64).map(|i| self.int(i)).collect())
            }
            _ => None,
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().unwrap()
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::P { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(q) => Scalar::Q(Box::new(q.recip())),
            Scalar::P { v, p } => Scalar::P {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::P { .. } => None,
        }
    }

    /// Integer value if the scalar is integral (residue for prime fields).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::P { v, .. } => Some(*v as i64),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::P { .. } => false,
        }
    }

    /// self + a*b, in place.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::P { v, p }, Scalar::P { v: x, .. }, Scalar::P { v: y, .. }) => {
                *v = (*v + x * y % *p) % *p;
            }
            (s, a, b) => *s = &*s + &(a * b),
        }
    }

    /// self - a*b, in place.
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::P { v, p }, Scalar::P { v: x, .. }, Scalar::P { v: y, .. }) => {
                *v = (*v + *p - x * y % *p) % *p;
            }
            (s, a, b) => *s = &*s - &(a * b),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $qop:tt, $pf:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a $qop &**b)),
                    (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) => {
                        assert_eq!(p, q, "mixed prime fields");
                        let f: fn(u64, u64, u64) -> u64 = $pf;
                        Scalar::P { v: f(*a, *b, *p), p: *p }
                    }
                    _ => panic!("mixed fields in scalar arithmetic"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, +, |a, b, p| (a + b) % p);
binop!(Sub, sub, -, |a, b, p| (a + p - b) % p);
binop!(Mul, mul, *, |a, b, p| a * b % p);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(Box::new(-&**a)),
            Scalar::P { v, p } => Scalar::P {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.int(3);
        let b = f.int(5);
        assert_eq!(&a + &b, f.int(1));
        assert_eq!(&a - &b, f.int(5));
        assert_eq!(&a * &b, f.int(1));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(-&a, f.int(4));
    }

    #[test]
    fn parse_rationals() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-2").unwrap(), q.int(-2));
        assert!(q.parse("1/0").is_err());
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.parse("1/2").unwrap(), f.int(3));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }
}
