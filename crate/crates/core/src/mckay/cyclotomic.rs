use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Remainder of `p` modulo the monic `m`.
fn rem(mut p: Poly, m: &Poly) -> Poly {
    let dm = m.len() - 1;
    trim(&mut p);
    while p.len() > dm {
        let lead = p.last().unwrap().clone();
        let shift = p.len() - 1 - dm;
        for (i, c) in m.iter().enumerate() {
            p[shift + i] -= &lead * c;
        }
        trim(&mut p);
    }
    p
}

fn div_exact(mut p: Poly, m: &Poly) -> Poly {
    let dm = m.len() - 1;
    let mut q = vec![BigRational::zero(); p.len().saturating_sub(dm)];
    trim(&mut p);
    while p.len() > dm {
        let lead = p.last().unwrap() / m.last().unwrap();
        let shift = p.len() - 1 - dm;
        for (i, c) in m.iter().enumerate() {
            p[shift + i] -= &lead * c;
        }
        q[shift] = lead;
        trim(&mut p);
    }
    q
}

/// The n-th cyclotomic polynomial, from `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    let mut p: Poly = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = div_exact(p, &cyclotomic_polynomial(d));
    }
    p
}

/// An element of `Q(zeta_n)` in the power basis `1, zeta, ..., zeta^{phi(n)-1}`.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    pub conductor: u32,
    pub coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    /// `sum_k c_k zeta_n^k` for arbitrary exponents.
    pub fn from_exponents(n: u32, terms: &[(u32, BigRational)]) -> CyclotomicNumber {
        assert!(n >= 1, "conductor must be positive");
        let mut p: Poly = vec![BigRational::zero(); n as usize];
        for (k, c) in terms {
            p[(k % n) as usize] += c;
        }
        CyclotomicNumber {
            conductor: n,
            coeffs: rem(p, &cyclotomic_polynomial(n)),
        }
    }

    pub fn rational(q: BigRational) -> CyclotomicNumber {
        CyclotomicNumber::from_exponents(1, &[(0, q)])
    }

    pub fn int(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::rational(BigRational::from_integer(n.into()))
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: u32) -> CyclotomicNumber {
        CyclotomicNumber::from_exponents(n, &[(k, BigRational::one())])
    }

    /// The same number written over `zeta_l` for a multiple `l` of the conductor.
    pub fn lift(&self, l: u32) -> CyclotomicNumber {
        assert!(
            l.is_multiple_of(self.conductor),
            "conductor {} does not divide {l}",
            self.conductor
        );
        let step = l / self.conductor;
        let terms: Vec<(u32, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (k as u32 * step, c.clone()))
            .collect();
        CyclotomicNumber::from_exponents(l, &terms)
    }

    fn common(&self, o: &CyclotomicNumber) -> (CyclotomicNumber, CyclotomicNumber) {
        let l = self.conductor.lcm(&o.conductor);
        (self.lift(l), o.lift(l))
    }

    /// Complex conjugate, `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CyclotomicNumber {
        let n = self.conductor;
        let terms: Vec<(u32, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| ((n - k as u32 % n) % n, c.clone()))
            .collect();
        CyclotomicNumber::from_exponents(n, &terms)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> CyclotomicNumber {
        let mut coeffs: Vec<BigRational> = self.coeffs.iter().map(|c| c * q).collect();
        trim(&mut coeffs);
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs,
        }
    }

    /// Parses sums of terms like `2`, `-1/2`, `z3`, `3*z8^5`.
    pub fn parse(s: &str) -> Result<CyclotomicNumber> {
        let bad = || Error::Input(format!("cannot read cyclotomic number {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut out = CyclotomicNumber::int(0);
        let mut start = 0;
        let bytes = t.as_bytes();
        for i in 1..=t.len() {
            if i == t.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-')
                    && bytes[i - 1] != b'^'
                    && bytes[i - 1] != b'*')
            {
                out = &out + &parse_term(&t[start..i]).ok_or_else(bad)?;
                start = i;
            }
        }
        Ok(out)
    }
}

fn parse_term(t: &str) -> Option<CyclotomicNumber> {
    let (sign, body) = match t.as_bytes().first()? {
        b'+' => (1, &t[1..]),
        b'-' => (-1, &t[1..]),
        _ => (1, t),
    };
    let (coef, root) = match body.find('z') {
        None => (body, None),
        Some(0) => ("1", Some(&body[1..])),
        Some(i) => (body[..i].strip_suffix('*')?, Some(&body[i + 1..])),
    };
    let q: BigRational = coef.parse().ok()?;
    let q = if sign < 0 { -q } else { q };
    match root {
        None => Some(CyclotomicNumber::rational(q)),
        Some(r) => {
            let (n, k) = match r.split_once('^') {
                Some((n, k)) => (n.parse().ok()?, k.parse().ok()?),
                None => (r.parse().ok()?, 1),
            };
            if n == 0 {
                return None;
            }
            Some(CyclotomicNumber::from_exponents(n, &[(k, q)]))
        }
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, o: &CyclotomicNumber) -> bool {
        let (a, b) = self.common(o);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = self.common(o);
        let n = a.conductor as usize;
        let mut p: Poly = vec![BigRational::zero(); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            p[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            p[i] += c;
        }
        trim(&mut p);
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: p,
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-o)
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = self.common(o);
        let mut terms = Vec::new();
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                terms.push(((i + j) as u32, x * y));
            }
        }
        CyclotomicNumber::from_exponents(a.conductor, &terms)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let first = self.coeffs[..k].iter().all(Zero::is_zero);
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let a = c.abs();
            match k {
                0 => write!(f, "{sign}{a}")?,
                _ => {
                    let coef = if a.is_one() {
                        String::new()
                    } else {
                        format!("{a}*")
                    };
                    let pow = if k == 1 {
                        String::new()
                    } else {
                        format!("^{k}")
                    };
                    write!(f, "{sign}{coef}z{}{pow}", self.conductor)?
                }
            }
        }
        Ok(())
    }
}
