//! Univariate polynomials over the ground field, enough to find eigenvalues
//! of endomorphisms during idempotent splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::space::Subspace;

/// Coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub field: FieldSpec,
    pub c: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut c: Vec<Scalar>) -> Poly {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn monomial(field: FieldSpec, deg: usize) -> Poly {
        let mut c = vec![field.zero(); deg + 1];
        c[deg] = field.one();
        Poly { field, c }
    }

    /// Degree; the zero polynomial reports None.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut r = self.field.zero();
        for a in self.c.iter().rev() {
            r = &(&r * x) + a;
        }
        r
    }

    pub fn monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv();
                Poly::new(self.field, self.c.iter().map(|a| a * &inv).collect())
            }
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut c = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j].add_mul(a, b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.deg().expect("division by zero polynomial");
        let mut r = self.c.clone();
        let lead_inv = d.c[dd].inv();
        let mut q = vec![self.field.zero(); self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = &r[k] * &lead_inv;
            if !f.is_zero() {
                for (i, b) in d.c.iter().enumerate() {
                    r[k - dd + i].sub_mul(&f, b);
                }
                q[k - dd] = f;
            }
            r.pop();
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// base^e mod m.
    pub fn powmod(base: &Poly, mut e: u64, m: &Poly) -> Poly {
        let mut r = Poly::new(base.field, vec![base.field.one()]).rem(m);
        let mut b = base.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        r
    }
}

/// Minimal polynomial of a square matrix, monic.
pub fn minimal_polynomial(a: &Matrix) -> Poly {
    let f = a.field;
    let n = a.rows;
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = Matrix::identity(f, n);
    let mut space = Subspace::new(f, n * n);
    loop {
        let v = cur.data().to_vec();
        if space.contains(&v) {
            // express v in earlier powers
            let m = Matrix::from_cols(f, n * n, &powers);
            let x = m
                .solve(&Matrix::from_cols(f, n * n, &[v]))
                .expect("dependent power");
            let mut c: Vec<Scalar> = (0..powers.len()).map(|i| -&x[(i, 0)]).collect();
            c.push(f.one());
            return Poly::new(f, c);
        }
        space.insert(v.clone());
        powers.push(v);
        cur = cur.mul(a);
    }
}

fn divisors(n: &BigInt, limit: u64) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let nn = n.to_u64()?;
    if nn > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= nn {
        if nn % d == 0 {
            out.push(BigInt::from(d));
            if d * d != nn {
                out.push(BigInt::from(nn / d));
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let f = p.field;
    let mut roots = Vec::new();
    let mut c: Vec<BigRational> =
        p.c.iter()
            .map(|s| s.as_rational().unwrap().clone())
            .collect();
    while c.first().is_some_and(|x| x.is_zero()) {
        c.remove(0);
        if !roots.contains(&f.zero()) {
            roots.push(f.zero());
        }
    }
    if c.len() <= 1 {
        return roots;
    }
    let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let (Some(ds0), Some(dsn)) = (
        divisors(&ints[0], 1 << 40),
        divisors(ints.last().unwrap(), 1 << 40),
    ) else {
        return roots;
    };
    for a in &ds0 {
        for b in &dsn {
            for sign in [1, -1] {
                let r = BigRational::new(a * sign, b.clone());
                let s = Scalar::Q(Box::new(r));
                if !roots.contains(&s) && p.eval(&s).is_zero() {
                    roots.push(s);
                }
            }
        }
    }
    roots
}

fn prime_field_roots(p: &Poly, modulus: u64, rng: &mut impl Rng) -> Vec<Scalar> {
    let f = p.field;
    if let Some(els) = f.elements() {
        return els.into_iter().filter(|x| p.eval(x).is_zero()).collect();
    }
    // product of the distinct linear factors: gcd(p, t^q - t)
    let t = Poly::monomial(f, 1);
    let tq = Poly::powmod(&t, modulus, p);
    let lin = p.gcd(&tq.sub(&t));
    let mut out = Vec::new();
    let mut stack = vec![lin];
    let mut guard = 0;
    while let Some(g) = stack.pop() {
        match g.deg() {
            None | Some(0) => {}
            Some(1) => out.push(-&g.c[0]),
            Some(_) => {
                guard += 1;
                if guard > 400 {
                    break;
                }
                let a = f.int(rng.gen_range(0..modulus as i64));
                let shifted = Poly::new(f, vec![a, f.one()]);
                let h =
                    Poly::powmod(&shifted, (modulus - 1) / 2, &g).sub(&Poly::new(f, vec![f.one()]));
                let d = g.gcd(&h);
                match d.deg() {
                    Some(k) if k > 0 && k < g.deg().unwrap() => {
                        let (q, _) = g.divrem(&d);
                        stack.push(d);
                        stack.push(q.monic());
                    }
                    _ => stack.push(g),
                }
            }
        }
    }
    out
}

/// Roots of `p` lying in the ground field (rational roots over Q; all roots over F_p).
/// Over Q, roots whose numerator or denominator would need factoring large integers are skipped.
pub fn roots_in_field(p: &Poly, rng: &mut impl Rng) -> Vec<Scalar> {
    match p.field {
        FieldSpec::Rationals => rational_roots(p),
        FieldSpec::PrimeField(q) => prime_field_roots(p, q, rng),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn min_poly_of_projection_and_nilpotent() {
        let q = FieldSpec::Rationals;
        let e = Matrix::from_i64(q, &[&[1, 0], &[0, 0]]);
        assert_eq!(
            minimal_polynomial(&e).c,
            vec![q.int(0), q.int(-1), q.int(1)]
        );
        let n = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&n).c, vec![q.int(0), q.int(0), q.int(1)]);
    }

    #[test]
    fn roots_found_in_each_field() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let q = FieldSpec::Rationals;
        // (t - 1/2)(t + 3)(t^2 + 1)
        let p = Poly::new(q, vec![q.parse("-1/2").unwrap(), q.int(1)])
            .mul(&Poly::new(q, vec![q.int(3), q.int(1)]))
            .mul(&Poly::new(q, vec![q.int(1), q.int(0), q.int(1)]));
        let mut r: Vec<String> = roots_in_field(&p, &mut rng)
            .iter()
            .map(|x| x.to_string())
            .collect();
        r.sort();
        assert_eq!(r, vec!["-3", "1/2"]);
        let big = FieldSpec::prime(1_000_003).unwrap();
        let p = Poly::new(big, vec![big.int(-6), big.int(1)])
            .mul(&Poly::new(big, vec![big.int(-11), big.int(1)]));
        let mut r: Vec<i64> = roots_in_field(&p, &mut rng)
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        r.sort();
        assert_eq!(r, vec![6, 11]);
    }
}
