//! Character tables with exact cyclotomic values and McKay quivers.

mod cyclotomic;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};

pub type Character = Vec<CyclotomicNumber>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub label: String,
    pub size: u64,
    /// `power_maps[k]` is the class of `g^k`; may be empty when unknown.
    pub power_maps: Vec<usize>,
}

/// Class 0 is the identity class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub order: u64,
    pub classes: Vec<ConjClass>,
    pub irreducibles: Vec<Character>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverGraph {
    pub labels: Vec<String>,
    /// `arrow_mult[x][y]` arrows from x to y.
    pub arrow_mult: Vec<Vec<usize>>,
    /// Dotted arrow x -> dotted[x].
    pub dotted: Vec<usize>,
    pub determinant: Character,
}

impl QuiverGraph {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrow_mult.iter().flatten().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (0..n).all(|y| self.arrow_mult[x][y] == self.arrow_mult[y][x]))
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn to_count(q: &BigRational, what: impl FnOnce() -> String) -> Result<usize> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NonIntegerMultiplicity(format!("{} = {q}", what())));
    }
    q.to_integer()
        .to_usize()
        .ok_or_else(|| Error::NonIntegerMultiplicity(format!("{} = {q} is too large", what())))
}

impl CharacterTable {
    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, i: usize) -> &CyclotomicNumber {
        &self.irreducibles[i][0]
    }

    /// Value of `chi` at `g^k` for `g` in class `c`, when the power map is known.
    pub fn power_value(
        &self,
        chi: &[CyclotomicNumber],
        c: usize,
        k: usize,
    ) -> Option<CyclotomicNumber> {
        self.classes[c].power_maps.get(k).map(|&t| chi[t].clone())
    }

    /// Class sizes, trivial row, orthonormality, identity class and power maps.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Input(m));
        let h = self.n_classes();
        if h == 0 || self.classes[0].size != 1 {
            return bad("class 0 must be the identity class".into());
        }
        if self.classes.iter().map(|c| c.size).sum::<u64>() != self.order {
            return bad("class sizes do not sum to the group order".into());
        }
        if self.labels.len() != self.irreducibles.len() || self.irreducibles.len() != h {
            return bad(format!(
                "{} irreducibles for {h} classes",
                self.irreducibles.len()
            ));
        }
        if let Some(row) = self.irreducibles.iter().find(|r| r.len() != h) {
            return bad(format!(
                "character row of length {} for {h} classes",
                row.len()
            ));
        }
        let one = CyclotomicNumber::int(1);
        if !self
            .irreducibles
            .iter()
            .any(|r| r.iter().all(|x| *x == one))
        {
            return bad("no trivial character".into());
        }
        for (i, c) in self.classes.iter().enumerate() {
            if c.power_maps.iter().any(|&t| t >= h) {
                return bad(format!("power map of class {} out of range", c.label));
            }
            if c.power_maps.first().is_some_and(|&t| t != 0)
                || c.power_maps.get(1).is_some_and(|&t| t != i)
            {
                return bad(format!(
                    "power map of class {} must start with the identity and the class itself",
                    c.label
                ));
            }
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = self.inner_product(a, b)?;
                if ip != rat(i64::from(i == j)) {
                    return bad(format!("<{}, {}> = {ip}", self.labels[i], self.labels[j]));
                }
            }
        }
        Ok(())
    }

    /// `(1/|G|) sum_c |c| chi(c) conj(psi(c))`.
    pub fn inner_product(
        &self,
        chi: &[CyclotomicNumber],
        psi: &[CyclotomicNumber],
    ) -> Result<BigRational> {
        if chi.len() != self.n_classes() || psi.len() != self.n_classes() {
            return Err(Error::Input(
                "character does not conform to the table".into(),
            ));
        }
        let mut acc = CyclotomicNumber::int(0);
        for ((c, x), y) in self.classes.iter().zip(chi).zip(psi) {
            let term = (x * &y.conj()).scale(&BigRational::from_integer(BigInt::from(c.size)));
            acc = &acc + &term;
        }
        let s = acc
            .as_rational()
            .ok_or_else(|| Error::Input(format!("inner product {acc} is not rational")))?;
        Ok(s / BigRational::from_integer(BigInt::from(self.order)))
    }

    /// Multiplicities of the irreducibles in `chi`.
    pub fn decompose_character(&self, chi: &[CyclotomicNumber]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(self.irreducibles.len());
        for (row, label) in self.irreducibles.iter().zip(&self.labels) {
            out.push(to_count(&self.inner_product(chi, row)?, || {
                format!("multiplicity of {label}")
            })?);
        }
        let mut deg = CyclotomicNumber::int(0);
        for (i, &m) in out.iter().enumerate() {
            deg = &deg + &self.degree(i).scale(&rat(m as i64));
        }
        if deg != chi[0] {
            return Err(Error::NonIntegerMultiplicity(format!(
                "degrees add up to {deg}, not {}",
                chi[0]
            )));
        }
        Ok(out)
    }

    /// Character of `wedge^d V` by Newton's identities on the power maps.
    pub fn exterior_power(&self, chi: &[CyclotomicNumber], d: usize) -> Result<Character> {
        let mut out = Vec::with_capacity(self.n_classes());
        for c in 0..self.n_classes() {
            let mut p = Vec::with_capacity(d + 1);
            for k in 1..=d {
                p.push(
                    self.power_value(chi, c, k)
                        .ok_or(Error::MissingPowerMaps(d))?,
                );
            }
            let mut e = vec![CyclotomicNumber::int(1)];
            for k in 1..=d {
                let mut s = CyclotomicNumber::int(0);
                for i in 1..=k {
                    let t = &e[k - i] * &p[i - 1];
                    s = if i % 2 == 1 { &s + &t } else { &s - &t };
                }
                e.push(s.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
            }
            out.push(e.pop().unwrap());
        }
        Ok(out)
    }

    pub fn row_index(&self, chi: &[CyclotomicNumber]) -> Option<usize> {
        self.irreducibles.iter().position(|r| r.as_slice() == chi)
    }

    /// The cyclic group of order n with `chi_j(g^k) = zeta_n^{jk}` and power maps up to exponent `max(n, 4)`.
    pub fn cyclic(n: u32) -> CharacterTable {
        assert!(n >= 1);
        let classes = (0..n)
            .map(|k| ConjClass {
                label: if k == 0 { "1".into() } else { format!("g^{k}") },
                size: 1,
                power_maps: (0..=n.max(4)).map(|e| ((k * e) % n) as usize).collect(),
            })
            .collect();
        let irreducibles = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| CyclotomicNumber::root_of_unity(n, j * k))
                    .collect()
            })
            .collect();
        let labels = (0..n).map(|j| format!("chi{j}")).collect();
        CharacterTable {
            order: u64::from(n),
            classes,
            irreducibles,
            labels,
        }
    }

    pub fn trivial() -> CharacterTable {
        CharacterTable::cyclic(1)
    }

    /// The quaternion group `Q_8`, classes `1, -1, ±i, ±j, ±k`.
    pub fn quaternion() -> CharacterTable {
        let class = |label: &str, size, cycle: &[usize]| ConjClass {
            label: label.into(),
            size,
            power_maps: (0..=4).map(|e| cycle[e % cycle.len()]).collect(),
        };
        let classes = vec![
            class("1", 1, &[0]),
            class("-1", 1, &[0, 1]),
            class("i", 2, &[0, 2, 1, 2]),
            class("j", 2, &[0, 3, 1, 3]),
            class("k", 2, &[0, 4, 1, 4]),
        ];
        let rows: [[i64; 5]; 5] = [
            [1, 1, 1, 1, 1],
            [1, 1, 1, -1, -1],
            [1, 1, -1, 1, -1],
            [1, 1, -1, -1, 1],
            [2, -2, 0, 0, 0],
        ];
        let irreducibles = rows
            .iter()
            .map(|r| r.iter().map(|&x| CyclotomicNumber::int(x)).collect())
            .collect();
        let labels = ["chi0", "chi_i", "chi_j", "chi_k", "rho"]
            .map(String::from)
            .to_vec();
        CharacterTable {
            order: 8,
            classes,
            irreducibles,
            labels,
        }
    }

    /// The defining character of `Q_8 ⊂ SL_2`.
    pub fn quaternion_defining() -> Character {
        [2, -2, 0, 0, 0]
            .iter()
            .map(|&x| CyclotomicNumber::int(x))
            .collect()
    }

    /// Character of `diag(zeta^{w_1}, ..., zeta^{w_d})` for the generator of the cyclic group of order n.
    pub fn cyclic_diagonal(n: u32, weights: &[u32]) -> Character {
        (0..n)
            .map(|k| {
                let terms: Vec<(u32, BigRational)> = weights
                    .iter()
                    .map(|w| (w * k, BigRational::one()))
                    .collect();
                CyclotomicNumber::from_exponents(n, &terms)
            })
            .collect()
    }
}

/// Vertices `irr G`, `d_XY` arrows from X to Y with `d_XY` the multiplicity of X in `V ⊗ Y`,
/// and a dotted arrow from X to `det(V) ⊗ X`.
pub fn mckay_quiver(
    table: &CharacterTable,
    chi_v: &[CyclotomicNumber],
    d: usize,
    chi_s: Option<&[CyclotomicNumber]>,
) -> Result<QuiverGraph> {
    if d < 2 {
        return Err(Error::Input("McKay quivers need d >= 2".into()));
    }
    if chi_v.len() != table.n_classes() {
        return Err(Error::Input("chi_V does not conform to the table".into()));
    }
    if chi_v[0] != CyclotomicNumber::int(d as i64) {
        return Err(Error::Input(format!(
            "chi_V has degree {}, not {d}",
            chi_v[0]
        )));
    }
    let n = table.irreducibles.len();
    let mut arrow_mult = vec![vec![0; n]; n];
    for y in 0..n {
        let prod: Character = chi_v
            .iter()
            .zip(&table.irreducibles[y])
            .map(|(a, b)| a * b)
            .collect();
        let m = table.decompose_character(&prod)?;
        for x in 0..n {
            arrow_mult[x][y] = m[x];
        }
    }
    let det = match chi_s {
        Some(s) => s.to_vec(),
        None => table.exterior_power(chi_v, d)?,
    };
    if det.len() != table.n_classes() || det[0] != CyclotomicNumber::int(1) {
        return Err(Error::Input("determinant character must be linear".into()));
    }
    let mut dotted = Vec::with_capacity(n);
    for x in 0..n {
        let prod: Character = det
            .iter()
            .zip(&table.irreducibles[x])
            .map(|(a, b)| a * b)
            .collect();
        let t = table.row_index(&prod).ok_or_else(|| {
            Error::NonIntegerMultiplicity(format!("S ⊗ {} is not irreducible", table.labels[x]))
        })?;
        dotted.push(t);
    }
    let mut seen = vec![false; n];
    for &t in &dotted {
        if std::mem::replace(&mut seen[t], true) {
            return Err(Error::Internal("dotted map is not a permutation".into()));
        }
    }
    Ok(QuiverGraph {
        labels: table.labels.clone(),
        arrow_mult,
        dotted,
        determinant: det,
    })
}
