//! Finite-dimensional algebras given by basis and structure constants.
//!
//! Every algebra here is kept in a split basic presentation: the basis is the
//! list of primitive vertex idempotents followed by a basis of the radical, and
//! each basis element lies in one Peirce block `e_t A e_s` (written `s -> t`).

mod ops;
mod path;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactlin::{Coordinates, FieldSpec, Scalar, Subspace};

pub use ops::{
    cartan_matrix, opposite, primitive_idempotents, quotient_by_idempotent_ideal, radical_basis,
};
pub use path::{build_path_algebra, PathExpr, Quiver};

/// Sparse coefficient vector over the basis, sorted by index, no explicit zeros.
pub type Sparse = Vec<(usize, Scalar)>;

pub(crate) fn sparse_from_dense(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(field: FieldSpec, dim: usize, s: &Sparse) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    for (i, x) in s {
        v[*i] = x.clone();
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    PathAlgebra,
    Endomorphism,
    Quotient,
    Opposite,
}

#[derive(Debug)]
pub struct FDAlgebra {
    pub field: FieldSpec,
    /// Vertex labels, one per primitive idempotent.
    pub vertices: Vec<String>,
    /// Basis labels.
    pub labels: Vec<String>,
    /// Basis index of the idempotent at each vertex.
    pub idem: Vec<usize>,
    /// (source, target) vertex of each basis element.
    pub peirce: Vec<(usize, usize)>,
    pub origin: Origin,
    mult: Vec<Sparse>,
    fingerprint: u64,
    gens: OnceLock<Vec<usize>>,
    words: OnceLock<Words>,
    op_cache: OnceLock<Alg>,
    op_of: OnceLock<Weak<FDAlgebra>>,
}

/// Each radical basis element written as a combination of products of generators.
#[derive(Debug)]
pub struct Words {
    /// Products g_{w[0]} * g_{w[1]} * ... of generator basis indices.
    pub words: Vec<Vec<usize>>,
    /// `expr[b]` for a radical basis element b: coefficients over `words`.
    pub expr: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for FDAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.fingerprint == o.fingerprint
            && self.field == o.field
            && self.peirce == o.peirce
            && self.idem == o.idem
            && self.mult == o.mult
    }
}

impl Eq for FDAlgebra {}

pub type Alg = Arc<FDAlgebra>;

/// The opposite algebra, cached so that `op(&op(a))` returns `a` itself.
pub fn op(a: &Alg) -> Alg {
    if let Some(orig) = a.op_of.get().and_then(Weak::upgrade) {
        return orig;
    }
    a.op_cache
        .get_or_init(|| {
            let o = Arc::new(ops::opposite(a));
            let _ = o.op_of.set(Arc::downgrade(a));
            o
        })
        .clone()
}

/// True when two handles denote the same algebra (pointer or table equality).
pub fn same_algebra(a: &FDAlgebra, b: &FDAlgebra) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl FDAlgebra {
    /// Assembles an algebra and checks the split basic presentation, associativity and unit laws.
    pub fn new(
        field: FieldSpec,
        vertices: Vec<String>,
        labels: Vec<String>,
        idem: Vec<usize>,
        peirce: Vec<(usize, usize)>,
        mult: Vec<Sparse>,
        origin: Origin,
    ) -> Result<FDAlgebra> {
        let dim = labels.len();
        if peirce.len() != dim || mult.len() != dim * dim || idem.len() != vertices.len() {
            return Err(Error::Input("inconsistent algebra table sizes".into()));
        }
        let mut h = DefaultHasher::new();
        field.hash(&mut h);
        peirce.hash(&mut h);
        idem.hash(&mut h);
        mult.hash(&mut h);
        let a = FDAlgebra {
            field,
            vertices,
            labels,
            idem,
            peirce,
            origin,
            mult,
            fingerprint: h.finish(),
            gens: OnceLock::new(),
            words: OnceLock::new(),
            op_cache: OnceLock::new(),
            op_of: OnceLock::new(),
        };
        a.validate()?;
        Ok(a)
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn source(&self, b: usize) -> usize {
        self.peirce[b].0
    }

    pub fn target(&self, b: usize) -> usize {
        self.peirce[b].1
    }

    pub fn is_idempotent_index(&self, b: usize) -> bool {
        self.idem.contains(&b)
    }

    /// Basis indices of the radical (all non-idempotent basis elements).
    pub fn rad_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|b| !self.is_idempotent_index(*b))
            .collect()
    }

    /// Structure constants of b_i * b_j.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul_sparse(&self, x: &Sparse, y: &Sparse) -> Sparse {
        let mut acc = vec![self.field.zero(); self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                if self.source(*i) != self.target(*j) {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.mul_basis(*i, *j) {
                    acc[*k].add_mul(&ab, c);
                }
            }
        }
        sparse_from_dense(&acc)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let s = self.mul_sparse(&sparse_from_dense(x), &sparse_from_dense(y));
        dense_from_sparse(self.field, self.dim(), &s)
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![self.field.zero(); self.dim()];
        for &e in &self.idem {
            u[e] = self.field.one();
        }
        u
    }

    pub fn basis_vector(&self, b: usize) -> Vec<Scalar> {
        let mut u = vec![self.field.zero(); self.dim()];
        u[b] = self.field.one();
        u
    }

    /// Non-idempotent basis elements whose classes form a basis of rad/rad^2.
    /// Together with the idempotents they generate the algebra.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let rad = self.rad_indices();
            let mut sq = Subspace::new(self.field, self.dim());
            for &i in &rad {
                for &j in &rad {
                    if self.source(i) == self.target(j) {
                        sq.insert(dense_from_sparse(
                            self.field,
                            self.dim(),
                            self.mul_basis(i, j),
                        ));
                    }
                }
            }
            rad.into_iter()
                .filter(|&b| sq.insert(self.basis_vector(b)))
                .collect()
        })
    }

    /// Word expressions for the radical basis, computed once.
    pub fn words(&self) -> &Words {
        self.words.get_or_init(|| {
            let d = self.dim();
            let f = self.field;
            let gens = self.generators().to_vec();
            let mut words: Vec<Vec<usize>> = Vec::new();
            let mut vecs: Vec<Vec<Scalar>> = Vec::new();
            let mut span = Subspace::new(f, d);
            let mut frontier: Vec<(Vec<usize>, Sparse)> = gens
                .iter()
                .map(|&g| (vec![g], vec![(g, f.one())]))
                .collect();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for (w, v) in frontier {
                    let dense = dense_from_sparse(f, d, &v);
                    if !span.insert(dense.clone()) {
                        continue;
                    }
                    for &g in &gens {
                        let p = self.mul_sparse(&vec![(g, f.one())], &v);
                        if !p.is_empty() {
                            let mut w2 = vec![g];
                            w2.extend(&w);
                            next.push((w2, p));
                        }
                    }
                    words.push(w);
                    vecs.push(dense);
                }
                frontier = next;
            }
            let co = Coordinates::new(f, d, &vecs);
            let mut expr = vec![Vec::new(); d];
            for b in self.rad_indices() {
                let c = co
                    .coords(&self.basis_vector(b))
                    .expect("generators span the radical");
                expr[b] = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
            }
            Words { words, expr }
        })
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field;
        let bad = |m: String| Err(Error::Input(m));
        for (v, &e) in self.idem.iter().enumerate() {
            if self.peirce[e] != (v, v) {
                return bad(format!("idempotent of vertex {v} is not in its corner"));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let p = self.mul_basis(i, j);
                if self.source(i) != self.target(j) {
                    if !p.is_empty() {
                        return bad(format!(
                            "product of non-composable basis elements {i},{j} is nonzero"
                        ));
                    }
                    continue;
                }
                for (k, _) in p {
                    if self.peirce[*k] != (self.source(j), self.target(i)) {
                        return bad(format!("product {i}*{j} leaves its Peirce block"));
                    }
                }
            }
        }
        // idempotent and unit laws
        for b in 0..d {
            let (s, t) = self.peirce[b];
            let left = self.mul_basis(self.idem[t], b);
            let right = self.mul_basis(b, self.idem[s]);
            let unit = vec![(b, f.one())];
            if *left != unit || *right != unit {
                return bad(format!(
                    "idempotents do not act as identities on basis element {b}"
                ));
            }
        }
        // radical part must be nilpotent: products of radical elements stay in the radical
        let rad = self.rad_indices();
        for &i in &rad {
            for &j in &rad {
                if self
                    .mul_basis(i, j)
                    .iter()
                    .any(|(k, _)| self.is_idempotent_index(*k))
                {
                    return bad("radical basis is not closed under products".into());
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                if self.source(i) != self.target(j) {
                    continue;
                }
                for k in 0..d {
                    if self.source(j) != self.target(k) {
                        continue;
                    }
                    let l = self.mul_sparse(self.mul_basis(i, j), &vec![(k, f.one())]);
                    let r = self.mul_sparse(&vec![(i, f.one())], self.mul_basis(j, k));
                    if l != r {
                        return bad(format!("associativity fails on basis triple ({i},{j},{k})"));
                    }
                }
            }
        }
        // nilpotency of the radical: rad^(d+1) = 0
        let mut power: Vec<Sparse> = rad.iter().map(|&b| vec![(b, f.one())]).collect();
        for _ in 0..=d {
            if power.is_empty() {
                break;
            }
            let mut next = Subspace::new(f, d);
            for x in &power {
                for &b in &rad {
                    next.insert(dense_from_sparse(
                        f,
                        d,
                        &self.mul_sparse(x, &vec![(b, f.one())]),
                    ));
                }
            }
            power = next.basis().iter().map(|v| sparse_from_dense(v)).collect();
        }
        if !power.is_empty() {
            return bad("radical basis is not nilpotent".into());
        }
        Ok(())
    }

    /// Basis indices of the block s -> t.
    pub fn block(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.peirce[b] == (s, t))
            .collect()
    }
}
