//! Finite-dimensional left modules over an [`FDAlgebra`].
//!
//! A module is stored vertex-graded: its basis is the concatenation of bases
//! of `e_v M` over the vertices, and each algebra basis element `b: s -> t`
//! acts by a block `e_t M <- e_s M`. Module maps are block diagonal.

mod approx;
mod decomp;
mod hom;
mod resolve;
mod sub;

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::algebra::{op, same_algebra, Alg};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};

pub use approx::{
    is_left_approximation, is_right_approximation, left_approx, left_approximation, resolution_dim,
    resolution_dim_in, right_approx, right_approximation, AddCat, Approx,
};
pub use decomp::{decompose, end_radical, is_indecomposable, is_radical_map, iso, Decomposition};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub use resolve::{
    cosyzygy, injective_envelope, is_injective, is_projective, min_inj_coresolution,
    min_proj_resolution, projective_cover, stabilize, stabilize_injective, syzygy, Dim, Flavor,
    Resolution,
};
pub use sub::{
    cokernel, direct_sum, factor_through_epi, factor_through_mono, image, kernel, lift_through_epi,
    map_from_sum, map_into_sum, quotient, radical_of_module, random_quotient, socle, submodule,
    top, DirectSum, Sub,
};

#[derive(Debug)]
pub struct ModuleData {
    pub alg: Alg,
    pub dimv: Vec<usize>,
    offsets: Vec<usize>,
    /// One block per algebra basis element, `dimv[target] x dimv[source]`.
    blocks: Vec<Matrix>,
}

/// Cheaply clonable handle to an immutable module.
#[derive(Clone, Debug)]
pub struct Module(Arc<ModuleData>);

impl Deref for Module {
    type Target = ModuleData;
    fn deref(&self) -> &ModuleData {
        &self.0
    }
}

impl PartialEq for Module {
    /// Equality of presentations, not isomorphism.
    fn eq(&self, o: &Module) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
            || (same_algebra(&self.alg, &o.alg) && self.dimv == o.dimv && self.blocks == o.blocks)
    }
}

impl Eq for Module {}

fn offsets(dimv: &[usize]) -> Vec<usize> {
    let mut o = Vec::with_capacity(dimv.len() + 1);
    let mut acc = 0;
    o.push(0);
    for d in dimv {
        acc += d;
        o.push(acc);
    }
    o
}

impl Module {
    /// Builds a module from a block for every algebra basis element and checks the axioms.
    pub fn from_blocks(alg: Alg, dimv: Vec<usize>, blocks: Vec<Matrix>) -> Result<Module> {
        if dimv.len() != alg.n_vertices() || blocks.len() != alg.dim() {
            return Err(Error::Input(
                "module data does not match the algebra".into(),
            ));
        }
        for (b, m) in blocks.iter().enumerate() {
            let (s, t) = alg.peirce[b];
            if m.rows != dimv[t] || m.cols != dimv[s] || m.field != alg.field {
                return Err(Error::Input(format!(
                    "action block of basis element {b} has the wrong shape"
                )));
            }
        }
        let m = Module::raw(alg, dimv, blocks);
        m.verify()?;
        Ok(m)
    }

    /// Builds a module from the action of the generators (arrows) alone.
    ///
    /// The remaining blocks are obtained as products; the relations are then
    /// checked through the full structure constants.
    pub fn from_generators(alg: Alg, dimv: Vec<usize>, gens: &[(usize, Matrix)]) -> Result<Module> {
        if dimv.len() != alg.n_vertices() {
            return Err(Error::Input(
                "dimension vector length differs from the vertex count".into(),
            ));
        }
        let f = alg.field;
        let mut gb: Vec<Option<Matrix>> = vec![None; alg.dim()];
        for (g, m) in gens {
            if !alg.generators().contains(g) {
                return Err(Error::Input(format!(
                    "basis element {g} is not a generator"
                )));
            }
            let (s, t) = alg.peirce[*g];
            if m.rows != dimv[t] || m.cols != dimv[s] {
                return Err(Error::Input(format!(
                    "matrix for {} has the wrong shape",
                    alg.labels[*g]
                )));
            }
            gb[*g] = Some(m.clone());
        }
        let gen_block = |g: usize| {
            let (s, t) = alg.peirce[g];
            gb[g]
                .clone()
                .unwrap_or_else(|| Matrix::zeros(f, dimv[t], dimv[s]))
        };
        let words = alg.words();
        let word_blocks: Vec<Matrix> = words
            .words
            .iter()
            .map(|w| {
                let mut m = gen_block(w[0]);
                for &g in &w[1..] {
                    m = m.mul(&gen_block(g));
                }
                m
            })
            .collect();
        let mut blocks = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let (s, t) = alg.peirce[b];
            if alg.is_idempotent_index(b) {
                blocks.push(Matrix::identity(f, dimv[s]));
                continue;
            }
            let mut m = Matrix::zeros(f, dimv[t], dimv[s]);
            for (k, c) in &words.expr[b] {
                m.add_scaled(c, &word_blocks[*k]);
            }
            blocks.push(m);
        }
        Module::from_blocks(alg, dimv, blocks)
    }

    /// Builds a module from one full `dim x dim` matrix per basis element, regrading by vertex.
    pub fn from_full_action(alg: Alg, dim: usize, action: &[Matrix]) -> Result<Module> {
        if action.len() != alg.dim() || action.iter().any(|m| m.rows != dim || m.cols != dim) {
            return Err(Error::Input(
                "action matrices do not match the algebra".into(),
            ));
        }
        let f = alg.field;
        // basis of e_v M = column space of the idempotent action
        let bases: Vec<Matrix> = alg.idem.iter().map(|&e| action[e].image_basis()).collect();
        let change = bases
            .iter()
            .fold(Matrix::zeros(f, dim, 0), |acc, b| acc.hstack(b));
        if change.cols != dim {
            return Err(Error::Input(
                "idempotents do not decompose the module".into(),
            ));
        }
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Input("idempotents do not decompose the module".into()))?;
        let dimv: Vec<usize> = bases.iter().map(|b| b.cols).collect();
        let off = offsets(&dimv);
        let mut blocks = Vec::with_capacity(alg.dim());
        for (b, a) in action.iter().enumerate() {
            let (s, t) = alg.peirce[b];
            let conj = inv.mul(a).mul(&change);
            blocks.push(conj.block(off[t], off[s], dimv[t], dimv[s]));
            // the rest of the column block must vanish
            let col = conj.block(0, off[s], dim, dimv[s]);
            let mut rest = col.clone();
            rest.set_block(off[t], 0, &Matrix::zeros(f, dimv[t], dimv[s]));
            if !rest.is_zero() {
                return Err(Error::Input(format!(
                    "basis element {b} does not respect the Peirce grading"
                )));
            }
        }
        Module::from_blocks(alg, dimv, blocks)
    }

    pub(crate) fn raw(alg: Alg, dimv: Vec<usize>, blocks: Vec<Matrix>) -> Module {
        let offsets = offsets(&dimv);
        Module(Arc::new(ModuleData {
            alg,
            dimv,
            offsets,
            blocks,
        }))
    }

    pub fn zero(alg: &Alg) -> Module {
        let n = alg.n_vertices();
        let f = alg.field;
        let blocks = (0..alg.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::raw(alg.clone(), vec![0; n], blocks)
    }

    /// Checks the unit law and every structure constant.
    pub fn verify(&self) -> Result<()> {
        let a = &self.alg;
        let bad = |m: String| Err(Error::Input(m));
        for (v, &e) in a.idem.iter().enumerate() {
            if !self.blocks[e].is_identity() || self.blocks[e].rows != self.dimv[v] {
                return bad(format!(
                    "idempotent at vertex {v} does not act as the identity"
                ));
            }
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if a.source(i) != a.target(j)
                    || a.is_idempotent_index(i)
                    || a.is_idempotent_index(j)
                {
                    continue;
                }
                let lhs = self.blocks[i].mul(&self.blocks[j]);
                let mut rhs = Matrix::zeros(a.field, lhs.rows, lhs.cols);
                for (k, c) in a.mul_basis(i, j) {
                    rhs.add_scaled(c, &self.blocks[*k]);
                }
                if lhs != rhs {
                    return bad(format!(
                        "action violates the product {} * {}",
                        a.labels[i], a.labels[j]
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.dimv.len()]
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    /// Block of basis element `b`, mapping `e_s M` to `e_t M`.
    pub fn block(&self, b: usize) -> &Matrix {
        &self.blocks[b]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// Full `dim x dim` action matrix of basis element `b`.
    pub fn action(&self, b: usize) -> Matrix {
        let (s, t) = self.alg.peirce[b];
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        m.set_block(self.offsets[t], self.offsets[s], &self.blocks[b]);
        m
    }

    /// Action of an algebra element on a vector supported at vertex `s`; returns the
    /// component at vertex `t`.
    pub fn act_on(&self, x: &[(usize, Scalar)], s: usize, t: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.dimv[t]];
        for (b, c) in x {
            if self.alg.peirce[*b] != (s, t) {
                continue;
            }
            let w = self.blocks[*b].mul_vec(v);
            for (o, y) in out.iter_mut().zip(&w) {
                o.add_mul(c, y);
            }
        }
        out
    }

    pub fn same_algebra_as(&self, o: &Module) -> bool {
        same_algebra(&self.alg, &o.alg)
    }

    /// The `(vertex, position)` of a global basis index.
    pub fn locate(&self, i: usize) -> (usize, usize) {
        let v = (0..self.dimv.len())
            .find(|&v| i < self.offsets[v + 1])
            .expect("index in range");
        (v, i - self.offsets[v])
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "module dim {} {:?}", self.dim(), self.dimv)
    }
}

/// A module homomorphism, stored as one block per vertex.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    /// `blocks[v]` is `target.dimv[v] x source.dimv[v]`.
    pub blocks: Vec<Matrix>,
}

impl PartialEq for ModuleMap {
    fn eq(&self, o: &ModuleMap) -> bool {
        self.source == o.source && self.target == o.target && self.blocks == o.blocks
    }
}

impl ModuleMap {
    /// Checks shapes and the intertwining property on the generators.
    pub fn new(source: Module, target: Module, blocks: Vec<Matrix>) -> Result<ModuleMap> {
        let m = ModuleMap {
            source,
            target,
            blocks,
        };
        m.verify()?;
        Ok(m)
    }

    pub fn verify(&self) -> Result<()> {
        if !self.source.same_algebra_as(&self.target) {
            return Err(Error::Input(
                "map between modules over different algebras".into(),
            ));
        }
        let a = &self.source.alg;
        if self.blocks.len() != a.n_vertices() {
            return Err(Error::Input(
                "map has the wrong number of vertex blocks".into(),
            ));
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows != self.target.dimv[v] || b.cols != self.source.dimv[v] {
                return Err(Error::Input(format!(
                    "map block at vertex {v} has the wrong shape"
                )));
            }
        }
        for &g in a.generators() {
            let (s, t) = a.peirce[g];
            if self.target.block(g).mul(&self.blocks[s]) != self.blocks[t].mul(self.source.block(g))
            {
                return Err(Error::Input(format!(
                    "map does not commute with {}",
                    a.labels[g]
                )));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> ModuleMap {
        let f = m.field();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            blocks: m.dimv.iter().map(|&d| Matrix::identity(f, d)).collect(),
        }
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleMap {
        let f = source.field();
        let blocks = source
            .dimv
            .iter()
            .zip(&target.dimv)
            .map(|(&s, &t)| Matrix::zeros(f, t, s))
            .collect();
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &ModuleMap) -> ModuleMap {
        debug_assert!(first.target.dimv == self.source.dimv);
        ModuleMap {
            source: first.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&o.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&o.blocks)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Linear combination of maps with a common source and target.
    pub fn combination(
        maps: &[ModuleMap],
        coeffs: &[Scalar],
        source: &Module,
        target: &Module,
    ) -> ModuleMap {
        let mut out = ModuleMap::zero(source, target);
        for (m, c) in maps.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.blocks.iter_mut().zip(&m.blocks) {
                o.add_scaled(c, b);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let blocks = self
            .blocks
            .iter()
            .map(Matrix::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleMap {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks,
        })
    }

    /// Block diagonal `dim target x dim source` matrix.
    pub fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.source.field(), self.target.dim(), self.source.dim());
        for (v, b) in self.blocks.iter().enumerate() {
            m.set_block(self.target.offset(v), self.source.offset(v), b);
        }
        m
    }

    /// Flattened entries, vertex by vertex, row-major inside each block.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks
            .iter()
            .flat_map(|b| b.data().iter().cloned())
            .collect()
    }

    pub fn restrict_target(&self, new_target: &Module) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: new_target.clone(),
            blocks: self.blocks.clone(),
        }
    }
}

/// Simple module at vertex `i`.
pub fn simple_module(alg: &Alg, i: usize) -> Module {
    let f = alg.field;
    let mut dimv = vec![0; alg.n_vertices()];
    dimv[i] = 1;
    let blocks = (0..alg.dim())
        .map(|b| {
            let (s, t) = alg.peirce[b];
            if b == alg.idem[i] {
                Matrix::identity(f, 1)
            } else {
                Matrix::zeros(f, dimv[t], dimv[s])
            }
        })
        .collect();
    Module::raw(alg.clone(), dimv, blocks)
}

/// A direct sum of indecomposable projectives `A e_{tops[j]}` in a fixed basis.
///
/// At vertex t the basis runs over summands j, and inside a summand over the
/// algebra basis elements with Peirce block `tops[j] -> t`, in index order.
#[derive(Clone, Debug)]
pub struct ProjSum {
    pub tops: Vec<usize>,
    pub module: Module,
}

impl ProjSum {
    pub fn new(alg: &Alg, tops: &[usize]) -> ProjSum {
        let f = alg.field;
        let n = alg.n_vertices();
        let d = alg.dim();
        // entries[t] = list of (summand, algebra basis element)
        let mut entries: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (j, &u) in tops.iter().enumerate() {
            for b in 0..d {
                if alg.source(b) == u {
                    entries[alg.target(b)].push((j, b));
                }
            }
        }
        for e in entries.iter_mut() {
            e.sort();
        }
        let pos: Vec<std::collections::HashMap<(usize, usize), usize>> = entries
            .iter()
            .map(|e| e.iter().enumerate().map(|(i, &x)| (x, i)).collect())
            .collect();
        let dimv: Vec<usize> = entries.iter().map(Vec::len).collect();
        let mut blocks = Vec::with_capacity(d);
        for a in 0..d {
            let (s, t) = alg.peirce[a];
            let mut m = Matrix::zeros(f, dimv[t], dimv[s]);
            for (col, &(j, b)) in entries[s].iter().enumerate() {
                for (k, c) in alg.mul_basis(a, b) {
                    m[(pos[t][&(j, *k)], col)] = c.clone();
                }
            }
            blocks.push(m);
        }
        ProjSum {
            tops: tops.to_vec(),
            module: Module::raw(alg.clone(), dimv, blocks),
        }
    }

    /// `(vertex, position)` of the generator `e_{tops[j]}` of summand j.
    pub fn generator(&self, j: usize) -> (usize, usize) {
        let alg = &self.module.alg;
        let u = self.tops[j];
        let before: usize = (0..j).map(|i| alg.block(self.tops[i], u).len()).sum();
        let inside = alg
            .block(u, u)
            .iter()
            .position(|&b| b == alg.idem[u])
            .expect("idempotent in its corner");
        (u, before + inside)
    }

    /// The algebra element (sparse over the basis of A) forming component `j`
    /// of a vector at vertex `t`.
    pub fn component(&self, t: usize, v: &[Scalar], j: usize) -> Vec<(usize, Scalar)> {
        let alg = &self.module.alg;
        let u = self.tops[j];
        let start: usize = (0..j).map(|i| alg.block(self.tops[i], t).len()).sum();
        alg.block(u, t)
            .into_iter()
            .enumerate()
            .filter(|(k, _)| !v[start + k].is_zero())
            .map(|(k, b)| (b, v[start + k].clone()))
            .collect()
    }

    /// The map out of this projective sum sending generator j to `images[j]`
    /// (a vector of `target` at vertex `tops[j]`).
    pub fn map_from_generators(&self, target: &Module, images: &[Vec<Scalar>]) -> ModuleMap {
        let alg = &self.module.alg;
        let f = alg.field;
        let n = alg.n_vertices();
        let mut blocks: Vec<Matrix> = (0..n)
            .map(|v| Matrix::zeros(f, target.dimv[v], self.module.dimv[v]))
            .collect();
        let mut col = vec![0usize; n];
        for (j, &u) in self.tops.iter().enumerate() {
            for t in 0..n {
                for b in alg.block(u, t) {
                    let w = target.block(b).mul_vec(&images[j]);
                    for (r, x) in w.into_iter().enumerate() {
                        blocks[t][(r, col[t])] = x;
                    }
                    col[t] += 1;
                }
            }
        }
        ModuleMap {
            source: self.module.clone(),
            target: target.clone(),
            blocks,
        }
    }
}

/// Indecomposable projective `A e_i`.
pub fn projective_module(alg: &Alg, i: usize) -> Module {
    ProjSum::new(alg, &[i]).module
}

/// The regular left module, as the sum of the indecomposable projectives.
pub fn regular_module(alg: &Alg) -> Module {
    ProjSum::new(alg, &(0..alg.n_vertices()).collect::<Vec<_>>()).module
}

/// Vector-space dual, a module over the opposite algebra.
pub fn dual(m: &Module) -> Module {
    let aop = op(&m.alg);
    let blocks = m.blocks.iter().map(Matrix::transpose).collect();
    Module::raw(aop, m.dimv.clone(), blocks)
}

/// Dual of a map `f: X -> Y`, the map `DY -> DX`.
pub fn dual_map(f: &ModuleMap) -> ModuleMap {
    ModuleMap {
        source: dual(&f.target),
        target: dual(&f.source),
        blocks: f.blocks.iter().map(Matrix::transpose).collect(),
    }
}

/// Indecomposable injective `D(e_i A)`, the dual of the opposite projective.
pub fn injective_module(alg: &Alg, i: usize) -> Module {
    dual(&projective_module(&op(alg), i))
}

/// `D(A_A)`, the sum of the indecomposable injectives.
pub fn dual_regular(alg: &Alg) -> Module {
    dual(&regular_module(&op(alg)))
}

/// Multiplicity-free sum of simples at the given vertices, as a semisimple module.
pub fn semisimple_module(alg: &Alg, dimv: &[usize]) -> Module {
    let f = alg.field;
    let blocks = (0..alg.dim())
        .map(|b| {
            let (s, t) = alg.peirce[b];
            if alg.is_idempotent_index(b) {
                Matrix::identity(f, dimv[s])
            } else {
                Matrix::zeros(f, dimv[t], dimv[s])
            }
        })
        .collect();
    Module::raw(alg.clone(), dimv.to_vec(), blocks)
}
