use crate::algebra::{Alg, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::modrep::{projective_module, HomSpace, Module, ModuleMap, ProjSum};

use super::{end_algebra, EndAlgebra};

/// An algebra isomorphism in coordinates: `rows[b]` is the image of basis element b.
#[derive(Clone, Debug)]
pub struct AlgebraIso {
    pub source: Alg,
    pub target: Alg,
    /// Vertex `v` of the source goes to vertex `vertex_map[v]` of the target.
    pub vertex_map: Vec<usize>,
    pub rows: Vec<Vec<Scalar>>,
}

impl AlgebraIso {
    fn image(&self, x: &Sparse) -> Vec<Scalar> {
        let f = self.target.field;
        let mut out = vec![f.zero(); self.target.dim()];
        for (b, c) in x {
            for (o, r) in out.iter_mut().zip(&self.rows[*b]) {
                o.add_mul(c, r);
            }
        }
        out
    }

    /// Bijective, unital on vertices, Peirce-compatible and multiplicative on basis pairs.
    pub fn verify(&self) -> bool {
        let (a, b) = (&self.source, &self.target);
        let d = a.dim();
        if d != b.dim() || self.rows.len() != d || a.n_vertices() != b.n_vertices() {
            return false;
        }
        if d > 0 && Matrix::from_rows(a.field, &self.rows, d).rank() != d {
            return false;
        }
        for (v, &w) in self.vertex_map.iter().enumerate() {
            if self.rows[a.idem[v]] != b.basis_vector(b.idem[w]) {
                return false;
            }
        }
        for (x, row) in self.rows.iter().enumerate() {
            let (s, t) = a.peirce[x];
            let want = (self.vertex_map[s], self.vertex_map[t]);
            if row
                .iter()
                .enumerate()
                .any(|(c, v)| !v.is_zero() && b.peirce[c] != want)
            {
                return false;
            }
        }
        (0..d).all(|x| {
            (0..d).all(|y| self.image(a.mul_basis(x, y)) == b.mul(&self.rows[x], &self.rows[y]))
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AlgebraIso) -> AlgebraIso {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let sparse: Sparse = r
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(b, c)| (b, c.clone()))
                    .collect();
                next.image(&sparse)
            })
            .collect();
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|&v| next.vertex_map[v])
            .collect();
        AlgebraIso {
            source: self.source.clone(),
            target: next.target.clone(),
            vertex_map,
            rows,
        }
    }

    /// Restriction of scalars: a target-module viewed as a source-module.
    pub fn pull_back(&self, y: &Module) -> Result<Module> {
        let a = &self.source;
        let dimv: Vec<usize> = self.vertex_map.iter().map(|&w| y.dimv[w]).collect();
        let blocks = (0..a.dim())
            .map(|b| {
                let (s, t) = a.peirce[b];
                let mut m = Matrix::zeros(a.field, dimv[t], dimv[s]);
                for (c, x) in self.rows[b].iter().enumerate() {
                    if !x.is_zero() {
                        m.add_scaled(x, y.block(c));
                    }
                }
                m
            })
            .collect();
        Module::from_blocks(a.clone(), dimv, blocks)
    }
}

/// `A ≅ End(A e_1 + ... + A e_r)`, sending b in `e_t A e_s` to right multiplication `A e_t -> A e_s`.
pub fn yoneda(a: &Alg, seed: u64) -> Result<(EndAlgebra, AlgebraIso)> {
    let n = a.n_vertices();
    let gens: Vec<Module> = (0..n).map(|v| projective_module(a, v)).collect();
    let e = end_algebra(&gens, seed)?;
    let mut rows = Vec::with_capacity(a.dim());
    for b in 0..a.dim() {
        let (s, t) = a.peirce[b];
        let at = a
            .block(s, t)
            .iter()
            .position(|&x| x == b)
            .expect("basis element in its Peirce block");
        let mut img = vec![a.field.zero(); gens[s].dimv[t]];
        img[at] = a.field.one();
        let r = ProjSum::new(a, &[t]).map_from_generators(&gens[s], &[img]);
        rows.push(
            e.coords(t, s, &r)
                .ok_or_else(|| Error::Internal("right multiplication outside Hom".into()))?,
        );
    }
    let iso = AlgebraIso {
        source: a.clone(),
        target: e.alg.clone(),
        vertex_map: (0..n).collect(),
        rows,
    };
    Ok((e, iso))
}

/// The isomorphism `End(⊕X_i) -> End(⊕Y_j)` induced by the functor `Hom(W, -)` of `w`,
/// where `iotas[i]: Y_{perm[i]} -> Hom(W, X_i)` identifies the generators.
pub fn functor_iso(
    src: &EndAlgebra,
    w: &EndAlgebra,
    tgt: &EndAlgebra,
    perm: &[usize],
    images: &[(Module, Vec<HomSpace>)],
    iotas: &[ModuleMap],
) -> Result<AlgebraIso> {
    let invs: Vec<ModuleMap> = iotas
        .iter()
        .map(|i| {
            i.inverse()
                .ok_or_else(|| Error::Internal("generator identification is not invertible".into()))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(src.basis.len());
    for (g, &(s, t)) in src.basis.iter().zip(&src.ends) {
        let fg = w.functor_map(g, &images[s], &images[t]);
        let conj = invs[t].after(&fg.after(&iotas[s]));
        rows.push(
            tgt.coords(perm[s], perm[t], &conj)
                .ok_or_else(|| Error::Internal("functor image outside Hom".into()))?,
        );
    }
    Ok(AlgebraIso {
        source: src.alg.clone(),
        target: tgt.alg.clone(),
        vertex_map: perm.to_vec(),
        rows,
    })
}
