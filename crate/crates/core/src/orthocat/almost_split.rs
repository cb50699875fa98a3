use super::{same_indecomposable, Subcat};
use crate::correspond::end_algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::homology::tau;
use crate::modrep::{
    cokernel, direct_sum, end_radical, factor_through_epi, factor_through_mono, hom_basis,
    is_indecomposable, is_projective, is_radical_map, kernel, lift_through_epi,
    min_proj_resolution, projective_cover, simple_module, Dim, Module, ModuleMap,
};

/// An exact sequence `0 -> Y -> C_{n-1} -> ... -> C_0 -> X -> 0`.
///
/// `terms` runs from Y to X and `maps[i]: terms[i] -> terms[i+1]`.
#[derive(Clone, Debug)]
pub struct AlmostSplitSeq {
    pub n: usize,
    pub terms: Vec<Module>,
    pub maps: Vec<ModuleMap>,
    pub radical_flags: Vec<bool>,
    /// Projective dimension of the simple functor at X, when built from a resolution.
    pub simple_pd: Option<Dim>,
}

impl AlmostSplitSeq {
    pub fn left(&self) -> &Module {
        &self.terms[0]
    }

    pub fn right(&self) -> &Module {
        self.terms.last().unwrap()
    }

    /// Composites vanish, the ends are mono and epi, and ranks add up in the middle.
    pub fn is_exact(&self) -> bool {
        let k = self.maps.len();
        if !self.maps[0].is_injective() || !self.maps[k - 1].is_surjective() {
            return false;
        }
        (0..k - 1).all(|i| {
            let (f, g) = (&self.maps[i], &self.maps[i + 1]);
            g.after(f).is_zero() && f.rank() + g.rank() == f.target.dim()
        })
    }

    pub fn all_radical(&self) -> bool {
        self.radical_flags.iter().all(|&b| b)
    }

    /// Exactness of `0 -> (G,Y) -> ... -> (G,C_0) -> J(G,X) -> 0` and of
    /// `0 -> (X,G) -> ... -> (C_{n-1},G) -> J(Y,G) -> 0` for every G.
    pub fn hom_exact_on(&self, gens: &[Module]) -> bool {
        gens.iter()
            .all(|g| self.covariant_exact(g) && self.contravariant_exact(g))
    }

    fn covariant_exact(&self, g: &Module) -> bool {
        let homs: Vec<Vec<ModuleMap>> = self.terms.iter().map(|t| hom_basis(g, t)).collect();
        let ranks: Vec<usize> = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, f)| span_dim(g, &self.terms[i + 1], homs[i].iter().map(|h| f.after(h))))
            .collect();
        let k = self.maps.len();
        let jx = homs[k].len() - usize::from(same_indecomposable(g, self.right()));
        ranks[0] == homs[0].len()
            && ranks[k - 1] == jx
            && (1..k).all(|i| ranks[i - 1] + ranks[i] == homs[i].len())
    }

    fn contravariant_exact(&self, g: &Module) -> bool {
        let homs: Vec<Vec<ModuleMap>> = self.terms.iter().map(|t| hom_basis(t, g)).collect();
        // ranks[i]: Hom(terms[i+1], G) -> Hom(terms[i], G)
        let ranks: Vec<usize> = self
            .maps
            .iter()
            .enumerate()
            .map(|(i, f)| span_dim(&self.terms[i], g, homs[i + 1].iter().map(|h| h.after(f))))
            .collect();
        let k = self.maps.len();
        let jy = homs[0].len() - usize::from(same_indecomposable(self.left(), g));
        ranks[k - 1] == homs[k].len()
            && ranks[0] == jy
            && (1..k).all(|i| ranks[i - 1] + ranks[i] == homs[i].len())
    }
}

fn span_dim(x: &Module, y: &Module, maps: impl Iterator<Item = ModuleMap>) -> usize {
    let len: usize = x.dimv.iter().zip(&y.dimv).map(|(a, b)| a * b).sum();
    let mut s = Subspace::new(x.field(), len);
    for m in maps {
        s.insert(m.flatten());
    }
    s.dim()
}

/// The almost split sequence `0 -> tau Z -> E -> Z -> 0`, as the pushout of
/// `0 -> Omega Z -> P(Z) -> Z -> 0` along a map representing a socle element
/// of `Ext^1(Z, tau Z)` for both endomorphism rings.
pub fn almost_split_sequence(z: &Module, seed: u64) -> Result<AlmostSplitSeq> {
    if z.is_zero() || is_projective(z) || !is_indecomposable(z, seed)? {
        return Err(Error::Precondition(
            "almost split sequences end in indecomposable non-projectives".into(),
        ));
    }
    let f = z.field();
    let tz = tau(z);
    let (p, epi) = projective_cover(z);
    let om = kernel(&epi);
    let iota = &om.map;
    let hs = hom_basis(&om.module, &tz);
    let len: usize = om
        .module
        .dimv
        .iter()
        .zip(&tz.dimv)
        .map(|(a, b)| a * b)
        .sum();
    let mut inner = Subspace::new(f, len);
    for g in hom_basis(&p.module, &tz) {
        inner.insert(g.after(iota).flatten());
    }
    let rad_z = end_radical(z, seed)
        .ok_or_else(|| Error::Inconclusive("End(Z) not certified local".into()))?;
    let rad_t = end_radical(&tz, seed)
        .ok_or_else(|| Error::Inconclusive("End(tau Z) not certified local".into()))?;
    let mut lifted = Vec::new();
    for r in &rad_z {
        let up = lift_through_epi(&p, &epi, &r.after(&epi))
            .ok_or_else(|| Error::Internal("lift along the cover failed".into()))?;
        let rest = factor_through_mono(iota, &up.after(iota))
            .ok_or_else(|| Error::Internal("lift does not preserve the syzygy".into()))?;
        lifted.push(rest);
    }
    // columns: images of h_j under every annihilation condition, reduced modulo the inner classes
    let mut rows: Vec<Vec<crate::exactlin::Scalar>> = Vec::new();
    let conds: Vec<Vec<crate::exactlin::Scalar>> = hs
        .iter()
        .map(|h| {
            let mut v = Vec::new();
            for r in &lifted {
                v.push(inner.reduce(h.after(r).flatten()));
            }
            for s in &rad_t {
                v.push(inner.reduce(s.after(h).flatten()));
            }
            v.concat()
        })
        .collect();
    let height = conds.first().map_or(0, Vec::len);
    for i in 0..height {
        rows.push(conds.iter().map(|c| c[i].clone()).collect());
    }
    let ann = if rows.is_empty() {
        Matrix::identity(f, hs.len())
    } else {
        Matrix::from_rows(f, &rows, hs.len()).kernel()
    };
    let h = (0..ann.cols)
        .map(|j| ModuleMap::combination(&hs, &ann.col(j), &om.module, &tz))
        .find(|h| inner.reduce(h.flatten()).iter().any(|x| !x.is_zero()))
        .ok_or_else(|| Error::Internal("no socle element in Ext^1(Z, tau Z)".into()))?;
    let s = direct_sum(&z.alg, &[tz.clone(), p.module.clone()]);
    let phi = s.injections[0].after(&h).sub(&s.injections[1].after(iota));
    let q = cokernel(&phi);
    let alpha = q.map.after(&s.injections[0]);
    let beta = factor_through_epi(&q.map, &epi.after(&s.projections[1]))
        .ok_or_else(|| Error::Internal("pushout map to Z does not factor".into()))?;
    let maps = vec![alpha, beta];
    let radical_flags = maps
        .iter()
        .map(|m| is_radical_map(m, seed))
        .collect::<Result<Vec<bool>>>()?;
    Ok(AlmostSplitSeq {
        n: 1,
        terms: vec![tz, q.module, z.clone()],
        maps,
        radical_flags,
        simple_pd: None,
    })
}

/// Whether `beta: E -> Z` is right almost split against the given indecomposables:
/// every non-split map `W -> Z` factors through it.
pub fn is_right_almost_split(beta: &ModuleMap, tests: &[Module]) -> bool {
    let (e, z) = (&beta.source, &beta.target);
    tests.iter().all(|w| {
        let through = span_dim(w, z, hom_basis(w, e).into_iter().map(|g| beta.after(&g)));
        through == hom_basis(w, z).len() - usize::from(same_indecomposable(w, z))
    })
}

/// The n-almost split sequence ending at X, transported from the minimal projective
/// resolution of the simple `Gamma`-module at X, with `Gamma = End(⊕C)`.
pub fn n_almost_split(c: &Subcat, x: &Module, n: usize, seed: u64) -> Result<AlmostSplitSeq> {
    let idx = c
        .index_of(x)
        .ok_or_else(|| Error::Precondition("X is not a generator of C".into()))?;
    let gamma = end_algebra(c.gens(), seed)?;
    let fx = simple_module(&gamma.alg, idx);
    let r = min_proj_resolution(&fx, n + 2);
    let pdf = r.length();
    if pdf != Dim::Exact(n + 1) {
        return Err(Error::Precondition(format!(
            "pd of the simple functor at X is {pdf}, not {}",
            n + 1
        )));
    }
    let objs: Vec<_> = r.proj.iter().map(|p| gamma.object(&p.tops)).collect();
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    for i in (1..=n + 1).rev() {
        terms.push(objs[i].module.clone());
        maps.push(gamma.realize(
            &r.proj[i],
            &r.proj[i - 1],
            &r.maps[i],
            &objs[i],
            &objs[i - 1],
        ));
    }
    terms.push(objs[0].module.clone());
    let radical_flags = maps
        .iter()
        .map(|m| is_radical_map(m, seed))
        .collect::<Result<Vec<bool>>>()?;
    Ok(AlmostSplitSeq {
        n,
        terms,
        maps,
        radical_flags,
        simple_pd: Some(pdf),
    })
}
