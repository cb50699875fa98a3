use super::decomp::{decompose, end_radical};
use super::hom::hom_basis;
use super::sub::{direct_sum, kernel, map_from_sum, map_into_sum, DirectSum};
use super::{Dim, Module, ModuleMap};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, Subspace};

/// An additive category `add(M_1 + ... + M_r)` given by pairwise non-isomorphic
/// indecomposables with local endomorphism rings, with the hom data cached.
#[derive(Clone, Debug)]
pub struct AddCat {
    pub gens: Vec<Module>,
    /// `homs[i][j]` is a basis of Hom(M_i, M_j).
    pub homs: Vec<Vec<Vec<ModuleMap>>>,
    rad_end: Vec<Vec<ModuleMap>>,
    seed: u64,
}

impl AddCat {
    /// Decomposes the given modules and keeps one representative per iso class.
    pub fn new(mods: &[Module], seed: u64) -> Result<AddCat> {
        let mut gens: Vec<Module> = Vec::new();
        for m in mods {
            if m.is_zero() {
                continue;
            }
            for (part, _) in decompose(m, seed)?.summands {
                if !gens.iter().any(|g| {
                    g.dimv == part.dimv && hom_basis(&part, g).iter().any(ModuleMap::is_iso)
                }) {
                    gens.push(part);
                }
            }
        }
        AddCat::from_indecomposables(gens, seed)
    }

    /// Certifies each generator has a local endomorphism ring.
    pub fn from_indecomposables(gens: Vec<Module>, seed: u64) -> Result<AddCat> {
        let mut rad_end = Vec::new();
        for g in &gens {
            match end_radical(g, seed) {
                Some(r) => rad_end.push(r),
                None => {
                    return Err(Error::Inconclusive(format!(
                        "generator {g} is not certified indecomposable"
                    )))
                }
            }
        }
        let homs = gens
            .iter()
            .map(|x| gens.iter().map(|y| hom_basis(x, y)).collect())
            .collect();
        Ok(AddCat {
            gens,
            homs,
            rad_end,
            seed,
        })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Basis of the radical maps `M_i -> M_j`.
    pub fn rad(&self, i: usize, j: usize) -> &[ModuleMap] {
        if i == j {
            &self.rad_end[i]
        } else {
            &self.homs[i][j]
        }
    }

    /// Index of the generator isomorphic to the indecomposable `x`.
    pub fn index_of(&self, x: &Module) -> Option<usize> {
        self.gens
            .iter()
            .position(|g| g.dimv == x.dimv && hom_basis(x, g).iter().any(ModuleMap::is_iso))
    }

    /// Whether `x` lies in the additive closure.
    pub fn contains(&self, x: &Module) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let d = decompose(x, self.seed)?;
        Ok(d.summands.iter().all(|(p, _)| self.index_of(p).is_some()))
    }
}

/// A minimal approximation: `slots[k]` is the generator index of summand k of `sum`.
#[derive(Clone, Debug)]
pub struct Approx {
    pub sum: DirectSum,
    pub slots: Vec<usize>,
    pub map: ModuleMap,
}

/// Keeps the maps in `cand` whose classes span `cand` modulo `rad_span`.
fn complement(cand: Vec<ModuleMap>, rad_span: Vec<Vec<Scalar>>, len: usize) -> Vec<ModuleMap> {
    let Some(first) = cand.first() else {
        return Vec::new();
    };
    let mut span = Subspace::new(first.source.field(), len);
    for v in rad_span {
        span.insert(v);
    }
    cand.into_iter()
        .filter(|h| span.insert(h.flatten()))
        .collect()
}

fn flat_len(x: &Module, y: &Module) -> usize {
    x.dimv.iter().zip(&y.dimv).map(|(a, b)| a * b).sum()
}

/// Minimal right add(C)-approximation `C_X -> X`.
pub fn right_approx(c: &AddCat, x: &Module) -> Approx {
    let hs: Vec<Vec<ModuleMap>> = c.gens.iter().map(|g| hom_basis(g, x)).collect();
    let mut parts = Vec::new();
    let mut slots = Vec::new();
    let mut comps = Vec::new();
    for i in 0..c.len() {
        let mut rad_span = Vec::new();
        for j in 0..c.len() {
            for h in &hs[j] {
                for r in c.rad(i, j) {
                    rad_span.push(h.after(r).flatten());
                }
            }
        }
        for h in complement(hs[i].clone(), rad_span, flat_len(&c.gens[i], x)) {
            parts.push(c.gens[i].clone());
            slots.push(i);
            comps.push(h);
        }
    }
    let sum = direct_sum(&x.alg, &parts);
    let map = map_from_sum(&comps, &sum, x);
    Approx { sum, slots, map }
}

/// Minimal left add(C)-approximation `X -> C^X`.
pub fn left_approx(x: &Module, c: &AddCat) -> Approx {
    let gs: Vec<Vec<ModuleMap>> = c.gens.iter().map(|g| hom_basis(x, g)).collect();
    let mut parts = Vec::new();
    let mut slots = Vec::new();
    let mut comps = Vec::new();
    for i in 0..c.len() {
        let mut rad_span = Vec::new();
        for j in 0..c.len() {
            for g in &gs[j] {
                for r in c.rad(j, i) {
                    rad_span.push(r.after(g).flatten());
                }
            }
        }
        for g in complement(gs[i].clone(), rad_span, flat_len(x, &c.gens[i])) {
            parts.push(c.gens[i].clone());
            slots.push(i);
            comps.push(g);
        }
    }
    let sum = direct_sum(&x.alg, &parts);
    let map = map_into_sum(x, &comps, &sum);
    Approx { sum, slots, map }
}

/// Minimal right add(M)-approximation of `x`.
pub fn right_approximation(add_m: &[Module], x: &Module, seed: u64) -> Result<ModuleMap> {
    Ok(right_approx(&AddCat::new(add_m, seed)?, x).map)
}

/// Minimal left add(M)-approximation of `x`.
pub fn left_approximation(x: &Module, add_m: &[Module], seed: u64) -> Result<ModuleMap> {
    Ok(left_approx(x, &AddCat::new(add_m, seed)?).map)
}

/// Whether Hom(M_i, f) is onto Hom(M_i, target) for every generator.
pub fn is_right_approximation(c: &AddCat, f: &ModuleMap) -> bool {
    c.gens.iter().all(|g| {
        let full = hom_basis(g, &f.target).len();
        let imgs: Vec<Vec<Scalar>> = hom_basis(g, &f.source)
            .iter()
            .map(|h| f.after(h).flatten())
            .collect();
        Subspace::spanned_by(f.source.field(), flat_len(g, &f.target), &imgs).dim() == full
    })
}

/// Whether Hom(f, M_i) is onto Hom(source, M_i) for every generator.
pub fn is_left_approximation(c: &AddCat, f: &ModuleMap) -> bool {
    c.gens.iter().all(|g| {
        let full = hom_basis(&f.source, g).len();
        let imgs: Vec<Vec<Scalar>> = hom_basis(&f.target, g)
            .iter()
            .map(|h| h.after(f).flatten())
            .collect();
        Subspace::spanned_by(f.source.field(), flat_len(&f.source, g), &imgs).dim() == full
    })
}

/// Length of the right add(C)-resolution of `x` built from minimal approximations.
///
/// Exactness is required only after applying Hom(C, -); it is checked by
/// dimension counts at every step.
pub fn resolution_dim(c_list: &[Module], x: &Module, cap: usize, seed: u64) -> Result<Dim> {
    let c = AddCat::new(c_list, seed)?;
    resolution_dim_in(&c, x, cap)
}

pub fn resolution_dim_in(c: &AddCat, x: &Module, cap: usize) -> Result<Dim> {
    let mut k = x.clone();
    for step in 0..=cap {
        if k.is_zero() {
            return Ok(Dim::Exact(step.saturating_sub(1)));
        }
        let a = right_approx(c, &k);
        let next = kernel(&a.map).module;
        for g in &c.gens {
            let lhs = hom_basis(g, &a.sum.module).len();
            let rhs = hom_basis(g, &k).len() + hom_basis(g, &next).len();
            if lhs != rhs {
                return Err(Error::Internal(
                    "approximation sequence is not Hom(C,-)-exact".into(),
                ));
            }
        }
        k = next;
    }
    Ok(if k.is_zero() {
        Dim::Exact(cap)
    } else {
        Dim::AtLeast(cap + 1)
    })
}
