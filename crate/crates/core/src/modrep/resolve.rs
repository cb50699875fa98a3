use std::fmt;

use super::decomp::decompose;
use super::sub::{kernel, radical_of_module};
use super::{direct_sum, dual, dual_map, Module, ModuleMap, ProjSum};
use crate::error::Result;
use crate::exactlin::{Scalar, Subspace};

/// A homological dimension: an exact value, or a lower bound when a cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Exact(usize),
    AtLeast(usize),
}

impl Dim {
    pub fn exact(self) -> Option<usize> {
        match self {
            Dim::Exact(n) => Some(n),
            Dim::AtLeast(_) => None,
        }
    }

    /// Some(true/false) when `self <= k` is decided.
    pub fn at_most(self, k: usize) -> Option<bool> {
        match self {
            Dim::Exact(n) => Some(n <= k),
            Dim::AtLeast(n) if n > k => Some(false),
            Dim::AtLeast(_) => None,
        }
    }

    /// Some(true/false) when `self >= k` is decided.
    pub fn at_least(self, k: usize) -> Option<bool> {
        match self {
            Dim::Exact(n) => Some(n >= k),
            Dim::AtLeast(n) if n >= k => Some(true),
            Dim::AtLeast(_) => None,
        }
    }

    pub fn max(self, o: Dim) -> Dim {
        match (self, o) {
            (Dim::Exact(a), Dim::Exact(b)) => Dim::Exact(a.max(b)),
            (Dim::AtLeast(a), Dim::Exact(b)) | (Dim::Exact(b), Dim::AtLeast(a)) => {
                Dim::AtLeast(a.max(b))
            }
            (Dim::AtLeast(a), Dim::AtLeast(b)) => Dim::AtLeast(a.max(b)),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Exact(n) => write!(f, "{n}"),
            Dim::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Projective,
    Injective,
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M` or injective
/// coresolution `M -> I^0 -> I^1 -> ...`.
///
/// For the projective flavor `maps[0]: P_0 -> M` and `maps[i]: P_i -> P_{i-1}`;
/// for the injective flavor `maps[0]: M -> I^0` and `maps[i]: I^{i-1} -> I^i`.
/// `tops[i]` lists the vertices of the indecomposable summands of term i.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub flavor: Flavor,
    pub module: Module,
    pub terms: Vec<Module>,
    pub tops: Vec<Vec<usize>>,
    pub maps: Vec<ModuleMap>,
    /// Projective flavor only: the terms with their standard bases.
    pub proj: Vec<ProjSum>,
    pub minimal: bool,
    pub truncated_at: Option<usize>,
}

impl Resolution {
    /// Projective (injective) dimension read off the resolution.
    pub fn length(&self) -> Dim {
        match self.truncated_at {
            Some(c) => Dim::AtLeast(c + 1),
            None => Dim::Exact(self.terms.len().saturating_sub(1)),
        }
    }

    /// Checks consecutive composites vanish and exactness by rank accounting.
    pub fn is_exact(&self) -> bool {
        let n = self.maps.len();
        for i in 0..n.saturating_sub(1) {
            let (first, second) = match self.flavor {
                Flavor::Projective => (&self.maps[i + 1], &self.maps[i]),
                Flavor::Injective => (&self.maps[i], &self.maps[i + 1]),
            };
            if !second.after(first).is_zero() {
                return false;
            }
            // rank(first) + rank(second) = dim of the middle term
            if first.rank() + second.rank() != first.target.dim() {
                return false;
            }
        }
        match (self.flavor, self.maps.first()) {
            (Flavor::Projective, Some(e)) => {
                e.is_surjective()
                    && (self.truncated_at.is_some() || self.maps.last().unwrap().is_injective())
            }
            (Flavor::Injective, Some(e)) => {
                e.is_injective()
                    && (self.truncated_at.is_some() || self.maps.last().unwrap().is_surjective())
            }
            (_, None) => self.module.is_zero(),
        }
    }
}

/// Vertices of the summands of the projective cover, with lifts of a top basis.
fn top_lifts(m: &Module) -> (Vec<usize>, Vec<Vec<Scalar>>) {
    let f = m.field();
    let rad = radical_of_module(m);
    let mut tops = Vec::new();
    let mut lifts = Vec::new();
    for v in 0..m.dimv.len() {
        let span = Subspace::spanned_by(f, m.dimv[v], &rad.map.blocks[v].cols_vec());
        for i in span.complement_indices() {
            let mut e = vec![f.zero(); m.dimv[v]];
            e[i] = f.one();
            tops.push(v);
            lifts.push(e);
        }
    }
    (tops, lifts)
}

/// Minimal projective cover `P -> M`.
pub fn projective_cover(m: &Module) -> (ProjSum, ModuleMap) {
    let (tops, lifts) = top_lifts(m);
    let p = ProjSum::new(&m.alg, &tops);
    let epi = p.map_from_generators(m, &lifts);
    (p, epi)
}

/// Minimal injective envelope `M -> I`, dual to the projective cover of DM.
pub fn injective_envelope(m: &Module) -> (Module, ModuleMap) {
    let (_, epi) = projective_cover(&dual(m));
    let mono = dual_map(&epi);
    let i = mono.target.clone();
    (
        i.clone(),
        ModuleMap {
            source: m.clone(),
            target: i,
            blocks: mono.blocks,
        },
    )
}

pub fn is_projective(m: &Module) -> bool {
    let (tops, _) = top_lifts(m);
    let total: usize = tops
        .iter()
        .map(|&v| (0..m.alg.dim()).filter(|&b| m.alg.source(b) == v).count())
        .sum();
    total == m.dim()
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&dual(m))
}

/// Minimal projective resolution with terms `P_0 .. P_cap` at most.
pub fn min_proj_resolution(m: &Module, cap: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut tops = Vec::new();
    let mut maps = Vec::new();
    let mut proj = Vec::new();
    let mut truncated_at = None;
    if !m.is_zero() {
        let (p, epi) = projective_cover(m);
        let mut k = kernel(&epi);
        terms.push(p.module.clone());
        tops.push(p.tops.clone());
        maps.push(epi);
        proj.push(p);
        let mut i = 1;
        while !k.module.is_zero() {
            if i > cap {
                truncated_at = Some(cap);
                break;
            }
            let (p, epi) = projective_cover(&k.module);
            terms.push(p.module.clone());
            tops.push(p.tops.clone());
            maps.push(k.map.after(&epi));
            proj.push(p);
            k = kernel(&epi);
            i += 1;
        }
    }
    Resolution {
        flavor: Flavor::Projective,
        module: m.clone(),
        terms,
        tops,
        maps,
        proj,
        minimal: true,
        truncated_at,
    }
}

/// Minimal injective coresolution, dual to the projective resolution of DM over the opposite algebra.
pub fn min_inj_coresolution(m: &Module, cap: usize) -> Resolution {
    let r = min_proj_resolution(&dual(m), cap);
    let terms: Vec<Module> = r.terms.iter().map(dual).collect();
    let mut maps = Vec::with_capacity(r.maps.len());
    for (i, f) in r.maps.iter().enumerate() {
        let d = dual_map(f);
        let source = if i == 0 {
            m.clone()
        } else {
            terms[i - 1].clone()
        };
        maps.push(ModuleMap {
            source,
            target: terms[i].clone(),
            blocks: d.blocks,
        });
    }
    Resolution {
        flavor: Flavor::Injective,
        module: m.clone(),
        terms,
        tops: r.tops,
        maps,
        proj: Vec::new(),
        minimal: true,
        truncated_at: r.truncated_at,
    }
}

/// Drops projective indecomposable summands.
pub fn stabilize(m: &Module, seed: u64) -> Result<Module> {
    if m.is_zero() || !has_projective_summand_candidate(m) {
        return Ok(m.clone());
    }
    let d = decompose(m, seed)?;
    let keep: Vec<Module> = d
        .parts
        .iter()
        .filter(|p| !is_projective(p))
        .cloned()
        .collect();
    Ok(if keep.len() == d.parts.len() {
        m.clone()
    } else {
        direct_sum(&m.alg, &keep).module
    })
}

/// Drops injective indecomposable summands.
pub fn stabilize_injective(m: &Module, seed: u64) -> Result<Module> {
    Ok(dual(&stabilize(&dual(m), seed)?))
}

/// A projective summand `P_v` forces `dim e_w M >= dim e_w P_v` for all w; cheap filter.
fn has_projective_summand_candidate(m: &Module) -> bool {
    let a = &m.alg;
    (0..a.n_vertices()).any(|v| (0..a.n_vertices()).all(|w| a.block(v, w).len() <= m.dimv[w]))
}

/// k-th syzygy with projective summands removed.
pub fn syzygy(m: &Module, k: usize, seed: u64) -> Result<Module> {
    let mut x = stabilize(m, seed)?;
    for _ in 0..k {
        if x.is_zero() {
            break;
        }
        let (_, epi) = projective_cover(&x);
        x = stabilize(&kernel(&epi).module, seed)?;
    }
    Ok(x)
}

/// k-th cosyzygy with injective summands removed.
pub fn cosyzygy(m: &Module, k: usize, seed: u64) -> Result<Module> {
    Ok(dual(&syzygy(&dual(m), k, seed)?))
}
