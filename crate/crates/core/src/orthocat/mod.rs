//! Orthogonal subcategories, cotilting certificates, maximality checks,
//! almost split sequences and indecomposable enumeration.

mod almost_split;
mod arquiver;
mod cotilt;
mod enumerate;

use crate::algebra::Alg;
use crate::correspond::end_algebra;
use crate::error::{Error, Result};
use crate::homology::{gldim, id, two_sided_mn, ExtTable, Verdict};
use crate::modrep::{
    decompose, hom_basis, min_proj_resolution, projective_module, AddCat, Dim, Module, ModuleMap,
};

pub use almost_split::{
    almost_split_sequence, is_right_almost_split, n_almost_split, AlmostSplitSeq,
};
pub use arquiver::{ar_quiver, ARQuiver};
pub use cotilt::{connecting_tilting, is_cotilting, tilting_check, CotiltingCert, TiltingCert};
pub use enumerate::{brute_indecomposables, knit_indecomposables, Enumeration};

/// A finite subcategory `add(M_1 + ... + M_r)` of pairwise non-isomorphic indecomposables.
#[derive(Clone, Debug)]
pub struct Subcat {
    pub algebra: Alg,
    pub cat: AddCat,
}

impl Subcat {
    /// Decomposes the inputs and keeps one generator per iso class, in order of first appearance.
    pub fn new(mods: &[Module], seed: u64) -> Result<Subcat> {
        let algebra = mods
            .first()
            .map(|m| m.alg.clone())
            .ok_or_else(|| Error::Input("empty subcategory".into()))?;
        Ok(Subcat {
            algebra,
            cat: AddCat::new(mods, seed)?,
        })
    }

    pub fn gens(&self) -> &[Module] {
        &self.cat.gens
    }

    pub fn len(&self) -> usize {
        self.cat.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cat.is_empty()
    }

    pub fn index_of(&self, x: &Module) -> Option<usize> {
        self.cat.index_of(x)
    }

    pub fn contains(&self, x: &Module) -> Result<bool> {
        self.cat.contains(x)
    }
}

/// Iso-test for indecomposables: some basis map is an isomorphism.
pub(crate) fn same_indecomposable(x: &Module, y: &Module) -> bool {
    x.dimv == y.dimv && hom_basis(x, y).iter().any(ModuleMap::is_iso)
}

/// `ext[i][j][k]` is `dim Ext^{k+1}(mods[i], mods[j])` for `k < l`.
#[derive(Clone, Debug)]
pub struct OrthoTable {
    pub mods: Vec<Module>,
    pub l: usize,
    pub ext: Vec<Vec<Vec<usize>>>,
}

impl OrthoTable {
    pub fn new(mods: &[Module], l: usize) -> OrthoTable {
        let ext = mods
            .iter()
            .map(|x| {
                let r = min_proj_resolution(x, l + 1);
                mods.iter()
                    .map(|y| crate::homology::ext_from_resolution(&r, y, l).dims[1..].to_vec())
                    .collect()
            })
            .collect();
        OrthoTable {
            mods: mods.to_vec(),
            l,
            ext,
        }
    }

    /// First degree `1 <= k <= l` with `Ext^k(mods[i], mods[j]) != 0`.
    pub fn obstruction(&self, i: usize, j: usize) -> Option<usize> {
        self.ext[i][j].iter().position(|&d| d != 0).map(|k| k + 1)
    }

    pub fn orth(&self, i: usize, j: usize) -> bool {
        self.obstruction(i, j).is_none()
    }

    /// First `(x, y, degree)` in `set x set` with nonvanishing Ext.
    pub fn ortho_witness(&self, set: &[usize]) -> Option<(usize, usize, usize)> {
        set.iter()
            .flat_map(|&i| set.iter().map(move |&j| (i, j)))
            .find_map(|(i, j)| self.obstruction(i, j).map(|k| (i, j, k)))
    }

    /// Checks `set = set^perp ∩ U = ^perp set ∩ U` inside the universe `U`.
    pub fn maximality_witness(&self, set: &[usize], universe: &[usize]) -> Option<Refutation> {
        if let Some((x, y, degree)) = self.ortho_witness(set) {
            return Some(Refutation::Ext {
                x: self.mods[x].clone(),
                y: self.mods[y].clone(),
                degree,
            });
        }
        for &z in universe {
            if set.contains(&z) {
                continue;
            }
            if set.iter().all(|&c| self.orth(c, z)) {
                return Some(Refutation::Missing {
                    z: self.mods[z].clone(),
                    side: Side::Right,
                });
            }
            if set.iter().all(|&c| self.orth(z, c)) {
                return Some(Refutation::Missing {
                    z: self.mods[z].clone(),
                    side: Side::Left,
                });
            }
        }
        None
    }

    /// All maximal l-orthogonal subsets of the universe, by exhaustive search.
    pub fn maximal_subsets(&self, universe: &[usize]) -> Vec<Vec<usize>> {
        let k = universe.len();
        assert!(k < 26, "exhaustive subset search over {k} objects");
        let mut out = Vec::new();
        for mask in 0u32..(1 << k) {
            let set: Vec<usize> = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| universe[b])
                .collect();
            if self.maximality_witness(&set, universe).is_none() {
                out.push(set);
            }
        }
        out
    }
}

/// Which side of the orthogonality an object outside C satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `C ⊥ Z`
    Right,
    /// `Z ⊥ C`
    Left,
}

/// Why a subcategory is not (maximal) orthogonal.
#[derive(Clone, Debug)]
pub enum Refutation {
    Ext { x: Module, y: Module, degree: usize },
    Missing { z: Module, side: Side },
    NotInB(Module),
}

/// Orthogonality verdict with its first failing triple.
#[derive(Clone, Debug)]
pub struct OrthoCheck {
    pub verdict: bool,
    pub witness: Option<(Module, Module, usize)>,
}

/// `Ext^i(X, Y) = 0` for all generators X, Y and `0 < i <= l`.
pub fn ortho_check(c: &Subcat, l: usize) -> OrthoCheck {
    let t = OrthoTable::new(c.gens(), l);
    let all: Vec<usize> = (0..c.len()).collect();
    let witness = t
        .ortho_witness(&all)
        .map(|(i, j, k)| (c.gens()[i].clone(), c.gens()[j].clone(), k));
    OrthoCheck {
        verdict: witness.is_none(),
        witness,
    }
}

/// `X ∈ ^⊥T`, checked in degrees up to `m_bound` after certifying `id T <= m_bound`.
pub fn in_perp_t(x: &Module, t: &Module, m_bound: usize, cap: usize) -> Result<bool> {
    if id(t, cap.max(m_bound)).at_most(m_bound) != Some(true) {
        return Err(Error::Precondition(format!(
            "id T is not certified <= {m_bound}"
        )));
    }
    Ok(ExtTable::new(x, t, m_bound).vanishes(1, m_bound))
}

/// Maximality report from the enumerative check.
#[derive(Clone, Debug)]
pub struct MaximalityReport {
    pub verdict: bool,
    pub witness: Option<Refutation>,
}

/// `C` is maximal (n-1)-orthogonal in `B`, checked against a complete list of
/// the indecomposables of B: `C ⊥ C`, and no other indecomposable of B is
/// orthogonal to C from either side.
pub fn maximal_ortho_enumerative(
    c: &Subcat,
    n: usize,
    ind_b: &Enumeration,
) -> Result<MaximalityReport> {
    if !ind_b.complete {
        return Err(Error::IncompleteEnumeration);
    }
    if n == 0 {
        return Err(Error::Precondition(
            "maximal (n-1)-orthogonality needs n >= 1".into(),
        ));
    }
    let mut set = Vec::new();
    for g in c.gens() {
        match ind_b.modules.iter().position(|z| same_indecomposable(g, z)) {
            Some(i) => set.push(i),
            None => {
                return Ok(MaximalityReport {
                    verdict: false,
                    witness: Some(Refutation::NotInB(g.clone())),
                })
            }
        }
    }
    let table = OrthoTable::new(&ind_b.modules, n - 1);
    let universe: Vec<usize> = (0..ind_b.modules.len()).collect();
    let witness = table.maximality_witness(&set, &universe);
    Ok(MaximalityReport {
        verdict: witness.is_none(),
        witness,
    })
}

/// Outcome of the homological maximality criterion.
#[derive(Clone, Debug)]
pub struct HomologicalVerdict {
    pub verdict: Verdict,
    /// For `m > n` only necessary conditions are checked.
    pub necessary_only: bool,
    /// Set when the structural preconditions fail; the verdict is then false.
    pub precondition: Option<String>,
    pub gldim: Option<Dim>,
    pub two_sided: Option<Verdict>,
}

/// Maximality via `Gamma = End(M)`: the two-sided (m+1,n+1)-condition and
/// `gl.dim Gamma <= n+1`, after checking `Λ + T ∈ add C` and `C ⊥_{n-1} C`.
pub fn maximal_ortho_homological(
    c: &Subcat,
    t: &Module,
    m: usize,
    n: usize,
    cap: usize,
    seed: u64,
) -> Result<HomologicalVerdict> {
    let refuse = |why: String| HomologicalVerdict {
        verdict: Verdict::False,
        necessary_only: m > n,
        precondition: Some(why),
        gldim: None,
        two_sided: None,
    };
    let lam = &c.algebra;
    for v in 0..lam.n_vertices() {
        if c.index_of(&projective_module(lam, v)).is_none() {
            return Ok(refuse(format!(
                "projective at vertex {} is not in C",
                lam.vertices[v]
            )));
        }
    }
    if !t.is_zero() {
        for (p, _) in decompose(t, seed)?.summands {
            if c.index_of(&p).is_none() {
                return Ok(refuse("a summand of T is not in C".into()));
            }
        }
    }
    if n >= 2 {
        if let Some((x, y, k)) = ortho_check(c, n - 1).witness {
            return Ok(refuse(format!("Ext^{k}({x}, {y}) != 0")));
        }
    }
    let gamma = end_algebra(c.gens(), seed)?;
    let two = two_sided_mn(&gamma.alg, m + 1, n + 1, cap)?;
    let gl = gldim(&gamma.alg, cap);
    let bound = if m <= n { n + 1 } else { m.max(n + 1) };
    Ok(HomologicalVerdict {
        verdict: two.and(gl.at_most(bound).into()),
        necessary_only: m > n,
        precondition: None,
        gldim: Some(gl),
        two_sided: Some(two),
    })
}
