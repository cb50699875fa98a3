use super::Subcat;
use crate::algebra::Alg;
use crate::correspond::{end_algebra, EndAlgebra};
use crate::error::Result;
use crate::homology::{id, pd, ExtTable, Verdict};
use crate::modrep::{
    cokernel, direct_sum, dual_regular, kernel, left_approx, regular_module, right_approx, AddCat,
    Dim, Module,
};

/// Certificate for `T` being m-cotilting.
#[derive(Clone, Debug)]
pub struct CotiltingCert {
    pub t: Module,
    pub m: usize,
    /// `Ext^i(T, T) = 0` for `0 < i <= cap`.
    pub self_ortho: bool,
    pub id_bound: Dim,
    pub id_ok: Verdict,
    /// Terms `T_0, T_1, ...` of the add T-resolution `... -> T_1 -> T_0 -> DΛ -> 0`.
    pub coresolution_of_injectives: Vec<Module>,
    pub coresolution_ok: bool,
    pub valid: Verdict,
}

/// Checks self-orthogonality, `id T <= m`, and a resolution
/// `0 -> T_m -> ... -> T_0 -> DΛ -> 0` by minimal right add T-approximations.
pub fn is_cotilting(t: &Module, m: usize, cap: usize, seed: u64) -> Result<CotiltingCert> {
    let self_ortho = ExtTable::new(t, t, cap).vanishes(1, cap);
    let id_bound = id(t, cap.max(m));
    let id_ok = Verdict::from(id_bound.at_most(m));
    let c = AddCat::new(std::slice::from_ref(t), seed)?;
    let mut k = dual_regular(&t.alg);
    let mut terms = Vec::new();
    for _ in 0..=m {
        if k.is_zero() {
            break;
        }
        let a = right_approx(&c, &k);
        if !a.map.is_surjective() {
            break;
        }
        terms.push(a.sum.module.clone());
        k = kernel(&a.map).module;
    }
    let ok = k.is_zero();
    let valid = Verdict::from(self_ortho).and(id_ok).and(ok.into());
    Ok(CotiltingCert {
        t: t.clone(),
        m,
        self_ortho,
        id_bound,
        id_ok,
        coresolution_of_injectives: terms,
        coresolution_ok: ok,
        valid,
    })
}

/// The Γ1-module `Hom(M1, M2)` with `Γ1 = End(M1)`.
pub fn connecting_tilting(m1: &Subcat, m2: &Subcat, seed: u64) -> Result<(EndAlgebra, Module)> {
    let g1 = end_algebra(m1.gens(), seed)?;
    let sum = direct_sum(&m2.algebra, m2.gens()).module;
    let u = g1.module_over_end(&sum);
    Ok((g1, u))
}

/// Certificate for `U` being tilting with `pd U <= t`.
#[derive(Clone, Debug)]
pub struct TiltingCert {
    pub pd: Dim,
    pub self_ortho: bool,
    /// Terms `U^0, U^1, ...` of `0 -> Γ -> U^0 -> U^1 -> ...`.
    pub coresolution: Vec<Module>,
    pub coresolution_ok: bool,
    pub valid: Verdict,
}

/// `pd U <= t`, `Ext^{>0}(U, U) = 0`, and `0 -> Γ -> U^0 -> ... -> U^t -> 0` in add U
/// built from minimal left approximations.
pub fn tilting_check(
    gamma: &Alg,
    u: &Module,
    t: usize,
    cap: usize,
    seed: u64,
) -> Result<TiltingCert> {
    let p = pd(u, cap.max(t));
    let self_ortho = ExtTable::new(u, u, cap).vanishes(1, cap);
    let c = AddCat::new(std::slice::from_ref(u), seed)?;
    let mut k = regular_module(gamma);
    let mut terms = Vec::new();
    for _ in 0..=t {
        if k.is_zero() {
            break;
        }
        let a = left_approx(&k, &c);
        if !a.map.is_injective() {
            break;
        }
        terms.push(a.sum.module.clone());
        k = cokernel(&a.map).module;
    }
    let ok = k.is_zero();
    let valid = Verdict::from(p.at_most(t))
        .and(self_ortho.into())
        .and(ok.into());
    Ok(TiltingCert {
        pd: p,
        self_ortho,
        coresolution: terms,
        coresolution_ok: ok,
        valid,
    })
}
