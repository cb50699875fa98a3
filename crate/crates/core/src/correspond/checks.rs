use crate::algebra::{op, Alg};
use crate::error::{Error, Result};
use crate::homology::{
    ext_from_resolution, gldim, grade, id, pd, transpose, two_sided_mn, Verdict,
};
use crate::modrep::{
    cokernel, dual, end_radical, injective_module, kernel, left_approx, min_proj_resolution,
    radical_of_module, regular_module, right_approx, simple_module, syzygy, AddCat, Dim, Module,
};

/// Certificate for `(P, I)` being an m-extension pair.
#[derive(Clone, Debug)]
pub struct ExtensionPairCert {
    /// `0 -> P -> I_0 -> I_1 -> ...` built from minimal left add(I)-approximations.
    pub coresolution: Vec<Module>,
    pub coresolution_ok: bool,
    /// `... -> P_1 -> P_0 -> I -> 0` built from minimal right add(P)-approximations.
    pub resolution: Vec<Module>,
    pub resolution_ok: bool,
    pub id_p: Dim,
    pub id_di: Dim,
    pub valid: Verdict,
}

/// Iterated mono left approximations; true when the cokernel vanishes within `steps`.
fn left_chain(start: &Module, c: &AddCat, steps: usize) -> (Vec<Module>, bool) {
    let mut k = start.clone();
    let mut terms = Vec::new();
    for _ in 0..steps {
        if k.is_zero() {
            break;
        }
        let a = left_approx(&k, c);
        if !a.map.is_injective() {
            return (terms, false);
        }
        terms.push(a.sum.module.clone());
        k = cokernel(&a.map).module;
    }
    (terms, k.is_zero())
}

/// Iterated epi right approximations; true when the kernel vanishes within `steps`.
fn right_chain(c: &AddCat, start: &Module, steps: usize) -> (Vec<Module>, bool) {
    let mut k = start.clone();
    let mut terms = Vec::new();
    for _ in 0..steps {
        if k.is_zero() {
            break;
        }
        let a = right_approx(c, &k);
        if !a.map.is_surjective() {
            return (terms, false);
        }
        terms.push(a.sum.module.clone());
        k = kernel(&a.map).module;
    }
    (terms, k.is_zero())
}

/// Both approximation sequences have at most m+1 terms, `id P <= m` and `id DI <= m`.
pub fn check_extension_pair(
    p: &Module,
    i: &Module,
    m: usize,
    cap: usize,
    seed: u64,
) -> Result<ExtensionPairCert> {
    let add_i = AddCat::new(std::slice::from_ref(i), seed)?;
    let add_p = AddCat::new(std::slice::from_ref(p), seed)?;
    let (coresolution, coresolution_ok) = left_chain(p, &add_i, m + 1);
    let (resolution, resolution_ok) = right_chain(&add_p, i, m + 1);
    let id_p = id(p, cap.max(m));
    let id_di = id(&dual(i), cap.max(m));
    let valid = Verdict::from(coresolution_ok)
        .and(resolution_ok.into())
        .and(id_p.at_most(m).into())
        .and(id_di.at_most(m).into());
    Ok(ExtensionPairCert {
        coresolution,
        coresolution_ok,
        resolution,
        resolution_ok,
        id_p,
        id_di,
        valid,
    })
}

/// Certificate for the projective `Q = Γe` being n-superprojective.
#[derive(Clone, Debug)]
pub struct SuperprojCert {
    /// Grades of the simples of `Γ/ΓeΓ`.
    pub grades: Vec<(usize, Dim)>,
    pub grade_ok: Verdict,
    /// `0 -> Γ -> I_0 -> ... -> I_n` in add νQ.
    pub coresolution: Vec<Module>,
    pub coresolution_ok: bool,
    /// The two conditions agree.
    pub agree: bool,
    pub valid: Verdict,
}

/// Grade condition on the simples outside e, and an add(νQ)-coresolution of Γ with n+1 mono steps.
pub fn check_superprojective(
    gamma: &Alg,
    e: &[usize],
    n: usize,
    cap: usize,
    seed: u64,
) -> Result<SuperprojCert> {
    let grades: Vec<(usize, Dim)> = (0..gamma.n_vertices())
        .filter(|v| !e.contains(v))
        .map(|v| (v, grade(&simple_module(gamma, v), cap.max(n + 1))))
        .collect();
    let grade_ok = Verdict::all(grades.iter().map(|(_, g)| Verdict::from(g.at_least(n + 1))));
    let injs: Vec<Module> = e.iter().map(|&v| injective_module(gamma, v)).collect();
    let (coresolution, coresolution_ok) = if injs.is_empty() {
        (Vec::new(), false)
    } else {
        let c = AddCat::new(&injs, seed)?;
        let mut k = regular_module(gamma);
        let mut terms = Vec::new();
        let mut ok = true;
        for _ in 0..=n {
            if k.is_zero() {
                break;
            }
            let a = left_approx(&k, &c);
            if !a.map.is_injective() {
                ok = false;
                break;
            }
            terms.push(a.sum.module.clone());
            k = cokernel(&a.map).module;
        }
        (terms, ok)
    };
    let agree = grade_ok == Verdict::Indeterminate || grade_ok.is_true() == coresolution_ok;
    let valid = grade_ok.and(coresolution_ok.into());
    Ok(SuperprojCert {
        grades,
        grade_ok,
        coresolution,
        coresolution_ok,
        agree,
        valid,
    })
}

/// The two-sided (m+1,n+1)-condition together with `gl.dim Γ <= n+1` (dropped when `quasi`).
pub fn check_auslander_algebra(
    gamma: &Alg,
    m: usize,
    n: usize,
    quasi: bool,
    cap: usize,
) -> Result<Verdict> {
    if m > n {
        return Err(Error::Precondition(format!("m = {m} exceeds n = {n}")));
    }
    let two = two_sided_mn(gamma, m + 1, n + 1, cap)?;
    if quasi {
        return Ok(two);
    }
    Ok(two.and(gldim(gamma, cap).at_most(n + 1).into()))
}

/// Ext data of one simple of projective dimension n+1.
#[derive(Clone, Debug)]
pub struct SimpleExt {
    pub vertex: usize,
    /// `dim Ext^i(S, Γ)` for `i = 0..=n+1`.
    pub ext_dims: Vec<usize>,
    /// `Ext^{n+1}(S, Γ)` is a simple right module.
    pub top_simple: bool,
    /// Applying `Ext^{n+1}(-, Γ)` twice returns S.
    pub duality: bool,
}

#[derive(Clone, Debug)]
pub struct Condition471 {
    pub lhs: Verdict,
    pub rhs: Verdict,
    pub simples: Vec<SimpleExt>,
}

/// `Ext^{n+1}(X, A)` for X of projective dimension n+1, as a module over the opposite algebra.
fn top_ext(x: &Module, n: usize, seed: u64) -> Result<Module> {
    Ok(transpose(&syzygy(x, n, seed)?))
}

/// Semisimple with local endomorphism ring.
fn is_simple(x: &Module, seed: u64) -> bool {
    !x.is_zero() && radical_of_module(x).module.is_zero() && end_radical(x, seed).is_some()
}

/// Compares the two-sided (n+1,n+1)-condition with the Ext-behaviour of the simples
/// of projective dimension n+1, for Γ of global dimension n+1.
pub fn condition_4_7_1(gamma: &Alg, n: usize, cap: usize, seed: u64) -> Result<Condition471> {
    let gl = gldim(gamma, cap.max(n + 2));
    if gl != Dim::Exact(n + 1) {
        return Err(Error::Precondition(format!(
            "gl.dim is {gl}, not {}",
            n + 1
        )));
    }
    let lhs = two_sided_mn(gamma, n + 1, n + 1, cap)?;
    let reg = regular_module(gamma);
    let mut simples = Vec::new();
    for v in 0..gamma.n_vertices() {
        let s = simple_module(gamma, v);
        if pd(&s, n + 2) != Dim::Exact(n + 1) {
            continue;
        }
        let r = min_proj_resolution(&s, n + 1);
        let ext_dims = ext_from_resolution(&r, &reg, n + 1).dims;
        let e = top_ext(&s, n, seed)?;
        let top_simple = is_simple(&e, seed);
        let duality = top_simple && {
            let back = top_ext(&e, n, seed)?;
            std::sync::Arc::ptr_eq(&back.alg, &op(&e.alg))
                && crate::modrep::iso(&back, &s, seed)?.is_some()
        };
        simples.push(SimpleExt {
            vertex: v,
            ext_dims,
            top_simple,
            duality,
        });
    }
    let rhs = Verdict::from(
        simples
            .iter()
            .all(|x| x.ext_dims[..=n].iter().all(|&d| d == 0) && x.top_simple),
    );
    Ok(Condition471 { lhs, rhs, simples })
}
