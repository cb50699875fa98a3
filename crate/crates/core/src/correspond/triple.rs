use crate::algebra::Alg;
use crate::error::{Error, Result};
use crate::homology::Verdict;
use crate::modrep::{
    decompose, direct_sum, dual_regular, injective_module, is_injective, iso, projective_module,
    socle, Module, ProjSum,
};
use crate::orthocat::{
    in_perp_t, is_cotilting, knit_indecomposables, maximal_ortho_enumerative,
    maximal_ortho_homological, ortho_check, CotiltingCert, Enumeration, HomologicalVerdict, Subcat,
};

use super::checks::{
    check_extension_pair, check_superprojective, ExtensionPairCert, SuperprojCert,
};
use super::iso::{functor_iso, yoneda, AlgebraIso};
use super::{end_algebra, EndAlgebra};

/// Caps for the knitting used by the enumerative maximality check.
const KNIT_COUNT: usize = 200;
const KNIT_DIM: usize = 64;

/// `(Λ, M, T)` with T m-cotilting and add M (quasi-)maximal (n-1)-orthogonal in `^⊥T`.
#[derive(Clone, Debug)]
pub struct AuslanderTriple {
    pub lambda: Alg,
    pub m: Subcat,
    pub t: Module,
    pub m_dim: usize,
    pub n: usize,
    pub quasi: bool,
}

/// Outcome of [`verify_triple`].
#[derive(Clone, Debug)]
pub struct TripleCheck {
    pub triple: AuslanderTriple,
    pub verdict: Verdict,
    pub cotilting: CotiltingCert,
    pub in_b: Verdict,
    pub maximality: Verdict,
    pub enumerative: Option<bool>,
    pub homological: Option<HomologicalVerdict>,
    pub refutation: Option<String>,
}

/// Checks T is m-cotilting and the condition on add M: maximality in `^⊥T`,
/// or for quasi triples orthogonality with `Λ + T ∈ add M`.
pub fn verify_triple(
    mods: &[Module],
    t: &Module,
    m: usize,
    n: usize,
    quasi: bool,
    cap: usize,
    seed: u64,
) -> Result<TripleCheck> {
    if n == 0 {
        return Err(Error::Precondition("triples need n >= 1".into()));
    }
    let c = Subcat::new(mods, seed)?;
    let lambda = c.algebra.clone();
    let triple = AuslanderTriple {
        lambda: lambda.clone(),
        m: c.clone(),
        t: t.clone(),
        m_dim: m,
        n,
        quasi,
    };
    let cotilting = is_cotilting(t, m, cap, seed)?;
    let mut refutation = None;
    if cotilting.valid != Verdict::True {
        refutation = Some(format!("T is not certified {m}-cotilting"));
        return Ok(TripleCheck {
            triple,
            verdict: cotilting.valid,
            cotilting,
            in_b: Verdict::Indeterminate,
            maximality: Verdict::Indeterminate,
            enumerative: None,
            homological: None,
            refutation,
        });
    }
    let mut in_b = Verdict::True;
    for g in c.gens() {
        if !in_perp_t(g, t, m, cap)? {
            in_b = Verdict::False;
            refutation = Some(format!(
                "{g} is not in the left perpendicular category of T"
            ));
        }
    }
    let (maximality, enumerative, homological) = if quasi {
        let mut v = Verdict::True;
        if n >= 2 {
            if let Some((x, y, k)) = ortho_check(&c, n - 1).witness {
                v = Verdict::False;
                refutation = Some(format!("Ext^{k}({x}, {y}) != 0"));
            }
        }
        for (what, x) in [
            (
                "Λ",
                ProjSum::new(&lambda, &(0..lambda.n_vertices()).collect::<Vec<_>>()).module,
            ),
            ("T", t.clone()),
        ] {
            if !c.contains(&x)? {
                v = Verdict::False;
                refutation = Some(format!("{what} is not in add M"));
            }
        }
        (v, None, None)
    } else {
        let ind = knit_indecomposables(&lambda, KNIT_COUNT, KNIT_DIM, seed)?;
        let enumerative = if ind.complete {
            let mut in_perp = Vec::new();
            for x in ind.modules {
                if in_perp_t(&x, t, m, cap)? {
                    in_perp.push(x);
                }
            }
            let b = Enumeration {
                modules: in_perp,
                complete: true,
            };
            let r = maximal_ortho_enumerative(&c, n, &b)?;
            if let Some(w) = &r.witness {
                refutation = Some(format!("{w:?}"));
            }
            Some(r.verdict)
        } else {
            None
        };
        let h = maximal_ortho_homological(&c, t, m, n, cap, seed)?;
        let v = match (enumerative, m <= n) {
            (Some(e), true)
                if h.verdict != Verdict::Indeterminate && Verdict::from(e) != h.verdict =>
            {
                return Err(Error::Internal(
                    "enumerative and homological maximality disagree".into(),
                ));
            }
            (Some(e), _) => Verdict::from(e),
            (None, true) => h.verdict,
            (None, false) => Verdict::Indeterminate,
        };
        (v, enumerative, Some(h))
    };
    Ok(TripleCheck {
        triple,
        verdict: cotilting.valid.and(in_b).and(maximality),
        cotilting,
        in_b,
        maximality,
        enumerative,
        homological,
        refutation,
    })
}

/// `α(Λ, M, T) = (End(M), Hom(M, T), DM)` with its certificates.
#[derive(Clone, Debug)]
pub struct AlphaImage {
    pub end: EndAlgebra,
    /// `Hom(M, T)`, projective at the vertices `f`.
    pub p: Module,
    /// `Hom(M, DΛ) ≅ DM`, injective at the vertices `e`.
    pub i: Module,
    pub f: Vec<usize>,
    /// `e[v]` is the vertex of Γ carrying the projective `Λe_v`.
    pub e: Vec<usize>,
    pub m: usize,
    pub n: usize,
    pub pair: ExtensionPairCert,
    pub superprojective: SuperprojCert,
}

impl AlphaImage {
    pub fn gamma(&self) -> &Alg {
        &self.end.alg
    }
}

pub fn alpha(tr: &AuslanderTriple, cap: usize, seed: u64) -> Result<AlphaImage> {
    let lam = &tr.lambda;
    let end = end_algebra(tr.m.gens(), seed)?;
    let gamma = end.alg.clone();
    let e: Vec<usize> = (0..lam.n_vertices())
        .map(|v| {
            tr.m.index_of(&projective_module(lam, v))
                .ok_or_else(|| Error::Precondition("Λ is not in add M".into()))
        })
        .collect::<Result<_>>()?;
    let mut f = Vec::new();
    let mut tops = Vec::new();
    if !tr.t.is_zero() {
        for (x, k) in decompose(&tr.t, seed)?.summands {
            let j =
                tr.m.index_of(&x)
                    .ok_or_else(|| Error::Precondition("T is not in add M".into()))?;
            f.push(j);
            tops.extend(std::iter::repeat_n(j, k));
        }
    }
    f.sort_unstable();
    let p = end.module_over_end(&tr.t);
    if iso(&p, &ProjSum::new(&gamma, &tops).module, seed)?.is_none() {
        return Err(Error::Internal(
            "Hom(M, T) is not the expected projective".into(),
        ));
    }
    let i = end.module_over_end(&dual_regular(lam));
    let injs: Vec<Module> = e.iter().map(|&v| injective_module(&gamma, v)).collect();
    if iso(&i, &direct_sum(&gamma, &injs).module, seed)?.is_none() {
        return Err(Error::Internal(
            "Hom(M, DΛ) is not the expected injective".into(),
        ));
    }
    let pair = check_extension_pair(&p, &i, tr.m_dim, cap, seed)?;
    let mut sorted_e = e.clone();
    sorted_e.sort_unstable();
    let superprojective = check_superprojective(&gamma, &sorted_e, tr.n, cap, seed)?;
    Ok(AlphaImage {
        end,
        p,
        i,
        f,
        e,
        m: tr.m_dim,
        n: tr.n,
        pair,
        superprojective,
    })
}

/// `α^{-1}(Γ, P, I) = (End(Q), Hom(Q, Γ), Hom(Q, P))` with `Q = ν^- I`.
#[derive(Clone, Debug)]
pub struct AlphaInverse {
    pub gamma: Alg,
    /// Vertices of the summands of Q, ascending.
    pub q_vertices: Vec<usize>,
    /// `Λ' = End(Q)` with the functor `Hom(Q, -)`.
    pub lam: EndAlgebra,
    /// `Hom(Q, Γe_j)` for every vertex j of Γ.
    pub m_gens: Vec<Module>,
    pub t: Module,
    pub pair: ExtensionPairCert,
    pub superprojective: SuperprojCert,
    pub check: TripleCheck,
}

/// Vertex of an indecomposable injective, read off its simple socle.
fn injective_vertex(x: &Module, seed: u64) -> Result<usize> {
    let s = socle(x).module;
    let v = match s.dimv.iter().position(|&d| d > 0) {
        Some(v) if s.dim() == 1 && is_injective(x) => v,
        _ => {
            return Err(Error::Precondition(
                "I has a summand that is not an indecomposable injective".into(),
            ))
        }
    };
    if iso(x, &injective_module(&x.alg, v), seed)?.is_none() {
        return Err(Error::Internal(
            "injective not determined by its socle".into(),
        ));
    }
    Ok(v)
}

pub fn alpha_inv(
    gamma: &Alg,
    p: &Module,
    i: &Module,
    m: usize,
    n: usize,
    cap: usize,
    seed: u64,
) -> Result<AlphaInverse> {
    let mut q_vertices = Vec::new();
    for (x, _) in decompose(i, seed)?.summands {
        let v = injective_vertex(&x, seed)?;
        if !q_vertices.contains(&v) {
            q_vertices.push(v);
        }
    }
    q_vertices.sort_unstable();
    let pair = check_extension_pair(p, i, m, cap, seed)?;
    if pair.valid != Verdict::True {
        return Err(Error::Precondition(format!(
            "(P, I) is not a {m}-extension pair"
        )));
    }
    let superprojective = check_superprojective(gamma, &q_vertices, n, cap, seed)?;
    if superprojective.valid != Verdict::True {
        let which = if superprojective.grade_ok != Verdict::True {
            "grade condition"
        } else {
            "add I-coresolution of Γ"
        };
        return Err(Error::Precondition(format!(
            "ν^- I is not {n}-superprojective: {which} fails"
        )));
    }
    let qs: Vec<Module> = q_vertices
        .iter()
        .map(|&v| projective_module(gamma, v))
        .collect();
    let lam = end_algebra(&qs, seed)?;
    let m_gens: Vec<Module> = (0..gamma.n_vertices())
        .map(|j| lam.module_over_end(&projective_module(gamma, j)))
        .collect();
    let t = lam.module_over_end(p);
    let check = verify_triple(&m_gens, &t, m, n, false, cap, seed)?;
    Ok(AlphaInverse {
        gamma: gamma.clone(),
        q_vertices,
        lam,
        m_gens,
        t,
        pair,
        superprojective,
        check,
    })
}

/// Explicit equivalence between a triple and the result of `α^{-1} α`.
#[derive(Clone, Debug)]
pub struct TripleEquivalence {
    /// `Λ -> Λ'`.
    pub algebra: AlgebraIso,
    pub algebra_ok: bool,
    /// `M_j` matches `Hom(Q, Γe_j)` pulled back to Λ.
    pub generators_ok: Vec<bool>,
    pub t_ok: bool,
    pub valid: bool,
}

pub fn triple_roundtrip(
    tr: &AuslanderTriple,
    img: &AlphaImage,
    inv: &AlphaInverse,
    seed: u64,
) -> Result<TripleEquivalence> {
    let lam = &tr.lambda;
    let gamma = img.gamma();
    let (e_lam, y) = yoneda(lam, seed)?;
    let perm: Vec<usize> = img
        .e
        .iter()
        .map(|k| {
            inv.q_vertices
                .iter()
                .position(|q| q == k)
                .ok_or_else(|| Error::Internal("vertex of Q missing".into()))
        })
        .collect::<Result<_>>()?;
    let images: Vec<_> = e_lam.gens.iter().map(|x| img.end.functor(x)).collect();
    let mut iotas = Vec::new();
    for (v, (fx, hs)) in images.iter().enumerate() {
        let k = img.e[v];
        let u = iso(&tr.m.gens()[k], &e_lam.gens[v], seed)?
            .ok_or_else(|| Error::Internal("projective not in M".into()))?;
        let c = hs[k]
            .coords(&u)
            .ok_or_else(|| Error::Internal("iso outside Hom".into()))?;
        iotas.push(ProjSum::new(gamma, &[k]).map_from_generators(fx, &[c]));
    }
    let phi = y.then(&functor_iso(
        &e_lam, &img.end, &inv.lam, &perm, &images, &iotas,
    )?);
    let algebra_ok = phi.verify();
    let mut generators_ok = Vec::new();
    for (j, g) in tr.m.gens().iter().enumerate() {
        let back = phi.pull_back(&inv.m_gens[j])?;
        generators_ok.push(iso(&back, g, seed)?.is_some());
    }
    let t_ok = iso(&phi.pull_back(&inv.t)?, &tr.t, seed)?.is_some();
    let valid = algebra_ok && t_ok && generators_ok.iter().all(|&b| b);
    Ok(TripleEquivalence {
        algebra: phi,
        algebra_ok,
        generators_ok,
        t_ok,
        valid,
    })
}

/// Explicit identification of Γ with the algebra of `α(α^{-1}(Γ, P, I))`.
#[derive(Clone, Debug)]
pub struct GammaEquivalence {
    pub algebra: AlgebraIso,
    pub algebra_ok: bool,
    pub p_ok: bool,
    pub i_ok: bool,
    pub valid: bool,
}

pub fn gamma_roundtrip(
    img: &AlphaImage,
    inv: &AlphaInverse,
    seed: u64,
) -> Result<GammaEquivalence> {
    let gamma = img.gamma();
    let (e_gamma, y) = yoneda(gamma, seed)?;
    let images: Vec<_> = e_gamma.gens.iter().map(|x| inv.lam.functor(x)).collect();
    let gens: Vec<Module> = images.iter().map(|(m, _)| m.clone()).collect();
    let again = end_algebra(&gens, seed)?;
    let iotas: Vec<_> = gens
        .iter()
        .map(crate::modrep::ModuleMap::identity)
        .collect();
    let perm: Vec<usize> = (0..gens.len()).collect();
    let phi = y.then(&functor_iso(
        &e_gamma, &inv.lam, &again, &perm, &images, &iotas,
    )?);
    let algebra_ok = phi.verify();
    let p_ok = iso(
        &phi.pull_back(&again.module_over_end(&inv.t))?,
        &img.p,
        seed,
    )?
    .is_some();
    let di = dual_regular(&inv.lam.alg);
    let i_ok = iso(&phi.pull_back(&again.module_over_end(&di))?, &img.i, seed)?.is_some();
    Ok(GammaEquivalence {
        algebra: phi,
        algebra_ok,
        p_ok,
        i_ok,
        valid: algebra_ok && p_ok && i_ok,
    })
}
