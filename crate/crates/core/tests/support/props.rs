//! Invariants checked on seeded random modules. Shared by the property tests
//! and the acceptance suite; each check returns a description of the first violation.
#![allow(dead_code)]

use std::sync::Arc;

use auslander::algebra::Alg;
use auslander::corpus::{dual_numbers, linear_a, preprojective_a};
use auslander::correspond::{end_algebra, indecomposable_generators, yoneda, EndAlgebra};
use auslander::exactlin::FieldSpec;
use auslander::homology::{
    costable_hom_dim, ext_dim, ext_dim_injective, stable_hom_dim, tau, tau_inv,
};
use auslander::modrep::{
    decompose, dual, dual_regular, hom_dim, is_indecomposable, projective_module, random_quotient,
    regular_module, Module,
};
use auslander::orthocat::is_cotilting;

pub type Check = Result<(), String>;

const CAP: usize = 8;
/// Highest Ext degree compared.
const TOP: usize = 3;

/// An algebra with a cotilting module `T` and the data for transporting Ext along `Hom(-, T)`.
pub struct Case {
    pub name: &'static str,
    pub alg: Alg,
    pub hereditary: bool,
    pub cotilting: Vec<Transport>,
}

pub struct Transport {
    pub name: &'static str,
    pub t: Module,
    /// `End(T)^op`, built as the endomorphism ring of the summands of `DT` over the opposite algebra.
    pub end: EndAlgebra,
}

impl Transport {
    fn new(name: &'static str, t: Module) -> Transport {
        let cert = is_cotilting(&t, CAP, CAP, 0).expect("cotilting check runs");
        assert!(cert.valid.is_true(), "{name} is not cotilting");
        let gens = indecomposable_generators(&[dual(&t)], 0).expect("summands of DT");
        Transport {
            name,
            t,
            end: end_algebra(&gens, 0).expect("End(T)"),
        }
    }

    /// `Hom_Λ(X, T)` as a module over `End(T)^op`.
    pub fn hom_into(&self, x: &Module) -> Module {
        self.end.module_over_end(&dual(x))
    }
}

pub fn cases() -> Vec<Case> {
    let q = FieldSpec::Rationals;
    let f3 = FieldSpec::PrimeField(3);
    let mk = |name, a: auslander::algebra::FDAlgebra, hereditary, with_regular: bool| {
        let alg: Alg = Arc::new(a);
        let mut cotilting = vec![Transport::new("DA", dual_regular(&alg))];
        if with_regular {
            cotilting.push(Transport::new("A", regular_module(&alg)));
        }
        Case {
            name,
            alg,
            hereditary,
            cotilting,
        }
    };
    vec![
        mk("kA2", linear_a(q, 2), true, true),
        mk("kA3", linear_a(q, 3), true, true),
        mk("kA3/F3", linear_a(f3, 3), true, true),
        mk("kA4", linear_a(q, 4), true, false),
        mk("k[x]/x^2", dual_numbers(q), false, true),
        mk("preproj A2", preprojective_a(q, 2), false, true),
    ]
}

pub fn random_module(c: &Case, seed: u64) -> Module {
    random_quotient(&c.alg, 4, 4, seed)
}

fn ext(x: &Module, y: &Module, i: usize) -> usize {
    ext_dim(x, y, i, CAP).expect("degree within cap")
}

/// Ext computed from a projective resolution of X and from an injective coresolution of Y agree.
pub fn ext_balance(x: &Module, y: &Module) -> Check {
    for i in 0..=TOP {
        let (p, q) = (ext(x, y, i), ext_dim_injective(x, y, i));
        if p != q {
            return Err(format!("Ext^{i}: {p} by projectives, {q} by injectives"));
        }
    }
    Ok(())
}

/// On a hereditary algebra `dim Hom - dim Ext^1` is the Euler form of the dimension vectors.
pub fn euler_form(a: &Alg, x: &Module, y: &Module) -> Check {
    let mut form: i64 = (0..a.n_vertices())
        .map(|v| (x.dimv[v] * y.dimv[v]) as i64)
        .sum();
    for &g in a.generators() {
        let (s, t) = a.peirce[g];
        form -= (x.dimv[s] * y.dimv[t]) as i64;
    }
    let alt = ext(x, y, 0) as i64 - ext(x, y, 1) as i64;
    if ext(x, y, 2) != 0 {
        return Err("Ext^2 is nonzero over a hereditary algebra".into());
    }
    if alt != form {
        return Err(format!("hom - ext = {alt}, Euler form = {form}"));
    }
    Ok(())
}

/// `dim Ext^1(X, Y) = dim D̄Hom(Y, τX) = dim H̲om(τ⁻Y, X)`.
pub fn ar_duality(x: &Module, y: &Module) -> Check {
    let e = ext(x, y, 1);
    let co = costable_hom_dim(y, &tau(x), None);
    let st = stable_hom_dim(&tau_inv(y), x);
    if e != co || e != st {
        return Err(format!(
            "Ext^1 = {e}, costable Hom(Y, τX) = {co}, stable Hom(τ⁻Y, X) = {st}"
        ));
    }
    Ok(())
}

/// The decomposition is an isomorphism onto the sum of its indecomposable summands.
pub fn decompose_reassemble(m: &Module, seed: u64) -> Check {
    let d = decompose(m, seed).map_err(|e| e.to_string())?;
    if !d.verify() {
        return Err("to_sum and from_sum are not mutually inverse".into());
    }
    let total: usize = d.summands.iter().map(|(s, k)| s.dim() * k).sum();
    if total != m.dim() || d.parts.iter().map(Module::dim).sum::<usize>() != m.dim() {
        return Err(format!(
            "summands have total dimension {total}, module {}",
            m.dim()
        ));
    }
    for (s, _) in &d.summands {
        if !is_indecomposable(s, seed).map_err(|e| e.to_string())? {
            return Err("a summand is decomposable".into());
        }
    }
    Ok(())
}

/// `Hom(P_v, M) = e_v M`, the Cartan matrix is read off the Peirce blocks, and `A ≅ End(⊕P_v)`.
pub fn cartan_yoneda(a: &Alg, m: &Module, seed: u64) -> Check {
    let n = a.n_vertices();
    let ps: Vec<Module> = (0..n).map(|v| projective_module(a, v)).collect();
    for v in 0..n {
        let h = hom_dim(&ps[v], m);
        if h != m.dimv[v] {
            return Err(format!("dim Hom(P{v}, M) = {h}, dimv = {}", m.dimv[v]));
        }
        for w in 0..n {
            if hom_dim(&ps[v], &ps[w]) != a.block(w, v).len() {
                return Err(format!("Cartan entry ({v}, {w})"));
            }
        }
    }
    let (_, iso) = yoneda(a, seed).map_err(|e| e.to_string())?;
    if !iso.verify() {
        return Err("Yoneda isomorphism fails".into());
    }
    Ok(())
}

/// `Ext^i(X, T) = 0` for `0 < i <= TOP`.
pub fn in_left_perp(x: &Module, t: &Module) -> bool {
    (1..=TOP).all(|i| ext(x, t, i) == 0)
}

/// For X, Y in `⊥T`: `dim Ext^i_Λ(X, Y) = dim Ext^i_{Λ'}(Hom(Y, T), Hom(X, T))`.
pub fn cotilting_transport(tr: &Transport, x: &Module, y: &Module) -> Check {
    let (fx, fy) = (tr.hom_into(x), tr.hom_into(y));
    for i in 0..=TOP {
        let (l, r) = (ext(x, y, i), ext(&fy, &fx, i));
        if l != r {
            return Err(format!(
                "T = {}: Ext^{i} is {l} over A, {r} over End(T)^op",
                tr.name
            ));
        }
    }
    Ok(())
}

/// All checks on the pair `(x, y)`; `x` also gets the single-module checks.
pub fn check_pair(c: &Case, x: &Module, y: &Module, seed: u64) -> Vec<(&'static str, Check)> {
    let mut out = vec![
        ("ext balance", ext_balance(x, y)),
        ("AR duality", ar_duality(x, y)),
        ("decompose", decompose_reassemble(x, seed)),
        ("cartan/yoneda", cartan_yoneda(&c.alg, x, seed)),
    ];
    if c.hereditary {
        out.push(("euler form", euler_form(&c.alg, x, y)));
    }
    for tr in &c.cotilting {
        if in_left_perp(x, &tr.t) && in_left_perp(y, &tr.t) {
            out.push(("cotilting transport", cotilting_transport(tr, x, y)));
        }
    }
    out
}

/// Runs every check on `per_case` random pairs per algebra; returns (modules tried, failures).
pub fn run_suite(per_case: u64, base_seed: u64) -> (usize, Vec<String>) {
    let mut tried = 0;
    let mut failures = Vec::new();
    for c in cases() {
        for k in 0..per_case {
            let seed = base_seed + 2 * k;
            let (x, y) = (random_module(&c, seed), random_module(&c, seed + 1));
            tried += 2;
            for (what, r) in check_pair(&c, &x, &y, seed) {
                if let Err(e) = r {
                    failures.push(format!("{} seed {seed} {what}: {e}", c.name));
                }
            }
        }
    }
    (tried, failures)
}
