use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_basis, HomSpace};
use super::sub::{closed_submodule, direct_sum, socle, top, DirectSum};
use super::{Module, ModuleMap};
use crate::error::{Error, Result};
use crate::exactlin::poly::{minimal_polynomial, roots_in_field, Poly};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};

/// Random endomorphisms tried per block before giving up.
const RETRY_BUDGET: usize = 64;

/// Krull–Schmidt decomposition with an explicit isomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Module,
    /// Iso-class representatives with multiplicities.
    pub summands: Vec<(Module, usize)>,
    /// The indecomposable summands as found, each a submodule of `module`.
    pub parts: Vec<Module>,
    /// Class index of each part.
    pub class_of: Vec<usize>,
    /// `module -> sum of representatives` (class by class, with multiplicity).
    pub to_sum: ModuleMap,
    /// Inverse of `to_sum`.
    pub from_sum: ModuleMap,
}

impl Decomposition {
    /// Both composites of the iso pair are identities.
    pub fn verify(&self) -> bool {
        self.from_sum
            .after(&self.to_sum)
            .blocks
            .iter()
            .all(Matrix::is_identity)
            && self
                .to_sum
                .after(&self.from_sum)
                .blocks
                .iter()
                .all(Matrix::is_identity)
    }

    pub fn is_indecomposable(&self) -> bool {
        self.parts.len() == 1
    }

    /// The target of `to_sum` with its structural maps, one slot per indecomposable summand.
    pub fn sum(&self) -> DirectSum {
        let parts: Vec<Module> = self
            .summands
            .iter()
            .flat_map(|(r, k)| std::iter::repeat_n(r.clone(), *k))
            .collect();
        direct_sum(&self.module.alg, &parts)
    }
}

/// Whether `f` lies in the radical: no component between indecomposable summands is an isomorphism.
pub fn is_radical_map(f: &ModuleMap, seed: u64) -> Result<bool> {
    if f.source.is_zero() || f.target.is_zero() {
        return Ok(true);
    }
    let (da, db) = (decompose(&f.source, seed)?, decompose(&f.target, seed)?);
    let (sa, sb) = (da.sum(), db.sum());
    let from_a = ModuleMap {
        source: sa.module.clone(),
        target: f.source.clone(),
        blocks: da.from_sum.blocks.clone(),
    };
    let to_b = ModuleMap {
        source: f.target.clone(),
        target: sb.module.clone(),
        blocks: db.to_sum.blocks.clone(),
    };
    let g = to_b.after(f).after(&from_a);
    for inj in &sa.injections {
        for pr in &sb.projections {
            if inj.source.dimv == pr.target.dimv && pr.after(&g).after(inj).is_iso() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_scalar(f: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match f {
        FieldSpec::Rationals => f.int(rng.gen_range(-3..=3)),
        FieldSpec::PrimeField(p) => f.int(rng.gen_range(0..p as i64)),
    }
}

/// Simple top or simple socle certifies indecomposability without End(M).
fn quick_indecomposable(m: &Module) -> bool {
    m.dim() == 1 || top(m).module.dim() == 1 || socle(m).module.dim() == 1
}

/// Eigenvalue of a map known to have a single one, with nilpotency of `f - lambda` checked.
fn single_eigenvalue(f: &ModuleMap, rng: &mut ChaCha8Rng) -> Option<Scalar> {
    let field = f.source.field();
    let n = f.source.dim();
    let p = field.characteristic() as usize;
    let lam = if p == 0 || !n.is_multiple_of(p) {
        let tr = f
            .blocks
            .iter()
            .fold(field.zero(), |acc, b| &acc + &b.trace());
        &tr / &field.int(n as i64)
    } else {
        let roots = roots_in_field(&minimal_polynomial(&f.matrix()), rng);
        if roots.len() != 1 {
            return None;
        }
        roots[0].clone()
    };
    let shifted = f.sub(&ModuleMap::identity(&f.source).scale(&lam));
    shifted
        .blocks
        .iter()
        .all(|b| b.pow(b.rows).is_zero())
        .then_some(lam)
}

/// Radical of End(M) when End(M) is local with residue field k, else None.
///
/// Certifies End(M) = k·1 + N with N a nilpotent two-sided ideal spanned by
/// `b - lambda_b` over the hom basis.
pub fn end_radical(m: &Module, seed: u64) -> Option<Vec<ModuleMap>> {
    let end = HomSpace::new(m, m);
    local_radical(&end, &mut rng_for(seed))
}

fn local_radical(end: &HomSpace, rng: &mut ChaCha8Rng) -> Option<Vec<ModuleMap>> {
    let m = &end.source;
    if m.is_zero() {
        return None;
    }
    let f = m.field();
    let flat_len = end.basis.first().map(|b| b.flatten().len()).unwrap_or(0);
    let mut span = Subspace::new(f, flat_len);
    let mut nil = Vec::new();
    for b in &end.basis {
        let lam = single_eigenvalue(b, rng)?;
        let n = b.sub(&ModuleMap::identity(m).scale(&lam));
        if span.insert(n.flatten()) {
            nil.push(n);
        }
    }
    if nil.len() + 1 != end.dim() {
        return None;
    }
    // N must be closed under products and nilpotent: N ⊇ N^2 ⊇ ... reaches 0
    let mut power = nil.clone();
    while !power.is_empty() {
        let mut next = Subspace::new(f, flat_len);
        let mut next_maps = Vec::new();
        for p in &power {
            for q in &nil {
                let pq = p.after(q);
                let v = pq.flatten();
                if !span.contains(&v) {
                    return None;
                }
                if next.insert(v) {
                    next_maps.push(pq);
                }
            }
        }
        if next_maps.len() >= power.len() {
            return None;
        }
        power = next_maps;
    }
    Some(nil)
}

pub fn is_indecomposable(m: &Module, seed: u64) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    if quick_indecomposable(m) {
        return Ok(true);
    }
    Ok(decompose(m, seed)?.parts.len() == 1)
}

/// A summand with its inclusion into and projection from the ambient module.
struct Piece {
    module: Module,
    incl: ModuleMap,
    proj: ModuleMap,
}

/// Fitting decomposition along `psi^N`; None when it is trivial.
fn fitting(m: &Module, psi: &ModuleMap) -> Option<(Piece, Piece)> {
    let n = m.dim();
    let pw: Vec<Matrix> = psi.blocks.iter().map(|b| b.pow(n)).collect();
    let rank: usize = pw.iter().map(Matrix::rank).sum();
    if rank == 0 || rank == n {
        return None;
    }
    let k = closed_submodule(m, pw.iter().map(Matrix::kernel).collect());
    let i = closed_submodule(m, pw.iter().map(Matrix::image_basis).collect());
    let mut pk = Vec::new();
    let mut pi = Vec::new();
    for v in 0..m.dimv.len() {
        let both = k.map.blocks[v].hstack(&i.map.blocks[v]);
        let inv = both.inverse().expect("Fitting decomposition is direct");
        let kd = k.module.dimv[v];
        pk.push(inv.block(0, 0, kd, inv.cols));
        pi.push(inv.block(kd, 0, inv.rows - kd, inv.cols));
    }
    let proj_k = ModuleMap {
        source: m.clone(),
        target: k.module.clone(),
        blocks: pk,
    };
    let proj_i = ModuleMap {
        source: m.clone(),
        target: i.module.clone(),
        blocks: pi,
    };
    Some((
        Piece {
            module: k.module,
            incl: k.map,
            proj: proj_k,
        },
        Piece {
            module: i.module,
            incl: i.map,
            proj: proj_i,
        },
    ))
}

/// Tries to split `m` using `phi - lambda` for the eigenvalues lambda of `phi`.
fn try_split(m: &Module, phi: &ModuleMap, rng: &mut ChaCha8Rng) -> Option<(Piece, Piece)> {
    let mp = minimal_polynomial(&phi.matrix());
    if mp.deg() == Some(1) {
        return None;
    }
    let id = ModuleMap::identity(m);
    for lam in roots_in_field(&mp, rng) {
        if let Some(s) = fitting(m, &phi.sub(&id.scale(&lam))) {
            return Some(s);
        }
    }
    // coprime factors without roots: split along a factor found by gcd with the derivative-free part
    if let Some(g) = nontrivial_factor(&mp) {
        let gphi = poly_of_map(&g, phi);
        return fitting(m, &gphi);
    }
    None
}

/// A monic proper factor of a squarefree-reducible polynomial found from its
/// repeated part, or None.
fn nontrivial_factor(p: &Poly) -> Option<Poly> {
    let d = derivative(p);
    if d.is_zero() {
        return None;
    }
    let g = p.gcd(&d);
    (g.deg().unwrap_or(0) > 0 && g.deg() != p.deg()).then_some(g)
}

fn derivative(p: &Poly) -> Poly {
    let f = p.field;
    Poly::new(
        f,
        p.c.iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * &f.int(i as i64))
            .collect(),
    )
}

fn poly_of_map(p: &Poly, phi: &ModuleMap) -> ModuleMap {
    let m = &phi.source;
    let mut acc = ModuleMap::zero(m, m);
    for c in p.c.iter().rev() {
        acc = acc.after(phi).add(&ModuleMap::identity(m).scale(c));
    }
    acc
}

fn split_rec(m: &Module, rng: &mut ChaCha8Rng, out: &mut Vec<Piece>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let id = ModuleMap::identity(m);
    if quick_indecomposable(m) {
        out.push(Piece {
            module: m.clone(),
            incl: id.clone(),
            proj: id,
        });
        return Ok(());
    }
    let end = HomSpace::new(m, m);
    if local_radical(&end, rng).is_some() {
        out.push(Piece {
            module: m.clone(),
            incl: id.clone(),
            proj: id,
        });
        return Ok(());
    }
    let f = m.field();
    let mut candidates: Vec<ModuleMap> = end.basis.clone();
    for i in 0..end.dim() {
        for j in i + 1..end.dim() {
            candidates.push(end.basis[i].add(&end.basis[j]));
        }
    }
    let fixed = candidates.len();
    for attempt in 0..fixed + RETRY_BUDGET {
        let phi = if attempt < fixed {
            candidates[attempt].clone()
        } else {
            let c: Vec<Scalar> = (0..end.dim()).map(|_| random_scalar(f, rng)).collect();
            end.combination(&c)
        };
        if let Some((a, b)) = try_split(m, &phi, rng) {
            for piece in [a, b] {
                let mut sub = Vec::new();
                split_rec(&piece.module, rng, &mut sub)?;
                for s in sub {
                    out.push(Piece {
                        module: s.module,
                        incl: piece.incl.after(&s.incl),
                        proj: s.proj.after(&piece.proj),
                    });
                }
            }
            return Ok(());
        }
    }
    Err(Error::Inconclusive(format!(
        "no idempotent found in End of a module of dimension {} within the retry budget",
        m.dim()
    )))
}

/// Decomposes `m` into indecomposables, grouped into isomorphism classes.
pub fn decompose(m: &Module, seed: u64) -> Result<Decomposition> {
    let mut rng = rng_for(seed);
    let mut pieces = Vec::new();
    split_rec(m, &mut rng, &mut pieces)?;
    // group into classes; `to_rep[k]` is an iso part_k -> representative
    let mut reps: Vec<Module> = Vec::new();
    let mut class_of = Vec::new();
    let mut to_rep: Vec<ModuleMap> = Vec::new();
    for p in &pieces {
        let mut found = None;
        for (c, r) in reps.iter().enumerate() {
            if let Some(phi) = iso_indecomposable(&p.module, r) {
                found = Some((c, phi));
                break;
            }
        }
        match found {
            Some((c, phi)) => {
                class_of.push(c);
                to_rep.push(phi);
            }
            None => {
                class_of.push(reps.len());
                reps.push(p.module.clone());
                to_rep.push(ModuleMap::identity(&p.module));
            }
        }
    }
    let mut order: Vec<usize> = (0..pieces.len()).collect();
    order.sort_by_key(|&k| class_of[k]);
    let sum_parts: Vec<Module> = order.iter().map(|&k| reps[class_of[k]].clone()).collect();
    let sum = direct_sum(&m.alg, &sum_parts);
    let mut to_sum = ModuleMap::zero(m, &sum.module);
    let mut from_sum = ModuleMap::zero(&sum.module, m);
    for (slot, &k) in order.iter().enumerate() {
        let phi = &to_rep[k];
        let phi_inv = phi.inverse().expect("isomorphism is invertible");
        to_sum = to_sum.add(&sum.injections[slot].after(&phi.after(&pieces[k].proj)));
        from_sum = from_sum.add(&pieces[k].incl.after(&phi_inv).after(&sum.projections[slot]));
    }
    let summands = reps
        .iter()
        .enumerate()
        .map(|(c, r)| (r.clone(), class_of.iter().filter(|&&x| x == c).count()))
        .collect();
    let d = Decomposition {
        module: m.clone(),
        summands,
        parts: pieces.into_iter().map(|p| p.module).collect(),
        class_of,
        to_sum,
        from_sum,
    };
    if !d.verify() {
        return Err(Error::Internal(
            "decomposition isomorphism pair does not compose to identities".into(),
        ));
    }
    Ok(d)
}

/// For indecomposable `x`: an iso exists iff some hom basis element is one.
fn iso_indecomposable(x: &Module, y: &Module) -> Option<ModuleMap> {
    if x.dimv != y.dimv {
        return None;
    }
    hom_basis(x, y).into_iter().find(ModuleMap::is_iso)
}

/// An isomorphism `x -> y`, or None when the modules are not isomorphic.
pub fn iso(x: &Module, y: &Module, seed: u64) -> Result<Option<ModuleMap>> {
    if !x.same_algebra_as(y) {
        return Err(Error::Input(
            "iso between modules over different algebras".into(),
        ));
    }
    if x.dimv != y.dimv {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(ModuleMap::zero(x, y)));
    }
    let hb = hom_basis(x, y);
    if hb.is_empty() {
        return Ok(None);
    }
    if let Some(f) = hb.iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    if quick_indecomposable(x) {
        return Ok(None);
    }
    let mut rng = rng_for(seed);
    let f = x.field();
    for _ in 0..RETRY_BUDGET / 4 {
        let c: Vec<Scalar> = (0..hb.len()).map(|_| random_scalar(f, &mut rng)).collect();
        let g = ModuleMap::combination(&hb, &c, x, y);
        if g.is_iso() {
            return Ok(Some(g));
        }
    }
    // Krull–Schmidt: compare decompositions
    let dx = decompose(x, seed)?;
    let dy = decompose(y, seed)?;
    if dx.parts.len() != dy.parts.len() {
        return Ok(None);
    }
    let expand = |d: &Decomposition| -> Vec<Module> {
        d.summands
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    };
    let (xs, ys) = (expand(&dx), expand(&dy));
    let mut used = vec![false; ys.len()];
    let mut matched: Vec<(usize, ModuleMap)> = Vec::new();
    for px in &xs {
        let hit = (0..ys.len())
            .filter(|&j| !used[j])
            .find_map(|j| iso_indecomposable(px, &ys[j]).map(|phi| (j, phi)));
        match hit {
            Some((j, phi)) => {
                used[j] = true;
                matched.push((j, phi));
            }
            None => return Ok(None),
        }
    }
    // assemble: x -> sum_x -> (permuted, via phis) sum_y -> y
    let sx = direct_sum(&x.alg, &xs);
    let sy = direct_sum(&y.alg, &ys);
    let mut mid = ModuleMap::zero(&sx.module, &sy.module);
    for (i, (j, phi)) in matched.iter().enumerate() {
        mid = mid.add(&sy.injections[*j].after(&phi.after(&sx.projections[i])));
    }
    let to_sx = ModuleMap {
        source: x.clone(),
        target: sx.module.clone(),
        blocks: dx.to_sum.blocks.clone(),
    };
    let from_sy = ModuleMap {
        source: sy.module.clone(),
        target: y.clone(),
        blocks: dy.from_sum.blocks.clone(),
    };
    let g = from_sy.after(&mid).after(&to_sx);
    if !g.is_iso() || g.verify().is_err() {
        return Err(Error::Internal(
            "assembled isomorphism failed verification".into(),
        ));
    }
    Ok(Some(g))
}
