//! Ext groups, homological dimensions, Auslander-type conditions and the
//! Auslander-Reiten translates.

mod tau;

use std::fmt;

use crate::algebra::{op, Alg};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::modrep::{
    hom_basis, hom_dim, injective_envelope, is_projective, min_inj_coresolution,
    min_proj_resolution, projective_cover, regular_module, simple_module, AddCat, Dim, HomSpace,
    Module, Resolution,
};

pub use tau::{tau, tau_inv, tau_n, tau_n_inv, transpose};

/// Default degree cap for resolutions.
pub const DEFAULT_CAP: usize = 16;

/// A three-valued verdict; `Indeterminate` means a cap was hit before the answer was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Indeterminate,
}

impl Verdict {
    pub fn and(self, o: Verdict) -> Verdict {
        match (self, o) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Indeterminate,
        }
    }

    pub fn not(self) -> Verdict {
        match self {
            Verdict::True => Verdict::False,
            Verdict::False => Verdict::True,
            Verdict::Indeterminate => Verdict::Indeterminate,
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn all(it: impl IntoIterator<Item = Verdict>) -> Verdict {
        it.into_iter().fold(Verdict::True, Verdict::and)
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl From<Option<bool>> for Verdict {
    fn from(b: Option<bool>) -> Verdict {
        b.map_or(Verdict::Indeterminate, Verdict::from)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

fn rank(m: &Matrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        0
    } else {
        m.rank()
    }
}

/// Offsets of the summands of Hom(P, Y) = sum over summands k of e_{tops[k]} Y.
fn yoneda_offsets(tops: &[usize], y: &Module) -> Vec<usize> {
    let mut off = vec![0];
    for &u in tops {
        off.push(off.last().unwrap() + y.dimv[u]);
    }
    off
}

/// Matrix of `Hom(d_i, Y): Hom(P_{i-1}, Y) -> Hom(P_i, Y)` in Yoneda coordinates.
fn yoneda_matrix(r: &Resolution, i: usize, y: &Module) -> Matrix {
    let f = y.field();
    let (src, tgt) = (&r.proj[i - 1], &r.proj[i]);
    let (co, ro) = (yoneda_offsets(&src.tops, y), yoneda_offsets(&tgt.tops, y));
    let mut m = Matrix::zeros(f, *ro.last().unwrap(), *co.last().unwrap());
    let d = &r.maps[i];
    for (l, _) in tgt.tops.iter().enumerate() {
        let (u, pos) = tgt.generator(l);
        let v = d.blocks[u].col(pos);
        for k in 0..src.tops.len() {
            let mut blk = Matrix::zeros(f, y.dimv[u], y.dimv[src.tops[k]]);
            for (b, c) in src.component(u, &v, k) {
                blk.add_scaled(&c, y.block(b));
            }
            m.set_block(ro[l], co[k], &blk);
        }
    }
    m
}

/// `Ext^i(X, Y)` for `i = 0..=cap`, computed from one projective resolution of X.
#[derive(Clone, Debug)]
pub struct ExtTable {
    pub x: Module,
    pub y: Module,
    pub dims: Vec<usize>,
    pub cap: usize,
    /// The resolution of X did not terminate within the computed range.
    pub truncated: bool,
}

impl ExtTable {
    pub fn new(x: &Module, y: &Module, cap: usize) -> ExtTable {
        let r = min_proj_resolution(x, cap + 1);
        ext_from_resolution(&r, y, cap)
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        self.dims.get(i).copied()
    }

    /// Whether `Ext^i` vanishes for `lo <= i <= hi`.
    pub fn vanishes(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi.min(self.cap)).all(|i| self.dims[i] == 0)
    }
}

/// Ext dimensions against `y` read off a projective resolution carrying at least `cap + 1` terms.
pub fn ext_from_resolution(r: &Resolution, y: &Module, cap: usize) -> ExtTable {
    let n = r.terms.len();
    let hom = |i: usize| {
        if i < n {
            *yoneda_offsets(&r.proj[i].tops, y).last().unwrap()
        } else {
            0
        }
    };
    let d = |i: usize| {
        if i == 0 || i >= n {
            0
        } else {
            rank(&yoneda_matrix(r, i, y))
        }
    };
    let dims = (0..=cap).map(|i| hom(i) - d(i) - d(i + 1)).collect();
    ExtTable {
        x: r.module.clone(),
        y: y.clone(),
        dims,
        cap,
        truncated: r.truncated_at.is_some(),
    }
}

/// `dim Ext^i(X, Y)` via the minimal projective resolution of X.
pub fn ext_dim(x: &Module, y: &Module, i: usize, cap: usize) -> Result<usize> {
    if i > cap {
        return Err(Error::Precondition(format!("degree {i} exceeds cap {cap}")));
    }
    let r = min_proj_resolution(x, i + 1);
    Ok(ext_from_resolution(&r, y, i).dims[i])
}

/// `dim Ext^i(X, Y)` via the minimal injective coresolution of Y.
pub fn ext_dim_injective(x: &Module, y: &Module, i: usize) -> usize {
    let r = min_inj_coresolution(y, i + 1);
    let n = r.terms.len();
    let spaces: Vec<HomSpace> = r.terms.iter().map(|t| HomSpace::new(x, t)).collect();
    let hom = |j: usize| if j < n { spaces[j].dim() } else { 0 };
    let d = |j: usize| {
        if j == 0 || j >= n {
            return 0;
        }
        let g = &r.maps[j];
        let cols: Vec<Vec<Scalar>> = spaces[j - 1]
            .basis
            .iter()
            .map(|h| spaces[j].coords(&g.after(h)).expect("composite is a hom"))
            .collect();
        Subspace::spanned_by(x.field(), spaces[j].dim(), &cols).dim()
    };
    hom(i) - d(i) - d(i + 1)
}

pub fn pd(m: &Module, cap: usize) -> Dim {
    min_proj_resolution(m, cap).length()
}

pub fn id(m: &Module, cap: usize) -> Dim {
    min_inj_coresolution(m, cap).length()
}

/// Global dimension as the maximum projective dimension of the simples.
pub fn gldim(a: &Alg, cap: usize) -> Dim {
    (0..a.n_vertices())
        .map(|i| pd(&simple_module(a, i), cap))
        .fold(Dim::Exact(0), Dim::max)
}

/// Number of leading projective terms in the minimal injective coresolution of the regular module.
pub fn domdim(a: &Alg, cap: usize) -> Dim {
    let r = min_inj_coresolution(&regular_module(a), cap);
    match r.terms.iter().position(|t| !is_projective(t)) {
        Some(i) => Dim::Exact(i),
        None => Dim::AtLeast(cap + 1),
    }
}

/// Projective dimensions of the first `n` terms of the minimal injective coresolution of `a`.
fn coresolution_pds(a: &Alg, n: usize, cap: usize) -> Vec<Dim> {
    let r = min_inj_coresolution(&regular_module(a), cap.max(n));
    (0..n)
        .map(|i| r.terms.get(i).map_or(Dim::Exact(0), |t| pd(t, cap)))
        .collect()
}

/// The (m,n)-condition: `pd I^i < m` for the first n terms `I^i` of the coresolution of the regular module.
pub fn mn_condition(a: &Alg, m: usize, n: usize, cap: usize) -> Result<Verdict> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition(
            "(m,n)-condition needs m, n >= 1".into(),
        ));
    }
    Ok(Verdict::all(
        coresolution_pds(a, n, cap)
            .into_iter()
            .map(|d| Verdict::from(d.at_most(m - 1))),
    ))
}

/// The (m,n)-condition on both `a` and its opposite.
pub fn two_sided_mn(a: &Alg, m: usize, n: usize, cap: usize) -> Result<Verdict> {
    Ok(mn_condition(a, m, n, cap)?.and(mn_condition(&op(a), m, n, cap)?))
}

/// n-Gorenstein: `pd I^i <= i` for `0 <= i < n`.
pub fn n_gorenstein(a: &Alg, n: usize, cap: usize) -> Verdict {
    Verdict::all(
        coresolution_pds(a, n, cap)
            .into_iter()
            .enumerate()
            .map(|(i, d)| Verdict::from(d.at_most(i))),
    )
}

/// Least i with `Ext^i(M, A) != 0`.
pub fn grade(m: &Module, cap: usize) -> Dim {
    let t = ExtTable::new(m, &regular_module(&m.alg), cap);
    match t.dims.iter().position(|&d| d != 0) {
        Some(i) => Dim::Exact(i),
        None => Dim::AtLeast(cap + 1),
    }
}

/// Span dimension of the given composites inside Hom(x, y).
fn span_dim(
    x: &Module,
    y: &Module,
    maps: impl IntoIterator<Item = crate::modrep::ModuleMap>,
) -> usize {
    let len: usize = x.dimv.iter().zip(&y.dimv).map(|(a, b)| a * b).sum();
    let mut s = Subspace::new(x.field(), len);
    for m in maps {
        s.insert(m.flatten());
    }
    s.dim()
}

/// `dim Hom(X,Y)` modulo maps factoring through a projective.
pub fn stable_hom_dim(x: &Module, y: &Module) -> usize {
    let (p, epi) = projective_cover(y);
    let through = hom_basis(x, &p.module).into_iter().map(|g| epi.after(&g));
    hom_dim(x, y) - span_dim(x, y, through)
}

/// `dim Hom(X,Y)` modulo maps factoring through an injective, or through `add T` when a class is given.
pub fn costable_hom_dim(x: &Module, y: &Module, inj_class: Option<&AddCat>) -> usize {
    let mono = match inj_class {
        None => injective_envelope(x).1,
        Some(c) => crate::modrep::left_approx(x, c).map,
    };
    let through = hom_basis(&mono.target, y)
        .into_iter()
        .map(|h| h.after(&mono));
    hom_dim(x, y) - span_dim(x, y, through)
}

/// Homological summary of an algebra.
#[derive(Clone, Debug)]
pub struct DimReport {
    pub algebra: Alg,
    pub gldim: Dim,
    pub gldim_op: Dim,
    pub domdim: Dim,
    pub domdim_op: Dim,
    /// `((m, n), two-sided verdict)` for `1 <= m <= max_m`, `1 <= n <= max_n`.
    pub mn_table: Vec<((usize, usize), Verdict)>,
    /// Largest `n <= cap` with the algebra n-Gorenstein, `AtLeast(cap + 1)` when all pass.
    pub gorenstein_profile: Dim,
}

pub fn dim_report(a: &Alg, max_m: usize, max_n: usize, cap: usize) -> Result<DimReport> {
    let mut mn_table = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            mn_table.push(((m, n), two_sided_mn(a, m, n, cap)?));
        }
    }
    let mut gorenstein_profile = Dim::AtLeast(cap + 1);
    for n in 1..=cap {
        match n_gorenstein(a, n, cap) {
            Verdict::True => continue,
            Verdict::False => gorenstein_profile = Dim::Exact(n - 1),
            Verdict::Indeterminate => gorenstein_profile = Dim::AtLeast(n - 1),
        }
        break;
    }
    Ok(DimReport {
        algebra: a.clone(),
        gldim: gldim(a, cap),
        gldim_op: gldim(&op(a), cap),
        domdim: domdim(a, cap),
        domdim_op: domdim(&op(a), cap),
        mn_table,
        gorenstein_profile,
    })
}
