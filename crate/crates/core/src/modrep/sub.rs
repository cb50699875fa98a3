use super::{Module, ModuleMap, ProjSum};
use crate::exactlin::{Coordinates, Matrix, Scalar, Subspace};

/// A module together with its structural map: an inclusion for submodules,
/// a projection for quotients.
#[derive(Clone, Debug)]
pub struct Sub {
    pub module: Module,
    pub map: ModuleMap,
}

/// Module on the columns of `bases[v]`, assumed closed under the action.
fn restrict(m: &Module, bases: Vec<Matrix>) -> Sub {
    let a = &m.alg;
    let f = a.field;
    let coords: Vec<Coordinates> = bases
        .iter()
        .map(|b| Coordinates::new(f, b.rows, &b.cols_vec()))
        .collect();
    let dimv: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let blocks = (0..a.dim())
        .map(|b| {
            let (s, t) = a.peirce[b];
            let img = m.block(b).mul(&bases[s]);
            let cols: Vec<Vec<Scalar>> = img
                .cols_vec()
                .iter()
                .map(|c| {
                    coords[t]
                        .coords(c)
                        .expect("subspace is closed under the action")
                })
                .collect();
            Matrix::from_cols(f, dimv[t], &cols)
        })
        .collect();
    let sub = Module::raw(a.clone(), dimv, blocks);
    let map = ModuleMap {
        source: sub.clone(),
        target: m.clone(),
        blocks: bases,
    };
    Sub { module: sub, map }
}

/// Submodule generated by homogeneous vectors `(vertex, vector)`.
pub fn submodule(m: &Module, gens: &[(usize, Vec<Scalar>)]) -> Sub {
    let a = &m.alg;
    let f = a.field;
    let n = a.n_vertices();
    let mut spaces: Vec<Subspace> = (0..n).map(|v| Subspace::new(f, m.dimv[v])).collect();
    let mut stack: Vec<(usize, Vec<Scalar>)> = gens.to_vec();
    while let Some((v, x)) = stack.pop() {
        if !spaces[v].insert(x.clone()) {
            continue;
        }
        for &g in a.generators() {
            if a.source(g) == v {
                let y = m.block(g).mul_vec(&x);
                if y.iter().any(|c| !c.is_zero()) {
                    stack.push((a.target(g), y));
                }
            }
        }
    }
    restrict(m, spaces.iter().map(Subspace::to_matrix).collect())
}

/// Submodule given by per-vertex spanning columns already closed under the action.
pub(crate) fn closed_submodule(m: &Module, spans: Vec<Matrix>) -> Sub {
    restrict(m, spans.iter().map(Matrix::image_basis).collect())
}

/// Quotient of `m` by the submodule spanned (per vertex) by the columns of `spans`.
pub fn quotient(m: &Module, spans: &[Matrix]) -> Sub {
    let a = &m.alg;
    let f = a.field;
    let n = a.n_vertices();
    let spaces: Vec<Subspace> = (0..n)
        .map(|v| Subspace::spanned_by(f, m.dimv[v], &spans[v].cols_vec()))
        .collect();
    let comps: Vec<Vec<usize>> = spaces.iter().map(Subspace::complement_indices).collect();
    let project = |v: usize, x: Vec<Scalar>| -> Vec<Scalar> {
        let r = spaces[v].reduce(x);
        comps[v].iter().map(|&i| r[i].clone()).collect()
    };
    let unit = |d: usize, i: usize| {
        let mut e = vec![f.zero(); d];
        e[i] = f.one();
        e
    };
    let dimv: Vec<usize> = comps.iter().map(Vec::len).collect();
    let blocks = (0..a.dim())
        .map(|b| {
            let (s, t) = a.peirce[b];
            let cols: Vec<Vec<Scalar>> = comps[s]
                .iter()
                .map(|&i| project(t, m.block(b).mul_vec(&unit(m.dimv[s], i))))
                .collect();
            Matrix::from_cols(f, dimv[t], &cols)
        })
        .collect();
    let q = Module::raw(a.clone(), dimv.clone(), blocks);
    let proj = (0..n)
        .map(|v| {
            let cols: Vec<Vec<Scalar>> = (0..m.dimv[v])
                .map(|i| project(v, unit(m.dimv[v], i)))
                .collect();
            Matrix::from_cols(f, dimv[v], &cols)
        })
        .collect();
    Sub {
        module: q.clone(),
        map: ModuleMap {
            source: m.clone(),
            target: q,
            blocks: proj,
        },
    }
}

pub fn kernel(fm: &ModuleMap) -> Sub {
    restrict(&fm.source, fm.blocks.iter().map(Matrix::kernel).collect())
}

pub fn image(fm: &ModuleMap) -> Sub {
    restrict(
        &fm.target,
        fm.blocks.iter().map(Matrix::image_basis).collect(),
    )
}

pub fn cokernel(fm: &ModuleMap) -> Sub {
    quotient(&fm.target, &fm.blocks)
}

/// `rad M = J M`, with its inclusion.
pub fn radical_of_module(m: &Module) -> Sub {
    let a = &m.alg;
    let f = a.field;
    let mut spans: Vec<Matrix> = m.dimv.iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    for &g in a.generators() {
        let t = a.target(g);
        spans[t] = spans[t].hstack(m.block(g));
    }
    closed_submodule(m, spans)
}

/// `M / rad M`, with its projection.
pub fn top(m: &Module) -> Sub {
    let r = radical_of_module(m);
    quotient(m, &r.map.blocks)
}

/// Elements killed by the radical, with the inclusion.
pub fn socle(m: &Module) -> Sub {
    let a = &m.alg;
    let f = a.field;
    let spans = (0..a.n_vertices())
        .map(|v| {
            let mut stacked = Matrix::zeros(f, 0, m.dimv[v]);
            for &g in a.generators() {
                if a.source(g) == v {
                    stacked = stacked.vstack(m.block(g));
                }
            }
            if stacked.rows == 0 {
                Matrix::identity(f, m.dimv[v])
            } else {
                stacked.kernel()
            }
        })
        .collect();
    restrict(m, spans)
}

/// A direct sum with its structural injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(alg: &crate::algebra::Alg, parts: &[Module]) -> DirectSum {
    let f = alg.field;
    let n = alg.n_vertices();
    let dimv: Vec<usize> = (0..n)
        .map(|v| parts.iter().map(|p| p.dimv[v]).sum())
        .collect();
    let blocks = (0..alg.dim())
        .map(|b| {
            let (s, t) = alg.peirce[b];
            let mut m = Matrix::zeros(f, dimv[t], dimv[s]);
            let (mut r, mut c) = (0, 0);
            for p in parts {
                m.set_block(r, c, p.block(b));
                r += p.dimv[t];
                c += p.dimv[s];
            }
            m
        })
        .collect();
    let sum = Module::raw(alg.clone(), dimv.clone(), blocks);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut off = vec![0; n];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, dimv[v], p.dimv[v]);
            i.set_block(off[v], 0, &Matrix::identity(f, p.dimv[v]));
            proj.push(i.transpose());
            inj.push(i);
            off[v] += p.dimv[v];
        }
        injections.push(ModuleMap {
            source: p.clone(),
            target: sum.clone(),
            blocks: inj,
        });
        projections.push(ModuleMap {
            source: sum.clone(),
            target: p.clone(),
            blocks: proj,
        });
    }
    DirectSum {
        module: sum,
        injections,
        projections,
    }
}

/// The map `X -> Y1 + ... + Yk` with components `fs`.
pub fn map_into_sum(x: &Module, fs: &[ModuleMap], sum: &DirectSum) -> ModuleMap {
    let mut out = ModuleMap::zero(x, &sum.module);
    for (f, inj) in fs.iter().zip(&sum.injections) {
        out = out.add(&inj.after(f));
    }
    out
}

/// The map `X1 + ... + Xk -> Y` with components `fs`.
pub fn map_from_sum(fs: &[ModuleMap], sum: &DirectSum, target: &Module) -> ModuleMap {
    let mut out = ModuleMap::zero(&sum.module, target);
    for (f, pr) in fs.iter().zip(&sum.projections) {
        out = out.add(&f.after(pr));
    }
    out
}

/// `g` with `mono . g = f`, when the image of `f` lies in the image of `mono`.
pub fn factor_through_mono(mono: &ModuleMap, f: &ModuleMap) -> Option<ModuleMap> {
    let blocks = mono
        .blocks
        .iter()
        .zip(&f.blocks)
        .map(|(m, b)| m.solve(b))
        .collect::<Option<Vec<Matrix>>>()?;
    Some(ModuleMap {
        source: f.source.clone(),
        target: mono.source.clone(),
        blocks,
    })
}

/// `g` with `g . epi = f`, when `f` kills the kernel of the surjection `epi`.
pub fn factor_through_epi(epi: &ModuleMap, f: &ModuleMap) -> Option<ModuleMap> {
    let blocks = epi
        .blocks
        .iter()
        .zip(&f.blocks)
        .map(|(e, b)| e.transpose().solve(&b.transpose()).map(|g| g.transpose()))
        .collect::<Option<Vec<Matrix>>>()?;
    let g = ModuleMap {
        source: epi.target.clone(),
        target: f.target.clone(),
        blocks,
    };
    (g.after(epi) == *f).then_some(g)
}

/// Lift of `f: P -> Z` along `epi: E -> Z` for a projective sum P.
pub fn lift_through_epi(p: &ProjSum, epi: &ModuleMap, f: &ModuleMap) -> Option<ModuleMap> {
    let field = p.module.field();
    let mut lifts = Vec::with_capacity(p.tops.len());
    for j in 0..p.tops.len() {
        let (u, pos) = p.generator(j);
        let y = Matrix::from_cols(field, f.target.dimv[u], &[f.blocks[u].col(pos)]);
        lifts.push(epi.blocks[u].solve(&y)?.col(0));
    }
    Some(p.map_from_generators(&epi.source, &lifts))
}

/// Seeded random module `P / U`: `P` a sum of between 1 and `max_tops` indecomposable
/// projectives, `U` generated by up to `max_rels` homogeneous elements with small entries.
/// Most generators are pushed into `rad P` so that the quotient is rarely projective or zero.
pub fn random_quotient(
    a: &crate::algebra::Alg,
    max_tops: usize,
    max_rels: usize,
    seed: u64,
) -> Module {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let f = a.field;
    let n = a.n_vertices();
    let k = rng.gen_range(1..=max_tops.max(1));
    let tops: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    let p = ProjSum::new(a, &tops).module;
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(0..=max_rels) {
        let v = rng.gen_range(0..n);
        if p.dimv[v] == 0 {
            continue;
        }
        let mut x: Vec<Scalar> = (0..p.dimv[v])
            .map(|_| f.int(rng.gen_range(-2..=2)))
            .collect();
        let mut at = v;
        let mut stay = 0.15;
        loop {
            let out: Vec<usize> = a
                .generators()
                .iter()
                .copied()
                .filter(|&g| a.source(g) == at)
                .collect();
            if out.is_empty() || rng.gen_bool(stay) {
                break;
            }
            let g = out[rng.gen_range(0..out.len())];
            x = p.block(g).mul_vec(&x);
            at = a.target(g);
            stay = 0.6;
        }
        gens.push((at, x));
    }
    let u = submodule(&p, &gens);
    quotient(&p, &u.map.blocks).module
}
