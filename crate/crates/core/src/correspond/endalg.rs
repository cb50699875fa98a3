use std::sync::Arc;

use crate::algebra::{Alg, FDAlgebra, Origin, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::modrep::{
    decompose, direct_sum, end_radical, hom_basis, DirectSum, HomSpace, Module, ModuleMap, ProjSum,
};

/// `Gamma` built from `add(M_1 + ... + M_r)`, with the data of the functor
/// `X -> Hom(M, X)` into left Gamma-modules.
///
/// A basis element of Gamma is a map `g: M_s -> M_t`; it acts on `Hom(M, X)`
/// by precomposition, so it lies in the Peirce block `t -> s` and the product
/// `g1 * g2` is the composite "first g1, then g2".
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub alg: Alg,
    pub gens: Vec<Module>,
    /// Basis of Gamma as maps between generators.
    pub basis: Vec<ModuleMap>,
    /// `(source generator, target generator)` of each basis map.
    pub ends: Vec<(usize, usize)>,
    /// `spaces[i][j]` is Hom(M_i, M_j) in the basis used for Gamma.
    pub spaces: Vec<Vec<HomSpace>>,
}

/// Endomorphism algebra of the sum of pairwise non-isomorphic indecomposables.
pub fn end_algebra(gens: &[Module], seed: u64) -> Result<EndAlgebra> {
    end_algebra_labeled(gens, None, seed)
}

pub fn end_algebra_labeled(
    gens: &[Module],
    names: Option<&[String]>,
    seed: u64,
) -> Result<EndAlgebra> {
    let r = gens.len();
    if r == 0 {
        return Err(Error::Precondition(
            "endomorphism algebra of the zero module".into(),
        ));
    }
    let lam = gens[0].alg.clone();
    let f = lam.field;
    let mut rads = Vec::with_capacity(r);
    for (i, g) in gens.iter().enumerate() {
        let rad = end_radical(g, seed).ok_or_else(|| {
            Error::Inconclusive(format!("generator {i} is not certified indecomposable"))
        })?;
        rads.push(rad);
    }
    for i in 0..r {
        for j in 0..i {
            if gens[i].dimv == gens[j].dimv
                && hom_basis(&gens[i], &gens[j]).iter().any(ModuleMap::is_iso)
            {
                return Err(Error::Precondition(format!(
                    "generators {j} and {i} are isomorphic"
                )));
            }
        }
    }
    let names: Vec<String> = match names {
        Some(n) => n.to_vec(),
        None => (1..=r).map(|i| format!("M{i}")).collect(),
    };
    let mut basis = Vec::new();
    let mut ends = Vec::new();
    let mut labels = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        basis.push(ModuleMap::identity(g));
        ends.push((i, i));
        labels.push(format!("e_{}", names[i]));
    }
    let mut space_bases: Vec<Vec<Vec<ModuleMap>>> = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        space_bases[i][i].push(ModuleMap::identity(&gens[i]));
    }
    for i in 0..r {
        for j in 0..r {
            let maps = if i == j {
                rads[i].clone()
            } else {
                hom_basis(&gens[i], &gens[j])
            };
            for (k, m) in maps.into_iter().enumerate() {
                labels.push(format!("{}>{}#{}", names[i], names[j], k + 1));
                basis.push(m.clone());
                ends.push((i, j));
                space_bases[i][j].push(m);
            }
        }
    }
    let spaces: Vec<Vec<HomSpace>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| HomSpace::from_basis(&gens[i], &gens[j], space_bases[i][j].clone()))
                .collect()
        })
        .collect();
    // global index of the k-th basis element of Hom(M_i, M_j)
    let mut index = vec![vec![Vec::new(); r]; r];
    for (b, &(i, j)) in ends.iter().enumerate() {
        index[i][j].push(b);
    }
    let d = basis.len();
    let mut mult: Vec<Sparse> = vec![Vec::new(); d * d];
    for x in 0..d {
        for y in 0..d {
            let ((s1, t1), (s2, t2)) = (ends[x], ends[y]);
            if t1 != s2 {
                continue;
            }
            let comp = basis[y].after(&basis[x]);
            let c = spaces[s1][t2]
                .coords(&comp)
                .ok_or_else(|| Error::Internal("composite outside the hom space".into()))?;
            mult[x * d + y] = c
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (index[s1][t2][k], v))
                .collect();
        }
    }
    let peirce = ends.iter().map(|&(s, t)| (t, s)).collect();
    let alg = FDAlgebra::new(
        f,
        names,
        labels,
        (0..r).collect(),
        peirce,
        mult,
        Origin::Endomorphism,
    )?;
    Ok(EndAlgebra {
        alg: Arc::new(alg),
        gens: gens.to_vec(),
        basis,
        ends,
        spaces,
    })
}

/// Indecomposable summands of the given modules, one per iso class, in order of first appearance.
pub fn indecomposable_generators(mods: &[Module], seed: u64) -> Result<Vec<Module>> {
    let mut out: Vec<Module> = Vec::new();
    for m in mods {
        if m.is_zero() {
            continue;
        }
        for (p, _) in decompose(m, seed)?.summands {
            if !out
                .iter()
                .any(|g| g.dimv == p.dimv && hom_basis(&p, g).iter().any(ModuleMap::is_iso))
            {
                out.push(p);
            }
        }
    }
    Ok(out)
}

impl EndAlgebra {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The Gamma-module `Hom(M, X)` with the hom bases used for its vertex spaces.
    pub fn functor(&self, x: &Module) -> (Module, Vec<HomSpace>) {
        let hs: Vec<HomSpace> = self.gens.iter().map(|g| HomSpace::new(g, x)).collect();
        let f = self.alg.field;
        let dimv: Vec<usize> = hs.iter().map(HomSpace::dim).collect();
        let blocks = (0..self.basis.len())
            .map(|b| {
                let (s, t) = self.ends[b];
                let cols: Vec<Vec<Scalar>> = hs[t]
                    .basis
                    .iter()
                    .map(|phi| {
                        hs[s]
                            .coords(&phi.after(&self.basis[b]))
                            .expect("precomposite is a hom")
                    })
                    .collect();
                Matrix::from_cols(f, dimv[s], &cols)
            })
            .collect();
        let m = Module::from_blocks(self.alg.clone(), dimv, blocks)
            .expect("Hom(M, X) is a Gamma-module");
        (m, hs)
    }

    /// The Gamma-module `Hom(M, X)`.
    pub fn module_over_end(&self, x: &Module) -> Module {
        self.functor(x).0
    }

    /// `Hom(M, f)` between the given functor images.
    pub fn functor_map(
        &self,
        fm: &ModuleMap,
        src: &(Module, Vec<HomSpace>),
        tgt: &(Module, Vec<HomSpace>),
    ) -> ModuleMap {
        let f = self.alg.field;
        let blocks = (0..self.len())
            .map(|i| {
                let cols: Vec<Vec<Scalar>> = src.1[i]
                    .basis
                    .iter()
                    .map(|phi| tgt.1[i].coords(&fm.after(phi)).expect("composite is a hom"))
                    .collect();
                Matrix::from_cols(f, tgt.0.dimv[i], &cols)
            })
            .collect();
        ModuleMap {
            source: src.0.clone(),
            target: tgt.0.clone(),
            blocks,
        }
    }

    /// The object `M_{tops[0]} + M_{tops[1]} + ...` of add M.
    pub fn object(&self, tops: &[usize]) -> DirectSum {
        let parts: Vec<Module> = tops.iter().map(|&t| self.gens[t].clone()).collect();
        direct_sum(&self.gens[0].alg, &parts)
    }

    /// The map of add M corresponding, by Yoneda, to a Gamma-map between projective sums.
    pub fn realize(
        &self,
        p: &ProjSum,
        q: &ProjSum,
        g: &ModuleMap,
        src: &DirectSum,
        tgt: &DirectSum,
    ) -> ModuleMap {
        let mut out = ModuleMap::zero(&src.module, &tgt.module);
        for (j, _) in p.tops.iter().enumerate() {
            let (u, pos) = p.generator(j);
            let v = g.blocks[u].col(pos);
            for k in 0..q.tops.len() {
                for (b, c) in q.component(u, &v, k) {
                    let piece = tgt.injections[k]
                        .after(&self.basis[b].after(&src.projections[j]))
                        .scale(&c);
                    out = out.add(&piece);
                }
            }
        }
        out
    }
}

impl EndAlgebra {
    /// Coordinates over the basis of Gamma of a map `M_i -> M_j`.
    pub fn coords(&self, i: usize, j: usize, map: &ModuleMap) -> Option<Vec<Scalar>> {
        let c = self.spaces[i][j].coords(map)?;
        let f = self.alg.field;
        let mut out = vec![f.zero(); self.basis.len()];
        let slots = self
            .ends
            .iter()
            .enumerate()
            .filter(|(_, e)| **e == (i, j))
            .map(|(b, _)| b);
        for (b, x) in slots.zip(c) {
            out[b] = x;
        }
        Some(out)
    }
}
