use super::Subcat;
use crate::correspond::end_algebra;
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::homology::tau_n;
use crate::modrep::{is_projective, Module};

/// Arrow multiplicities `d_XY = dim J/J^2 (X, Y)` on the generators of C, and the
/// dotted arrows `X -> tau_n X`.
#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub vertices: Vec<Module>,
    pub labels: Vec<String>,
    /// `arrow_mult[x][y]` arrows from x to y.
    pub arrow_mult: Vec<Vec<usize>>,
    /// `dotted[x]` is the vertex of `tau_n X`, for non-projective X with `tau_n X` in C.
    pub dotted: Vec<Option<usize>>,
    pub n: usize,
}

impl ARQuiver {
    pub fn arrow_count(&self) -> usize {
        self.arrow_mult.iter().flatten().sum()
    }

    pub fn dotted_count(&self) -> usize {
        self.dotted.iter().flatten().count()
    }
}

/// Radical-quotient dimensions, computed from composites of radical maps and
/// again from the structure constants of `End(⊕C)`; the two must agree.
pub fn ar_quiver(c: &Subcat, n: usize, labels: Option<&[String]>, seed: u64) -> Result<ARQuiver> {
    let r = c.len();
    let gens = c.gens();
    let mut by_maps = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            let len: usize = gens[i]
                .dimv
                .iter()
                .zip(&gens[j].dimv)
                .map(|(a, b)| a * b)
                .sum();
            let mut sq = Subspace::new(gens[i].field(), len);
            for k in 0..r {
                for f in c.cat.rad(i, k) {
                    for g in c.cat.rad(k, j) {
                        sq.insert(g.after(f).flatten());
                    }
                }
            }
            by_maps[i][j] = c.cat.rad(i, j).len() - sq.dim();
        }
    }
    let gamma = end_algebra(gens, seed)?;
    let g = &gamma.alg;
    let rad = g.rad_indices();
    let mut by_algebra = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            let block: Vec<usize> = rad
                .iter()
                .copied()
                .filter(|&b| gamma.ends[b] == (i, j))
                .collect();
            let mut sq = Subspace::new(g.field, g.dim());
            for &x in &rad {
                for &y in &rad {
                    let prod = g.mul_basis(x, y);
                    if prod.iter().all(|(b, _)| gamma.ends[*b] == (i, j)) && !prod.is_empty() {
                        sq.insert(crate::algebra::dense_from_sparse(g.field, g.dim(), prod));
                    }
                }
            }
            by_algebra[i][j] = block.len() - sq.dim();
        }
    }
    if by_maps != by_algebra {
        return Err(Error::Internal(
            "arrow multiplicities disagree between the two computations".into(),
        ));
    }
    let mut dotted = Vec::with_capacity(r);
    for x in gens {
        if is_projective(x) {
            dotted.push(None);
            continue;
        }
        let t = tau_n(x, n, seed)?;
        dotted.push(if t.is_zero() { None } else { c.index_of(&t) });
    }
    let labels = match labels {
        Some(l) => l.to_vec(),
        None => (1..=r).map(|i| format!("M{i}")).collect(),
    };
    Ok(ARQuiver {
        vertices: gens.to_vec(),
        labels,
        arrow_mult: by_maps,
        dotted,
        n,
    })
}
