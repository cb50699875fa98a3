use super::{Module, ModuleMap};
use crate::exactlin::{Coordinates, Matrix, Scalar};

/// Intertwining equations `Y(g) F_s = F_t X(g)` over the generators, one row per entry.
fn equations(x: &Module, y: &Module) -> (Matrix, Vec<usize>) {
    let a = &x.alg;
    let f = a.field;
    let n = a.n_vertices();
    let mut uoff = vec![0; n + 1];
    for v in 0..n {
        uoff[v + 1] = uoff[v] + x.dimv[v] * y.dimv[v];
    }
    let unknowns = uoff[n];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &g in a.generators() {
        let (s, t) = a.peirce[g];
        let (xg, yg) = (x.block(g), y.block(g));
        if x.dimv[s] == 0 || y.dimv[t] == 0 {
            continue;
        }
        for r in 0..y.dimv[t] {
            for c in 0..x.dimv[s] {
                let mut row = vec![f.zero(); unknowns];
                // (Y_g F_s)[r][c] = sum_k Y_g[r][k] F_s[k][c]
                for k in 0..y.dimv[s] {
                    let yv = &yg[(r, k)];
                    if !yv.is_zero() {
                        let i = uoff[s] + k * x.dimv[s] + c;
                        row[i] = &row[i] + yv;
                    }
                }
                // (F_t X_g)[r][c] = sum_k F_t[r][k] X_g[k][c]
                for k in 0..x.dimv[t] {
                    let xv = &xg[(k, c)];
                    if !xv.is_zero() {
                        let i = uoff[t] + r * x.dimv[t] + k;
                        row[i] = &row[i] - xv;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    (Matrix::from_rows(f, &rows, unknowns), uoff)
}

/// Basis of Hom_A(X, Y).
pub fn hom_basis(x: &Module, y: &Module) -> Vec<ModuleMap> {
    assert!(
        x.same_algebra_as(y),
        "hom between modules over different algebras"
    );
    let a = &x.alg;
    let f = a.field;
    let n = a.n_vertices();
    let (eq, uoff) = equations(x, y);
    let ker = if eq.rows == 0 {
        Matrix::identity(f, uoff[n])
    } else {
        eq.kernel()
    };
    (0..ker.cols)
        .map(|j| {
            let col = ker.col(j);
            let blocks = (0..n)
                .map(|v| {
                    Matrix::from_vec(f, y.dimv[v], x.dimv[v], col[uoff[v]..uoff[v + 1]].to_vec())
                })
                .collect();
            ModuleMap {
                source: x.clone(),
                target: y.clone(),
                blocks,
            }
        })
        .collect()
}

pub fn hom_dim(x: &Module, y: &Module) -> usize {
    assert!(
        x.same_algebra_as(y),
        "hom between modules over different algebras"
    );
    let (eq, uoff) = equations(x, y);
    uoff[x.alg.n_vertices()] - if eq.rows == 0 { 0 } else { eq.rank() }
}

/// A hom space with a fixed basis and coordinate extraction.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<ModuleMap>,
    coords: Coordinates,
}

impl HomSpace {
    pub fn new(x: &Module, y: &Module) -> HomSpace {
        HomSpace::from_basis(x, y, hom_basis(x, y))
    }

    pub fn from_basis(x: &Module, y: &Module, basis: Vec<ModuleMap>) -> HomSpace {
        let len: usize = x.dimv.iter().zip(&y.dimv).map(|(a, b)| a * b).sum();
        let flat: Vec<Vec<Scalar>> = basis.iter().map(ModuleMap::flatten).collect();
        let coords = Coordinates::new(x.field(), len, &flat);
        HomSpace {
            source: x.clone(),
            target: y.clone(),
            basis,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `m` in the basis; None when `m` is not in the space.
    pub fn coords(&self, m: &ModuleMap) -> Option<Vec<Scalar>> {
        self.coords.coords(&m.flatten())
    }

    pub fn combination(&self, c: &[Scalar]) -> ModuleMap {
        ModuleMap::combination(&self.basis, c, &self.source, &self.target)
    }
}
