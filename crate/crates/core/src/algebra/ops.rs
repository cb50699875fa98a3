use super::{sparse_from_dense, FDAlgebra, Origin, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, Subspace};

/// Jacobson radical by the Dickson trace criterion: x with tr(L_{xy}) = 0 for all y.
///
/// Valid over Q and over F_p with p > dim. The result is cross-checked against
/// the stored presentation (span of the non-idempotent basis elements).
pub fn radical_basis(a: &FDAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let d = a.dim();
    let f = a.field;
    if let FieldSpec::PrimeField(p) = f {
        if p as usize <= d {
            return Err(Error::FieldTooSmall { p, dim: d });
        }
    }
    // tr(L_{b_k}) = sum_l coefficient of b_l in b_k b_l
    let tr: Vec<Scalar> = (0..d)
        .map(|k| {
            let mut t = f.zero();
            for l in 0..d {
                for (m, c) in a.mul_basis(k, l) {
                    if *m == l {
                        t = &t + c;
                    }
                }
            }
            t
        })
        .collect();
    let mut form = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let mut t = f.zero();
            for (k, c) in a.mul_basis(i, j) {
                t.add_mul(c, &tr[*k]);
            }
            form[(i, j)] = t;
        }
    }
    let ker = form.kernel();
    let rad: Vec<Vec<Scalar>> = ker.cols_vec();
    let stored = Subspace::spanned_by(
        f,
        d,
        &a.rad_indices()
            .iter()
            .map(|&b| a.basis_vector(b))
            .collect::<Vec<_>>(),
    );
    if rad.len() != stored.dim() || !rad.iter().all(|v| stored.contains(v)) {
        return Err(Error::Internal(
            "trace-form radical differs from the stored radical".into(),
        ));
    }
    Ok(rad)
}

/// Opposite algebra: x *op y = y * x, same basis and idempotents.
pub fn opposite(a: &FDAlgebra) -> FDAlgebra {
    let d = a.dim();
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            mult[i * d + j] = a.mul_basis(j, i).clone();
        }
    }
    let peirce = a.peirce.iter().map(|&(s, t)| (t, s)).collect();
    FDAlgebra::new(
        a.field,
        a.vertices.clone(),
        a.labels.clone(),
        a.idem.clone(),
        peirce,
        mult,
        Origin::Opposite,
    )
    .expect("opposite of a valid algebra is valid")
}

/// The stored complete set of primitive orthogonal idempotents, as coefficient vectors.
///
/// Every constructor in this crate produces a split basic presentation, so the
/// vertex idempotents are already primitive; the seed is accepted for interface
/// stability and does not influence the result.
pub fn primitive_idempotents(a: &FDAlgebra, _seed: u64) -> Vec<Vec<Scalar>> {
    a.idem.iter().map(|&e| a.basis_vector(e)).collect()
}

/// Quotient A / A e A for the idempotent e = sum of the vertex idempotents in `verts`.
pub fn quotient_by_idempotent_ideal(a: &FDAlgebra, verts: &[usize]) -> FDAlgebra {
    let d = a.dim();
    let f = a.field;
    // order columns so that idempotents are pivoted last
    let order: Vec<usize> = (0..d)
        .filter(|b| !a.is_idempotent_index(*b))
        .chain(a.idem.iter().copied())
        .collect();
    let mut inv = vec![0; d];
    for (k, &b) in order.iter().enumerate() {
        inv[b] = k;
    }
    let permute = |s: &Sparse| {
        let mut v = vec![f.zero(); d];
        for (i, x) in s {
            v[inv[*i]] = x.clone();
        }
        v
    };
    let mut ideal = Subspace::new(f, d);
    for &v in verts {
        for b in 0..d {
            if a.source(b) != v {
                continue;
            }
            for c in 0..d {
                if a.target(c) != v {
                    continue;
                }
                ideal.insert(permute(a.mul_basis(b, c)));
            }
        }
    }
    let keep: Vec<usize> = ideal
        .complement_indices()
        .into_iter()
        .map(|k| order[k])
        .collect();
    let mut keep_sorted = keep.clone();
    keep_sorted.sort();
    let new_pos = |b: usize| keep_sorted.iter().position(|&x| x == b);
    let vert_keep: Vec<usize> = (0..a.n_vertices()).filter(|v| !verts.contains(v)).collect();
    let vpos = |v: usize| vert_keep.iter().position(|&x| x == v).expect("vertex kept");
    let nd = keep_sorted.len();
    let mut mult = vec![Vec::new(); nd * nd];
    for (i, &bi) in keep_sorted.iter().enumerate() {
        for (j, &bj) in keep_sorted.iter().enumerate() {
            let r = ideal.reduce(permute(a.mul_basis(bi, bj)));
            let mut s: Sparse = Vec::new();
            for (k, x) in sparse_from_dense(&r) {
                let orig = order[k];
                s.push((new_pos(orig).expect("residue supported on kept basis"), x));
            }
            s.sort_by_key(|(k, _)| *k);
            mult[i * nd + j] = s;
        }
    }
    let peirce = keep_sorted
        .iter()
        .map(|&b| (vpos(a.source(b)), vpos(a.target(b))))
        .collect();
    let idem = vert_keep
        .iter()
        .map(|&v| new_pos(a.idem[v]).expect("idempotent survives"))
        .collect();
    FDAlgebra::new(
        f,
        vert_keep.iter().map(|&v| a.vertices[v].clone()).collect(),
        keep_sorted.iter().map(|&b| a.labels[b].clone()).collect(),
        idem,
        peirce,
        mult,
        Origin::Quotient,
    )
    .expect("quotient of a valid algebra is valid")
}

/// Entry (i, j) = dim e_j A e_i, the multiplicity of S_j in P_i.
pub fn cartan_matrix(a: &FDAlgebra) -> Vec<Vec<usize>> {
    let n = a.n_vertices();
    let mut c = vec![vec![0; n]; n];
    for &(s, t) in &a.peirce {
        c[s][t] += 1;
    }
    c
}
