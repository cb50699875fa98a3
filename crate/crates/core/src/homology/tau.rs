use crate::algebra::op;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::modrep::{cokernel, cosyzygy, dual, min_proj_resolution, syzygy, Module, ProjSum};

/// Auslander-Bridger transpose: the cokernel of `P_0^* -> P_1^*` for the minimal
/// presentation `P_1 -> P_0 -> M`, a module over the opposite algebra.
///
/// `Hom(A e_v, A) = e_v A` is the opposite projective at v, and the dual of the
/// differential is left multiplication by its components.
pub fn transpose(m: &Module) -> Module {
    let aop = op(&m.alg);
    let f = m.field();
    let r = min_proj_resolution(m, 1);
    if r.terms.is_empty() {
        return Module::zero(&aop);
    }
    let p0 = &r.proj[0];
    let tops1: Vec<usize> = r.proj.get(1).map_or(Vec::new(), |p| p.tops.clone());
    let q0 = ProjSum::new(&aop, &p0.tops);
    let q1 = ProjSum::new(&aop, &tops1);
    let mut images: Vec<Vec<Scalar>> = p0
        .tops
        .iter()
        .map(|&t| vec![f.zero(); q1.module.dimv[t]])
        .collect();
    if let Some(p1) = r.proj.get(1) {
        let d = &r.maps[1];
        for (l, &u) in tops1.iter().enumerate() {
            let (_, pos) = p1.generator(l);
            let v = d.blocks[u].col(pos);
            for (k, &t) in p0.tops.iter().enumerate() {
                let start: usize = (0..l).map(|i| aop.block(tops1[i], t).len()).sum();
                let inside = aop.block(u, t);
                for (b, c) in p0.component(u, &v, k) {
                    let at = inside
                        .iter()
                        .position(|&x| x == b)
                        .expect("component lies in the Peirce block");
                    images[k][start + at] = c;
                }
            }
        }
    }
    let dstar = q0.map_from_generators(&q1.module, &images);
    cokernel(&dstar).module
}

/// `tau = D Tr`; projective summands contribute nothing.
pub fn tau(m: &Module) -> Module {
    dual(&transpose(m))
}

/// `tau^- = Tr D`; injective summands contribute nothing.
pub fn tau_inv(m: &Module) -> Module {
    transpose(&dual(m))
}

/// `tau_n = tau Omega^{n-1}`.
pub fn tau_n(m: &Module, n: usize, seed: u64) -> Result<Module> {
    if n == 0 {
        return Err(Error::Precondition("tau_n needs n >= 1".into()));
    }
    Ok(tau(&syzygy(m, n - 1, seed)?))
}

/// `tau_n^- = tau^- Omega^{-(n-1)}`.
pub fn tau_n_inv(m: &Module, n: usize, seed: u64) -> Result<Module> {
    if n == 0 {
        return Err(Error::Precondition("tau_n needs n >= 1".into()));
    }
    Ok(tau_inv(&cosyzygy(m, n - 1, seed)?))
}
