use std::collections::VecDeque;

use super::{almost_split_sequence, same_indecomposable};
use crate::algebra::Alg;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::homology::{tau, tau_inv};
use crate::modrep::{
    decompose, injective_module, is_indecomposable, is_injective, is_projective, projective_module,
    radical_of_module, simple_module, Module,
};

/// A list of indecomposables up to isomorphism, flagged complete when the search closed within its caps.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub modules: Vec<Module>,
    pub complete: bool,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn position(&self, x: &Module) -> Option<usize> {
        self.modules.iter().position(|m| same_indecomposable(m, x))
    }
}

/// Closure of the indecomposable projectives, injectives, simples and radical summands under `tau`, `tau^-`
/// and middle terms of almost split sequences.
pub fn knit_indecomposables(
    a: &Alg,
    cap_count: usize,
    cap_dim: usize,
    seed: u64,
) -> Result<Enumeration> {
    let mut found: Vec<Module> = Vec::new();
    let mut queue: VecDeque<Module> = VecDeque::new();
    let mut complete = true;
    let offer =
        |m: Module, found: &mut Vec<Module>, queue: &mut VecDeque<Module>, complete: &mut bool| {
            if m.is_zero() || found.iter().any(|f| same_indecomposable(f, &m)) {
                return;
            }
            if m.dim() > cap_dim || found.len() >= cap_count {
                *complete = false;
                return;
            }
            found.push(m.clone());
            queue.push_back(m);
        };
    // simples and radicals are needed when projective-injectives would stop the knitting
    for v in 0..a.n_vertices() {
        let p = projective_module(a, v);
        offer(simple_module(a, v), &mut found, &mut queue, &mut complete);
        offer(
            injective_module(a, v),
            &mut found,
            &mut queue,
            &mut complete,
        );
        let r = radical_of_module(&p).module;
        if !r.is_zero() {
            for part in decompose(&r, seed)?.parts {
                offer(part, &mut found, &mut queue, &mut complete);
            }
        }
        offer(p, &mut found, &mut queue, &mut complete);
    }
    while let Some(x) = queue.pop_front() {
        if !is_projective(&x) {
            offer(tau(&x), &mut found, &mut queue, &mut complete);
            let seq = almost_split_sequence(&x, seed)?;
            for part in decompose(&seq.terms[1], seed)?.parts {
                offer(part, &mut found, &mut queue, &mut complete);
            }
        }
        if !is_injective(&x) {
            offer(tau_inv(&x), &mut found, &mut queue, &mut complete);
        }
    }
    Ok(Enumeration {
        modules: found,
        complete,
    })
}

/// Largest number of action-matrix tuples examined per dimension vector.
const BRUTE_LIMIT: u64 = 1 << 20;

/// Every representation of total dimension at most `dim_cap` over a tiny prime
/// field, grouped into isomorphism classes of indecomposables.
pub fn brute_indecomposables(a: &Alg, dim_cap: usize, seed: u64) -> Result<Vec<Module>> {
    let field = a.field;
    let elems = field
        .elements()
        .ok_or_else(|| Error::Precondition("brute enumeration needs a prime field".into()))?;
    let q = elems.len() as u64;
    let n = a.n_vertices();
    let gens = a.generators().to_vec();
    let mut found: Vec<Module> = Vec::new();
    for dimv in dim_vectors(n, dim_cap) {
        let shapes: Vec<(usize, usize)> = gens
            .iter()
            .map(|&g| (dimv[a.target(g)], dimv[a.source(g)]))
            .collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let total = q
            .checked_pow(entries as u32)
            .filter(|&t| t <= BRUTE_LIMIT)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "{q}^{entries} representations for dimension vector {dimv:?}"
                ))
            })?;
        for code in 0..total {
            let mut c = code;
            let mut digits: Vec<Scalar> = Vec::with_capacity(entries);
            for _ in 0..entries {
                digits.push(elems[(c % q) as usize].clone());
                c /= q;
            }
            let mut at = 0;
            let action: Vec<(usize, Matrix)> = gens
                .iter()
                .zip(&shapes)
                .map(|(&g, &(r, cl))| {
                    let m = Matrix::from_vec(field, r, cl, digits[at..at + r * cl].to_vec());
                    at += r * cl;
                    (g, m)
                })
                .collect();
            let Ok(m) = Module::from_generators(a.clone(), dimv.clone(), &action) else {
                continue;
            };
            if found.iter().any(|f| same_indecomposable(f, &m)) || !is_indecomposable(&m, seed)? {
                continue;
            }
            found.push(m);
        }
    }
    Ok(found)
}

/// Nonzero dimension vectors with entry sum at most `cap`.
fn dim_vectors(n: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            if cur.iter().any(|&d| d > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for d in 0..=left {
            cur[i] = d;
            rec(i + 1, left - d, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, cap, &mut cur, &mut out);
    out.sort_by_key(|v| v.iter().sum::<usize>());
    out
}
