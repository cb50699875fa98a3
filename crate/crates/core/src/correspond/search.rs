use crate::algebra::Alg;
use crate::error::{Error, Result};
use crate::homology::gldim;
use crate::modrep::{injective_module, projective_module, Dim, Module};
use crate::orthocat::{Enumeration, OrthoTable};

use super::end_algebra;

/// Largest number of free indecomposables the repdim search will range over.
const MAX_FREE: usize = 20;

/// Value of a search objective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Value(usize),
    /// Every feasible candidate hit the cap.
    AtLeastCap(usize),
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub objective: Objective,
    /// Indices into the enumeration of an optimal candidate.
    pub witness: Option<Vec<usize>>,
    pub candidates: usize,
    /// Feasible candidates whose value was only bounded below.
    pub capped: usize,
    pub cap: usize,
}

fn position(ind: &Enumeration, x: &Module) -> Result<usize> {
    ind.position(x).ok_or_else(|| {
        Error::Internal("projective or injective missing from a complete enumeration".into())
    })
}

/// `rep.dim_n Λ`: least `gl.dim End(M)` over (n-1)-orthogonal M containing `Λ + DΛ`,
/// exhaustively over sums of the enumerated indecomposables.
pub fn repdim_search(
    lambda: &Alg,
    n: usize,
    ind: &Enumeration,
    cap: usize,
    seed: u64,
) -> Result<SearchReport> {
    if !ind.complete {
        return Err(Error::IncompleteEnumeration);
    }
    if n == 0 {
        return Err(Error::Precondition("rep.dim_n needs n >= 1".into()));
    }
    let mut forced = Vec::new();
    for v in 0..lambda.n_vertices() {
        for x in [projective_module(lambda, v), injective_module(lambda, v)] {
            let i = position(ind, &x)?;
            if !forced.contains(&i) {
                forced.push(i);
            }
        }
    }
    let free: Vec<usize> = (0..ind.len()).filter(|i| !forced.contains(i)).collect();
    if free.len() > MAX_FREE {
        return Err(Error::Precondition(format!(
            "{} free indecomposables exceed the search limit",
            free.len()
        )));
    }
    let table = OrthoTable::new(&ind.modules, n - 1);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let (mut candidates, mut capped) = (0, 0);
    for mask in 0u32..(1 << free.len()) {
        let mut set = forced.clone();
        set.extend(
            (0..free.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| free[b]),
        );
        set.sort_unstable();
        if table.ortho_witness(&set).is_some() {
            continue;
        }
        candidates += 1;
        let mods: Vec<Module> = set.iter().map(|&i| ind.modules[i].clone()).collect();
        match gldim(&end_algebra(&mods, seed)?.alg, cap) {
            Dim::Exact(g) => {
                if best.as_ref().is_none_or(|(b, _)| g < *b) {
                    best = Some((g, set));
                }
            }
            Dim::AtLeast(_) => capped += 1,
        }
    }
    let (objective, witness) = match best {
        Some((g, w)) => (Objective::Value(g), Some(w)),
        None if candidates > 0 => (Objective::AtLeastCap(cap + 1), None),
        None => (Objective::Infeasible, None),
    };
    Ok(SearchReport {
        objective,
        witness,
        candidates,
        capped,
        cap,
    })
}

/// `o(B)`: largest 1-orthogonal family of indecomposables, as a maximum clique in the
/// graph of self-orthogonal objects joined when Ext^1 vanishes both ways.
pub fn o_bound(ind: &Enumeration) -> Result<SearchReport> {
    if !ind.complete {
        return Err(Error::IncompleteEnumeration);
    }
    let table = OrthoTable::new(&ind.modules, 1);
    let verts: Vec<usize> = (0..ind.len()).filter(|&i| table.orth(i, i)).collect();
    let k = verts.len();
    let adj: Vec<Vec<bool>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| a != b && table.orth(verts[a], verts[b]) && table.orth(verts[b], verts[a]))
                .collect()
        })
        .collect();
    // high degree first
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&a| std::cmp::Reverse(adj[a].iter().filter(|&&x| x).count()));
    let mut best = Vec::new();
    let mut explored = 0;
    clique(&adj, &mut Vec::new(), order, &mut best, &mut explored);
    let mut witness: Vec<usize> = best.iter().map(|&a| verts[a]).collect();
    witness.sort_unstable();
    Ok(SearchReport {
        objective: Objective::Value(witness.len()),
        witness: Some(witness),
        candidates: explored,
        capped: 0,
        cap: 1,
    })
}

fn clique(
    adj: &[Vec<bool>],
    cur: &mut Vec<usize>,
    cand: Vec<usize>,
    best: &mut Vec<usize>,
    explored: &mut usize,
) {
    *explored += 1;
    if cand.is_empty() {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    for (i, &v) in cand.iter().enumerate() {
        if cur.len() + cand.len() - i <= best.len() {
            return;
        }
        cur.push(v);
        let next: Vec<usize> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| adj[v][w])
            .collect();
        clique(adj, cur, next, best, explored);
        cur.pop();
    }
}
