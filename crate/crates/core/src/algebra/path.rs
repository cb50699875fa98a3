use std::collections::{HashMap, VecDeque};

use super::{sparse_from_dense, FDAlgebra, Origin, Sparse};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar, Subspace};

/// Paths beyond this count abort the length iteration.
const PATH_LIMIT: usize = 60_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from labels; arrows are (name, source label, target label).
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let vertices: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let pos = |l: &str| {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::Input(format!("arrow endpoint {l:?} is not a vertex")))
        };
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Input(format!("duplicate vertex label {v:?}")));
            }
        }
        let mut out = Vec::new();
        for &(n, s, t) in arrows {
            if out.iter().any(|a: &Arrow| a.name == n) || vertices.iter().any(|v| v == n) {
                return Err(Error::Input(format!("duplicate arrow name {n:?}")));
            }
            out.push(Arrow {
                name: n.to_string(),
                source: pos(s)?,
                target: pos(t)?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A linear combination of paths; each path lists arrow names in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathExpr {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

impl PathExpr {
    pub fn new(terms: Vec<(Scalar, Vec<String>)>) -> PathExpr {
        PathExpr { terms }
    }

    /// A single path with coefficient one.
    pub fn path(field: FieldSpec, arrows: &[&str]) -> PathExpr {
        PathExpr {
            terms: vec![(field.one(), arrows.iter().map(|s| s.to_string()).collect())],
        }
    }

    /// Difference of two paths.
    pub fn commutativity(field: FieldSpec, p: &[&str], q: &[&str]) -> PathExpr {
        PathExpr {
            terms: vec![
                (field.one(), p.iter().map(|s| s.to_string()).collect()),
                (field.int(-1), q.iter().map(|s| s.to_string()).collect()),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

fn resolve_relation(q: &Quiver, r: &PathExpr) -> Result<Vec<(Scalar, Path)>> {
    let mut out = Vec::new();
    let mut ends: Option<(usize, usize)> = None;
    for (c, names) in &r.terms {
        if names.len() < 2 {
            return Err(Error::BadRelation(format!("term {names:?} has length < 2")));
        }
        let mut arrows = Vec::new();
        for n in names {
            arrows.push(
                q.arrow_index(n)
                    .ok_or_else(|| Error::BadRelation(format!("unknown arrow {n:?}")))?,
            );
        }
        for w in arrows.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return Err(Error::BadRelation(format!(
                    "path {names:?} is not composable"
                )));
            }
        }
        let p = Path {
            source: q.arrows[arrows[0]].source,
            target: q.arrows[*arrows.last().unwrap()].target,
            arrows,
        };
        match ends {
            None => ends = Some((p.source, p.target)),
            Some(e) if e != (p.source, p.target) => {
                return Err(Error::BadRelation(
                    "relation mixes sources or targets".into(),
                ));
            }
            _ => {}
        }
        out.push((c.clone(), p));
    }
    if out.is_empty() {
        return Err(Error::BadRelation("empty relation".into()));
    }
    Ok(out)
}

/// All paths of length <= n, longest first within the returned order.
fn enumerate_paths(q: &Quiver, n: usize) -> Result<Vec<Path>> {
    let mut layers: Vec<Vec<Path>> = vec![(0..q.vertices.len())
        .map(|v| Path {
            source: v,
            target: v,
            arrows: vec![],
        })
        .collect()];
    let mut total = layers[0].len();
    for _ in 0..n {
        let mut next = Vec::new();
        for p in layers.last().unwrap() {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        total += next.len();
        if total > PATH_LIMIT {
            return Err(Error::NotAdmissible(format!(
                "more than {PATH_LIMIT} paths of length <= {n}"
            )));
        }
        layers.push(next);
    }
    Ok(layers.into_iter().rev().flatten().collect())
}

fn concat(a: &Path, b: &Path) -> Option<Path> {
    if a.target != b.source {
        return None;
    }
    let mut arrows = a.arrows.clone();
    arrows.extend(&b.arrows);
    Some(Path {
        source: a.source,
        target: b.target,
        arrows,
    })
}

/// Path algebra of `q` modulo the ideal generated by `rels`.
///
/// The ideal is closed under multiplication by arrows inside the truncation
/// kQ / J^(N+1) for N = 1, 2, ...; the first N at which every path of length N
/// lies in the ideal fixes the quotient.
pub fn build_path_algebra(
    field: FieldSpec,
    q: &Quiver,
    rels: &[PathExpr],
    length_cap: usize,
) -> Result<FDAlgebra> {
    let rels: Vec<Vec<(Scalar, Path)>> = rels
        .iter()
        .map(|r| resolve_relation(q, r))
        .collect::<Result<_>>()?;
    let max_len = rels
        .iter()
        .flat_map(|r| r.iter().map(|(_, p)| p.arrows.len()))
        .max()
        .unwrap_or(1);
    for n in max_len.max(1)..=length_cap {
        let paths = enumerate_paths(q, n)?;
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let dimv = paths.len();
        let to_vec = |terms: &[(Scalar, Path)]| {
            let mut v = vec![field.zero(); dimv];
            for (c, p) in terms {
                if let Some(&i) = index.get(p) {
                    v[i] = &v[i] + c;
                }
            }
            v
        };
        let mut ideal = Subspace::new(field, dimv);
        let mut queue: VecDeque<Vec<Scalar>> = rels.iter().map(|r| to_vec(r)).collect();
        while let Some(v) = queue.pop_front() {
            if !ideal.insert(v.clone()) {
                continue;
            }
            let terms: Vec<(Scalar, &Path)> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), &paths[i]))
                .collect();
            for (ai, a) in q.arrows.iter().enumerate() {
                let ap = Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![ai],
                };
                let pre: Vec<(Scalar, Path)> = terms
                    .iter()
                    .filter_map(|(c, p)| concat(&ap, p).map(|x| (c.clone(), x)))
                    .collect();
                let post: Vec<(Scalar, Path)> = terms
                    .iter()
                    .filter_map(|(c, p)| concat(p, &ap).map(|x| (c.clone(), x)))
                    .collect();
                for t in [pre, post] {
                    let w = to_vec(&t);
                    if w.iter().any(|x| !x.is_zero()) {
                        queue.push_back(w);
                    }
                }
            }
        }
        let top_layer_done = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.arrows.len() == n)
            .all(|(i, _)| {
                let mut e = vec![field.zero(); dimv];
                e[i] = field.one();
                ideal.contains(&e)
            });
        if !top_layer_done {
            continue;
        }
        return assemble(field, q, &paths, &index, &ideal, n);
    }
    Err(Error::NotAdmissible(format!(
        "paths of length {length_cap} survive the relations"
    )))
}

fn assemble(
    field: FieldSpec,
    q: &Quiver,
    paths: &[Path],
    index: &HashMap<&Path, usize>,
    ideal: &Subspace,
    n: usize,
) -> Result<FDAlgebra> {
    let mut basis: Vec<usize> = ideal.complement_indices();
    basis.sort_by(|&a, &b| {
        let (pa, pb) = (&paths[a], &paths[b]);
        (
            pa.arrows.len(),
            if pa.arrows.is_empty() { pa.source } else { 0 },
            &pa.arrows,
        )
            .cmp(&(
                pb.arrows.len(),
                if pb.arrows.is_empty() { pb.source } else { 0 },
                &pb.arrows,
            ))
    });
    let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let dim = basis.len();
    let label = |p: &Path| {
        if p.arrows.is_empty() {
            format!("e_{}", q.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("")
        }
    };
    let labels: Vec<String> = basis.iter().map(|&i| label(&paths[i])).collect();
    let peirce: Vec<(usize, usize)> = basis
        .iter()
        .map(|&i| (paths[i].source, paths[i].target))
        .collect();
    let idem: Vec<usize> = (0..q.vertices.len())
        .map(|v| {
            let p = Path {
                source: v,
                target: v,
                arrows: vec![],
            };
            pos[&index[&p]]
        })
        .collect();
    let mut mult: Vec<Sparse> = vec![Vec::new(); dim * dim];
    for (i, &pi) in basis.iter().enumerate() {
        for (j, &pj) in basis.iter().enumerate() {
            // b_i * b_j: first b_j, then b_i
            let Some(c) = concat(&paths[pj], &paths[pi]) else {
                continue;
            };
            if c.arrows.len() >= n {
                continue;
            }
            let mut v = vec![field.zero(); paths.len()];
            v[index[&c]] = field.one();
            let r = ideal.reduce(v);
            let mut s: Sparse = sparse_from_dense(&r)
                .into_iter()
                .map(|(k, x)| (pos[&k], x))
                .collect();
            s.sort_by_key(|(k, _)| *k);
            mult[i * dim + j] = s;
        }
    }
    FDAlgebra::new(
        field,
        q.vertices.clone(),
        labels,
        idem,
        peirce,
        mult,
        Origin::PathAlgebra,
    )
}
