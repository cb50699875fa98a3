use std::sync::Arc;

use auslander::algebra::{op, Alg};
use auslander::corpus::*;
use auslander::correspond::end_algebra;
use auslander::exactlin::{FieldSpec, Matrix};
use auslander::homology::*;
use auslander::modrep::*;

const Q: FieldSpec = FieldSpec::Rationals;
const CAP: usize = 8;

fn isomorphic(x: &Module, y: &Module) -> bool {
    iso(x, y, 0).unwrap().is_some()
}

/// Interval module over a linearly oriented A_n supported on vertices lo..=hi.
fn interval(a: &Alg, lo: usize, hi: usize) -> Module {
    let dimv: Vec<usize> = (0..a.n_vertices())
        .map(|v| usize::from(lo <= v && v <= hi))
        .collect();
    let gens: Vec<(usize, Matrix)> = a
        .generators()
        .iter()
        .filter(|&&g| {
            let (s, t) = a.peirce[g];
            dimv[s] == 1 && dimv[t] == 1
        })
        .map(|&g| (g, Matrix::from_i64(a.field, &[&[1]])))
        .collect();
    Module::from_generators(a.clone(), dimv, &gens).unwrap()
}

fn all_intervals(a: &Alg) -> Vec<Module> {
    let n = a.n_vertices();
    (0..n)
        .flat_map(|lo| (lo..n).map(move |hi| (lo, hi)))
        .map(|(lo, hi)| interval(a, lo, hi))
        .collect()
}

fn auslander_dual_numbers() -> Alg {
    let d = Arc::new(dual_numbers(Q));
    end_algebra(&[regular_module(&d), simple_module(&d, 0)], 0)
        .unwrap()
        .alg
}

fn auslander_a2() -> Alg {
    let a = Arc::new(linear_a(Q, 2));
    end_algebra(&all_intervals(&a), 0).unwrap().alg
}

#[test]
fn ext_examples() {
    let a = Arc::new(linear_a(Q, 2));
    let (s1, s2) = (simple_module(&a, 0), simple_module(&a, 1));
    assert_eq!(ext_dim(&s1, &s2, 1, CAP).unwrap(), 1);
    assert_eq!(ext_dim(&s2, &s1, 1, CAP).unwrap(), 0);
    let ss = Arc::new(semisimple(Q, 3));
    for i in 0..3 {
        for j in 0..3 {
            let t = ExtTable::new(&simple_module(&ss, i), &simple_module(&ss, j), 4);
            assert!(t.vanishes(1, 4));
            assert_eq!(t.dims[0], usize::from(i == j));
        }
    }
    let p = Arc::new(preprojective_a(Q, 2));
    let (s1, s2) = (simple_module(&p, 0), simple_module(&p, 1));
    assert_eq!(ext_dim(&s1, &s2, 1, CAP).unwrap(), 1);
    assert_eq!(ext_dim(&s1, &s1, 1, CAP).unwrap(), 0);
    assert!(ext_dim(&s1, &s2, 3, 2).is_err());
}

#[test]
fn projective_and_injective_dimensions() {
    let a = Arc::new(linear_a(Q, 2));
    assert_eq!(pd(&projective_module(&a, 0), CAP), Dim::Exact(0));
    assert_eq!(pd(&simple_module(&a, 0), CAP), Dim::Exact(1));
    assert_eq!(id(&simple_module(&a, 1), CAP), Dim::Exact(1));
    assert_eq!(id(&injective_module(&a, 1), CAP), Dim::Exact(0));
    let d = Arc::new(dual_numbers(Q));
    assert_eq!(pd(&simple_module(&d, 0), CAP), Dim::AtLeast(CAP + 1));
}

#[test]
fn global_dimensions() {
    assert_eq!(gldim(&Arc::new(semisimple(Q, 2)), CAP), Dim::Exact(0));
    assert_eq!(gldim(&Arc::new(linear_a(Q, 2)), CAP), Dim::Exact(1));
    assert_eq!(gldim(&Arc::new(linear_a(Q, 4)), CAP), Dim::Exact(1));
    assert_eq!(gldim(&auslander_dual_numbers(), CAP), Dim::Exact(2));
    assert_eq!(gldim(&auslander_a2(), CAP), Dim::Exact(2));
    assert_eq!(
        gldim(&Arc::new(preprojective_a(Q, 2)), CAP),
        Dim::AtLeast(CAP + 1)
    );
    for a in [
        auslander_dual_numbers(),
        auslander_a2(),
        Arc::new(linear_a(Q, 3)),
    ] {
        assert_eq!(gldim(&a, CAP), gldim(&op(&a), CAP));
    }
}

#[test]
fn dominant_dimensions() {
    assert_eq!(
        domdim(&Arc::new(preprojective_a(Q, 2)), CAP),
        Dim::AtLeast(CAP + 1)
    );
    assert_eq!(domdim(&Arc::new(linear_a(Q, 2)), CAP), Dim::Exact(1));
    assert_eq!(domdim(&auslander_dual_numbers(), CAP), Dim::Exact(2));
    assert_eq!(domdim(&auslander_a2(), CAP), Dim::Exact(2));
}

#[test]
fn mn_conditions() {
    let algs = [
        Arc::new(linear_a(Q, 2)),
        auslander_dual_numbers(),
        auslander_a2(),
    ];
    for a in &algs {
        let dd = domdim(a, CAP);
        for n in 1..=4 {
            let v = mn_condition(a, 1, n, CAP).unwrap();
            assert_eq!(v, Verdict::from(dd.at_least(n)), "(1,{n})");
        }
    }
    assert_eq!(
        two_sided_mn(&auslander_dual_numbers(), 1, 2, CAP).unwrap(),
        Verdict::True
    );
    assert_eq!(mn_condition(&algs[0], 1, 2, CAP).unwrap(), Verdict::False);
    assert!(mn_condition(&algs[0], 0, 2, CAP).is_err());
}

#[test]
fn gorenstein_conditions() {
    let p = Arc::new(preprojective_a(Q, 2));
    for n in 1..=5 {
        assert_eq!(n_gorenstein(&p, n, CAP), Verdict::True);
    }
    let a = Arc::new(linear_a(Q, 2));
    assert_eq!(n_gorenstein(&a, 1, CAP), Verdict::True);
    assert_eq!(n_gorenstein(&a, 2, CAP), Verdict::True);
    for g in [auslander_dual_numbers(), auslander_a2(), a] {
        let dd = domdim(&g, CAP);
        for n in 1..=4 {
            if dd.at_least(n) == Some(true) {
                assert_eq!(n_gorenstein(&g, n, CAP), Verdict::True);
            }
        }
    }
}

#[test]
fn grades() {
    let a = Arc::new(linear_a(Q, 2));
    assert_eq!(grade(&projective_module(&a, 1), CAP), Dim::Exact(0));
    assert_eq!(grade(&simple_module(&a, 0), CAP), Dim::Exact(1));
    // vertex 1 of the Auslander algebra is the simple k[x]/(x^2)-module
    let g = auslander_dual_numbers();
    assert_eq!(grade(&simple_module(&g, 1), CAP), Dim::Exact(2));
    assert_eq!(pd(&simple_module(&g, 1), CAP), Dim::Exact(2));
}

#[test]
fn transposes() {
    let a = Arc::new(linear_a(Q, 2));
    assert!(transpose(&projective_module(&a, 0)).is_zero());
    let t = transpose(&simple_module(&a, 0));
    assert_eq!(t.dim(), 1);
    assert!(Arc::ptr_eq(&t.alg, &op(&a)));
    t.verify().unwrap();
    let p = Arc::new(preprojective_a(Q, 2));
    let a3 = Arc::new(linear_a(Q, 3));
    for m in all_intervals(&a3)
        .into_iter()
        .chain([simple_module(&p, 0), simple_module(&p, 1)])
    {
        let tt = transpose(&transpose(&m));
        assert!(isomorphic(&tt, &stabilize(&m, 0).unwrap()));
    }
}

#[test]
fn translates() {
    let a = Arc::new(linear_a(Q, 2));
    assert!(tau(&projective_module(&a, 0)).is_zero());
    assert!(tau(&projective_module(&a, 1)).is_zero());
    assert!(isomorphic(
        &tau(&simple_module(&a, 0)),
        &simple_module(&a, 1)
    ));
    assert!(isomorphic(
        &tau_inv(&simple_module(&a, 1)),
        &simple_module(&a, 0)
    ));
    let p = Arc::new(preprojective_a(Q, 2));
    let (s1, s2) = (simple_module(&p, 0), simple_module(&p, 1));
    assert!(isomorphic(&tau(&s1), &s2));
    assert!(isomorphic(&tau_n(&s1, 2, 0).unwrap(), &s1));
    assert!(tau_n(&projective_module(&p, 0), 2, 0).unwrap().is_zero());
    assert!(isomorphic(&tau_n_inv(&s1, 2, 0).unwrap(), &s1));
    let a3 = Arc::new(linear_a(Q, 3));
    for m in all_intervals(&a3).into_iter().chain([s1, s2]) {
        assert_eq!(tau_n(&m, 1, 0).unwrap(), tau(&m));
        let back = tau(&tau_inv(&m));
        assert!(isomorphic(&back, &stabilize_injective(&m, 0).unwrap()));
    }
}

#[test]
fn stable_homs() {
    let p = Arc::new(preprojective_a(Q, 2));
    let s1 = simple_module(&p, 0);
    assert_eq!(stable_hom_dim(&projective_module(&p, 0), &s1), 0);
    assert_eq!(stable_hom_dim(&s1, &s1), 1);
    for (x, y) in [(0, 1), (1, 0), (0, 0)] {
        let (sx, sy) = (simple_module(&p, x), simple_module(&p, y));
        let om = syzygy(&sx, 1, 0).unwrap();
        assert_eq!(ext_dim(&sx, &sy, 1, CAP).unwrap(), stable_hom_dim(&om, &sy));
    }
}

#[test]
fn ar_duality_on_small_algebras() {
    let p = Arc::new(preprojective_a(Q, 2));
    let pmods = vec![
        projective_module(&p, 0),
        projective_module(&p, 1),
        simple_module(&p, 0),
        simple_module(&p, 1),
    ];
    let a3 = Arc::new(linear_a(Q, 3));
    for mods in [pmods, all_intervals(&a3)] {
        for x in &mods {
            for y in &mods {
                let e = ext_dim(x, y, 1, CAP).unwrap();
                assert_eq!(e, costable_hom_dim(y, &tau(x), None));
                assert_eq!(e, stable_hom_dim(&tau_inv(y), x));
                for i in 0..3 {
                    assert_eq!(ext_dim(x, y, i, CAP).unwrap(), ext_dim_injective(x, y, i));
                }
            }
        }
    }
}

#[test]
fn dimension_report() {
    let r = dim_report(&Arc::new(linear_a(Q, 2)), 2, 2, CAP).unwrap();
    assert_eq!(
        (r.gldim, r.domdim, r.domdim_op),
        (Dim::Exact(1), Dim::Exact(1), Dim::Exact(1))
    );
    assert_eq!(r.mn_table.len(), 4);
    assert_eq!(r.mn_table[0], ((1, 1), Verdict::True));
    assert_eq!(r.mn_table[1], ((1, 2), Verdict::False));
    let r = dim_report(&Arc::new(preprojective_a(Q, 2)), 1, 1, CAP).unwrap();
    assert_eq!(r.gorenstein_profile, Dim::AtLeast(CAP + 1));
}
