use std::sync::Arc;

use auslander::algebra::Alg;
use auslander::corpus::*;
use auslander::exactlin::{FieldSpec, Matrix};
use auslander::homology::{tau_n, Verdict};
use auslander::modrep::*;
use auslander::orthocat::*;

const Q: FieldSpec = FieldSpec::Rationals;
const F2: FieldSpec = FieldSpec::PrimeField(2);
const CAP: usize = 8;

fn isomorphic(x: &Module, y: &Module) -> bool {
    iso(x, y, 0).unwrap().is_some()
}

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

fn pp2() -> Alg {
    Arc::new(preprojective_a(Q, 2))
}

/// P1, P2, S1, S2 over preprojective A_2.
fn pp2_indecs(p: &Alg) -> Vec<Module> {
    vec![
        projective_module(p, 0),
        projective_module(p, 1),
        simple_module(p, 0),
        simple_module(p, 1),
    ]
}

fn sub(mods: &[Module]) -> Subcat {
    Subcat::new(mods, 0).unwrap()
}

#[test]
fn orthogonality() {
    let p = pp2();
    let all = pp2_indecs(&p);
    for l in 0..4 {
        assert!(ortho_check(&sub(&[regular_module(&p)]), l).verdict);
    }
    let r = ortho_check(&sub(&all), 1);
    assert!(!r.verdict);
    let (x, y, k) = r.witness.unwrap();
    assert!(isomorphic(&x, &all[2]) && isomorphic(&y, &all[3]));
    assert_eq!(k, 1);
    assert!(ortho_check(&sub(&all[..3]), 1).verdict);
}

#[test]
fn cotilting_certificates() {
    let a = Arc::new(linear_a(Q, 2));
    assert_eq!(
        is_cotilting(&dual_regular(&a), 0, CAP, 0).unwrap().valid,
        Verdict::True
    );
    assert_eq!(
        is_cotilting(&regular_module(&a), 1, CAP, 0).unwrap().valid,
        Verdict::True
    );
    let a3 = Arc::new(linear_a(Q, 3));
    assert_eq!(
        is_cotilting(&regular_module(&a3), 1, CAP, 0).unwrap().valid,
        Verdict::True
    );
    let s1 = simple_module(&a, 0);
    assert!(is_injective(&s1));
    let c = is_cotilting(&s1, 1, CAP, 0).unwrap();
    assert_eq!(c.valid, Verdict::False);
    assert!(!c.coresolution_ok);
    let p = pp2();
    assert_eq!(
        is_cotilting(&regular_module(&p), 0, CAP, 0).unwrap().valid,
        Verdict::True
    );
}

#[test]
fn left_perpendicular() {
    let a = Arc::new(linear_a(Q, 2));
    let p2 = projective_module(&a, 1);
    assert!(!in_perp_t(&simple_module(&a, 0), &p2, 1, CAP).unwrap());
    assert!(in_perp_t(&regular_module(&a), &p2, 1, CAP).unwrap());
    assert!(in_perp_t(&simple_module(&a, 1), &dual_regular(&a), 0, CAP).unwrap());
    assert!(in_perp_t(&simple_module(&a, 0), &p2, 0, CAP).is_err());
}

#[test]
fn enumeration() {
    let counts = [
        (Arc::new(linear_a(Q, 2)), 3),
        (Arc::new(linear_a(Q, 3)), 6),
        (pp2(), 4),
        (Arc::new(semisimple(Q, 2)), 2),
    ];
    for (a, k) in &counts {
        let e = knit_indecomposables(a, 50, 20, 0).unwrap();
        assert!(e.complete);
        assert_eq!(e.len(), *k);
    }
    let capped = knit_indecomposables(&Arc::new(linear_a(Q, 3)), 4, 20, 0).unwrap();
    assert!(!capped.complete);
    assert_eq!(
        brute_indecomposables(&Arc::new(linear_a(F2, 2)), 3, 0)
            .unwrap()
            .len(),
        3
    );
    assert_eq!(
        brute_indecomposables(&Arc::new(semisimple(F2, 2)), 2, 0)
            .unwrap()
            .len(),
        2
    );
    assert_eq!(
        brute_indecomposables(&Arc::new(preprojective_a(F2, 2)), 4, 0)
            .unwrap()
            .len(),
        4
    );
    let knit = knit_indecomposables(&Arc::new(linear_a(F2, 3)), 50, 20, 0).unwrap();
    let brute = brute_indecomposables(&Arc::new(linear_a(F2, 3)), 3, 0).unwrap();
    assert_eq!(brute.len(), 6);
    assert!(brute.iter().all(|m| knit.position(m).is_some()));
}

#[test]
fn enumerative_maximality() {
    let a = Arc::new(linear_a(Q, 2));
    let ind = knit_indecomposables(&a, 50, 20, 0).unwrap();
    assert!(
        maximal_ortho_enumerative(&sub(&ind.modules), 1, &ind)
            .unwrap()
            .verdict
    );
    let p = pp2();
    let ind = knit_indecomposables(&p, 50, 20, 0).unwrap();
    let all = pp2_indecs(&p);
    assert!(
        maximal_ortho_enumerative(&sub(&all[..3]), 2, &ind)
            .unwrap()
            .verdict
    );
    let r = maximal_ortho_enumerative(&sub(&all[..2]), 2, &ind).unwrap();
    assert!(!r.verdict);
    match r.witness.unwrap() {
        Refutation::Missing { z, .. } => assert!(isomorphic(&z, &all[2])),
        other => panic!("unexpected witness {other:?}"),
    }
    let capped = Enumeration {
        modules: ind.modules.clone(),
        complete: false,
    };
    assert!(matches!(
        maximal_ortho_enumerative(&sub(&all[..3]), 2, &capped),
        Err(auslander::error::Error::IncompleteEnumeration)
    ));
}

#[test]
fn maximal_orthogonal_pairs_have_equal_size() {
    let p = pp2();
    let ind = knit_indecomposables(&p, 50, 20, 0).unwrap();
    let table = OrthoTable::new(&ind.modules, 1);
    let universe: Vec<usize> = (0..ind.len()).collect();
    let maxes = table.maximal_subsets(&universe);
    assert_eq!(maxes.len(), 2);
    assert!(maxes.iter().all(|s| s.len() == 3));
}

#[test]
fn homological_maximality() {
    let a3 = Arc::new(linear_a(Q, 3));
    let c = sub(&all_intervals(&a3));
    let v = maximal_ortho_homological(&c, &dual_regular(&a3), 0, 1, CAP, 0).unwrap();
    assert_eq!(v.verdict, Verdict::True);
    assert_eq!(v.gldim, Some(Dim::Exact(2)));
    let p = pp2();
    let all = pp2_indecs(&p);
    let v = maximal_ortho_homological(&sub(&all[..3]), &dual_regular(&p), 0, 2, CAP, 0).unwrap();
    assert_eq!(v.verdict, Verdict::True);
    assert!(v.gldim.unwrap().at_most(3) == Some(true));
    let a = Arc::new(linear_a(Q, 2));
    let v = maximal_ortho_homological(&sub(&[regular_module(&a)]), &dual_regular(&a), 0, 1, CAP, 0)
        .unwrap();
    assert_eq!(v.verdict, Verdict::False);
    // with T = Λ the category B = ^⊥Λ is add Λ itself
    let v = maximal_ortho_homological(
        &sub(&[regular_module(&a)]),
        &regular_module(&a),
        1,
        1,
        CAP,
        0,
    )
    .unwrap();
    assert_eq!(v.verdict, Verdict::True);
    let ind = knit_indecomposables(&a, 50, 20, 0).unwrap();
    let lam = regular_module(&a);
    let in_b: Vec<Module> = ind
        .modules
        .iter()
        .filter(|x| in_perp_t(x, &lam, 1, CAP).unwrap())
        .cloned()
        .collect();
    let b = Enumeration {
        modules: in_b,
        complete: true,
    };
    assert_eq!(b.len(), 2);
    assert!(
        maximal_ortho_enumerative(&sub(&[lam]), 1, &b)
            .unwrap()
            .verdict
    );
    let v = maximal_ortho_homological(&sub(&all), &dual_regular(&p), 0, 2, CAP, 0).unwrap();
    assert_eq!(v.verdict, Verdict::False);
    assert!(v.precondition.is_some());
}

#[test]
fn homological_agrees_with_enumerative() {
    let p = pp2();
    let ind = knit_indecomposables(&p, 50, 20, 0).unwrap();
    let projs = [projective_module(&p, 0), projective_module(&p, 1)];
    for mask in 0u32..4 {
        let mut mods = projs.to_vec();
        mods.extend(
            (0..2)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| simple_module(&p, b)),
        );
        let c = sub(&mods);
        let e = maximal_ortho_enumerative(&c, 2, &ind).unwrap().verdict;
        let h = maximal_ortho_homological(&c, &dual_regular(&p), 0, 2, CAP, 0)
            .unwrap()
            .verdict;
        assert_eq!(Verdict::from(e), h, "mask {mask}");
    }
    let a = Arc::new(linear_a(Q, 3));
    let ind = knit_indecomposables(&a, 50, 20, 0).unwrap();
    let c = sub(&ind.modules);
    assert!(maximal_ortho_enumerative(&c, 1, &ind).unwrap().verdict);
    assert_eq!(
        maximal_ortho_homological(&c, &dual_regular(&a), 0, 1, CAP, 0)
            .unwrap()
            .verdict,
        Verdict::True
    );
}

#[test]
fn almost_split_sequences() {
    let a = Arc::new(linear_a(Q, 2));
    let s = almost_split_sequence(&simple_module(&a, 0), 0).unwrap();
    assert!(s.is_exact() && s.all_radical());
    assert!(isomorphic(s.left(), &projective_module(&a, 1)));
    assert!(isomorphic(&s.terms[1], &projective_module(&a, 0)));
    assert!(is_right_almost_split(&s.maps[1], &all_intervals(&a)));
    assert!(s.hom_exact_on(&all_intervals(&a)));

    let d = Arc::new(dual_numbers(Q));
    let s = almost_split_sequence(&simple_module(&d, 0), 0).unwrap();
    assert!(s.is_exact() && s.all_radical());
    assert!(isomorphic(s.left(), &simple_module(&d, 0)));
    assert!(isomorphic(&s.terms[1], &regular_module(&d)));

    let p = pp2();
    let s = almost_split_sequence(&simple_module(&p, 0), 0).unwrap();
    assert!(s.is_exact() && s.all_radical());
    assert!(isomorphic(s.left(), &simple_module(&p, 1)));
    assert!(isomorphic(&s.terms[1], &projective_module(&p, 0)));
    assert!(is_right_almost_split(&s.maps[1], &pp2_indecs(&p)));

    let a3 = Arc::new(linear_a(Q, 3));
    for m in all_intervals(&a3).iter().filter(|m| !is_projective(m)) {
        let s = almost_split_sequence(m, 0).unwrap();
        assert!(s.is_exact() && s.all_radical());
        assert!(is_right_almost_split(&s.maps[1], &all_intervals(&a3)));
        assert!(s.hom_exact_on(&all_intervals(&a3)));
    }
    assert!(almost_split_sequence(&projective_module(&a, 0), 0).is_err());
}

#[test]
fn n_almost_split_sequences() {
    let p = pp2();
    let all = pp2_indecs(&p);
    let c = sub(&all[..3]);
    let s = n_almost_split(&c, &all[2], 2, 0).unwrap();
    assert_eq!(s.terms.len(), 4);
    assert!(s.is_exact() && s.all_radical());
    assert_eq!(s.terms[1].dim() + s.terms[2].dim(), 4);
    assert!(is_projective(&s.terms[1]) && is_projective(&s.terms[2]));
    assert!(isomorphic(s.left(), &all[2]));
    assert!(isomorphic(s.left(), &tau_n(&all[2], 2, 0).unwrap()));
    assert!(isomorphic(s.right(), &all[2]));
    assert!(s.hom_exact_on(c.gens()));
    assert!(matches!(
        n_almost_split(&c, &all[0], 2, 0),
        Err(auslander::error::Error::Precondition(_))
    ));

    let a = Arc::new(linear_a(Q, 2));
    let c = sub(&all_intervals(&a));
    let x = simple_module(&a, 0);
    let s1 = n_almost_split(&c, &x, 1, 0).unwrap();
    let s0 = almost_split_sequence(&x, 0).unwrap();
    assert!(s1.is_exact() && s1.all_radical());
    for (u, v) in s1.terms.iter().zip(&s0.terms) {
        assert!(isomorphic(u, v));
    }
}

#[test]
fn ar_quivers() {
    let a = Arc::new(linear_a(Q, 2));
    let (p1, p2, i1) = (
        projective_module(&a, 0),
        projective_module(&a, 1),
        simple_module(&a, 0),
    );
    let c = sub(&[p2.clone(), p1.clone(), i1.clone()]);
    let q = ar_quiver(&c, 1, None, 0).unwrap();
    assert_eq!(q.vertices.len(), 3);
    assert_eq!(
        q.arrow_mult,
        vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]
    );
    assert_eq!(q.dotted, vec![None, None, Some(0)]);

    let p = pp2();
    let all = pp2_indecs(&p);
    let q = ar_quiver(&sub(&all[..3]), 2, None, 0).unwrap();
    assert_eq!(q.dotted[2], Some(2));
    assert_eq!(q.dotted_count(), 1);

    let s = Arc::new(semisimple(Q, 1));
    let q = ar_quiver(&sub(&[simple_module(&s, 0)]), 1, None, 0).unwrap();
    assert_eq!((q.vertices.len(), q.arrow_count()), (1, 0));

    let a3 = Arc::new(linear_a(Q, 3));
    let q = ar_quiver(&sub(&all_intervals(&a3)), 1, None, 0).unwrap();
    assert_eq!(q.arrow_count(), 6);
    assert_eq!(q.dotted_count(), 3);
}

#[test]
fn tilting_connections() {
    let p = pp2();
    let all = pp2_indecs(&p);
    let c1 = sub(&all[..3]);
    let c2 = sub(&[all[0].clone(), all[1].clone(), all[3].clone()]);
    let (g1, u) = connecting_tilting(&c1, &c2, 0).unwrap();
    let homs: usize = c1
        .gens()
        .iter()
        .flat_map(|x| c2.gens().iter().map(move |y| hom_basis(x, y).len()))
        .sum();
    assert_eq!(u.dim(), homs);
    assert_eq!(
        tilting_check(&g1.alg, &u, 1, CAP, 0).unwrap().valid,
        Verdict::True
    );
    let (g, same) = connecting_tilting(&c1, &c1, 0).unwrap();
    assert!(isomorphic(&same, &regular_module(&g.alg)));
    assert_eq!(
        tilting_check(&g.alg, &regular_module(&g.alg), 0, CAP, 0)
            .unwrap()
            .valid,
        Verdict::True
    );
    let a = Arc::new(linear_a(Q, 2));
    assert_eq!(
        tilting_check(&a, &simple_module(&a, 0), 0, CAP, 0)
            .unwrap()
            .valid,
        Verdict::False
    );
    let (g, over_lam) =
        connecting_tilting(&sub(&[regular_module(&a)]), &sub(&all_intervals(&a)), 0).unwrap();
    assert_eq!(over_lam.dim(), 4);
    assert_eq!(g.alg.dim(), 3);
}
