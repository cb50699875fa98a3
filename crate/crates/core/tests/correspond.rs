use std::sync::Arc;

use auslander::algebra::Alg;
use auslander::corpus::*;
use auslander::correspond::*;
use auslander::exactlin::{FieldSpec, Matrix};
use auslander::homology::{gldim, grade, id, pd, two_sided_mn, Verdict};
use auslander::modrep::*;
use auslander::orthocat::{knit_indecomposables, Enumeration, OrthoTable};

const Q: FieldSpec = FieldSpec::Rationals;
const CAP: usize = 8;

fn isomorphic(x: &Module, y: &Module) -> bool {
    iso(x, y, 0).unwrap().is_some()
}

fn a(n: usize) -> Alg {
    Arc::new(linear_a(Q, n))
}

fn pp2() -> Alg {
    Arc::new(preprojective_a(Q, 2))
}

fn dn() -> Alg {
    Arc::new(dual_numbers(Q))
}

fn all_indecs(l: &Alg) -> Vec<Module> {
    let e = knit_indecomposables(l, 50, 20, 0).unwrap();
    assert!(e.complete);
    e.modules
}

struct Case {
    name: &'static str,
    mods: Vec<Module>,
    t: Module,
    m: usize,
    n: usize,
}

fn cases() -> Vec<Case> {
    let p = pp2();
    let (p1, p2, s1, s2) = (
        projective_module(&p, 0),
        projective_module(&p, 1),
        simple_module(&p, 0),
        simple_module(&p, 1),
    );
    let d = dn();
    vec![
        Case {
            name: "kA2",
            mods: all_indecs(&a(2)),
            t: dual_regular(&a(2)),
            m: 0,
            n: 1,
        },
        Case {
            name: "kA3",
            mods: all_indecs(&a(3)),
            t: dual_regular(&a(3)),
            m: 0,
            n: 1,
        },
        Case {
            name: "dual numbers",
            mods: vec![regular_module(&d), simple_module(&d, 0)],
            t: dual_regular(&d),
            m: 0,
            n: 1,
        },
        Case {
            name: "preprojective C1",
            mods: vec![p1.clone(), p2.clone(), s1],
            t: regular_module(&p),
            m: 0,
            n: 2,
        },
        Case {
            name: "preprojective C2",
            mods: vec![p1, p2, s2],
            t: regular_module(&p),
            m: 0,
            n: 2,
        },
        Case {
            name: "trivial n=1",
            mods: vec![regular_module(&a(2))],
            t: regular_module(&a(2)),
            m: 1,
            n: 1,
        },
        Case {
            name: "trivial n=2",
            mods: vec![regular_module(&a(2))],
            t: regular_module(&a(2)),
            m: 1,
            n: 2,
        },
    ]
}

#[test]
fn endomorphism_algebras() {
    let l = a(2);
    let (e, y) = yoneda(&l, 0).unwrap();
    assert!(y.verify());
    assert_eq!(e.alg.dim(), l.dim());
    assert_eq!(end_algebra(&all_indecs(&l), 0).unwrap().alg.dim(), 5);
    let d = dn();
    assert_eq!(
        end_algebra(&[regular_module(&d), simple_module(&d, 0)], 0)
            .unwrap()
            .alg
            .dim(),
        5
    );
    for x in [pp2(), a(3), d] {
        assert!(yoneda(&x, 0).unwrap().1.verify());
    }
}

#[test]
fn modules_over_end() {
    let p = pp2();
    let gens = vec![
        projective_module(&p, 0),
        projective_module(&p, 1),
        simple_module(&p, 0),
    ];
    let g = end_algebra(&gens, 0).unwrap();
    for (j, x) in gens.iter().enumerate() {
        assert!(isomorphic(
            &g.module_over_end(x),
            &projective_module(&g.alg, j)
        ));
    }
    assert!(g.module_over_end(&Module::zero(&p)).is_zero());
    assert_eq!(g.module_over_end(&simple_module(&p, 1)).dimv, vec![0, 1, 0]);
}

#[test]
fn triples_verify() {
    for c in cases() {
        let r = verify_triple(&c.mods, &c.t, c.m, c.n, false, CAP, 0).unwrap();
        assert_eq!(r.verdict, Verdict::True, "{}: {:?}", c.name, r.refutation);
        let q = verify_triple(&c.mods, &c.t, c.m, c.n, true, CAP, 0).unwrap();
        assert_eq!(q.verdict, Verdict::True, "{} quasi", c.name);
    }
    let p = pp2();
    let r = verify_triple(
        &[projective_module(&p, 0), projective_module(&p, 1)],
        &regular_module(&p),
        0,
        2,
        false,
        CAP,
        0,
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::False);
    let l = a(2);
    let r = verify_triple(&all_indecs(&l), &simple_module(&l, 0), 1, 1, false, CAP, 0).unwrap();
    assert_eq!(r.verdict, Verdict::False);
}

#[test]
fn bijection_roundtrips() {
    for c in cases() {
        let tr = verify_triple(&c.mods, &c.t, c.m, c.n, false, CAP, 0)
            .unwrap()
            .triple;
        let img = alpha(&tr, CAP, 0).unwrap();
        assert_eq!(img.pair.valid, Verdict::True, "{} pair", c.name);
        assert_eq!(
            img.superprojective.valid,
            Verdict::True,
            "{} superprojective",
            c.name
        );
        assert!(img.superprojective.agree);
        let inv = alpha_inv(img.gamma(), &img.p, &img.i, c.m, c.n, CAP, 0).unwrap();
        assert_eq!(
            inv.check.verdict,
            Verdict::True,
            "{} inverse triple",
            c.name
        );
        let eq = triple_roundtrip(&tr, &img, &inv, 0).unwrap();
        assert!(
            eq.valid,
            "{}: {:?} {:?} {}",
            c.name, eq.algebra_ok, eq.generators_ok, eq.t_ok
        );
        let back = gamma_roundtrip(&img, &inv, 0).unwrap();
        assert!(
            back.valid,
            "{}: {} {} {}",
            c.name, back.algebra_ok, back.p_ok, back.i_ok
        );
    }
}

#[test]
fn alpha_images() {
    let l = a(2);
    let tr = verify_triple(
        &[regular_module(&l)],
        &regular_module(&l),
        1,
        1,
        false,
        CAP,
        0,
    )
    .unwrap()
    .triple;
    let img = alpha(&tr, CAP, 0).unwrap();
    assert_eq!(img.gamma().dim(), l.dim());
    assert!(isomorphic(&img.p, &regular_module(img.gamma())));
    assert!(isomorphic(&img.i, &dual_regular(img.gamma())));

    let d = dn();
    let tr = verify_triple(
        &[regular_module(&d), simple_module(&d, 0)],
        &dual_regular(&d),
        0,
        1,
        false,
        CAP,
        0,
    )
    .unwrap()
    .triple;
    let img = alpha(&tr, CAP, 0).unwrap();
    assert_eq!(img.gamma().dim(), 5);
    assert!(isomorphic(&img.p, &img.i));
    assert!(is_projective(&img.p) && is_injective(&img.p));
    let inv = alpha_inv(img.gamma(), &img.p, &img.i, 0, 1, CAP, 0).unwrap();
    assert_eq!((inv.lam.alg.dim(), inv.lam.alg.n_vertices()), (2, 1));
    assert_eq!(inv.m_gens.len(), 2);
}

#[test]
fn alpha_inverse_refuses_bad_data() {
    let l = a(2);
    let p2 = projective_module(&l, 1);
    let i1 = injective_module(&l, 0);
    assert!(matches!(
        alpha_inv(&l, &p2, &i1, 0, 1, CAP, 0),
        Err(auslander::Error::Precondition(_))
    ));
}

#[test]
fn extension_pairs() {
    let p = pp2();
    let cert = check_extension_pair(&regular_module(&p), &regular_module(&p), 0, CAP, 0).unwrap();
    assert_eq!(cert.valid, Verdict::True);
    let l = a(2);
    let cert = check_extension_pair(
        &projective_module(&l, 1),
        &injective_module(&l, 0),
        0,
        CAP,
        0,
    )
    .unwrap();
    assert_eq!(cert.valid, Verdict::False);
    assert_eq!(cert.id_p, Dim::Exact(1));
}

#[test]
fn superprojectives() {
    let l = a(2);
    // vertex 0 carries the projective-injective
    let c = check_superprojective(&l, &[0], 1, CAP, 0).unwrap();
    assert_eq!(c.valid, Verdict::False);
    assert!(c.agree);
    let g = end_algebra(&all_indecs(&a(3)), 0).unwrap();
    let e: Vec<usize> = (0..3)
        .map(|v| {
            g.gens
                .iter()
                .position(|x| isomorphic(x, &projective_module(&a(3), v)))
                .unwrap()
        })
        .collect();
    let c = check_superprojective(&g.alg, &e, 1, CAP, 0).unwrap();
    assert_eq!(c.valid, Verdict::True);
    assert!(c.agree);
    let p = pp2();
    let c = check_superprojective(&p, &[0, 1], 3, CAP, 0).unwrap();
    assert_eq!(c.valid, Verdict::True);
}

#[test]
fn auslander_algebras() {
    let g = end_algebra(&all_indecs(&a(3)), 0).unwrap().alg;
    assert_eq!(
        check_auslander_algebra(&g, 0, 1, false, CAP).unwrap(),
        Verdict::True
    );
    assert_eq!(
        check_auslander_algebra(&a(2), 0, 1, false, CAP).unwrap(),
        Verdict::False
    );
    let s = Arc::new(semisimple(Q, 2));
    for (m, n) in [(0, 1), (1, 1), (0, 3), (2, 4)] {
        assert_eq!(
            check_auslander_algebra(&s, m, n, false, CAP).unwrap(),
            Verdict::True
        );
    }
    assert!(check_auslander_algebra(&g, 2, 1, false, CAP).is_err());
}

#[test]
fn proposition_on_simples_of_top_dimension() {
    let d = dn();
    for g in [
        end_algebra(&all_indecs(&a(2)), 0).unwrap().alg,
        end_algebra(&[regular_module(&d), simple_module(&d, 0)], 0)
            .unwrap()
            .alg,
    ] {
        let c = condition_4_7_1(&g, 1, CAP, 0).unwrap();
        assert_eq!((c.lhs, c.rhs), (Verdict::True, Verdict::True));
        assert!(!c.simples.is_empty());
        assert!(c.simples.iter().all(|s| s.duality));
    }
    // End of S1 + P2 + P1 + P1/S3 over kA_3 misses P3
    let l = a(3);
    let mods = vec![
        simple_module(&l, 0),
        projective_module(&l, 1),
        projective_module(&l, 0),
        quotient_p1(&l),
    ];
    let g = end_algebra(&mods, 0).unwrap().alg;
    assert_eq!(gldim(&g, CAP), Dim::Exact(2));
    assert_eq!(auslander::homology::domdim(&g, CAP), Dim::Exact(1));
    let c = condition_4_7_1(&g, 1, CAP, 0).unwrap();
    assert_eq!((c.lhs, c.rhs), (Verdict::False, Verdict::False));
    assert!(condition_4_7_1(&a(2), 1, CAP, 0).is_err());
}

/// The length-2 module supported on vertices 1 and 2 of kA_3.
fn quotient_p1(l: &Alg) -> Module {
    let g: Vec<(usize, Matrix)> = l
        .generators()
        .iter()
        .filter(|&&b| l.peirce[b] == (0, 1))
        .map(|&b| (b, Matrix::from_i64(Q, &[&[1]])))
        .collect();
    Module::from_generators(l.clone(), vec![1, 1, 0], &g).unwrap()
}

#[test]
fn triple_invariants() {
    for c in cases() {
        let tr = verify_triple(&c.mods, &c.t, c.m, c.n, false, CAP, 0)
            .unwrap()
            .triple;
        let img = alpha(&tr, CAP, 0).unwrap();
        let g = img.gamma();
        assert_eq!(
            two_sided_mn(g, c.m + 1, c.n + 1, CAP).unwrap(),
            Verdict::True,
            "{}",
            c.name
        );
        let gl = gldim(g, CAP).exact().unwrap();
        assert!(gl <= (c.n + 1).max(c.m), "{}", c.name);
        let trivial = tr.m.len() == tr.lambda.n_vertices();
        if !trivial {
            assert_eq!(
                gl,
                (c.n + 1).max(id(&c.t, CAP).exact().unwrap()),
                "{}",
                c.name
            );
            for v in (0..g.n_vertices()).filter(|v| !img.e.contains(v)) {
                let s = simple_module(g, v);
                assert_eq!(pd(&s, CAP), Dim::Exact(c.n + 1));
                assert_eq!(grade(&s, CAP), Dim::Exact(c.n + 1));
            }
        }
    }
}

#[test]
fn orthogonality_matches_condition_on_generator_cogenerators() {
    let p = pp2();
    let ind = all_indecs(&p);
    let table = OrthoTable::new(&ind, 1);
    let forced: Vec<usize> = (0..2)
        .map(|v| {
            ind.iter()
                .position(|x| isomorphic(x, &projective_module(&p, v)))
                .unwrap()
        })
        .collect();
    let free: Vec<usize> = (0..ind.len()).filter(|i| !forced.contains(i)).collect();
    for mask in 0u32..(1 << free.len()) {
        let mut set = forced.clone();
        set.extend(
            (0..free.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| free[b]),
        );
        let mods: Vec<Module> = set.iter().map(|&i| ind[i].clone()).collect();
        let g = end_algebra(&mods, 0).unwrap().alg;
        let orth = table.ortho_witness(&set).is_none();
        assert_eq!(
            Verdict::from(orth),
            two_sided_mn(&g, 1, 3, CAP).unwrap(),
            "mask {mask}"
        );
    }
}

#[test]
fn representation_dimension() {
    let s = Arc::new(semisimple(Q, 2));
    let e = Enumeration {
        modules: all_indecs(&s),
        complete: true,
    };
    assert_eq!(
        repdim_search(&s, 1, &e, CAP, 0).unwrap().objective,
        Objective::Value(0)
    );
    let l = a(2);
    let e = Enumeration {
        modules: all_indecs(&l),
        complete: true,
    };
    let r = repdim_search(&l, 1, &e, CAP, 0).unwrap();
    assert_eq!((r.objective, r.candidates), (Objective::Value(2), 1));
    let p = pp2();
    let e = Enumeration {
        modules: all_indecs(&p),
        complete: true,
    };
    let r = repdim_search(&p, 1, &e, CAP, 0).unwrap();
    assert_eq!(r.objective, Objective::Value(2));
    assert_eq!(r.witness.unwrap(), vec![0, 1, 2, 3]);
    assert_eq!(r.candidates, 4);
    assert!(r.capped >= 1);
    let capped = Enumeration {
        modules: e.modules.clone(),
        complete: false,
    };
    assert!(repdim_search(&p, 1, &capped, CAP, 0).is_err());
}

fn brute_o(ind: &[Module]) -> usize {
    let t = OrthoTable::new(ind, 1);
    (0u32..(1 << ind.len()))
        .map(|mask| {
            (0..ind.len())
                .filter(|b| mask >> b & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|s| t.ortho_witness(s).is_none())
        .map(|s| s.len())
        .max()
        .unwrap()
}

#[test]
fn orthogonal_bound() {
    let s = Arc::new(semisimple(Q, 3));
    let e = Enumeration {
        modules: all_indecs(&s),
        complete: true,
    };
    assert_eq!(o_bound(&e).unwrap().objective, Objective::Value(3));
    let p = pp2();
    let e = Enumeration {
        modules: all_indecs(&p),
        complete: true,
    };
    let r = o_bound(&e).unwrap();
    assert_eq!(r.objective, Objective::Value(3));
    assert_eq!(brute_o(&e.modules), 3);
    for l in [a(2), a(3), dn()] {
        let e = Enumeration {
            modules: all_indecs(&l),
            complete: true,
        };
        assert_eq!(
            o_bound(&e).unwrap().objective,
            Objective::Value(brute_o(&e.modules))
        );
    }
    let e = Enumeration {
        modules: all_indecs(&a(2)),
        complete: true,
    };
    assert_eq!(o_bound(&e).unwrap().objective, Objective::Value(2));
}
