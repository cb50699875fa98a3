use auslander::error::Error;
use auslander::mckay::*;
use num_rational::BigRational;
use proptest::prelude::*;

fn c(s: &str) -> CyclotomicNumber {
    CyclotomicNumber::parse(s).unwrap()
}

fn ints(v: &[i64]) -> Character {
    v.iter().map(|&x| CyclotomicNumber::int(x)).collect()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `sum_X d_XY deg X = d deg Y`.
fn degree_count_holds(t: &CharacterTable, g: &QuiverGraph, d: i64) -> bool {
    (0..g.n()).all(|y| {
        let mut s = CyclotomicNumber::int(0);
        for x in 0..g.n() {
            s = &s + &t.degree(x).scale(&q(g.arrow_mult[x][y] as i64));
        }
        s == t.degree(y).scale(&q(d))
    })
}

fn dotted_preserves_degrees(t: &CharacterTable, g: &QuiverGraph) -> bool {
    (0..g.n()).all(|x| t.degree(g.dotted[x]) == t.degree(x))
}

#[test]
fn cyclotomic_arithmetic() {
    assert_eq!(cyclotomic_polynomial(3), vec![q(1), q(1), q(1)]);
    assert_eq!(cyclotomic_polynomial(4), vec![q(1), q(0), q(1)]);
    assert_eq!(cyclotomic_polynomial(6), vec![q(1), q(-1), q(1)]);
    // 1 + w + w^2 = 0
    assert_eq!(c("1+z3+z3^2"), CyclotomicNumber::int(0));
    assert_eq!(c("z3^2"), c("-1-z3"));
    assert_eq!(&c("z3") * &c("z3^2"), CyclotomicNumber::int(1));
    assert_eq!(c("z3").conj(), c("z3^2"));
    // z6 = -z3^2, and i^2 = -1 over lcm conductors
    assert_eq!(c("z6"), -&c("z3^2"));
    assert_eq!(&c("z4") * &c("z4"), CyclotomicNumber::int(-1));
    assert_eq!(&c("z4") + &c("z3"), c("z12^3+z12^4"));
    assert_eq!(c("1/2*z8^5").lift(16), c("1/2*z16^10"));
    assert_eq!(
        c("3/4").as_rational(),
        Some(BigRational::new(3.into(), 4.into()))
    );
    assert_eq!(c("z3").as_rational(), None);
    assert_eq!(c(&c("2-1/3*z5^3").to_string()), c("2-1/3*z5^3"));
    assert!(CyclotomicNumber::parse("z0").is_err());
    assert!(CyclotomicNumber::parse("x").is_err());
}

#[test]
fn built_in_tables_validate() {
    for t in [
        CharacterTable::trivial(),
        CharacterTable::cyclic(2),
        CharacterTable::cyclic(3),
        CharacterTable::cyclic(5),
        CharacterTable::quaternion(),
    ] {
        t.validate().unwrap();
    }
    let mut t = CharacterTable::cyclic(3);
    t.irreducibles[2][1] = c("z3");
    assert!(matches!(t.validate(), Err(Error::Input(_))));
    let mut t = CharacterTable::cyclic(2);
    t.classes[1].size = 2;
    assert!(t.validate().is_err());
}

#[test]
fn inner_products() {
    let t = CharacterTable::cyclic(2);
    assert_eq!(
        t.inner_product(&ints(&[2, -2]), &ints(&[1, -1])).unwrap(),
        q(2)
    );
    assert_eq!(
        t.inner_product(&t.irreducibles[0], &t.irreducibles[0])
            .unwrap(),
        q(1)
    );
    let t3 = CharacterTable::cyclic(3);
    for (i, a) in t3.irreducibles.iter().enumerate() {
        for (j, b) in t3.irreducibles.iter().enumerate() {
            assert_eq!(t3.inner_product(a, b).unwrap(), q(i64::from(i == j)));
        }
    }
}

#[test]
fn decompositions() {
    let t = CharacterTable::cyclic(3);
    let v = CharacterTable::cyclic_diagonal(3, &[1, 2]);
    assert_eq!(v, vec![c("2"), c("z3+z3^2"), c("z3^2+z3")]);
    assert_eq!(t.decompose_character(&v).unwrap(), vec![0, 1, 1]);
    assert_eq!(
        t.decompose_character(&t.irreducibles[1]).unwrap(),
        vec![0, 1, 0]
    );
    let q8 = CharacterTable::quaternion();
    let regular = ints(&[8, 0, 0, 0, 0]);
    assert_eq!(
        q8.decompose_character(&regular).unwrap(),
        vec![1, 1, 1, 1, 2]
    );
    // half of a regular character is not a character
    assert!(matches!(
        t.decompose_character(&ints(&[1, 0, 0])),
        Err(Error::NonIntegerMultiplicity(_))
    ));
}

#[test]
fn mckay_quiver_of_c2() {
    let t = CharacterTable::cyclic(2);
    let g = mckay_quiver(&t, &ints(&[2, -2]), 2, None).unwrap();
    assert_eq!(g.arrow_mult, vec![vec![0, 2], vec![2, 0]]);
    assert_eq!(g.dotted, vec![0, 1]);
    assert_eq!(g.determinant, ints(&[1, 1]));
    assert!(g.is_symmetric() && degree_count_holds(&t, &g, 2));
}

#[test]
fn mckay_quiver_of_c3() {
    let t = CharacterTable::cyclic(3);
    let g = mckay_quiver(&t, &CharacterTable::cyclic_diagonal(3, &[1, 2]), 2, None).unwrap();
    assert_eq!(
        g.arrow_mult,
        vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
    );
    assert_eq!(g.dotted, vec![0, 1, 2]);
    assert!(g.is_symmetric() && degree_count_holds(&t, &g, 2));
}

#[test]
fn mckay_quiver_of_trivial_group() {
    let t = CharacterTable::trivial();
    let g = mckay_quiver(&t, &ints(&[2]), 2, None).unwrap();
    assert_eq!(g.arrow_mult, vec![vec![2]]);
    assert_eq!(g.dotted, vec![0]);
    let g3 = mckay_quiver(&t, &ints(&[3]), 3, None).unwrap();
    assert_eq!(g3.arrow_mult, vec![vec![3]]);
}

#[test]
fn mckay_quiver_of_quaternion_group() {
    let t = CharacterTable::quaternion();
    let g = mckay_quiver(&t, &CharacterTable::quaternion_defining(), 2, None).unwrap();
    // doubled extended Dynkin diagram of type D_4
    let mut expect = vec![vec![0; 5]; 5];
    for x in 0..4 {
        expect[x][4] = 1;
        expect[4][x] = 1;
    }
    assert_eq!(g.arrow_mult, expect);
    assert_eq!(g.dotted, vec![0, 1, 2, 3, 4]);
    assert!(degree_count_holds(&t, &g, 2) && dotted_preserves_degrees(&t, &g));
}

#[test]
fn non_special_linear_groups_move_dotted_arrows() {
    // C_3 acting by diag(w, w) has determinant chi_2
    let t = CharacterTable::cyclic(3);
    let g = mckay_quiver(&t, &CharacterTable::cyclic_diagonal(3, &[1, 1]), 2, None).unwrap();
    assert_eq!(
        g.arrow_mult,
        vec![vec![0, 0, 2], vec![2, 0, 0], vec![0, 2, 0]]
    );
    assert_eq!(g.dotted, vec![2, 0, 1]);
    assert!(!g.is_symmetric());
    // C_3 in SL_3 via diag(w, w, w): determinant trivial, computed by the cubic identity
    let g3 = mckay_quiver(&t, &CharacterTable::cyclic_diagonal(3, &[1, 1, 1]), 3, None).unwrap();
    assert_eq!(g3.dotted, vec![0, 1, 2]);
    assert_eq!(
        g3.arrow_mult,
        vec![vec![0, 0, 3], vec![3, 0, 0], vec![0, 3, 0]]
    );
    // C_5 in GL_4 via weights 1,1,2,3: determinant chi_2, needs e_4 from power maps
    let t5 = CharacterTable::cyclic(5);
    let g5 = mckay_quiver(
        &t5,
        &CharacterTable::cyclic_diagonal(5, &[1, 1, 2, 3]),
        4,
        None,
    )
    .unwrap();
    assert_eq!(g5.dotted, vec![2, 3, 4, 0, 1]);
    assert!(degree_count_holds(&t5, &g5, 4));
}

#[test]
fn determinant_input_and_errors() {
    let mut t = CharacterTable::cyclic(2);
    let v = ints(&[2, -2]);
    for cl in &mut t.classes {
        cl.power_maps.clear();
    }
    assert_eq!(
        mckay_quiver(&t, &v, 2, None),
        Err(Error::MissingPowerMaps(2))
    );
    let g = mckay_quiver(&t, &v, 2, Some(&ints(&[1, 1]))).unwrap();
    assert_eq!(g.dotted, vec![0, 1]);
    assert!(matches!(
        mckay_quiver(&t, &v, 1, None),
        Err(Error::Input(_))
    ));
    assert!(matches!(
        mckay_quiver(&t, &v, 3, None),
        Err(Error::Input(_))
    ));
    // a supplied determinant that is not a linear character of the table
    assert!(mckay_quiver(&t, &v, 2, Some(&ints(&[1, 0]))).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_mckay_invariants(n in 2u32..9, w in prop::collection::vec(0u32..9, 2..4)) {
        let t = CharacterTable::cyclic(n);
        let d = w.len();
        let g = mckay_quiver(&t, &CharacterTable::cyclic_diagonal(n, &w), d, None).unwrap();
        prop_assert!(degree_count_holds(&t, &g, d as i64));
        prop_assert!(dotted_preserves_degrees(&t, &g));
        let det_weight = w.iter().sum::<u32>() % n;
        // chi_x ⊗ chi_det = chi_{x + det}
        prop_assert!((0..n as usize).all(|x| g.dotted[x] == (x + det_weight as usize) % n as usize));
    }

    #[test]
    fn sl2_cyclic_quivers_are_symmetric(n in 2u32..12, a in 1u32..12) {
        let t = CharacterTable::cyclic(n);
        let w = [a % n, (n - a % n) % n];
        let g = mckay_quiver(&t, &CharacterTable::cyclic_diagonal(n, &w), 2, None).unwrap();
        prop_assert!(g.is_symmetric());
        prop_assert_eq!(g.dotted, (0..n as usize).collect::<Vec<_>>());
    }

    #[test]
    fn field_laws(a in -5i64..5, b in -5i64..5, k in 0u32..12, l in 0u32..12, n in 1u32..13, m in 1u32..13) {
        let x = &CyclotomicNumber::root_of_unity(n, k).scale(&q(a)) + &CyclotomicNumber::int(b);
        let y = CyclotomicNumber::root_of_unity(m, l);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &y, &(&x * &y) + &(&y * &y));
        prop_assert_eq!(&y * &y.conj(), CyclotomicNumber::int(1));
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(&(&x - &y) + &y, x);
    }
}
