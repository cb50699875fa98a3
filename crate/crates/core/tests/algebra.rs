use auslander::algebra::*;
use auslander::corpus::*;
use auslander::exactlin::FieldSpec;
use auslander::Error;

const Q: FieldSpec = FieldSpec::Rationals;

#[test]
fn path_algebra_dimensions() {
    let a2 = linear_a(Q, 2);
    assert_eq!(a2.dim(), 3);
    assert_eq!(a2.labels, vec!["e_1", "e_2", "a1"]);
    assert_eq!(dual_numbers(Q).dim(), 2);
    let pp = preprojective_a(Q, 2);
    assert_eq!(pp.dim(), 4);
    assert_eq!(pp.labels, vec!["e_1", "e_2", "a1", "b1"]);
    assert_eq!(linear_a(Q, 3).dim(), 6);
    // preprojective A_3: projectives of dimensions 3, 4, 3
    assert_eq!(preprojective_a(Q, 3).dim(), 10);
}

#[test]
fn cartan_matrices() {
    assert_eq!(
        cartan_matrix(&semisimple(Q, 2)),
        vec![vec![1, 0], vec![0, 1]]
    );
    assert_eq!(cartan_matrix(&linear_a(Q, 2)), vec![vec![1, 1], vec![0, 1]]);
    assert_eq!(
        cartan_matrix(&preprojective_a(Q, 2)),
        vec![vec![1, 1], vec![1, 1]]
    );
}

#[test]
fn cartan_of_opposite_is_transpose() {
    for a in [linear_a(Q, 3), preprojective_a(Q, 3), dual_numbers(Q)] {
        let c = cartan_matrix(&a);
        let co = cartan_matrix(&opposite(&a));
        for i in 0..c.len() {
            for j in 0..c.len() {
                assert_eq!(c[i][j], co[j][i]);
            }
        }
        let total: usize = c.iter().flatten().sum();
        assert_eq!(total, a.dim());
    }
}

#[test]
fn radicals_by_trace_form() {
    let r = radical_basis(&linear_a(Q, 2)).unwrap();
    assert_eq!(r.len(), 1);
    assert!(radical_basis(&semisimple(Q, 2)).unwrap().is_empty());
    assert_eq!(radical_basis(&dual_numbers(Q)).unwrap().len(), 1);
    let big = FieldSpec::prime(101).unwrap();
    assert_eq!(radical_basis(&preprojective_a(big, 3)).unwrap().len(), 7);
    let f2 = FieldSpec::prime(2).unwrap();
    assert!(matches!(
        radical_basis(&linear_a(f2, 3)),
        Err(Error::FieldTooSmall { p: 2, dim: 6 })
    ));
}

#[test]
fn opposite_is_an_involution() {
    for a in [preprojective_a(Q, 2), linear_a(Q, 3), dual_numbers(Q)] {
        assert_eq!(opposite(&opposite(&a)), a);
    }
    assert_eq!(opposite(&dual_numbers(Q)).dim(), 2);
    let op = opposite(&linear_a(Q, 2));
    assert_eq!(op.dim(), 3);
    // the arrow now runs from vertex 2 to vertex 1
    assert_eq!(op.peirce[2], (1, 0));
}

#[test]
fn idempotent_quotients() {
    let q = quotient_by_idempotent_ideal(&linear_a(Q, 2), &[1]);
    assert_eq!(q.dim(), 1);
    assert_eq!(q.vertices, vec!["1"]);
    let pp = quotient_by_idempotent_ideal(&preprojective_a(Q, 2), &[0]);
    assert_eq!(pp.dim(), 1);
    assert_eq!(pp.vertices, vec!["2"]);
    assert_eq!(
        quotient_by_idempotent_ideal(&linear_a(Q, 2), &[0, 1]).dim(),
        0
    );
}

#[test]
fn idempotents_as_stored() {
    let ids = primitive_idempotents(&semisimple(Q, 2), 0);
    assert_eq!(
        ids,
        vec![vec![Q.int(1), Q.int(0)], vec![Q.int(0), Q.int(1)]]
    );
    assert_eq!(primitive_idempotents(&dual_numbers(Q), 7).len(), 1);
}

#[test]
fn relation_validation() {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
    let short = PathExpr::path(Q, &["a"]);
    assert!(matches!(
        build_path_algebra(Q, &q, &[short], 30),
        Err(Error::BadRelation(_))
    ));
    let broken = PathExpr::path(Q, &["a", "a"]);
    assert!(matches!(
        build_path_algebra(Q, &q, &[broken], 30),
        Err(Error::BadRelation(_))
    ));
    let mixed = PathExpr::commutativity(Q, &["a", "b"], &["b", "a"]);
    assert!(matches!(
        build_path_algebra(Q, &q, &[mixed], 30),
        Err(Error::BadRelation(_))
    ));
    // a single loop with no relation never becomes finite-dimensional
    let l = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
    assert!(matches!(
        build_path_algebra(Q, &l, &[], 8),
        Err(Error::NotAdmissible(_))
    ));
}

#[test]
fn commutative_square() {
    // 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
    let q = Quiver::new(
        &["1", "2", "3", "4"],
        &[
            ("a", "1", "2"),
            ("b", "2", "4"),
            ("c", "1", "3"),
            ("d", "3", "4"),
        ],
    )
    .unwrap();
    let a = build_path_algebra(
        Q,
        &q,
        &[PathExpr::commutativity(Q, &["a", "b"], &["c", "d"])],
        30,
    )
    .unwrap();
    assert_eq!(a.dim(), 9);
    assert_eq!(a.generators().len(), 4);
}
