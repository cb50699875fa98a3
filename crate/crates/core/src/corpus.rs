//! The small algebras used throughout the tests and the bundled examples.

use crate::algebra::{build_path_algebra, FDAlgebra, PathExpr, Quiver};
use crate::exactlin::FieldSpec;

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn quiver(vs: &[String], arrows: &[(String, String, String)]) -> Quiver {
    let v: Vec<&str> = vs.iter().map(String::as_str).collect();
    let a: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
        .collect();
    Quiver::new(&v, &a).expect("corpus quiver is well formed")
}

/// Linearly oriented A_n: 1 -> 2 -> ... -> n, arrows a1, ..., a(n-1).
pub fn linear_a(field: FieldSpec, n: usize) -> FDAlgebra {
    let vs = labels(n);
    let arrows: Vec<_> = (1..n)
        .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    build_path_algebra(field, &quiver(&vs, &arrows), &[], 30).expect("hereditary A_n")
}

/// k[x]/(x^2).
pub fn dual_numbers(field: FieldSpec) -> FDAlgebra {
    let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
    build_path_algebra(field, &q, &[PathExpr::path(field, &["x", "x"])], 30).expect("dual numbers")
}

/// n vertices, no arrows.
pub fn semisimple(field: FieldSpec, n: usize) -> FDAlgebra {
    build_path_algebra(field, &quiver(&labels(n), &[]), &[], 30).expect("semisimple")
}

/// Preprojective algebra of A_n: arrows a_i: i -> i+1 and b_i: i+1 -> i with
/// a_1 b_1 = 0, a_(i+1) b_(i+1) = b_i a_i, b_(n-1) a_(n-1) = 0.
pub fn preprojective_a(field: FieldSpec, n: usize) -> FDAlgebra {
    assert!(n >= 2);
    let vs = labels(n);
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push((format!("a{i}"), i.to_string(), (i + 1).to_string()));
        arrows.push((format!("b{i}"), (i + 1).to_string(), i.to_string()));
    }
    let q = quiver(&vs, &arrows);
    let a = |i: usize| format!("a{i}");
    let b = |i: usize| format!("b{i}");
    let mut rels = vec![PathExpr::path(field, &[&a(1), &b(1)])];
    for i in 1..n - 1 {
        rels.push(PathExpr::commutativity(
            field,
            &[&a(i + 1), &b(i + 1)],
            &[&b(i), &a(i)],
        ));
    }
    rels.push(PathExpr::path(field, &[&b(n - 1), &a(n - 1)]));
    build_path_algebra(field, &q, &rels, 30).expect("preprojective A_n")
}
