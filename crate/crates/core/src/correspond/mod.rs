//! Endomorphism algebras, Auslander triples and the correspondence checks.

mod checks;
mod endalg;
mod iso;
mod search;
mod triple;

pub use checks::{
    check_auslander_algebra, check_extension_pair, check_superprojective, condition_4_7_1,
    Condition471, ExtensionPairCert, SimpleExt, SuperprojCert,
};
pub use endalg::{end_algebra, end_algebra_labeled, indecomposable_generators, EndAlgebra};
pub use iso::{functor_iso, yoneda, AlgebraIso};
pub use search::{o_bound, repdim_search, Objective, SearchReport};
pub use triple::{
    alpha, alpha_inv, gamma_roundtrip, triple_roundtrip, verify_triple, AlphaImage, AlphaInverse,
    AuslanderTriple, GammaEquivalence, TripleCheck, TripleEquivalence,
};
