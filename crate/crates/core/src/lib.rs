//! Exact apolarity computations for symmetric forms.
//!
//! The dual ring `S = K[y0, .., yn]` acts on `T = K[x0, .., xn]` by
//! contraction: `y^a ∘ x^b = x^(b - a)` when `a <= b` componentwise and zero
//! otherwise. Everything in this crate is stated for that action, which keeps
//! the Gorenstein duality of `S / F⊥` valid in every characteristic. Over `QQ`
//! (or `GF(p)` with `p > deg F`) it has the same Hilbert function as the
//! action by partial derivatives.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, JSON reports and
//! the command-line front end live in `apolar-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod apolar;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod rank;

pub use apolar::{
    annihilator_graded, catalecticant, hilbert_function, ideal_graded_dimension,
    is_in_annihilator, max_generator_degree, minimal_generators, scheme_degree,
    verify_apolar_ideal, AnnihilatorPiece, Catalecticant, GradedIdeal, HilbertData, SchemeDegree,
};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Rref, Solution};
pub use poly::{
    coefficient_vector, contract, divided_power, linear_power, monomial_basis, parse_form,
    Form, Homogeneity, Monomial, ProjectivePoint, Ring,
};
pub use rank::{
    ci_degree, generator_degree_bound, monomial_apolar_ci, monomial_form, monomial_rank,
    monomial_rank_certificate, smooth_apolar_points, waring_fit, CiDegree, CiKind,
    MonomialRankData, RankCertificate, RankReport, WaringDecomposition, WaringFit,
};
