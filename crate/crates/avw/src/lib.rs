//! Exact-arithmetic workbench for finite-dimensional absolute-valued real
//! algebras.
//!
//! Everything runs over arbitrary-precision rationals: the crate builds the
//! classical algebras R, C, H, O and their isotopes as exact
//! structure-constant tensors, decides associator identities
//! `(x^p, x^q, x^r) = 0` (and the two-variable `(x^2, y, x^2) = 0`) by
//! symbolic expansion, solves the isomorphism problem for principal isotopes
//! of the quaternions, classifies them, and probes subalgebra structure.
//!
//! Start with the runnable programs in `examples/` — there is one per major
//! capability — or with the `avw` command-line front end.

pub mod algebra;
pub mod cd;
pub mod cli;
pub mod error;
pub mod factory;
pub mod identity;
pub mod lab;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod scalar;

pub use algebra::{Algebra, Side};
pub use cd::CDElement;
pub use error::{Error, Result};
pub use factory::{
    build, cayley_isometry, cracovian, involution_from_idempotent, published_isometry_seed,
    AlgebraSpec, IsometrySeed, Isotope, IsotopeFamily, StandardKind,
};
pub use identity::{check_sampled, check_symbolic, identity_profile, IdentitySpec, OneVar, Profile, Verdict};
pub use lab::{
    classify, conjugacy_witness, degree_estimate, dim2_criteria, enumerate_classes,
    flexible_2dim, generated_dim, isotope_isomorphic, search_4dim_subalgebra, verify_closed,
    ClassLabel, ClassRow, Dim2Criteria, Enumeration, IsoWitness,
};
pub use matrix::Mat;
pub use poly::MPoly;
pub use rng::{DetRng, DEFAULT_SEED};
pub use scalar::ExactScalar;
