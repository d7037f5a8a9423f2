//! Vanishing ideals of finite point sets over prime fields.
//!
//! The crate computes `I(Y)` for finite `Y` in projective or affine space
//! over GF(p), decides whether it is a binomial or a lattice ideal with a
//! concrete witness, and converts finite subgroups of the projective torus
//! to and from monomial parameterizations.

pub mod classify;
pub mod error;
pub mod field;
pub mod groebner;
pub mod points;
pub mod polyring;
pub mod torusparam;
pub mod vanishing;

pub use classify::{
    affine_scale_generators, classify_affine_binomial, classify_binomial, classify_lattice,
    decompose_to_binomials, Certificate, CharacterKey, Classifier, CrossChecks, Witness,
};
pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use groebner::{buchberger, normal_form, Ideal};
pub use points::{
    affine_monoid_closure, monoid_closure, proj_product, AffinePoint, Ambient, Closure, ExtendedPoint,
    MonoidCheck, PointSet, ProjectivePoint, TorusCheck, DEFAULT_ENUM_LIMIT,
};
pub use polyring::{BinomialShape, Monomial, PolyRing, Polynomial, TermOrder};
pub use torusparam::{
    abelian_generators, enumerate_parameterized, extract_parameterization, Parameterization,
};
pub use vanishing::{point_ideal_affine, point_ideal_projective, vanishing_ideal, verify_vanishing, Method};
