//! Exact computations in lowest-weight Verma modules over the Jacobi algebra
//! G₂: singular vectors, reducibility classification and embedding diagrams.
//!
//! All types are generic over an exact [`Scalar`]; the aliases below fix the
//! arbitrary-precision default and two fixed-width variants.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod embed;
pub mod error;
pub mod linalg;
pub mod sampling;
pub mod scalar;
pub mod singular;
pub mod verify;
pub mod verma;
pub mod wire;

use num_rational::{BigRational, Ratio};

pub use algebra::{adjoint_grade, commutator, jacobiator, Generator, GradeVector, LinComb};
pub use catalog::{catalog_diagram, reference_diagram, representative_params, CASE_IDS};
pub use classify::{case_label, classify, CaseLabel, Finding};
pub use embed::{build_diagram, EmbeddingDiagram, DEFAULT_MAX_DEPTH};
pub use error::{Error, Result};
pub use scalar::{ParseRationalError, Scalar};
pub use singular::{
    brute_force_sv, closed_form_coeff, closed_form_sv, general_coeff, recurrences_hold,
    rising_factorial, sv_grade, CoeffTable, SvKind, SvType,
};
pub use verma::{
    act, enumerate_grade, grade_of_key, is_singular, weight_of_key, BasisKey, LoweringOp,
    ModuleVector, Weight,
};

/// Arbitrary-precision rationals, the default scalar.
pub type Rational = BigRational;
pub type Rational64 = Ratio<i64>;
pub type Rational128 = Ratio<i128>;

pub type Weight64 = Weight<Rational64>;
pub type ModuleVector64 = ModuleVector<Rational64>;
