//! Coefficients, polynomials, free-module vectors, Gröbner bases and graded rings.

pub(crate) mod degreewise;
pub mod gb;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod syz;
pub mod vector;

pub use gb::ModuleGb;
pub use monomial::{Monomial, OrderKind, TermOrder};
pub use poly::Polynomial;
pub use ring::{groebner_basis, GradedRing, Ring, RingMap};
pub use scalar::{Field, Scalar};
pub use syz::{is_regular_element, kernel_mod, minimal_subset, solve};
pub use vector::{Matrix, Vector};
