//! Exact homological algebra over graded-local rings.

pub mod algebra;
pub mod approximation;
pub mod complex;
pub mod error;
pub mod invariants;
pub mod module;
pub mod numbers;

pub use algebra::{Field, GradedRing, Matrix, Polynomial, Ring, RingMap, Scalar, Vector};
pub use complex::{ChainMap, Complex, Subquotient, SubquotientMap, TrianglePresentation};
pub use error::{Error, Result};
pub use invariants::{InvariantReport, Status};
pub use module::{FpModule, ModuleMap, Resolution, Restricted};
pub use numbers::ExtInt;

/// Version of the engine, echoed in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/rings.md")]
    struct Rings;
    #[doc = include_str!("../../../book/src/modules.md")]
    struct Modules;
    #[doc = include_str!("../../../book/src/complexes.md")]
    struct Complexes;
    #[doc = include_str!("../../../book/src/invariants.md")]
    struct Invariants;
    #[doc = include_str!("../../../book/src/gfd.md")]
    struct Gfd;
    #[doc = include_str!("../../../book/src/approximation.md")]
    struct Approximation;
}
