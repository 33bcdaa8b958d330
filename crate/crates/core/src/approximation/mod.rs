//! Approximations of modules of finite G-dimension by free complexes.

pub mod pushout;
pub mod tail;
pub mod triangle;

pub use pushout::{embed_totally_reflexive, pushout_step, Embedding, PushoutStep};
pub use tail::{build_reflexive_tail, ReflexiveTail};
pub use triangle::{
    approximation_triangle, gdim_of_complex, projective_dimension, rotate_triangle, ApproximationResult, Check,
    RotatedTriangle,
};
