//! Bounded complexes, homology, tensor and Hom against modules, truncations and triangles.

pub mod chain;
pub mod subquotient;
pub mod triangle;

pub use chain::{ChainMap, Complex};
pub use subquotient::{is_exact_at, is_exact_in_degree, Subquotient, SubquotientMap};
pub use triangle::TrianglePresentation;
