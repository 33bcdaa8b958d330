//! Finitely presented modules, resolutions, duals and Matlis duality.

pub mod finite;
pub mod fpmodule;
pub mod resolution;
pub mod restrict;

pub use finite::{hull_inclusion, injective_hull_truncation, matlis_dual, truncated_ring, FiniteModule, Presented};
pub use fpmodule::{syzygy, Biduality, Dual, FpModule, ModuleMap, Pruned};
pub use resolution::{betti_table, free_resolution, BettiEntry, BettiTable, Resolution};
pub use restrict::{restrict_scalars, Restricted};
