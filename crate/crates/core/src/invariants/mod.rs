//! Depth, Ext, Tor, flat and Gorenstein dimensions with certificates.

pub mod derived;
pub mod gorenstein;
pub mod numeric;
pub mod report;

pub use derived::{ext, tor_over_phi, DerivedQuery};
pub use gorenstein::{gdim, gfd_against, gfd_bounded, is_totally_reflexive, syzygy_module};
pub use numeric::{depth, fd_bounded, rfd_bounded, ring_depth, supp_member_max, SuppMembership};
pub use report::{Certificate, InvariantReport, Status, TailCertificate, Witness};

/// Default homological bound.
pub const DEFAULT_BOUND: usize = 8;
/// Default largest truncation index of the injective hull.
pub const DEFAULT_T_MAX: u32 = 4;
