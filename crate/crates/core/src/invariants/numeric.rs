//! Depth, flat dimension, restricted flat dimension and membership of `m` in the small support.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::derived::DerivedQuery;
use crate::invariants::report::{Certificate, InvariantReport, Status};
use crate::module::{free_resolution, FpModule, Restricted};
use crate::numbers::ExtInt;

fn require_bound(bound: usize) -> Result<()> {
    if bound == 0 {
        return Err(Error::InvalidArgument("the bound must be at least 1".into()));
    }
    Ok(())
}

/// `depth_R N = inf{i : Ext^i_R(k, N) != 0}`, searched for `i <= bound`.
pub fn depth(n: &Restricted, bound: usize) -> Result<InvariantReport> {
    require_bound(bound)?;
    if n.is_zero() {
        let cert = Certificate { note: Some("zero module".into()), ..Default::default() };
        return Ok(InvariantReport::new("depth", ExtInt::PosInf, Status::Exact, cert));
    }
    let k = FpModule::residue_field(n.base());
    let q = DerivedQuery::ext(&k, n, bound)?;
    let mut cert = Certificate::default();
    for i in 0..=bound {
        if q.is_zero(i)? {
            cert.vanishing.push(i);
        } else {
            cert.witness_degree = Some(i);
            cert.nonvanishing.push(i);
            return Ok(InvariantReport::new("depth", ExtInt::Finite(i as i64), Status::Exact, cert));
        }
    }
    Ok(InvariantReport::new("depth", ExtInt::PosInf, Status::Unknown { bound }, cert))
}

/// `depth R` of the source ring of `N` over itself.
pub fn ring_depth(n: &Restricted, bound: usize) -> Result<InvariantReport> {
    let r = n.base();
    depth(&Restricted::over_itself(&FpModule::free(r, vec![0])), bound)
}

/// `fd_R N = sup{i : Tor_i^R(k, N) != 0}`, searched for `i <= bound`.
///
/// Exact when the resolution of `k` terminates (regular source ring) or when `N`
/// is over `R` itself with a terminating resolution.
pub fn fd_bounded(n: &Restricted, bound: usize) -> Result<InvariantReport> {
    require_bound(bound)?;
    if n.is_zero() {
        let cert = Certificate { note: Some("zero module".into()), ..Default::default() };
        return Ok(InvariantReport::new("fd", ExtInt::NegInf, Status::Exact, cert));
    }
    let r = n.base();
    if n.map().is_identity() {
        let res = free_resolution(n.module(), bound + 1);
        if let Some(pd) = res.projective_dimension() {
            let cert = Certificate {
                witness_degree: Some(pd),
                resolution_length: Some(pd),
                betti: res.ranks(pd),
                ..Default::default()
            };
            return Ok(InvariantReport::new("fd", ExtInt::Finite(pd as i64), Status::Exact, cert));
        }
    }
    let k = FpModule::residue_field(r);
    let q = DerivedQuery::tor(&k, n, bound)?;
    let support = q.support()?;
    let top = support.last().copied();
    let vanishing = (0..=bound).filter(|i| !support.contains(i)).collect();
    let k_res = free_resolution(&k, bound + 1);
    let mut cert = Certificate { witness_degree: top, vanishing, nonvanishing: support, ..Default::default() };
    let value = top.map_or(ExtInt::NegInf, |t| ExtInt::Finite(t as i64));
    let status = match k_res.projective_dimension() {
        Some(gd) if gd <= bound => {
            cert.resolution_length = Some(gd);
            Status::Exact
        }
        _ => Status::CertifiedUpTo { bound, t: None },
    };
    Ok(InvariantReport::new("fd", value, status, cert))
}

/// Whether the maximal ideal of the source ring lies in the small support of `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuppMembership {
    pub member: bool,
    /// The homological degree of the nonvanishing `Tor(k, N)` found.
    pub witness: Option<usize>,
}

/// `m ∈ supp_R N` iff `k ⊗^L N` is nonzero; for a module this is decided at the
/// bottom degree, `Tor_0(k, N) = N / m N`.
pub fn supp_member_max(n: &Restricted) -> Result<SuppMembership> {
    let k = FpModule::residue_field(n.base());
    let q = DerivedQuery::tor(&k, n, 0)?;
    let member = !q.is_zero(0)?;
    Ok(SuppMembership { member, witness: member.then_some(0) })
}

/// Lower bound `sup{i <= bound : Tor_i(T, X) != 0}` for the restricted flat dimension,
/// over test modules `T` whose flat dimension is certified exactly.
pub fn rfd_bounded(x: &Restricted, tests: &[FpModule], bound: usize) -> Result<InvariantReport> {
    require_bound(bound)?;
    if tests.is_empty() {
        return Err(Error::InvalidArgument("no test modules".into()));
    }
    let mut value = ExtInt::NegInf;
    let mut cert = Certificate::default();
    for t in tests {
        let fd = fd_bounded(&Restricted::over_itself(t), bound)?;
        if !fd.is_exact() {
            return Err(Error::Precondition("test module without an exact flat dimension certificate".into()));
        }
        let q = DerivedQuery::tor(t, x, bound)?;
        if let Some(top) = q.top()? {
            if ExtInt::Finite(top as i64) > value {
                value = ExtInt::Finite(top as i64);
                cert.witness_degree = Some(top);
            }
        }
    }
    Ok(InvariantReport::new("Rfd", value, Status::CertifiedUpTo { bound, t: None }, cert))
}
