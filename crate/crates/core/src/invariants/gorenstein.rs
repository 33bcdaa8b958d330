//! Total reflexivity, G-dimension and bounded Gorenstein flat dimension.

use crate::complex::ChainMap;
use crate::error::{Error, Result};
use crate::invariants::derived::DerivedQuery;
use crate::invariants::numeric::{depth, ring_depth};
use crate::invariants::report::{Certificate, InvariantReport, Status, TailCertificate, Witness};
use crate::module::{free_resolution, hull_inclusion, injective_hull_truncation, FpModule, ModuleMap, Restricted};
use crate::numbers::ExtInt;

/// First `i` in `1..=bound` with `Ext^i(M, R) != 0`, growing the computed window geometrically.
fn first_ext_nonvanishing(m: &FpModule, bound: usize) -> Result<Option<usize>> {
    let r = Restricted::over_itself(&FpModule::free(m.ring(), vec![0]));
    let mut checked = 0;
    let mut window = 1;
    while checked < bound {
        let top = window.min(bound);
        let q = DerivedQuery::ext(m, &r, top)?;
        for i in checked + 1..=top {
            if !q.is_zero(i)? {
                return Ok(Some(i));
            }
        }
        checked = top;
        window *= 2;
    }
    Ok(None)
}

/// Checks biduality and `Ext^i(G, R) = Ext^i(G*, R) = 0` for `1 <= i <= bound`.
///
/// The reported value `0` is the G-dimension claimed for `G`; success certifies it up
/// to the bound, any failing check refutes it.
pub fn is_totally_reflexive(g: &FpModule, bound: usize) -> Result<InvariantReport> {
    if bound == 0 {
        return Err(Error::InvalidArgument("the bound must be at least 1".into()));
    }
    let (status, tail) = reflexivity(g, bound, 0)?;
    let cert = Certificate { tail: Some(tail), ..Default::default() };
    Ok(InvariantReport::new("totally_reflexive", ExtInt::Finite(0), status, cert))
}

fn reflexivity(g: &FpModule, bound: usize, syzygy_degree: usize) -> Result<(Status, TailCertificate)> {
    let mut tail = TailCertificate { syzygy_degree, biduality: false, ext_bound: 0, dual_ext_bound: 0 };
    let refuted = |witness| Status::Refuted { witness };
    if !g.biduality().is_isomorphism() {
        return Ok((refuted(Witness::Biduality), tail));
    }
    tail.biduality = true;
    if let Some(i) = first_ext_nonvanishing(g, bound)? {
        tail.ext_bound = i - 1;
        return Ok((refuted(Witness::Ext(i)), tail));
    }
    tail.ext_bound = bound;
    let dual = g.dual().module;
    if let Some(i) = first_ext_nonvanishing(&dual, bound)? {
        tail.dual_ext_bound = i - 1;
        return Ok((refuted(Witness::DualExt(i)), tail));
    }
    tail.dual_ext_bound = bound;
    Ok((Status::CertifiedUpTo { bound, t: None }, tail))
}

/// `Gdim N = sup{i : Ext^i(N, R) != 0}`, accepted when the syzygy in that degree is
/// totally reflexive up to the bound.
pub fn gdim(n: &FpModule, bound: usize) -> Result<InvariantReport> {
    if bound == 0 {
        return Err(Error::InvalidArgument("the bound must be at least 1".into()));
    }
    if n.is_zero() {
        let cert = Certificate { note: Some("zero module".into()), ..Default::default() };
        return Ok(InvariantReport::new("gdim", ExtInt::NegInf, Status::Exact, cert));
    }
    let r = Restricted::over_itself(&FpModule::free(n.ring(), vec![0]));
    let q = DerivedQuery::ext(n, &r, bound)?;
    let support = q.support()?;
    let mut cert = Certificate {
        vanishing: (0..=bound).filter(|i| !support.contains(i)).collect(),
        nonvanishing: support.clone(),
        betti: q.betti().to_vec(),
        ..Default::default()
    };
    let Some(&d) = support.last() else {
        cert.note = Some("Ext(N, R) vanishes through the bound".into());
        return Ok(InvariantReport::new("gdim", ExtInt::PosInf, Status::Unknown { bound }, cert));
    };
    cert.witness_degree = Some(d);
    let syz = syzygy_module(n, d);
    let (status, tail) = reflexivity(&syz, bound, d)?;
    cert.tail = Some(tail);
    match status {
        Status::CertifiedUpTo { .. } => Ok(InvariantReport::new("gdim", ExtInt::Finite(d as i64), status, cert)),
        Status::Refuted { witness } => {
            cert.note = Some(format!("syzygy {d} not certified totally reflexive: {witness}"));
            Ok(InvariantReport::new("gdim", ExtInt::PosInf, Status::Unknown { bound }, cert))
        }
        _ => unreachable!("reflexivity reports certified or refuted"),
    }
}

/// The `d`-th syzygy `coker(F_{d+1} -> F_d)` in a minimal resolution (`N` itself for `d = 0`).
pub fn syzygy_module(n: &FpModule, d: usize) -> FpModule {
    let res = free_resolution(n, d + 1);
    if d == 0 {
        return res.presentation().module.clone();
    }
    let degrees = res.degrees(d).to_vec();
    let rel = res.differential(d + 1).clone();
    FpModule::new(n.ring(), degrees, rel).expect("resolution data is consistent")
}

/// Largest `i <= bound` with `Tor_i(f, N)` nonzero.
fn tor_image_top(f: &ModuleMap, n: &Restricted, bound: usize) -> Result<ExtInt> {
    let lifted = ChainMap::lift(f, bound + 1)?.tensor(n)?;
    for i in (0..=bound).rev() {
        if !lifted.on_homology(i as i32).image().is_zero() {
            return Ok(ExtInt::Finite(i as i64));
        }
    }
    Ok(ExtInt::NegInf)
}

fn tor_top(test: &FpModule, n: &Restricted, bound: usize) -> Result<ExtInt> {
    let q = DerivedQuery::tor(test, n, bound)?;
    Ok(q.top()?.map_or(ExtInt::NegInf, |i| ExtInt::Finite(i as i64)))
}

/// `sup{i <= bound : Tor_i(E_t, N) -> Tor_i(E_T, N) is nonzero}` for the truncations `E_t`,
/// `1 <= t <= t_max`, of the injective hull of `k` over the source ring, where `E_T` is the
/// hull itself (artinian source with `T <= t_max + 1`) or `T = t_max + 1`.
///
/// `Tor_i(E, N)` is the colimit of `Tor_i(E_t, N)`, and these values are nondecreasing in `t`.
/// The reported value is the one at `t_max`; `stabilized` records that `E_T` is the injective
/// hull or that the last two values agree.
pub fn gfd_bounded(n: &Restricted, t_max: u32, bound: usize) -> Result<InvariantReport> {
    if bound == 0 || t_max == 0 {
        return Err(Error::InvalidArgument("t_max and the bound must be at least 1".into()));
    }
    if n.is_zero() {
        let cert = Certificate { note: Some("zero module".into()), ..Default::default() };
        return Ok(InvariantReport::new("Gfd", ExtInt::NegInf, Status::Exact, cert));
    }
    let r = n.base();
    let saturation = r.nilpotency_index().filter(|&s| s <= t_max + 1);
    let top_t = saturation.unwrap_or(t_max + 1);
    let mut per_t: Vec<(u32, ExtInt)> = Vec::new();
    let mut into_top: Option<ModuleMap> = None;
    for t in (1..=t_max).rev() {
        let value = if t >= top_t {
            tor_top(&injective_hull_truncation(r, top_t)?, n, bound)?
        } else {
            let step = hull_inclusion(r, t)?;
            let f = match &into_top {
                Some(g) => step.then(g)?,
                None => step,
            };
            let v = tor_image_top(&f, n, bound)?;
            into_top = Some(f);
            v
        };
        per_t.push((t, value));
    }
    per_t.reverse();
    let value = per_t.last().expect("t_max >= 1").1;
    let stabilized = saturation.is_some() || (per_t.len() >= 2 && per_t[per_t.len() - 2].1 == value);
    let dr = ring_depth(n, bound)?;
    let dn = depth(n, bound)?;
    let depth_difference = if dr.is_exact() && dn.is_exact() { dr.value.checked_sub(dn.value) } else { None };
    let cert = Certificate {
        witness_degree: value.finite().map(|v| v as usize),
        per_t,
        stabilized: Some(stabilized),
        depth_difference,
        ..Default::default()
    };
    Ok(InvariantReport::new("Gfd", value, Status::CertifiedUpTo { bound, t: Some(t_max) }, cert))
}

/// `sup` over explicit test modules `J` of `sup{i <= bound : Tor_i(J, N) != 0}`.
pub fn gfd_against(n: &Restricted, tests: &[FpModule], bound: usize) -> Result<InvariantReport> {
    if tests.is_empty() {
        return Err(Error::InvalidArgument("empty test set".into()));
    }
    if bound == 0 {
        return Err(Error::InvalidArgument("the bound must be at least 1".into()));
    }
    let mut value = ExtInt::NegInf;
    for t in tests {
        value = value.max(tor_top(t, n, bound)?);
    }
    let cert = Certificate { witness_degree: value.finite().map(|v| v as usize), ..Default::default() };
    Ok(InvariantReport::new("Gfd", value, Status::CertifiedUpTo { bound, t: None }, cert))
}
