//! Complexes quasi-isomorphic to `N` with free terms on top of a totally reflexive one.

use crate::approximation::pushout::{embed_totally_reflexive, pushout_step};
use crate::complex::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::invariants::{gdim, is_totally_reflexive, syzygy_module, Certificate, InvariantReport, Status};
use crate::module::{free_resolution, FpModule};
use crate::numbers::ExtInt;

/// The stages `C(d+1), C(d), ..., C(n)` for `d = Gdim N`.
///
/// `C(m)` is free in degrees `m..=d`, totally reflexive in degree `m - 1` and free below;
/// each stage is the pushout of the previous one along an embedding into a free module.
#[derive(Clone, Debug)]
pub struct ReflexiveTail {
    pub n: i32,
    pub d: usize,
    pub gdim: InvariantReport,
    pub stages: Vec<Complex>,
    /// `C(m+1) -> C(m)`, each a quasi-isomorphism.
    pub comparisons: Vec<ChainMap>,
    /// Total reflexivity of `G_d, G_{d-1}, ..., G_{n-1}`.
    pub reflexive: Vec<InvariantReport>,
}

impl ReflexiveTail {
    /// `C(n)`.
    pub fn complex(&self) -> &Complex {
        self.stages.last().expect("at least the starting stage")
    }

    /// The totally reflexive term `G_{n-1}` of `C(n)`.
    pub fn reflexive_term(&self) -> FpModule {
        self.complex().term(self.n - 1)
    }

    /// Certified up to the smallest bound among the reflexivity checks.
    pub fn status(&self) -> Status {
        let bound = self
            .reflexive
            .iter()
            .filter_map(|r| match r.status {
                Status::CertifiedUpTo { bound, .. } => Some(bound),
                _ => None,
            })
            .min();
        match bound {
            Some(bound) => Status::CertifiedUpTo { bound, t: None },
            None => Status::Exact,
        }
    }
}

/// The certified finite G-dimension of `N`, or an error.
pub(crate) fn certified_gdim(n: &FpModule, bound: usize) -> Result<(usize, InvariantReport)> {
    let g = gdim(n, bound)?;
    match (g.established(), g.value) {
        (Some(_), ExtInt::Finite(d)) => Ok((d as usize, g)),
        (Some(_), _) => Err(Error::Precondition("the zero module has no approximation".into())),
        _ => Err(Error::Uncertified(format!("G-dimension of N: {g}"))),
    }
}

/// Builds `C(n)` for `n <= Gdim N + 1`.
pub fn build_reflexive_tail(n_mod: &FpModule, n: i32, bound: usize) -> Result<ReflexiveTail> {
    let (d, g) = certified_gdim(n_mod, bound)?;
    if n > d as i32 + 1 {
        return Err(Error::Precondition(format!("n = {n} exceeds Gdim N + 1 = {}", d + 1)));
    }
    let ring = n_mod.ring();
    let gd = syzygy_module(n_mod, d);
    let start = if d == 0 {
        Complex::concentrated(&gd, 0)
    } else {
        let res = free_resolution(n_mod, d + 1);
        let mut terms: Vec<FpModule> = (0..d).map(|i| FpModule::free(ring, res.degrees(i).to_vec())).collect();
        terms.push(gd.clone());
        let diffs = (1..=d).map(|i| res.differential(i).clone()).collect();
        Complex::new(ring, 0, terms, diffs)?
    };
    if let Some(l) = start.range().find(|&l| l != 0 && !start.is_exact_at(l)) {
        return Err(Error::Postcondition(format!("starting complex has homology in degree {l}")));
    }
    let first = InvariantReport::new(
        "totally_reflexive",
        ExtInt::Finite(0),
        g.status.clone(),
        Certificate { tail: g.certificate.tail.clone(), ..Default::default() },
    );
    let mut tail =
        ReflexiveTail { n, d, gdim: g, stages: vec![start], comparisons: Vec::new(), reflexive: vec![first] };
    let mut m = d as i32;
    while m >= n {
        let c = tail.complex().clone();
        let emb = embed_totally_reflexive(&c.term(m), bound)?;
        if emb.cokernel_report.established().is_none() {
            return Err(Error::Uncertified(format!(
                "cokernel of the embedding in degree {m}: {}",
                emb.cokernel_report
            )));
        }
        let step = pushout_step(&c, m, &emb.iota)?;
        let report = is_totally_reflexive(&step.complex.term(m - 1), bound)?;
        if report.established().is_none() {
            return Err(Error::Uncertified(format!("term in degree {}: {report}", m - 1)));
        }
        tail.reflexive.push(report);
        tail.comparisons.push(step.comparison);
        tail.stages.push(step.complex);
        m -= 1;
    }
    Ok(tail)
}
