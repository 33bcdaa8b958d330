//! Embedding totally reflexive modules into free ones and pushing a complex out along them.

use crate::algebra::vector::{Matrix, Vector};
use crate::complex::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::invariants::{is_totally_reflexive, InvariantReport};
use crate::module::{FpModule, ModuleMap};

/// `0 -> G -> F -> C -> 0` with `F` free, built from the generators of `G*`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub iota: ModuleMap,
    pub cokernel: FpModule,
    /// Total reflexivity of the cokernel.
    pub cokernel_report: InvariantReport,
}

/// Embeds a reflexive `G` into `F = (R^z)*` where `z` generate `G*`.
pub fn embed_totally_reflexive(g: &FpModule, bound: usize) -> Result<Embedding> {
    let ring = g.ring();
    if !g.biduality().is_isomorphism() {
        return Err(Error::Precondition("G -> G** is not an isomorphism".into()));
    }
    let z = g.dual().gens;
    let zt = z.transpose();
    let free = FpModule::free(ring, zt.target.clone());
    let iota = ModuleMap::new(g.clone(), free, zt)?;
    if !iota.is_injective() {
        return Err(Error::Postcondition("G -> F is not injective".into()));
    }
    let cokernel = iota.cokernel().minimal_presentation().module;
    let cokernel_report = is_totally_reflexive(&cokernel, bound)?;
    Ok(Embedding { iota, cokernel, cokernel_report })
}

/// The complex `Y` obtained from `X` by replacing `X_n` with `Y_n` and `X_{n-1}` with the
/// pushout of `Y_n <- X_n -> X_{n-1}`, together with the comparison map `X -> Y`.
#[derive(Clone, Debug)]
pub struct PushoutStep {
    pub n: i32,
    pub complex: Complex,
    pub comparison: ChainMap,
    /// `X_{n-1} -> Y_{n-1}`.
    pub iota_prime: ModuleMap,
    /// `Y_n -> Y_{n-1}`.
    pub beta_prime: ModuleMap,
}

/// Pushes `X` out along an injective `iota : X_n -> Y_n`.
///
/// Checks that `Y` is a complex, that the comparison is a chain map inducing an
/// isomorphism in homology, and that `coker iota ≅ coker iota'`.
pub fn pushout_step(x: &Complex, n: i32, iota: &ModuleMap) -> Result<PushoutStep> {
    let ring = x.ring();
    let xn = x.term(n);
    if iota.source().degrees() != xn.degrees() || iota.source().relations() != xn.relations() {
        return Err(Error::Precondition(format!("the map does not start at X_{n}")));
    }
    if !iota.is_injective() {
        return Err(Error::Precondition("the map is not injective".into()));
    }
    let order = ring.order();
    let yn = iota.target().clone();
    let xm = x.term(n - 1);
    let beta = x.differential(n);
    let a = yn.ngens();
    let b = xm.ngens();
    let shift = |v: &Vector| v.map_components(|c| c + a);

    let degrees: Vec<i32> = yn.degrees().iter().chain(xm.degrees()).copied().collect();
    let mut rel_src = Vec::new();
    let mut rel_cols = Vec::new();
    for (j, &d) in xn.degrees().iter().enumerate() {
        rel_src.push(d);
        rel_cols.push(iota.matrix().cols[j].add(&shift(&beta.cols[j].neg()), order));
    }
    let yr = yn.relations();
    rel_src.extend(&yr.source);
    rel_cols.extend(yr.cols.iter().cloned());
    let xr = xm.relations();
    rel_src.extend(&xr.source);
    rel_cols.extend(xr.cols.iter().map(shift));
    let raw = FpModule::new(ring, degrees.clone(), Matrix::new(degrees, rel_src, rel_cols))?;
    let pruned = raw.minimal_presentation();
    let ym = pruned.module.clone();
    let new_degs = ym.degrees().to_vec();

    let beta_p = Matrix::new(new_degs.clone(), yn.degrees().to_vec(), pruned.to_pruned.cols[..a].to_vec());
    let iota_p = Matrix::new(new_degs.clone(), xm.degrees().to_vec(), pruned.to_pruned.cols[a..a + b].to_vec());
    let gamma = x.differential(n - 1);
    let gamma_p = Matrix::new(
        gamma.target.clone(),
        new_degs.clone(),
        pruned.from_pruned.cols.iter().map(|v| ring.apply_matrix(&gamma, &v.restrict(a..a + b))).collect(),
    );
    let alpha_p = ring.mat_mul(iota.matrix(), &x.differential(n + 1));

    let lo = x.lo().min(n - 1);
    let hi = x.hi().max(n);
    let terms = (lo..=hi)
        .map(|l| match l {
            l if l == n => yn.clone(),
            l if l == n - 1 => ym.clone(),
            l => x.term(l),
        })
        .collect();
    let diffs = (lo + 1..=hi)
        .map(|l| match l {
            l if l == n + 1 => alpha_p.clone(),
            l if l == n => beta_p.clone(),
            l if l == n - 1 => gamma_p.clone(),
            l => x.differential(l),
        })
        .collect();
    let y = Complex::new(ring, lo, terms, diffs).map_err(|e| Error::Postcondition(format!("pushout: {e}")))?;

    let one = ring.field().one();
    let maps = x
        .range()
        .map(|l| match l {
            l if l == n => iota.matrix().clone(),
            l if l == n - 1 => iota_p.clone(),
            l => Matrix::identity(x.term(l).degrees().to_vec(), &one, ring.nvars()),
        })
        .collect();
    let comparison =
        ChainMap::new(x.clone(), y.clone(), maps).map_err(|e| Error::Postcondition(format!("comparison map: {e}")))?;
    let iota_prime = ModuleMap::new(xm, ym.clone(), iota_p.clone())?;
    let beta_prime = ModuleMap::new(yn, ym.clone(), beta_p.clone())?;

    let coker_p = FpModule::new(ring, new_degs, ym.relations().concat(&iota_p))?;
    let induced = ModuleMap::new(iota.cokernel(), coker_p, beta_p)?;
    if !induced.is_isomorphism() {
        return Err(Error::Postcondition("coker iota -> coker iota' is not an isomorphism".into()));
    }
    for l in lo..=hi {
        if !comparison.on_homology(l).is_isomorphism() {
            return Err(Error::Postcondition(format!("comparison is not an isomorphism on H_{l}")));
        }
    }
    Ok(PushoutStep { n, complex: y, comparison, iota_prime, beta_prime })
}
