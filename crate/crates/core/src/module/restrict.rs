//! Modules over a target ring viewed over a source ring along a ring map.

use crate::algebra::poly::Polynomial;
use crate::algebra::ring::{Ring, RingMap};
use crate::algebra::vector::Vector;
use crate::error::{Error, Result};
use crate::module::fpmodule::{same_ring, FpModule};

/// `N` over `S`, regarded as an `R`-module through `phi: R -> S`.
///
/// No `R`-presentation is ever formed; functors are evaluated over `S`.
#[derive(Clone, Debug)]
pub struct Restricted {
    phi: RingMap,
    module: FpModule,
}

impl Restricted {
    pub fn new(phi: RingMap, module: FpModule) -> Result<Restricted> {
        if !same_ring(phi.target(), module.ring()) {
            return Err(Error::RingMismatch("module is not over the target of the map".into()));
        }
        Ok(Restricted { phi, module })
    }

    /// A module over `R` regarded along the identity.
    pub fn over_itself(module: &FpModule) -> Restricted {
        Restricted { phi: RingMap::identity(module.ring()), module: module.clone() }
    }

    pub fn map(&self) -> &RingMap {
        &self.phi
    }

    pub fn module(&self) -> &FpModule {
        &self.module
    }

    /// The ring acting through the map.
    pub fn base(&self) -> &Ring {
        self.phi.source()
    }

    /// `f · v = phi(f) v`, reduced in `N`.
    pub fn act(&self, f: &Polynomial, v: &Vector) -> Result<Vector> {
        let g = self.phi.apply(f)?;
        let ring = self.module.ring();
        Ok(self.module.normal_form(&v.mul_poly(&g, ring.order())))
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }
}

/// `restrict_scalars(phi, N)`.
pub fn restrict_scalars(phi: &RingMap, module: &FpModule) -> Result<Restricted> {
    Restricted::new(phi.clone(), module.clone())
}
