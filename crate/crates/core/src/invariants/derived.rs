//! `Ext_R(M, N)` and `Tor^R(M, N)` for an `S`-module `N` restricted along `R -> S`.

use crate::complex::{Complex, Subquotient};
use crate::error::{Error, Result};
use crate::module::fpmodule::same_ring;
use crate::module::{free_resolution, FpModule, Restricted};

/// Homology of `Hom_R(F, N)` or `F ⊗_R N` for a minimal resolution `F` of `M`,
/// computed through a fixed homological bound.
#[derive(Clone, Debug)]
pub struct DerivedQuery {
    complex: Complex,
    bound: usize,
    cohomological: bool,
    betti: Vec<usize>,
}

impl DerivedQuery {
    /// `Ext^i_R(M, N)` for `0 <= i <= bound`.
    pub fn ext(m: &FpModule, n: &Restricted, bound: usize) -> Result<DerivedQuery> {
        let (f, betti) = resolution_complex(m, n, bound)?;
        Ok(DerivedQuery { complex: f.hom_into(n)?, bound, cohomological: true, betti })
    }

    /// `Tor_i^R(M, N)` for `0 <= i <= bound`.
    pub fn tor(m: &FpModule, n: &Restricted, bound: usize) -> Result<DerivedQuery> {
        let (f, betti) = resolution_complex(m, n, bound)?;
        Ok(DerivedQuery { complex: f.tensor(n)?, bound, cohomological: false, betti })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The underlying complex over the ring of `N`, homologically indexed.
    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    /// Betti numbers of the resolution of `M` through `bound + 1`.
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    fn position(&self, i: usize) -> Result<i32> {
        if i > self.bound {
            return Err(Error::InvalidArgument(format!("degree {i} exceeds the computed bound {}", self.bound)));
        }
        Ok(if self.cohomological { -(i as i32) } else { i as i32 })
    }

    pub fn subquotient(&self, i: usize) -> Result<Subquotient> {
        Ok(self.complex.homology(self.position(i)?))
    }

    pub fn module(&self, i: usize) -> Result<FpModule> {
        Ok(self.complex.homology_module(self.position(i)?))
    }

    pub fn is_zero(&self, i: usize) -> Result<bool> {
        Ok(self.complex.is_exact_at(self.position(i)?))
    }

    /// `dim_k` when the ring of `N` is artinian.
    pub fn length(&self, i: usize) -> Result<Option<usize>> {
        Ok(self.complex.homology_length(self.position(i)?))
    }

    /// `dim_k` in one internal degree.
    pub fn dim_in_degree(&self, i: usize, d: i32) -> Result<usize> {
        Ok(self.complex.homology_dim(self.position(i)?, d))
    }

    /// Degrees `i <= bound` with nonzero homology, ascending.
    pub fn support(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..=self.bound {
            if !self.is_zero(i)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Largest `i <= bound` with nonzero homology, scanning downwards.
    pub fn top(&self) -> Result<Option<usize>> {
        for i in (0..=self.bound).rev() {
            if !self.is_zero(i)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Least `i <= bound` with nonzero homology.
    pub fn bottom(&self) -> Result<Option<usize>> {
        for i in 0..=self.bound {
            if !self.is_zero(i)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

fn resolution_complex(m: &FpModule, n: &Restricted, bound: usize) -> Result<(Complex, Vec<usize>)> {
    if !same_ring(m.ring(), n.base()) {
        return Err(Error::RingMismatch("M is not over the source of the map".into()));
    }
    let res = free_resolution(m, bound + 1);
    Ok((Complex::from_resolution(&res, bound + 1), res.ranks(bound + 1)))
}

/// `Ext^i_R(M, N)` as a module over the ring of `N`.
pub fn ext(m: &FpModule, n: &Restricted, i: usize) -> Result<FpModule> {
    DerivedQuery::ext(m, n, i)?.module(i)
}

/// `Tor_i^R(M, N)` as a module over the ring of `N`.
pub fn tor_over_phi(m: &FpModule, n: &Restricted, i: usize) -> Result<FpModule> {
    DerivedQuery::tor(m, n, i)?.module(i)
}
