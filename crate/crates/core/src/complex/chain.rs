//! Bounded complexes of finitely presented graded modules, homologically indexed.

use std::ops::RangeInclusive;

use crate::algebra::degreewise::FreeGraded;
use crate::algebra::linalg::{dispatch_field, Span};
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::{Ring, RingMap};
use crate::algebra::scalar::Scalar;
use crate::algebra::syz::{kernel_mod, solve};
use crate::algebra::vector::{Matrix, Vector};
use crate::complex::subquotient::{Subquotient, SubquotientMap};
use crate::error::{Error, Result};
use crate::module::fpmodule::{same_ring, FpModule, ModuleMap};
use crate::module::resolution::{free_resolution, Resolution};
use crate::module::restrict::Restricted;
use crate::numbers::{inf, sup, ExtInt};

/// `C_hi -> ... -> C_lo`, zero outside `[lo, hi]`.
#[derive(Clone, Debug)]
pub struct Complex {
    ring: Ring,
    lo: i32,
    terms: Vec<FpModule>,
    /// `diffs[k] = d_{lo+k+1} : C_{lo+k+1} -> C_{lo+k}`.
    diffs: Vec<Matrix>,
}

impl Complex {
    /// Validates the differentials as module maps and checks `d ∘ d = 0`.
    pub fn new(ring: &Ring, lo: i32, terms: Vec<FpModule>, diffs: Vec<Matrix>) -> Result<Complex> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::NotAComplex("need one differential between consecutive terms".into()));
        }
        for t in &terms {
            if !same_ring(t.ring(), ring) {
                return Err(Error::RingMismatch("complex term over another ring".into()));
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            ModuleMap::new(terms[k + 1].clone(), terms[k].clone(), d.clone())
                .map_err(|e| Error::NotAComplex(format!("differential {}: {e}", lo + k as i32 + 1)))?;
        }
        let c = Complex { ring: ring.clone(), lo, terms, diffs };
        if let Some(l) = c.first_nonzero_square() {
            return Err(Error::NotAComplex(format!("d_{} ∘ d_{} is not zero", l - 1, l)));
        }
        Ok(c)
    }

    pub fn zero(ring: &Ring) -> Complex {
        Complex { ring: ring.clone(), lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `M` placed in homological degree `at`.
    pub fn concentrated(m: &FpModule, at: i32) -> Complex {
        Complex { ring: m.ring().clone(), lo: at, terms: vec![m.clone()], diffs: Vec::new() }
    }

    /// `F_bound -> ... -> F_0` from a resolution computed at least that far.
    pub fn from_resolution(res: &Resolution, bound: usize) -> Complex {
        let ring = res.ring().clone();
        let top = bound.min(res.length());
        let terms = (0..=top).map(|i| FpModule::free(&ring, res.degrees(i).to_vec())).collect();
        let diffs = (1..=top).map(|i| res.differential(i).clone()).collect();
        Complex { ring, lo: 0, terms, diffs }
    }

    /// The Koszul complex on homogeneous elements `f_1, ..., f_n`.
    pub fn koszul(ring: &Ring, elems: &[Polynomial]) -> Result<Complex> {
        let n = elems.len();
        if n > 16 {
            return Err(Error::Unsupported("Koszul complex on more than 16 elements".into()));
        }
        let mut degs = Vec::with_capacity(n);
        for f in elems {
            let f = ring.normal_form(f)?;
            match f.degree() {
                Some(d) if f.is_homogeneous() => degs.push(d as i32),
                None => degs.push(0),
                _ => return Err(Error::Inhomogeneous("Koszul element".into())),
            }
        }
        let subsets: Vec<Vec<u32>> =
            (0..=n).map(|k| (0u32..(1 << n)).filter(|s| s.count_ones() as usize == k).collect()).collect();
        let deg_of = |s: u32| (0..n).filter(|i| s >> i & 1 == 1).map(|i| degs[i]).sum::<i32>();
        let terms: Vec<FpModule> =
            subsets.iter().map(|ss| FpModule::free(ring, ss.iter().map(|&s| deg_of(s)).collect())).collect();
        let mut diffs = Vec::new();
        for k in 1..=n {
            let pos = |s: u32| subsets[k - 1].iter().position(|&t| t == s).unwrap();
            let cols = subsets[k]
                .iter()
                .map(|&s| {
                    let mut entries = Vec::new();
                    let mut sign = 1i64;
                    for i in 0..n {
                        if s >> i & 1 == 1 {
                            let c = ring.field().from_i64(sign);
                            entries.push((pos(s & !(1 << i)), ring.nf(&elems[i].scale(&c))));
                            sign = -sign;
                        }
                    }
                    Vector::from_entries(entries)
                })
                .collect();
            let target = subsets[k - 1].iter().map(|&s| deg_of(s)).collect();
            let source = subsets[k].iter().map(|&s| deg_of(s)).collect();
            diffs.push(Matrix::new(target, source, cols));
        }
        Ok(Complex { ring: ring.clone(), lo: 0, terms, diffs })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Largest index with a stored term; `lo - 1` when there are none.
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn range(&self) -> RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn term(&self, l: i32) -> FpModule {
        if self.range().contains(&l) {
            self.terms[(l - self.lo) as usize].clone()
        } else {
            FpModule::zero(&self.ring)
        }
    }

    /// `d_l : C_l -> C_{l-1}`, zero outside the stored range.
    pub fn differential(&self, l: i32) -> Matrix {
        if l > self.lo && l <= self.hi() {
            self.diffs[(l - self.lo - 1) as usize].clone()
        } else {
            Matrix::zero(self.term(l - 1).degrees().to_vec(), self.term(l).degrees().to_vec())
        }
    }

    /// Every term is presented without relations.
    pub fn is_free(&self) -> bool {
        self.terms.iter().all(|t| t.is_free_presentation())
    }

    fn first_nonzero_square(&self) -> Option<i32> {
        for l in self.lo + 2..=self.hi() {
            let dd = self.ring.mat_mul(&self.differential(l - 1), &self.differential(l));
            let target = self.term(l - 2);
            if dd.cols.iter().any(|c| !target.is_zero_element(c)) {
                return Some(l);
            }
        }
        None
    }

    pub fn is_complex(&self) -> bool {
        self.first_nonzero_square().is_none()
    }

    /// `H_l = ker d_l / im d_{l+1}` as a subquotient of the free cover of `C_l`.
    pub fn homology(&self, l: i32) -> Subquotient {
        let cl = self.term(l);
        let below = self.term(l - 1);
        let z = if below.ngens() == 0 {
            Matrix::identity(cl.degrees().to_vec(), &self.ring.field().one(), self.ring.nvars())
        } else {
            kernel_mod(&self.ring, &self.differential(l), Some(below.relations()))
        };
        let rels = self.differential(l + 1).concat(cl.relations());
        Subquotient::from_parts(self.ring.clone(), z, rels)
    }

    /// `H_l` presented minimally.
    pub fn homology_module(&self, l: i32) -> FpModule {
        self.homology(l).module()
    }

    /// `dim_k H_l` in internal degree `d`, by rank counts alone.
    pub fn homology_dim(&self, l: i32, d: i32) -> usize {
        let cl = self.term(l);
        let below = self.term(l - 1);
        let dl = self.differential(l);
        let dup = self.differential(l + 1);
        dispatch_field!(self.ring.field(), |f| {
            let mut src = FreeGraded::new(&self.ring, cl.degrees().to_vec());
            let mut tgt = FreeGraded::new(&self.ring, below.degrees().to_vec());
            let n = src.basis(d).len();
            if n == 0 {
                return 0;
            }
            let m = tgt.basis(d).len();
            let mut rel_below = Span::new(*f, m);
            for v in tgt.submodule_piece(f, below.relations(), d) {
                rel_below.insert(&v);
            }
            let r0 = rel_below.rank();
            for v in src.map_columns(f, &dl, &mut tgt, d) {
                rel_below.insert(&v);
            }
            let cycles = n - (rel_below.rank() - r0);
            let mut bounds = Span::new(*f, n);
            for v in src.submodule_piece(f, cl.relations(), d) {
                bounds.insert(&v);
            }
            for v in src.submodule_piece(f, &dup, d) {
                bounds.insert(&v);
            }
            cycles - bounds.rank()
        })
    }

    /// Internal degrees that can carry homology, when the ring is artinian.
    pub fn degree_window(&self) -> Option<(i32, i32)> {
        let top = self.ring.top_degree()?;
        let degs = self.terms.iter().flat_map(|t| t.degrees().iter().copied());
        let lo = degs.clone().min()?;
        let hi = degs.max()?;
        Some((lo, hi + top))
    }

    /// Internal degrees where `C_l` can be nonzero, when the ring is artinian.
    pub fn term_window(&self, l: i32) -> Option<(i32, i32)> {
        let top = self.ring.top_degree()?;
        let t = self.term(l);
        let lo = t.degrees().iter().copied().min()?;
        let hi = t.degrees().iter().copied().max()?;
        Some((lo, hi + top))
    }

    /// `dim_k H_l` when the ring is artinian.
    pub fn homology_length(&self, l: i32) -> Option<usize> {
        if !self.ring.is_artinian() {
            return None;
        }
        let Some((lo, hi)) = self.term_window(l) else { return Some(0) };
        Some((lo..=hi).map(|d| self.homology_dim(l, d)).sum())
    }

    /// Whether `H_l = 0`.
    pub fn is_exact_at(&self, l: i32) -> bool {
        if !self.range().contains(&l) {
            return true;
        }
        if let Some((lo, hi)) = self.term_window(l) {
            return (lo..=hi).all(|d| self.homology_dim(l, d) == 0);
        }
        if self.ring.is_artinian() {
            return true;
        }
        self.homology(l).is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.range().all(|l| self.is_exact_at(l))
    }

    /// `sup{l : H_l != 0}`.
    pub fn homology_sup(&self) -> ExtInt {
        sup(self.range().filter(|&l| !self.is_exact_at(l)).map(i64::from))
    }

    /// `inf{l : H_l != 0}`.
    pub fn homology_inf(&self) -> ExtInt {
        inf(self.range().filter(|&l| !self.is_exact_at(l)).map(i64::from))
    }

    /// `Σ^s C`: `(Σ^s C)_l = C_{l-s}` with differential `(-1)^s d`.
    pub fn shift(&self, s: i32) -> Complex {
        let diffs = if s % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(Matrix::neg).collect() };
        Complex { ring: self.ring.clone(), lo: self.lo + s, terms: self.terms.clone(), diffs }
    }

    /// Brutal truncation keeping the terms with index in `[a, b]`.
    pub fn truncate(&self, a: i32, b: i32) -> Complex {
        let a = a.max(self.lo);
        let b = b.min(self.hi());
        if a > b {
            return Complex { ring: self.ring.clone(), lo: a, terms: Vec::new(), diffs: Vec::new() };
        }
        let terms = (a..=b).map(|l| self.term(l)).collect();
        let diffs = (a + 1..=b).map(|l| self.differential(l)).collect();
        Complex { ring: self.ring.clone(), lo: a, terms, diffs }
    }

    /// `C_{>= n}`.
    pub fn truncate_below(&self, n: i32) -> Complex {
        self.truncate(n, self.hi())
    }

    /// `C_{<= n}`.
    pub fn truncate_above(&self, n: i32) -> Complex {
        self.truncate(self.lo, n)
    }

    /// `C ⊗_R S` along `phi`.
    pub fn base_change(&self, phi: &RingMap) -> Result<Complex> {
        if !same_ring(phi.source(), &self.ring) {
            return Err(Error::RingMismatch("base change along a map from another ring".into()));
        }
        let s = phi.target().clone();
        let terms = self
            .terms
            .iter()
            .map(|t| FpModule::from_parts(s.clone(), t.degrees().to_vec(), phi.apply_matrix(t.relations())))
            .collect();
        let diffs = self.diffs.iter().map(|d| phi.apply_matrix(d)).collect();
        Ok(Complex { ring: s, lo: self.lo, terms, diffs })
    }

    /// `C ⊗_R N` for a complex of free `R`-modules and an `S`-module `N` restricted along `phi`.
    pub fn tensor(&self, n: &Restricted) -> Result<Complex> {
        self.require_free_over(n.map().source())?;
        let phi = n.map();
        let module = n.module();
        let terms = self.terms.iter().map(|t| module.blocks(t.degrees())).collect();
        let diffs = self.diffs.iter().map(|d| kron_identity(&phi.apply_matrix(d), module)).collect();
        Ok(Complex { ring: module.ring().clone(), lo: self.lo, terms, diffs })
    }

    /// `Hom_R(C, N)` homologically indexed: cohomological degree `i` sits at `-i`.
    pub fn hom_into(&self, n: &Restricted) -> Result<Complex> {
        self.require_free_over(n.map().source())?;
        let phi = n.map();
        let module = n.module();
        let s = module.ring().clone();
        if self.terms.is_empty() {
            return Ok(Complex::zero(&s));
        }
        let lo = -self.hi();
        let terms = (lo..=-self.lo)
            .map(|p| {
                let neg: Vec<i32> = self.term(-p).degrees().iter().map(|a| -a).collect();
                module.blocks(&neg)
            })
            .collect();
        let diffs = (lo..-self.lo)
            .map(|p| kron_identity(&phi.apply_matrix(&self.differential(-p).transpose()), module))
            .collect();
        Ok(Complex { ring: s, lo, terms, diffs })
    }

    fn require_free_over(&self, r: &Ring) -> Result<()> {
        if !same_ring(r, &self.ring) {
            return Err(Error::RingMismatch("module is restricted along a map from another ring".into()));
        }
        if !self.is_free() {
            return Err(Error::Unsupported("functor on a complex with non-free terms".into()));
        }
        Ok(())
    }
}

/// `A ⊗ I_g` on `N`-blocks: column `(j, l)` at index `j * g + l`.
pub(crate) fn kron_identity(a: &Matrix, n: &FpModule) -> Matrix {
    let g = n.ngens();
    let nd = n.degrees();
    let target = a.target.iter().flat_map(|t| nd.iter().map(move |e| t + e)).collect();
    let source = a.source.iter().flat_map(|s| nd.iter().map(move |e| s + e)).collect();
    let mut cols = Vec::with_capacity(a.ncols() * g);
    for col in &a.cols {
        for l in 0..g {
            cols.push(col.map_components(|i| i * g + l));
        }
    }
    Matrix::new(target, source, cols)
}

/// A degree-preserving chain map `f_l : C_l -> D_l`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    /// Components for `l` in `source.range()`.
    maps: Vec<Matrix>,
}

impl ChainMap {
    /// Checks well-definedness of each component and `d f = f d`.
    pub fn new(source: Complex, target: Complex, maps: Vec<Matrix>) -> Result<ChainMap> {
        if maps.len() != source.terms.len() {
            return Err(Error::IllFormedModuleMap("one component per source term".into()));
        }
        let f = ChainMap { source, target, maps };
        for l in f.source.range() {
            ModuleMap::new(f.source.term(l), f.target.term(l), f.component(l))
                .map_err(|e| Error::IllFormedModuleMap(format!("component {l}: {e}")))?;
        }
        if let Some(l) = f.first_noncommuting() {
            return Err(Error::IllFormedModuleMap(format!("square at {l} does not commute")));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: Complex, target: Complex, maps: Vec<Matrix>) -> ChainMap {
        ChainMap { source, target, maps }
    }

    /// The identity on the common terms of `C` and a truncation or extension of it.
    pub fn identity_on_overlap(source: &Complex, target: &Complex) -> ChainMap {
        let ring = source.ring();
        let one = ring.field().one();
        let maps = source
            .range()
            .map(|l| {
                if target.range().contains(&l) {
                    Matrix::identity(source.term(l).degrees().to_vec(), &one, ring.nvars())
                } else {
                    Matrix::zero(Vec::new(), source.term(l).degrees().to_vec())
                }
            })
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), maps }
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn component(&self, l: i32) -> Matrix {
        if self.source.range().contains(&l) {
            self.maps[(l - self.source.lo) as usize].clone()
        } else {
            Matrix::zero(self.target.term(l).degrees().to_vec(), self.source.term(l).degrees().to_vec())
        }
    }

    fn first_noncommuting(&self) -> Option<i32> {
        let ring = self.source.ring();
        let lo = self.source.lo.min(self.target.lo);
        let hi = self.source.hi().max(self.target.hi()) + 1;
        for l in lo..=hi {
            let a = ring.mat_mul(&self.target.differential(l), &self.component(l));
            let b = ring.mat_mul(&self.component(l - 1), &self.source.differential(l));
            let below = self.target.term(l - 1);
            if a.cols.iter().zip(&b.cols).any(|(x, y)| !below.is_zero_element(&x.sub(y, ring.order()))) {
                return Some(l);
            }
        }
        None
    }

    /// `H_l(f) : H_l(C) -> H_l(D)`.
    pub fn on_homology(&self, l: i32) -> SubquotientMap {
        SubquotientMap::from_parts(self.source.homology(l), self.target.homology(l), self.component(l))
    }

    /// A lift of `f : M -> M'` to the minimal free resolutions, through homological degree `top`.
    pub fn lift(f: &ModuleMap, top: usize) -> Result<ChainMap> {
        let ring = f.source().ring().clone();
        let rs = free_resolution(f.source(), top);
        let rt = free_resolution(f.target(), top);
        let source = Complex::from_resolution(&rs, top);
        let target = Complex::from_resolution(&rt, top);
        let f0 = ring.mat_mul(&rt.presentation().to_pruned, &ring.mat_mul(f.matrix(), &rs.presentation().from_pruned));
        let mut maps = vec![Matrix::new(rt.degrees(0).to_vec(), rs.degrees(0).to_vec(), f0.cols)];
        for i in 1..=source.hi() {
            let prev = ring.mat_mul(&maps[i as usize - 1], &source.differential(i));
            let d = target.differential(i);
            let degrees = source.term(i).degrees().to_vec();
            let mut cols = Vec::with_capacity(degrees.len());
            for (c, &deg) in prev.cols.iter().zip(&degrees) {
                let x = solve(&ring, &d, c, deg)
                    .ok_or_else(|| Error::Postcondition(format!("no lift in homological degree {i}")))?;
                cols.push(x);
            }
            maps.push(Matrix::new(target.term(i).degrees().to_vec(), degrees, cols));
        }
        Ok(ChainMap { source, target, maps })
    }

    /// `f (x) N` for a chain map between free complexes over the source of `N`.
    pub fn tensor(&self, n: &Restricted) -> Result<ChainMap> {
        let phi = n.map();
        let module = n.module();
        let maps = self.maps.iter().map(|m| kron_identity(&phi.apply_matrix(m), module)).collect();
        Ok(ChainMap { source: self.source.tensor(n)?, target: self.target.tensor(n)?, maps })
    }

    /// The same components scaled by a constant.
    pub fn scale(&self, c: &Scalar) -> ChainMap {
        let maps = self
            .maps
            .iter()
            .map(|m| Matrix::new(m.target.clone(), m.source.clone(), m.cols.iter().map(|v| v.scale(c)).collect()))
            .collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), maps }
    }
}
