//! Subquotients `(im G + Rel) / Rel` of graded free modules and maps between them.
//!
//! Membership and dimension questions are answered one internal degree at a
//! time, where every graded piece is a finite dimensional vector space.

use std::collections::BTreeMap;

use crate::algebra::degreewise::FreeGraded;
use crate::algebra::linalg::{dispatch_field, LinField, Span};
use crate::algebra::ring::{GradedRing, Ring};
use crate::algebra::syz::kernel_mod;
use crate::algebra::vector::Matrix;
use crate::error::{Error, Result};
use crate::module::fpmodule::{same_ring, FpModule};

/// The submodule generated by `gens` in the quotient `R^n / im rels`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ring: Ring,
    gens: Matrix,
    rels: Matrix,
}

impl Subquotient {
    pub fn new(ring: &Ring, gens: Matrix, rels: Matrix) -> Result<Subquotient> {
        if gens.target != rels.target {
            return Err(Error::InvalidArgument("generators and relations live in different modules".into()));
        }
        if !gens.is_homogeneous() || !rels.is_homogeneous() {
            return Err(Error::Inhomogeneous("subquotient data".into()));
        }
        Ok(Subquotient { ring: ring.clone(), gens, rels })
    }

    pub(crate) fn from_parts(ring: Ring, gens: Matrix, rels: Matrix) -> Subquotient {
        debug_assert_eq!(gens.target, rels.target);
        Subquotient { ring, gens, rels }
    }

    /// The whole quotient `coker(rels)`.
    pub fn of_module(m: &FpModule) -> Subquotient {
        let one = m.ring().field().one();
        let gens = Matrix::identity(m.degrees().to_vec(), &one, m.ring().nvars());
        Subquotient::from_parts(m.ring().clone(), gens, m.relations().clone())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Degrees of the ambient free module.
    pub fn ambient(&self) -> &[i32] {
        &self.gens.target
    }

    pub fn gens(&self) -> &Matrix {
        &self.gens
    }

    pub fn rels(&self) -> &Matrix {
        &self.rels
    }

    /// `dim_k` of the degree-`d` piece.
    pub fn dim_in_degree(&self, d: i32) -> usize {
        dispatch_field!(self.ring.field(), |f| {
            let mut fg = FreeGraded::new(&self.ring, self.ambient().to_vec());
            let n = fg.basis(d).len();
            let mut span = Span::new(*f, n);
            for v in fg.submodule_piece(f, &self.rels, d) {
                span.insert(&v);
            }
            let r = span.rank();
            for v in fg.submodule_piece(f, &self.gens, d) {
                span.insert(&v);
            }
            span.rank() - r
        })
    }

    /// Internal degrees outside of which the subquotient vanishes, when the ring is artinian.
    pub fn degree_window(&self) -> Option<(i32, i32)> {
        let top = self.ring.top_degree()?;
        let lo = self.gens.source.iter().copied().min()?;
        let hi = self.gens.source.iter().copied().max()?;
        Some((lo, hi + top))
    }

    /// Hilbert function over the degree window; `None` over non-artinian rings.
    pub fn hilbert_series(&self) -> Option<Vec<(i32, usize)>> {
        if !self.ring.is_artinian() {
            return None;
        }
        let Some((lo, hi)) = self.degree_window() else { return Some(Vec::new()) };
        Some((lo..=hi).map(|d| (d, self.dim_in_degree(d))).filter(|&(_, n)| n > 0).collect())
    }

    /// `dim_k` when the ring is artinian.
    pub fn length(&self) -> Option<usize> {
        self.hilbert_series().map(|h| h.iter().map(|(_, n)| n).sum())
    }

    /// Every column of `cols` lies in `im gens + im rels`.
    pub fn contains(&self, cols: &Matrix) -> bool {
        contains_in_span(&self.ring, &[&self.gens, &self.rels], cols)
    }

    pub fn is_zero(&self) -> bool {
        contains_in_span(&self.ring, &[&self.rels], &self.gens)
    }

    /// Equality as subquotients of the same ambient module.
    pub fn same_as(&self, other: &Subquotient) -> bool {
        self.ambient() == other.ambient()
            && contains_in_span(&self.ring, &[&self.rels], &other.rels)
            && contains_in_span(&self.ring, &[&other.rels], &self.rels)
            && self.contains(&other.gens)
            && other.contains(&self.gens)
    }

    /// A presentation on the given generators: `coker` of the syzygies modulo `rels`.
    pub fn presentation(&self) -> FpModule {
        let k = kernel_mod(&self.ring, &self.gens, Some(&self.rels));
        FpModule::from_parts(self.ring.clone(), self.gens.source.clone(), k)
    }

    /// A minimal presentation as an abstract module.
    pub fn module(&self) -> FpModule {
        self.presentation().minimal_presentation().module
    }
}

/// Whether every column of `cols` lies in the sum of the column spans of `spans`.
pub(crate) fn contains_in_span(ring: &GradedRing, spans: &[&Matrix], cols: &Matrix) -> bool {
    let Some(first) = spans.first() else { return cols.cols.iter().all(|c| ring.reduce_vector(c).is_zero()) };
    let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (j, d) in cols.source.iter().enumerate() {
        by_degree.entry(*d).or_default().push(j);
    }
    dispatch_field!(ring.field(), |f| {
        let mut fg = FreeGraded::new(ring, first.target.clone());
        by_degree.iter().all(|(&d, js)| {
            let vs: Vec<_> = js.iter().map(|&j| ring.reduce_vector(&cols.cols[j])).filter(|v| !v.is_zero()).collect();
            if vs.is_empty() {
                return true;
            }
            let span = piece_span(f, &mut fg, spans, d);
            vs.iter().all(|v| span.contains(&fg.coords(f, v, d)))
        })
    })
}

fn piece_span<F: LinField>(f: &F, fg: &mut FreeGraded<'_>, spans: &[&Matrix], d: i32) -> Span<F> {
    let mut span = Span::new(f.clone(), fg.basis(d).len());
    for m in spans {
        for v in fg.submodule_piece(f, m, d) {
            span.insert(&v);
        }
    }
    span
}

/// A map between subquotients induced by a matrix on the ambient free modules.
#[derive(Clone, Debug)]
pub struct SubquotientMap {
    source: Subquotient,
    target: Subquotient,
    matrix: Matrix,
}

impl SubquotientMap {
    /// Checks that `matrix` carries generators into the target and relations into its relations.
    pub fn new(source: Subquotient, target: Subquotient, matrix: Matrix) -> Result<SubquotientMap> {
        if !same_ring(source.ring(), target.ring()) {
            return Err(Error::RingMismatch("subquotient map".into()));
        }
        if matrix.source != source.ambient() || matrix.target != target.ambient() {
            return Err(Error::IllFormedModuleMap("matrix does not match the ambient modules".into()));
        }
        if !matrix.is_homogeneous() {
            return Err(Error::IllFormedModuleMap("matrix is not homogeneous of degree 0".into()));
        }
        let ring = source.ring().clone();
        let img = ring.mat_mul(&matrix, source.gens());
        if !target.contains(&img) {
            return Err(Error::IllFormedModuleMap("a generator leaves the target".into()));
        }
        let rel_img = ring.mat_mul(&matrix, source.rels());
        if !contains_in_span(&ring, &[target.rels()], &rel_img) {
            return Err(Error::IllFormedModuleMap("a relation does not map to zero".into()));
        }
        Ok(SubquotientMap { source, target, matrix })
    }

    pub(crate) fn from_parts(source: Subquotient, target: Subquotient, matrix: Matrix) -> SubquotientMap {
        SubquotientMap { source, target, matrix }
    }

    pub fn source(&self) -> &Subquotient {
        &self.source
    }

    pub fn target(&self) -> &Subquotient {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self) -> Subquotient {
        let ring = self.source.ring();
        Subquotient::from_parts(
            ring.clone(),
            ring.mat_mul(&self.matrix, self.source.gens()),
            self.target.rels().clone(),
        )
    }

    pub fn kernel(&self) -> Subquotient {
        let ring = self.source.ring();
        let ag = ring.mat_mul(&self.matrix, self.source.gens());
        let k = kernel_mod(ring, &ag, Some(self.target.rels()));
        let gens = ring.mat_mul(self.source.gens(), &k);
        Subquotient::from_parts(ring.clone(), gens, self.source.rels().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.image().is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().contains(self.target.gens())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `dim_k` of the image in degree `d`.
    pub fn rank_in_degree(&self, d: i32) -> usize {
        self.image().dim_in_degree(d)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SubquotientMap) -> Result<SubquotientMap> {
        if self.target.ambient() != other.source.ambient() {
            return Err(Error::IllFormedModuleMap("maps are not composable".into()));
        }
        let m = self.source.ring().mat_mul(&other.matrix, &self.matrix);
        Ok(SubquotientMap { source: self.source.clone(), target: other.target.clone(), matrix: m })
    }
}

/// Exactness of `A --f--> B --g--> C` at `B`, as modules.
pub fn is_exact_at(f: &SubquotientMap, g: &SubquotientMap) -> Result<bool> {
    if f.target().ambient() != g.source().ambient() {
        return Err(Error::IllFormedModuleMap("maps are not composable".into()));
    }
    let composite = f.then(g)?;
    if !composite.is_zero() {
        return Ok(false);
    }
    Ok(f.image().contains(g.kernel().gens()))
}

/// Exactness at `B` in the single internal degree `d`, by dimension count.
pub fn is_exact_in_degree(f: &SubquotientMap, g: &SubquotientMap, d: i32) -> bool {
    let ker = g.source().dim_in_degree(d) - g.rank_in_degree(d);
    let composite_zero = f.then(g).map(|c| c.rank_in_degree(d) == 0).unwrap_or(false);
    composite_zero && ker == f.rank_in_degree(d)
}
