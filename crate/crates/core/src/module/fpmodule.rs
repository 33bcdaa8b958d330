//! Finitely presented graded modules `coker(R^r -> R^n)` and maps between them.

use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::gb::ModuleGb;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::Ring;
use crate::algebra::syz::{kernel_mod, minimal_subset};
use crate::algebra::vector::{Matrix, Vector};
use crate::complex::subquotient::contains_in_span;
use crate::error::{Error, Result};
use crate::module::resolution::Resolution;

struct Inner {
    ring: Ring,
    degrees: Vec<i32>,
    relations: Matrix,
    gb: OnceLock<ModuleGb>,
    resolution: Mutex<Option<Arc<Resolution>>>,
}

/// A graded module given by generator degrees and a homogeneous relation matrix.
///
/// Cloning is cheap and shares the cached Gröbner basis and resolution.
#[derive(Clone)]
pub struct FpModule {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for FpModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FpModule")
            .field("degrees", &self.inner.degrees)
            .field("relations", &self.inner.relations.source)
            .finish()
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FpModule {
    /// `coker(relations)`; `relations.target` must equal `degrees`.
    pub fn new(ring: &Ring, degrees: Vec<i32>, relations: Matrix) -> Result<FpModule> {
        if relations.target != degrees {
            return Err(Error::InvalidArgument("relation matrix rows do not match generators".into()));
        }
        if !relations.is_homogeneous() {
            return Err(Error::Inhomogeneous("relation matrix".into()));
        }
        let mut src = Vec::new();
        let mut cols = Vec::new();
        for (c, d) in relations.cols.iter().zip(&relations.source) {
            let r = ring.reduce_vector(c);
            if !r.is_zero() {
                src.push(*d);
                cols.push(r);
            }
        }
        Ok(FpModule::from_parts(ring.clone(), degrees.clone(), Matrix::new(degrees, src, cols)))
    }

    pub(crate) fn from_parts(ring: Ring, degrees: Vec<i32>, relations: Matrix) -> FpModule {
        FpModule {
            inner: Arc::new(Inner { ring, degrees, relations, gb: OnceLock::new(), resolution: Mutex::new(None) }),
        }
    }

    /// Builds a module from relation rows (one row per generator); column degrees are inferred.
    pub fn from_rows(ring: &Ring, rows: &[Vec<Polynomial>], degrees: Vec<i32>) -> Result<FpModule> {
        if rows.len() != degrees.len() {
            return Err(Error::InvalidArgument(format!("{} rows for {} generator degrees", rows.len(), degrees.len())));
        }
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidArgument("ragged relation matrix".into()));
        }
        let mut src = Vec::new();
        let mut cols = Vec::new();
        for j in 0..ncols {
            let v = Vector::from_dense(rows.iter().map(|r| ring.nf(&r[j])).collect());
            let Some(d) = v.degree(&degrees) else { continue };
            if !v.is_homogeneous(&degrees) {
                return Err(Error::Inhomogeneous(format!("relation column {j}")));
            }
            src.push(d);
            cols.push(v);
        }
        FpModule::new(ring, degrees.clone(), Matrix::new(degrees, src, cols))
    }

    pub fn free(ring: &Ring, degrees: Vec<i32>) -> FpModule {
        FpModule::from_parts(ring.clone(), degrees.clone(), Matrix::zero(degrees, Vec::new()))
    }

    pub fn zero(ring: &Ring) -> FpModule {
        FpModule::free(ring, Vec::new())
    }

    /// `R/I` for a homogeneous ideal `I`.
    pub fn cyclic(ring: &Ring, ideal: &[Polynomial]) -> Result<FpModule> {
        FpModule::from_rows(ring, &[ideal.to_vec()], vec![0])
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: &Ring) -> FpModule {
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        FpModule::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &Ring {
        &self.inner.ring
    }

    pub fn degrees(&self) -> &[i32] {
        &self.inner.degrees
    }

    pub fn ngens(&self) -> usize {
        self.inner.degrees.len()
    }

    pub fn relations(&self) -> &Matrix {
        &self.inner.relations
    }

    pub(crate) fn resolution_cache(&self) -> &Mutex<Option<Arc<Resolution>>> {
        &self.inner.resolution
    }

    /// Gröbner basis of the relation submodule (ring relations included).
    pub fn gb(&self) -> &ModuleGb {
        self.inner.gb.get_or_init(|| {
            let ring = self.ring();
            let mut gb = ModuleGb::new(ring.order(), ring.reduced_gb(), self.inner.degrees.clone());
            for c in &self.inner.relations.cols {
                gb.push_generator(c.clone());
            }
            gb.complete(None);
            gb
        })
    }

    /// Canonical representative of a vector of `R^n` modulo the relations.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.gb().reduce(&self.ring().reduce_vector(v))
    }

    /// Whether `v` is zero in the module.
    pub fn is_zero_element(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        let one = self.ring().one();
        (0..self.ngens()).all(|i| self.is_zero_element(&Vector::unit(i, one.clone())))
    }

    /// No relations at all (a free module on the given generators).
    pub fn is_free_presentation(&self) -> bool {
        self.inner.relations.ncols() == 0
    }

    /// `M(a)`, i.e. `M(a)_d = M_{a+d}`.
    pub fn twist(&self, a: i32) -> FpModule {
        let degrees: Vec<i32> = self.degrees().iter().map(|d| d - a).collect();
        let rel = self.relations();
        let relations = Matrix::new(degrees.clone(), rel.source.iter().map(|d| d - a).collect(), rel.cols.clone());
        FpModule::from_parts(self.ring().clone(), degrees, relations)
    }

    pub fn direct_sum(&self, other: &FpModule) -> FpModule {
        let mut degrees = self.degrees().to_vec();
        degrees.extend_from_slice(other.degrees());
        FpModule::from_parts(self.ring().clone(), degrees, self.relations().direct_sum(other.relations()))
    }

    /// `M^r`: `r` copies, generator `(block, l)` at index `block * ngens + l`, block `b` twisted by `-shifts[b]`.
    pub fn blocks(&self, shifts: &[i32]) -> FpModule {
        let mut out = FpModule::zero(self.ring());
        for &s in shifts {
            out = out.direct_sum(&self.twist(-s));
        }
        out
    }

    fn leads_by_comp(&self) -> Vec<Vec<Monomial>> {
        let mut leads = vec![Vec::new(); self.ngens()];
        for (c, m) in self.gb().leading_terms() {
            leads[c].push(m.clone());
        }
        leads
    }

    /// `dim_k M_d`.
    pub fn hilbert_function(&self, d: i32) -> usize {
        let leads = self.leads_by_comp();
        let ring = self.ring();
        (0..self.ngens())
            .map(|c| {
                let e = d - self.degrees()[c];
                if e < 0 {
                    return 0;
                }
                ring.order()
                    .monomials_of_degree(e as u32)
                    .iter()
                    .filter(|m| !leads[c].iter().any(|l| l.divides(m)))
                    .count()
            })
            .sum()
    }

    /// Whether `M` has finite length over `R`.
    pub fn is_finite_length(&self) -> bool {
        let leads = self.leads_by_comp();
        let n = self.ring().nvars();
        leads.iter().all(|ls| {
            ls.iter().any(|m| m.is_one())
                || (0..n).all(|i| ls.iter().any(|m| m.exps().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0))))
        })
    }

    /// The `k`-basis of standard monomials `m e_c`, by increasing degree; `None` if not of finite length.
    pub fn standard_basis(&self) -> Option<Vec<(usize, Monomial)>> {
        if !self.is_finite_length() {
            return None;
        }
        let leads = self.leads_by_comp();
        let ring = self.ring();
        let mut out = Vec::new();
        for c in 0..self.ngens() {
            let mut frontier = vec![Monomial::one(ring.nvars())];
            let mut seen: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
            while let Some(m) = frontier.pop() {
                if leads[c].iter().any(|l| l.divides(&m)) || !seen.insert(m.clone()) {
                    continue;
                }
                for i in 0..ring.nvars() {
                    frontier.push(m.mul(&Monomial::var(i, ring.weights())));
                }
                out.push((c, m));
            }
        }
        let degrees = self.degrees();
        let order = ring.order().clone();
        out.sort_by(|(c1, m1), (c2, m2)| {
            (m1.degree() as i32 + degrees[*c1])
                .cmp(&(m2.degree() as i32 + degrees[*c2]))
                .then(c1.cmp(c2))
                .then_with(|| order.cmp(m2, m1))
        });
        Some(out)
    }

    /// `dim_k M` when finite.
    pub fn length(&self) -> Option<usize> {
        self.standard_basis().map(|b| b.len())
    }

    /// Minimal presentation, by pivoting on unit entries of the relation matrix.
    pub fn minimal_presentation(&self) -> Pruned {
        prune(self)
    }

    /// A minimal free cover: the generators of the minimal presentation.
    pub fn minimal_generator_degrees(&self) -> Vec<i32> {
        self.minimal_presentation().module.degrees().to_vec()
    }

    /// `Hom_R(M, R)` with the data needed for biduality.
    pub fn dual(&self) -> Dual {
        let ring = self.ring();
        let rt = self.relations().transpose();
        let z = kernel_mod(ring, &rt, None);
        let syz = kernel_mod(ring, &z, None);
        let module = FpModule::from_parts(ring.clone(), z.source.clone(), syz);
        Dual { module, gens: z }
    }

    /// Checks the natural map `M -> M**` for injectivity and surjectivity.
    pub fn biduality(&self) -> Biduality {
        let ring = self.ring();
        let dual = self.dual();
        let zt = dual.gens.transpose();
        let ker = kernel_mod(ring, &zt, None);
        let injective = ker.cols.iter().all(|c| self.is_zero_element(c));
        let st = dual.module.relations().transpose();
        let w = kernel_mod(ring, &st, None);
        let image = FpModule::free(ring, zt.target.clone());
        let surjective = submodule_contains(&image, &zt, &w);
        Biduality { injective, surjective, map: zt }
    }
}

/// The kernel of `R^n -> R^t` given by `a`, presented on its minimal generators.
///
/// Returns the module together with its generators as columns in `R^n`.
pub fn syzygy(ring: &Ring, a: &Matrix) -> Result<(FpModule, Matrix)> {
    if !a.is_homogeneous() {
        return Err(Error::Inhomogeneous("syzygy of an inhomogeneous matrix".into()));
    }
    let gens = kernel_mod(ring, a, None);
    let rel = kernel_mod(ring, &gens, None);
    Ok((FpModule::from_parts(ring.clone(), gens.source.clone(), rel), gens))
}

/// Whether every column of `cols` lies in the span of `gens` modulo the relations of `ambient`.
pub(crate) fn submodule_contains(ambient: &FpModule, gens: &Matrix, cols: &Matrix) -> bool {
    let ring = ambient.ring();
    if ring.is_artinian() {
        return contains_in_span(ring, &[gens, ambient.relations()], cols);
    }
    let mut gb = ModuleGb::new(ring.order(), ring.reduced_gb(), ambient.degrees().to_vec());
    for c in &ambient.relations().cols {
        gb.push_generator(c.clone());
    }
    for c in &gens.cols {
        gb.push_generator(ring.reduce_vector(c));
    }
    let mut order: Vec<usize> = (0..cols.ncols()).collect();
    order.sort_by_key(|&j| cols.source[j]);
    for j in order {
        let v = ring.reduce_vector(&cols.cols[j]);
        if v.is_zero() {
            continue;
        }
        gb.complete(v.degree(ambient.degrees()));
        if !gb.reduce(&v).is_zero() {
            return false;
        }
    }
    true
}

/// A minimal presentation together with the mutually inverse generator maps.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub module: FpModule,
    /// Column `i` expresses old generator `i` in the new generators.
    pub to_pruned: Matrix,
    /// Column `k` expresses new generator `k` in the old generators.
    pub from_pruned: Matrix,
}

fn prune(m: &FpModule) -> Pruned {
    let ring = m.ring();
    let order = ring.order().clone();
    let n0 = m.ngens();
    let degs = m.degrees().to_vec();
    let mut rels: Vec<(i32, Vector)> =
        m.relations().source.iter().copied().zip(m.relations().cols.iter().cloned()).collect();
    let mut alive = vec![true; n0];
    let one = ring.one();
    let mut phi: Vec<Vector> = (0..n0).map(|i| Vector::unit(i, one.clone())).collect();
    loop {
        let pivot = rels
            .iter()
            .enumerate()
            .find_map(|(j, (_, v))| v.entries().iter().find_map(|(i, p)| p.as_constant().map(|u| (j, *i, u.clone()))));
        let Some((j, i, u)) = pivot else { break };
        let (_, col) = rels.remove(j);
        let minus_inv = u.inv().expect("nonzero").neg();
        let eliminate = |v: &Vector| -> Vector {
            match v.get(i) {
                None => v.clone(),
                Some(p) => ring.reduce_vector(&v.add(&col.mul_poly(&p.scale(&minus_inv), &order), &order)),
            }
        };
        for (_, r) in rels.iter_mut() {
            *r = eliminate(r);
        }
        for v in phi.iter_mut() {
            *v = eliminate(v);
        }
        rels.retain(|(_, r)| !r.is_zero());
        alive[i] = false;
    }
    let index: Vec<Option<usize>> = {
        let mut k = 0;
        alive
            .iter()
            .map(|&a| {
                if a {
                    k += 1;
                    Some(k - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let renumber = |v: &Vector| v.map_components(|c| index[c].expect("eliminated generator cleared"));
    let new_degs: Vec<i32> = (0..n0).filter(|&i| alive[i]).map(|i| degs[i]).collect();
    let rel_matrix = Matrix::new(
        new_degs.clone(),
        rels.iter().map(|(d, _)| *d).collect(),
        rels.iter().map(|(_, v)| renumber(v)).collect(),
    );
    let keep = minimal_subset(ring, &rel_matrix, None);
    let rel_matrix = rel_matrix.select_columns(&keep);
    let to_pruned = Matrix::new(new_degs.clone(), degs.clone(), phi.iter().map(renumber).collect());
    let from_pruned = Matrix::new(
        degs,
        new_degs.clone(),
        (0..n0).filter(|&i| alive[i]).map(|i| Vector::unit(i, one.clone())).collect(),
    );
    Pruned { module: FpModule::from_parts(ring.clone(), new_degs, rel_matrix), to_pruned, from_pruned }
}

/// `M* = Hom_R(M, R)`.
#[derive(Clone, Debug)]
pub struct Dual {
    /// Presentation of `M*` on the generators below.
    pub module: FpModule,
    /// Generators of `M*` as functionals, i.e. vectors of `(R^n)*` (target degrees negated).
    pub gens: Matrix,
}

/// Outcome of checking the biduality map `M -> M**`.
#[derive(Clone, Debug)]
pub struct Biduality {
    pub injective: bool,
    pub surjective: bool,
    /// The map `R^n -> (R^z)*` inducing `M -> M**`.
    pub map: Matrix,
}

impl Biduality {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }
}

/// A homogeneous degree-zero map of presented modules, given on generators.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: FpModule,
    target: FpModule,
    matrix: Matrix,
}

impl ModuleMap {
    /// Validates that relations of the source land in the relations of the target.
    pub fn new(source: FpModule, target: FpModule, matrix: Matrix) -> Result<ModuleMap> {
        if !same_ring(source.ring(), target.ring()) {
            return Err(Error::RingMismatch("module map between different rings".into()));
        }
        if matrix.target != target.degrees() || matrix.source != source.degrees() {
            return Err(Error::IllFormedModuleMap("matrix degrees do not match the modules".into()));
        }
        if !matrix.is_homogeneous() {
            return Err(Error::IllFormedModuleMap("matrix is not homogeneous of degree 0".into()));
        }
        let ring = source.ring().clone();
        for c in &source.relations().cols {
            if !target.is_zero_element(&ring.apply_matrix(&matrix, c)) {
                return Err(Error::IllFormedModuleMap("a relation does not map to zero".into()));
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn identity(m: &FpModule) -> ModuleMap {
        let one = m.ring().field().one();
        let matrix = Matrix::identity(m.degrees().to_vec(), &one, m.ring().nvars());
        ModuleMap { source: m.clone(), target: m.clone(), matrix }
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.target.normal_form(&self.source.ring().apply_matrix(&self.matrix, v))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target.degrees() != other.source.degrees() {
            return Err(Error::IllFormedModuleMap("maps are not composable".into()));
        }
        let m = self.source.ring().mat_mul(&other.matrix, &self.matrix);
        Ok(ModuleMap { source: self.source.clone(), target: other.target.clone(), matrix: m })
    }

    /// Generators of the kernel, as vectors on the source generators.
    pub fn kernel_generators(&self) -> Matrix {
        kernel_mod(self.source.ring(), &self.matrix, Some(self.target.relations()))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_generators().cols.iter().all(|c| self.source.is_zero_element(c))
    }

    pub fn is_surjective(&self) -> bool {
        let ring = self.source.ring();
        let one = ring.field().one();
        let id = Matrix::identity(self.target.degrees().to_vec(), &one, ring.nvars());
        submodule_contains(&self.target, &self.matrix, &id)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Two maps with the same source and target agree.
    pub fn agrees_with(&self, other: &ModuleMap) -> bool {
        let ring = self.source.ring();
        self.matrix
            .cols
            .iter()
            .zip(&other.matrix.cols)
            .all(|(a, b)| self.target.is_zero_element(&a.sub(b, ring.order())))
    }

    /// `coker(self)`, presented on the target generators.
    pub fn cokernel(&self) -> FpModule {
        let rel = self.target.relations().concat(&self.matrix);
        FpModule::from_parts(self.source.ring().clone(), self.target.degrees().to_vec(), rel)
    }
}
