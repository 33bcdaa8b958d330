//! Modules of finite length as explicit vector spaces with variable actions.
//!
//! This is where Matlis duality lives: the dual of a finite-length module is
//! its `k`-dual with the transposed action, graded by negated degrees.

use std::collections::HashMap;

use crate::algebra::linalg::{dispatch_field, kernel, LinField, Span};
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::Ring;
use crate::algebra::scalar::Scalar;
use crate::algebra::vector::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::module::fpmodule::{FpModule, ModuleMap};

type SparseCol = Vec<(usize, Scalar)>;

/// A finite-length graded module: a homogeneous `k`-basis and one action matrix per variable.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    ring: Ring,
    degrees: Vec<i32>,
    actions: Vec<Vec<SparseCol>>,
}

/// A presentation of a [`FiniteModule`] whose generators are basis vectors.
#[derive(Clone, Debug)]
pub struct Presented {
    pub module: FpModule,
    /// Basis index of each generator.
    pub gens: Vec<usize>,
}

impl FiniteModule {
    /// Standard-monomial basis of a finite-length presented module.
    pub fn from_module(m: &FpModule) -> Result<FiniteModule> {
        let basis =
            m.standard_basis().ok_or_else(|| Error::Unsupported("module does not have finite length".into()))?;
        let ring = m.ring().clone();
        let index: HashMap<(usize, Monomial), usize> = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let degrees = basis.iter().map(|(c, mono)| mono.degree() as i32 + m.degrees()[*c]).collect();
        let one = ring.field().one();
        let mut actions = Vec::with_capacity(ring.nvars());
        for i in 0..ring.nvars() {
            let x = Monomial::var(i, ring.weights());
            let cols = basis
                .iter()
                .map(|(c, mono)| {
                    let v = m.normal_form(&Vector::unit(*c, Polynomial::term(mono.mul(&x), one.clone())));
                    let mut col: SparseCol = Vec::new();
                    for (cc, p) in v.entries() {
                        for (mm, s) in p.terms() {
                            col.push((index[&(*cc, mm.clone())], s.clone()));
                        }
                    }
                    col.sort_by_key(|e| e.0);
                    col
                })
                .collect();
            actions.push(cols);
        }
        Ok(FiniteModule { ring, degrees, actions })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    /// `Hom_k(M, k)` with `(x f)(v) = f(x v)`.
    pub fn dual(&self) -> FiniteModule {
        let n = self.dim();
        let actions = self
            .actions
            .iter()
            .map(|cols| {
                let mut t: Vec<SparseCol> = vec![Vec::new(); n];
                for (k, col) in cols.iter().enumerate() {
                    for (r, s) in col {
                        t[*r].push((k, s.clone()));
                    }
                }
                t
            })
            .collect();
        FiniteModule { ring: self.ring.clone(), degrees: self.degrees.iter().map(|d| -d).collect(), actions }
    }

    /// `dim_k M_d` for each degree that occurs.
    pub fn hilbert_series(&self) -> Vec<(i32, usize)> {
        let mut h: std::collections::BTreeMap<i32, usize> = Default::default();
        for d in &self.degrees {
            *h.entry(*d).or_default() += 1;
        }
        h.into_iter().collect()
    }

    /// The `k`-dimension of the socle `(0 :_M m)`.
    pub fn socle_dim(&self) -> usize {
        let n = self.dim();
        let rows: Vec<Vec<Scalar>> = self
            .actions
            .iter()
            .flat_map(|cols| {
                (0..n).map(move |r| {
                    (0..n)
                        .map(|c| cols[c].iter().find(|e| e.0 == r).map_or(self.ring.field().zero(), |e| e.1.clone()))
                        .collect::<Vec<Scalar>>()
                })
            })
            .collect();
        crate::algebra::linalg::kernel_of(self.ring.field(), &rows, n).len()
    }

    /// A minimal presentation whose generators are basis vectors.
    pub fn present(&self) -> Presented {
        dispatch_field!(self.ring.field(), |f| present_generic(self, f))
    }

    /// Writes a homogeneous element of degree `d` (basis coordinates) in the generators of `p`.
    pub fn express(&self, p: &Presented, coords: &[Scalar], d: i32) -> Option<Vector> {
        dispatch_field!(self.ring.field(), |f| express_generic(self, f, p, coords, d))
    }

    fn action<F: LinField>(&self, f: &F) -> Vec<Vec<Vec<(usize, F::E)>>> {
        self.actions
            .iter()
            .map(|cols| cols.iter().map(|c| c.iter().map(|(r, s)| (*r, f.from_scalar(s))).collect()).collect())
            .collect()
    }
}

fn apply_var<F: LinField>(f: &F, act: &[Vec<(usize, F::E)>], v: &[F::E]) -> Vec<F::E> {
    let mut out = vec![f.zero(); v.len()];
    for (k, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (r, s) in &act[k] {
            out[*r] = f.add(&out[*r], &f.mul(x, s));
        }
    }
    out
}

fn apply_monomial<F: LinField>(f: &F, acts: &[Vec<Vec<(usize, F::E)>>], m: &Monomial, v: &[F::E]) -> Vec<F::E> {
    let mut out = v.to_vec();
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            out = apply_var(f, &acts[i], &out);
        }
    }
    out
}

fn apply_poly<F: LinField>(f: &F, acts: &[Vec<Vec<(usize, F::E)>>], p: &Polynomial, v: &[F::E]) -> Vec<F::E> {
    let mut out = vec![f.zero(); v.len()];
    for (m, s) in p.terms() {
        let w = apply_monomial(f, acts, m, v);
        f.axpy(&mut out, &f.from_scalar(s), &w);
    }
    out
}

fn unit<F: LinField>(f: &F, n: usize, i: usize) -> Vec<F::E> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Image of `sum_j p_j g_j` in basis coordinates.
fn image_of<F: LinField>(
    f: &F,
    fm: &FiniteModule,
    acts: &[Vec<Vec<(usize, F::E)>>],
    gens: &[usize],
    v: &Vector,
) -> Vec<F::E> {
    let n = fm.dim();
    let mut out = vec![f.zero(); n];
    for (j, p) in v.entries() {
        let w = apply_poly(f, acts, p, &unit(f, n, gens[*j]));
        f.axpy(&mut out, &f.one(), &w);
    }
    out
}

fn present_generic<F: LinField>(fm: &FiniteModule, f: &F) -> Presented {
    let ring = fm.ring.clone();
    let n = fm.dim();
    if n == 0 {
        return Presented { module: FpModule::zero(&ring), gens: Vec::new() };
    }
    let acts = fm.action(f);
    let dmin = *fm.degrees.iter().min().unwrap();
    let dmax = *fm.degrees.iter().max().unwrap();

    // generators: basis vectors completing m V in each degree
    let mut gens = Vec::new();
    let mut mv = Span::new(f.clone(), n);
    for d in dmin..=dmax {
        for k in (0..n).filter(|&k| fm.degrees[k] < d) {
            for (i, act) in acts.iter().enumerate() {
                if fm.degrees[k] + ring.weights()[i] as i32 == d {
                    mv.insert(&apply_var(f, act, &unit(f, n, k)));
                }
            }
        }
        for k in (0..n).filter(|&k| fm.degrees[k] == d) {
            if mv.insert(&unit(f, n, k)) {
                gens.push(k);
            }
        }
    }
    let gen_deg: Vec<i32> = gens.iter().map(|&k| fm.degrees[k]).collect();

    // relations: kernel of the free cover, with minimal generators per degree
    let wmax = *ring.weights().iter().max().unwrap_or(&1) as i32;
    let one = ring.field().one();
    let mut k_basis: HashMap<i32, (Vec<(usize, Monomial)>, Vec<Vec<F::E>>)> = HashMap::new();
    let mut rel_deg = Vec::new();
    let mut rels = Vec::new();
    let gmin = *gen_deg.iter().min().unwrap();
    for d in gmin..=dmax + wmax {
        let fb: Vec<(usize, Monomial)> = gen_deg
            .iter()
            .enumerate()
            .flat_map(|(j, &g)| ring.basis_in_degree(d - g).into_iter().map(move |m| (j, m)))
            .collect();
        if fb.is_empty() {
            continue;
        }
        let cols: Vec<Vec<F::E>> = fb.iter().map(|(j, m)| apply_monomial(f, &acts, m, &unit(f, n, gens[*j]))).collect();
        let rows: Vec<Vec<F::E>> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let ker = kernel(f, &rows, fb.len());
        let index: HashMap<&(usize, Monomial), usize> = fb.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut lower = Span::new(f.clone(), fb.len());
        for (i, &w) in ring.weights().iter().enumerate() {
            let Some((pb, pk)) = k_basis.get(&(d - w as i32)) else { continue };
            let x = Monomial::var(i, ring.weights());
            for v in pk {
                let mut out = vec![f.zero(); fb.len()];
                for (idx, c) in v.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let (j, m) = &pb[idx];
                    let p = ring.nf(&Polynomial::term(m.mul(&x), one.clone()));
                    for (mm, s) in p.terms() {
                        let t = index[&(*j, mm.clone())];
                        out[t] = f.add(&out[t], &f.mul(c, &f.from_scalar(s)));
                    }
                }
                lower.insert(&out);
            }
        }
        for v in &ker {
            if lower.insert(v) {
                rel_deg.push(d);
                rels.push(coords_to_vector(f, &ring, &fb, v));
            }
        }
        k_basis.insert(d, (fb, ker));
    }
    let relations = Matrix::new(gen_deg.clone(), rel_deg, rels);
    Presented { module: FpModule::from_parts(ring, gen_deg, relations), gens }
}

fn coords_to_vector<F: LinField>(f: &F, ring: &Ring, fb: &[(usize, Monomial)], v: &[F::E]) -> Vector {
    let mut by: std::collections::BTreeMap<usize, Vec<(Monomial, Scalar)>> = Default::default();
    for (idx, c) in v.iter().enumerate() {
        if !f.is_zero(c) {
            let (j, m) = &fb[idx];
            by.entry(*j).or_default().push((m.clone(), f.to_scalar(c)));
        }
    }
    Vector::from_entries(by.into_iter().map(|(j, t)| (j, Polynomial::from_terms(t, ring.order()))).collect())
}

fn express_generic<F: LinField>(fm: &FiniteModule, f: &F, p: &Presented, coords: &[Scalar], d: i32) -> Option<Vector> {
    let ring = &fm.ring;
    let n = fm.dim();
    let acts = fm.action(f);
    let target: Vec<F::E> = coords.iter().map(|s| f.from_scalar(s)).collect();
    if target.iter().all(|x| f.is_zero(x)) {
        return Some(Vector::zero());
    }
    let fb: Vec<(usize, Monomial)> = p
        .module
        .degrees()
        .iter()
        .enumerate()
        .flat_map(|(j, &g)| ring.basis_in_degree(d - g).into_iter().map(move |m| (j, m)))
        .collect();
    let cols: Vec<Vec<F::E>> = fb.iter().map(|(j, m)| apply_monomial(f, &acts, m, &unit(f, n, p.gens[*j]))).collect();
    // solve sum c_i cols_i = target via the kernel of [cols | -target]
    let mut rows: Vec<Vec<F::E>> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    for (r, row) in rows.iter_mut().enumerate() {
        row.push(f.neg(&target[r]));
    }
    let ker = kernel(f, &rows, fb.len() + 1);
    let sol = ker.into_iter().find(|v| !f.is_zero(&v[fb.len()]))?;
    let scale = f.inv(&sol[fb.len()]);
    let sol: Vec<F::E> = sol[..fb.len()].iter().map(|x| f.mul(x, &scale)).collect();
    let v = coords_to_vector(f, ring, &fb, &sol);
    debug_assert!(image_of(f, fm, &acts, &p.gens, &v) == target);
    Some(v)
}

/// The Matlis dual `Hom_k(M, k)` of a module over an artinian ring.
pub fn matlis_dual(m: &FpModule) -> Result<FpModule> {
    if !m.ring().is_artinian() {
        return Err(Error::Unsupported("Matlis duality needs an artinian ring; use injective_hull_truncation".into()));
    }
    Ok(FiniteModule::from_module(m)?.dual().present().module)
}

/// `R/m^t` as a cyclic module.
pub fn truncated_ring(ring: &Ring, t: u32) -> FpModule {
    let one = ring.field().one();
    let gens: Vec<Polynomial> =
        ring.monomials_of_exponent_sum(t).into_iter().map(|m| Polynomial::term(m, one.clone())).collect();
    FpModule::cyclic(ring, &gens).expect("monomials are homogeneous")
}

/// `E_t = (R/m^t)^∨`; the union over `t` is the injective hull of `k`.
pub fn injective_hull_truncation(ring: &Ring, t: u32) -> Result<FpModule> {
    if t == 0 {
        return Err(Error::InvalidArgument("truncation index must be positive".into()));
    }
    Ok(FiniteModule::from_module(&truncated_ring(ring, t))?.dual().present().module)
}

/// The inclusion `E_t -> E_{t+1}`, dual to the surjection `R/m^{t+1} -> R/m^t`.
pub fn hull_inclusion(ring: &Ring, t: u32) -> Result<ModuleMap> {
    let small = FiniteModule::from_module(&truncated_ring(ring, t))?;
    let big_mod = truncated_ring(ring, t + 1);
    let big = FiniteModule::from_module(&big_mod)?;
    let small_mod = truncated_ring(ring, t);
    let small_basis = small_mod.standard_basis().expect("finite length");
    let big_basis = big_mod.standard_basis().expect("finite length");
    let small_index: HashMap<(usize, Monomial), usize> =
        small_basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    // pi[b] = coordinates of the image of big basis vector b in the small module
    let one = ring.field().one();
    let small_index = &small_index;
    let pi: Vec<Vec<(usize, Scalar)>> = big_basis
        .iter()
        .map(|(c, m)| {
            let v = small_mod.normal_form(&Vector::unit(*c, Polynomial::term(m.clone(), one.clone())));
            v.entries()
                .iter()
                .flat_map(|(cc, p)| p.terms().iter().map(move |(mm, s)| (small_index[&(*cc, mm.clone())], s.clone())))
                .collect()
        })
        .collect();
    let e_small = small.dual();
    let e_big = big.dual();
    let p_small = e_small.present();
    let p_big = e_big.present();
    let zero = ring.field().zero();
    let mut cols = Vec::new();
    for &g in &p_small.gens {
        // the functional dual to small basis vector g, pulled back along pi
        let coords: Vec<Scalar> =
            pi.iter().map(|col| col.iter().find(|(k, _)| *k == g).map_or(zero.clone(), |(_, s)| s.clone())).collect();
        let d = e_small.degrees[g];
        let v = e_big
            .express(&p_big, &coords, d)
            .ok_or_else(|| Error::Postcondition("inclusion of injective hull truncations".into()))?;
        cols.push(v);
    }
    let matrix = Matrix::new(p_big.module.degrees().to_vec(), p_small.module.degrees().to_vec(), cols);
    ModuleMap::new(p_small.module, p_big.module, matrix)
}
