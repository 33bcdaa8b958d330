//! Kernels of homogeneous maps modulo a submodule, and minimal generating sets.
//!
//! Over artinian rings every graded piece is finite dimensional and kernels
//! are computed degree by degree with dense linear algebra, which directly
//! yields minimal generators. Otherwise the kernel is read off an elimination
//! Gröbner basis and then minimalized.

use std::collections::HashMap;

use super::degreewise::{apply_columns, FreeGraded};
use super::gb::ModuleGb;
use super::linalg::{kernel, LinField, ModP, Rationals, Span};
use super::poly::Polynomial;
use super::ring::GradedRing;
use super::scalar::Field;
use super::vector::{Matrix, Vector};
use crate::error::{Error, Result};

/// Minimal generators of `{c in R^n : A c in im B}` as the columns of a matrix
/// with target `A.source`.
pub fn kernel_mod(ring: &GradedRing, a: &Matrix, b: Option<&Matrix>) -> Matrix {
    let empty = Matrix::zero(a.target.clone(), Vec::new());
    let b = b.unwrap_or(&empty);
    debug_assert_eq!(a.target, b.target);
    if a.ncols() == 0 {
        return Matrix::zero(a.source.clone(), Vec::new());
    }
    if ring.is_artinian() {
        return match ring.field() {
            Field::Prime(p) => kernel_linear(&ModP(p), ring, a, b),
            Field::Rational => kernel_linear(&Rationals, ring, a, b),
        };
    }
    kernel_gb(ring, a, b)
}

/// Kernel by elimination: a Gröbner basis of the columns `(A_j, e_j)` and `(B_k, 0)`
/// in `P^(t+n)`; elements whose leading term lies past the first `t` components
/// have vanishing first block.
pub fn kernel_gb(ring: &GradedRing, a: &Matrix, b: &Matrix) -> Matrix {
    let t = a.nrows();
    let n = a.ncols();
    let mut degrees = a.target.clone();
    degrees.extend_from_slice(&a.source);
    let mut gb = ModuleGb::new(ring.order(), ring.reduced_gb(), degrees);
    for (j, col) in a.cols.iter().enumerate() {
        let e = Vector::unit(t + j, ring.one());
        gb.push_generator(col.add(&e, ring.order()));
    }
    for col in &b.cols {
        gb.push_generator(col.clone());
    }
    gb.complete(None);
    let mut cols = Vec::new();
    let mut src = Vec::new();
    for v in gb.elements() {
        if v.lead_component().is_some_and(|c| c >= t) {
            let k = ring.reduce_vector(&v.restrict(t..t + n));
            if let Some(d) = k.degree(&a.source) {
                src.push(d);
                cols.push(k);
            }
        }
    }
    let all = Matrix::new(a.source.clone(), src, cols);
    let keep = minimal_subset(ring, &all, None);
    all.select_columns(&keep)
}

fn kernel_linear<F: LinField>(f: &F, ring: &GradedRing, a: &Matrix, b: &Matrix) -> Matrix {
    let top = ring.top_degree().expect("artinian");
    let dmin = *a.source.iter().min().unwrap();
    let dmax = *a.source.iter().max().unwrap() + top;
    let mut src = FreeGraded::new(ring, a.source.clone());
    let mut tgt = FreeGraded::new(ring, a.target.clone());
    let mut bsrc = FreeGraded::new(ring, b.source.clone());
    let mut k_basis: HashMap<i32, Vec<Vec<F::E>>> = HashMap::new();
    let mut gen_deg = Vec::new();
    let mut gens = Vec::new();
    for d in dmin..=dmax {
        let ns = src.basis(d).len();
        if ns == 0 {
            continue;
        }
        let nt = tgt.basis(d).len();
        let mut cols = src.map_columns(f, a, &mut tgt, d);
        let nb = if b.ncols() > 0 {
            let bc = bsrc.map_columns(f, b, &mut tgt, d);
            let nb = bc.len();
            cols.extend(bc);
            nb
        } else {
            0
        };
        let rows: Vec<Vec<F::E>> = (0..nt).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let ker = kernel(f, &rows, ns + nb);
        let mut kspan = Span::new(f.clone(), ns);
        for v in &ker {
            kspan.insert(&v[..ns]);
        }
        let kb = kspan.basis().to_vec();
        let mut lower = Span::new(f.clone(), ns);
        for i in 0..ring.nvars() {
            let w = ring.weights()[i] as i32;
            if let Some(prev) = k_basis.get(&(d - w)) {
                if prev.is_empty() {
                    continue;
                }
                let mult = src.var_columns(f, i, d - w);
                for v in prev {
                    lower.insert(&apply_columns(f, &mult, v, ns));
                }
            }
        }
        for v in &kb {
            if lower.insert(v) {
                gen_deg.push(d);
                gens.push(src.vector(f, d, v));
            }
        }
        k_basis.insert(d, kb);
    }
    Matrix::new(a.source.clone(), gen_deg, gens)
}

/// Indices of a minimal subset of the columns of `gens` that, together with
/// `rels`, generates the same submodule. Columns are scanned by increasing degree.
pub fn minimal_subset(ring: &GradedRing, gens: &Matrix, rels: Option<&Matrix>) -> Vec<usize> {
    let mut gb = ModuleGb::new(ring.order(), ring.reduced_gb(), gens.target.clone());
    if let Some(r) = rels {
        for c in &r.cols {
            gb.push_generator(ring.reduce_vector(c));
        }
    }
    let mut idx: Vec<usize> = (0..gens.ncols()).filter(|&j| !gens.cols[j].is_zero()).collect();
    idx.sort_by_key(|&j| (gens.source[j], gens.cols[j].num_terms(), j));
    let mut keep = Vec::new();
    for j in idx {
        gb.complete(Some(gens.source[j]));
        let v = ring.reduce_vector(&gens.cols[j]);
        if !gb.reduce(&v).is_zero() {
            keep.push(j);
            gb.push_generator(v);
        }
    }
    keep.sort_by_key(|&j| (gens.source[j], j));
    keep
}

/// A homogeneous element of positive degree is a nonzerodivisor.
pub fn is_regular_element(ring: &GradedRing, f: &Polynomial) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous("element is not homogeneous".into()));
    }
    let f = ring.normal_form(f)?;
    let Some(d) = f.degree() else { return Ok(false) };
    if d == 0 {
        return Err(Error::InvalidArgument("element has degree zero".into()));
    }
    let a = Matrix::new(vec![0], vec![d as i32], vec![Vector::unit(0, f)]);
    Ok(kernel_mod(ring, &a, None).ncols() == 0)
}

/// A homogeneous `x` of degree `deg` with `A x = b`, if one exists.
pub fn solve(ring: &GradedRing, a: &Matrix, b: &Vector, deg: i32) -> Option<Vector> {
    if b.is_zero() {
        return Some(Vector::zero());
    }
    let n = a.ncols();
    let mut source = a.source.clone();
    source.push(deg);
    let mut cols = a.cols.clone();
    cols.push(b.clone());
    let k = kernel_mod(ring, &Matrix::new(a.target.clone(), source, cols), None);
    k.cols.iter().find_map(|v| {
        let c = v.get(n)?.as_constant()?;
        let factor = c.inv().ok()?.neg();
        Some(v.restrict(0..n).scale(&factor))
    })
}
