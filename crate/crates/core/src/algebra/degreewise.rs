//! Graded pieces of free modules over artinian rings as coordinate spaces.
//!
//! `(R^n)_d` has the basis `m e_c` with `m` a standard monomial of degree
//! `d - deg e_c`. Homogeneous matrices become dense maps between these pieces.

use std::collections::HashMap;
use std::sync::Arc;

use super::linalg::LinField;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::GradedRing;
use super::vector::{Matrix, Vector};

pub(crate) struct Basis {
    pub elems: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn position(&self, c: usize, m: &Monomial) -> Option<usize> {
        self.index.get(&(c, m.clone())).copied()
    }
}

/// Degreewise view of a graded free module `R^n`.
pub(crate) struct FreeGraded<'a> {
    pub ring: &'a GradedRing,
    pub degrees: Vec<i32>,
    ring_basis: HashMap<i32, Arc<Vec<Monomial>>>,
    cache: HashMap<i32, Arc<Basis>>,
}

impl<'a> FreeGraded<'a> {
    pub fn new(ring: &'a GradedRing, degrees: Vec<i32>) -> Self {
        FreeGraded { ring, degrees, ring_basis: HashMap::new(), cache: HashMap::new() }
    }

    pub fn ring_piece(&mut self, e: i32) -> Arc<Vec<Monomial>> {
        let ring = self.ring;
        self.ring_basis.entry(e).or_insert_with(|| Arc::new(ring.basis_in_degree(e))).clone()
    }

    pub fn basis(&mut self, d: i32) -> Arc<Basis> {
        if let Some(b) = self.cache.get(&d) {
            return b.clone();
        }
        let mut elems = Vec::new();
        for c in 0..self.degrees.len() {
            let piece = self.ring_piece(d - self.degrees[c]);
            for m in piece.iter() {
                elems.push((c, m.clone()));
            }
        }
        let index = elems.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let b = Arc::new(Basis { elems, index });
        self.cache.insert(d, b.clone());
        b
    }

    /// Coordinates of a reduced homogeneous vector of degree `d`.
    pub fn coords<F: LinField>(&mut self, f: &F, v: &Vector, d: i32) -> Vec<F::E> {
        let b = self.basis(d);
        let mut out = vec![f.zero(); b.len()];
        for (c, p) in v.entries() {
            for (m, s) in p.terms() {
                let i = b.position(*c, m).expect("vector is reduced and homogeneous");
                out[i] = f.from_scalar(s);
            }
        }
        out
    }

    pub fn vector<F: LinField>(&mut self, f: &F, d: i32, coords: &[F::E]) -> Vector {
        let b = self.basis(d);
        let mut by_comp: Vec<Vec<(Monomial, super::scalar::Scalar)>> = vec![Vec::new(); self.degrees.len()];
        for (i, x) in coords.iter().enumerate() {
            if !f.is_zero(x) {
                let (c, m) = &b.elems[i];
                by_comp[*c].push((m.clone(), f.to_scalar(x)));
            }
        }
        let order = self.ring.order();
        Vector::from_entries(
            by_comp.into_iter().enumerate().map(|(c, terms)| (c, Polynomial::from_terms(terms, order))).collect(),
        )
    }

    /// Columns of `A_d : (source)_d -> (target)_d`, one per basis element of the source piece.
    pub fn map_columns<F: LinField>(
        &mut self,
        f: &F,
        a: &Matrix,
        target: &mut FreeGraded<'_>,
        d: i32,
    ) -> Vec<Vec<F::E>> {
        let src = self.basis(d);
        let mut cols = Vec::with_capacity(src.len());
        for (c, m) in &src.elems {
            let one = self.ring.field().one();
            let img = a.cols[*c].mul_term(m, &one);
            let img = self.ring.reduce_vector(&img);
            cols.push(target.coords(f, &img, d));
        }
        cols
    }

    /// Spanning vectors of the degree-`d` piece of the submodule generated by the columns of `cols`.
    pub fn submodule_piece<F: LinField>(&mut self, f: &F, cols: &Matrix, d: i32) -> Vec<Vec<F::E>> {
        let one = self.ring.field().one();
        let mut out = Vec::new();
        for (c, e) in cols.cols.iter().zip(&cols.source) {
            if c.is_zero() {
                continue;
            }
            let piece = self.ring_piece(d - e);
            for m in piece.iter() {
                let v = self.ring.reduce_vector(&c.mul_term(m, &one));
                if !v.is_zero() {
                    out.push(self.coords(f, &v, d));
                }
            }
        }
        out
    }

    /// Multiplication by `x_i` from degree `d` to `d + w_i`, as columns.
    pub fn var_columns<F: LinField>(&mut self, f: &F, i: usize, d: i32) -> Vec<Vec<F::E>> {
        let w = self.ring.weights()[i] as i32;
        let src = self.basis(d);
        let x = Monomial::var(i, self.ring.weights());
        let mut cols = Vec::with_capacity(src.len());
        let one = self.ring.field().one();
        for (c, m) in &src.elems {
            let p = self.ring.nf(&Polynomial::term(m.mul(&x), one.clone()));
            cols.push(self.coords(f, &Vector::unit(*c, p), d + w));
        }
        cols
    }
}

/// `sum_j v_j * col_j`.
pub(crate) fn apply_columns<F: LinField>(f: &F, cols: &[Vec<F::E>], v: &[F::E], out_len: usize) -> Vec<F::E> {
    let mut out = vec![f.zero(); out_len];
    for (x, col) in v.iter().zip(cols) {
        if !f.is_zero(x) {
            f.axpy(&mut out, x, col);
        }
    }
    out
}
