//! Dense linear algebra over the coefficient field.
//!
//! Generic over [`LinField`] so prime fields run on machine integers while
//! the rationals use exact big rationals.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{Field, Scalar};

pub trait LinField: Clone + Debug + Send + Sync {
    type E: Clone + PartialEq + Debug + Send + Sync;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_scalar(&self, s: &Scalar) -> Self::E;
    fn to_scalar(&self, e: &Self::E) -> Scalar;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    /// `v += c * w`
    fn axpy(&self, v: &mut [Self::E], c: &Self::E, w: &[Self::E]) {
        for (x, y) in v.iter_mut().zip(w) {
            if !self.is_zero(y) {
                *x = self.add(x, &self.mul(c, y));
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ModP(pub u32);

impl LinField for ModP {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.0
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.0 as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.0 as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        let (mut t, mut nt) = (0i64, 1i64);
        let (mut r, mut nr) = (self.0 as i64, *a as i64);
        while nr != 0 {
            let q = r / nr;
            (t, nt) = (nt, t - q * nt);
            (r, nr) = (nr, r - q * nr);
        }
        assert_eq!(r, 1, "inverse of zero");
        t.rem_euclid(self.0 as i64) as u32
    }
    fn from_scalar(&self, s: &Scalar) -> u32 {
        match s {
            Scalar::Mod(v, _) => *v,
            Scalar::Rat(_) => panic!("rational scalar in a prime field"),
        }
    }
    fn to_scalar(&self, e: &u32) -> Scalar {
        Scalar::Mod(*e, self.0)
    }
    fn axpy(&self, v: &mut [u32], c: &u32, w: &[u32]) {
        let p = self.0 as u64;
        let c = *c as u64;
        for (x, y) in v.iter_mut().zip(w) {
            if *y != 0 {
                *x = ((*x as u64 + c * *y as u64) % p) as u32;
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Rationals;

impl LinField for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_scalar(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rat(r) => (**r).clone(),
            Scalar::Mod(..) => panic!("modular scalar in QQ"),
        }
    }
    fn to_scalar(&self, e: &BigRational) -> Scalar {
        Scalar::Rat(Box::new(e.clone()))
    }
}

/// An incrementally built subspace of `k^n`, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Span<F: LinField> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::E>>,
    pivots: Vec<usize>,
}

impl<F: LinField> Span<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Span { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F::E>] {
        &self.rows
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [F::E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !self.field.is_zero(&v[p]) {
                let c = self.field.neg(&v[p]);
                self.field.axpy(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[F::E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[F::E]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !self.field.is_zero(x)) else { return false };
        let inv = self.field.inv(&w[p]);
        for x in w.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !self.field.is_zero(&row[p]) {
                let c = self.field.neg(&row[p]);
                self.field.axpy(row, &c, &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}

/// Basis of `{x : M x = 0}` for `M` given by rows with `ncols` columns.
pub fn kernel<F: LinField>(field: &F, rows: &[Vec<F::E>], ncols: usize) -> Vec<Vec<F::E>> {
    let mut span = Span::new(field.clone(), ncols);
    for r in rows {
        span.insert(r);
    }
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &p in &span.pivots {
            s[p] = true;
        }
        s
    };
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !pivot_set[c]) {
        let mut x = vec![field.zero(); ncols];
        x[free] = field.one();
        for (row, &p) in span.rows.iter().zip(&span.pivots) {
            x[p] = field.neg(&row[free]);
        }
        out.push(x);
    }
    out
}

/// Rank of a matrix given by rows.
pub fn rank<F: LinField>(field: &F, rows: &[Vec<F::E>], ncols: usize) -> usize {
    let mut span = Span::new(field.clone(), ncols);
    for r in rows {
        span.insert(r);
    }
    span.rank()
}

/// Transposes a dense matrix given by rows.
pub fn transpose<E: Clone>(rows: &[Vec<E>], ncols: usize) -> Vec<Vec<E>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

/// Runs `f` with the concrete [`LinField`] for `field`.
pub fn with_field<R>(field: Field, f: impl FnOnce(&dyn FieldDispatch) -> R) -> R {
    match field {
        Field::Prime(p) => f(&ModP(p)),
        Field::Rational => f(&Rationals),
    }
}

/// Object-safe entry points used where generic code would be overkill.
pub trait FieldDispatch {
    fn kernel_scalars(&self, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>>;
    fn rank_scalars(&self, rows: &[Vec<Scalar>], ncols: usize) -> usize;
}

impl<F: LinField> FieldDispatch for F {
    fn kernel_scalars(&self, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
        let conv: Vec<Vec<F::E>> = rows.iter().map(|r| r.iter().map(|s| self.from_scalar(s)).collect()).collect();
        kernel(self, &conv, ncols).into_iter().map(|r| r.iter().map(|e| self.to_scalar(e)).collect()).collect()
    }

    fn rank_scalars(&self, rows: &[Vec<Scalar>], ncols: usize) -> usize {
        let conv: Vec<Vec<F::E>> = rows.iter().map(|r| r.iter().map(|s| self.from_scalar(s)).collect()).collect();
        rank(self, &conv, ncols)
    }
}

/// Kernel of a scalar matrix over `field`.
pub fn kernel_of(field: Field, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    with_field(field, |f| f.kernel_scalars(rows, ncols))
}

/// Rank of a scalar matrix over `field`.
pub fn rank_of(field: Field, rows: &[Vec<Scalar>], ncols: usize) -> usize {
    with_field(field, |f| f.rank_scalars(rows, ncols))
}

/// Evaluates `$body` with `$f` bound to the concrete [`LinField`] for a [`Field`].
macro_rules! dispatch_field {
    ($field:expr, |$f:ident| $body:expr) => {
        match $field {
            $crate::algebra::scalar::Field::Prime(p) => {
                let $f = &$crate::algebra::linalg::ModP(p);
                $body
            }
            $crate::algebra::scalar::Field::Rational => {
                let $f = &$crate::algebra::linalg::Rationals;
                $body
            }
        }
    };
}
pub(crate) use dispatch_field;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_mod_p() {
        let f = ModP(7);
        // [1 2 3; 2 4 6] has a two dimensional kernel
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&f, &rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &rows {
                let dot = r.iter().zip(v).fold(0, |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn span_insert_and_contains() {
        let f = ModP(101);
        let mut s = Span::new(f, 3);
        assert!(s.insert(&[1, 1, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 2, 1]));
        assert!(s.contains(&[2, 3, 1]));
        assert!(!s.contains(&[0, 0, 1]));
    }

    #[test]
    fn rational_rank() {
        let q = Rationals;
        let r = |n: i64| BigRational::from_integer(n.into());
        let rows = vec![vec![r(1), r(2)], vec![r(3), r(6)]];
        assert_eq!(rank(&q, &rows, 2), 1);
        assert_eq!(ModP(5).inv(&3), 2);
    }
}
