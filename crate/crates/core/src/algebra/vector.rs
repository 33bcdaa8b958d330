//! Elements of free modules `P^n` (sparse in components) and homogeneous matrices.
//!
//! Vectors are compared position-over-term: a smaller component index beats
//! any monomial in a larger one. That makes every prefix of the components an
//! elimination block, which is what the kernel computations rely on.

use super::monomial::{Monomial, TermOrder};
use super::poly::Polynomial;
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    entries: Vec<(usize, Polynomial)>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { entries: Vec::new() }
    }

    /// The basis vector `e_comp` scaled by a polynomial.
    pub fn unit(comp: usize, p: Polynomial) -> Vector {
        if p.is_zero() {
            Vector::zero()
        } else {
            Vector { entries: vec![(comp, p)] }
        }
    }

    pub fn from_entries(mut entries: Vec<(usize, Polynomial)>) -> Vector {
        entries.retain(|(_, p)| !p.is_zero());
        entries.sort_by_key(|(c, _)| *c);
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0), "duplicate component");
        Vector { entries }
    }

    /// From a dense list of polynomials.
    pub fn from_dense(polys: Vec<Polynomial>) -> Vector {
        Vector::from_entries(polys.into_iter().enumerate().collect())
    }

    pub fn entries(&self) -> &[(usize, Polynomial)] {
        &self.entries
    }

    pub fn get(&self, comp: usize) -> Option<&Polynomial> {
        self.entries.binary_search_by_key(&comp, |(c, _)| *c).ok().map(|i| &self.entries[i].1)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(component, monomial, coefficient)` of the leading term.
    pub fn lead(&self) -> Option<(usize, &Monomial, &Scalar)> {
        self.entries.first().map(|(c, p)| {
            let (m, a) = p.lead().expect("entries are nonzero");
            (*c, m, a)
        })
    }

    pub fn lead_component(&self) -> Option<usize> {
        self.entries.first().map(|(c, _)| *c)
    }

    pub fn max_component(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    pub fn num_terms(&self) -> usize {
        self.entries.iter().map(|(_, p)| p.len()).sum()
    }

    /// Degree of the leading term with component shifts applied.
    pub fn degree(&self, comp_degrees: &[i32]) -> Option<i32> {
        self.lead().map(|(c, m, _)| m.degree() as i32 + comp_degrees[c])
    }

    pub fn is_homogeneous(&self, comp_degrees: &[i32]) -> bool {
        let Some(d) = self.degree(comp_degrees) else { return true };
        self.entries.iter().all(|(c, p)| p.terms().iter().all(|(m, _)| m.degree() as i32 + comp_degrees[*c] == d))
    }

    pub fn neg(&self) -> Vector {
        Vector { entries: self.entries.iter().map(|(c, p)| (*c, p.neg())).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        if s.is_zero() {
            return Vector::zero();
        }
        Vector { entries: self.entries.iter().map(|(c, p)| (*c, p.scale(s))).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, s: &Scalar) -> Vector {
        if s.is_zero() {
            return Vector::zero();
        }
        Vector { entries: self.entries.iter().map(|(c, p)| (*c, p.mul_term(m, s))).collect() }
    }

    /// Multiplies every entry by a polynomial, without reduction.
    pub fn mul_poly(&self, f: &Polynomial, order: &TermOrder) -> Vector {
        Vector::from_entries(self.entries.iter().map(|(c, p)| (*c, p.mul(f, order))).collect())
    }

    pub fn add(&self, other: &Vector, order: &TermOrder) -> Vector {
        self.add_scaled(other, None, order)
    }

    pub fn sub(&self, other: &Vector, order: &TermOrder) -> Vector {
        self.add(&other.neg(), order)
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, other: &Vector, factor: Option<(&Monomial, &Scalar)>, order: &TermOrder) -> Vector {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.entries;
        let b = &other.entries;
        let scaled = |p: &Polynomial| match factor {
            None => p.clone(),
            Some((m, s)) => p.mul_term(m, s),
        };
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let p = scaled(&b[j].1);
                if !p.is_zero() {
                    out.push((b[j].0, p));
                }
                j += 1;
            } else {
                let p = a[i].1.add_scaled(&b[j].1, factor, order);
                if !p.is_zero() {
                    out.push((a[i].0, p));
                }
                i += 1;
                j += 1;
            }
        }
        Vector { entries: out }
    }

    /// Renumbers components with `f`; `f` must be strictly increasing on the support.
    pub fn map_components(&self, f: impl Fn(usize) -> usize) -> Vector {
        Vector { entries: self.entries.iter().map(|(c, p)| (f(*c), p.clone())).collect() }
    }

    /// Keeps only components in `range`, shifted down by `range.start`.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Vector {
        Vector {
            entries: self
                .entries
                .iter()
                .filter(|(c, _)| range.contains(c))
                .map(|(c, p)| (c - range.start, p.clone()))
                .collect(),
        }
    }

    /// Splits off the leading term.
    pub(crate) fn pop_lead(&mut self) -> Option<(usize, Monomial, Scalar)> {
        let (c, p) = self.entries.first_mut()?;
        let c = *c;
        let mut terms = std::mem::take(p).into_terms();
        let (m, s) = terms.remove(0);
        if terms.is_empty() {
            self.entries.remove(0);
        } else {
            self.entries[0].1 = Polynomial::from_sorted_unchecked(terms);
        }
        Some((c, m, s))
    }

    pub(crate) fn push_term_unchecked(&mut self, c: usize, m: Monomial, s: Scalar) {
        match self.entries.last_mut() {
            Some((lc, p)) if *lc == c => {
                let mut terms = std::mem::take(p).into_terms();
                terms.push((m, s));
                *p = Polynomial::from_sorted_unchecked(terms);
            }
            _ => self.entries.push((c, Polynomial::from_sorted_unchecked(vec![(m, s)]))),
        }
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Vector {
        match self.lead() {
            None => Vector::zero(),
            Some((_, _, s)) => {
                let inv = s.inv().expect("nonzero lead");
                self.scale(&inv)
            }
        }
    }
}

/// A homogeneous map `R^source -> R^target`, stored by columns.
///
/// Column `j` is the image of the `j`-th source generator and has internal
/// degree `source[j]` with respect to the target generator degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub target: Vec<i32>,
    pub source: Vec<i32>,
    pub cols: Vec<Vector>,
}

impl Matrix {
    pub fn new(target: Vec<i32>, source: Vec<i32>, cols: Vec<Vector>) -> Matrix {
        assert_eq!(source.len(), cols.len(), "one column per source generator");
        Matrix { target, source, cols }
    }

    pub fn zero(target: Vec<i32>, source: Vec<i32>) -> Matrix {
        let cols = vec![Vector::zero(); source.len()];
        Matrix { target, source, cols }
    }

    pub fn identity(degrees: Vec<i32>, one: &Scalar, nvars: usize) -> Matrix {
        let cols =
            (0..degrees.len()).map(|i| Vector::unit(i, Polynomial::term(Monomial::one(nvars), one.clone()))).collect();
        Matrix { target: degrees.clone(), source: degrees, cols }
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Polynomial {
        self.cols[col].get(row).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Checks that each column is homogeneous of its declared degree.
    pub fn is_homogeneous(&self) -> bool {
        self.cols
            .iter()
            .zip(&self.source)
            .all(|(c, &d)| c.is_homogeneous(&self.target) && c.degree(&self.target).is_none_or(|e| e == d))
    }

    /// Dense rows-by-columns view.
    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.nrows()).map(|r| (0..self.ncols()).map(|c| self.entry(r, c)).collect()).collect()
    }

    /// The transpose, as a map between dual free modules (degrees negated).
    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<Vec<(usize, Polynomial)>> = vec![Vec::new(); self.nrows()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, p) in col.entries() {
                cols[*i].push((j, p.clone()));
            }
        }
        Matrix {
            target: self.source.iter().map(|d| -d).collect(),
            source: self.target.iter().map(|d| -d).collect(),
            cols: cols.into_iter().map(Vector::from_entries).collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let off = self.nrows();
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.map_components(|i| i + off)));
        let mut target = self.target.clone();
        target.extend_from_slice(&other.target);
        let mut source = self.source.clone();
        source.extend_from_slice(&other.source);
        Matrix { target, source, cols }
    }

    /// Columns of `self` followed by columns of `other` (same target).
    pub fn concat(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.target, other.target);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        let mut source = self.source.clone();
        source.extend_from_slice(&other.source);
        Matrix { target: self.target.clone(), source, cols }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix {
            target: self.target.clone(),
            source: idx.iter().map(|&i| self.source[i]).collect(),
            cols: idx.iter().map(|&i| self.cols[i].clone()).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            target: self.target.clone(),
            source: self.source.clone(),
            cols: self.cols.iter().map(|c| c.neg()).collect(),
        }
    }
}
