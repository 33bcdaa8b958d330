//! Graded-local rings `k[x_1..x_n]/I` with `I` homogeneous, and degree-preserving maps between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::gb::ModuleGb;
use super::monomial::{Monomial, OrderKind, TermOrder};
use super::poly::{monomial_string, Polynomial};
use super::scalar::{Field, Scalar};
use super::vector::{Matrix, Vector};
use crate::error::{Error, Result};

/// Reduced Gröbner basis of a homogeneous ideal in the polynomial ring, sorted by
/// degree and then by decreasing leading monomial.
pub fn groebner_basis(gens: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(format!("generator with {} terms", g.len())));
        }
        if let Some(m) = g.lead_monomial() {
            if m.nvars() != order.nvars() {
                return Err(Error::VariableCount { expected: order.nvars(), found: m.nvars() });
            }
        }
    }
    let mut gb = ModuleGb::new(order, &[], vec![0]);
    for g in gens {
        gb.push_generator(Vector::unit(0, g.clone()));
    }
    gb.complete(None);
    let mut out: Vec<Polynomial> =
        gb.reduced_elements().into_iter().map(|v| v.get(0).cloned().expect("rank one")).collect();
    out.sort_by(|a, b| {
        let (ma, mb) = (a.lead_monomial().unwrap(), b.lead_monomial().unwrap());
        ma.degree().cmp(&mb.degree()).then_with(|| order.cmp(mb, ma))
    });
    Ok(out)
}

/// A positively graded quotient of a polynomial ring by a homogeneous ideal.
///
/// The irrelevant ideal `m = (x_1, ..., x_n)` plays the role of the maximal
/// ideal and `k = R/m` the residue field.
pub struct GradedRing {
    field: Field,
    vars: Vec<String>,
    order: TermOrder,
    gens: Vec<Polynomial>,
    gb: Vec<Polynomial>,
    engine: ModuleGb,
    top: OnceLock<Option<i32>>,
}

pub type Ring = Arc<GradedRing>;

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order && self.gb == other.gb
    }
}

impl Eq for GradedRing {}

impl GradedRing {
    pub fn new(
        field: Field,
        vars: Vec<String>,
        weights: Vec<u32>,
        kind: OrderKind,
        gens: Vec<Polynomial>,
    ) -> Result<Ring> {
        if weights.len() != vars.len() {
            return Err(Error::VariableCount { expected: vars.len(), found: weights.len() });
        }
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("variable weights must be positive".into()));
        }
        let order = TermOrder { kind, weights };
        for g in &gens {
            if g.degree() == Some(0) {
                return Err(Error::InvalidArgument("defining generator of degree 0".into()));
            }
        }
        let gb = groebner_basis(&gens, &order)?;
        let mut engine = ModuleGb::new(&order, &[], vec![0]);
        for g in &gb {
            engine.push_generator(Vector::unit(0, g.clone()));
        }
        engine.complete(None);
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Arc::new(GradedRing { field, vars, order, gens, gb, engine, top: OnceLock::new() }))
    }

    /// Standard-graded ring with degrevlex order.
    pub fn standard(field: Field, vars: &[&str], gens: Vec<Polynomial>) -> Result<Ring> {
        let n = vars.len();
        GradedRing::new(field, vars.iter().map(|s| s.to_string()).collect(), vec![1; n], OrderKind::DegRevLex, gens)
    }

    /// The polynomial ring itself.
    pub fn polynomial(field: Field, vars: &[&str]) -> Ring {
        GradedRing::standard(field, vars, Vec::new()).expect("no relations")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.order.weights
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn defining_generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Cached reduced Gröbner basis of the defining ideal.
    pub fn reduced_gb(&self) -> &[Polynomial] {
        &self.gb
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::term(Monomial::one(self.nvars()), self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::term(Monomial::one(self.nvars()), c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::term(Monomial::var(i, self.weights()), self.field.one())
    }

    pub fn monomial(&self, exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec(), self.weights())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn poly(&self, terms: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            terms.iter().map(|(c, e)| (self.monomial(e), self.field.from_i64(*c))).collect(),
            &self.order,
        )
    }

    fn check_vars(&self, f: &Polynomial) -> Result<()> {
        match f.lead_monomial() {
            Some(m) if m.nvars() != self.nvars() => {
                Err(Error::VariableCount { expected: self.nvars(), found: m.nvars() })
            }
            _ => Ok(()),
        }
    }

    /// The unique remainder of `f` modulo the reduced Gröbner basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_vars(f)?;
        Ok(self.nf(f))
    }

    pub(crate) fn nf(&self, f: &Polynomial) -> Polynomial {
        if self.gb.is_empty() || f.is_zero() {
            return f.clone();
        }
        self.engine.reduce(&Vector::unit(0, f.clone())).get(0).cloned().unwrap_or_default()
    }

    pub fn ideal_member(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.add(g, &self.order)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.sub(g, &self.order)
    }

    /// Product reduced to normal form.
    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.nf(&f.mul(g, &self.order))
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// True when every variable is nilpotent, i.e. `R` has finite length.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars()).all(|i| {
            self.gb.iter().any(|g| {
                let m = g.lead_monomial().unwrap();
                m.exps().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0))
            })
        })
    }

    /// Least `s` with `m^s = 0`, for artinian rings.
    pub fn nilpotency_index(&self) -> Option<u32> {
        if !self.is_artinian() {
            return None;
        }
        let mut s = 1u32;
        loop {
            let all_zero = self
                .monomials_of_exponent_sum(s)
                .iter()
                .all(|m| self.nf(&Polynomial::term(m.clone(), self.field.one())).is_zero());
            if all_zero {
                return Some(s);
            }
            s += 1;
        }
    }

    /// Largest degree of a nonzero element, for artinian rings.
    pub fn top_degree(&self) -> Option<i32> {
        *self.top.get_or_init(|| self.compute_top_degree())
    }

    fn compute_top_degree(&self) -> Option<i32> {
        if !self.is_artinian() {
            return None;
        }
        let mut d = 0;
        let mut top = 0;
        let mut empty_run = 0;
        let wmax = *self.weights().iter().max().unwrap_or(&1) as i32;
        // a gap of `wmax` empty degrees means nothing lies above
        while empty_run < wmax.max(1) {
            if self.basis_in_degree(d).is_empty() {
                empty_run += 1;
            } else {
                top = d;
                empty_run = 0;
            }
            d += 1;
        }
        Some(top)
    }

    /// Monomials whose exponents sum to `s` (generators of `m^s`).
    pub fn monomials_of_exponent_sum(&self, s: u32) -> Vec<Monomial> {
        TermOrder::degrevlex(self.nvars()).monomials_of_degree(s).into_iter().map(|m| self.monomial(m.exps())).collect()
    }

    /// Standard monomials of weighted degree `d`: a `k`-basis of `R_d`.
    pub fn basis_in_degree(&self, d: i32) -> Vec<Monomial> {
        if d < 0 {
            return Vec::new();
        }
        self.order
            .monomials_of_degree(d as u32)
            .into_iter()
            .filter(|m| !self.gb.iter().any(|g| g.lead_monomial().unwrap().divides(m)))
            .collect()
    }

    /// `dim_k R_d`.
    pub fn hilbert_function(&self, d: i32) -> usize {
        self.basis_in_degree(d).len()
    }

    pub fn format_poly(&self, f: &Polynomial) -> String {
        f.to_string_with(&self.vars)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let s = monomial_string(m, &self.vars);
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    /// Reduces every entry of a vector to normal form.
    pub fn reduce_vector(&self, v: &Vector) -> Vector {
        Vector::from_entries(v.entries().iter().map(|(c, p)| (*c, self.nf(p))).collect())
    }

    /// `sum_i v_i * A e_i`, reduced.
    pub fn apply_matrix(&self, a: &Matrix, v: &Vector) -> Vector {
        let mut acc = Vector::zero();
        for (i, p) in v.entries() {
            acc = acc.add(&a.cols[*i].mul_poly(p, &self.order), &self.order);
        }
        self.reduce_vector(&acc)
    }

    /// Matrix product `a * b` (apply `b` first).
    pub fn mat_mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        debug_assert_eq!(a.source.len(), b.target.len());
        Matrix::new(a.target.clone(), b.source.clone(), b.cols.iter().map(|c| self.apply_matrix(a, c)).collect())
    }

    pub fn is_regular_element(&self, f: &Polynomial) -> Result<bool> {
        super::syz::is_regular_element(self, f)
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if !self.gens.is_empty() {
            let gens: Vec<String> = self.gens.iter().map(|g| self.format_poly(g)).collect();
            write!(f, " / ({})", gens.join(", "))?;
        }
        Ok(())
    }
}

/// A degree-preserving homomorphism `source -> target`, given by the images of the variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: Ring, target: Ring, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(Error::IllFormedMap(format!(
                "{} images for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        if source.field() != target.field() {
            return Err(Error::IllFormedMap("source and target fields differ".into()));
        }
        let mut reduced = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            target.check_vars(img)?;
            if !img.is_homogeneous() {
                return Err(Error::IllFormedMap(format!("image of {} is not homogeneous", source.vars[i])));
            }
            if let Some(d) = img.degree() {
                if d != source.weights()[i] {
                    return Err(Error::IllFormedMap(format!(
                        "image of {} has degree {d}, expected {}",
                        source.vars[i],
                        source.weights()[i]
                    )));
                }
            }
            reduced.push(target.nf(img));
        }
        let map = RingMap { source, target, images: reduced };
        for g in map.source.defining_generators() {
            if !map.apply_unchecked(g).is_zero() {
                return Err(Error::IllFormedMap(format!(
                    "defining relation {} does not map to zero",
                    map.source.format_poly(g)
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(ring: &Ring) -> RingMap {
        let images = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target)
            && (0..self.source.nvars()).all(|i| self.images[i] == self.source.var(i))
    }

    /// Substitutes the images and reduces in the target.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.source.check_vars(f)?;
        Ok(self.apply_unchecked(f))
    }

    pub(crate) fn apply_unchecked(&self, f: &Polynomial) -> Polynomial {
        let t = &self.target;
        let mut acc = Polynomial::zero();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![t.one()]; self.images.len()];
        for (m, c) in f.terms() {
            let mut term = t.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = t.mul(powers[i].last().unwrap(), &self.images[i]);
                    powers[i].push(next);
                }
                term = t.mul(&term, &powers[i][e as usize]);
            }
            acc = acc.add(&term, t.order());
        }
        t.nf(&acc)
    }

    pub fn apply_vector(&self, v: &Vector) -> Vector {
        Vector::from_entries(v.entries().iter().map(|(c, p)| (*c, self.apply_unchecked(p))).collect())
    }

    /// Entrywise image of a matrix; degrees are unchanged.
    pub fn apply_matrix(&self, a: &Matrix) -> Matrix {
        Matrix::new(a.target.clone(), a.source.clone(), a.cols.iter().map(|c| self.apply_vector(c)).collect())
    }

    /// Every image lies in the irrelevant ideal of the target.
    pub fn is_local(&self) -> bool {
        self.images.iter().all(|p| p.terms().iter().all(|(m, _)| m.degree() > 0))
    }
}
