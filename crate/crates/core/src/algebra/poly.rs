//! Sparse polynomials with terms kept in strictly decreasing order.

use std::cmp::Ordering;

use super::monomial::{Monomial, TermOrder};
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn term(mono: Monomial, coeff: Scalar) -> Polynomial {
        if coeff.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(mono, coeff)] }
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, Scalar)>, order: &TermOrder) -> Polynomial {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Weighted degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    /// The constant coefficient, if the polynomial is a nonzero constant.
    pub fn as_constant(&self) -> Option<&Scalar> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    /// `self * c * mono`; monomial multiplication preserves the order.
    pub fn mul_term(&self, mono: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.mul(c))).collect() }
    }

    pub fn add(&self, other: &Polynomial, order: &TermOrder) -> Polynomial {
        self.add_scaled(other, None, order)
    }

    pub fn sub(&self, other: &Polynomial, order: &TermOrder) -> Polynomial {
        let c = other.terms.first().map(|t| t.1.field().from_i64(-1));
        match c {
            None => self.clone(),
            Some(c) => self.add_scaled(other, Some((&Monomial::one(order.nvars()), &c)), order),
        }
    }

    /// `self + c * mono * other`, merged in one pass.
    pub fn add_scaled(
        &self,
        other: &Polynomial,
        factor: Option<(&Monomial, &Scalar)>,
        order: &TermOrder,
    ) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, c)| match factor {
            None => (m.clone(), c.clone()),
            Some((fm, fc)) => (m.mul(fm), c.mul(fc)),
        });
        let mut bnext = b.next();
        loop {
            match (a.peek(), &bnext) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    out.push(bnext.take().unwrap());
                    bnext = b.next();
                }
                (Some((am, ac)), Some((bm, bc))) => match order.cmp(am, bm) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        out.push(bnext.take().unwrap());
                        bnext = b.next();
                    }
                    Ordering::Equal => {
                        let s = ac.add(bc);
                        if !s.is_zero() {
                            out.push((am.clone(), s));
                        }
                        a.next();
                        bnext = b.next();
                    }
                },
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, other: &Polynomial, order: &TermOrder) -> Polynomial {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = acc.add_scaled(big, Some((m, c)), order);
        }
        acc
    }

    /// Divides every coefficient by the leading one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn to_string_with(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_string(m, vars);
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&mag);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

pub(crate) fn monomial_string(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}
