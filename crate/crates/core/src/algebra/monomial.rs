//! Monomials with a cached weighted degree, and degree-compatible term orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: impl Into<Exponents>, weights: &[u32]) -> Monomial {
        let exps = exps.into();
        debug_assert_eq!(exps.len(), weights.len());
        let deg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    /// The monomial `x_var`.
    pub fn var(var: usize, weights: &[u32]) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, weights.len());
        exps[var] = 1;
        Monomial { exps, deg: weights[var] }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Weighted degree.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Sum of exponents, ignoring weights.
    pub fn total_exponent(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial::new(exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    DegRevLex,
    DegLex,
}

/// A degree-compatible monomial order. Degree is the weighted degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub weights: Vec<u32>,
}

impl TermOrder {
    pub fn degrevlex(nvars: usize) -> TermOrder {
        TermOrder { kind: OrderKind::DegRevLex, weights: vec![1; nvars] }
    }

    pub fn deglex(nvars: usize) -> TermOrder {
        TermOrder { kind: OrderKind::DegLex, weights: vec![1; nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.deg.cmp(&b.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        match self.kind {
            OrderKind::DegLex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// All monomials of weighted degree `d`, in decreasing order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut cur: Vec<u16> = vec![0; n];
        fn rec(w: &[u32], i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
            if i == w.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut e = 0u32;
            while e * w[i] <= left {
                cur[i] = e as u16;
                rec(w, i + 1, left - e * w[i], cur, out);
                e += 1;
            }
            cur[i] = 0;
        }
        let mut raw = Vec::new();
        if n == 0 {
            if d == 0 {
                raw.push(Vec::new());
            }
        } else {
            rec(&self.weights, 0, d, &mut cur, &mut raw);
        }
        for e in raw {
            out.push(Monomial::new(SmallVec::from_vec(e), &self.weights));
        }
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }
}
