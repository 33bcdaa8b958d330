//! Homogeneous Buchberger algorithm for submodules of `P^n`, `P` a polynomial ring.
//!
//! Working over a quotient `R = P/I` is handled by seeding the basis with
//! `g * e_c` for every `g` in the reduced basis of `I` and every component `c`;
//! pairs among those seeds are never formed since they already form a basis.
//! Pairs are processed by degree (the sugar of a homogeneous pair is its
//! degree), ties broken by the order on the lcm, and pruned with the
//! Gebauer–Möller criteria. The product criterion is used only where it is
//! valid for modules: rank one, or when one side is a seeded ring relation.

use std::cmp::Ordering;

use super::monomial::{Monomial, TermOrder};
use super::poly::Polynomial;
use super::vector::Vector;

#[derive(Clone, Debug)]
struct Elem {
    v: Vector,
    comp: usize,
    lm: Monomial,
    deg: i32,
    ring_rel: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i32,
}

/// A (possibly partially completed) Gröbner basis of a homogeneous submodule.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    order: TermOrder,
    comp_degrees: Vec<i32>,
    elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    inputs: Vec<(i32, Vector)>,
    rank_one: bool,
}

impl ModuleGb {
    /// An empty basis in `P^n` (`n = comp_degrees.len()`), seeded with the ring relations.
    pub fn new(order: &TermOrder, ring_gb: &[Polynomial], comp_degrees: Vec<i32>) -> ModuleGb {
        let n = comp_degrees.len();
        let mut gb = ModuleGb {
            order: order.clone(),
            comp_degrees,
            elems: Vec::new(),
            by_comp: vec![Vec::new(); n],
            pairs: Vec::new(),
            inputs: Vec::new(),
            rank_one: n == 1,
        };
        for c in 0..n {
            for g in ring_gb {
                let v = Vector::unit(c, g.monic());
                let (comp, lm, _) = v.lead().map(|(c, m, s)| (c, m.clone(), s.clone())).unwrap();
                let deg = lm.degree() as i32 + gb.comp_degrees[c];
                gb.by_comp[comp].push(gb.elems.len());
                gb.elems.push(Elem { v, comp, lm, deg, ring_rel: true });
            }
        }
        gb
    }

    pub fn comp_degrees(&self) -> &[i32] {
        &self.comp_degrees
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.comp_degrees.len()
    }

    /// Queues a homogeneous generator; it is folded in by [`ModuleGb::complete`].
    pub fn push_generator(&mut self, v: Vector) {
        if let Some(d) = v.degree(&self.comp_degrees) {
            debug_assert!(v.is_homogeneous(&self.comp_degrees));
            self.inputs.push((d, v));
        }
    }

    /// Runs Buchberger on all queued work of degree at most `max_deg` (all work if `None`).
    pub fn complete(&mut self, max_deg: Option<i32>) {
        loop {
            let next = self.pairs.iter().map(|p| p.deg).chain(self.inputs.iter().map(|(d, _)| *d)).min();
            let Some(d) = next else { break };
            if max_deg.is_some_and(|m| d > m) {
                break;
            }
            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) = self.pairs.drain(..).partition(|p| p.deg == d);
            self.pairs = rest;
            let order = self.order.clone();
            batch.sort_by(|a, b| order.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
            let (inputs, rest): (Vec<_>, Vec<_>) = self.inputs.drain(..).partition(|(e, _)| *e == d);
            self.inputs = rest;
            for (_, v) in inputs {
                let r = self.reduce(&v);
                if !r.is_zero() {
                    self.insert(r);
                }
            }
            for p in batch {
                // a pair may have been discarded by criterion B after this batch was drawn
                let s = self.s_vector(&p);
                let r = self.reduce(&s);
                if !r.is_zero() {
                    self.insert(r);
                }
            }
        }
    }

    /// True when no queued work remains.
    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty() && self.inputs.is_empty()
    }

    fn s_vector(&self, p: &Pair) -> Vector {
        let a = &self.elems[p.i];
        let b = &self.elems[p.j];
        let ma = a.lm.quotient_of(&p.lcm).expect("lcm");
        let mb = b.lm.quotient_of(&p.lcm).expect("lcm");
        let ca = a.v.lead().unwrap().2.inv().unwrap();
        let cb = b.v.lead().unwrap().2.inv().unwrap().neg();
        let left = a.v.mul_term(&ma, &ca);
        left.add_scaled(&b.v, Some((&mb, &cb)), &self.order)
    }

    fn insert(&mut self, v: Vector) {
        let v = v.monic();
        let (comp, lm) = {
            let (c, m, _) = v.lead().unwrap();
            (c, m.clone())
        };
        let deg = lm.degree() as i32 + self.comp_degrees[comp];
        let k = self.elems.len();
        let weights = self.order.weights.clone();

        // criterion B on existing pairs
        self.pairs.retain(|p| {
            if self.elems[p.i].comp != comp || !lm.divides(&p.lcm) {
                return true;
            }
            let lik = self.elems[p.i].lm.lcm(&lm, &weights);
            let ljk = self.elems[p.j].lm.lcm(&lm, &weights);
            lik == p.lcm || ljk == p.lcm
        });

        // new pairs with criteria M and F, then the product criterion
        let mut cands: Vec<(usize, Monomial, bool)> = self.by_comp[comp]
            .iter()
            .map(|&i| {
                let e = &self.elems[i];
                let coprime = (self.rank_one || e.ring_rel) && e.lm.is_coprime(&lm);
                (i, e.lm.lcm(&lm, &weights), coprime)
            })
            .collect();
        let lcms: Vec<Monomial> = cands.iter().map(|c| c.1.clone()).collect();
        cands.retain(|(_, l, _)| !lcms.iter().any(|o| o != l && o.divides(l)));
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for c in cands {
            if let Some(existing) = kept.iter_mut().find(|k| k.1 == c.1) {
                // keep one pair per lcm; prefer a coprime witness so the whole class drops
                existing.2 |= c.2;
            } else {
                kept.push(c);
            }
        }
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let d = l.degree() as i32 + self.comp_degrees[comp];
            self.pairs.push(Pair { i, j: k, lcm: l, deg: d });
        }

        self.by_comp[comp].push(k);
        self.elems.push(Elem { v, comp, lm, deg, ring_rel: false });
    }

    fn find_reducer(&self, comp: usize, m: &Monomial) -> Option<usize> {
        self.by_comp[comp].iter().copied().find(|&i| self.elems[i].lm.divides(m))
    }

    /// Full reduction (normal form) of `v` by the current basis.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut rest = v.clone();
        let mut out = Vector::zero();
        while let Some((c, m, s)) = rest.pop_lead() {
            match self.find_reducer(c, &m) {
                None => out.push_term_unchecked(c, m, s),
                Some(i) => {
                    let e = &self.elems[i];
                    let q = e.lm.quotient_of(&m).unwrap();
                    let lc = e.v.lead().unwrap().2;
                    let f = s.div(lc).unwrap().neg();
                    // the leading term cancels against the popped one; subtract the tail
                    let mut tail = e.v.clone();
                    tail.pop_lead();
                    rest = rest.add_scaled(&tail, Some((&q, &f)), &self.order);
                }
            }
        }
        out
    }

    /// Membership test; exact once the basis is complete up to the degree of `v`.
    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// The non-seed basis elements (not inter-reduced).
    pub fn elements(&self) -> impl Iterator<Item = &Vector> {
        self.elems.iter().filter(|e| !e.ring_rel).map(|e| &e.v)
    }

    /// Leading terms `(component, monomial)` of every basis element, seeds included.
    pub fn leading_terms(&self) -> impl Iterator<Item = (usize, &Monomial)> {
        self.elems.iter().map(|e| (e.comp, &e.lm))
    }

    /// Minimal, tail-reduced, monic basis of the non-seed part, sorted increasingly.
    pub fn reduced_elements(&self) -> Vec<Vector> {
        let live: Vec<usize> = (0..self.elems.len())
            .filter(|&i| {
                let e = &self.elems[i];
                if e.ring_rel {
                    return false;
                }
                !self.elems.iter().enumerate().any(|(j, o)| {
                    j != i && o.comp == e.comp && o.lm.divides(&e.lm) && (o.lm != e.lm || o.ring_rel || j < i)
                })
            })
            .collect();
        let mut out = Vec::new();
        for &i in &live {
            let e = &self.elems[i];
            let mut tail = e.v.clone();
            let (c, m, s) = tail.pop_lead().unwrap();
            let reduced_tail = self.reduce(&tail);
            let mut v = Vector::zero();
            v.push_term_unchecked(c, m, s);
            let v = v.add(&reduced_tail, &self.order).monic();
            out.push(v);
        }
        let order = self.order.clone();
        out.sort_by(|a, b| cmp_vectors(&order, a, b));
        out
    }

    /// Degree of the highest basis element, if any.
    pub fn max_degree(&self) -> Option<i32> {
        self.elems.iter().map(|e| e.deg).max()
    }
}

/// Position-over-term comparison of leading terms.
pub fn cmp_vectors(order: &TermOrder, a: &Vector, b: &Vector) -> Ordering {
    match (a.lead(), b.lead()) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some((ca, ma, _)), Some((cb, mb, _))) => cb.cmp(&ca).then_with(|| order.cmp(ma, mb)),
    }
}
