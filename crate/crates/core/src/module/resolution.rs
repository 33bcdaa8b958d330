//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::ring::Ring;
use crate::algebra::syz::kernel_mod;
use crate::algebra::vector::Matrix;
use crate::module::fpmodule::{FpModule, Pruned};

/// `F_len -> ... -> F_1 -> F_0` with `H_0 = M`, computed up to a bound.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    pruned: Pruned,
    degrees: Vec<Vec<i32>>,
    maps: Vec<Matrix>,
    terminated: bool,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The minimal presentation of the resolved module, on the generators of `F_0`.
    pub fn presentation(&self) -> &Pruned {
        &self.pruned
    }

    /// Largest homological degree computed.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// True when `F_{i} = 0` is known for every `i > length`.
    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// Generator degrees of `F_i`; empty beyond a terminated resolution.
    pub fn degrees(&self, i: usize) -> &[i32] {
        self.degrees.get(i).map_or(&[], |v| v.as_slice())
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees(i).len()
    }

    /// `d_i : F_i -> F_{i-1}` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &Matrix {
        &self.maps[i - 1]
    }

    /// Ranks `(beta_0, ..., beta_B)`.
    pub fn ranks(&self, bound: usize) -> Vec<usize> {
        (0..=bound).map(|i| self.rank(i)).collect()
    }

    /// Projective dimension when the resolution terminated.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.terminated {
            return None;
        }
        Some((0..self.degrees.len()).rev().find(|&i| self.rank(i) > 0).unwrap_or(0))
    }

    pub fn betti_table(&self, bound: usize) -> BettiTable {
        let mut entries = BTreeMap::new();
        for i in 0..=bound.min(self.length()) {
            for &d in self.degrees(i) {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        let entries = entries
            .into_iter()
            .map(|((homological, internal), count)| BettiEntry { homological, internal, count })
            .collect();
        BettiTable { bound, entries }
    }

    fn extend(&mut self, bound: usize) {
        while self.maps.len() < bound {
            let last = self.maps.len();
            let next = if self.terminated || self.degrees[last].is_empty() {
                self.terminated = true;
                Matrix::zero(self.degrees[last].clone(), Vec::new())
            } else {
                kernel_mod(&self.ring, &self.maps[last - 1], None)
            };
            if next.ncols() == 0 {
                self.terminated = true;
            }
            self.degrees.push(next.source.clone());
            self.maps.push(next);
        }
    }

    fn start(module: &FpModule, bound: usize) -> Resolution {
        let pruned = module.minimal_presentation();
        let f0 = pruned.module.degrees().to_vec();
        let d1 = pruned.module.relations().clone();
        let mut res =
            Resolution { ring: module.ring().clone(), degrees: vec![f0], maps: Vec::new(), terminated: false, pruned };
        if bound >= 1 {
            res.terminated = d1.ncols() == 0;
            res.degrees.push(d1.source.clone());
            res.maps.push(d1);
        } else if res.pruned.module.relations().ncols() == 0 {
            res.terminated = true;
        }
        res.extend(bound);
        res
    }
}

/// Minimal free resolution of `M` up to homological degree `bound`, memoized on the module.
pub fn free_resolution(module: &FpModule, bound: usize) -> Arc<Resolution> {
    let mut slot = module.resolution_cache().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(res) = slot.as_ref() {
        if res.length() >= bound {
            return res.clone();
        }
        let longer = if res.maps.is_empty() {
            Resolution::start(module, bound)
        } else {
            let mut r = (**res).clone();
            r.extend(bound);
            r
        };
        let longer = Arc::new(longer);
        *slot = Some(longer.clone());
        return longer;
    }
    let res = Arc::new(Resolution::start(module, bound));
    *slot = Some(res.clone());
    res
}

/// Graded Betti numbers `beta_{i,j}` of a minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub bound: usize,
    /// Nonzero entries sorted by homological then internal degree.
    pub entries: Vec<BettiEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub homological: usize,
    pub internal: i32,
    pub count: usize,
}

impl BettiTable {
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|e| e.homological == i).map(|e| e.count).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.bound).map(|i| self.total(i)).collect()
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.iter().find(|e| e.homological == i && e.internal == j).map_or(0, |e| e.count)
    }
}

pub fn betti_table(module: &FpModule, bound: usize) -> BettiTable {
    free_resolution(module, bound).betti_table(bound)
}
