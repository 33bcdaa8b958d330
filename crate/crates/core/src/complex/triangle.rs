//! Exact triangles `N -> P -> H -> ΣN` given by a degreewise surjection and its kernel.

use crate::algebra::vector::Matrix;
use crate::complex::chain::{ChainMap, Complex};
use crate::complex::subquotient::SubquotientMap;
use crate::error::{Error, Result};

/// `0 -> K -> N -> P -> 0` degreewise split, with `H = ΣK`.
#[derive(Clone, Debug)]
pub struct TrianglePresentation {
    n: i32,
    whole: Complex,
    upper: Complex,
    lower: Complex,
    third: Complex,
    inclusion: ChainMap,
    projection: ChainMap,
    connecting: ChainMap,
}

impl Complex {
    /// `(C_{>= n}, C_{<= n-1})`.
    pub fn split_at(&self, n: i32) -> (Complex, Complex) {
        (self.truncate_below(n), self.truncate_above(n - 1))
    }

    /// The triangle `C -> C_{>= n} -> Σ C_{<= n-1} -> ΣC` of the brutal truncation at `n`.
    pub fn truncation_triangle(&self, n: i32) -> TrianglePresentation {
        let (upper, lower) = self.split_at(n);
        let third = lower.shift(1);
        let inclusion = ChainMap::identity_on_overlap(&lower, self);
        let projection = ChainMap::identity_on_overlap(self, &upper);
        let maps = upper
            .range()
            .map(|l| {
                if l == n {
                    self.differential(n)
                } else {
                    Matrix::zero(third.term(l).degrees().to_vec(), upper.term(l).degrees().to_vec())
                }
            })
            .collect();
        let connecting = ChainMap::from_parts(upper.clone(), third.clone(), maps);
        TrianglePresentation { n, whole: self.clone(), upper, lower, third, inclusion, projection, connecting }
    }
}

impl TrianglePresentation {
    /// Assembles a triangle from a surjection `N -> P` with kernel `K`, checking the chain maps.
    pub fn new(n: i32, inclusion: ChainMap, projection: ChainMap, connecting: ChainMap) -> Result<Self> {
        let inclusion = ChainMap::new(inclusion.source().clone(), inclusion.target().clone(), components(&inclusion))?;
        let projection =
            ChainMap::new(projection.source().clone(), projection.target().clone(), components(&projection))?;
        let connecting =
            ChainMap::new(connecting.source().clone(), connecting.target().clone(), components(&connecting))?;
        let lower = inclusion.source().clone();
        let third = connecting.target().clone();
        if third.lo() != lower.lo() + 1 || third.hi() != lower.hi() + 1 {
            return Err(Error::InvalidArgument("third vertex is not the shift of the kernel".into()));
        }
        let t = TrianglePresentation {
            n,
            whole: projection.source().clone(),
            upper: projection.target().clone(),
            lower,
            third,
            inclusion,
            projection,
            connecting,
        };
        Ok(t)
    }

    pub fn n(&self) -> i32 {
        self.n
    }

    /// `N`.
    pub fn whole(&self) -> &Complex {
        &self.whole
    }

    /// `P`.
    pub fn upper(&self) -> &Complex {
        &self.upper
    }

    /// `K`, with `H = ΣK`.
    pub fn kernel(&self) -> &Complex {
        &self.lower
    }

    /// `H`.
    pub fn third(&self) -> &Complex {
        &self.third
    }

    pub fn inclusion(&self) -> &ChainMap {
        &self.inclusion
    }

    pub fn projection(&self) -> &ChainMap {
        &self.projection
    }

    pub fn connecting(&self) -> &ChainMap {
        &self.connecting
    }

    /// Homological degrees where the long sequence can be nonzero.
    pub fn window(&self) -> (i32, i32) {
        let lo = self.whole.lo().min(self.upper.lo()).min(self.lower.lo());
        let hi = self.whole.hi().max(self.upper.hi()).max(self.third.hi());
        (lo, hi)
    }

    /// The long exact sequence `... -> H_l(K) -> H_l(N) -> H_l(P) -> H_{l-1}(K) -> ...`,
    /// from the top of the window down, as composable maps.
    pub fn long_sequence(&self) -> Vec<SubquotientMap> {
        let (lo, hi) = self.window();
        let mut out = Vec::new();
        for l in (lo..=hi + 1).rev() {
            out.push(self.inclusion.on_homology(l));
            out.push(self.projection.on_homology(l));
            out.push(self.connecting.on_homology(l));
        }
        out
    }

    /// Exactness of the long sequence in internal degree `d`, by rank counts.
    pub fn long_sequence_exact_in_degree(&self, d: i32) -> bool {
        let maps = self.long_sequence();
        let ranks: Vec<usize> = maps.iter().map(|m| m.rank_in_degree(d)).collect();
        for i in 0..maps.len() {
            let dim = maps[i].source().dim_in_degree(d);
            let incoming = if i == 0 { 0 } else { ranks[i - 1] };
            if dim != incoming + ranks[i] {
                return false;
            }
        }
        true
    }
}

fn components(f: &ChainMap) -> Vec<Matrix> {
    f.source().range().map(|l| f.component(l)).collect()
}
