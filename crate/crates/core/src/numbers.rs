//! Extended integers `Z ∪ {-∞, +∞}` for homological suprema and infima.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    /// `self - other`, with `∞ - ∞` undefined.
    pub fn checked_sub(self, other: ExtInt) -> Option<ExtInt> {
        use ExtInt::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Some(Finite(a - b)),
            (PosInf, NegInf) | (PosInf, Finite(_)) => Some(PosInf),
            (NegInf, PosInf) | (NegInf, Finite(_)) => Some(NegInf),
            (Finite(_), NegInf) => Some(PosInf),
            (Finite(_), PosInf) => Some(NegInf),
            _ => None,
        }
    }

    pub fn add_finite(self, k: i64) -> ExtInt {
        match self {
            ExtInt::Finite(a) => ExtInt::Finite(a + k),
            e => e,
        }
    }
}

impl std::ops::Neg for ExtInt {
    type Output = ExtInt;

    fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::Finite(n) => ExtInt::Finite(-n),
            ExtInt::PosInf => ExtInt::NegInf,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(n: i64) -> Self {
        ExtInt::Finite(n)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Finite(n) => write!(f, "{n}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

/// Supremum of a set of integers; `-∞` for the empty set.
pub fn sup(it: impl IntoIterator<Item = i64>) -> ExtInt {
    it.into_iter().max().map_or(ExtInt::NegInf, ExtInt::Finite)
}

/// Infimum of a set of integers; `+∞` for the empty set.
pub fn inf(it: impl IntoIterator<Item = i64>) -> ExtInt {
    it.into_iter().min().map_or(ExtInt::PosInf, ExtInt::Finite)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_conventions() {
        assert!(ExtInt::NegInf < ExtInt::Finite(-5));
        assert!(ExtInt::Finite(7) < ExtInt::PosInf);
        assert_eq!(sup(Vec::new()), ExtInt::NegInf);
        assert_eq!(inf(Vec::new()), ExtInt::PosInf);
        assert_eq!(ExtInt::Finite(1).checked_sub(ExtInt::Finite(0)), Some(ExtInt::Finite(1)));
        assert_eq!(ExtInt::PosInf.checked_sub(ExtInt::PosInf), None);
    }
}
