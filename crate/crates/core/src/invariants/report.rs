//! Reports pairing a numerical invariant with the evidence behind it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numbers::ExtInt;

/// How far a reported value is established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    /// Proven by a finite certificate.
    Exact,
    /// Consistent with every check up to homological bound `bound` (and truncation index `t`).
    CertifiedUpTo { bound: usize, t: Option<u32> },
    /// The bounded search found no decisive evidence.
    Unknown { bound: usize },
    /// The claimed value is false, with the failing check.
    Refuted { witness: Witness },
}

/// The first check that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", content = "degree", rename_all = "snake_case")]
pub enum Witness {
    /// `G -> G**` is not an isomorphism.
    Biduality,
    /// `Ext^i(G, R) != 0`.
    Ext(usize),
    /// `Ext^i(G*, R) != 0`.
    DualExt(usize),
}

/// Data from which a report can be replayed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Certificate {
    /// Homological degree of a nonzero homology module realizing the value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_degree: Option<usize>,
    /// Degrees checked to vanish.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vanishing: Vec<usize>,
    /// Degrees checked to be nonzero.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nonvanishing: Vec<usize>,
    /// Length of a terminating resolution used to conclude.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution_length: Option<usize>,
    /// Ranks of the resolution used.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub betti: Vec<usize>,
    /// Values per truncation index `t`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_t: Vec<(u32, ExtInt)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<bool>,
    /// `depth R - depth N`, for comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth_difference: Option<ExtInt>,
    /// Total reflexivity of the syzygy at the reported degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail: Option<TailCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Evidence that a syzygy is totally reflexive up to a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailCertificate {
    pub syzygy_degree: usize,
    pub biduality: bool,
    /// `Ext^i(G, R) = 0` checked for `1 <= i <= ext_bound`.
    pub ext_bound: usize,
    /// `Ext^i(G*, R) = 0` checked for `1 <= i <= dual_ext_bound`.
    pub dual_ext_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub name: String,
    pub value: ExtInt,
    pub status: Status,
    pub certificate: Certificate,
}

impl InvariantReport {
    pub fn new(name: &str, value: ExtInt, status: Status, certificate: Certificate) -> Self {
        InvariantReport { name: name.to_string(), value, status, certificate }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.status, Status::Unknown { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.status, Status::Refuted { .. })
    }

    /// The value when the status supports it (exact or certified up to the bound).
    pub fn established(&self) -> Option<ExtInt> {
        match self.status {
            Status::Exact | Status::CertifiedUpTo { .. } => Some(self.value),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Exact => write!(f, "exact"),
            Status::CertifiedUpTo { bound, t: None } => write!(f, "certified up to B={bound}"),
            Status::CertifiedUpTo { bound, t: Some(t) } => write!(f, "certified up to B={bound}, t={t}"),
            Status::Unknown { bound } => write!(f, "unknown (B={bound})"),
            Status::Refuted { witness } => write!(f, "refuted ({witness})"),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Biduality => write!(f, "biduality fails"),
            Witness::Ext(i) => write!(f, "Ext^{i}(G,R) != 0"),
            Witness::DualExt(i) => write!(f, "Ext^{i}(G*,R) != 0"),
        }
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Unknown { bound } => write!(f, "{} = Unknown({bound})", self.name),
            _ => write!(f, "{} = {} [{}]", self.name, self.value, self.status),
        }
    }
}
