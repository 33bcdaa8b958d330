//! The approximation triangle `N -> P -> H -> ΣN` and its rotation.

use serde::{Deserialize, Serialize};

use crate::algebra::vector::Matrix;
use crate::approximation::tail::{build_reflexive_tail, certified_gdim, ReflexiveTail};
use crate::complex::{is_exact_at, is_exact_in_degree, ChainMap, Complex, SubquotientMap, TrianglePresentation};
use crate::error::{Error, Result};
use crate::invariants::{gdim, Certificate, InvariantReport, Status};
use crate::module::{FpModule, Restricted};
use crate::numbers::ExtInt;

/// One verified property of a triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Check {
        Check { name: name.to_string(), passed, detail }
    }
}

/// `N -> P -> H -> ΣN` with `P` free of projective dimension `Gdim N` and `Gdim H <= n`.
#[derive(Clone, Debug)]
pub struct ApproximationResult {
    pub n: i32,
    pub tail: ReflexiveTail,
    pub triangle: TrianglePresentation,
    pub pd_p: InvariantReport,
    pub gdim_h: InvariantReport,
    pub sup_n: ExtInt,
    pub inf_n: ExtInt,
    pub sup_p: ExtInt,
    pub inf_p: ExtInt,
    pub sup_h: ExtInt,
    pub inf_h: ExtInt,
    /// `H_n(N) -> H_n(P) -> H_n(H) -> H_{n-1}(N)`.
    pub four_term: [SubquotientMap; 3],
    pub checks: Vec<Check>,
    pub status: Status,
}

impl ApproximationResult {
    /// `N` as the complex `C(n)`.
    pub fn whole(&self) -> &Complex {
        self.triangle.whole()
    }

    pub fn p(&self) -> &Complex {
        self.triangle.upper()
    }

    pub fn h(&self) -> &Complex {
        self.triangle.third()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `pd P = sup{i : H^i(Hom(P, k)) != 0}` for a bounded complex of free modules.
pub fn projective_dimension(p: &Complex) -> Result<InvariantReport> {
    if !p.is_free() {
        return Err(Error::Precondition("projective dimension of a complex with non-free terms".into()));
    }
    let k = Restricted::over_itself(&FpModule::residue_field(p.ring()));
    let dual = p.hom_into(&k)?;
    let value = -dual.homology_inf();
    let cert = Certificate { witness_degree: value.finite().map(|v| v.max(0) as usize), ..Default::default() };
    Ok(InvariantReport::new("pd", value, Status::Exact, cert))
}

/// `Gdim` of a complex whose terms are free or totally reflexive in degrees `<= cap`.
///
/// Exact for an exact complex, shifted from the module when the homology is concentrated
/// in one degree, and the bound `cap` otherwise.
pub fn gdim_of_complex(c: &Complex, cap: i32, bound: usize) -> Result<InvariantReport> {
    let nonzero: Vec<i32> = c.range().filter(|&l| !c.is_exact_at(l)).collect();
    match nonzero[..] {
        [] => {
            let cert = Certificate { note: Some("exact complex".into()), ..Default::default() };
            Ok(InvariantReport::new("gdim", ExtInt::NegInf, Status::Exact, cert))
        }
        [s] => {
            let mut rep = gdim(&c.homology_module(s), bound)?;
            rep.value = rep.value.add_finite(s as i64);
            rep.certificate.note = Some(format!("homology concentrated in degree {s}"));
            Ok(rep)
        }
        _ => {
            let cert = Certificate {
                note: Some(format!("terms totally reflexive or free in degrees <= {cap}")),
                ..Default::default()
            };
            Ok(InvariantReport::new("gdim", ExtInt::Finite(cap as i64), Status::CertifiedUpTo { bound, t: None }, cert))
        }
    }
}

fn at_most(r: &InvariantReport, cap: i64) -> bool {
    r.established().is_some_and(|v| v <= ExtInt::Finite(cap))
}

/// Builds and verifies the approximation triangle of `N` for `n <= Gdim N`.
///
/// Fails with [`Error::Postcondition`] naming every check that does not hold.
pub fn approximation_triangle(n_mod: &FpModule, n: i32, bound: usize) -> Result<ApproximationResult> {
    let (d, _) = certified_gdim(n_mod, bound)?;
    if n > d as i32 {
        return Err(Error::Precondition(format!("n = {n} exceeds Gdim N = {d}")));
    }
    let tail = build_reflexive_tail(n_mod, n, bound)?;
    let triangle = tail.complex().truncation_triangle(n);
    let whole = triangle.whole();
    let p = triangle.upper();
    let h = triangle.third();
    let pd_p = projective_dimension(p)?;
    let gdim_h = gdim_of_complex(h, n, bound)?;
    let (sup_n, inf_n) = (whole.homology_sup(), whole.homology_inf());
    let (sup_p, inf_p) = (p.homology_sup(), p.homology_inf());
    let (sup_h, inf_h) = (h.homology_sup(), h.homology_inf());
    let nn = ExtInt::Finite(n as i64);

    let first = triangle.projection().on_homology(n);
    let second = triangle.connecting().on_homology(n);
    let third = SubquotientMap::new(h.homology(n), whole.homology(n - 1), triangle.inclusion().component(n - 1))?;
    let four_ok = four_term_exact(&first, &second, &third, whole, n)?;

    let checks = vec![
        Check::new(
            "pd P = Gdim N",
            pd_p.value == ExtInt::Finite(d as i64),
            format!("pd P = {}, Gdim N = {d}", pd_p.value),
        ),
        Check::new("Gdim H <= n", at_most(&gdim_h, n as i64), format!("{gdim_h}, n = {n}")),
        Check::new("inf P >= n >= sup H", inf_p >= nn && nn >= sup_h, format!("inf P = {inf_p}, sup H = {sup_h}")),
        Check::new(
            "sup/inf bounds",
            nn.max(sup_n) >= sup_p && inf_h >= nn.min(inf_n.add_finite(1)),
            format!("sup N = {sup_n}, sup P = {sup_p}, inf N = {inf_n}, inf H = {inf_h}"),
        ),
        Check::new(
            "four-term sequence exact",
            four_ok,
            format!("0 -> H_{n}(N) -> H_{n}(P) -> H_{n}(H) -> H_{}(N) -> 0", n - 1),
        ),
    ];
    let status = tail.status();
    let result = ApproximationResult {
        n,
        tail,
        triangle,
        pd_p,
        gdim_h,
        sup_n,
        inf_n,
        sup_p,
        inf_p,
        sup_h,
        inf_h,
        four_term: [first, second, third],
        checks,
        status,
    };
    if !result.passed() {
        let failed: Vec<&str> = result.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        return Err(Error::Postcondition(format!("approximation triangle: {}", failed.join(", "))));
    }
    Ok(result)
}

/// Internal degrees where the modules of the four-term sequence can be nonzero.
fn four_term_window(whole: &Complex, p: &SubquotientMap, n: i32) -> (i32, i32) {
    let degs: Vec<i32> = [whole.term(n), whole.term(n - 1)]
        .iter()
        .flat_map(|t| t.degrees().to_vec())
        .chain(p.target().ambient().iter().copied())
        .collect();
    let lo = degs.iter().copied().min().unwrap_or(0);
    let hi = degs.iter().copied().max().unwrap_or(0);
    (lo, hi + whole.ring().top_degree().unwrap_or(4))
}

fn four_term_exact(
    a: &SubquotientMap,
    b: &SubquotientMap,
    c: &SubquotientMap,
    whole: &Complex,
    n: i32,
) -> Result<bool> {
    let modules = a.is_injective() && is_exact_at(a, b)? && is_exact_at(b, c)? && c.is_surjective();
    let (lo, hi) = four_term_window(whole, a, n);
    let degreewise = (lo..=hi).all(|d| {
        a.source().dim_in_degree(d) == a.rank_in_degree(d)
            && is_exact_in_degree(a, b, d)
            && is_exact_in_degree(b, c, d)
            && c.rank_in_degree(d) == c.target().dim_in_degree(d)
    });
    Ok(modules && degreewise)
}

/// `H' -> N -> ΣP' -> ΣH'` with `P' = Σ^{-1} P` and `H' = Σ^{-1} H`.
#[derive(Clone, Debug)]
pub struct RotatedTriangle {
    pub p_prime: Complex,
    pub h_prime: Complex,
    /// `P' -> H'`.
    pub to_h: ChainMap,
    /// `H' -> N`.
    pub to_n: ChainMap,
    /// `N -> ΣP'`.
    pub to_shift: ChainMap,
    pub pd_p_prime: InvariantReport,
    pub gdim_h_prime: InvariantReport,
    pub checks: Vec<Check>,
}

impl RotatedTriangle {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Rotates the triangle and re-verifies `pd P' = pd P - 1` and `Gdim H' <= n - 1`.
pub fn rotate_triangle(t: &ApproximationResult, bound: usize) -> Result<RotatedTriangle> {
    let n = t.n;
    let tri = &t.triangle;
    let p_prime = tri.upper().shift(-1);
    let h_prime = tri.kernel().clone();
    let dn = tri.whole().differential(n);
    let maps = p_prime
        .range()
        .map(|l| {
            if l == n - 1 {
                dn.neg()
            } else {
                Matrix::zero(h_prime.term(l).degrees().to_vec(), p_prime.term(l).degrees().to_vec())
            }
        })
        .collect();
    let to_h = ChainMap::new(p_prime.clone(), h_prime.clone(), maps)?;
    let to_n = tri.inclusion().clone();
    let to_shift = tri.projection().clone();
    let pd_p_prime = projective_dimension(&p_prime)?;
    let gdim_h_prime = gdim_of_complex(&h_prime, n - 1, bound)?;
    let expected = t.pd_p.value.add_finite(-1);
    let checks = vec![
        Check::new("pd P' = pd P - 1", pd_p_prime.value == expected, format!("pd P' = {}", pd_p_prime.value)),
        Check::new("Gdim H' <= n - 1", at_most(&gdim_h_prime, n as i64 - 1), format!("{gdim_h_prime}")),
        Check::new(
            "sup H' <= n - 1",
            h_prime.homology_sup() <= ExtInt::Finite(n as i64 - 1),
            format!("sup H' = {}", h_prime.homology_sup()),
        ),
    ];
    Ok(RotatedTriangle { p_prime, h_prime, to_h, to_n, to_shift, pd_p_prime, gdim_h_prime, checks })
}
