//! Properties shared by the proptest suites and the acceptance run.

use gorenstein::approximation::build_reflexive_tail;
use gorenstein::complex::Complex;
use gorenstein::invariants::{depth, gdim, gfd_bounded, DerivedQuery};
use gorenstein::module::{free_resolution, matlis_dual, FpModule, Restricted};
use gorenstein::{ExtInt, Polynomial, Ring, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

pub fn over_itself(m: &FpModule) -> Restricted {
    Restricted::over_itself(m)
}

pub fn seeded(r: &Ring, seed: u64) -> FpModule {
    random_module(r, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn gb_rings() -> Vec<Ring> {
    vec![
        ring(gf101(), &["u", "v"], &["u*v"]),
        x3(),
        xy2(),
        ring(gf101(), &["x", "y", "z"], &["x*z-y^2", "x^2-y*z"]),
        ring(gf101(), &["x", "y"], &[]),
    ]
}

/// Random polynomial in the ambient polynomial ring: a sum of terms of degree at most 3.
pub fn random_poly(r: &Ring, coeffs: &[i64]) -> Polynomial {
    let mut terms = Vec::new();
    let mut k = 0;
    for d in 0..=3 {
        for m in r.monomials_of_exponent_sum(d) {
            let c = coeffs[k % coeffs.len()];
            k += 1;
            if c != 0 {
                terms.push((m, r.field().from_i64(c)));
            }
        }
    }
    Polynomial::from_terms(terms, r.order())
}

pub fn nf(r: &Ring, f: &Polynomial) -> Polynomial {
    r.normal_form(f).unwrap()
}

fn residue(s: &Scalar) -> u64 {
    match s {
        Scalar::Mod(v, _) => *v as u64,
        Scalar::Rat(_) => panic!("prime field expected"),
    }
}

/// Rank mod 101 of the coefficient vectors of `polys` on the monomials of degree `d`.
pub fn rank_mod_p(r: &Ring, polys: &[Polynomial], d: u32) -> usize {
    const P: u64 = 101;
    let monos = r.monomials_of_exponent_sum(d);
    let mut rows: Vec<Vec<u64>> = polys
        .iter()
        .map(|f| monos.iter().map(|m| f.terms().iter().find(|(t, _)| t == m).map_or(0, |(_, c)| residue(c))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..monos.len() {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = (1..P).find(|x| x * rows[rank][col] % P == 1).unwrap();
        for j in 0..monos.len() {
            rows[rank][j] = rows[rank][j] * inv % P;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..monos.len() {
                    rows[i][j] = (rows[i][j] + P * P - f * rows[rank][j]) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn resolution_rings() -> Vec<Ring> {
    vec![uv(), x3(), xy2(), ring(qq(), &["x", "y"], &[])]
}

pub fn artinian_rings() -> Vec<Ring> {
    vec![x3(), xy2(), ring(gf101(), &["x", "y"], &["x^2", "y^2"])]
}

pub fn nf_kernel_is_the_ideal() -> Result<(), TestCaseError> {
    for r in gb_rings() {
        let gens = r.defining_generators().to_vec();
        for d in 0..=4u32 {
            let mut products = Vec::new();
            for g in &gens {
                let gd = g.degree().unwrap();
                if gd > d {
                    continue;
                }
                for m in r.monomials_of_exponent_sum(d - gd) {
                    let p = g.mul_term(&m, &r.field().one());
                    prop_assert!(nf(&r, &p).is_zero(), "{}: {} reduces to nonzero", r, r.format_poly(&p));
                    products.push(p);
                }
            }
            let ideal_dim = rank_mod_p(&r, &products, d);
            let all = r.monomials_of_exponent_sum(d).len();
            prop_assert_eq!(all - ideal_dim, r.basis_in_degree(d as i32).len(), "{} degree {}", r, d);
        }
    }
    Ok(())
}

pub fn nf_laws(which: usize, a: &[i64], b: &[i64]) -> Result<(), TestCaseError> {
    let r = &gb_rings()[which];
    let f = random_poly(r, a);
    let g = random_poly(r, b);
    let (nf_f, nf_g) = (nf(r, &f), nf(r, &g));
    prop_assert_eq!(nf(r, &nf_f), nf_f.clone());
    prop_assert_eq!(nf(r, &f.add(&g, r.order())), nf_f.add(&nf_g, r.order()));
    prop_assert_eq!(nf(r, &f.mul(&g, r.order())), nf(r, &nf_f.mul(&nf_g, r.order())));
    let c = r.field().from_i64(7);
    prop_assert_eq!(nf(r, &f.scale(&c)), nf_f.scale(&c));
    Ok(())
}

pub fn resolution_is_minimal_and_exact(which: usize, seed: u64) -> Result<(), TestCaseError> {
    let r = &resolution_rings()[which];
    let m = seeded(r, seed);
    let res = free_resolution(&m, 4);
    let c = Complex::from_resolution(&res, 4);
    prop_assert!(c.is_complex());
    for l in 1..c.hi() {
        prop_assert!(c.is_exact_at(l), "H_{} != 0", l);
    }
    for l in 1..=c.hi() {
        for col in &c.differential(l).cols {
            for (_, p) in col.entries() {
                prop_assert!(p.terms().iter().all(|(mono, _)| mono.degree() > 0), "non-minimal entry");
            }
        }
    }
    let h0 = c.homology(0);
    for d in -1..6 {
        prop_assert_eq!(h0.dim_in_degree(d), m.hilbert_function(d), "degree {}", d);
    }
    Ok(())
}

pub fn auslander_buchsbaum_plane(seed: u64) -> Result<(), TestCaseError> {
    let r = ring(qq(), &["x", "y"], &[]);
    let m = seeded(&r, seed);
    prop_assume!(!m.is_zero());
    let pd = free_resolution(&m, 4).projective_dimension().expect("regular ring") as i64;
    let dp = depth(&over_itself(&m), 4).unwrap();
    prop_assert!(dp.is_exact());
    prop_assert_eq!(dp.value.finite().map(|x| x + pd), Some(2));
    Ok(())
}

/// Checks every candidate of finite projective dimension; returns how many there were.
pub fn auslander_buchsbaum_uv(a: i64, b: i64, d: u32, s: i32, seed: u64) -> Result<usize, TestCaseError> {
    let r = uv();
    let f =
        r.add(&r.pow(&r.var(0), d).scale(&r.field().from_i64(a)), &r.pow(&r.var(1), d).scale(&r.field().from_i64(b)));
    let mut cands = vec![
        FpModule::cyclic(&r, std::slice::from_ref(&f)).unwrap(),
        FpModule::cyclic(&r, &[f]).unwrap().direct_sum(&FpModule::free(&r, vec![s])),
        seeded(&r, seed),
    ];
    cands.retain(|m| !m.is_zero());
    let mut checked = 0;
    for m in cands {
        let Some(pd) = free_resolution(&m, 5).projective_dimension() else { continue };
        let dp = depth(&over_itself(&m), 5).unwrap();
        prop_assert!(dp.is_exact());
        prop_assert_eq!(dp.value.finite().map(|x| x + pd as i64), Some(1), "{:?}", m);
        checked += 1;
    }
    Ok(checked)
}

pub fn shift_identities(seed: u64, a: i32, b: i32) -> Result<(), TestCaseError> {
    let r = uv();
    let c = Complex::from_resolution(&free_resolution(&seeded(&r, seed), 3), 3);
    let ab = c.shift(a).shift(b);
    let direct = c.shift(a + b);
    prop_assert_eq!(ab.range(), direct.range());
    for l in ab.range() {
        prop_assert_eq!(ab.differential(l), direct.differential(l));
    }
    let s = c.shift(a);
    for l in c.range() {
        for d in -1..5 {
            prop_assert_eq!(s.homology_dim(l + a, d), c.homology_dim(l, d));
        }
    }
    Ok(())
}

pub fn truncation_identities(seed: u64, lo: i32, len: i32) -> Result<(), TestCaseError> {
    let r = uv();
    let m = seeded(&r, seed);
    let k = Complex::koszul(&r, &[r.var(0), r.var(1)]).unwrap().tensor(&over_itself(&m)).unwrap();
    let c = Complex::from_resolution(&free_resolution(&m, 4), 4);
    for base in [&c, &k] {
        let hi = lo + len;
        let t = base.truncate(lo, hi);
        for l in lo + 1..hi {
            for d in -1..6 {
                prop_assert_eq!(t.homology_dim(l, d), base.homology_dim(l, d));
            }
        }
        prop_assert_eq!(t.truncate_below(lo).range(), t.range());
        let tri = base.truncation_triangle(lo + 1);
        for d in -1..6 {
            prop_assert!(tri.long_sequence_exact_in_degree(d));
        }
    }
    Ok(())
}

/// `dim Tor_i(E(k), M) = dim Ext^i(M, R)` for `i <= top`, and `M` has the Hilbert function
/// of its Matlis bidual.
pub fn matlis_pairing(r: &Ring, seed: u64, top: usize) -> Result<(), TestCaseError> {
    let m = seeded(r, seed);
    let e = matlis_dual(&FpModule::free(r, vec![0])).unwrap();
    let tor = DerivedQuery::tor(&e, &over_itself(&m), top).unwrap();
    let ext = DerivedQuery::ext(&m, &over_itself(&FpModule::free(r, vec![0])), top).unwrap();
    for i in 0..=top {
        prop_assert_eq!(tor.length(i).unwrap(), ext.length(i).unwrap(), "degree {}", i);
    }
    let bidual = matlis_dual(&matlis_dual(&m).unwrap()).unwrap();
    for d in -4..8 {
        prop_assert_eq!(bidual.hilbert_function(d), m.hilbert_function(d));
    }
    Ok(())
}

pub fn gfd_monotone(which: usize, seed: u64) -> Result<(), TestCaseError> {
    let r = [x3(), uv()][which].clone();
    let m = seeded(&r, seed);
    prop_assume!(!m.is_zero());
    let n = over_itself(&m);
    let small = gfd_bounded(&n, 3, 3).unwrap();
    let large = gfd_bounded(&n, 3, 4).unwrap();
    prop_assert!(small.value <= large.value);
    for rep in [&small, &large] {
        prop_assert!(rep.certificate.per_t.windows(2).all(|w| w[0].1 <= w[1].1), "{:?}", rep.certificate.per_t);
    }
    Ok(())
}

pub fn reflexive_tail_laws(seed: u64) -> Result<(), TestCaseError> {
    let r = uv();
    let m = seeded(&r, seed);
    prop_assume!(!m.is_zero());
    let g = gdim(&m, 5).unwrap();
    let Some(ExtInt::Finite(d)) = g.established() else { return Ok(()) };
    for n in 0..=d as i32 {
        let tail = build_reflexive_tail(&m, n, 5).unwrap();
        for f in &tail.comparisons {
            for l in f.source().range() {
                prop_assert!(f.on_homology(l).is_isomorphism(), "stage map at {}", l);
            }
        }
        let c = tail.complex();
        for dd in -2..6 {
            prop_assert_eq!(c.homology_dim(0, dd), m.hilbert_function(dd));
        }
        for l in c.range().filter(|&l| l != 0) {
            prop_assert!(c.is_exact_at(l));
        }
        let g = tail.reflexive_term();
        if g.is_zero() {
            continue;
        }
        let again = build_reflexive_tail(&g, 1, 5).unwrap();
        let a = again.complex();
        prop_assert_eq!(a.range(), 0..=0);
        for dd in -3..6 {
            prop_assert_eq!(a.homology_dim(0, dd), g.hilbert_function(dd));
        }
        let pushed = build_reflexive_tail(&g, 0, 5).unwrap();
        let p = pushed.complex();
        for dd in -3..6 {
            prop_assert_eq!(p.homology_dim(0, dd), g.hilbert_function(dd));
            prop_assert_eq!(p.homology_dim(-1, dd), 0);
        }
    }
    Ok(())
}
