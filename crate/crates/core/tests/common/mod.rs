#![allow(dead_code)]

pub mod laws;

use gorenstein::algebra::{Field, GradedRing, Polynomial, Ring};
use gorenstein::algebra::{Matrix, Vector};
use gorenstein::module::FpModule;
use rand::Rng;

pub fn ring(field: Field, vars: &[&str], rels: &[&str]) -> Ring {
    let p = GradedRing::polynomial(field, vars);
    let gens = rels.iter().map(|s| p.parse(s).unwrap()).collect();
    GradedRing::standard(field, vars, gens).unwrap()
}

pub fn qq() -> Field {
    Field::Rational
}

pub fn gf101() -> Field {
    Field::Prime(101)
}

/// `Q[u,v]/(uv)`
pub fn uv() -> Ring {
    ring(qq(), &["u", "v"], &["u*v"])
}

/// `F_101[x]/(x^3)`
pub fn x3() -> Ring {
    ring(gf101(), &["x"], &["x^3"])
}

/// `F_101[x,y]/(x^2, xy, y^2)`
pub fn xy2() -> Ring {
    ring(gf101(), &["x", "y"], &["x^2", "x*y", "y^2"])
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    r.parse(s).unwrap()
}

pub fn module(r: &Ring, rows: &[&[&str]], degrees: Vec<i32>) -> FpModule {
    let rows: Vec<Vec<Polynomial>> = rows.iter().map(|row| row.iter().map(|s| poly(r, s)).collect()).collect();
    FpModule::from_rows(r, &rows, degrees).unwrap()
}

pub fn cyclic(r: &Ring, ideal: &[&str]) -> FpModule {
    let gens: Vec<Polynomial> = ideal.iter().map(|s| poly(r, s)).collect();
    FpModule::cyclic(r, &gens).unwrap()
}

/// Cyclic module with the given minimal presentation data: generator degree and annihilator.
pub fn is_cyclic_with(m: &FpModule, degree: i32, ann: &[&str]) -> bool {
    let p = m.minimal_presentation().module;
    if p.degrees() != [degree] {
        return false;
    }
    let other = cyclic(m.ring(), ann).twist(-degree);
    same_relations(&p, &other)
}

/// Both presentations have the same generator degrees and relation submodule.
pub fn same_relations(a: &FpModule, b: &FpModule) -> bool {
    a.degrees() == b.degrees()
        && b.relations().cols.iter().all(|c| a.is_zero_element(c))
        && a.relations().cols.iter().all(|c| b.is_zero_element(c))
}

/// A module with one or two generators in degrees 0..=1 and one or two random homogeneous
/// relations with small integer coefficients.
pub fn random_module(r: &Ring, rng: &mut impl Rng) -> FpModule {
    let ngens = rng.gen_range(1..=2);
    let degrees: Vec<i32> = (0..ngens).map(|_| rng.gen_range(0..=1)).collect();
    let nrels = rng.gen_range(1..=2);
    let mut cols = Vec::new();
    let mut src = Vec::new();
    for _ in 0..nrels {
        let d = degrees.iter().max().unwrap() + rng.gen_range(1..=2);
        let entries = degrees
            .iter()
            .enumerate()
            .map(|(i, &gd)| {
                let mut f = r.parse("0").unwrap();
                for m in r.basis_in_degree(d - gd) {
                    let c: i64 = rng.gen_range(-2..=2);
                    let term = r.parse(&format!("{c}*{}", r.format_monomial(&m))).unwrap();
                    f = r.add(&f, &term);
                }
                (i, f)
            })
            .collect();
        cols.push(Vector::from_entries(entries));
        src.push(d);
    }
    FpModule::new(r, degrees.clone(), Matrix::new(degrees, src, cols)).unwrap()
}
