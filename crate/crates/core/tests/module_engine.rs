mod common;

use common::*;
use gorenstein::algebra::{Matrix, Vector};
use gorenstein::module::{
    betti_table, free_resolution, hull_inclusion, injective_hull_truncation, matlis_dual, restrict_scalars, syzygy,
    FiniteModule, FpModule,
};
use gorenstein::RingMap;

fn row_matrix(r: &gorenstein::Ring, entries: &[&str], source: Vec<i32>) -> Matrix {
    let cols = entries.iter().map(|s| Vector::unit(0, poly(r, s))).collect();
    Matrix::new(vec![0], source, cols)
}

#[test]
fn syzygy_of_u_v() {
    let r = uv();
    let (m, gens) = syzygy(&r, &row_matrix(&r, &["u", "v"], vec![1, 1])).unwrap();
    assert_eq!(m.ngens(), 2);
    let expected = [
        Vector::from_dense(vec![poly(&r, "v"), poly(&r, "0")]),
        Vector::from_dense(vec![poly(&r, "0"), poly(&r, "u")]),
    ];
    for e in &expected {
        assert!(gens.cols.contains(e), "missing {e:?}");
    }
}

#[test]
fn syzygy_of_identity_and_of_x() {
    let r = x3();
    let one = r.field().one();
    let id = Matrix::identity(vec![0, 1], &one, 1);
    assert_eq!(syzygy(&r, &id).unwrap().0.ngens(), 0);
    let (m, gens) = syzygy(&r, &row_matrix(&r, &["x"], vec![1])).unwrap();
    assert_eq!(m.ngens(), 1);
    assert_eq!(gens.cols[0], Vector::unit(0, poly(&r, "x^2")));
    assert_eq!(gens.source, vec![3]);
}

#[test]
fn resolution_of_k_over_uv() {
    let r = uv();
    let k = FpModule::residue_field(&r);
    let res = free_resolution(&k, 3);
    assert_eq!(res.ranks(3), vec![1, 2, 2, 2]);
    assert_eq!(betti_table(&k, 6).totals(), vec![1, 2, 2, 2, 2, 2, 2]);
    for i in 1..=3 {
        for c in &res.differential(i).cols {
            for (_, p) in c.entries() {
                assert!(p.degree().unwrap() > 0, "minimal resolution has entries in m");
            }
        }
    }
}

#[test]
fn resolution_of_free_module() {
    let r = uv();
    let f = FpModule::free(&r, vec![2]);
    let res = free_resolution(&f, 4);
    assert_eq!(res.ranks(4), vec![1, 0, 0, 0, 0]);
    assert_eq!(res.degrees(0), &[2]);
    assert_eq!(res.projective_dimension(), Some(0));
}

#[test]
fn periodic_resolution_over_x3() {
    let r = x3();
    let k = FpModule::residue_field(&r);
    let res = free_resolution(&k, 4);
    assert_eq!(res.ranks(4), vec![1, 1, 1, 1, 1]);
    for i in 1..=4 {
        let e = res.differential(i).entry(0, 0);
        let expected = if i % 2 == 1 { "x" } else { "x^2" };
        assert_eq!(e.monic(), poly(&r, expected), "d_{i}");
    }
}

#[test]
fn betti_numbers_double_over_xy2() {
    let r = xy2();
    let k = FpModule::residue_field(&r);
    let b = betti_table(&k, 6);
    assert_eq!(b.totals(), (0..=6).map(|i| 1usize << i).collect::<Vec<_>>());
    for i in 0..=6 {
        assert_eq!(b.get(i, i as i32), 1 << i, "linear resolution");
    }
    let free = FpModule::free(&r, vec![0]);
    assert_eq!(betti_table(&free, 3).totals(), vec![1, 0, 0, 0]);
}

#[test]
fn dual_of_cyclic_and_residue_field() {
    let r = uv();
    let d = cyclic(&r, &["u"]).dual();
    // Hom(R/(u), R) = (0 : u) = (v), generated in degree 1
    assert!(is_cyclic_with(&d.module, 1, &["u"]));
    assert_eq!(FpModule::residue_field(&r).dual().module.ngens(), 0);
    let free = FpModule::free(&r, vec![0, 3]);
    let fd = free.dual();
    let mut degs = fd.module.degrees().to_vec();
    degs.sort();
    assert_eq!(degs, vec![-3, 0]);
    assert!(free.biduality().is_isomorphism());
    assert!(cyclic(&r, &["u"]).biduality().is_isomorphism());
    assert!(!FpModule::residue_field(&r).biduality().is_isomorphism());
}

#[test]
fn matlis_duals() {
    let r = x3();
    let rr = FpModule::free(&r, vec![0]);
    let dual = matlis_dual(&rr).unwrap();
    assert!(is_cyclic_with(&dual, -2, &["x^3"]));
    let k = FpModule::residue_field(&r);
    assert!(is_cyclic_with(&matlis_dual(&k).unwrap(), 0, &["x"]));

    let s = xy2();
    let sd = matlis_dual(&FpModule::free(&s, vec![0])).unwrap();
    assert_eq!(sd.minimal_presentation().module.ngens(), 2);
    assert_eq!(sd.length(), Some(3));
    assert_eq!(FiniteModule::from_module(&FpModule::free(&s, vec![0])).unwrap().socle_dim(), 2);
    assert!(matlis_dual(&FpModule::residue_field(&uv())).is_err());
}

#[test]
fn injective_hull_truncations() {
    let r = ring(gf101(), &["x"], &[]);
    let e1 = injective_hull_truncation(&r, 1).unwrap();
    assert!(is_cyclic_with(&e1, 0, &["x"]));
    let e3 = injective_hull_truncation(&r, 3).unwrap();
    assert!(is_cyclic_with(&e3, -2, &["x^3"]));
    let inc = hull_inclusion(&r, 2).unwrap();
    assert!(inc.is_injective());
    assert!(!inc.is_surjective());

    let a = xy2();
    let full = matlis_dual(&FpModule::free(&a, vec![0])).unwrap();
    for t in 2..=4 {
        let et = injective_hull_truncation(&a, t).unwrap();
        assert!(same_relations(&et, &full), "E_{t} = E(k)");
        assert!(hull_inclusion(&a, t).unwrap().is_isomorphism());
    }
    assert!(!hull_inclusion(&a, 1).unwrap().is_surjective());
}

#[test]
fn restricted_modules() {
    let rx = ring(qq(), &["x"], &[]);
    let s = ring(qq(), &["x", "y"], &[]);
    let phi = RingMap::new(rx.clone(), s.clone(), vec![poly(&s, "x")]).unwrap();
    let n = cyclic(&s, &["x"]);
    let h = restrict_scalars(&phi, &n).unwrap();
    let e = Vector::unit(0, s.one());
    assert!(h.act(&poly(&rx, "x"), &e).unwrap().is_zero());
    let free = restrict_scalars(&phi, &FpModule::free(&s, vec![0])).unwrap();
    assert_eq!(free.act(&poly(&rx, "x"), &e).unwrap(), Vector::unit(0, poly(&s, "x")));
    assert!(restrict_scalars(&phi, &FpModule::residue_field(&rx)).is_err());
}
