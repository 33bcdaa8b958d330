mod common;

use common::*;
use gorenstein::invariants::{
    depth, ext, fd_bounded, gdim, gfd_against, gfd_bounded, is_totally_reflexive, rfd_bounded, ring_depth,
    supp_member_max, tor_over_phi, DerivedQuery, Status, Witness,
};
use gorenstein::module::{matlis_dual, FpModule, Restricted};
use gorenstein::{ExtInt, Ring, RingMap};

fn over_itself(m: &FpModule) -> Restricted {
    Restricted::over_itself(m)
}

fn free(r: &Ring) -> FpModule {
    FpModule::free(r, vec![0])
}

/// `phi: F[x] -> F[x,y]` with `N = S/(x)`.
fn line_into_plane(field: gorenstein::Field) -> (Ring, Ring, RingMap, Restricted) {
    let r = ring(field, &["x"], &[]);
    let s = ring(field, &["x", "y"], &[]);
    let phi = RingMap::new(r.clone(), s.clone(), vec![poly(&s, "x")]).unwrap();
    let n = Restricted::new(phi.clone(), cyclic(&s, &["x"])).unwrap();
    (r, s, phi, n)
}

#[test]
fn depth_examples() {
    let r = uv();
    assert_eq!(depth(&over_itself(&free(&r)), 8).unwrap().value, ExtInt::Finite(1));
    let k = FpModule::residue_field(&r);
    let d = depth(&over_itself(&k), 8).unwrap();
    assert_eq!(d.value, ExtInt::Finite(0));
    assert!(d.is_exact());
    let (_, _, _, n) = line_into_plane(qq());
    assert_eq!(depth(&n, 4).unwrap().value, ExtInt::Finite(0));
    let zero = FpModule::zero(&r);
    assert_eq!(depth(&over_itself(&zero), 4).unwrap().value, ExtInt::PosInf);
}

#[test]
fn ext_examples() {
    let r = uv();
    let k = FpModule::residue_field(&r);
    assert!(!ext(&k, &over_itself(&free(&r)), 1).unwrap().is_zero());
    let f = FpModule::free(&r, vec![0, 3]);
    let q = DerivedQuery::ext(&f, &over_itself(&k), 4).unwrap();
    assert!((1..=4).all(|i| q.is_zero(i).unwrap()));
    let r = x3();
    let k = FpModule::residue_field(&r);
    let q = DerivedQuery::ext(&k, &over_itself(&free(&r)), 8).unwrap();
    assert!((1..=8).all(|i| q.is_zero(i).unwrap()));
    assert!(!q.is_zero(0).unwrap());
}

#[test]
fn tor_examples() {
    let (r, _, phi, n) = line_into_plane(qq());
    for t in 1..=4 {
        let m = cyclic(&r, &[&format!("x^{t}")]);
        let tor1 = tor_over_phi(&m, &n, 1).unwrap();
        assert!(is_cyclic_with(&tor1, t, &["x"]), "t = {t}");
    }
    let s_free = Restricted::new(phi, FpModule::free(n.module().ring(), vec![0])).unwrap();
    let k = FpModule::residue_field(&r);
    let q = DerivedQuery::tor(&k, &s_free, 3).unwrap();
    assert!((1..=3).all(|i| q.is_zero(i).unwrap()));
    let r = x3();
    let k = FpModule::residue_field(&r);
    let q = DerivedQuery::tor(&k, &over_itself(&k), 2).unwrap();
    assert_eq!(q.length(2).unwrap(), Some(1));
}

#[test]
fn fd_examples() {
    let (r, s, phi, n) = line_into_plane(qq());
    let s_free = Restricted::new(phi, FpModule::free(&s, vec![0])).unwrap();
    let f = fd_bounded(&s_free, 4).unwrap();
    assert_eq!((f.value, f.is_exact()), (ExtInt::Finite(0), true));
    let f = fd_bounded(&n, 4).unwrap();
    assert_eq!((f.value, f.is_exact()), (ExtInt::Finite(1), true));
    let p = ring(qq(), &["x", "y"], &[]);
    let f = fd_bounded(&over_itself(&FpModule::residue_field(&p)), 4).unwrap();
    assert_eq!((f.value, f.is_exact()), (ExtInt::Finite(2), true));
    let _ = r;
}

#[test]
fn total_reflexivity_examples() {
    let r = uv();
    let g = cyclic(&r, &["u"]);
    let rep = is_totally_reflexive(&g, 6).unwrap();
    assert_eq!(rep.status, Status::CertifiedUpTo { bound: 6, t: None });
    assert!(is_totally_reflexive(&FpModule::free(&r, vec![0, 1]), 3).unwrap().established().is_some());
    let k = FpModule::residue_field(&r);
    let rep = is_totally_reflexive(&k, 6).unwrap();
    assert!(rep.is_refuted());
    // k is not even reflexive: k* = 0
    assert_eq!(rep.status, Status::Refuted { witness: Witness::Biduality });
}

#[test]
fn gdim_examples() {
    let r = uv();
    let k = FpModule::residue_field(&r);
    let g = gdim(&k, 8).unwrap();
    assert_eq!(g.value, ExtInt::Finite(1));
    assert!(g.established().is_some());
    assert_eq!(gdim(&FpModule::free(&r, vec![2]), 4).unwrap().value, ExtInt::Finite(0));
    assert_eq!(gdim(&FpModule::zero(&r), 4).unwrap().value, ExtInt::NegInf);
}

#[test]
fn gdim_unknown_over_the_square_of_the_maximal_ideal() {
    let r = xy2();
    let k = FpModule::residue_field(&r);
    let g = gdim(&k, 8).unwrap();
    assert!(g.is_unknown());
    assert_eq!(g.status, Status::Unknown { bound: 8 });
    assert_eq!(g.certificate.nonvanishing, (0..=8).collect::<Vec<_>>());
    assert_eq!(g.certificate.betti[..9], [1, 2, 4, 8, 16, 32, 64, 128, 256]);
}

#[test]
fn gfd_examples() {
    let (_, s, phi, n) = line_into_plane(gf101());
    let g = gfd_bounded(&n, 4, 6).unwrap();
    assert_eq!(g.value, ExtInt::Finite(1));
    assert!(g.certificate.per_t.iter().all(|&(_, v)| v == ExtInt::Finite(1)));
    assert_eq!(g.certificate.stabilized, Some(true));
    assert_eq!(g.certificate.depth_difference, Some(ExtInt::Finite(1)));
    let s_free = Restricted::new(phi, FpModule::free(&s, vec![0])).unwrap();
    assert_eq!(gfd_bounded(&s_free, 3, 4).unwrap().value, ExtInt::Finite(0));
    let r = x3();
    let k = FpModule::residue_field(&r);
    let e = matlis_dual(&free(&r)).unwrap();
    assert_eq!(gfd_against(&over_itself(&k), &[e], 6).unwrap().value, ExtInt::Finite(0));
    assert!(gfd_against(&over_itself(&k), &[], 6).is_err());
}

#[test]
fn gfd_over_an_artinian_ring_stabilizes_at_the_injective_hull() {
    let r = x3();
    let k = FpModule::residue_field(&r);
    let g = gfd_bounded(&over_itself(&k), 4, 10).unwrap();
    assert_eq!(g.value, ExtInt::Finite(0));
    let per_t: Vec<ExtInt> = g.certificate.per_t.iter().map(|p| p.1).collect();
    assert_eq!(per_t, [ExtInt::NegInf, ExtInt::NegInf, ExtInt::Finite(0), ExtInt::Finite(0)]);
    assert_eq!(g.certificate.stabilized, Some(true));
    assert_eq!(g.certificate.depth_difference, Some(ExtInt::Finite(0)));
}

#[test]
fn gfd_of_the_residue_field_over_uv_sees_only_degree_one() {
    let r = uv();
    let k = FpModule::residue_field(&r);
    let g = gfd_bounded(&over_itself(&k), 3, 6).unwrap();
    assert_eq!(g.value, ExtInt::Finite(1));
    assert_eq!(g.certificate.stabilized, Some(true));
    assert!(g.certificate.per_t.windows(2).all(|w| w[0].1 <= w[1].1));
}

#[test]
fn rfd_examples() {
    let r = uv();
    let k = over_itself(&FpModule::residue_field(&r));
    assert_eq!(rfd_bounded(&k, &[free(&r)], 4).unwrap().value, ExtInt::Finite(0));
    let t = cyclic(&r, &["u+v"]);
    assert_eq!(rfd_bounded(&k, std::slice::from_ref(&t), 4).unwrap().value, ExtInt::Finite(1));
    assert_eq!(rfd_bounded(&over_itself(&free(&r)), &[t], 4).unwrap().value, ExtInt::Finite(0));
    assert!(rfd_bounded(&k, &[FpModule::residue_field(&r)], 4).is_err());
}

#[test]
fn supp_examples() {
    let r = uv();
    assert!(supp_member_max(&over_itself(&FpModule::residue_field(&r))).unwrap().member);
    let (_, _, _, n) = line_into_plane(qq());
    assert!(supp_member_max(&n).unwrap().member);
    assert!(!supp_member_max(&over_itself(&FpModule::zero(&r))).unwrap().member);
}

#[test]
fn ring_depths() {
    let r = x3();
    assert_eq!(ring_depth(&over_itself(&free(&r)), 4).unwrap().value, ExtInt::Finite(0));
    let p = ring(qq(), &["x", "y"], &[]);
    assert_eq!(ring_depth(&over_itself(&free(&p)), 4).unwrap().value, ExtInt::Finite(2));
}
