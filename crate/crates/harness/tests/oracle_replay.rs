//! Every recorded expectation of every shipped fixture, recomputed twice: by the engine
//! path the harness uses, and by an oracle built from different primitives.

use gorenstein::module::{free_resolution, matlis_dual};
use gorenstein::{Complex, ExtInt, FpModule, Matrix, Restricted, Ring, Vector};
use gorenstein_harness::lang::{Expectation, Value};
use gorenstein_harness::verify::evaluate;
use gorenstein_harness::{shipped, Fixture};

const BOUND: usize = 8;
const T_MAX: u32 = 4;

fn target(fx: &Fixture, args: &[String]) -> Restricted {
    match args {
        [m] => fx.env.restricted(None, m).unwrap(),
        [phi, m] => fx.env.restricted(Some(phi), m).unwrap(),
        _ => panic!("bad arguments {args:?}"),
    }
}

fn ring_as_module(r: &Ring) -> Restricted {
    Restricted::over_itself(&FpModule::free(r, vec![0]))
}

/// Homology of the Koszul complex on the images of the source variables, tensored with `N`.
fn koszul_homology(n: &Restricted) -> Complex {
    let images = n.map().images().to_vec();
    let k = Complex::koszul(n.module().ring(), &images).unwrap();
    k.tensor(&Restricted::over_itself(n.module())).unwrap()
}

/// `depth N = e - sup{i : H_i(x; N) != 0}` for `e` generators `x` of the maximal ideal.
fn depth_oracle(n: &Restricted) -> ExtInt {
    let e = n.map().images().len() as i64;
    let h = koszul_homology(n);
    match (0..=e).rev().find(|&i| !h.is_exact_at(i as i32)) {
        Some(top) => ExtInt::Finite(e - top),
        None => ExtInt::PosInf,
    }
}

/// Over a regular source ring the Koszul complex resolves `k`, so `fd N = sup Tor(k, N)`.
fn fd_oracle(n: &Restricted) -> ExtInt {
    assert!(n.base().defining_generators().is_empty(), "fd oracle needs a polynomial source");
    let e = n.map().images().len() as i32;
    let h = koszul_homology(n);
    (0..=e).rev().find(|&i| !h.is_exact_at(i)).map_or(ExtInt::NegInf, |i| ExtInt::Finite(i as i64))
}

fn is_hypersurface(r: &Ring) -> bool {
    r.defining_generators().len() == 1
}

fn is_residue_field(m: &FpModule) -> bool {
    m.hilbert_function(0) == 1 && (1..6).all(|d| m.hilbert_function(d) == 0) && m.degrees().iter().all(|&d| d >= 0)
}

/// Poincare series of `k`: `(1+t)^e / (1-t^2)` for hypersurfaces, `1/(1-et)` when `m^2 = 0`.
fn betti_of_k_oracle(r: &Ring, len: usize) -> Vec<i64> {
    let e = r.nvars() as i64;
    if is_hypersurface(r) {
        let mut num = vec![0i64; len];
        for (i, slot) in num.iter_mut().enumerate() {
            *slot = binomial(e, i as i64);
        }
        (0..len).map(|i| (0..=i).rev().step_by(2).map(|j| num[j]).sum()).collect()
    } else {
        let m2 = r.hilbert_function(2);
        assert_eq!(m2, 0, "no formula for this ring");
        (0..len as u32).map(|i| e.pow(i)).collect()
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim Tor_i(k, N)` from a resolution of `k` tensored with `N`: balance of Tor.
fn betti_by_balance(m: &FpModule, len: usize) -> Vec<i64> {
    let r = m.ring();
    let k = FpModule::residue_field(r);
    let res = free_resolution(&k, len);
    let c = Complex::from_resolution(&res, len).tensor(&Restricted::over_itself(m)).unwrap();
    assert!(m.is_finite_length());
    let top = (0..64).rev().find(|&d| m.hilbert_function(d) > 0).expect("nonzero module");
    (0..len as i32)
        .map(|i| {
            let degs = c.term(i).degrees().to_vec();
            let (lo, hi) = (*degs.iter().min().unwrap(), *degs.iter().max().unwrap() + top);
            (lo..=hi).map(|d| c.homology_dim(i, d) as i64).sum()
        })
        .collect()
}

/// `N / m N != 0`.
fn supp_oracle(n: &Restricted) -> bool {
    let m = n.module();
    let ring = m.ring();
    let mut rel = m.relations().clone();
    for f in n.map().images() {
        if f.is_zero() {
            continue;
        }
        let deg = f.degree().unwrap() as i32;
        let cols: Vec<Vector> = (0..m.ngens()).map(|j| Vector::unit(j, f.clone())).collect();
        let src: Vec<i32> = m.degrees().iter().map(|d| d + deg).collect();
        rel = rel.concat(&Matrix::new(m.degrees().to_vec(), src, cols));
    }
    !FpModule::new(ring, m.degrees().to_vec(), rel).unwrap().is_zero()
}

/// `Ext^i(k, R) != 0` for `1 <= i <= B`, read through Matlis duality as `Tor_i(E(k), k)`
/// on an artinian ring.
fn ext_k_r_never_vanishes(r: &Ring) -> bool {
    let e = matlis_dual(&FpModule::free(r, vec![0])).unwrap();
    let k = FpModule::residue_field(r);
    let res = free_resolution(&e, BOUND + 1);
    let c = Complex::from_resolution(&res, BOUND + 1).tensor(&Restricted::over_itself(&k)).unwrap();
    (1..=BOUND as i32).all(|i| !c.is_exact_at(i))
}

fn as_value(x: ExtInt) -> Value {
    match x {
        ExtInt::NegInf => Value::NegInf,
        ExtInt::Finite(n) => Value::Int(n),
        ExtInt::PosInf => Value::PosInf,
    }
}

fn depth_difference(n: &Restricted) -> ExtInt {
    let dr = depth_oracle(&ring_as_module(n.base()));
    let dn = depth_oracle(n);
    if n.is_zero() {
        return ExtInt::NegInf;
    }
    dr.checked_sub(dn).expect("finite depths")
}

fn oracle(fx: &Fixture, e: &Expectation) -> Value {
    let args = &e.args[..];
    match e.key.as_str() {
        "depth" if args.len() == 1 && fx.env.rings.contains_key(&args[0]) => {
            as_value(depth_oracle(&ring_as_module(&fx.env.rings[&args[0]])))
        }
        "depth" => as_value(depth_oracle(&target(fx, args))),
        "depth_diff" => as_value(depth_difference(&target(fx, args))),
        "gfd" => as_value(depth_difference(&target(fx, args))),
        "gdim" => {
            let n = target(fx, args);
            let r = n.base();
            if n.is_zero() {
                Value::NegInf
            } else if is_hypersurface(r) {
                as_value(depth_difference(&n))
            } else {
                assert!(r.is_artinian());
                assert!(ext_k_r_never_vanishes(r));
                Value::Unknown
            }
        }
        "gfd_against" => {
            let test = &fx.env.prime_tests[&args[0]].module;
            let res = free_resolution(test, 2);
            assert_eq!(res.ranks(1), [1, 0], "the test module is free of rank one");
            let n = target(fx, &args[1..]);
            as_value(if n.is_zero() { ExtInt::NegInf } else { ExtInt::Finite(0) })
        }
        "fd" => as_value(fd_oracle(&target(fx, args))),
        "betti" => {
            let Value::List(expected) = &e.value else { panic!("betti expects a list") };
            let n = target(fx, args);
            let by_balance = betti_by_balance(n.module(), expected.len());
            if is_residue_field(n.module()) {
                assert_eq!(by_balance, betti_of_k_oracle(n.base(), expected.len()), "{}", fx.name);
            }
            Value::List(by_balance)
        }
        "supp" => Value::Bool(supp_oracle(&target(fx, args))),
        other => panic!("no oracle for {other}"),
    }
}

#[test]
fn shipped_expectations_replay_under_their_oracles() {
    let fixtures = shipped(None).unwrap();
    let mut count = 0;
    for fx in &fixtures {
        for e in &fx.env.expectations {
            let from_oracle = oracle(fx, e);
            assert_eq!(from_oracle, e.value, "{}: oracle for {}({:?}) ({})", fx.name, e.key, e.args, e.oracle);
            let (from_engine, _) = evaluate(fx, e, BOUND, T_MAX).unwrap();
            assert_eq!(from_engine, e.value, "{}: engine for {}({:?})", fx.name, e.key, e.args);
            count += 1;
        }
    }
    assert!(count >= 35, "only {count} expectations");
}

#[test]
fn every_fixture_records_expectations_with_an_oracle() {
    for fx in shipped(None).unwrap() {
        assert!(!fx.env.expectations.is_empty(), "{}", fx.name);
        for e in &fx.env.expectations {
            assert!(!e.oracle.trim().is_empty(), "{}: {} has no oracle", fx.name, e.key);
        }
    }
}
