//! The acceptance run: one line per criterion, with the runtime limit it is held to.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use anyhow::{ensure, Context, Result};
use common::laws::*;
use common::*;
use gorenstein::approximation::{approximation_triangle, rotate_triangle};
use gorenstein::complex::is_exact_in_degree;
use gorenstein::invariants::{depth, gdim, gfd_bounded, ring_depth, DerivedQuery, Status};
use gorenstein::module::{free_resolution, matlis_dual, FpModule, Restricted};
use gorenstein::ExtInt;
use gorenstein_harness::verify::{verify_all, Mode};
use gorenstein_harness::{shipped, Bounds, Fixture};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BOUND: usize = 8;
const T_MAX: u32 = 4;

fn fixture(name: &str) -> Result<Fixture> {
    Ok(Fixture::load(name, None)?)
}

fn ring_module(n: &Restricted) -> Restricted {
    Restricted::over_itself(&FpModule::free(n.base(), vec![0]))
}

fn established(rep: &gorenstein::InvariantReport) -> Result<ExtInt> {
    rep.established().with_context(|| format!("{} not established: {}", rep.name, rep))
}

fn hypersurface() -> Result<()> {
    for name in ["f1_qq", "f1_gf101"] {
        let fx = fixture(name)?;
        let k = fx.env.restricted(None, "k")?;
        let r = ring_module(&k);
        ensure!(established(&ring_depth(&r, BOUND)?)? == ExtInt::Finite(1), "{name}: depth R");
        ensure!(established(&depth(&k, BOUND)?)? == ExtInt::Finite(0), "{name}: depth k");
        let g = gdim(k.module(), BOUND)?;
        ensure!(g.value == ExtInt::Finite(1) && !g.is_unknown(), "{name}: gdim k = {g}");
        let ranks = free_resolution(k.module(), BOUND).ranks(BOUND);
        let expected: Vec<usize> = (0..=BOUND).map(|i| if i == 0 { 1 } else { 2 }).collect();
        ensure!(ranks == expected, "{name}: betti {ranks:?}");
    }
    Ok(())
}

fn non_finite_map() -> Result<()> {
    let fx = fixture("f4")?;
    let n = fx.main_module()?;
    let g = gfd_bounded(&n, T_MAX, 6)?;
    ensure!(g.value == ExtInt::Finite(1), "gfd = {g}");
    ensure!(g.certificate.stabilized == Some(true), "not stabilized: {:?}", g.certificate.per_t);
    let dr = established(&ring_depth(&n, BOUND)?)?;
    let dn = established(&depth(&n, BOUND)?)?;
    ensure!(dr == ExtInt::Finite(1) && dn == ExtInt::Finite(0), "depths {dr}, {dn}");
    ensure!(dr.checked_sub(dn) == Some(g.value), "depth difference");
    Ok(())
}

fn artinian_gorenstein() -> Result<()> {
    let fx = fixture("f2")?;
    let k = fx.env.restricted(None, "k")?;
    let r = k.base().clone();
    let g = gfd_bounded(&k, T_MAX, BOUND)?;
    ensure!(g.value == ExtInt::Finite(0), "gfd = {g}");
    let dr = established(&ring_depth(&k, BOUND)?)?;
    let dk = established(&depth(&k, BOUND)?)?;
    ensure!(dr.checked_sub(dk) == Some(ExtInt::Finite(0)), "depth difference {dr} - {dk}");
    ensure!(established(&gdim(k.module(), BOUND)?)? == ExtInt::Finite(0), "gdim");
    let e = matlis_dual(&FpModule::free(&r, vec![0]))?;
    let free = free_resolution(&e, 2);
    ensure!(free.ranks(1) == [1, 0], "E(k) is not cyclic free");
    let tor = DerivedQuery::tor(&e, &k, 10)?;
    for i in 1..=10 {
        ensure!(tor.is_zero(i)?, "Tor_{i}(E(k), k) != 0");
    }
    Ok(())
}

fn semidecidable() -> Result<()> {
    let fx = fixture("f3")?;
    let k = fx.env.restricted(None, "k")?;
    let g = gdim(k.module(), BOUND)?;
    ensure!(g.status == Status::Unknown { bound: BOUND }, "gdim = {g}");
    let ext = DerivedQuery::ext(k.module(), &ring_module(&k), BOUND)?;
    for i in 1..=BOUND {
        ensure!(!ext.is_zero(i)?, "Ext^{i}(k, R) = 0");
    }
    let ranks = free_resolution(k.module(), BOUND).ranks(BOUND);
    let expected: Vec<usize> = (0..=BOUND as u32).map(|i| 2usize.pow(i)).collect();
    ensure!(ranks == expected, "betti {ranks:?}");
    let out = Command::new(env!("CARGO_BIN_EXE_gfd"))
        .args(["gdim", "--fixture", "f3", "--module", "k", "--bound", "8", "--format", "json"])
        .output()?;
    ensure!(out.status.code() == Some(3), "exit status {:?}", out.status.code());
    Ok(())
}

fn four_term_exact_everywhere(a: &gorenstein::approximation::ApproximationResult) -> bool {
    let [f, g, h] = &a.four_term;
    (-6..=12).all(|d| {
        f.source().dim_in_degree(d) == f.rank_in_degree(d)
            && is_exact_in_degree(f, g, d)
            && is_exact_in_degree(g, h, d)
            && h.rank_in_degree(d) == h.target().dim_in_degree(d)
    })
}

fn approximation() -> Result<()> {
    let fx = fixture("f1_qq")?;
    let k = fx.env.modules["k"].clone();
    for n in [0, 1] {
        let a = approximation_triangle(&k, n, BOUND)?;
        ensure!(a.passed(), "n = {n}: {:?}", a.checks);
        ensure!(four_term_exact_everywhere(&a), "n = {n}: four-term sequence");
        let rot = rotate_triangle(&a, BOUND)?;
        ensure!(rot.passed(), "n = {n}: rotation {:?}", rot.checks);
    }
    let r = uv();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    let mut drawn = 0;
    while checked < 20 {
        drawn += 1;
        ensure!(drawn < 400, "only {checked} modules with certified finite gdim");
        let m = random_module(&r, &mut rng);
        if m.is_zero() {
            continue;
        }
        let Some(ExtInt::Finite(d)) = gdim(&m, 6)?.established() else { continue };
        for n in 0..=d as i32 {
            let a = approximation_triangle(&m, n, 6)?;
            ensure!(a.passed() && four_term_exact_everywhere(&a), "module {checked}, n = {n}");
        }
        checked += 1;
    }
    Ok(())
}

fn verified(mode: Mode, expected_fixtures: Option<usize>) -> Result<()> {
    let fixtures: Vec<Fixture> = shipped(None)?.into_iter().filter(|fx| mode.applies(fx)).collect();
    if let Some(count) = expected_fixtures {
        ensure!(fixtures.len() == count, "{} fixtures, expected {count}", fixtures.len());
    }
    let report = verify_all(mode, &fixtures, Bounds { bound: BOUND, t_max: T_MAX })?;
    ensure!(report.summary.fail == 0 && report.summary.unknown == 0, "{:?}", report.summary);
    ensure!(report.summary.pass > 0, "nothing checked");
    Ok(())
}

fn support() -> Result<()> {
    verified(Mode::Supp, None)?;
    for fx in shipped(None)? {
        if !fx.has_main() {
            continue;
        }
        let n = fx.main_module()?;
        if n.is_zero() {
            continue;
        }
        ensure!(matches!(depth(&n, BOUND)?.established(), Some(ExtInt::Finite(_))), "{}: depth", fx.name);
        let k = FpModule::residue_field(n.base());
        let tor = DerivedQuery::tor(&k, &n, 2)?;
        ensure!(!tor.support()?.is_empty(), "{}: Tor(k, N) = 0", fx.name);
    }
    Ok(())
}

fn matlis() -> Result<()> {
    for r in [x3(), xy2()] {
        for seed in 0..20 {
            matlis_pairing(&r, seed, 6).map_err(|e| anyhow::anyhow!("seed {seed}: {e}"))?;
        }
    }
    Ok(())
}

fn localization() -> Result<()> {
    verified(Mode::Loc, Some(3))
}

fn run<S: Strategy>(cases: u32, strategy: S, law: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<()>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, law).map_err(|e| anyhow::anyhow!("{e}"))
}

fn engine_properties() -> Result<()> {
    nf_kernel_is_the_ideal().map_err(|e| anyhow::anyhow!("{e}"))?;
    let coeffs = || prop::collection::vec(-3i64..=3, 1..12);
    run(48, (0usize..5, coeffs(), coeffs()), |(w, a, b)| nf_laws(w, &a, &b))?;
    run(24, (0usize..4, any::<u64>()), |(w, s)| resolution_is_minimal_and_exact(w, s))?;
    run(24, any::<u64>(), auslander_buchsbaum_plane)?;
    run(24, (1i64..50, 1i64..50, 1u32..4, 0i32..3, any::<u64>()), |(a, b, d, s, seed)| {
        auslander_buchsbaum_uv(a, b, d, s, seed).map(|_| ())
    })?;
    run(24, (any::<u64>(), -3i32..4, -3i32..4), |(s, a, b)| shift_identities(s, a, b))?;
    run(24, (any::<u64>(), 0i32..3, 0i32..3), |(s, lo, len)| truncation_identities(s, lo, len))?;
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Result<()>,
}

fn criteria() -> Vec<Criterion> {
    let secs = |s: u64| Some(Duration::from_secs(s));
    vec![
        Criterion { id: 1, name: "hypersurface uv over QQ and GF(101)", limit: secs(2), check: hypersurface },
        Criterion { id: 2, name: "gfd of a module finite over a map only", limit: secs(2), check: non_finite_map },
        Criterion { id: 3, name: "artinian Gorenstein x^3", limit: secs(1), check: artinian_gorenstein },
        Criterion { id: 4, name: "gdim unknown over (x^2, xy, y^2)", limit: secs(5), check: semidecidable },
        Criterion { id: 5, name: "approximation triangles", limit: secs(30), check: approximation },
        Criterion { id: 6, name: "support over every fixture", limit: None, check: support },
        Criterion { id: 7, name: "Matlis pairing and biduality", limit: secs(20), check: matlis },
        Criterion { id: 8, name: "localization fixtures", limit: None, check: localization },
        Criterion { id: 9, name: "engine property suites", limit: secs(120), check: engine_properties },
    ]
}

fn main() {
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let slow = c.limit.is_some_and(|l| elapsed > l);
        let limit = c.limit.map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        let verdict = match (&result, slow) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => "FAIL (over time limit)".to_string(),
            (Err(e), _) => format!("FAIL ({e:#})"),
        };
        println!("criterion {}: {verdict} [{:.2}s, limit {limit}] {}", c.id, elapsed.as_secs_f64(), c.name);
        if result.is_err() || slow {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
