//! Verification of fixtures: the main equality, localization, support and recorded expectations.

use gorenstein::invariants::{depth, fd_bounded, gdim, gfd_against, gfd_bounded, ring_depth, supp_member_max};
use gorenstein::module::{betti_table, FpModule, Restricted};
use gorenstein::{ExtInt, InvariantReport};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{HarnessError, Result};
use crate::fixture::{Fixture, MAIN_MODULE};
use crate::lang::{Expectation, Value};
use crate::report::{Bounds, CheckOutcome, FixtureReport, Outcome, Report};

/// The Gfd value when the bounded computation decides it: the truncations stabilized and
/// `Tor` vanishes at the bound.
pub fn decided_gfd(rep: &InvariantReport, bound: usize) -> Option<ExtInt> {
    let stable = rep.certificate.stabilized.unwrap_or(true);
    match rep.value {
        ExtInt::NegInf => Some(ExtInt::NegInf),
        ExtInt::Finite(v) if stable && (v as usize) < bound => Some(rep.value),
        _ => None,
    }
}

fn as_value(v: ExtInt) -> Value {
    match v {
        ExtInt::NegInf => Value::NegInf,
        ExtInt::Finite(n) => Value::Int(n),
        ExtInt::PosInf => Value::PosInf,
    }
}

/// Value of an invariant report, `unknown` when its status does not support it.
fn reported(rep: &InvariantReport) -> Value {
    rep.established().map_or(Value::Unknown, as_value)
}

fn compare(name: &str, expected: &Value, actual: &Value) -> CheckOutcome {
    let outcome = if expected == actual {
        Outcome::Pass
    } else if *actual == Value::Unknown {
        Outcome::Unknown
    } else {
        Outcome::Fail
    };
    CheckOutcome::new(name, outcome).expected(expected).actual(actual)
}

/// `Gfd N = depth R - depth N` (and `= Gdim N` when `N` is over the source itself),
/// together with the support conclusions.
pub fn verify_main(fx: &Fixture, bound: usize, t_max: u32) -> Result<FixtureReport> {
    let n = fx.main_module()?;
    let mut checks = Vec::new();
    if n.is_zero() {
        let g = gfd_bounded(&n, t_max, bound)?;
        let d = depth(&n, bound)?;
        let ok = g.value == ExtInt::NegInf && d.value == ExtInt::PosInf;
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        checks.push(
            CheckOutcome::new("zero module conventions", outcome)
                .expected("Gfd = -inf, depth = +inf")
                .actual(format!("Gfd = {}, depth = {}", g.value, d.value))
                .report(g)
                .report(d)
                .note("empty homology: conventions reported instead of the equality"),
        );
        return Ok(FixtureReport { fixture: fx.name.clone(), checks });
    }
    let g = gfd_bounded(&n, t_max, bound)?;
    let dr = ring_depth(&n, bound)?;
    let dn = depth(&n, bound)?;
    let diff = if dr.is_exact() && dn.is_exact() { dr.value.checked_sub(dn.value) } else { None };
    let gfd = decided_gfd(&g, bound);
    let outcome = match (gfd, diff) {
        (Some(a), Some(b)) if a == b => Outcome::Pass,
        (Some(_), Some(_)) => Outcome::Fail,
        _ => Outcome::Unknown,
    };
    let show = |v: Option<ExtInt>| v.map_or("unknown".to_string(), |v| v.to_string());
    checks.push(
        CheckOutcome::new("Gfd N = depth R - depth N", outcome)
            .actual(format!("Gfd = {}, depth R - depth N = {}", show(gfd), show(diff)))
            .report(g.clone())
            .report(dr)
            .report(dn.clone()),
    );
    if n.map().is_identity() {
        let gd = gdim(n.module(), bound)?;
        let outcome = match (gfd, gd.established()) {
            (Some(a), Some(b)) if a == b => Outcome::Pass,
            (Some(_), Some(_)) => Outcome::Fail,
            _ => Outcome::Unknown,
        };
        checks.push(
            CheckOutcome::new("Gfd N = Gdim N", outcome)
                .actual(format!("Gfd = {}, Gdim = {}", show(gfd), show(gd.established())))
                .report(gd),
        );
    }
    for e in
        fx.env.expectations.iter().filter(|e| e.key == "gfd" && e.args.last().map(String::as_str) == Some(MAIN_MODULE))
    {
        checks.push(compare("Gfd N matches the fixture", &e.value, &gfd.map_or(Value::Unknown, as_value)));
    }
    checks.extend(supp_checks(&n, "N", bound)?);
    Ok(FixtureReport { fixture: fx.name.clone(), checks })
}

/// For `N != 0` finite over a local map: `depth N` is finite and exact, and `Tor(k, N) != 0`.
fn supp_checks(n: &Restricted, label: &str, bound: usize) -> Result<Vec<CheckOutcome>> {
    if n.is_zero() {
        return Ok(vec![CheckOutcome::new(&format!("supp: {label} is zero"), Outcome::Pass)
            .note("no support conditions for the zero module")]);
    }
    if !n.map().is_local() {
        return Err(HarnessError::Missing(format!("{label}: the map is not local")));
    }
    let d = depth(n, bound)?;
    let outcome = match (d.is_exact(), d.value.is_finite()) {
        (true, true) => Outcome::Pass,
        (true, false) => Outcome::Fail,
        _ => Outcome::Unknown,
    };
    let depth_check = CheckOutcome::new(&format!("supp: depth {label} finite"), outcome).actual(d.value).report(d);
    let s = supp_member_max(n)?;
    let outcome = if s.member { Outcome::Pass } else { Outcome::Fail };
    let member = CheckOutcome::new(&format!("supp: Tor(k, {label}) != 0"), outcome)
        .actual(s.witness.map_or("none".to_string(), |w| format!("degree {w}")));
    Ok(vec![depth_check, member])
}

/// Support conclusions for the main module and every global or localized summand.
pub fn verify_supp(fx: &Fixture, bound: usize) -> Result<FixtureReport> {
    let mut checks = Vec::new();
    if fx.has_main() {
        checks.extend(supp_checks(&fx.main_module()?, MAIN_MODULE, bound)?);
    }
    for (name, summands) in &fx.env.globals {
        for s in summands {
            checks.extend(supp_checks(&s.module, &format!("{name}: {}", s.label), bound)?);
        }
    }
    if checks.is_empty() {
        return Err(HarnessError::Missing(format!("fixture {} has no module to check", fx.name)));
    }
    Ok(FixtureReport { fixture: fx.name.clone(), checks })
}

/// `Gfd X = max` over the supplied localizations, and each localized value is at most the global one.
pub fn verify_loc(fx: &Fixture, bound: usize, t_max: u32) -> Result<FixtureReport> {
    if !fx.has_localizations() {
        return Err(HarnessError::Missing(format!("fixture {} supplies no localization data", fx.name)));
    }
    let mut checks = Vec::new();
    for (name, summands) in &fx.env.globals {
        let locals: Vec<_> = fx.env.localizations.iter().filter(|l| &l.global == name).collect();
        if locals.is_empty() {
            return Err(HarnessError::Missing(format!("no localization of {name}")));
        }
        let mut global = Some(ExtInt::NegInf);
        let mut reports = Vec::new();
        for s in summands {
            let g = gfd_bounded(&s.module, t_max, bound)?;
            global = global.zip(decided_gfd(&g, bound)).map(|(a, b)| a.max(b));
            reports.push(g);
        }
        let mut local_max = Some(ExtInt::NegInf);
        for l in &locals {
            let g = gfd_bounded(&l.summand.module, t_max, bound)?;
            let v = decided_gfd(&g, bound);
            local_max = local_max.zip(v).map(|(a, b)| a.max(b));
            let outcome = match (v, global) {
                (Some(a), Some(b)) if a <= b => Outcome::Pass,
                (Some(_), Some(_)) => Outcome::Fail,
                _ => Outcome::Unknown,
            };
            checks.push(
                CheckOutcome::new(&format!("{name} at {}: local Gfd <= global Gfd", l.prime), outcome)
                    .actual(format!("{} <= {}", show(v), show(global)))
                    .report(g),
            );
        }
        let outcome = match (global, local_max) {
            (Some(a), Some(b)) if a == b => Outcome::Pass,
            (Some(_), Some(_)) => Outcome::Fail,
            _ => Outcome::Unknown,
        };
        let mut c = CheckOutcome::new(&format!("{name}: global Gfd = max over localizations"), outcome)
            .actual(format!("{} = {}", show(global), show(local_max)));
        c.reports = reports;
        checks.push(c);
    }
    Ok(FixtureReport { fixture: fx.name.clone(), checks })
}

fn show(v: Option<ExtInt>) -> String {
    v.map_or("unknown".to_string(), |v| v.to_string())
}

/// `(map, module)` from expectation arguments `[map,] module`.
fn target(fx: &Fixture, args: &[String]) -> Result<Restricted> {
    match args {
        [m] => fx.env.restricted(None, m),
        [phi, m] => fx.env.restricted(Some(phi), m),
        _ => Err(HarnessError::Missing(format!("expected [map,] module, got {args:?}"))),
    }
}

/// Recomputes one recorded expectation with the engine.
pub fn evaluate(fx: &Fixture, e: &Expectation, bound: usize, t_max: u32) -> Result<(Value, Vec<InvariantReport>)> {
    let args = &e.args[..];
    match e.key.as_str() {
        "depth" if args.len() == 1 && fx.env.rings.contains_key(&args[0]) => {
            let r = fx.env.rings[&args[0]].clone();
            let rep = depth(&Restricted::over_itself(&FpModule::free(&r, vec![0])), bound)?;
            Ok((reported(&rep), vec![rep]))
        }
        "depth" => {
            let rep = depth(&target(fx, args)?, bound)?;
            Ok((reported(&rep), vec![rep]))
        }
        "gdim" => {
            let [m] = args else { return Err(HarnessError::Missing("gdim takes one module".into())) };
            let module = fx.env.module(m).ok_or_else(|| HarnessError::UnknownObject(m.clone()))?;
            let rep = gdim(module, bound)?;
            let v = if rep.is_unknown() { Value::Unknown } else { reported(&rep) };
            Ok((v, vec![rep]))
        }
        "gfd" => {
            let rep = gfd_bounded(&target(fx, args)?, t_max, bound)?;
            Ok((decided_gfd(&rep, bound).map_or(Value::Unknown, as_value), vec![rep]))
        }
        "gfd_against" => {
            let (test, rest) =
                args.split_first().ok_or_else(|| HarnessError::Missing("gfd_against arguments".into()))?;
            let j = fx.env.prime_tests.get(test).ok_or_else(|| HarnessError::UnknownObject(test.clone()))?;
            let rep = gfd_against(&target(fx, rest)?, std::slice::from_ref(&j.module), bound)?;
            Ok((decided_gfd(&rep, bound).map_or(Value::Unknown, as_value), vec![rep]))
        }
        "depth_diff" => {
            let n = target(fx, args)?;
            let dr = ring_depth(&n, bound)?;
            let dn = depth(&n, bound)?;
            let v = if dr.is_exact() && dn.is_exact() { dr.value.checked_sub(dn.value) } else { None };
            Ok((v.map_or(Value::Unknown, as_value), vec![dr, dn]))
        }
        "fd" => {
            let n = target(fx, args)?;
            let rep = fd_bounded(&n, bound)?;
            let v = if rep.is_exact() { as_value(rep.value) } else { Value::Unknown };
            Ok((v, vec![rep]))
        }
        "betti" => {
            let [m] = args else { return Err(HarnessError::Missing("betti takes one module".into())) };
            let module = fx.env.module(m).ok_or_else(|| HarnessError::UnknownObject(m.clone()))?;
            let len = match &e.value {
                Value::List(xs) => xs.len().max(1),
                _ => bound + 1,
            };
            let t = betti_table(module, len - 1);
            Ok((Value::List(t.totals().into_iter().map(|x| x as i64).collect()), Vec::new()))
        }
        "supp" => Ok((Value::Bool(supp_member_max(&target(fx, args)?)?.member), Vec::new())),
        other => Err(HarnessError::Missing(format!("unknown expectation key '{other}'"))),
    }
}

/// Replays every recorded expectation of a fixture.
pub fn replay(fx: &Fixture, bound: usize, t_max: u32) -> Result<FixtureReport> {
    let mut checks = Vec::new();
    for e in &fx.env.expectations {
        let (actual, reports) = evaluate(fx, e, bound, t_max)?;
        let name = format!("{}({})", e.key, e.args.join(", "));
        let mut c = compare(&name, &e.value, &actual).note(format!("{}: {}", e.provenance, e.oracle));
        c.reports = reports;
        checks.push(c);
    }
    Ok(FixtureReport { fixture: fx.name.clone(), checks })
}

/// Which verification to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Main,
    Loc,
    Supp,
    Expectations,
}

impl Mode {
    pub fn command(self) -> &'static str {
        match self {
            Mode::Main => "verify main",
            Mode::Loc => "verify loc",
            Mode::Supp => "verify supp",
            Mode::Expectations => "verify expectations",
        }
    }

    /// Whether a fixture carries the data the mode needs.
    pub fn applies(self, fx: &Fixture) -> bool {
        match self {
            Mode::Main => fx.has_main() && fx.expects_finite_gfd(),
            Mode::Loc => fx.has_localizations(),
            Mode::Supp => fx.has_main() || !fx.env.globals.is_empty(),
            Mode::Expectations => !fx.env.expectations.is_empty(),
        }
    }

    pub fn run(self, fx: &Fixture, bounds: Bounds) -> Result<FixtureReport> {
        match self {
            Mode::Main => verify_main(fx, bounds.bound, bounds.t_max),
            Mode::Loc => verify_loc(fx, bounds.bound, bounds.t_max),
            Mode::Supp => verify_supp(fx, bounds.bound),
            Mode::Expectations => replay(fx, bounds.bound, bounds.t_max),
        }
    }
}

/// Runs a mode on several fixtures concurrently; the report lists them by name.
pub fn verify_all(mode: Mode, fixtures: &[Fixture], bounds: Bounds) -> Result<Report> {
    let results: Vec<FixtureReport> = fixtures.par_iter().map(|fx| mode.run(fx, bounds)).collect::<Result<_>>()?;
    Ok(Report::new(mode.command(), bounds, results))
}

/// A JSON summary of a resolution, for the informational commands.
pub fn betti_json(m: &FpModule, bound: usize) -> serde_json::Value {
    let t = betti_table(m, bound);
    json!({ "totals": t.totals(), "entries": t.entries })
}
