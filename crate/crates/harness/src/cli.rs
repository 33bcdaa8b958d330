use std::ffi::OsString;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gorenstein::approximation::{approximation_triangle, rotate_triangle};
use gorenstein::invariants::{depth, gdim, gfd_bounded, DerivedQuery, DEFAULT_BOUND, DEFAULT_T_MAX};
use gorenstein::module::{free_resolution, FpModule, Restricted};
use gorenstein::{Error as EngineError, Field, Status};
use gorenstein_harness::fixture::{shipped, Fixture, MAIN_MODULE};
use gorenstein_harness::verify::{betti_json, decided_gfd, verify_all, Mode};
use gorenstein_harness::{Bounds, CheckOutcome, FixtureReport, HarnessError, Outcome, Report};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "gfd", version, about = "Exact homological invariants over graded-local rings")]
struct Cli {
    /// Homological bound B.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    /// Largest truncation index t of the injective hull.
    #[arg(long, global = true, default_value_t = DEFAULT_T_MAX)]
    tmax: u32,
    /// Replace the coefficient field of every ring: QQ or GF(p).
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Target {
    /// Fixture path, or the name of a shipped fixture.
    #[arg(long)]
    fixture: String,
    #[arg(long, default_value = MAIN_MODULE)]
    module: String,
    /// Restrict the module along this map.
    #[arg(long)]
    map: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal free resolution through the bound.
    Resolve(Target),
    /// Graded Betti numbers through the bound.
    Betti(Target),
    /// depth of the module over the source ring.
    Depth(Target),
    /// Ext^i(M, N) for i <= B; N defaults to the ring of M.
    Ext {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        with: Option<String>,
    },
    /// Tor_i(M, N) for i <= B; N defaults to M.
    Tor {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        with: Option<String>,
    },
    /// G-dimension of the module.
    Gdim(Target),
    /// Bounded Gorenstein flat dimension along the map.
    Gfd(Target),
    /// Approximation triangle N -> P -> H -> ΣN.
    Approximate {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i32,
    },
    /// Verify fixtures; without --fixture, every applicable shipped fixture.
    Verify {
        #[arg(value_enum)]
        what: VerifyKind,
        #[arg(long)]
        fixture: Vec<String>,
    },
    /// Shipped fixtures.
    Fixtures {
        #[arg(value_enum)]
        action: FixturesAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyKind {
    Main,
    Loc,
    Supp,
    Expectations,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FixturesAction {
    List,
}

fn parse_field(s: &str) -> Result<Field, String> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("qq") {
        return Ok(Field::Rational);
    }
    let inner = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).unwrap_or(t);
    let p: u32 = inner.parse().map_err(|_| format!("expected QQ or GF(p), got '{s}'"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// Parses `argv`, runs the command and returns the exit code with stdout and stderr text.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            (report.exit_code, out, String::new())
        }
        Err(e) => (2, String::new(), format!("error: {e:#}\n")),
    }
}

fn load(cli: &Cli, spec: &str) -> anyhow::Result<Fixture> {
    Fixture::load(spec, cli.field).with_context(|| format!("loading fixture '{spec}'"))
}

fn module(fx: &Fixture, name: &str) -> anyhow::Result<FpModule> {
    fx.env.module(name).cloned().ok_or_else(|| anyhow!("unknown module '{name}' in fixture {}", fx.name))
}

fn restricted(fx: &Fixture, t: &Target) -> anyhow::Result<Restricted> {
    let map = match &t.map {
        Some(m) => Some(m.as_str()),
        None if t.module == MAIN_MODULE => fx.main_map(),
        None => None,
    };
    Ok(fx.env.restricted(map, &t.module)?)
}

fn single(cli: &Cli, command: &str, fixture: &str, check: CheckOutcome) -> Report {
    let bounds = Bounds { bound: cli.bound, t_max: cli.tmax };
    Report::new(command, bounds, vec![FixtureReport { fixture: fixture.to_string(), checks: vec![check] }])
}

fn status_outcome(status: &Status) -> Outcome {
    match status {
        Status::Exact | Status::CertifiedUpTo { .. } => Outcome::Pass,
        Status::Unknown { .. } => Outcome::Unknown,
        Status::Refuted { .. } => Outcome::Fail,
    }
}

fn derived(q: &DerivedQuery, bound: usize) -> anyhow::Result<serde_json::Value> {
    let mut rows = Vec::new();
    for i in 0..=bound {
        rows.push(json!({ "degree": i, "zero": q.is_zero(i)?, "length": q.length(i)? }));
    }
    Ok(json!(rows))
}

fn execute(cli: &Cli) -> anyhow::Result<Report> {
    let b = cli.bound;
    if b == 0 || cli.tmax == 0 {
        bail!("--bound and --tmax must be at least 1");
    }
    let bounds = Bounds { bound: b, t_max: cli.tmax };
    match &cli.command {
        Command::Resolve(t) => {
            let fx = load(cli, &t.fixture)?;
            let m = module(&fx, &t.module)?;
            let res = free_resolution(&m, b);
            let terms: Vec<_> =
                (0..=res.length().min(b)).map(|i| json!({ "index": i, "degrees": res.degrees(i) })).collect();
            let check = CheckOutcome::new(&format!("resolve {}", t.module), Outcome::Pass)
                .actual(format!("ranks {:?}", res.ranks(b)))
                .data(json!({ "terminated": res.is_terminated(), "terms": terms }));
            Ok(single(cli, "resolve", &fx.name, check))
        }
        Command::Betti(t) => {
            let fx = load(cli, &t.fixture)?;
            let m = module(&fx, &t.module)?;
            let data = betti_json(&m, b);
            let check = CheckOutcome::new(&format!("betti {}", t.module), Outcome::Pass)
                .actual(format!("{}", data["totals"]))
                .data(data);
            Ok(single(cli, "betti", &fx.name, check))
        }
        Command::Depth(t) => {
            let fx = load(cli, &t.fixture)?;
            let rep = depth(&restricted(&fx, t)?, b)?;
            let check = CheckOutcome::new(&format!("depth {}", t.module), status_outcome(&rep.status))
                .actual(rep.value)
                .report(rep);
            Ok(single(cli, "depth", &fx.name, check))
        }
        Command::Ext { target, with } => {
            let fx = load(cli, &target.fixture)?;
            let m = module(&fx, &target.module)?;
            let n = match with {
                Some(name) => fx.env.restricted(None, name)?,
                None => Restricted::over_itself(&FpModule::free(m.ring(), vec![0])),
            };
            let q = DerivedQuery::ext(&m, &n, b)?;
            let check = CheckOutcome::new(&format!("ext {}", target.module), Outcome::Pass)
                .actual(format!("nonzero in degrees {:?}", q.support()?))
                .data(derived(&q, b)?);
            Ok(single(cli, "ext", &fx.name, check))
        }
        Command::Tor { target, with } => {
            let fx = load(cli, &target.fixture)?;
            let n = restricted(&fx, target)?;
            let m = match with {
                Some(name) => module(&fx, name)?,
                None => FpModule::residue_field(n.base()),
            };
            let q = DerivedQuery::tor(&m, &n, b)?;
            let check = CheckOutcome::new(&format!("tor {}", target.module), Outcome::Pass)
                .actual(format!("nonzero in degrees {:?}", q.support()?))
                .data(derived(&q, b)?);
            Ok(single(cli, "tor", &fx.name, check))
        }
        Command::Gdim(t) => {
            let fx = load(cli, &t.fixture)?;
            let rep = gdim(&module(&fx, &t.module)?, b)?;
            let check = CheckOutcome::new(&format!("gdim {}", t.module), status_outcome(&rep.status))
                .actual(rep.to_string())
                .report(rep);
            Ok(single(cli, "gdim", &fx.name, check))
        }
        Command::Gfd(t) => {
            let fx = load(cli, &t.fixture)?;
            let rep = gfd_bounded(&restricted(&fx, t)?, cli.tmax, b)?;
            let decided = decided_gfd(&rep, b);
            let outcome = if decided.is_some() { Outcome::Pass } else { Outcome::Unknown };
            let check = CheckOutcome::new(&format!("gfd {}", t.module), outcome)
                .actual(decided.map_or("unknown".to_string(), |v| v.to_string()))
                .report(rep);
            Ok(single(cli, "gfd", &fx.name, check))
        }
        Command::Approximate { target, n } => {
            let fx = load(cli, &target.fixture)?;
            let m = module(&fx, &target.module)?;
            let name = format!("approximate {} at n = {n}", target.module);
            let check = match approximation_triangle(&m, *n, b) {
                Ok(a) => {
                    let rot = rotate_triangle(&a, b)?;
                    let checks: Vec<_> = a.checks.iter().chain(&rot.checks).collect();
                    let outcome = if a.passed() && rot.passed() { Outcome::Pass } else { Outcome::Fail };
                    CheckOutcome::new(&name, outcome)
                        .actual(format!("pd P = {}, {}", a.pd_p.value, a.gdim_h))
                        .report(a.pd_p.clone())
                        .report(a.gdim_h.clone())
                        .data(json!({ "checks": checks, "status": a.status }))
                }
                Err(EngineError::Uncertified(msg)) => CheckOutcome::new(&name, Outcome::Unknown).note(msg),
                Err(EngineError::Postcondition(msg)) => CheckOutcome::new(&name, Outcome::Fail).note(msg),
                Err(e) => return Err(HarnessError::from(e).into()),
            };
            Ok(single(cli, "approximate", &fx.name, check))
        }
        Command::Verify { what, fixture } => {
            let mode = match what {
                VerifyKind::Main => Mode::Main,
                VerifyKind::Loc => Mode::Loc,
                VerifyKind::Supp => Mode::Supp,
                VerifyKind::Expectations => Mode::Expectations,
            };
            let fixtures = if fixture.is_empty() {
                shipped(cli.field)?.into_iter().filter(|f| mode.applies(f)).collect()
            } else {
                fixture.iter().map(|f| load(cli, f)).collect::<anyhow::Result<Vec<_>>>()?
            };
            Ok(verify_all(mode, &fixtures, bounds)?)
        }
        Command::Fixtures { action: FixturesAction::List } => {
            let checks = shipped(cli.field)?
                .iter()
                .map(|f| {
                    let modes: Vec<&str> = [Mode::Main, Mode::Loc, Mode::Supp, Mode::Expectations]
                        .into_iter()
                        .filter(|m| m.applies(f))
                        .map(Mode::command)
                        .collect();
                    CheckOutcome::new(&f.name, Outcome::Pass)
                        .actual(f.description())
                        .data(json!({ "modes": modes, "expectations": f.env.expectations.len() }))
                })
                .collect();
            Ok(Report::new("fixtures list", bounds, vec![FixtureReport { fixture: "shipped".into(), checks }]))
        }
    }
}
