//! Turns a parsed session into engine objects.

use std::collections::BTreeMap;

use gorenstein::algebra::parse::parse_polynomial;
use gorenstein::algebra::{Field, GradedRing, Polynomial, Ring, RingMap};
use gorenstein::module::{injective_hull_truncation, FpModule, Restricted};

use crate::error::HarnessError;
use crate::lang::ast::*;

/// A prime test module `E_t` over a ring.
#[derive(Clone, Debug)]
pub struct PrimeTest {
    pub ring: String,
    pub t: u32,
    pub module: FpModule,
}

/// A summand `phi N` of a global object or a localized stand-in.
#[derive(Clone, Debug)]
pub struct ResolvedSummand {
    pub label: String,
    pub module: Restricted,
}

#[derive(Clone, Debug)]
pub struct Localization {
    pub global: String,
    pub prime: String,
    pub summand: ResolvedSummand,
}

/// Resolved objects of a session, by name.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub rings: BTreeMap<String, Ring>,
    pub maps: BTreeMap<String, RingMap>,
    pub modules: BTreeMap<String, FpModule>,
    /// Ring name of each module.
    pub module_rings: BTreeMap<String, String>,
    pub prime_tests: BTreeMap<String, PrimeTest>,
    pub expectations: Vec<Expectation>,
    pub globals: BTreeMap<String, Vec<ResolvedSummand>>,
    pub localizations: Vec<Localization>,
}

fn semantic(pos: Pos, object: &str, message: impl Into<String>) -> HarnessError {
    HarnessError::Semantic { pos, object: object.to_string(), message: message.into() }
}

fn poly(ring: &Ring, e: &Expr, object: &str) -> Result<Polynomial, HarnessError> {
    let f = parse_polynomial(ring, &e.text).map_err(|err| {
        let pos = Pos { line: e.pos.line, col: e.pos.col + err.offset };
        semantic(pos, object, err.message)
    })?;
    ring.normal_form(&f).map_err(|err| semantic(e.pos, object, err.to_string()))
}

impl Env {
    pub fn ring(&self, name: &str) -> Option<&Ring> {
        self.rings.get(name)
    }

    pub fn module(&self, name: &str) -> Option<&FpModule> {
        self.modules.get(name)
    }

    pub fn map(&self, name: &str) -> Option<&RingMap> {
        self.maps.get(name)
    }

    /// `N` along `map`, or over its own ring when `map` is `None`.
    pub fn restricted(&self, map: Option<&str>, module: &str) -> Result<Restricted, HarnessError> {
        let m = self.modules.get(module).ok_or_else(|| HarnessError::UnknownObject(module.to_string()))?;
        match map {
            None => Ok(Restricted::over_itself(m)),
            Some(name) => {
                let phi = self.maps.get(name).ok_or_else(|| HarnessError::UnknownObject(name.to_string()))?;
                Ok(Restricted::new(phi.clone(), m.clone())?)
            }
        }
    }
}

/// Resolves every statement in order; `field` replaces the coefficient field of every ring.
pub fn resolve(session: &Session, field: Option<Field>) -> Result<Env, HarnessError> {
    let mut env = Env::default();
    for Located { pos, statement } in &session.statements {
        let pos = *pos;
        if let Some(name) = statement.name() {
            let taken = env.rings.contains_key(name)
                || env.maps.contains_key(name)
                || env.modules.contains_key(name)
                || env.prime_tests.contains_key(name)
                || env.globals.contains_key(name);
            if taken {
                return Err(semantic(pos, name, "name already bound"));
            }
        }
        match statement {
            Statement::Ring(d) => {
                let f = match (field, d.field) {
                    (Some(f), _) => f,
                    (None, FieldSpec::Rationals) => Field::Rational,
                    (None, FieldSpec::Prime(p)) => {
                        Field::prime(p).map_err(|e| semantic(pos, &d.name, e.to_string()))?
                    }
                };
                let vars: Vec<&str> = d.vars.iter().map(String::as_str).collect();
                let mut seen = std::collections::BTreeSet::new();
                if let Some(v) = vars.iter().find(|v| !seen.insert(**v)) {
                    return Err(semantic(pos, &d.name, format!("variable '{v}' repeated")));
                }
                let ambient = GradedRing::polynomial(f, &vars);
                let gens = d.relations.iter().map(|e| poly(&ambient, e, &d.name)).collect::<Result<Vec<_>, _>>()?;
                if let Some(i) = gens.iter().position(|g| !g.is_homogeneous()) {
                    return Err(semantic(d.relations[i].pos, &d.name, "inhomogeneous relation"));
                }
                let ring = GradedRing::standard(f, &vars, gens).map_err(|e| semantic(pos, &d.name, e.to_string()))?;
                env.rings.insert(d.name.clone(), ring);
            }
            Statement::Map(d) => {
                let source = env
                    .rings
                    .get(&d.source)
                    .ok_or_else(|| semantic(pos, &d.name, format!("unknown ring '{}'", d.source)))?;
                let target = env
                    .rings
                    .get(&d.target)
                    .ok_or_else(|| semantic(pos, &d.name, format!("unknown ring '{}'", d.target)))?;
                let images = d.images.iter().map(|e| poly(target, e, &d.name)).collect::<Result<Vec<_>, _>>()?;
                let phi = RingMap::new(source.clone(), target.clone(), images)
                    .map_err(|e| semantic(pos, &d.name, e.to_string()))?;
                env.maps.insert(d.name.clone(), phi);
            }
            Statement::Module(d) => {
                let ring = env
                    .rings
                    .get(&d.ring)
                    .ok_or_else(|| semantic(pos, &d.name, format!("unknown ring '{}'", d.ring)))?;
                let rows = d
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|e| poly(ring, e, &d.name)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                let degrees = d.degrees.clone().unwrap_or_else(|| vec![0; rows.len()]);
                let m = FpModule::from_rows(ring, &rows, degrees).map_err(|e| semantic(pos, &d.name, e.to_string()))?;
                env.modules.insert(d.name.clone(), m);
                env.module_rings.insert(d.name.clone(), d.ring.clone());
            }
            Statement::PrimeTest(d) => {
                let ring = env
                    .rings
                    .get(&d.ring)
                    .ok_or_else(|| semantic(pos, &d.name, format!("unknown ring '{}'", d.ring)))?;
                if d.t == 0 {
                    return Err(semantic(pos, &d.name, "truncation index must be positive"));
                }
                let module = injective_hull_truncation(ring, d.t).map_err(|e| semantic(pos, &d.name, e.to_string()))?;
                env.prime_tests.insert(d.name.clone(), PrimeTest { ring: d.ring.clone(), t: d.t, module });
            }
            Statement::Expect(e) => env.expectations.push(e.clone()),
            Statement::Global(g) => {
                let summands =
                    g.summands.iter().map(|s| summand(&env, s, pos, &g.name)).collect::<Result<Vec<_>, _>>()?;
                let base = summands[0].module.base().clone();
                if summands.iter().any(|s| *s.module.base() != base) {
                    return Err(semantic(pos, &g.name, "summands over different base rings"));
                }
                env.globals.insert(g.name.clone(), summands);
            }
            Statement::Localize(l) => {
                if !env.globals.contains_key(&l.global) {
                    return Err(semantic(pos, &l.global, "localization of an undeclared global object"));
                }
                let summand = summand(&env, &l.summand, pos, &l.global)?;
                env.localizations.push(Localization { global: l.global.clone(), prime: l.prime.clone(), summand });
            }
        }
    }
    Ok(env)
}

fn summand(env: &Env, s: &Summand, pos: Pos, object: &str) -> Result<ResolvedSummand, HarnessError> {
    let module = env.restricted(s.map.as_deref(), &s.module).map_err(|e| semantic(pos, object, e.to_string()))?;
    let label = match &s.map {
        Some(m) => format!("{m} {}", s.module),
        None => s.module.clone(),
    };
    Ok(ResolvedSummand { label, module })
}
