//! Shipped fixtures and loading from disk.

use std::path::Path;

use gorenstein::module::{FpModule, Restricted};
use gorenstein::Field;

use crate::error::{HarnessError, Result};
use crate::lang::{parse_session, resolve, Env, Session, Value};

/// Fixtures compiled into the binary, by name.
pub const SHIPPED: &[(&str, &str)] = &[
    ("f1_gf101", include_str!("../fixtures/f1_gf101.gfd")),
    ("f1_qq", include_str!("../fixtures/f1_qq.gfd")),
    ("f2", include_str!("../fixtures/f2.gfd")),
    ("f3", include_str!("../fixtures/f3.gfd")),
    ("f4", include_str!("../fixtures/f4.gfd")),
    ("loc_artinian", include_str!("../fixtures/loc_artinian.gfd")),
    ("loc_graded", include_str!("../fixtures/loc_graded.gfd")),
    ("loc_product", include_str!("../fixtures/loc_product.gfd")),
    ("zero", include_str!("../fixtures/zero.gfd")),
];

/// Name of the module the verification commands act on.
pub const MAIN_MODULE: &str = "N";
/// Name under which the residue field of the main module's ring is available when the
/// fixture does not declare a module of that name.
pub const RESIDUE_FIELD: &str = "k";
/// Name of the map along which the main module is restricted, when present.
pub const MAIN_MAP: &str = "phi";

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub source: String,
    pub session: Session,
    pub env: Env,
}

impl Fixture {
    pub fn parse(name: &str, source: &str, field: Option<Field>) -> Result<Fixture> {
        let session = parse_session(source)?;
        let mut env = resolve(&session, field)?;
        if !env.modules.contains_key(RESIDUE_FIELD) {
            if let Some(ring_name) = env.module_rings.get(MAIN_MODULE).cloned() {
                let k = FpModule::residue_field(&env.rings[&ring_name]);
                env.modules.insert(RESIDUE_FIELD.to_string(), k);
                env.module_rings.insert(RESIDUE_FIELD.to_string(), ring_name);
            }
        }
        Ok(Fixture { name: name.to_string(), source: source.to_string(), session, env })
    }

    /// A path on disk, or the name of a shipped fixture with or without `.gfd`.
    pub fn load(spec: &str, field: Option<Field>) -> Result<Fixture> {
        let path = Path::new(spec);
        if path.is_file() {
            let source =
                std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: spec.to_string(), source })?;
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
            return Fixture::parse(name, &source, field);
        }
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
        let (name, source) =
            SHIPPED.iter().find(|(n, _)| *n == stem).ok_or_else(|| HarnessError::UnknownFixture(spec.to_string()))?;
        Fixture::parse(name, source, field)
    }

    /// The leading comment line.
    pub fn description(&self) -> String {
        self.source.lines().find_map(|l| l.trim().strip_prefix('#')).map(|s| s.trim().to_string()).unwrap_or_default()
    }

    pub fn has_main(&self) -> bool {
        self.env.modules.contains_key(MAIN_MODULE)
    }

    /// The map used for the main module: `phi` when it lands in the ring of `N`.
    pub fn main_map(&self) -> Option<&str> {
        let ring = self.env.module_rings.get(MAIN_MODULE)?;
        let phi = self.env.maps.get(MAIN_MAP)?;
        (self.env.rings.get(ring) == Some(phi.target())).then_some(MAIN_MAP)
    }

    /// `N` restricted along `phi`, or over its own ring.
    pub fn main_module(&self) -> Result<Restricted> {
        if !self.has_main() {
            return Err(HarnessError::Missing(format!("fixture {} declares no module {MAIN_MODULE}", self.name)));
        }
        self.env.restricted(self.main_map(), MAIN_MODULE)
    }

    /// Whether the fixture records a finite (or `-inf`) expected Gfd for the main module.
    pub fn expects_finite_gfd(&self) -> bool {
        self.env.expectations.iter().any(|e| {
            e.key == "gfd"
                && e.args.last().map(String::as_str) == Some(MAIN_MODULE)
                && matches!(e.value, Value::Int(_) | Value::NegInf)
        })
    }

    pub fn has_localizations(&self) -> bool {
        !self.env.localizations.is_empty()
    }
}

/// Every shipped fixture, sorted by name.
pub fn shipped(field: Option<Field>) -> Result<Vec<Fixture>> {
    SHIPPED.iter().map(|(n, s)| Fixture::parse(n, s, field)).collect()
}
