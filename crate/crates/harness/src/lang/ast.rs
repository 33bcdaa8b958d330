//! Syntax tree of the fixture language.

use std::fmt;

use serde::{Deserialize, Serialize};

/// 1-based line and column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A polynomial expression kept as source text with whitespace removed.
///
/// Equality ignores the position.
#[derive(Clone, Debug, Eq)]
pub struct Expr {
    pub text: String,
    pub pos: Pos,
}

impl Expr {
    pub fn new(text: &str, pos: Pos) -> Expr {
        Expr { text: text.chars().filter(|c| !c.is_whitespace()).collect(), pos }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub relations: Vec<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub images: Vec<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub ring: String,
    /// One row per generator.
    pub rows: Vec<Vec<Expr>>,
    pub degrees: Option<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTestDecl {
    pub name: String,
    pub ring: String,
    pub t: u32,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Literature,
    Derived,
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Literature => "literature",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Value {
    Int(i64),
    NegInf,
    PosInf,
    Unknown,
    Bool(bool),
    List(Vec<i64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::NegInf => f.write_str("-inf"),
            Value::PosInf => f.write_str("+inf"),
            Value::Unknown => f.write_str("unknown"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(xs) => {
                let items: Vec<String> = xs.iter().map(i64::to_string).collect();
                write!(f, "[{}]", items.join(", "))
            }
        }
    }
}

/// `expect KEY(ARGS) = VALUE PROVENANCE "ORACLE";`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub key: String,
    pub args: Vec<String>,
    pub value: Value,
    pub provenance: Provenance,
    pub oracle: String,
}

/// `MAP MODULE`, or just `MODULE` over its own ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub map: Option<String>,
    pub module: String,
}

/// `global NAME = SUMMAND + ...;`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalDecl {
    pub name: String,
    pub summands: Vec<Summand>,
}

/// `localize GLOBAL at PRIME = SUMMAND;`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizeDecl {
    pub global: String,
    pub prime: String,
    pub summand: Summand,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring(RingDecl),
    Map(MapDecl),
    Module(ModuleDecl),
    PrimeTest(PrimeTestDecl),
    Expect(Expectation),
    Global(GlobalDecl),
    Localize(LocalizeDecl),
}

impl Statement {
    /// The name the statement binds, if any.
    pub fn name(&self) -> Option<&str> {
        match self {
            Statement::Ring(d) => Some(&d.name),
            Statement::Map(d) => Some(&d.name),
            Statement::Module(d) => Some(&d.name),
            Statement::PrimeTest(d) => Some(&d.name),
            Statement::Global(d) => Some(&d.name),
            Statement::Expect(_) | Statement::Localize(_) => None,
        }
    }
}

/// A statement with its starting position; equality ignores the position.
#[derive(Clone, Debug, Eq)]
pub struct Located {
    pub pos: Pos,
    pub statement: Statement,
}

impl PartialEq for Located {
    fn eq(&self, other: &Self) -> bool {
        self.statement == other.statement
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub statements: Vec<Located>,
}
