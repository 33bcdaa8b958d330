//! The fixture language: rings, maps, modules, prime tests and expectations.

pub mod ast;
pub mod parser;
pub mod pretty;
pub mod resolve;

pub use ast::{Expectation, Located, Pos, Provenance, Session, Statement, Value};
pub use parser::{parse_session, ParseError};
pub use resolve::{resolve, Env, Localization, PrimeTest, ResolvedSummand};
