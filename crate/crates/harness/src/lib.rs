//! Fixture language, verification commands and reports for the `gorenstein` engine.

pub mod error;
pub mod fixture;
pub mod lang;
pub mod report;
pub mod verify;

pub use error::{HarnessError, Result};
pub use fixture::{shipped, Fixture, SHIPPED};
pub use report::{exit_code, Bounds, CheckOutcome, FixtureReport, Outcome, Report};
pub use verify::Mode;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/fixtures.md")]
    struct Fixtures;
    #[doc = include_str!("../../../book/src/testing.md")]
    struct Testing;
}
