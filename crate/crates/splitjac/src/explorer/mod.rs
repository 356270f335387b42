//! Search harnesses, the named-example catalog, and the verification reports
//! behind the command-line interface.

pub mod acceptance;
pub mod catalog;
pub mod report;
pub mod search;
pub mod sections;

pub use report::{Fact, FactKind, Report};
pub use search::{isotropic_census, rationals_up_to_height, search, Exclusion, SearchSpec, Solution};
