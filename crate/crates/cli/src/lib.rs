//! Command-line scenarios over the `tilt-core` library.

pub mod input;
pub mod report;
pub mod scenarios;

pub use input::{parse_input, FieldSpec, ParseError, ParsedInput};
pub use report::{Check, Report, Summary};
pub use scenarios::{run_dedekind_classify, run_tube_demo, Params, Scenario, ScenarioError, ScenarioKind};
