//! File formats, reports, diagrams and the command-line driver for
//! `bousfield-core`.

pub mod cli;
pub mod dot;
pub mod input;
pub mod paper_check;
pub mod report;

pub use input::{builtin_generators, parse_input, print_input, InputKind, InputSpec, ParseError, Structure};
pub use paper_check::run_paper_check;
pub use report::{Report, Value};
