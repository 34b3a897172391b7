//! File format, reports, random generation and commands of the `dyer` tool.

pub mod commands;
pub mod dyg;
pub mod generate;
pub mod report;

pub use dyg::{parse_dyg, print_dyg, DygDocument, DygError};
pub use generate::{gen_random, GenOptions};
pub use report::{emit_report, ClassificationReport};
