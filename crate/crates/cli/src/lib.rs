//! Front end for the `khds` binary: subcommands as plain functions, report
//! types with text and JSON forms, and the doubling-ladder timer.

pub mod commands;
pub mod error;
pub mod report;
pub mod scaling;

pub use commands::{
    arcs_to_text, cmd_gen, cmd_pierce, cmd_solve, cmd_verify, parse_set, solve_graph, Kind, Options,
};
pub use error::{exit, CliError, CliResult};
pub use report::{OracleCheck, PierceReport, SolveReport, VerifyReport};
pub use scaling::{run_ladder, BenchRow, BenchTable, Ladder, RATIO_LIMIT};
