//! File formats, instance generators and command dispatch for the `pendant`
//! binary.

pub mod cli;
pub mod formats;
pub mod generate;
pub mod parallel;
pub mod report;
