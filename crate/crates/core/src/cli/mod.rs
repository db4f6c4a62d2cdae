//! Text front ends and the command-line driver.

mod commands;
mod euler_dsl;
mod parser;

pub use commands::{execute, render, run, Cli, Command, OutputFormat};
pub use euler_dsl::parse_euler_program;
pub use parser::{parse_point, parse_polynomial, parse_polynomial_with, parse_rational_polynomial};
