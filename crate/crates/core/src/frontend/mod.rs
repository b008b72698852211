//! Text front end: expression parser, reports, cube drawings and the CLI.

pub mod cli;
pub mod cube;
pub mod parser;
pub mod report;

pub use cube::{render_cube, CubeFormat};
pub use parser::{evaluate, parse, parse_and_evaluate, Expr, ParseError};
pub use report::{decompose_report, DecompositionReport};
