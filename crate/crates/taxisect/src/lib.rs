//! Construction scripts, SVG/JSON export and the `taxisect` command line,
//! on top of the exact kernel in `taxisect_core`.

pub mod cli;
pub mod export;
pub mod script;

pub use taxisect_core as core;
