//! Command-line and IO layer over [`fadeber_core`].
//!
//! * [`grid`]: `start:stop:step` grid specifications.
//! * [`parallel`]: multi-threaded Monte Carlo and comparison drivers whose
//!   output does not depend on the worker count.
//! * [`output`]: CSV writing with a fixed numeric format.
//! * [`cli`]: the `fadeber` subcommands.

pub mod cli;
pub mod grid;
pub mod output;
pub mod parallel;

pub use fadeber_core as core;
