//! Threaded sweeps, machine-readable reports and the `fourcirc` command line
//! on top of [`fourcirc_core`].
//!
//! The parallel routines in [`parallel`] run on whatever rayon pool is
//! current, split their work into contiguous index ranges and merge partial
//! results in range order, so their output does not depend on the number of
//! workers.

pub mod args;
pub mod cli;
pub mod parallel;
pub mod report;

pub use cli::{run, Failure};
