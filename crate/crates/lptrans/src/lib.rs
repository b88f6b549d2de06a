//! File formats, seeded instance generators and the experiment runner built
//! on `lptrans-core`. The `lptrans` binary exposes all of it on the command line.

pub mod experiment;
pub mod formats;
pub mod generate;
