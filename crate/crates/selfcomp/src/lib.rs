//! File formats, configuration, the acceptance battery and the command
//! line front end for `selfcomp-core`.

pub mod cli;
pub mod config;
pub mod error;
pub mod json;
pub mod resolve;
pub mod sample;
pub mod suite;
