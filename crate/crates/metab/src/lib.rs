//! Command line, JSON formats, corpus runner and seeded property harness for
//! [`metabelian_core`].

pub mod cli;
pub mod config;
pub mod corpus;
pub mod gen;
pub mod harness;
pub mod json;

pub use config::Config;
