//! File formats, thread-pool drivers and the command line front end for
//! [`reltutte_core`].

pub mod cli;
pub mod format;
pub mod parallel;
pub mod selftest;
