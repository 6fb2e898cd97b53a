//! File formats, fixtures, certificates, parallel search and the command
//! implementations behind the `abchoose` binary.

pub mod certificate;
pub mod commands;
pub mod fixtures;
pub mod formats;
pub mod parallel;
