//! IO, parallel drivers and the command line front end around
//! [`simplexnet_core`].
//!
//! Every text format has a parser and a writer; parsing the output of a
//! writer gives back an equal value.

pub mod commands;
pub mod drivers;
pub mod formats;
pub mod report;

pub use formats::FormatError;
