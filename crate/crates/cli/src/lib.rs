//! Front end for the `lisse` binary: sectioned input files, command
//! dispatch and report rendering.

pub mod commands;
pub mod input;
pub mod report;

pub use commands::{resolve, CommandError, Overrides, Settings};
pub use input::{InputError, InputFile};
pub use report::{Report, Section, Value, Verdict};
