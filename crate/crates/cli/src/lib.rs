//! Notation front end and report records for the segment calculus.

pub mod parse;
pub mod report;
