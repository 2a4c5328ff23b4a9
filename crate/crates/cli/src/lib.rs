//! Command-line companion to `braidwalk-core`: argument and spec parsing,
//! deterministic output formats, parallel trial collection, and the
//! verification suite.

pub mod args;
pub mod fmt;
pub mod output;
pub mod par;
pub mod spec_json;
pub mod verify;
