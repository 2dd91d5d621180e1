//! Shared helpers for the integration tests.

#![allow(dead_code)]

mod closed_forms;
pub mod props;

#[allow(unused_imports)]
pub use closed_forms::*;
