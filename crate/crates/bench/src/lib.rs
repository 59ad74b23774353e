//! Shared helpers for the criterion benchmarks.

use quext_core::fixtures::fixture_spec;
use quext_core::{build_extension, Extension};

pub fn fixture(name: &str) -> Extension {
    build_extension(fixture_spec(name).expect("fixture parses")).expect("fixture builds")
}
