//! Command line front end: parse an extension description, run the
//! requested analyses and print a summary (optionally a JSON report).
//!
//! Exit codes: 0 all requested certificates pass, 1 a refutation,
//! 2 inconclusive, 3 input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quext_core::fixtures;
use quext_core::specfile::parse_spec_with;
use quext_core::{Command as Analysis, Field};

#[derive(Parser)]
#[command(
    name = "quext",
    version,
    about = "Bound quiver algebras, their extensions by arrows and relations, and (relative) Hochschild homology, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args)]
struct Common {
    /// Extension description file (.qext); omit when using --fixture
    spec: Option<PathBuf>,
    /// Use a built-in fixture by name
    #[arg(long)]
    fixture: Option<String>,
    /// Ground field: Q, F (= F10007) or F followed by a prime; overrides the spec file
    #[arg(long)]
    field: Option<String>,
    /// Top homology degree for tables
    #[arg(long)]
    max_degree: Option<usize>,
    /// Search bound for tensor powers and projective dimensions
    #[arg(long)]
    bound: Option<usize>,
    /// Write the full JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Boundedness and splitness of the extension
    Check(Common),
    /// Hochschild homology of B and A and the relative theory
    Homology(Common),
    /// Global dimensions with the comparison bounds
    Gldim(Common),
    /// Module and ideal complements of B in A
    Split(Common),
    /// Extract a presentation from the built algebra and round-trip it
    Present(Common),
    /// Everything above
    All(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (analysis, common) = match &cli.command {
        Cmd::Check(c) => (Analysis::Check, c),
        Cmd::Homology(c) => (Analysis::Homology, c),
        Cmd::Gldim(c) => (Analysis::Gldim, c),
        Cmd::Split(c) => (Analysis::Split, c),
        Cmd::Present(c) => (Analysis::Present, c),
        Cmd::All(c) => (Analysis::All, c),
    };
    match run(analysis, common) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(analysis: Analysis, common: &Common) -> anyhow::Result<u8> {
    let (text, fixture_name) = match (&common.spec, &common.fixture) {
        (Some(path), None) => (std::fs::read_to_string(path)?, None),
        (None, Some(name)) => (
            fixtures::fixture_text(name)?.to_string(),
            Some(name.clone()),
        ),
        (Some(_), Some(_)) => anyhow::bail!("pass either a spec file or --fixture, not both"),
        (None, None) => anyhow::bail!(
            "pass a spec file or --fixture <name>; available fixtures: {}",
            fixtures::fixture_names().join(", ")
        ),
    };
    let force_field = match &common.field {
        Some(f) => Some(Field::parse(f)?),
        None => None,
    };
    let mut spec = parse_spec_with(&text, force_field)?;
    if let Some(d) = common.max_degree {
        spec.limits.max_degree = d;
    }
    if let Some(b) = common.bound {
        spec.limits.max_tensor_power = b;
        spec.limits.max_pd = b;
    }
    let report = quext_core::run(analysis, spec, &text, fixture_name)?;
    print!("{}", report.summary());
    if let Some(path) = &common.json {
        std::fs::write(path, report.to_json())?;
        eprintln!("report written to {}", path.display());
    }
    Ok(report.exit_code() as u8)
}
