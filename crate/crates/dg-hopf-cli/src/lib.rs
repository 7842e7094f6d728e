//! `dghopf` — a command-line interface to the dg-hopf computer algebra
//! library.
//!
//! The CLI reads *bundles* (JSON files declaring graded spaces, maps, and
//! the structures they form — see [`bundle`]) and runs exact-arithmetic
//! constructions and verifications on them. Exit codes:
//!
//! * `0` — the command ran and every checked identity holds;
//! * `1` — the command ran but some identity failed; the report names the
//!   check and a witnessing basis element;
//! * `2` — the request never got that far: usage errors, unreadable files,
//!   malformed bundles, or names that resolve to nothing.

pub mod bundle;
pub mod commands;
pub mod corpus;
pub mod output;

use bundle::parse_bundle;
use clap::{Parser, Subcommand};
use commands::{Kind, RunError};
use output::Format;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "dghopf",
    version,
    about = "Exact computer algebra for differential graded Hopf algebras",
    after_help = "Exit codes: 0 = all checks passed, 1 = a check failed (see the report), 2 = usage or parse error."
)]
pub struct Cli {
    /// Output format for reports and result maps.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Re-check the axioms of the structures declared in a bundle.
    Verify {
        /// Path to the bundle file.
        bundle: PathBuf,
        /// Which structure kind to verify.
        #[arg(long, value_enum, default_value_t = Kind::All)]
        kind: Kind,
    },
    /// Solve for the antipode of the declared bialgebra and verify it.
    Antipode { bundle: PathBuf },
    /// Convolution product of two or more group elements.
    Star {
        bundle: PathBuf,
        /// Names of the element maps, multiplied left to right.
        #[arg(num_args = 2..)]
        elements: Vec<String>,
    },
    /// Exponentiate a tangent element into the convolution group.
    Exp {
        bundle: PathBuf,
        /// Name of the tangent element map.
        element: String,
    },
    /// Logarithm of a group element into the convolution Lie algebra.
    Ln {
        bundle: PathBuf,
        /// Name of the group element map.
        element: String,
    },
    /// Lie bracket of two tangent elements.
    Bracket {
        bundle: PathBuf,
        left: String,
        right: String,
    },
    /// Search for a polynomial homotopy between two group elements.
    Homotopy {
        bundle: PathBuf,
        /// Name of the starting group element.
        from: String,
        /// Name of the ending group element.
        to: String,
        /// Maximal t-degree of the generator ξ(t).
        #[arg(long, default_value_t = 1)]
        flow_degree: usize,
    },
    /// Rigid dual of the first declared comodule, with triangle identities.
    Dualize { bundle: PathBuf },
    /// Tannakian correspondences: comodule ↔ representation and
    /// element ↔ tensor-natural endomorphism.
    Reconstruct {
        bundle: PathBuf,
        /// Name of the element map α : B → A.
        element: String,
        /// How many tensor-product probe pairs to test naturality on.
        #[arg(long, default_value_t = 4)]
        probe_pairs: usize,
    },
    /// Smallest subcomodule containing a basis vector of the first
    /// declared comodule.
    Subcomodule {
        bundle: PathBuf,
        /// Basis label of the generating vector.
        generator: String,
    },
    /// Strong deformation retract onto cohomology, with the induced
    /// structure on H.
    Cohomology { bundle: PathBuf },
}

impl Command {
    fn bundle_path(&self) -> &PathBuf {
        match self {
            Command::Verify { bundle, .. }
            | Command::Antipode { bundle }
            | Command::Star { bundle, .. }
            | Command::Exp { bundle, .. }
            | Command::Ln { bundle, .. }
            | Command::Bracket { bundle, .. }
            | Command::Homotopy { bundle, .. }
            | Command::Dualize { bundle }
            | Command::Reconstruct { bundle, .. }
            | Command::Subcomodule { bundle, .. }
            | Command::Cohomology { bundle } => bundle,
        }
    }
}

/// Run a parsed invocation, printing to stdout/stderr, and return the
/// process exit code.
pub fn run(cli: Cli) -> u8 {
    let path = cli.command.bundle_path();
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("cannot read `{}`: {e}", path.display());
            return 2;
        }
    };
    let bundle = match parse_bundle(&text) {
        Ok(bundle) => bundle,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let outcome = match &cli.command {
        Command::Verify { kind, .. } => commands::verify(&bundle, *kind),
        Command::Antipode { .. } => commands::antipode(&bundle),
        Command::Star { elements, .. } => commands::star_cmd(&bundle, elements),
        Command::Exp { element, .. } => commands::exp_cmd(&bundle, element),
        Command::Ln { element, .. } => commands::ln_cmd(&bundle, element),
        Command::Bracket { left, right, .. } => commands::bracket_cmd(&bundle, left, right),
        Command::Homotopy { from, to, flow_degree, .. } => {
            commands::homotopy_cmd(&bundle, from, to, *flow_degree)
        }
        Command::Dualize { .. } => commands::dualize_cmd(&bundle),
        Command::Reconstruct { element, probe_pairs, .. } => {
            commands::reconstruct_cmd(&bundle, element, *probe_pairs)
        }
        Command::Subcomodule { generator, .. } => commands::subcomodule_cmd(&bundle, generator),
        Command::Cohomology { .. } => commands::cohomology_cmd(&bundle),
    };
    match outcome {
        Ok(output) => {
            print!("{}", output.render(cli.format));
            if output.passed() { 0 } else { 1 }
        }
        Err(RunError::Bundle(e)) => {
            eprintln!("{e}");
            2
        }
        Err(RunError::Lib(e)) => {
            eprintln!("check failed: {e}");
            1
        }
    }
}
