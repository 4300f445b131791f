//! Command-line surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::records::Basis;

#[derive(Debug, Parser)]
#[command(
    name = "w2chi",
    version,
    about = "Exact S_n-equivariant weight-two Euler characteristics of M_{g,n}"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Which Laurent polynomial family to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LaurentKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Pipeline,
    Oracle,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of the (g, n) cells for g ≤ G, n ≤ N.
    Omega2 {
        #[arg(long, default_value_t = 10)]
        max_genus: u32,
        #[arg(long, default_value_t = 5)]
        max_points: u32,
        #[arg(long, value_enum, default_value_t = Basis::Schur)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight-two Euler characteristics of M_g (no marked points).
    ChiMg {
        #[arg(long, default_value_t = 50)]
        max_genus: u32,
        /// Check the period-four sign pattern for 23 ≤ g ≤ G.
        #[arg(long)]
        signs: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Genus-g Laurent polynomial A_g or C_g in the P_d = 1 + p_d.
    Laurent {
        #[arg(long, value_enum)]
        what: LaurentKind,
        #[arg(long)]
        genus: u32,
    },
    /// Run a verification suite; exit status 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_genus: u32,
        #[arg(long, default_value_t = 4)]
        max_points: u32,
    },
}
