//! `qmap`: verification suites, classification tables, weight tables and
//! tensor product decompositions. Exit codes: 0 when every check passes,
//! 1 when a check fails, 2 for usage errors and invalid input.

mod jobs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qmap", version, about = "Exact computations with map queer Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites.
    Verify {
        #[arg(value_parser = ["superalg", "queer", "cartan", "hw", "products", "all"])]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate evaluation modules over a catalog and certify them.
    Classify {
        /// JSON algebra file, or a preset name (complex, two_point, four_point, dual).
        #[arg(long)]
        algebra: String,
        /// JSON group action file; omit for the untwisted case.
        #[arg(long)]
        group: Option<PathBuf>,
        /// Catalog of q(n)-modules: trivial, adjoint, V(a1,...,an).
        #[arg(long, default_value = "adjoint")]
        catalog: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Truncation depth for catalog entries; defaults to n(n+1).
        #[arg(long)]
        depth: Option<usize>,
        /// Keep only functionals supported on at most this many points.
        #[arg(long)]
        max_support: Option<usize>,
    },
    /// Weight table of the simple quotient V(ψ).
    Dims {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// JSON functional file.
        #[arg(long)]
        psi: PathBuf,
        /// Truncation depth; defaults to n(n+1).
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Irreducible tensor product of modules: trivial, adjoint, V(a1,...,an),
    /// H(l1,...,ln) over the Cartan subalgebra, Q(m), M(m|k).
    Decompose {
        #[arg(required = true, num_args = 2..)]
        modules: Vec<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        depth: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Verify { suite, seed } => jobs::verify(suite, *seed),
        Command::Classify { algebra, group, catalog, n, depth, max_support } => {
            jobs::classify(algebra, group.as_deref(), catalog, *n, *depth, *max_support)
        }
        Command::Dims { n, psi, depth } => jobs::dims(*n, psi, *depth),
        Command::Decompose { modules, n, depth } => jobs::decompose(modules, *n, *depth),
    };
    let out = match res {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Text => out.text,
        Format::Structured => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
    };
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(if out.ok { 0 } else { 1 })
}
