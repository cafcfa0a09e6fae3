use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use coxeter_quotients_cli::*;

#[derive(Parser)]
#[command(name = "coxq", version, about = "Quivers, surface triangulations and their Coxeter quotients")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Node budget for searches (flip graphs, homomorphism counting).
    #[arg(long, default_value_t = Budgets::default().nodes, global = true)]
    budget_nodes: usize,
    /// Coset budget for Todd-Coxeter enumeration.
    #[arg(long, default_value_t = Budgets::default().cosets, global = true)]
    budget_cosets: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mutate a quiver at vertex k (0-based).
    Mutate { quiver: PathBuf, k: usize },
    /// Annotated quiver of a triangulation.
    QuiverOf { triangulation: PathBuf },
    /// Presentation of a quiver, triangulation or presentation file.
    Present { input: PathBuf },
    /// Flip an arc of a triangulation.
    Flip { triangulation: PathBuf, arc: usize },
    /// Loop-free flip graph with invariants at every node.
    Flipgraph {
        triangulation: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Remove digons until none are left.
    Associate {
        triangulation: PathBuf,
        #[arg(long)]
        remove_free: bool,
    },
    /// Regluing moves on polygon gluings.
    Reglue {
        #[arg(long, conflicts_with = "gluing", required_unless_present = "gluing")]
        genus: Option<usize>,
        #[arg(long)]
        gluing: Option<PathBuf>,
    },
    /// Coset enumeration, optionally over a subgroup (1-based words).
    ToddCoxeter {
        input: PathBuf,
        #[arg(long)]
        subgroup: Vec<String>,
    },
    /// Count homomorphisms into finite targets (S3, S4, D8, trivial or a file).
    Homcount {
        input: PathBuf,
        #[arg(long)]
        target: Vec<String>,
    },
    /// Check the map from the punctured annulus group onto affine D4.
    ExampleD4 {
        #[arg(long)]
        corrupt: bool,
    },
    /// Rigid loop-free triangulations from one-polygon gluings.
    Counterexample {
        #[arg(long, default_value_t = 2)]
        genus: usize,
        #[arg(long)]
        gluing: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let b = Budgets {
        nodes: cli.budget_nodes,
        cosets: cli.budget_cosets,
    };
    match &cli.command {
        Command::Mutate { quiver, k } => cmd_mutate(quiver, *k),
        Command::QuiverOf { triangulation } => cmd_quiver_of(triangulation),
        Command::Present { input } => cmd_present(input),
        Command::Flip { triangulation, arc } => cmd_flip(triangulation, *arc),
        Command::Flipgraph { triangulation, dot } => cmd_flipgraph(triangulation, b, *dot),
        Command::Associate {
            triangulation,
            remove_free,
        } => cmd_associate(triangulation, *remove_free),
        Command::Reglue { genus, gluing } => match (genus, gluing) {
            (_, Some(g)) => cmd_reglue_file(g),
            (Some(g), None) => cmd_reglue_genus(*g),
            (None, None) => unreachable!("clap requires one of them"),
        },
        Command::ToddCoxeter { input, subgroup } => cmd_todd_coxeter(input, subgroup, b),
        Command::Homcount { input, target } => cmd_homcount(input, target, b),
        Command::ExampleD4 { corrupt } => cmd_example_d4(*corrupt),
        Command::Counterexample { genus, gluing } => cmd_counterexample(*genus, gluing.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = out.render(cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(3);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
