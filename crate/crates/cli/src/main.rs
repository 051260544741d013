//! `localstd`: Milnor and Tyurina numbers, standard bases and the simple
//! singularity toolkit from the command line.

mod commands;
mod error;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "localstd", version, about = "Local and global Milnor/Tyurina numbers and simple singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Variables, comma separated. Required for polynomial input.
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Parameters, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub params: Vec<String>,
    /// Monomial order, e.g. `grevlex`, `neg-lex`, `neg-grevlex/z,y`, `weighted:2,3:grevlex`.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximal number of reduction steps.
    #[arg(long, global = true, env = "LOCALSTD_STEP_BUDGET")]
    pub step_budget: Option<u64>,
    /// Seed for witness sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Read the input from a file instead of the command line.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Add wall-clock time to the JSON timing block.
    #[arg(long, global = true)]
    pub wall_clock: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Parse and print a polynomial in canonical form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Groebner basis of a list of polynomials (global order).
    Groebner {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Standard basis of a list of polynomials (local order).
    StdBasis {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Milnor number at the origin.
    Milnor {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Tyurina number at the origin.
    Tyurina {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Total Milnor number.
    PolyMilnor {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Total Tyurina number.
    PolyTyurina {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Global Milnor data, then the local number from the global basis.
    MilnorFused {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
        /// Order for the global stage.
        #[arg(long)]
        global_order: Option<String>,
    },
    /// Tyurina analogue of `milnor-fused`.
    TyurinaFused {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
        #[arg(long)]
        global_order: Option<String>,
    },
    /// A/D/E type of the germ at the origin.
    Classify {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Versal deformation from the Tyurina basis.
    Deform {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
    /// Verify every stratum of a class catalog at a seeded witness.
    Strata { class: String },
    /// Verify one stratum at a given or seeded witness.
    VerifyStratum {
        class: String,
        name: String,
        /// Values such as `v0=1,v1=-2/3,v2=2*I`.
        #[arg(long)]
        witness: Option<String>,
    },
    /// One-parameter family realizing an adjacency such as `A5<-E6`.
    Adjacency {
        kind: String,
        /// Evaluate and classify the member at this value.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, default_value_t = 2)]
        ambient: usize,
    },
    /// Weight vector and Milnor-Orlik number of a quasi-homogeneous polynomial.
    MilnorOrlik {
        #[arg(allow_hyphen_values = true)]
        input: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(CliError { code, message }) => {
            eprintln!("error: {}", message);
            ExitCode::from(code)
        }
    }
}
