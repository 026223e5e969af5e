//! `cqg`: exact cocycle, generating-functional and cohomology checks from JSON.

mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cqg", version, about = "Exact cocycles, Schürmann triples and Hochschild H¹/H² on compact quantum group algebras")]
pub struct Cli {
    /// Seed for every sampled quantity
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Longest word used in sampled or exhaustive checks
    #[arg(long, global = true, default_value_t = 3)]
    pub max_word_len: usize,
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate a presentation, representation, cocycle, functional or 2-cocycle
    Validate {
        #[arg(long)]
        input: String,
    },
    /// Run one of the criteria on an input file
    Check {
        what: CheckKind,
        #[arg(long)]
        input: String,
    },
    /// Print the H² basis family of U_d⁺ or O_d⁺
    Basis {
        #[arg(long, value_parser = ["u_plus", "o_plus"])]
        kind: String,
        #[arg(long)]
        d: usize,
    },
    /// Construct a primitive φ with ∂φ = c
    Primitive {
        #[arg(long)]
        input: String,
    },
    /// Coordinates of a 2-cocycle class in the basis family
    ClassCoords {
        #[arg(long)]
        input: String,
    },
    /// Exact basis of the cocycle space over a representation (ε·id for a bare presentation)
    SolveCocycles {
        #[arg(long)]
        input: String,
    },
    /// Run every reproduction scenario
    ReproducePaper,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Gf,
    Lk,
    Real,
    Defect,
    H1,
    Psd,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::run(&cli);
    let mut stdout = io::stdout().lock();
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = if cli.json {
        writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"))
    } else {
        write!(stdout, "{}", out.text)
    };
    ExitCode::from(out.code)
}
