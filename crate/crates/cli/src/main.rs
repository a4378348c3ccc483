//! `stensor`: command-line front end for stochastic-tensors.
//!
//! Exit codes: 0 the property holds / feasible, 1 it fails / infeasible,
//! 2 usage or parse error, 3 resource guard, 4 internal integrity failure.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stochastic_tensors::diagonal::{enumerate_positive_diagonals_capped, DEFAULT_DIAGONAL_CAP};
use stochastic_tensors::latin::{enumerate_latin_squares_capped, DEFAULT_LATIN_CAP};
use stochastic_tensors::polytope::{
    enumerate_vertices_capped, membership_delta_capped, DEFAULT_MEMBERSHIP_CAP, DEFAULT_VERTEX_CAP,
};
use stochastic_tensors::sampling::random_convex_combination;
use stochastic_tensors::{
    bounds_report, check_vec_characterization, constraint_system, find_positive_diagonal,
    is_extreme, is_stochastic, latin_to_tensor, Error, Format, Tensor3,
};

#[derive(Parser, Debug)]
#[command(
    name = "stensor",
    version,
    about = "Exact computations on n x n x n stochastic tensors"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Raise the enumeration guard to this order.
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Omega,
    Delta,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reprint a tensor in the chosen format.
    Show { input: String },
    /// Stochasticity verdict, directly and through the line-vec.
    Check { input: String },
    /// Line-vectorization of a tensor.
    Vec { input: String },
    /// Find a positive diagonal (exit 1 if there is none).
    Diagonal {
        input: String,
        /// List every positive diagonal instead of the least one.
        #[arg(long)]
        all: bool,
    },
    /// Write a tensor as a convex combination of permutation tensors.
    Decompose { input: String },
    /// Extreme-point test.
    Extreme { input: String },
    /// Enumerate the vertices of the stochastic polytope.
    Vertices { n: usize },
    /// Vertex-count bounds.
    Bounds {
        /// Orders to report (default 1 2 3 4).
        n: Vec<u64>,
    },
    /// Enumerate Latin squares.
    Latin {
        n: usize,
        /// Print only the number of squares.
        #[arg(long)]
        count: bool,
    },
    /// Seeded random member of the stochastic or permutation-tensor polytope.
    Gen {
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Omega)]
        kind: Kind,
    },
    /// Export the line-sum constraint system as a text H-representation.
    Hrep {
        n: usize,
        /// All 3n^2 line equalities instead of the independent subset.
        #[arg(long)]
        full: bool,
    },
}

enum Failure {
    Usage(String),
    Guard(String),
    Integrity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Guard(e.to_string()),
            Error::Integrity(_) => Failure::Integrity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read_input(input: &str) -> Result<Tensor3, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else if input.trim_start().starts_with('{') || input.contains('\n') {
        input.to_string()
    } else {
        fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?
    };
    Ok(Tensor3::parse(&text)?)
}

fn run(cli: Cli) -> Outcome {
    let json = cli.format == OutputFormat::Json;
    match cli.command {
        Command::Show { input } => {
            let t = read_input(&input)?;
            Ok((t.serialize(cli.format.into()), true))
        }
        Command::Check { input } => {
            let t = read_input(&input)?;
            let direct = is_stochastic(&t);
            let via_vec = check_vec_characterization(&t);
            if direct != via_vec {
                return Err(Failure::Integrity(
                    "direct and line-vec stochasticity checks disagree".into(),
                ));
            }
            Ok((render::check(direct, via_vec, json), direct))
        }
        Command::Vec { input } => {
            let t = read_input(&input)?;
            Ok((render::line_vec(&t, json), true))
        }
        Command::Diagonal { input, all } => {
            let t = read_input(&input)?;
            let witnesses = if all {
                enumerate_positive_diagonals_capped(&t, cli.cap.unwrap_or(DEFAULT_DIAGONAL_CAP))?
            } else {
                find_positive_diagonal(&t).into_iter().collect()
            };
            let found = !witnesses.is_empty();
            Ok((render::diagonals(&t, &witnesses, all, json), found))
        }
        Command::Decompose { input } => {
            let t = read_input(&input)?;
            let cert = membership_delta_capped(&t, cli.cap.unwrap_or(DEFAULT_MEMBERSHIP_CAP))?;
            Ok((render::certificate(&cert, json), cert.feasible))
        }
        Command::Extreme { input } => {
            let t = read_input(&input)?;
            let extreme = is_extreme(&t)?;
            Ok((render::verdict("extreme", extreme, json), extreme))
        }
        Command::Vertices { n } => {
            let vs = enumerate_vertices_capped(n, cli.cap.unwrap_or(DEFAULT_VERTEX_CAP))?;
            Ok((render::vertices(&vs, json), true))
        }
        Command::Bounds { n } => {
            let orders = if n.is_empty() { vec![1, 2, 3, 4] } else { n };
            let cap = cli.cap.unwrap_or(DEFAULT_VERTEX_CAP);
            let mut reports = Vec::new();
            for order in orders {
                let count = if order >= 1 && order as usize <= cap {
                    Some(enumerate_vertices_capped(order as usize, cap)?.count() as u64)
                } else {
                    None
                };
                reports.push(bounds_report(order, count)?);
            }
            Ok((render::bounds(&reports, json), true))
        }
        Command::Latin { n, count } => {
            let squares = enumerate_latin_squares_capped(n, cli.cap.unwrap_or(DEFAULT_LATIN_CAP))?;
            let out = if count {
                format!("{}\n", squares.len())
            } else {
                render::latin_squares(&squares, json)
            };
            Ok((out, true))
        }
        Command::Gen { n, seed, kind } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let points: Vec<Tensor3> = match kind {
                Kind::Omega => {
                    enumerate_vertices_capped(n, cli.cap.unwrap_or(DEFAULT_VERTEX_CAP))?.vertices
                }
                Kind::Delta => {
                    enumerate_latin_squares_capped(n, cli.cap.unwrap_or(DEFAULT_LATIN_CAP))?
                        .iter()
                        .map(latin_to_tensor)
                        .collect()
                }
            };
            let t = random_convex_combination(&points, &mut rng);
            Ok((t.serialize(cli.format.into()), true))
        }
        Command::Hrep { n, full } => {
            if n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            Ok((constraint_system(n, !full).to_h_representation(), true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, holds)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if holds { 0 } else { 1 })
        }
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (2, m),
                Failure::Guard(m) => (3, m),
                Failure::Integrity(m) => (4, m),
            };
            eprintln!("stensor: {message}");
            ExitCode::from(code)
        }
    }
}
