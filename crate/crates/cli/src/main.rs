//! `twistcalc`: batch front end for the slope calculus, open book and braid
//! computations.
//!
//! Every command prints a short text view by default and a JSON envelope
//! `{"status", "command", "payload", "citations"}` with `--json`. Exit codes:
//! 0 ok, 2 parse error, 3 hypothesis violation, 4 internal failure.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use commands::Outcome;
use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "twistcalc",
    version,
    about = "Exact slope calculus for contact surgery on torus neighborhoods"
)]
struct Cli {
    /// Emit the JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply contact +-1 surgery along a leaf to a torus slope.
    Twist(TwistArgs),
    /// Contact +1 program taking an admissible surgery slope to the meridian.
    Reduce(ReduceArgs),
    /// Classify an admissible surgery slope on a standard neighborhood.
    Classify(ReduceArgs),
    /// The genus one, two boundary family of open books.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Braid closures.
    Braid {
        #[command(subcommand)]
        action: BraidAction,
    },
    /// Open books from a surface file or builtin surface.
    Openbook {
        #[command(subcommand)]
        action: OpenbookAction,
    },
}

#[derive(Args, Debug)]
pub struct TwistArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub on: String,
    #[arg(long, allow_hyphen_values = true)]
    pub along: String,
    /// `+1` or `-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub sign: String,
    #[arg(long, default_value_t = 1)]
    pub count: u64,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub slope: String,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    /// Boundary slope of the neighborhood, `n < a < n + 1`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub k1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: i64,
    /// Use the book with boundary B1 capped off.
    #[arg(long)]
    pub capped: bool,
}

#[derive(Subcommand, Debug)]
enum FamilyAction {
    Status {
        #[command(flatten)]
        params: FamilyArgs,
        /// Attracting fixed points per boundary of the pseudo-Anosov map.
        #[arg(long)]
        fixed_points: Option<u32>,
    },
    Fdtc {
        #[command(flatten)]
        params: FamilyArgs,
    },
    Homology {
        #[command(flatten)]
        params: FamilyArgs,
        /// Page-framed filling `NAME=p/q`, or a bare slope for B1.
        #[arg(long = "fill", allow_hyphen_values = true)]
        fill: Vec<String>,
    },
    TightSlopes {
        #[command(flatten)]
        params: FamilyArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "1/3")]
        a: String,
        /// Comma-separated surgery slopes on B1.
        #[arg(
            long,
            allow_hyphen_values = true,
            default_value = "-2,-1,-1/2,0,1/4,2/9,1/5"
        )]
        probe: String,
    },
}

#[derive(Subcommand, Debug)]
enum BraidAction {
    /// `|Alexander polynomial at -1|` of the closure.
    Det(BraidArgs),
    /// Number of closure components.
    Components(BraidArgs),
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    /// Words like `s1 s2^-1 ( s1 s2 )^3`.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum OpenbookAction {
    Homology {
        /// Path to a surface file, or one of `annulus`, `T`, `T-hat`.
        #[arg(long)]
        surface: String,
        /// Monodromy word; the rightmost letter acts first.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        /// Page-framed filling `NAME=p/q`.
        #[arg(long = "fill", allow_hyphen_values = true)]
        fill: Vec<String>,
    },
}

#[derive(Serialize)]
struct ErrorPayload<'a> {
    reason: error::Reason,
    message: &'a str,
}

#[derive(Serialize)]
struct Envelope<'a, P: Serialize> {
    status: &'a str,
    command: &'a str,
    payload: P,
    citations: &'a [String],
}

fn dispatch(command: &Command) -> (&'static str, Result<Outcome, CliError>) {
    match command {
        Command::Twist(a) => ("twist", commands::twist(a)),
        Command::Reduce(a) => ("reduce", commands::reduce(a)),
        Command::Classify(a) => ("classify", commands::classify(a)),
        Command::Family { action } => match action {
            FamilyAction::Status {
                params,
                fixed_points,
            } => (
                "family status",
                commands::family_status(params, *fixed_points),
            ),
            FamilyAction::Fdtc { params } => ("family fdtc", commands::family_fdtc(params)),
            FamilyAction::Homology { params, fill } => {
                ("family homology", commands::family_homology(params, fill))
            }
            FamilyAction::TightSlopes { params, a, probe } => (
                "family tight-slopes",
                commands::family_tight_slopes(params, a, probe),
            ),
        },
        Command::Braid { action } => match action {
            BraidAction::Det(a) => ("braid det", commands::braid_det(a)),
            BraidAction::Components(a) => ("braid components", commands::braid_components(a)),
        },
        Command::Openbook { action } => match action {
            OpenbookAction::Homology {
                surface,
                word,
                fill,
            } => (
                "openbook homology",
                commands::openbook_homology(surface, word, fill),
            ),
        },
    }
}

fn render<P: Serialize>(envelope: &Envelope<'_, P>) -> String {
    serde_json::to_string_pretty(envelope).expect("CLI payloads always serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, result) = dispatch(&cli.command);
    match result {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    render(&Envelope {
                        status: "ok",
                        command: name,
                        payload: &out.payload,
                        citations: &out.citations
                    })
                );
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let payload = ErrorPayload {
                    reason: e.reason,
                    message: &e.message,
                };
                println!(
                    "{}",
                    render(&Envelope {
                        status: "error",
                        command: name,
                        payload,
                        citations: &[]
                    })
                );
            } else {
                let reason = serde_json::to_value(e.reason).ok();
                let reason = reason.as_ref().and_then(|v| v.as_str()).unwrap_or("error");
                eprintln!("error ({reason}): {}", e.message);
            }
            ExitCode::from(e.reason.exit_code())
        }
    }
}
