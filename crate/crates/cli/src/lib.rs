//! Command-line front end: argument parsing, datum resolution, and text or
//! JSON reports for every library operation.

mod commands;
mod document;

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use modlang::lattice::IntVec;
use modlang::rootdatum::{RootDatum, DEFAULT_WEYL_CAP};
use modlang::satake::DEFAULT_TREE_DEPTH_CAP;
use num_rational::BigRational;

pub use commands::run;
pub use document::{emit_datum, parse_datum, DatumDocument, LocatedViolation, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

/// Environment variable that overrides the default Weyl-group size cap.
pub const WEYL_CAP_ENV: &str = "MODLANG_MAX_WEYL";

pub const DEFAULT_HEIGHT_CAP: i64 = 6;

#[derive(Debug, Parser)]
#[command(name = "modlang", version, about = "Root data, dual data, Satake images and R-factors")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest Weyl group to enumerate (default 10^6, or $MODLANG_MAX_WEYL).
    #[arg(long, global = true)]
    pub weyl_cap: Option<usize>,

    /// Largest coweight height (sum of absolute coordinates) accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_HEIGHT_CAP)]
    pub height_cap: i64,

    /// Deepest tree ball built by the rank-one oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_TREE_DEPTH_CAP)]
    pub tree_depth_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

/// `DATUM` is a builtin name (SL2, PGL2, GL2, GL3, SL3, PGL3, Sp4, SO5), a
/// path to a JSON datum document, or `-` for standard input.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical JSON document of a datum.
    Datum { datum: String },
    /// The dual datum.
    Dual { datum: String },
    /// Positive roots and coroots.
    Roots { datum: String },
    /// Weyl group order and longest element.
    Weyl { datum: String },
    /// Weights of type ρ.
    Rho { datum: String },
    /// The extended datum, with an isomorphism to a builtin when one exists.
    Extend { datum: String },
    /// The enhancement ε.
    Epsilon { datum: String },
    /// The dual data (i, p, j, r) and the quotient decomposition.
    Dualdata { datum: String },
    /// The Satake image of a basis element.
    Satake {
        datum: String,
        /// Comma-separated coordinates, e.g. `1,0`.
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
    },
    /// Structure polynomials of e_λ · e_μ.
    Mult {
        datum: String,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Compare PGL2 structure polynomials with path counts on the tree.
    Oracle {
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 4)]
        max_height: usize,
    },
    /// A local R-factor.
    Rfactor {
        datum: String,
        /// Weights in the extended lattice, `;`-separated, e.g. `1,1;-1,0`.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Treat the weights as seeds and take the sum of their Weyl orbits.
        #[arg(long)]
        orbits: bool,
        /// Parameter values on the basis of Y, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        values: String,
        #[arg(long)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
    },
    /// A partial Euler product over unramified places.
    Euler {
        /// Datum; omit together with `--trivial` for the trivial group.
        datum: Option<String>,
        #[arg(long)]
        trivial: bool,
        #[arg(long, conflicts_with = "places")]
        primes_below: Option<u64>,
        /// Comma-separated residue cardinalities.
        #[arg(long)]
        places: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        /// Representation weights (default: the trivial representation).
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        #[arg(long)]
        orbits: bool,
        /// Base values used at every place (default: all 1).
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
    },
    /// Split a parameter by a chosen square root of q.
    Split {
        datum: String,
        #[arg(long)]
        q: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        values: String,
        #[arg(long, value_enum, default_value_t = Sign::Plus, allow_hyphen_values = true)]
        sqrt_sign: Sign,
    },
}

/// A failure with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        CliError { code: EXIT_VALIDATION, message: message.into() }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        CliError { code: EXIT_RESOURCE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<modlang::Error> for CliError {
    fn from(e: modlang::Error) -> Self {
        use modlang::Error as E;
        let code = match &e {
            E::ResourceCap { .. } => EXIT_RESOURCE,
            E::Pole { .. } => EXIT_DOMAIN,
            E::NotDivisible | E::Internal(_) => EXIT_USAGE,
            _ => EXIT_VALIDATION,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::validation(e.to_string())
    }
}

/// What a command produced, in both renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("reports serialize"),
        }
    }
}

impl Cli {
    /// The Weyl cap from the flag, else the environment, else the default.
    pub fn effective_weyl_cap(&self) -> Result<usize, CliError> {
        if let Some(c) = self.weyl_cap {
            return positive(c);
        }
        match std::env::var(WEYL_CAP_ENV) {
            Ok(s) => s
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("{WEYL_CAP_ENV}={s} is not a positive integer")))
                .and_then(positive),
            Err(_) => Ok(DEFAULT_WEYL_CAP),
        }
    }
}

fn positive(c: usize) -> Result<usize, CliError> {
    if c == 0 {
        Err(CliError::usage("caps must be positive"))
    } else {
        Ok(c)
    }
}

/// Builtin name, JSON file path, or `-` for standard input.
pub fn resolve_datum(source: &str) -> Result<RootDatum, CliError> {
    if let Some(d) = RootDatum::builtin(source) {
        return Ok(d);
    }
    if source == "trivial" {
        return Ok(RootDatum::trivial());
    }
    let bytes = if source == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| CliError::usage(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read(source)
            .map_err(|e| CliError::usage(format!("'{source}' is neither a builtin datum nor a readable file ({e})")))?
    };
    Ok(parse_datum(&bytes)?)
}

/// `1,-2,0` → `(1, -2, 0)`; the empty string is the rank-0 vector.
pub fn parse_vector(s: &str) -> Result<IntVec, CliError> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(IntVec::zeros(0));
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::usage(format!("'{x}' is not an integer"))))
        .collect::<Result<Vec<_>, _>>()
        .map(IntVec::new)
}

/// `;`-separated vectors.
pub fn parse_vectors(s: &str) -> Result<Vec<IntVec>, CliError> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(parse_vector).collect()
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s.trim()).map_err(|_| CliError::usage(format!("'{s}' is not a rational number")))
}

pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>, CliError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(parse_rational).collect()
}
