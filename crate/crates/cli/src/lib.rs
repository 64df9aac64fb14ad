//! Library side of the `patchkit` command: patch files, mesh export and the
//! subcommand implementations.

pub mod commands;
pub mod mesh;
pub mod patchfile;

use patchkit::Error;

/// Exit code 2.
pub const EXIT_INPUT: u8 = 2;
/// Exit code 3.
pub const EXIT_DOMAIN: u8 = 3;
/// Exit code 4.
pub const EXIT_CONVERGENCE: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Convergence(_) => EXIT_CONVERGENCE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::OutsideDomain
            | Error::NotInHull
            | Error::AllZero
            | Error::PoleAtArgument
            | Error::NonPositiveArgument
            | Error::SamplingFailure => CliError::Domain(msg),
            Error::NotConverged { .. } | Error::NumericalUnderflow => CliError::Convergence(msg),
            Error::MissingControlPoints
            | Error::TooFewSamples { .. }
            | Error::DegenerateHull
            | Error::UnsupportedDimension(_)
            | Error::NonIntegerExponent
            | Error::NonLatticePoints
            | Error::WrongDimension
            | Error::DimensionMismatch { .. }
            | Error::Invalid(_) => CliError::Input(msg),
        }
    }
}

/// `x` rounded to 15 significant digits, printed without trailing zeros.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("float round trip");
    // adding 0.0 turns -0 into 0
    format!("{}", rounded + 0.0)
}

pub fn format_vector(v: &[f64]) -> String {
    v.iter().map(|x| format_number(*x)).collect::<Vec<_>>().join(" ")
}

/// Comma separated coordinates; each may be a decimal, `p/q` or an integer.
pub fn parse_point(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|c| {
            let c = c.trim();
            patchkit::rational::parse(c)
                .map(|q| patchkit::rational::to_f64(&q))
                .or_else(|_| c.parse::<f64>().map_err(|_| CliError::Input(format!("bad coordinate {c:?}"))))
        })
        .collect()
}
