use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("quadrature did not converge: partial value {partial:e}, achieved relative error {achieved:e} (requested {requested:e})")]
    NonConvergence {
        partial: f64,
        achieved: f64,
        requested: f64,
    },

    #[error("integrand is not integrable at the origin: leading exponent {exponent} <= -1")]
    NotIntegrable { exponent: f64 },

    #[error("logarithmic divergence at the origin cannot be continued (residual coefficient {coefficient:e})")]
    LogDivergence { coefficient: f64 },

    #[error("degenerate epsilon grid: {0}")]
    DegenerateGrid(String),

    #[error("invalid epsilon series: {0}")]
    InvalidSeries(String),

    #[error("unknown {kind} '{name}'; valid names: {valid}")]
    UnknownName {
        kind: &'static str,
        name: String,
        valid: String,
    },
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            domain,
        }
    }
}
