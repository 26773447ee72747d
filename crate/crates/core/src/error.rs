use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma has a pole at {0}")]
    Pole(f64),

    #[error("gamma({0}) overflows the floating range")]
    Overflow(f64),

    #[error("argument {z} outside the supported domain: {reason}")]
    Domain { z: f64, reason: &'static str },

    #[error("series at z = {z} did not converge within {terms} terms")]
    Convergence { z: f64, terms: usize },

    #[error("Pochhammer symbol ({c})_{n} vanishes; lower parameter is a nonpositive integer")]
    PochhammerPole { c: String, n: usize },

    #[error("series has a zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("inner series of a composition must have a zero constant term")]
    NonZeroInnerConstant,

    #[error("not exactly expandable: {0}")]
    NotExactlyExpandable(String),

    #[error("invalid prefactor: {0}")]
    InvalidPrefactor(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
