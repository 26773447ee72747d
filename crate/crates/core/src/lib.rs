//! Numeric and exact verification of Gauss hypergeometric identities.
//!
//! - [`gamma`]: double precision gamma function and the constants mu, eta
//! - [`hyp2f1`]: double precision 2F1 on real arguments
//! - [`series`]: truncated power series over exact rationals
//! - [`argmap`]: the argument maps the identities plug into 2F1
//! - [`registry`]: the encoded identities, exact and numeric verifiers
//! - [`report`], [`cli`]: report formats and the `hypident` front end

pub mod argmap;
pub mod cli;
pub mod error;
pub mod gamma;
pub mod hyp2f1;
pub mod registry;
pub mod report;
pub mod series;

pub use error::{Error, Result};
