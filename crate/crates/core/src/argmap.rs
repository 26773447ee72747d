//! Argument maps `x -> z(x)` fed into 2F1 by the identities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{binomial_series, int, Rational, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArgumentMapId {
    /// `x`
    Identity,
    /// `x^2`
    Square,
    /// `x^4`
    Fourth,
    /// `x^4 / (x^4 - 1)`
    FourthOverFourthMinusOne,
    /// `4x / (1 + x)^2`
    KummerQuadratic,
    /// `4x^2 / (1 + x^2)^2`
    KummerQuadraticSquared,
    /// `-x / (1 - x)`
    PfaffImage,
    /// `2x / (1 + x^2)`
    HalfAngle,
    /// `(1 + x) / 2`
    HalfShift,
    /// `1/2 + x / (1 + x^2)`
    HalfCentered,
}

impl ArgumentMapId {
    pub const ALL: [ArgumentMapId; 10] = [
        Self::Identity,
        Self::Square,
        Self::Fourth,
        Self::FourthOverFourthMinusOne,
        Self::KummerQuadratic,
        Self::KummerQuadraticSquared,
        Self::PfaffImage,
        Self::HalfAngle,
        Self::HalfShift,
        Self::HalfCentered,
    ];

    /// Maps whose value at `x = 0` is `1/2`; their 2F1 expansion has
    /// non-rational coefficients.
    pub fn is_half_centered(self) -> bool {
        matches!(self, Self::HalfShift | Self::HalfCentered)
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Self::Identity => x,
            Self::Square => x * x,
            Self::Fourth => x.powi(4),
            Self::FourthOverFourthMinusOne => {
                let x4 = x.powi(4);
                x4 / (x4 - 1.0)
            }
            Self::KummerQuadratic => 4.0 * x / ((1.0 + x) * (1.0 + x)),
            Self::KummerQuadraticSquared => {
                let d = 1.0 + x * x;
                4.0 * x * x / (d * d)
            }
            Self::PfaffImage => -x / (1.0 - x),
            Self::HalfAngle => 2.0 * x / (1.0 + x * x),
            Self::HalfShift => 0.5 * (1.0 + x),
            Self::HalfCentered => 0.5 + x / (1.0 + x * x),
        }
    }

    /// Exact expansion through `order`.
    pub fn series(self, order: usize) -> Result<TruncatedSeries> {
        let mono = |c: i64, p: usize| TruncatedSeries::monomial(int(c), p, order);
        let s = match self {
            Self::Identity => TruncatedSeries::x(order),
            Self::Square => mono(1, 2),
            Self::Fourth => mono(1, 4),
            Self::FourthOverFourthMinusOne => {
                let inv = binomial_series(&int(-1), &mono(-1, 4), order)?;
                &mono(-1, 4) * &inv
            }
            Self::KummerQuadratic => {
                let inv = binomial_series(&int(-2), &mono(1, 1), order)?;
                &mono(4, 1) * &inv
            }
            Self::KummerQuadraticSquared => {
                let inv = binomial_series(&int(-2), &mono(1, 2), order)?;
                &mono(4, 2) * &inv
            }
            Self::PfaffImage => {
                let inv = binomial_series(&int(-1), &mono(-1, 1), order)?;
                &mono(-1, 1) * &inv
            }
            Self::HalfAngle => {
                let inv = binomial_series(&int(-1), &mono(1, 2), order)?;
                &mono(2, 1) * &inv
            }
            Self::HalfShift | Self::HalfCentered => {
                return Err(Error::NotExactlyExpandable(format!(
                    "argument {self} is centered at 1/2"
                )))
            }
        };
        Ok(s)
    }

    pub fn eval_rational(self, x: &Rational) -> Rational {
        let one = Rational::from_integer(1.into());
        let two = &one + &one;
        let half = one.clone() / &two;
        match self {
            Self::Identity => x.clone(),
            Self::Square => x * x,
            Self::Fourth => x * x * x * x,
            Self::FourthOverFourthMinusOne => {
                let x4 = x * x * x * x;
                &x4 / (&x4 - &one)
            }
            Self::KummerQuadratic => {
                let d = &one + x;
                x * Rational::from_integer(4.into()) / (&d * &d)
            }
            Self::KummerQuadraticSquared => {
                let d = &one + x * x;
                x * x * Rational::from_integer(4.into()) / (&d * &d)
            }
            Self::PfaffImage => -x / (&one - x),
            Self::HalfAngle => x * &two / (&one + x * x),
            Self::HalfShift => (&one + x) * &half,
            Self::HalfCentered => half + x / (&one + x * x),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Identity => "x",
            Self::Square => "x^2",
            Self::Fourth => "x^4",
            Self::FourthOverFourthMinusOne => "x^4/(x^4-1)",
            Self::KummerQuadratic => "4x/(1+x)^2",
            Self::KummerQuadraticSquared => "4x^2/(1+x^2)^2",
            Self::PfaffImage => "-x/(1-x)",
            Self::HalfAngle => "2x/(1+x^2)",
            Self::HalfShift => "(1+x)/2",
            Self::HalfCentered => "1/2+x/(1+x^2)",
        }
    }
}

impl fmt::Display for ArgumentMapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArgumentMapId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::NotExactlyExpandable(format!("unknown argument map `{s}`")))
    }
}
