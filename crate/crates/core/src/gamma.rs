//! Double precision gamma function and the constants mu and eta.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

// g = 7, n = 9 coefficient set (Godfrey), the one shipped with GSL.
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for real arguments.
///
/// Uses the Lanczos approximation for `x >= 0.5` and the reflection formula
/// `Γ(x)Γ(1-x) = π / sin(πx)` below that.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain {
            z: x,
            reason: "gamma argument must be finite",
        });
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(x));
    }
    let value = if x < 0.5 {
        let s = (PI * x).sin();
        PI / (s * lanczos(1.0 - x))
    } else {
        lanczos(x)
    };
    if value.is_infinite() {
        return Err(Error::Overflow(x));
    }
    Ok(value)
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let series = LANCZOS_COEFFS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_COEFFS[0], |acc, (i, &p)| acc + p / (x + i as f64));
    let t = x + LANCZOS_G + 0.5;
    // split the power so large arguments do not overflow before the exp(-t) factor
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * series
}

/// The pair `mu = Γ(1/2)/Γ(3/4)²`, `eta = Γ(3/4)²/Γ(1/2)³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamanujanConstants {
    pub mu: f64,
    pub eta: f64,
}

pub fn ramanujan_constants() -> RamanujanConstants {
    // both arguments are fixed and far from poles
    let g_half = PI.sqrt();
    let g34 = gamma(0.75).expect("gamma(3/4) is finite");
    let g34_sq = g34 * g34;
    RamanujanConstants {
        mu: g_half / g34_sq,
        eta: g34_sq / (g_half * g_half * g_half),
    }
}
