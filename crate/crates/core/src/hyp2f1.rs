//! Double precision Gauss hypergeometric function on real arguments.
//!
//! Arguments in `[0, Z_DIRECT_MAX]` are summed term by term. Negative
//! arguments go through the Pfaff transformation
//! `2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))`, which lands in `(0, 1)`.
//! Nothing in `(Z_DIRECT_MAX, 1)` is supported; those requests are rejected.

use crate::error::{Error, Result};

pub const Z_DIRECT_MAX: f64 = 0.9975;
pub const TERM_CAP: usize = 500_000;

const STOP_RELATIVE: f64 = 1e-17;
const STOP_RUN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Hyp2F1Params {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let p = Self { a, b, c };
        p.check()?;
        Ok(p)
    }

    pub fn swapped(self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            c: self.c,
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::Domain {
                z: f64::NAN,
                reason: "parameters must be finite",
            });
        }
        if self.c <= 0.0 && self.c == self.c.floor() {
            return Err(Error::PochhammerPole {
                c: self.c.to_string(),
                n: (-self.c) as usize + 1,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesDiagnostics {
    pub value: f64,
    pub terms_used: usize,
    /// Absolute bound on the neglected tail.
    pub error_estimate: f64,
}

/// Limits for the series evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub z_direct_max: f64,
    pub term_cap: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            z_direct_max: Z_DIRECT_MAX,
            term_cap: TERM_CAP,
        }
    }
}

impl SeriesConfig {
    pub fn eval(&self, p: Hyp2F1Params, z: f64) -> Result<f64> {
        p.check()?;
        if z.is_nan() {
            return Err(Error::Domain {
                z,
                reason: "argument is NaN",
            });
        }
        if z >= 1.0 {
            return Err(Error::Domain {
                z,
                reason: "z >= 1 is outside the unit disc",
            });
        }
        if z < 0.0 {
            self.pfaff(p, z)
        } else {
            self.direct(p, z).map(|d| d.value)
        }
    }

    pub fn direct(&self, p: Hyp2F1Params, z: f64) -> Result<SeriesDiagnostics> {
        p.check()?;
        if !(0.0..=self.z_direct_max).contains(&z) {
            return Err(Error::Domain {
                z,
                reason: "direct series needs 0 <= z <= z_direct_max",
            });
        }
        if z == 0.0 {
            return Ok(SeriesDiagnostics {
                value: 1.0,
                terms_used: 1,
                error_estimate: 0.0,
            });
        }

        let Hyp2F1Params { a, b, c } = p;
        let mut term = 1.0_f64;
        let mut sum = 1.0_f64;
        let mut run = 0;
        let mut n = 0usize;
        while n + 1 < self.term_cap {
            let k = n as f64;
            let next = term * ((a + k) * (b + k)) / ((c + k) * (k + 1.0)) * z;
            let ratio = if term != 0.0 { (next / term).abs() } else { 0.0 };
            term = next;
            sum += term;
            n += 1;
            if term.abs() <= STOP_RELATIVE * sum.abs() {
                run += 1;
                if run == STOP_RUN {
                    let tail = if ratio < 1.0 {
                        term.abs() * ratio / (1.0 - ratio)
                    } else {
                        f64::INFINITY
                    };
                    return Ok(SeriesDiagnostics {
                        value: sum,
                        terms_used: n + 1,
                        error_estimate: tail,
                    });
                }
            } else {
                run = 0;
            }
        }
        Err(Error::Convergence {
            z,
            terms: self.term_cap,
        })
    }

    /// Pfaff transformation for `z < 0`. The exponent is taken from the
    /// smaller of the two upper parameters so the result does not depend on
    /// their order.
    pub fn pfaff(&self, p: Hyp2F1Params, z: f64) -> Result<f64> {
        if z.is_nan() || z >= 0.0 {
            return Err(Error::Domain {
                z,
                reason: "Pfaff branch needs z < 0",
            });
        }
        let p = if p.b < p.a { p.swapped() } else { p };
        let w = z / (z - 1.0);
        let inner = Hyp2F1Params {
            a: p.a,
            b: p.c - p.b,
            c: p.c,
        };
        let d = self.direct(inner, w)?;
        Ok((1.0 - z).powf(-p.a) * d.value)
    }
}

/// `2F1(a, b; c; z)` for real `z < 1` with the default limits.
pub fn hyp2f1(p: Hyp2F1Params, z: f64) -> Result<f64> {
    SeriesConfig::default().eval(p, z)
}

pub fn hyp2f1_series_direct(p: Hyp2F1Params, z: f64) -> Result<SeriesDiagnostics> {
    SeriesConfig::default().direct(p, z)
}

pub fn pfaff_eval(p: Hyp2F1Params, z: f64) -> Result<f64> {
    SeriesConfig::default().pfaff(p, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, c: f64) -> Hyp2F1Params {
        Hyp2F1Params::new(a, b, c).unwrap()
    }

    #[test]
    fn zero_argument_is_one() {
        let d = hyp2f1_series_direct(p(0.5, 0.5, 1.0), 0.0).unwrap();
        assert_eq!(d.value, 1.0);
        assert_eq!(d.terms_used, 1);
        assert_eq!(hyp2f1(p(3.1, -2.2, 0.4), 0.0).unwrap(), 1.0);
    }

    #[test]
    fn log_closed_form() {
        let v = hyp2f1(p(1.0, 1.0, 2.0), 0.5).unwrap();
        assert!((v - 2.0 * std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn terminating_series() {
        // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        let (b, c, z) = (0.7, 1.3, 0.4);
        let want = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert!((hyp2f1(p(-2.0, b, c), z).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            hyp2f1(p(0.5, 0.5, 1.0), 1.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            hyp2f1(p(0.5, 0.5, 1.0), 0.998),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            Hyp2F1Params::new(1.0, 1.0, -2.0),
            Err(Error::PochhammerPole { .. })
        ));
        // maps to w = 400/401 > cap
        assert!(matches!(
            hyp2f1(p(0.5, 0.5, 1.0), -400.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn term_cap_reports_convergence_error() {
        let cfg = SeriesConfig {
            z_direct_max: Z_DIRECT_MAX,
            term_cap: 100,
        };
        let err = cfg.direct(p(0.5, 0.5, 1.0), 0.99).unwrap_err();
        assert_eq!(err, Error::Convergence { z: 0.99, terms: 100 });
    }

    #[test]
    fn pfaff_at_minus_one_matches_direct_substitution() {
        let lhs = pfaff_eval(p(0.5, 0.5, 0.75), -1.0).unwrap();
        let rhs = 2f64.powf(-0.5) * hyp2f1_series_direct(p(0.5, 0.25, 0.75), 0.5).unwrap().value;
        assert!((lhs - rhs).abs() < 1e-15);
    }

    #[test]
    fn pfaff_rejects_nonnegative() {
        assert!(pfaff_eval(p(0.5, 0.5, 0.75), 0.1).is_err());
    }

    #[test]
    fn error_estimate_is_nonnegative() {
        let d = hyp2f1_series_direct(p(0.25, 0.5, 0.75), 0.6561).unwrap();
        assert!(d.error_estimate >= 0.0);
        assert!(d.error_estimate < 1e-15);
        assert!(d.terms_used <= TERM_CAP);
    }
}
