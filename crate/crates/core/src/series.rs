//! Truncated power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] of order `N` knows the coefficients of `x^0..=x^N`
//! exactly. Binary operations truncate to the smaller order of the operands.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as a normalized rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Always `p/q`, including integers.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = int(c);
        }
        s
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^power`, zero when `power > order`.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = f0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let fj = &self.coeffs[j];
                if !fj.is_zero() {
                    acc += fj * &out[k - j];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(x))`, by Horner's rule over the series ring.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Exact rational value of the truncated polynomial at `x`.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// Coefficients of `(1 + g(x))^exponent` through `order`.
pub fn binomial_series(
    exponent: &Rational,
    g: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries> {
    if !g.coeffs[0].is_zero() {
        return Err(Error::NonZeroInnerConstant);
    }
    let n = order.min(g.order());
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut c = Rational::one();
    coeffs.push(c.clone());
    for k in 1..=n {
        let k_r = int(k as i64);
        c = c * (exponent - &k_r + Rational::one()) / k_r;
        coeffs.push(c.clone());
    }
    TruncatedSeries::from_coeffs(coeffs).compose(g)
}

/// Gauss series coefficients `(a)_n (b)_n / ((c)_n n!)` for `n = 0..=order`.
pub fn hyp2f1_series_coeffs(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut t = Rational::one();
    coeffs.push(t.clone());
    for n in 0..order {
        let k = int(n as i64);
        let den = (c + &k) * (&k + Rational::one());
        if den.is_zero() {
            return Err(Error::PochhammerPole {
                c: rational_to_string(c),
                n: n + 1,
            });
        }
        t = t * (a + &k) * (b + &k) / den;
        coeffs.push(t.clone());
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let coef = if n > 0 && mag.is_one() {
                String::new()
            } else if mag.is_integer() || n == 0 {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match n {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
