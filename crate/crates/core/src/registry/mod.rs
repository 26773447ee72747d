//! Encoded identities and their verifiers.
//!
//! Every identity side is a sum of [`Hyp2F1Term`]s. A term is a scalar
//! (one of the basis symbols `1`, `mu`, `eta` times a rational, optionally
//! times a ratio of gamma values) times a product of algebraic prefactors
//! times `2F1(a, b; c; z(x))`.

mod builtin;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::argmap::ArgumentMapId;
use crate::error::{Error, Result};
use crate::gamma::{gamma, RamanujanConstants};
use crate::hyp2f1::{hyp2f1, Hyp2F1Params};
use crate::series::{binomial_series, hyp2f1_series_coeffs, int, Rational, TruncatedSeries};

pub use verify::{
    default_grid, expand_side_exact, run_expectations, verify_exact, verify_numeric, EntryOutcome,
    Mismatch, Mode, PointFailure, ResidualStats, RunSettings, Status, Summary, SymbolicCombination,
    Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Symbol {
    One,
    Mu,
    Eta,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::One, Symbol::Mu, Symbol::Eta];

    pub fn value(self, k: &RamanujanConstants) -> f64 {
        match self {
            Symbol::One => 1.0,
            Symbol::Mu => k.mu,
            Symbol::Eta => k.eta,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::One => "ONE",
            Symbol::Mu => "MU",
            Symbol::Eta => "ETA",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefactorBase {
    X,
    OnePlusXSquared,
    OneMinusXSquared,
    OnePlusX,
    OneMinusX,
    OneMinusXFourth,
}

impl PrefactorBase {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Self::X => x,
            Self::OnePlusXSquared => 1.0 + x * x,
            Self::OneMinusXSquared => 1.0 - x * x,
            Self::OnePlusX => 1.0 + x,
            Self::OneMinusX => 1.0 - x,
            Self::OneMinusXFourth => 1.0 - x.powi(4),
        }
    }

    /// `g` with `base = 1 + g`; `None` for `x` itself.
    fn shift(self, order: usize) -> Option<TruncatedSeries> {
        let m = |c: i64, p: usize| TruncatedSeries::monomial(int(c), p, order);
        match self {
            Self::X => None,
            Self::OnePlusXSquared => Some(m(1, 2)),
            Self::OneMinusXSquared => Some(m(-1, 2)),
            Self::OnePlusX => Some(m(1, 1)),
            Self::OneMinusX => Some(m(-1, 1)),
            Self::OneMinusXFourth => Some(m(-1, 4)),
        }
    }
}

impl fmt::Display for PrefactorBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::X => "x",
            Self::OnePlusXSquared => "(1+x^2)",
            Self::OneMinusXSquared => "(1-x^2)",
            Self::OnePlusX => "(1+x)",
            Self::OneMinusX => "(1-x)",
            Self::OneMinusXFourth => "(1-x^4)",
        })
    }
}

/// `base^exponent`. A bare `x` only takes nonnegative integer powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefactorAtom {
    pub base: PrefactorBase,
    pub exponent: Rational,
}

impl PrefactorAtom {
    pub fn new(base: PrefactorBase, exponent: Rational) -> Result<Self> {
        if base == PrefactorBase::X && (!exponent.is_integer() || exponent.is_negative()) {
            return Err(Error::InvalidPrefactor(format!(
                "x^{} is not a polynomial prefactor",
                exponent
            )));
        }
        Ok(Self { base, exponent })
    }

    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        match self.base.shift(order) {
            None => {
                let p = self.exponent.to_usize().ok_or_else(|| {
                    Error::InvalidPrefactor(format!("x^{}", self.exponent))
                })?;
                Ok(TruncatedSeries::monomial(Rational::one(), p, order))
            }
            Some(g) => binomial_series(&self.exponent, &g, order),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let base = self.base.eval(x);
        if self.exponent.is_integer() {
            let p = self.exponent.to_i32().ok_or_else(|| {
                Error::InvalidPrefactor(format!("exponent {} too large", self.exponent))
            })?;
            return Ok(base.powi(p));
        }
        if base < 0.0 {
            return Err(Error::Domain {
                z: x,
                reason: "fractional power of a negative prefactor base",
            });
        }
        Ok(base.powf(self.exponent.to_f64().unwrap_or(f64::NAN)))
    }
}

impl fmt::Display for PrefactorAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_one() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^({})", self.base, self.exponent)
        }
    }
}

/// `prod Γ(numer) / prod Γ(denom)`, a purely numeric scalar.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaRatio {
    pub numer: Vec<Rational>,
    pub denom: Vec<Rational>,
}

impl GammaRatio {
    pub fn eval(&self) -> Result<f64> {
        let prod = |v: &[Rational]| -> Result<f64> {
            v.iter()
                .map(|r| gamma(r.to_f64().unwrap_or(f64::NAN)))
                .product::<Result<f64>>()
        };
        Ok(prod(&self.numer)? / prod(&self.denom)?)
    }
}

impl fmt::Display for GammaRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Rational]| {
            v.iter()
                .map(|r| format!("G({r})"))
                .collect::<Vec<_>>()
                .join("*")
        };
        write!(f, "[{}/{}]", list(&self.numer), list(&self.denom))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl RationalParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Self { a, b, c }
    }

    pub fn to_f64(&self) -> Hyp2F1Params {
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        Hyp2F1Params {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
        }
    }

    /// Upper parameters sorted; 2F1 is symmetric in them.
    pub fn canonical(&self) -> Self {
        if self.b < self.a {
            Self::new(self.b.clone(), self.a.clone(), self.c.clone())
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for RationalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}; {}", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyp2F1Term {
    pub symbol: Symbol,
    pub multiplier: Rational,
    pub gamma_factor: Option<GammaRatio>,
    pub prefactors: Vec<PrefactorAtom>,
    pub params: RationalParams,
    pub arg: ArgumentMapId,
}

impl Hyp2F1Term {
    pub fn is_exact_expandable(&self) -> bool {
        !self.arg.is_half_centered() && self.gamma_factor.is_none()
    }

    /// Multiplier, prefactors and composed 2F1 series; the symbol is left
    /// to the caller.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        if let Some(g) = &self.gamma_factor {
            return Err(Error::NotExactlyExpandable(format!(
                "gamma-ratio coefficient {g} is not rational"
            )));
        }
        let arg = self.arg.series(order)?;
        let p = &self.params;
        let f = hyp2f1_series_coeffs(&p.a, &p.b, &p.c, order)?;
        let mut acc = f.compose(&arg)?;
        for atom in &self.prefactors {
            acc = &acc * &atom.series(order)?;
        }
        Ok(acc.scale(&self.multiplier))
    }

    pub fn eval(&self, x: f64, k: &RamanujanConstants) -> Result<f64> {
        let mut v = self.symbol.value(k) * self.multiplier.to_f64().unwrap_or(f64::NAN);
        if let Some(g) = &self.gamma_factor {
            v *= g.eval()?;
        }
        for atom in &self.prefactors {
            v *= atom.eval(x)?;
        }
        Ok(v * hyp2f1(self.params.to_f64(), self.arg.eval(x))?)
    }

    /// Same term with the upper parameters in canonical order.
    pub fn canonical(&self) -> Self {
        Self {
            params: self.params.canonical(),
            ..self.clone()
        }
    }
}

impl fmt::Display for Hyp2F1Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.symbol {
            Symbol::One => String::new(),
            s => format!("{} ", s.to_string().to_lowercase()),
        };
        let mult = if self.multiplier.is_one() {
            String::new()
        } else {
            format!("{} ", self.multiplier)
        };
        let gam = self
            .gamma_factor
            .as_ref()
            .map(|g| format!("{g} "))
            .unwrap_or_default();
        let pre: String = self.prefactors.iter().map(|a| format!("{a} ")).collect();
        write!(f, "{mult}{sym}{gam}{pre}2F1({}; {})", self.params, self.arg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Expected {
    Holds,
    Fails,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Holds => "HOLDS",
            Expected::Fails => "FAILS",
        })
    }
}

impl FromStr for Expected {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "HOLDS" => Ok(Expected::Holds),
            "FAILS" => Ok(Expected::Fails),
            _ => Err(format!("expected HOLDS or FAILS, got `{s}`")),
        }
    }
}

/// Where an entry comes from. `Corrected` marks the corrected identity and
/// the derived equivalence and difference entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    Ramanujan,
    Berndt,
    Corrected,
    Kummer,
    Euler,
}

impl Provenance {
    pub const ALL: [Provenance; 5] = [
        Provenance::Ramanujan,
        Provenance::Berndt,
        Provenance::Corrected,
        Provenance::Kummer,
        Provenance::Euler,
    ];
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Provenance {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown provenance `{s}`"))
    }
}

/// One instantiation of an identity; parameterized identities carry
/// several.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub label: String,
    pub lhs: Vec<Hyp2F1Term>,
    pub rhs: Vec<Hyp2F1Term>,
}

impl IdentityCase {
    pub fn is_exact_capable(&self) -> bool {
        self.lhs.iter().chain(&self.rhs).all(Hyp2F1Term::is_exact_expandable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub id: String,
    pub title: String,
    pub provenance: Provenance,
    pub expected: Expected,
    pub cases: Vec<IdentityCase>,
    /// Registry entry that decides this one exactly when its own sides
    /// cannot be expanded.
    pub exact_route: Option<String>,
}

impl Identity {
    pub fn exact_capable(&self) -> bool {
        self.cases.iter().all(IdentityCase::is_exact_capable)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Registry {
    pub identities: Vec<Identity>,
}

impl Registry {
    pub fn builtin() -> Self {
        Self {
            identities: builtin::builtin_identities(),
        }
    }

    pub fn get(&self, id: &str) -> Result<&Identity> {
        self.identities
            .iter()
            .find(|i| i.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn get_mut(&mut self, id: &str) -> Result<&mut Identity> {
        self.identities
            .iter_mut()
            .find(|i| i.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Identity> {
        self.identities.iter()
    }

    pub fn len(&self) -> usize {
        self.identities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.identities.is_empty()
    }

    /// Exact verdict, following `exact_route` when the entry's own sides
    /// are not expandable.
    pub fn verify_exact_routed(&self, ident: &Identity, order: usize) -> Verdict {
        if ident.exact_capable() {
            return verify_exact(ident, order);
        }
        match ident.exact_route.as_deref().map(|r| self.get(r)) {
            Some(Ok(proxy)) if proxy.exact_capable() => {
                let mut v = verify_exact(proxy, order);
                v.via = Some(proxy.id.clone());
                v
            }
            _ => verify_exact(ident, order),
        }
    }

    /// Structural checks on the encoded entries.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let mut seen = std::collections::HashSet::new();
        for ident in &self.identities {
            if !seen.insert(ident.id.to_ascii_uppercase()) {
                return Err(format!("duplicate id {}", ident.id));
            }
            if let Some(route) = &ident.exact_route {
                let proxy = self.get(route).map_err(|e| e.to_string())?;
                if !proxy.exact_capable() {
                    return Err(format!("{} routes to non-exact entry {route}", ident.id));
                }
            }
        }
        let canon = |id: &str| -> std::result::Result<Vec<Vec<Hyp2F1Term>>, String> {
            let ident = self.get(id).map_err(|e| e.to_string())?;
            Ok(ident
                .cases
                .iter()
                .flat_map(|c| [&c.lhs, &c.rhs])
                .map(|side| side.iter().map(Hyp2F1Term::canonical).collect())
                .collect())
        };
        if canon("EQ5")? != canon("EQ13")? {
            return Err("EQ5 and EQ13 differ after parameter canonicalization".into());
        }
        Ok(())
    }
}
