use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{Expected, Hyp2F1Term, Identity, IdentityCase, Provenance, Registry, Symbol};
use crate::error::{Error, Result};
use crate::gamma::{ramanujan_constants, RamanujanConstants};
use crate::series::{Rational, TruncatedSeries};

/// Per-symbol rational series: `ONE * A(x) + MU * B(x) + ETA * C(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicCombination {
    order: usize,
    components: BTreeMap<Symbol, TruncatedSeries>,
}

impl SymbolicCombination {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            components: Symbol::ALL
                .into_iter()
                .map(|s| (s, TruncatedSeries::zero(order)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn component(&self, symbol: Symbol) -> &TruncatedSeries {
        &self.components[&symbol]
    }

    pub fn components(&self) -> impl Iterator<Item = (Symbol, &TruncatedSeries)> {
        self.components.iter().map(|(s, v)| (*s, v))
    }

    fn accumulate(&mut self, symbol: Symbol, series: &TruncatedSeries) {
        let slot = self.components.get_mut(&symbol).expect("all symbols present");
        *slot = &*slot + series;
    }

    pub fn difference(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self {
            order,
            components: Symbol::ALL
                .into_iter()
                .map(|s| (s, self.component(s) - other.component(s)))
                .collect(),
        }
    }
}

pub fn expand_side_exact(terms: &[Hyp2F1Term], order: usize) -> Result<SymbolicCombination> {
    let mut out = SymbolicCombination::zero(order);
    for t in terms {
        if !t.is_exact_expandable() {
            return Err(Error::NotExactlyExpandable(format!("term {t}")));
        }
        out.accumulate(t.symbol, &t.expand(order)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    NotExactlyDecidable,
    /// Numeric residual between the pass tolerance and the fail floor, or
    /// grid points that could not be evaluated.
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotExactlyDecidable => "NOT_EXACTLY_DECIDABLE",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub order: usize,
    pub symbol: Symbol,
    /// `lhs - rhs` coefficient.
    pub difference: Rational,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualStats {
    pub max_abs: f64,
    pub argmax_x: f64,
    pub grid_size: usize,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointFailure {
    pub x: f64,
    pub case: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub mode: Mode,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub residual_stats: Option<ResidualStats>,
    pub failures: Vec<PointFailure>,
    /// Registry entry whose exact check stood in for this one.
    pub via: Option<String>,
    pub note: Option<String>,
}

impl Verdict {
    fn new(mode: Mode, status: Status) -> Self {
        Self {
            mode,
            status,
            first_mismatch: None,
            residual_stats: None,
            failures: Vec::new(),
            via: None,
            note: None,
        }
    }

    /// `Some(true)` if the verdict supports `expected`, `Some(false)` if it
    /// contradicts it, `None` if it says nothing.
    pub fn agrees_with(&self, expected: Expected) -> Option<bool> {
        match (self.status, expected) {
            (Status::NotExactlyDecidable, _) => None,
            (Status::Pass, Expected::Holds) | (Status::Fail, Expected::Fails) => Some(true),
            _ => Some(false),
        }
    }
}

fn compare_case(case: &IdentityCase, order: usize) -> Result<Option<Mismatch>> {
    let lhs = expand_side_exact(&case.lhs, order)?;
    let rhs = expand_side_exact(&case.rhs, order)?;
    let diff = lhs.difference(&rhs);
    for n in 0..=order {
        for symbol in Symbol::ALL {
            let d = diff.component(symbol).coeff(n);
            if !d.is_zero() {
                return Ok(Some(Mismatch {
                    order: n,
                    symbol,
                    difference: d.clone(),
                    case: case.label.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Componentwise comparison of both sides over `{ONE, MU, ETA}` through
/// `order`. The first failing case supplies the mismatch record.
pub fn verify_exact(ident: &Identity, order: usize) -> Verdict {
    if !ident.exact_capable() {
        let mut v = Verdict::new(Mode::Exact, Status::NotExactlyDecidable);
        v.note = Some(
            "an argument map is centered at 1/2 (or a coefficient is a gamma ratio), \
             so the 2F1 expansion is not rational; decided numerically"
                .into(),
        );
        return v;
    }
    for case in &ident.cases {
        match compare_case(case, order) {
            Ok(None) => {}
            Ok(Some(m)) => {
                let mut v = Verdict::new(Mode::Exact, Status::Fail);
                v.first_mismatch = Some(m);
                return v;
            }
            Err(e) => {
                let mut v = Verdict::new(Mode::Exact, Status::NotExactlyDecidable);
                v.note = Some(e.to_string());
                return v;
            }
        }
    }
    Verdict::new(Mode::Exact, Status::Pass)
}

fn eval_side(terms: &[Hyp2F1Term], x: f64, k: &RamanujanConstants) -> Result<f64> {
    terms.iter().map(|t| t.eval(x, k)).sum()
}

/// Relative residual `|L - R| / max(1, |L|)` over the grid. PASS when the
/// maximum is below `tol`, FAIL when it exceeds `10 tol`.
pub fn verify_numeric(ident: &Identity, grid: &[f64], tol: f64) -> Verdict {
    let k = ramanujan_constants();
    let mut best: Option<ResidualStats> = None;
    let mut failures = Vec::new();
    let grid_size = grid.len();

    for case in &ident.cases {
        let results: Vec<(f64, Result<f64>)> = grid
            .par_iter()
            .map(|&x| {
                let r = eval_side(&case.lhs, x, &k).and_then(|l| {
                    let rhs = eval_side(&case.rhs, x, &k)?;
                    Ok((l - rhs).abs() / l.abs().max(1.0))
                });
                (x, r)
            })
            .collect();
        for (x, r) in results {
            match r {
                Ok(res) if res.is_finite() => {
                    let better = match &best {
                        None => true,
                        Some(b) => res > b.max_abs || (res == b.max_abs && x < b.argmax_x),
                    };
                    if better {
                        best = Some(ResidualStats {
                            max_abs: res,
                            argmax_x: x,
                            grid_size,
                            case: case.label.clone(),
                        });
                    }
                }
                Ok(res) => failures.push(PointFailure {
                    x,
                    case: case.label.clone(),
                    message: format!("non-finite residual {res}"),
                }),
                Err(e) => failures.push(PointFailure {
                    x,
                    case: case.label.clone(),
                    message: e.to_string(),
                }),
            }
        }
    }

    let max = best.as_ref().map(|b| b.max_abs);
    let status = match max {
        Some(m) if m > 10.0 * tol => Status::Fail,
        _ if !failures.is_empty() || grid.is_empty() => Status::Inconclusive,
        Some(m) if m < tol => Status::Pass,
        _ => Status::Inconclusive,
    };
    let mut v = Verdict::new(Mode::Numeric, status);
    v.residual_stats = best;
    v.failures = failures;
    if grid.is_empty() {
        v.note = Some("empty grid".into());
    }
    v
}

/// `x` from -0.9 to 0.9 in steps of 0.05.
pub fn default_grid() -> Vec<f64> {
    (0..=36).map(|i| f64::from(-90 + 5 * i) / 100.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSettings {
    pub mode: Mode,
    pub order: usize,
    pub grid: Vec<f64>,
    pub tol: f64,
}

impl Default for RunSettings {
    fn default() -> Self {
        Self {
            mode: Mode::Both,
            order: 24,
            grid: default_grid(),
            tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntryOutcome {
    pub id: String,
    pub provenance: Provenance,
    pub expected: Expected,
    pub exact_capable: bool,
    pub exact: Option<Verdict>,
    pub numeric: Option<Verdict>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub entries: Vec<EntryOutcome>,
    pub agree: bool,
}

/// Runs the requested verifiers on `ids` (all entries when `None`) and
/// compares every decisive verdict with the entry's expectation. An empty
/// grid skips the numeric verifier.
pub fn run_expectations(
    registry: &Registry,
    ids: Option<&[String]>,
    settings: &RunSettings,
) -> Result<Summary> {
    let selected: Vec<&Identity> = match ids {
        None => registry.iter().collect(),
        Some(ids) => ids.iter().map(|id| registry.get(id)).collect::<Result<_>>()?,
    };
    let want_exact = matches!(settings.mode, Mode::Exact | Mode::Both);
    let want_numeric =
        matches!(settings.mode, Mode::Numeric | Mode::Both) && !settings.grid.is_empty();

    let entries: Vec<EntryOutcome> = selected
        .into_iter()
        .map(|ident| {
            let exact = want_exact.then(|| registry.verify_exact_routed(ident, settings.order));
            let numeric =
                want_numeric.then(|| verify_numeric(ident, &settings.grid, settings.tol));
            let agree = exact
                .iter()
                .chain(numeric.iter())
                .filter_map(|v| v.agrees_with(ident.expected))
                .all(|a| a);
            EntryOutcome {
                id: ident.id.clone(),
                provenance: ident.provenance,
                expected: ident.expected,
                exact_capable: ident.exact_capable(),
                exact,
                numeric,
                agree,
            }
        })
        .collect();
    let agree = entries.iter().all(|e| e.agree);
    Ok(Summary { entries, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn reg() -> Registry {
        Registry::builtin()
    }

    #[test]
    fn d_entries_fail_at_first_order_on_eta() {
        let reg = reg();
        for (id, diff) in [("D1", int(1)), ("D3", int(-1)), ("D4", int(-1))] {
            let v = verify_exact(reg.get(id).unwrap(), 8);
            assert_eq!(v.status, Status::Fail, "{id}");
            let m = v.first_mismatch.unwrap();
            assert_eq!((m.order, m.symbol, m.difference), (1, Symbol::Eta, diff), "{id}");
        }
    }

    #[test]
    fn half_centered_entries_are_not_decidable() {
        let reg = reg();
        for id in ["EQ6", "EQ7", "EQ12"] {
            let v = reg.verify_exact_routed(reg.get(id).unwrap(), 8);
            assert_eq!(v.status, Status::NotExactlyDecidable, "{id}");
            assert!(v.note.is_some());
        }
    }

    #[test]
    fn routed_entries_report_their_proxy() {
        let reg = reg();
        let v = reg.verify_exact_routed(reg.get("EQ3").unwrap(), 8);
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.via.as_deref(), Some("D3"));
        let m = v.first_mismatch.unwrap();
        assert_eq!((m.order, m.symbol, m.difference), (1, Symbol::Eta, int(-1)));
    }

    #[test]
    fn expansion_of_centered_side_is_refused() {
        let reg = reg();
        let eq2 = reg.get("EQ2").unwrap();
        assert!(matches!(
            expand_side_exact(&eq2.cases[0].lhs, 4),
            Err(Error::NotExactlyExpandable(_))
        ));
    }

    #[test]
    fn eq5_eta_component_low_order() {
        // 2x sqrt(1+x^2) (1 + (3/8)/(5/4) x^4 + ...) = 2x + x^3 - 1/4 x^5 + ...
        let reg = reg();
        let side = expand_side_exact(&reg.get("EQ5").unwrap().cases[0].rhs, 5).unwrap();
        let eta = side.component(Symbol::Eta);
        assert_eq!(eta.coeffs()[..4], [int(0), int(2), int(0), int(1)]);
        // x^5: 2 * (-1/8) from sqrt(1+x^2) plus 2 * 3/10 from the 2F1 term
        assert_eq!(eta.coeff(5), &(rat(-1, 4) + rat(3, 5)));
        assert!(side.component(Symbol::One).is_zero());
    }

    #[test]
    fn empty_grid_is_exact_only() {
        let settings = RunSettings {
            grid: vec![],
            order: 4,
            ..RunSettings::default()
        };
        let s = run_expectations(&reg(), None, &settings).unwrap();
        assert!(s.entries.iter().all(|e| e.numeric.is_none() && e.exact.is_some()));
        assert!(s.agree);
    }

    #[test]
    fn single_point_grid_cannot_separate_eq1() {
        let v = verify_numeric(reg().get("EQ1").unwrap(), &[0.0], 1e-12);
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn unknown_id_is_an_error() {
        let ids = vec!["EQ99".to_string()];
        assert!(run_expectations(&reg(), Some(&ids), &RunSettings::default()).is_err());
    }

    #[test]
    fn default_grid_shape() {
        let g = default_grid();
        assert_eq!(g.len(), 37);
        assert_eq!(g[0], -0.9);
        assert_eq!(g[18], 0.0);
        assert_eq!(g[36], 0.9);
    }
}
