//! `hypident` command line: `list`, `verify`, `expand`.
//!
//! Exit codes: 0 when every verdict matches the registry expectation, 1 on
//! an expectation mismatch (or an expansion that cannot be carried out),
//! 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::registry::{
    expand_side_exact, run_expectations, Expected, Mode, Provenance, Registry, RunSettings, Symbol,
};
use crate::report::{now_iso8601, to_csv, to_text, ReportDocument};
use crate::series::rational_to_string;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_GRID: &str = "-0.9:0.9:0.05";

#[derive(Debug, Parser)]
#[command(name = "hypident", version, about = "Verify Gauss 2F1 identities exactly and numerically")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List registry entries
    List {
        #[arg(long)]
        provenance: Option<Provenance>,
        #[arg(long)]
        expected: Option<Expected>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the verifiers and compare against the expected verdicts
    Verify {
        /// Registry ids (e.g. EQ2 D1)
        ids: Vec<String>,
        /// Every registry entry
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        /// Truncation order of the exact expansions
        #[arg(long, env = "HYPIDENT_ORDER", default_value_t = 24)]
        order: usize,
        /// `start:stop:step`, a comma separated list, or `none`
        #[arg(long, default_value = DEFAULT_GRID, allow_hyphen_values = true)]
        grid: String,
        /// Relative residual below which a grid point passes
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the ONE/MU/ETA component series of one side
    Expand {
        id: String,
        #[arg(value_enum)]
        side: Side,
        #[arg(long, env = "HYPIDENT_ORDER", default_value_t = 24)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parses a grid spec into points.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    if spec.is_empty() || spec.eq_ignore_ascii_case("none") {
        return Ok(Vec::new());
    }
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("bad grid number `{s}`"))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(format!("grid range must be start:stop:step, got `{spec}`"));
        };
        let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
        if step <= 0.0 || stop < start {
            return Err("grid range needs step > 0 and stop >= start".into());
        }
        let n = ((stop - start) / step + 1e-9).floor() as usize;
        return Ok((0..=n)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect());
    }
    spec.split(',').map(num).collect()
}

/// Runs the CLI against `registry`; returns the process exit code.
pub fn run<I, T>(args: I, registry: &Registry, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match cli.command {
        Command::List {
            provenance,
            expected,
            format,
        } => cmd_list(registry, provenance, expected, format, out),
        Command::Verify {
            ids,
            all,
            mode,
            order,
            grid,
            tol,
            format,
            out: path,
        } => {
            if order < 1 || tol.is_nan() || tol <= 0.0 {
                let _ = writeln!(err, "error: --order must be >= 1 and --tol > 0");
                return EXIT_USAGE;
            }
            if ids.is_empty() && !all {
                let _ = writeln!(err, "error: give identity ids or --all");
                return EXIT_USAGE;
            }
            let grid = match parse_grid(&grid) {
                Ok(g) => g,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let settings = RunSettings {
                mode: match mode {
                    ModeArg::Exact => Mode::Exact,
                    ModeArg::Numeric => Mode::Numeric,
                    ModeArg::Both => Mode::Both,
                },
                order,
                grid,
                tol,
            };
            let selection = (!all).then_some(ids.as_slice());
            let summary = match run_expectations(registry, selection, &settings) {
                Ok(s) => s,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let body = match format {
                Format::Json => ReportDocument::new(&summary, &settings, now_iso8601()).to_json(),
                Format::Csv => to_csv(&summary),
                Format::Text => to_text(&summary),
            };
            let written = match path {
                Some(p) => std::fs::write(&p, body).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if summary.agree {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Command::Expand {
            id,
            side,
            order,
            format,
        } => cmd_expand(registry, &id, side, order, format, out, err),
    }
}

fn cmd_list(
    registry: &Registry,
    provenance: Option<Provenance>,
    expected: Option<Expected>,
    format: Format,
    out: &mut dyn Write,
) -> i32 {
    let rows: Vec<_> = registry
        .iter()
        .filter(|i| provenance.is_none_or(|p| i.provenance == p))
        .filter(|i| expected.is_none_or(|e| i.expected == e))
        .collect();
    let body = match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|i| {
                    json!({
                        "id": i.id,
                        "provenance": i.provenance,
                        "expected": i.expected,
                        "exact_capable": i.exact_capable(),
                        "title": i.title,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("id,provenance,expected,exact_capable\n");
            for i in &rows {
                s += &format!("{},{},{},{}\n", i.id, i.provenance, i.expected, i.exact_capable());
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:<10} {:<10} {:<8} {:<6} {}\n",
                "ID", "SOURCE", "EXPECTED", "EXACT", "DESCRIPTION"
            );
            for i in &rows {
                s += &format!(
                    "{:<10} {:<10} {:<8} {:<6} {}\n",
                    i.id,
                    i.provenance.to_string(),
                    i.expected.to_string(),
                    if i.exact_capable() { "yes" } else { "no" },
                    i.title
                );
            }
            s
        }
    };
    match out.write_all(body.as_bytes()) {
        Ok(()) => EXIT_OK,
        Err(_) => EXIT_USAGE,
    }
}

fn cmd_expand(
    registry: &Registry,
    id: &str,
    side: Side,
    order: usize,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let ident = match registry.get(id) {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut expansions = Vec::new();
    for case in &ident.cases {
        let terms = match side {
            Side::Lhs => &case.lhs,
            Side::Rhs => &case.rhs,
        };
        match expand_side_exact(terms, order) {
            Ok(comb) => expansions.push((case.label.clone(), comb)),
            Err(e) => {
                let _ = writeln!(out, "NOT_EXACTLY_DECIDABLE: {} {}: {e}", ident.id, side_name(side));
                return EXIT_MISMATCH;
            }
        }
    }
    let body = match format {
        Format::Json => {
            let cases: Vec<_> = expansions
                .iter()
                .map(|(label, comb)| {
                    let comps: serde_json::Map<String, serde_json::Value> = comb
                        .components()
                        .map(|(s, series)| {
                            let coeffs: Vec<String> =
                                series.coeffs().iter().map(rational_to_string).collect();
                            (s.to_string(), json!(coeffs))
                        })
                        .collect();
                    json!({ "label": label, "components": comps })
                })
                .collect();
            let doc = json!({
                "id": ident.id,
                "side": side_name(side),
                "order": order,
                "cases": cases,
            });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text | Format::Csv => {
            let mut s = format!("{} {} (order {order})\n", ident.id, side_name(side));
            for (label, comb) in &expansions {
                if !label.is_empty() {
                    s += &format!("[{label}]\n");
                }
                for sym in Symbol::ALL {
                    s += &format!("  {:<4} {}\n", format!("{sym}:"), comb.component(sym));
                }
            }
            s
        }
    };
    match out.write_all(body.as_bytes()) {
        Ok(()) => EXIT_OK,
        Err(_) => EXIT_USAGE,
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Lhs => "lhs",
        Side::Rhs => "rhs",
    }
}
