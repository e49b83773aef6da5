//! Implementations of the CLI subcommands. Each builds an output table and
//! returns it with the process exit code; flag-level problems are returned
//! as `Err(message)` and map to exit code 2.

use std::f64::consts::PI;

use circwin::circular::{linspace, VonMises};
use circwin::fir;
use circwin::metrics;
use circwin::spectrum::{self, Domain, FrequencyGrid, Spectrum};
use circwin::validate::{self, CheckStatus};
use circwin::window::{WindowFamily, WindowSpec};

use crate::table::{Cell, Table};
use crate::{DomainArg, Method};

const DB_FLOOR: f64 = -400.0;

/// Resolve a family name plus the optional --alpha/--beta flags, rejecting
/// parameters that do not belong to the family.
pub fn build_family(
    name: &str,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Result<WindowFamily, String> {
    let no_alpha = |family: &str| -> Result<(), String> {
        if alpha.is_some() {
            Err(format!("--alpha does not apply to the {family} family"))
        } else {
            Ok(())
        }
    };
    let no_beta = |family: &str| -> Result<(), String> {
        if beta.is_some() {
            Err(format!("--beta does not apply to the {family} family"))
        } else {
            Ok(())
        }
    };
    let need_beta = || -> Result<f64, String> {
        let b = beta.ok_or_else(|| format!("the {name} family requires --beta"))?;
        if !(b >= 0.0) || !b.is_finite() {
            return Err("beta must be >= 0".into());
        }
        Ok(b)
    };
    match name {
        "rect" | "rectangular" => {
            no_alpha("rectangular")?;
            no_beta("rectangular")?;
            Ok(WindowFamily::Rectangular)
        }
        "hann" => {
            no_alpha("hann")?;
            no_beta("hann")?;
            Ok(WindowFamily::hann())
        }
        "hamming" => {
            no_alpha("hamming")?;
            no_beta("hamming")?;
            Ok(WindowFamily::hamming())
        }
        "cosine" => {
            no_beta("cosine")?;
            let a = alpha.ok_or("the cosine family requires --alpha")?;
            Ok(WindowFamily::CosineAlpha { alpha: a })
        }
        "kaiser" => {
            no_alpha("kaiser")?;
            Ok(WindowFamily::Kaiser { beta: need_beta()? })
        }
        "vonmises" => {
            no_alpha("vonmises")?;
            Ok(WindowFamily::VonMises { beta: need_beta()? })
        }
        other => Err(format!(
            "unknown family '{other}' (expected rect, hann, hamming, cosine, kaiser or vonmises)"
        )),
    }
}

pub fn build_spec(
    name: &str,
    alpha: Option<f64>,
    beta: Option<f64>,
    n: u32,
    causal: bool,
) -> Result<WindowSpec, String> {
    let family = build_family(name, alpha, beta)?;
    WindowSpec::new(family, n, causal).map_err(|e| e.to_string())
}

pub fn cmd_window(generated_by: String, spec: &WindowSpec) -> Result<(Table, i32), String> {
    let w = spec.sample();
    let mut table = Table::new(generated_by, vec!["index", "value"]);
    for (idx, value) in w.iter() {
        table.push(vec![Cell::Int(idx as i64), Cell::Float(value)]);
    }
    Ok((table, 0))
}

fn spectrum_table(generated_by: String, s: &Spectrum) -> Table {
    let mut table = Table::new(generated_by, vec!["omega", "re", "im", "abs", "db"]);
    let mags = s.magnitudes();
    let max = mags.iter().cloned().fold(0.0, f64::max);
    for ((&omega, v), &mag) in s.grid().points().iter().zip(s.values()).zip(&mags) {
        let db = if max > 0.0 && mag > 0.0 {
            (20.0 * (mag / max).log10()).max(DB_FLOOR)
        } else {
            DB_FLOOR
        };
        table.push(vec![
            Cell::Float(omega),
            Cell::Float(v.re),
            Cell::Float(v.im),
            Cell::Float(mag),
            Cell::Float(db),
        ]);
    }
    table
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_spectrum(
    generated_by: String,
    spec: &WindowSpec,
    method: Method,
    domain: DomainArg,
    points: Option<usize>,
    eps: f64,
) -> Result<(Table, i32), String> {
    if eps <= 0.0 {
        return Err("--eps must be > 0".into());
    }
    let grid = match domain {
        DomainArg::Dtft => FrequencyGrid::dtft_span(points.unwrap_or(4097)),
        DomainArg::Continuous => FrequencyGrid::continuous_span(spec.n(), points.unwrap_or(2049)),
    }
    .map_err(|e| e.to_string())?;
    let is_vonmises = matches!(spec.family(), WindowFamily::VonMises { .. });
    let is_kaiser = matches!(spec.family(), WindowFamily::Kaiser { .. });
    let result = match (method, grid.domain()) {
        (Method::Numeric, Domain::Dtft) => spectrum::dtft(&spec.sample(), &grid),
        (Method::Numeric, Domain::ContinuousFt) => spectrum::continuous_ft(spec, &grid),
        (Method::Analytic, Domain::Dtft) => spectrum::analytic_dtft(spec, &grid, eps),
        (Method::Analytic, Domain::ContinuousFt) => {
            return Err(
                "no generic analytic method in the continuous domain; use --method series \
                 (vonmises) or --method closed-form (vonmises, kaiser)"
                    .into(),
            )
        }
        (Method::Series, Domain::Dtft) if is_vonmises => {
            spectrum::analytic_dtft(spec, &grid, eps)
        }
        (Method::Series, Domain::ContinuousFt) if is_vonmises => {
            spectrum::vonmises_continuous_series(spec, &grid, eps)
        }
        (Method::Series, _) => {
            return Err("--method series applies only to the vonmises family".into())
        }
        (Method::ClosedForm, Domain::ContinuousFt) if is_vonmises => {
            spectrum::vonmises_continuous_closed_form(spec, &grid)
        }
        (Method::ClosedForm, Domain::ContinuousFt) if is_kaiser => {
            spectrum::kaiser_continuous_closed_form(spec, &grid)
        }
        (Method::ClosedForm, _) => {
            return Err(
                "--method closed-form applies to vonmises and kaiser in the continuous domain"
                    .into(),
            )
        }
    };
    let s = result.map_err(|e| e.to_string())?;
    Ok((spectrum_table(generated_by, &s), 0))
}

pub fn cmd_dist(
    generated_by: String,
    mu: f64,
    kappa: f64,
    points: usize,
) -> Result<(Table, i32), String> {
    if !(kappa >= 0.0) || !kappa.is_finite() {
        return Err("kappa must be >= 0".into());
    }
    if points < 2 {
        return Err("--points must be >= 2".into());
    }
    let vm = VonMises::new(mu, kappa).map_err(|e| e.to_string())?;
    let mut table = Table::new(generated_by, vec!["x", "pdf"]);
    table.comment("mu", Cell::Float(vm.mu()));
    table.comment("kappa", Cell::Float(vm.kappa()));
    table.comment("circular_variance", Cell::Float(vm.circular_variance()));
    for x in linspace(-PI, PI, points) {
        table.push(vec![Cell::Float(x), Cell::Float(vm.pdf(x))]);
    }
    Ok((table, 0))
}

pub fn cmd_validate(generated_by: String, strict: bool) -> Result<(Table, i32), String> {
    let rows = validate::run_suite();
    let mut table = Table::new(
        generated_by,
        vec!["check", "params", "measured", "tolerance", "status"],
    );
    let mut failed = false;
    let mut info_seen = false;
    for row in &rows {
        match row.status {
            CheckStatus::Fail => failed = true,
            CheckStatus::Info => info_seen = true,
            CheckStatus::Pass => {}
        }
        table.push(vec![
            Cell::Text(row.check.clone()),
            Cell::Text(row.params.clone()),
            Cell::Float(row.measured),
            row.tolerance.map(Cell::Float).unwrap_or(Cell::Empty),
            Cell::Text(row.status.label().to_string()),
        ]);
    }
    let code = if failed || (strict && info_seen) { 1 } else { 0 };
    Ok((table, code))
}

/// Parse a compact window description `family[:param]:N`, e.g. `rect:64`,
/// `kaiser:5:64`, `cosine:0.6:64`.
pub fn parse_compare_spec(text: &str) -> Result<WindowSpec, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = |msg: &str| format!("bad spec '{text}': {msg}");
    let parse_n = |raw: &str| -> Result<u32, String> {
        raw.parse::<u32>()
            .map_err(|_| bad("support length N must be a positive integer"))
    };
    let parse_param = |raw: &str| -> Result<f64, String> {
        raw.parse::<f64>().map_err(|_| bad("parameter must be a number"))
    };
    let (family, n) = match parts.as_slice() {
        [name, n] => {
            let family = match *name {
                "rect" | "rectangular" => WindowFamily::Rectangular,
                "hann" => WindowFamily::hann(),
                "hamming" => WindowFamily::hamming(),
                "cosine" | "kaiser" | "vonmises" => {
                    return Err(bad("this family needs a parameter: family:param:N"))
                }
                _ => return Err(bad("unknown family")),
            };
            (family, parse_n(n)?)
        }
        [name, param, n] => {
            let p = parse_param(param)?;
            let family = match *name {
                "cosine" => WindowFamily::CosineAlpha { alpha: p },
                "kaiser" => WindowFamily::Kaiser { beta: p },
                "vonmises" => WindowFamily::VonMises { beta: p },
                "rect" | "rectangular" | "hann" | "hamming" => {
                    return Err(bad("this family takes no parameter: family:N"))
                }
                _ => return Err(bad("unknown family")),
            };
            (family, parse_n(n)?)
        }
        _ => return Err(bad("expected family[:param]:N")),
    };
    WindowSpec::new(family, n, false).map_err(|e| bad(&e.to_string()))
}

fn family_params(family: WindowFamily) -> String {
    match family {
        WindowFamily::Rectangular => String::new(),
        WindowFamily::CosineAlpha { alpha } => format!("alpha={alpha}"),
        WindowFamily::Kaiser { beta } => format!("beta={beta}"),
        WindowFamily::VonMises { beta } => format!("beta={beta}"),
    }
}

pub fn cmd_compare(
    generated_by: String,
    specs: &[String],
    oversample: u32,
) -> Result<(Table, i32), String> {
    let specs: Vec<WindowSpec> = specs
        .iter()
        .map(|s| parse_compare_spec(s))
        .collect::<Result<_, _>>()?;
    let rows = metrics::metric_table(&specs, oversample).map_err(|e| e.to_string())?;
    let mut table = Table::new(
        generated_by,
        vec![
            "family",
            "params",
            "N",
            "coherent_gain",
            "enbw_bins",
            "hsl_db",
            "w3db_bins",
            "scallop_db",
        ],
    );
    for (spec, m) in rows {
        table.push(vec![
            Cell::Text(spec.family().label().to_string()),
            Cell::Text(family_params(spec.family())),
            Cell::Int(spec.n() as i64),
            Cell::Float(m.coherent_gain),
            Cell::Float(m.enbw_bins),
            Cell::Float(m.highest_sidelobe_db),
            Cell::Float(m.mainlobe_width_3db_bins),
            Cell::Float(m.scalloping_loss_db),
        ]);
    }
    Ok((table, 0))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_fir(
    generated_by: String,
    wc: f64,
    n: u32,
    family: &str,
    alpha: Option<f64>,
    beta: Option<f64>,
    points: usize,
) -> Result<(Table, i32), String> {
    let lp = fir::LowpassSpec::new(wc, n).map_err(|e| e.to_string())?;
    let window = build_spec(family, alpha, beta, n, false)?;
    let filter = fir::design(&lp, &window).map_err(|e| e.to_string())?;
    let report = fir::response_report(&filter, &lp, points).map_err(|e| e.to_string())?;
    let mut table = Table::new(generated_by, vec!["index", "tap"]);
    table.comment("omega_c", Cell::Float(lp.omega_c()));
    table.comment(
        "passband_ripple_db",
        Cell::Float(report.passband_ripple_db),
    );
    table.comment(
        "stopband_attenuation_db",
        Cell::Float(report.stopband_attenuation_db),
    );
    table.comment("transition_width", Cell::Float(report.transition_width));
    table.comment("passband_edge", Cell::Float(report.passband_edge));
    table.comment("stopband_edge", Cell::Float(report.stopband_edge));
    for (idx, tap) in filter.iter() {
        table.push(vec![Cell::Int(idx as i64), Cell::Float(tap)]);
    }
    Ok((table, 0))
}
