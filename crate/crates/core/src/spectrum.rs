//! Window spectra: numeric reference transforms (continuous Fourier transform
//! by adaptive quadrature, DTFT by direct summation) and the analytic forms
//! for each family, evaluated on explicit frequency grids.
//!
//! Ground-truth hierarchy: the numeric transforms are the oracles; every
//! closed form and series is validated against them, never the reverse.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quad;
use crate::special;
use crate::window::{SampledWindow, WindowFamily, WindowSpec};

/// Per-frequency-point quadrature tolerance for the continuous transform.
const QUAD_ABS_TOL: f64 = 1e-10;
const QUAD_REL_TOL: f64 = 1e-10;

/// Errors from spectrum evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectrumError {
    #[error("frequency grid must contain at least one point")]
    EmptyGrid,
    #[error("frequency grid must be strictly increasing")]
    NotIncreasing,
    #[error("DTFT grid point {0} outside [-pi, pi]")]
    OutOfRange(f64),
    #[error("expected a {expected} grid, got a {got} grid")]
    DomainMismatch {
        expected: &'static str,
        got: &'static str,
    },
    #[error("operation requires the {expected} family, got {got}")]
    WrongFamily {
        expected: &'static str,
        got: &'static str,
    },
    #[error("{0}")]
    Unsupported(String),
    #[error("spectra were evaluated on different grids")]
    GridMismatch,
}

/// Frequency domain of a grid: continuous-time Fourier transform (rad/s) or
/// DTFT (rad/sample, restricted to [-pi, pi]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    ContinuousFt,
    Dtft,
}

impl Domain {
    fn name(self) -> &'static str {
        match self {
            Domain::ContinuousFt => "continuous-ft",
            Domain::Dtft => "dtft",
        }
    }
}

/// Strictly increasing list of evaluation frequencies plus their domain tag.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    points: Vec<f64>,
    domain: Domain,
}

impl FrequencyGrid {
    pub fn new(points: Vec<f64>, domain: Domain) -> Result<Self, SpectrumError> {
        if points.is_empty() {
            return Err(SpectrumError::EmptyGrid);
        }
        for pair in points.windows(2) {
            if pair[1] <= pair[0] {
                return Err(SpectrumError::NotIncreasing);
            }
        }
        if domain == Domain::Dtft {
            for &p in &points {
                if p.abs() > PI * (1.0 + 1e-12) {
                    return Err(SpectrumError::OutOfRange(p));
                }
            }
        }
        Ok(FrequencyGrid { points, domain })
    }

    /// Evenly spaced grid of `count` points on [lo, hi].
    pub fn linspace(lo: f64, hi: f64, count: usize, domain: Domain) -> Result<Self, SpectrumError> {
        if count < 2 {
            return Err(SpectrumError::EmptyGrid);
        }
        let step = (hi - lo) / (count - 1) as f64;
        let points = (0..count)
            .map(|i| if i == count - 1 { hi } else { lo + step * i as f64 })
            .collect();
        FrequencyGrid::new(points, domain)
    }

    /// `count` points covering [-pi, pi].
    pub fn dtft_span(count: usize) -> Result<Self, SpectrumError> {
        Self::linspace(-PI, PI, count, Domain::Dtft)
    }

    /// Default DTFT grid: 4097 symmetric points on [-pi, pi].
    pub fn dtft_default() -> Self {
        Self::dtft_span(4097).expect("static grid is valid")
    }

    /// `count` points covering +-4 pi (N+1)/N rad/s, wide enough to show
    /// several sidelobes of a length-N window.
    pub fn continuous_span(n: u32, count: usize) -> Result<Self, SpectrumError> {
        let hi = 4.0 * PI * (n as f64 + 1.0) / n as f64;
        Self::linspace(-hi, hi, count, Domain::ContinuousFt)
    }

    /// Default continuous grid: 2049 points.
    pub fn continuous_default(n: u32) -> Self {
        Self::continuous_span(n, 2049).expect("static grid is valid")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn require(&self, domain: Domain) -> Result<(), SpectrumError> {
        if self.domain != domain {
            return Err(SpectrumError::DomainMismatch {
                expected: domain.name(),
                got: self.domain.name(),
            });
        }
        Ok(())
    }
}

/// Complex spectrum values on a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: FrequencyGrid,
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }
}

/// Time-shift phase e^{-j w N/2} that turns a centered spectrum into the
/// causal one.
fn causal_phase(omega: f64, n: u32) -> Complex64 {
    Complex64::from_polar(1.0, -omega * n as f64 / 2.0)
}

/// Direct-summation DTFT of an indexed tap sequence; one complex sum per grid
/// point, accumulated in index order so results are deterministic.
pub(crate) fn dtft_sequence(first_index: i32, taps: &[f64], points: &[f64]) -> Vec<Complex64> {
    points
        .iter()
        .map(|&omega| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &c) in taps.iter().enumerate() {
                let n = (first_index + k as i32) as f64;
                let (s, co) = (-n * omega).sin_cos();
                acc += Complex64::new(c * co, c * s);
            }
            acc
        })
        .collect()
}

/// DTFT of a sampled window by direct summation over its index range.
pub fn dtft(w: &SampledWindow, grid: &FrequencyGrid) -> Result<Spectrum, SpectrumError> {
    grid.require(Domain::Dtft)?;
    Ok(Spectrum {
        grid: grid.clone(),
        values: dtft_sequence(w.first_index(), w.coefficients(), grid.points()),
    })
}

/// Continuous Fourier transform of a window, integrating over its support
/// with adaptive quadrature (tolerance 1e-10 per frequency point).
pub fn continuous_ft(spec: &WindowSpec, grid: &FrequencyGrid) -> Result<Spectrum, SpectrumError> {
    grid.require(Domain::ContinuousFt)?;
    let n = spec.n() as f64;
    let (lo, hi) = if spec.causal() { (0.0, n) } else { (-n / 2.0, n / 2.0) };
    let values = grid
        .points()
        .iter()
        .map(|&w| {
            let re = quad::integrate(
                |t| spec.eval_continuous(t) * (w * t).cos(),
                lo,
                hi,
                QUAD_ABS_TOL,
                QUAD_REL_TOL,
            );
            let im = quad::integrate(
                |t| -spec.eval_continuous(t) * (w * t).sin(),
                lo,
                hi,
                QUAD_ABS_TOL,
                QUAD_REL_TOL,
            );
            Complex64::new(re, im)
        })
        .collect();
    Ok(Spectrum {
        grid: grid.clone(),
        values,
    })
}

/// Cosine-expansion coefficients of the circular-normal window:
/// c_k = I_k(beta) e^{-beta}, k = 0..K, truncated at the first coefficient
/// below `eps` (which is excluded). The sequence is strictly positive and
/// non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    beta: f64,
    terms: Vec<f64>,
}

impl SeriesCoefficients {
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn terms(&self) -> &[f64] {
        &self.terms
    }

    /// Highest retained order K.
    pub fn truncation_order(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Compute c_k = I_k(beta) e^{-beta} until the first term below `eps`.
pub fn vonmises_series_coefficients(beta: f64, eps: f64) -> SeriesCoefficients {
    assert!(beta >= 0.0 && beta.is_finite(), "beta must be >= 0");
    assert!(eps > 0.0, "truncation eps must be > 0");
    let mut terms = Vec::new();
    for k in 0..10_000u32 {
        let c = special::bessel_in_scaled(k, beta).expect("beta validated");
        if c < eps && k > 0 {
            break;
        }
        if c < eps && k == 0 {
            // even the leading coefficient is below eps; keep it so the
            // series is never empty
            terms.push(c);
            break;
        }
        terms.push(c);
    }
    SeriesCoefficients { beta, terms }
}

fn expect_family(
    spec: &WindowSpec,
    expected: &'static str,
) -> Result<(), SpectrumError> {
    if spec.family().label() != expected {
        return Err(SpectrumError::WrongFamily {
            expected,
            got: spec.family().label(),
        });
    }
    Ok(())
}

/// Analytic DTFT of a discrete window.
///
/// Rectangular windows evaluate the Dirichlet kernel sin((N+1)w/2)/sin(w/2);
/// cosine-alpha windows the three-kernel combination; circular-normal windows
/// the aliased-sinc series sum_k I_k(beta) e^{-beta} asinc_{N+1}(w - k pi/N)
/// truncated at `truncation_eps`. There is no discrete closed form for the
/// Kaiser family (its printed form is the continuous transform; see
/// `kaiser_continuous_closed_form`), so it is rejected.
pub fn analytic_dtft(
    spec: &WindowSpec,
    grid: &FrequencyGrid,
    truncation_eps: f64,
) -> Result<Spectrum, SpectrumError> {
    grid.require(Domain::Dtft)?;
    let n = spec.n();
    let m = n + 1;
    let real_at = |omega: f64| -> f64 {
        match spec.family() {
            WindowFamily::Rectangular => special::asinc(m, omega),
            WindowFamily::CosineAlpha { alpha } => {
                let shift = 2.0 * PI / n as f64;
                alpha * special::asinc(m, omega)
                    + (1.0 - alpha)
                        * 0.5
                        * (special::asinc(m, omega - shift) + special::asinc(m, omega + shift))
            }
            _ => unreachable!(),
        }
    };
    let values: Vec<Complex64> = match spec.family() {
        WindowFamily::Kaiser { .. } => {
            return Err(SpectrumError::Unsupported(
                "no discrete closed form for the kaiser family; use the numeric dtft".into(),
            ))
        }
        WindowFamily::VonMises { beta } => {
            let coeffs = vonmises_series_coefficients(beta, truncation_eps);
            let order = coeffs.truncation_order() as i64;
            let c = coeffs.terms();
            grid.points()
                .iter()
                .map(|&omega| {
                    let mut acc = 0.0;
                    for k in -order..=order {
                        let shift = k as f64 * PI / n as f64;
                        acc += c[k.unsigned_abs() as usize] * special::asinc(m, omega - shift);
                    }
                    Complex64::new(acc, 0.0)
                })
                .collect()
        }
        _ => grid
            .points()
            .iter()
            .map(|&omega| Complex64::new(real_at(omega), 0.0))
            .collect(),
    };
    let values = if spec.causal() {
        values
            .into_iter()
            .zip(grid.points())
            .map(|(v, &omega)| v * causal_phase(omega, n))
            .collect()
    } else {
        values
    };
    Ok(Spectrum {
        grid: grid.clone(),
        values,
    })
}

/// Cosine-expansion series for the continuous circular-normal spectrum:
/// W(w) = N sum_k c_k Sa(N w/2 - k pi/2), truncated at `eps`.
pub fn vonmises_continuous_series(
    spec: &WindowSpec,
    grid: &FrequencyGrid,
    eps: f64,
) -> Result<Spectrum, SpectrumError> {
    grid.require(Domain::ContinuousFt)?;
    expect_family(spec, "vonmises")?;
    let beta = match spec.family() {
        WindowFamily::VonMises { beta } => beta,
        _ => unreachable!(),
    };
    let n = spec.n();
    let coeffs = vonmises_series_coefficients(beta, eps);
    let order = coeffs.truncation_order() as i64;
    let c = coeffs.terms();
    let values = grid
        .points()
        .iter()
        .map(|&w| {
            let mut acc = 0.0;
            for k in -order..=order {
                acc += c[k.unsigned_abs() as usize]
                    * special::sa(n as f64 * w / 2.0 - k as f64 * PI / 2.0);
            }
            let v = Complex64::new(n as f64 * acc, 0.0);
            if spec.causal() {
                v * causal_phase(w, n)
            } else {
                v
            }
        })
        .collect();
    Ok(Spectrum {
        grid: grid.clone(),
        values,
    })
}

/// Real-order closed form 2 N I_{|N w / pi|}(beta) / e^beta for the
/// continuous circular-normal spectrum.
///
/// This form's derivation undersamples the spectrum, so it deviates from the
/// quadrature transform (most visibly at small beta); the crate evaluates it
/// verbatim so the deviation can be measured and reported rather than hidden.
/// It is not a ground-truth path.
pub fn vonmises_continuous_closed_form(
    spec: &WindowSpec,
    grid: &FrequencyGrid,
) -> Result<Spectrum, SpectrumError> {
    grid.require(Domain::ContinuousFt)?;
    expect_family(spec, "vonmises")?;
    let beta = match spec.family() {
        WindowFamily::VonMises { beta } => beta,
        _ => unreachable!(),
    };
    let n = spec.n();
    let values = grid
        .points()
        .iter()
        .map(|&w| {
            let order = (n as f64 * w / PI).abs();
            let scaled = special::bessel_i_nu_scaled(order, beta)
                .expect("order and beta validated non-negative");
            let v = Complex64::new(2.0 * n as f64 * scaled, 0.0);
            if spec.causal() {
                v * causal_phase(w, n)
            } else {
                v
            }
        })
        .collect();
    Ok(Spectrum {
        grid: grid.clone(),
        values,
    })
}

/// Closed form (N / I_0(beta)) Sa(sqrt((N w / 2)^2 - beta^2)) for the Kaiser
/// window, continued analytically with Sa(j x) = sinh(x)/x inside the main
/// lobe. Numerically this is the continuous window's Fourier transform.
pub fn kaiser_continuous_closed_form(
    spec: &WindowSpec,
    grid: &FrequencyGrid,
) -> Result<Spectrum, SpectrumError> {
    grid.require(Domain::ContinuousFt)?;
    expect_family(spec, "kaiser")?;
    let beta = match spec.family() {
        WindowFamily::Kaiser { beta } => beta,
        _ => unreachable!(),
    };
    let n = spec.n();
    let i0 = special::bessel_i0(beta).expect("beta validated");
    let values = grid
        .points()
        .iter()
        .map(|&w| {
            let half = n as f64 * w / 2.0;
            let x2 = half * half - beta * beta;
            let shape = if x2 >= 0.0 {
                special::sa(x2.sqrt())
            } else {
                let x = (-x2).sqrt();
                x.sinh() / x
            };
            let v = Complex64::new(n as f64 / i0 * shape, 0.0);
            if spec.causal() {
                v * causal_phase(w, n)
            } else {
                v
            }
        })
        .collect();
    Ok(Spectrum {
        grid: grid.clone(),
        values,
    })
}

/// Elementwise error summary between two spectra on identical grids.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorStats {
    pub max_abs: f64,
    /// Max relative error, measured only where |b| > 1e-12 max|b|.
    pub max_rel: f64,
    pub rms: f64,
}

/// Compare spectrum `a` against reference `b`.
pub fn compare(a: &Spectrum, b: &Spectrum) -> Result<ErrorStats, SpectrumError> {
    if a.grid != b.grid {
        return Err(SpectrumError::GridMismatch);
    }
    let bmax = b.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let floor = 1e-12 * bmax;
    let mut max_abs = 0.0_f64;
    let mut max_rel = 0.0_f64;
    let mut sum_sq = 0.0;
    for (va, vb) in a.values.iter().zip(&b.values) {
        let diff = (va - vb).norm();
        max_abs = max_abs.max(diff);
        sum_sq += diff * diff;
        let mag = vb.norm();
        if mag > floor {
            max_rel = max_rel.max(diff / mag);
        }
    }
    Ok(ErrorStats {
        max_abs,
        max_rel,
        rms: (sum_sq / a.values.len() as f64).sqrt(),
    })
}
