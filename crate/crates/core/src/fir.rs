//! Window-method FIR low-pass design: an ideal impulse response truncated by
//! a window, plus measurement of the resulting frequency response.

use std::f64::consts::PI;

use crate::special;
use crate::spectrum::{dtft_sequence, FrequencyGrid, Spectrum, SpectrumError};
use crate::window::WindowSpec;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FirError {
    #[error("cutoff must lie in (0, pi), got {0}")]
    CutoffOutOfRange(f64),
    #[error("filter order must be even and >= 2, got {0}")]
    InvalidOrder(u32),
    #[error("window length {window} does not match filter order {filter}")]
    LengthMismatch { window: u32, filter: u32 },
    #[error("design requires a non-causal (centered) window")]
    CausalWindow,
    #[error("response grid must have at least 1024 points, got {0}")]
    GridTooSmall(usize),
    #[error("bands are degenerate: transition half-width {delta} at cutoff {omega_c} leaves no passband or stopband")]
    DegenerateBands { omega_c: f64, delta: f64 },
}

/// Low-pass design target: cutoff in rad/sample and filter order N (N+1 taps).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowpassSpec {
    omega_c: f64,
    n: u32,
}

impl LowpassSpec {
    pub fn new(omega_c: f64, n: u32) -> Result<Self, FirError> {
        if !(omega_c > 0.0 && omega_c < PI) {
            return Err(FirError::CutoffOutOfRange(omega_c));
        }
        if n < 2 || n % 2 != 0 {
            return Err(FirError::InvalidOrder(n));
        }
        Ok(LowpassSpec { omega_c, n })
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Tap n of the ideal low-pass impulse response: (w_c/pi) Sa(w_c n).
pub fn ideal_lowpass_tap(omega_c: f64, n: i32) -> Result<f64, FirError> {
    if !(omega_c > 0.0 && omega_c < PI) {
        return Err(FirError::CutoffOutOfRange(omega_c));
    }
    Ok(omega_c / PI * special::sa(omega_c * n as f64))
}

/// A real tap sequence produced by the window method.
#[derive(Debug, Clone, PartialEq)]
pub struct FirFilter {
    first_index: i32,
    taps: Vec<f64>,
}

impl FirFilter {
    pub fn from_parts(first_index: i32, taps: Vec<f64>) -> Self {
        assert!(!taps.is_empty(), "filter must have at least one tap");
        FirFilter { first_index, taps }
    }

    pub fn first_index(&self) -> i32 {
        self.first_index
    }

    pub fn taps(&self) -> &[f64] {
        &self.taps
    }

    pub fn len(&self) -> usize {
        self.taps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taps.is_empty()
    }

    /// Iterator over (index, tap) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.taps
            .iter()
            .enumerate()
            .map(move |(k, &t)| (self.first_index + k as i32, t))
    }

    /// Shift the index range to start at 0.
    pub fn to_causal(self) -> FirFilter {
        FirFilter {
            first_index: 0,
            taps: self.taps,
        }
    }
}

/// Window the ideal low-pass response: taps[n] = w[n] h[n] on the window's
/// centered index range.
pub fn design(lp: &LowpassSpec, window: &WindowSpec) -> Result<FirFilter, FirError> {
    if window.causal() {
        return Err(FirError::CausalWindow);
    }
    if window.n() != lp.n {
        return Err(FirError::LengthMismatch {
            window: window.n(),
            filter: lp.n,
        });
    }
    let w = window.sample();
    let taps = w
        .iter()
        .map(|(idx, c)| c * ideal_lowpass_tap(lp.omega_c, idx).expect("cutoff validated"))
        .collect();
    Ok(FirFilter {
        first_index: w.first_index(),
        taps,
    })
}

/// Frequency response of the filter by direct summation.
pub fn frequency_response(f: &FirFilter, grid: &FrequencyGrid) -> Result<Spectrum, SpectrumError> {
    crate::spectrum::dtft(
        &crate::window::SampledWindow::from_parts(f.first_index, f.taps.clone()),
        grid,
    )
}

/// Measured band behavior of a designed filter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseReport {
    /// 20 log10(max |H| / min |H|) over the passband.
    pub passband_ripple_db: f64,
    /// -20 log10(max stopband |H| / passband mean |H|).
    pub stopband_attenuation_db: f64,
    /// Measured transition width, rad/sample.
    pub transition_width: f64,
    /// Passband edge omega_c - width/2.
    pub passband_edge: f64,
    /// Stopband edge omega_c + width/2.
    pub stopband_edge: f64,
}

/// Measure passband ripple, stopband attenuation and transition width on a
/// magnitude grid of `grid_size` points over [0, pi].
///
/// Band edges start from the provisional half-width 2 * 2 pi/(N+1) and are
/// re-resolved once: the transition band is taken symmetric about the cutoff,
/// ending at the first local minimum of |H| beyond it (the first stopband
/// null, or its shallow analogue for heavy tapers), so the stopband maximum
/// is the first true sidelobe rather than a point on the falling edge.
pub fn response_report(
    f: &FirFilter,
    lp: &LowpassSpec,
    grid_size: usize,
) -> Result<ResponseReport, FirError> {
    if grid_size < 1024 {
        return Err(FirError::GridTooSmall(grid_size));
    }
    let omega_c = lp.omega_c;
    let points: Vec<f64> = (0..grid_size)
        .map(|i| i as f64 * PI / (grid_size - 1) as f64)
        .collect();
    let mags: Vec<f64> = dtft_sequence(f.first_index, &f.taps, &points)
        .iter()
        .map(|v| v.norm())
        .collect();

    let delta0 = 4.0 * PI / (lp.n as f64 + 1.0);
    check_bands(omega_c, delta0, &points)?;

    // first local minimum of |H| beyond the cutoff
    let start = points.partition_point(|&w| w <= omega_c);
    let mut delta = delta0;
    for i in start.max(1)..grid_size - 1 {
        if mags[i] < mags[i - 1] && mags[i] < mags[i + 1] {
            delta = points[i] - omega_c;
            break;
        }
    }
    check_bands(omega_c, delta, &points)?;

    let passband: Vec<f64> = points
        .iter()
        .zip(&mags)
        .filter(|(&w, _)| w <= omega_c - delta)
        .map(|(_, &m)| m)
        .collect();
    let stopband: Vec<f64> = points
        .iter()
        .zip(&mags)
        .filter(|(&w, _)| w >= omega_c + delta)
        .map(|(_, &m)| m)
        .collect();
    let pass_mean = passband.iter().sum::<f64>() / passband.len() as f64;
    let pass_max = passband.iter().cloned().fold(f64::MIN, f64::max);
    let pass_min = passband.iter().cloned().fold(f64::MAX, f64::min);
    let stop_max = stopband.iter().cloned().fold(f64::MIN, f64::max);

    Ok(ResponseReport {
        passband_ripple_db: 20.0 * (pass_max / pass_min).log10(),
        stopband_attenuation_db: -20.0 * (stop_max / pass_mean).log10(),
        transition_width: 2.0 * delta,
        passband_edge: omega_c - delta,
        stopband_edge: omega_c + delta,
    })
}

fn check_bands(omega_c: f64, delta: f64, points: &[f64]) -> Result<(), FirError> {
    let last = *points.last().unwrap();
    if omega_c - delta <= points[0] || omega_c + delta >= last {
        return Err(FirError::DegenerateBands { omega_c, delta });
    }
    Ok(())
}
