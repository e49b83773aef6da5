//! Window (taper) functions built around the circular-normal shape
//! e^{beta (cos(pi t/N) - 1)} alongside the classical rectangular,
//! cosine-alpha (Hann/Hamming) and Kaiser families, in continuous/discrete
//! and causal/non-causal variants.
//!
//! The crate provides:
//!
//! - numeric reference spectra (direct-sum DTFT, quadrature continuous
//!   transform) and the analytic spectra of every family, cross-validated in
//!   [`validate`];
//! - taper figures of merit (coherent gain, ENBW, sidelobe level, main-lobe
//!   width, scalloping loss) in [`metrics`];
//! - window-method FIR low-pass design and response measurement in [`fir`];
//! - the von Mises circular distribution that generates the window shape in
//!   [`circular`];
//! - the underlying special functions (Sa, aliased sinc, modified Bessel
//!   functions of integer and real order) in [`special`].
//!
//! Everything is a pure function of its arguments; all types are plain data
//! and safe to share across threads.

pub mod circular;
pub mod fir;
pub mod metrics;
pub mod quad;
pub mod special;
pub mod spectrum;
pub mod validate;
pub mod window;

pub use fir::{design, frequency_response, ideal_lowpass_tap, response_report, FirFilter, LowpassSpec};
pub use metrics::{compute_metrics, metric_table, WindowMetrics};
pub use spectrum::{
    analytic_dtft, compare, continuous_ft, dtft, kaiser_continuous_closed_form,
    vonmises_continuous_closed_form, vonmises_continuous_series, vonmises_series_coefficients,
    Domain, FrequencyGrid, SeriesCoefficients, Spectrum,
};
pub use window::{SampledWindow, WindowFamily, WindowSpec};
