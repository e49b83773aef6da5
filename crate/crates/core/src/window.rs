//! Window (taper) families in four variants each: continuous/discrete times
//! non-causal/causal.
//!
//! Every family is peak-normalized to w(0) = 1 at the center of its support.
//! A non-causal window of support length N lives on [-N/2, N/2] (discrete
//! indices -N/2..N/2, N even, N+1 taps); the causal variant is the same shape
//! shifted to [0, N].

use std::f64::consts::{PI, TAU};

use crate::special;

/// Errors from window construction.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WindowError {
    #[error("window length N must be even, got {0}")]
    OddLength(u32),
    #[error("window length N must be >= 2, got {0}")]
    LengthTooSmall(u32),
    #[error("alpha must be in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("beta must be >= 0, got {0}")]
    NegativeBeta(f64),
}

/// The window families covered by this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowFamily {
    /// Constant 1 on the support.
    Rectangular,
    /// alpha + (1 - alpha) cos(2 pi t / N); alpha = 0.5 is the von Hann
    /// window and alpha = 0.54 the Hamming window.
    CosineAlpha { alpha: f64 },
    /// I_0(beta sqrt(1 - (2t/N)^2)) / I_0(beta).
    Kaiser { beta: f64 },
    /// Circular-normal taper e^{beta (cos(pi t / N) - 1)}; the half-period
    /// cosine exponent confines the bell to the support.
    VonMises { beta: f64 },
}

impl WindowFamily {
    pub fn hann() -> Self {
        WindowFamily::CosineAlpha { alpha: 0.5 }
    }

    pub fn hamming() -> Self {
        WindowFamily::CosineAlpha { alpha: 0.54 }
    }

    pub fn label(&self) -> &'static str {
        match self {
            WindowFamily::Rectangular => "rectangular",
            WindowFamily::CosineAlpha { .. } => "cosine-alpha",
            WindowFamily::Kaiser { .. } => "kaiser",
            WindowFamily::VonMises { .. } => "vonmises",
        }
    }

    fn validate(&self) -> Result<(), WindowError> {
        match *self {
            WindowFamily::Rectangular => Ok(()),
            WindowFamily::CosineAlpha { alpha } => {
                if (0.0..=1.0).contains(&alpha) {
                    Ok(())
                } else {
                    Err(WindowError::AlphaOutOfRange(alpha))
                }
            }
            WindowFamily::Kaiser { beta } | WindowFamily::VonMises { beta } => {
                if beta >= 0.0 && beta.is_finite() {
                    Ok(())
                } else {
                    Err(WindowError::NegativeBeta(beta))
                }
            }
        }
    }
}

/// A fully specified window: family, support length N (even, >= 2) and
/// causality. Everything else in the crate derives from this descriptor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowSpec {
    family: WindowFamily,
    n: u32,
    causal: bool,
}

impl WindowSpec {
    pub fn new(family: WindowFamily, n: u32, causal: bool) -> Result<Self, WindowError> {
        family.validate()?;
        if n < 2 {
            return Err(WindowError::LengthTooSmall(n));
        }
        if n % 2 != 0 {
            return Err(WindowError::OddLength(n));
        }
        Ok(WindowSpec { family, n, causal })
    }

    pub fn family(&self) -> WindowFamily {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn causal(&self) -> bool {
        self.causal
    }

    /// Same spec with causality replaced.
    pub fn with_causal(&self, causal: bool) -> Self {
        WindowSpec { causal, ..*self }
    }

    /// Evaluate the continuous window at time `t`. Outside the support the
    /// value is 0; inside, the center value is 1 for every family.
    pub fn eval_continuous(&self, t: f64) -> f64 {
        let n = self.n as f64;
        let tc = if self.causal { t - 0.5 * n } else { t };
        if tc.abs() > 0.5 * n {
            return 0.0;
        }
        match self.family {
            WindowFamily::Rectangular => 1.0,
            WindowFamily::CosineAlpha { alpha } => alpha + (1.0 - alpha) * (TAU * tc / n).cos(),
            WindowFamily::Kaiser { beta } => kaiser_shape(beta, tc / (0.5 * n)),
            WindowFamily::VonMises { beta } => (beta * ((PI * tc / n).cos() - 1.0)).exp(),
        }
    }

    /// Sample the window at its integer support: indices -N/2..N/2
    /// (non-causal) or 0..N (causal), N+1 coefficients either way. Each
    /// coefficient equals `eval_continuous` at that index exactly.
    pub fn sample(&self) -> SampledWindow {
        let first_index = if self.causal { 0 } else { -(self.n as i32) / 2 };
        let coefficients = (0..=self.n as i32)
            .map(|k| self.eval_continuous((first_index + k) as f64))
            .collect();
        SampledWindow {
            first_index,
            coefficients,
        }
    }
}

/// Kaiser bell on x in [-1, 1], evaluated through scaled Bessel ratios so
/// large beta cannot overflow.
fn kaiser_shape(beta: f64, x: f64) -> f64 {
    let arg = beta * (1.0 - x * x).max(0.0).sqrt();
    let num = special::bessel_i0_scaled(arg).expect("arg >= 0 by construction");
    let den = special::bessel_i0_scaled(beta).expect("beta validated");
    num / den * (arg - beta).exp()
}

/// An indexed real coefficient sequence: N+1 taps starting at `first_index`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledWindow {
    first_index: i32,
    coefficients: Vec<f64>,
}

impl SampledWindow {
    /// Rebuild a sequence from raw parts (e.g. parsed back from an export).
    pub fn from_parts(first_index: i32, coefficients: Vec<f64>) -> Self {
        assert!(!coefficients.is_empty(), "window must have at least one tap");
        SampledWindow {
            first_index,
            coefficients,
        }
    }

    pub fn first_index(&self) -> i32 {
        self.first_index
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Support length N = number of taps minus one.
    pub fn n(&self) -> u32 {
        (self.coefficients.len() - 1) as u32
    }

    /// Iterator over (index, coefficient) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.first_index + k as i32, c))
    }

    /// Shift the index range to start at 0, keeping coefficients in order.
    /// A no-op when the window is already causal.
    pub fn to_causal(self) -> SampledWindow {
        SampledWindow {
            first_index: 0,
            coefficients: self.coefficients,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: WindowFamily, n: u32) -> WindowSpec {
        WindowSpec::new(family, n, false).unwrap()
    }

    #[test]
    fn rectangular_discrete_is_all_ones() {
        let w = spec(WindowFamily::Rectangular, 8).sample();
        assert_eq!(w.first_index(), -4);
        assert_eq!(w.coefficients(), &[1.0; 9]);
    }

    #[test]
    fn causal_rectangular_indices() {
        let w = WindowSpec::new(WindowFamily::Rectangular, 8, true)
            .unwrap()
            .sample();
        assert_eq!(w.first_index(), 0);
        assert_eq!(w.len(), 9);
        assert!(w.coefficients().iter().all(|&c| c == 1.0));
    }

    #[test]
    fn vonmises_zero_beta_equals_rectangular() {
        let vm = spec(WindowFamily::VonMises { beta: 0.0 }, 8).sample();
        let rect = spec(WindowFamily::Rectangular, 8).sample();
        assert_eq!(vm, rect);
    }

    #[test]
    fn vonmises_tiny_beta_near_rectangular() {
        let vm = spec(WindowFamily::VonMises { beta: 1e-12 }, 32).sample();
        for &c in vm.coefficients() {
            assert!((c - 1.0).abs() <= 1e-11);
        }
    }

    #[test]
    fn vonmises_endpoint_value() {
        let s = spec(WindowFamily::VonMises { beta: 5.0 }, 8);
        let w = s.sample();
        let edge = (-5.0_f64).exp();
        assert!((w.coefficients()[0] - edge).abs() < 1e-16);
        assert!((w.coefficients()[8] - edge).abs() < 1e-16);
        // continuous edge, any beta: cos(pi/2) = 0
        assert!((s.eval_continuous(4.0) - edge).abs() < 1e-16);
    }

    #[test]
    fn vonmises_center_is_one() {
        let s = spec(WindowFamily::VonMises { beta: 5.0 }, 8);
        assert_eq!(s.eval_continuous(0.0), 1.0);
    }

    #[test]
    fn cosine_alpha_endpoint() {
        let s = spec(WindowFamily::CosineAlpha { alpha: 0.54 }, 10);
        let v = s.eval_continuous(5.0);
        assert!((v - 0.08).abs() < 1e-15);
    }

    #[test]
    fn outside_support_is_zero() {
        let s = spec(WindowFamily::Kaiser { beta: 5.0 }, 8);
        assert_eq!(s.eval_continuous(4.001), 0.0);
        assert_eq!(s.eval_continuous(-7.0), 0.0);
        let c = WindowSpec::new(WindowFamily::Kaiser { beta: 5.0 }, 8, true).unwrap();
        assert_eq!(c.eval_continuous(-0.001), 0.0);
        assert_eq!(c.eval_continuous(8.001), 0.0);
        assert!((c.eval_continuous(4.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn peak_normalization_and_symmetry() {
        let families = [
            WindowFamily::Rectangular,
            WindowFamily::hann(),
            WindowFamily::hamming(),
            WindowFamily::Kaiser { beta: 5.0 },
            WindowFamily::Kaiser { beta: 0.5 },
            WindowFamily::VonMises { beta: 1.0 },
            WindowFamily::VonMises { beta: 8.0 },
        ];
        for family in families {
            let w = spec(family, 16).sample();
            let center = w.coefficients()[8];
            assert_eq!(center, 1.0, "{family:?}");
            let max = w.coefficients().iter().cloned().fold(0.0, f64::max);
            assert_eq!(max, 1.0, "{family:?}");
            for k in 0..=16 {
                assert_eq!(
                    w.coefficients()[k],
                    w.coefficients()[16 - k],
                    "{family:?} asymmetric at {k}"
                );
            }
        }
    }

    #[test]
    fn monotone_taper_from_center() {
        for family in [
            WindowFamily::Kaiser { beta: 3.0 },
            WindowFamily::VonMises { beta: 3.0 },
        ] {
            let w = spec(family, 16).sample();
            let c = w.coefficients();
            for k in 8..16 {
                assert!(c[k + 1] < c[k], "{family:?} not strictly decreasing");
            }
        }
    }

    #[test]
    fn discrete_matches_continuous_exactly() {
        for causal in [false, true] {
            let s = WindowSpec::new(WindowFamily::VonMises { beta: 4.0 }, 12, causal).unwrap();
            let w = s.sample();
            for (idx, c) in w.iter() {
                assert_eq!(c, s.eval_continuous(idx as f64));
            }
        }
    }

    #[test]
    fn edge_value_ordering_between_families() {
        // beta = 5 circular edge below the Hamming edge, beta = 1 above the
        // Hann edge
        let vm5 = spec(WindowFamily::VonMises { beta: 5.0 }, 16).sample();
        let vm1 = spec(WindowFamily::VonMises { beta: 1.0 }, 16).sample();
        assert!(vm5.coefficients()[0] < 0.08);
        assert!(vm1.coefficients()[0] > 0.0);
    }

    #[test]
    fn to_causal_shifts_indices_only() {
        let w = spec(WindowFamily::VonMises { beta: 3.0 }, 8).sample();
        let original = w.coefficients().to_vec();
        let causal = w.to_causal();
        assert_eq!(causal.first_index(), 0);
        assert_eq!(causal.coefficients(), original.as_slice());
        // index 4 of the causal window is the old center
        assert_eq!(causal.coefficients()[4], 1.0);
        // idempotent
        let again = causal.clone().to_causal();
        assert_eq!(again, causal);
    }

    #[test]
    fn round_trip_shift() {
        let w = spec(WindowFamily::Kaiser { beta: 2.0 }, 4).sample();
        let n = w.n() as i32;
        let causal = w.clone().to_causal();
        let back = SampledWindow::from_parts(-n / 2, causal.coefficients().to_vec());
        assert_eq!(back, w);
    }

    #[test]
    fn kaiser_large_beta_stays_finite() {
        let w = spec(WindowFamily::Kaiser { beta: 200.0 }, 16).sample();
        assert!(w.coefficients().iter().all(|c| c.is_finite()));
        assert_eq!(w.coefficients()[8], 1.0);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            WindowSpec::new(WindowFamily::Rectangular, 7, false),
            Err(WindowError::OddLength(7))
        );
        assert_eq!(
            WindowSpec::new(WindowFamily::Rectangular, 0, false),
            Err(WindowError::LengthTooSmall(0))
        );
        assert!(WindowSpec::new(WindowFamily::CosineAlpha { alpha: 1.2 }, 8, false).is_err());
        assert!(WindowSpec::new(WindowFamily::VonMises { beta: -1.0 }, 8, false).is_err());
        assert!(WindowSpec::new(WindowFamily::Kaiser { beta: f64::NAN }, 8, false).is_err());
    }
}
