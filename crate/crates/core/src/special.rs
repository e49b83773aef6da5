//! Special-function kernel: the sample function Sa, modified Bessel functions
//! of the first kind at integer and real order, and the aliased sinc
//! (Dirichlet) kernel.
//!
//! All functions are pure and thread-safe.

use std::f64::consts::{PI, TAU};

use crate::quad;

/// Relative term size at which ascending Bessel series are truncated.
const SERIES_EPS: f64 = 1e-16;
/// Hard cap on ascending-series terms; the factorial-squared decay makes this
/// unreachable for any argument the crate evaluates.
const SERIES_MAX_TERMS: usize = 500;
/// Arguments above this switch from the ascending series to a scaled
/// asymptotic (order 0) or integral (order >= 1) evaluation.
const SERIES_SWITCH: f64 = 20.0;

/// Errors from the special-function kernel.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecialError {
    #[error("argument must be >= 0 and finite, got {0}")]
    InvalidArgument(f64),
    #[error("order must be >= 0 and finite, got {0}")]
    InvalidOrder(f64),
}

/// Sample function Sa(x) = sin(x)/x with the removable singularity Sa(0) = 1.
///
/// Distinct from the normalized sinc: Sa(pi x) = sinc(x).
pub fn sa(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Aliased sinc (unnormalized Dirichlet kernel): sin(M w/2) / sin(w/2).
///
/// At w in 2*pi*Z both numerator and denominator vanish; the limit (M for odd
/// M, signed for even M) is returned. The argument is reduced modulo 2*pi
/// before evaluation so the kernel stays accurate near its singular points.
pub fn asinc(m: u32, omega: f64) -> f64 {
    assert!(m >= 1, "asinc order must be >= 1");
    let k = (omega / TAU).round();
    let delta = omega - TAU * k;
    // sin(M w/2) = (-1)^{Mk} sin(M d/2), sin(w/2) = (-1)^k sin(d/2)
    let sign = if ((m as i64 - 1) * k as i64) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    if delta == 0.0 {
        return sign * m as f64;
    }
    sign * (0.5 * m as f64 * delta).sin() / (0.5 * delta).sin()
}

/// Ascending series for I_n(z), valid for any z >= 0 but used below the
/// switch point where it stays short. All terms are positive, so there is no
/// cancellation.
fn bessel_in_series(n: u32, z: f64) -> f64 {
    let half = 0.5 * z;
    let mut term = 1.0;
    for k in 1..=n {
        term *= half / k as f64;
    }
    if term == 0.0 {
        // (z/2)^n / n! underflowed; the true value is below f64 range.
        return 0.0;
    }
    let q = half * half;
    let mut sum = term;
    for k in 1..SERIES_MAX_TERMS {
        term *= q / (k as f64 * (k as f64 + n as f64));
        sum += term;
        if term < SERIES_EPS * sum {
            break;
        }
    }
    sum
}

/// Scaled asymptotic expansion e^{-z} I_0(z) ~ (1/sqrt(2 pi z)) sum_k t_k,
/// t_k = t_{k-1} (2k-1)^2 / (8 k z). Accurate to ~1e-16 for z >= 20.
fn bessel_i0e_asymptotic(z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..40 {
        let kf = k as f64;
        let next = term * (2.0 * kf - 1.0) * (2.0 * kf - 1.0) / (8.0 * kf * z);
        if next >= term {
            break; // asymptotic tail started to grow
        }
        term = next;
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum / (TAU * z).sqrt()
}

/// Zero-order modified Bessel function of the first kind, I_0(z).
///
/// Uses the ascending series sum_n (z/2)^{2n}/(n!)^2 up to z = 20 and the
/// scaled asymptotic expansion above it. Relative error <= 1e-13.
pub fn bessel_i0(z: f64) -> Result<f64, SpecialError> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(SpecialError::InvalidArgument(z));
    }
    if z <= SERIES_SWITCH {
        Ok(bessel_in_series(0, z))
    } else {
        Ok(bessel_i0e_asymptotic(z) * z.exp())
    }
}

/// Exponentially scaled I_0: e^{-z} I_0(z). Stays finite for all z >= 0.
pub fn bessel_i0_scaled(z: f64) -> Result<f64, SpecialError> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(SpecialError::InvalidArgument(z));
    }
    if z <= SERIES_SWITCH {
        Ok(bessel_in_series(0, z) * (-z).exp())
    } else {
        Ok(bessel_i0e_asymptotic(z))
    }
}

/// Exponentially scaled integer-order I_n: e^{-z} I_n(z).
///
/// Below the switch point this is the ascending series; above it the order-0
/// case uses the asymptotic expansion and n >= 1 integrates
/// (1/pi) int_0^pi e^{z(cos t - 1)} cos(n t) dt, whose integrand is bounded
/// by one.
pub fn bessel_in_scaled(n: u32, z: f64) -> Result<f64, SpecialError> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(SpecialError::InvalidArgument(z));
    }
    if z <= SERIES_SWITCH {
        return Ok(bessel_in_series(n, z) * (-z).exp());
    }
    if n == 0 {
        return Ok(bessel_i0e_asymptotic(z));
    }
    let nf = n as f64;
    let val = quad::integrate(
        |theta| (z * (theta.cos() - 1.0)).exp() * (nf * theta).cos(),
        0.0,
        PI,
        1e-14,
        1e-14,
    ) / PI;
    Ok(val)
}

/// Shared worker for real (non-integer) order: returns the two pieces of
/// I_nu(z) = e^z A - (sin(nu pi)/pi) e^{-z} C, where
/// A = (1/pi) int_0^pi e^{z(cos t - 1)} cos(nu t) dt and
/// C = int_0^T e^{-z(cosh t - 1) - nu t} dt with the tail cut where the
/// integrand falls below 1e-18 of its initial value.
fn bessel_iv_pieces(nu: f64, z: f64) -> (f64, f64) {
    let a = quad::integrate(
        |theta| (z * (theta.cos() - 1.0)).exp() * (nu * theta).cos(),
        0.0,
        PI,
        1e-12,
        1e-12,
    ) / PI;
    // -ln(1e-18) ~ 41.45
    let decay = |t: f64| z * (t.cosh() - 1.0) + nu * t;
    let mut upper = 1.0;
    while decay(upper) < 41.5 && upper < 1e6 {
        upper *= 2.0;
    }
    let c = quad::integrate(|t| (-decay(t)).exp(), 0.0, upper, 1e-12, 1e-12);
    (a, c)
}

/// Modified Bessel function of the first kind at real order nu >= 0.
///
/// Integer orders use the ascending series; non-integer orders use the
/// integral representation
/// I_nu(z) = (1/pi) int_0^pi e^{z cos t} cos(nu t) dt
///           - (sin(nu pi)/pi) int_0^inf e^{-z cosh t - nu t} dt.
pub fn bessel_i_nu(nu: f64, z: f64) -> Result<f64, SpecialError> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(SpecialError::InvalidOrder(nu));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(SpecialError::InvalidArgument(z));
    }
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if nu.fract() == 0.0 && nu <= u32::MAX as f64 {
        let n = nu as u32;
        if z <= SERIES_SWITCH {
            return Ok(bessel_in_series(n, z));
        }
        return Ok(bessel_in_scaled(n, z)? * z.exp());
    }
    let (a, c) = bessel_iv_pieces(nu, z);
    Ok(z.exp() * a - (nu * PI).sin() / PI * (-z).exp() * c)
}

/// Exponentially scaled real-order I: e^{-z} I_nu(z).
pub fn bessel_i_nu_scaled(nu: f64, z: f64) -> Result<f64, SpecialError> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(SpecialError::InvalidOrder(nu));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(SpecialError::InvalidArgument(z));
    }
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if nu.fract() == 0.0 && nu <= u32::MAX as f64 {
        return bessel_in_scaled(nu as u32, z);
    }
    let (a, c) = bessel_iv_pieces(nu, z);
    Ok(a - (nu * PI).sin() / PI * (-2.0 * z).exp() * c)
}
