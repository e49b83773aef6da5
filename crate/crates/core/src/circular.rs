//! Von Mises (circular normal) distribution on [-pi, pi]: density, circular
//! variance, and numeric certification of the small- and large-concentration
//! limits.

use std::f64::consts::TAU;

use crate::special;

/// Errors from the circular-distribution module.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircularError {
    #[error("kappa must be >= 0 and finite, got {0}")]
    InvalidKappa(f64),
    #[error("mu must be finite, got {0}")]
    InvalidMu(f64),
    #[error("kappa must be > 0 for the gaussian limit, got {0}")]
    NonPositiveKappa(f64),
    #[error("grid must not be empty")]
    EmptyGrid,
}

/// Wrap an angle into [-pi, pi].
pub fn wrap_angle(x: f64) -> f64 {
    x - TAU * (x / TAU).round()
}

/// Von Mises distribution with mean direction `mu` (radians, wrapped into
/// [-pi, pi]) and concentration `kappa` >= 0.
///
/// The density is e^{kappa cos(x - mu)} / (2 pi I_0(kappa)); it is evaluated
/// in exponentially scaled form so large kappa does not overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VonMises {
    mu: f64,
    kappa: f64,
    // e^{-kappa} I_0(kappa), cached at construction
    i0_scaled: f64,
}

impl VonMises {
    pub fn new(mu: f64, kappa: f64) -> Result<Self, CircularError> {
        if !mu.is_finite() {
            return Err(CircularError::InvalidMu(mu));
        }
        if !(kappa >= 0.0) || !kappa.is_finite() {
            return Err(CircularError::InvalidKappa(kappa));
        }
        let i0_scaled =
            special::bessel_i0_scaled(kappa).expect("kappa validated non-negative and finite");
        Ok(VonMises {
            mu: wrap_angle(mu),
            kappa,
            i0_scaled,
        })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Density at `x` (radians). Arguments outside [-pi, pi] are wrapped, so
    /// the periodic extension of the density is what gets evaluated.
    pub fn pdf(&self, x: f64) -> f64 {
        let delta = wrap_angle(x - self.mu);
        (self.kappa * (delta.cos() - 1.0)).exp() / (TAU * self.i0_scaled)
    }

    /// Circular variance 1 - I_1(kappa)/I_0(kappa), in [0, 1].
    pub fn circular_variance(&self) -> f64 {
        if self.kappa == 0.0 {
            return 1.0;
        }
        let i1 = special::bessel_in_scaled(1, self.kappa).expect("kappa validated");
        1.0 - i1 / self.i0_scaled
    }
}

/// Max deviation of the zero-mean density from the Gaussian with variance
/// 1/kappa over `grid`, normalized by the Gaussian peak. Certifies the
/// large-concentration limit numerically.
pub fn gaussian_limit_error(kappa: f64, grid: &[f64]) -> Result<f64, CircularError> {
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(CircularError::NonPositiveKappa(kappa));
    }
    if grid.is_empty() {
        return Err(CircularError::EmptyGrid);
    }
    let vm = VonMises::new(0.0, kappa)?;
    let sigma2 = 1.0 / kappa;
    let peak = 1.0 / (TAU * sigma2).sqrt();
    let mut worst = 0.0_f64;
    for &x in grid {
        let gauss = peak * (-x * x / (2.0 * sigma2)).exp();
        worst = worst.max((vm.pdf(x) - gauss).abs());
    }
    Ok(worst / peak)
}

/// Max deviation of the zero-mean density from the uniform density 1/(2 pi)
/// over `grid`, normalized by the density's peak value. Certifies the
/// small-concentration limit.
pub fn uniform_limit_error(kappa: f64, grid: &[f64]) -> Result<f64, CircularError> {
    if grid.is_empty() {
        return Err(CircularError::EmptyGrid);
    }
    let vm = VonMises::new(0.0, kappa)?;
    let uniform = 1.0 / TAU;
    let peak = vm.pdf(0.0);
    let mut worst = 0.0_f64;
    for &x in grid {
        worst = worst.max((vm.pdf(x) - uniform).abs());
    }
    Ok(worst / peak)
}

/// Evenly spaced grid of `count` points covering [lo, hi], endpoints included.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(count >= 2, "linspace needs at least two points");
    let step = (hi - lo) / (count - 1) as f64;
    (0..count)
        .map(|i| {
            if i == count - 1 {
                hi
            } else {
                lo + step * i as f64
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;
    use std::f64::consts::PI;

    #[test]
    fn uniform_case_is_flat() {
        let vm = VonMises::new(0.0, 0.0).unwrap();
        for i in 0..50 {
            let x = -PI + i as f64 * (TAU / 49.0);
            assert!((vm.pdf(x) - 1.0 / TAU).abs() < 1e-15);
        }
    }

    #[test]
    fn mode_value_closed_form() {
        // pdf at the mode for mu=1.2, kappa=3 is e^3 / (2 pi I_0(3))
        let vm = VonMises::new(1.2, 3.0).unwrap();
        assert!((vm.pdf(1.2) - 0.654_957_658_974_877_7).abs() < 1e-13);
    }

    #[test]
    fn normalizes_to_one() {
        for &kappa in &[0.0, 0.5, 1.0, 5.0, 20.0] {
            let vm = VonMises::new(0.0, kappa).unwrap();
            let integral = quad::integrate(|x| vm.pdf(x), -PI, PI, 1e-12, 1e-12);
            assert!(
                (integral - 1.0).abs() < 1e-10,
                "kappa={kappa}: integral={integral}"
            );
        }
    }

    #[test]
    fn symmetric_about_mu() {
        let vm = VonMises::new(0.7, 4.0).unwrap();
        for i in 1..100 {
            let delta = i as f64 * 0.05;
            let lhs = vm.pdf(0.7 + delta);
            let rhs = vm.pdf(0.7 - delta);
            assert!((lhs - rhs).abs() < 1e-14 * lhs.max(1.0));
        }
    }

    #[test]
    fn mode_dominates_grid() {
        let vm = VonMises::new(-0.6, 2.5).unwrap();
        let peak = vm.pdf(-0.6);
        for x in linspace(-PI, PI, 401) {
            assert!(vm.pdf(x) <= peak + 1e-15);
        }
    }

    #[test]
    fn peak_monotone_in_kappa() {
        let mut prev = 0.0;
        for &kappa in &[0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0] {
            let peak = VonMises::new(0.0, kappa).unwrap().pdf(0.0);
            assert!(peak >= prev);
            prev = peak;
        }
    }

    #[test]
    fn periodic_extension_wraps() {
        let vm = VonMises::new(1.2, 3.0).unwrap();
        for i in 0..20 {
            let x = -0.9 + 0.1 * i as f64;
            assert!((vm.pdf(x + TAU) - vm.pdf(x)).abs() < 1e-14);
            assert!((vm.pdf(x - TAU) - vm.pdf(x)).abs() < 1e-14);
        }
    }

    #[test]
    fn circular_variance_values() {
        assert_eq!(VonMises::new(0.0, 0.0).unwrap().circular_variance(), 1.0);
        // 1 - I_1(1)/I_0(1)
        let v1 = VonMises::new(0.0, 1.0).unwrap().circular_variance();
        assert!((v1 - 0.553_610_034_103).abs() < 1e-10);
        // large kappa: ~ 1/(2 kappa)
        let v100 = VonMises::new(0.0, 100.0).unwrap().circular_variance();
        assert!(v100 < 0.006 && v100 > 0.004, "v100={v100}");
        // in range and monotone enough to stay within [0, 1]
        for &kappa in &[0.1, 2.0, 7.0, 30.0] {
            let v = VonMises::new(0.0, kappa).unwrap().circular_variance();
            assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn gaussian_limit_improves_with_kappa() {
        let grid100 = linspace(-0.3, 0.3, 201);
        let e100 = gaussian_limit_error(100.0, &grid100).unwrap();
        assert!(e100 < 0.01, "e100={e100}");
        let s = 1.0 / (1000.0_f64).sqrt();
        let grid1000 = linspace(-3.0 * s, 3.0 * s, 201);
        let e1000 = gaussian_limit_error(1000.0, &grid1000).unwrap();
        assert!(e1000 < 0.001, "e1000={e1000}");
        assert!(e1000 < e100);
    }

    #[test]
    fn uniform_limit_small_kappa() {
        let grid = linspace(-PI, PI, 201);
        let e = uniform_limit_error(1e-3, &grid).unwrap();
        assert!(e <= 1e-3, "e={e}");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(VonMises::new(0.0, -1.0).is_err());
        assert!(VonMises::new(f64::NAN, 1.0).is_err());
        assert!(gaussian_limit_error(0.0, &[0.0]).is_err());
        assert!(gaussian_limit_error(1.0, &[]).is_err());
        assert!(uniform_limit_error(1.0, &[]).is_err());
    }

    #[test]
    fn mu_is_wrapped() {
        let vm = VonMises::new(3.0 * PI, 1.0).unwrap();
        assert!((vm.mu() - PI).abs() < 1e-12 || (vm.mu() + PI).abs() < 1e-12);
    }
}
