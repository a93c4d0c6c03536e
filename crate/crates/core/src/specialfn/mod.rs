//! Special-function kernel: complex Gamma, the Riemann–Siegel theta function
//! and principal-value angle utilities.

mod angle;
mod gamma;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use angle::{arctan2, circular_distance, normalize_angle, Angle};
pub(crate) use gamma::lanczos_log_gamma;
pub use gamma::{gamma, log_gamma};

/// Riemann–Siegel theta, `arg Gamma(1/4 + it/2) - (t/2) ln pi`.
///
/// The value is continuous in `t` and is not reduced modulo `2 pi`.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    if !t.is_finite() {
        return f64::NAN;
    }
    lanczos_log_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// Rejects NaN or infinite components.
pub fn ensure_finite(z: Complex64, op: &'static str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(op))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_vanishes_at_origin() {
        assert_eq!(riemann_siegel_theta(0.0), 0.0);
    }

    #[test]
    fn theta_is_odd() {
        for t in [1.0, 10.0, 30.0] {
            let r = riemann_siegel_theta(t) + riemann_siegel_theta(-t);
            assert!(r.abs() < 1e-12, "t = {t}: {r}");
        }
    }

    #[test]
    fn theta_changes_sign_near_seventeen_point_eight() {
        assert!(riemann_siegel_theta(17.8) < 0.0);
        assert!(riemann_siegel_theta(17.9) > 0.0);
    }

    #[test]
    fn theta_is_continuous() {
        let h = 1e-3;
        let mut prev = riemann_siegel_theta(-50.0);
        for i in 1..=100_000 {
            let t = -50.0 + i as f64 * h;
            let cur = riemann_siegel_theta(t);
            assert!((cur - prev).abs() < 0.1, "jump at t = {t}");
            prev = cur;
        }
    }

    #[test]
    fn non_finite_input() {
        assert!(riemann_siegel_theta(f64::NAN).is_nan());
        assert!(ensure_finite(Complex64::new(f64::INFINITY, 0.0), "x").is_err());
    }
}
