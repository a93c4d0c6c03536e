//! The functional-equation factor `phi(s)` with `eta(s) = phi(s) eta(1 - s)`
//! on the critical strip, its polar form, the rotation-matrix view of the
//! equation, the Omega residuals, and the closed forms of `phi` and its
//! argument on the critical line.

use std::f64::consts::{LN_2, PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eta::{
    self, accelerated_sum, eta_components, ln_total_variation, SeriesValue, StripPoint,
};
use crate::specialfn::{
    arctan2, circular_distance, gamma, lanczos_log_gamma, normalize_angle, riemann_siegel_theta,
    Angle,
};

/// Largest `|Im s|` accepted by the closed-form routes.
pub const OVERFLOW_GUARD: f64 = 700.0;

/// Above this `|Im s|` the products are assembled in log space; below it the
/// hyperbolic and Gamma factors are multiplied directly.
pub const DIRECT_PRODUCT_LIMIT: f64 = 200.0;

/// Default tolerance of the predicate `theta != 0 (mod 2 pi)`.
pub const DEFAULT_THETA_TOL: f64 = 1e-6;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

fn guard(beta: f64) -> Result<()> {
    if !beta.is_finite() {
        return Err(Error::Domain(format!("non-finite beta {beta}")));
    }
    if beta.abs() > OVERFLOW_GUARD {
        return Err(Error::Overflow {
            beta,
            limit: OVERFLOW_GUARD,
        });
    }
    Ok(())
}

/// `ln sin(w)` up to a multiple of `2 pi i`, without overflow for large `|Im w|`.
fn ln_sin(w: Complex64) -> Complex64 {
    let i = Complex64::i();
    if w.im >= 0.0 {
        -i * w + (((2.0 * i * w).exp() - ONE) / (2.0 * i)).ln()
    } else {
        i * w + ((ONE - (-2.0 * i * w).exp()) / (2.0 * i)).ln()
    }
}

fn log_phi(s: Complex64) -> Complex64 {
    let ln_pi = PI.ln();
    // ln(-2) = ln 2 + i pi
    Complex64::new(LN_2, PI) + (ONE - ((s - 1.0) * LN_2).exp()).ln() - (ONE - (s * LN_2).exp()).ln()
        + (s - 1.0) * ln_pi
        + ln_sin(s * (0.5 * PI))
        + lanczos_log_gamma(ONE - s)
}

/// The factor with `eta(s) = phi(s) eta(1 - s)`:
/// `phi(s) = 2^s (1 - 2^(1-s)) / (1 - 2^s) pi^(s-1) sin(pi s / 2) Gamma(1 - s)`,
/// i.e. `-2 (1 - 2^(s-1)) / (1 - 2^s) ...`. It satisfies `phi(1/2) = 1`.
pub fn phi(s: StripPoint) -> Result<Complex64> {
    guard(s.beta())?;
    let z = s.to_complex();
    let value = if s.beta().abs() <= DIRECT_PRODUCT_LIMIT {
        let ratio = (ONE - ((z - 1.0) * LN_2).exp()) / (ONE - (z * LN_2).exp());
        let pi_power = ((z - 1.0) * PI.ln()).exp();
        -2.0 * ratio * pi_power * (z * (0.5 * PI)).sin() * gamma(ONE - z)?
    } else {
        log_phi(z).exp()
    };
    crate::specialfn::ensure_finite(value, "phi")
}

/// Modulus and principal argument of `phi(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarForm {
    pub modulus: f64,
    pub arg: Angle,
}

impl PolarForm {
    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.modulus, self.arg.value())
    }

    /// Real part `rho cos theta`.
    pub fn real(&self) -> f64 {
        self.modulus * self.arg.cos()
    }

    /// Imaginary part `rho sin theta`.
    pub fn imag(&self) -> f64 {
        self.modulus * self.arg.sin()
    }
}

pub fn polar_of(z: Complex64, at: StripPoint) -> Result<PolarForm> {
    let modulus = z.norm();
    if modulus == 0.0 {
        return Err(Error::UndefinedPolar(at.to_string()));
    }
    Ok(PolarForm {
        modulus,
        arg: arctan2(z.re, z.im)?,
    })
}

/// Polar form `rho(s) exp(i theta(s))` of `phi(s)`.
pub fn polar(s: StripPoint) -> Result<PolarForm> {
    polar_of(phi(s)?, s)
}

/// `pi^(i beta - 1/2)` as `(cos(beta ln pi) + i sin(beta ln pi)) / sqrt(pi)`.
pub fn pi_power_closed(beta: f64) -> Complex64 {
    Complex64::from_polar(1.0 / PI.sqrt(), beta * PI.ln())
}

/// `(2^(i beta - 1/2) - 1) / (2^(i beta + 1/2) - 1)` evaluated as a complex quotient.
pub fn two_ratio_direct(beta: f64) -> Complex64 {
    let c = Complex64::from_polar(1.0, beta * LN_2);
    (c / SQRT_2 - ONE) / (c * SQRT_2 - ONE)
}

/// The same ratio through its real/imaginary decomposition in `cos(beta ln 2)`
/// and `sin(beta ln 2)`.
pub fn two_ratio_closed(beta: f64) -> Complex64 {
    let (sin, cos) = (beta * LN_2).sin_cos();
    let denom = cos - 0.75 * SQRT_2;
    Complex64::new(
        0.75 * (cos - (2.0 / 3.0) * SQRT_2) / denom,
        -0.25 * sin / denom,
    )
}

/// `cosh(pi beta / 2) + i sinh(pi beta / 2)`.
pub fn hyperbolic_factor(beta: f64) -> Complex64 {
    let x = 0.5 * PI * beta;
    Complex64::new(x.cosh(), x.sinh())
}

/// `arctan(tanh(pi beta / 2))`, the argument of [`hyperbolic_factor`].
pub fn hyperbolic_arg(beta: f64) -> f64 {
    (0.5 * PI * beta).tanh().atan()
}

/// Continuous (unreduced) argument of `Gamma(1/2 - i beta)`:
/// `-(2 theta_rs(beta) + beta ln(2 pi) + arctan(tanh(pi beta / 2)))`.
pub fn gamma_half_line_arg(beta: f64) -> f64 {
    -(2.0 * riemann_siegel_theta(beta) + beta * (2.0 * PI).ln() + hyperbolic_arg(beta))
}

/// `sqrt(pi) / sqrt(cosh(pi beta))`, evaluated without overflow.
fn gamma_half_line_modulus(beta: f64) -> f64 {
    let x = PI * beta.abs();
    PI.sqrt() * (-0.5 * x).exp() * (2.0 / (1.0 + (-2.0 * x).exp())).sqrt()
}

/// `Gamma(1/2 - i beta)` from the Riemann–Siegel theta function:
/// `sqrt(pi) exp(-i(2 theta_rs + beta ln 2 pi + arctan tanh(pi beta/2))) / sqrt(cosh pi beta)`.
pub fn gamma_half_line(beta: f64) -> Result<Complex64> {
    guard(beta)?;
    let modulus = gamma_half_line_modulus(beta);
    if modulus == 0.0 {
        return Err(Error::Overflow {
            beta,
            limit: OVERFLOW_GUARD,
        });
    }
    Ok(Complex64::from_polar(modulus, gamma_half_line_arg(beta)))
}

/// `phi(1/2 + i beta)` assembled factor by factor:
/// `-sqrt 2 * pi^(i beta - 1/2) * ratio * (cosh + i sinh)(pi beta/2) * Gamma(1/2 - i beta)`.
pub fn phi_critical(beta: f64) -> Result<Complex64> {
    guard(beta)?;
    let head = -SQRT_2 * pi_power_closed(beta) * two_ratio_closed(beta);
    let tail = if beta.abs() <= DIRECT_PRODUCT_LIMIT {
        hyperbolic_factor(beta) * gamma_half_line(beta)?
    } else {
        // (cosh x + i sinh x) / sqrt(cosh 2x) with x = pi beta / 2, times sqrt(pi) e^{i psi}
        let e = (-PI * beta.abs()).exp();
        let unit =
            Complex64::new(1.0 + e, beta.signum() * (1.0 - e)) / (2.0 * (1.0 + e * e)).sqrt();
        unit * Complex64::from_polar(PI.sqrt(), gamma_half_line_arg(beta))
    };
    crate::specialfn::ensure_finite(head * tail, "phi_critical")
}

/// `-arctan( (1/3) sin(beta ln 2) / (cos(beta ln 2) - (2/3) sqrt 2) )`: the
/// scalar arctan form of the ratio's argument. It misses a `pi` whenever the
/// ratio has negative real part.
pub fn ratio_arg_arctan(beta: f64) -> f64 {
    let (sin, cos) = (beta * LN_2).sin_cos();
    -((sin / 3.0) / (cos - (2.0 / 3.0) * SQRT_2)).atan()
}

/// `-(beta ln 2 + arctan((1/3) sin(beta ln 2) / (cos(beta ln 2) - (2/3) sqrt 2))) / 2`.
///
/// Odd in `beta`, zero at the origin.
pub fn half_ratio_phase(beta: f64) -> f64 {
    0.5 * (ratio_arg_arctan(beta) - beta * LN_2)
}

/// `theta(1/2 + i beta)` predicted as `2 (g(beta) - theta_rs(beta))` reduced mod `2 pi`,
/// with `g` = [`half_ratio_phase`].
pub fn theta_from_g(beta: f64) -> Angle {
    normalize_angle(2.0 * (half_ratio_phase(beta) - riemann_siegel_theta(beta)))
}

/// Argument decomposition of `phi(1/2 + i beta)` into its factors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArgBreakdown {
    pub beta: f64,
    /// Argument of the constant prefactor `-sqrt 2`, i.e. `pi`.
    pub prefactor_arg: Angle,
    /// `beta ln pi`, argument of `pi^(i beta - 1/2)`; unreduced.
    pub pi_power_arg: f64,
    /// Principal argument of the ratio `(2^(i beta-1/2) - 1)/(2^(i beta+1/2) - 1)`.
    pub ratio_arg: Angle,
    /// The scalar-arctan form of the same argument.
    pub ratio_arg_arctan: f64,
    /// `arctan(tanh(pi beta / 2))`.
    pub hyperbolic_arg: f64,
    /// Argument of `Gamma(1/2 - i beta)`; unreduced.
    pub gamma_arg: f64,
    /// `g(beta)`; unreduced.
    pub half_ratio_phase: f64,
    /// Riemann–Siegel theta; unreduced.
    pub rs_theta: f64,
    /// Sum of all factor arguments reduced to `(-pi, pi]`; equals `arg phi`.
    pub total: Angle,
    /// `beta ln pi + ratio_arg + hyperbolic_arg + gamma_arg` reduced, i.e. the
    /// sum with the prefactor taken as `+sqrt 2`.
    pub positive_prefactor_total: Angle,
    /// `2 (g - theta_rs)` reduced to `(-pi, pi]`.
    pub doubled_offset: Angle,
}

pub fn arg_breakdown(beta: f64) -> ArgBreakdown {
    let ratio = two_ratio_direct(beta);
    // The ratio never vanishes: its modulus is 1/sqrt 2 for every real beta.
    let ratio_arg = arctan2(ratio.re, ratio.im).unwrap_or(Angle::ZERO);
    let pi_power_arg = beta * PI.ln();
    let hyp = hyperbolic_arg(beta);
    let gamma_arg = gamma_half_line_arg(beta);
    let factor_sum = pi_power_arg + ratio_arg.value() + hyp + gamma_arg;
    ArgBreakdown {
        beta,
        prefactor_arg: Angle::new(PI),
        pi_power_arg,
        ratio_arg,
        ratio_arg_arctan: ratio_arg_arctan(beta),
        hyperbolic_arg: hyp,
        gamma_arg,
        half_ratio_phase: half_ratio_phase(beta),
        rs_theta: riemann_siegel_theta(beta),
        total: normalize_angle(PI + factor_sum),
        positive_prefactor_total: normalize_angle(factor_sum),
        doubled_offset: theta_from_g(beta),
    }
}

/// Whether `theta` is bounded away from `0 (mod 2 pi)` by more than `theta_tol`.
pub fn theta_is_nonzero(theta: Angle, theta_tol: f64) -> bool {
    circular_distance(theta, Angle::ZERO) > theta_tol
}

/// The series `sum (-1)^(n-1) n^(-alpha) (1 - n^(2 alpha - 1) rho^2) e^(i beta ln n)`
/// next to its closed-form reduction `conj(eta(s)) - rho^2 eta(1 - s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OmegaResidual {
    pub series: SeriesValue,
    pub closed_form: Complex64,
    pub closed_form_bound: f64,
    pub rho_squared: f64,
}

impl OmegaResidual {
    /// `|series - closed form|`.
    pub fn route_gap(&self) -> f64 {
        (self.series.value - self.closed_form).norm()
    }
}

pub fn omega_residual(s: StripPoint, tol: f64) -> Result<OmegaResidual> {
    eta::check_tol(tol)?;
    let rho_squared = polar(s)?.modulus.powi(2);
    let z = s.to_complex();
    let mirror = s.reflected().to_complex();
    // Total variation of the combined measure: |mu_conj(s)| + rho^2 |mu_(1-s)|.
    let a = ln_total_variation(z);
    let b = rho_squared.ln() + ln_total_variation(mirror);
    let hi = a.max(b);
    let ln_variation = hi + ((a - hi).exp() + (b - hi).exp()).ln();
    let term = |k: usize| {
        let l = ((k + 1) as f64).ln();
        let phase = Complex64::from_polar(1.0, s.beta() * l);
        // n^(-alpha) (1 - n^(2 alpha - 1) rho^2) = n^(-alpha) - rho^2 n^(alpha - 1)
        phase * ((-s.alpha() * l).exp() - rho_squared * ((s.alpha() - 1.0) * l).exp())
    };
    // Terms carry rho^2, so the rounding floor scales with it. Settle for that
    // floor (reported in the error bound) rather than failing outright.
    let series = match accelerated_sum(ln_variation, s.beta(), tol, term) {
        Err(Error::Convergence { best, .. }) if best <= tol * rho_squared.max(1.0) => {
            accelerated_sum(ln_variation, s.beta(), 2.0 * best, term)?
        }
        other => other?,
    };
    let direct = eta::eta(z, tol)?;
    // rho^2 amplifies the error of eta(1 - s); ask for correspondingly more
    // accuracy when the rounding floor allows it.
    let reflected = match eta::eta(mirror, tol / rho_squared.max(1.0)) {
        Ok(v) => v,
        Err(Error::Convergence { .. }) => eta::eta(mirror, tol)?,
        Err(e) => return Err(e),
    };
    Ok(OmegaResidual {
        series,
        closed_form: direct.value.conj() - rho_squared * reflected.value,
        closed_form_bound: direct.error_bound + rho_squared * reflected.error_bound,
        rho_squared,
    })
}

/// Residuals of the Omega conditions `x = u`, `y = -v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OmegaMembership {
    /// `|x - u|`
    pub r1: f64,
    /// `|y + v|`
    pub r2: f64,
    pub member: bool,
}

pub fn omega_membership(s: StripPoint, tol: f64) -> Result<OmegaMembership> {
    let c = eta_components(s, tol)?;
    let r1 = (c.x.value - c.u.value).abs();
    let r2 = (c.y.value + c.v.value).abs();
    Ok(OmegaMembership {
        r1,
        r2,
        member: r1 < tol && r2 < tol,
    })
}

/// A 2x2 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rotation2 {
    pub entries: [f64; 4],
}

impl Rotation2 {
    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Self {
            entries: [a11, a12, a21, a22],
        }
    }

    /// Counter-clockwise rotation by `angle`.
    pub fn rotation(angle: Angle) -> Self {
        let (sin, cos) = angle.value().sin_cos();
        Self::new(cos, -sin, sin, cos)
    }

    pub fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn scaled(&self, k: f64) -> Self {
        let [a, b, c, d] = self.entries;
        Self::new(k * a, k * b, k * c, k * d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = other.entries;
        Self::new(a - e, b - f, c - g, d - h)
    }

    pub fn determinant(&self) -> f64 {
        let [a, b, c, d] = self.entries;
        a * d - b * c
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        let [a, b, c, d] = self.entries;
        [a * v[0] + b * v[1], c * v[0] + d * v[1]]
    }

    /// Largest absolute entry-wise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `(x, y) = A (u, v)` with `A = rho B` and `B` the rotation by `theta(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotationForm {
    pub scaled: Rotation2,
    pub rotation: Rotation2,
    /// `det(I - B)`, equal to `-2 (cos theta - 1)`.
    pub fixed_point_det: f64,
    pub polar: PolarForm,
}

impl RotationForm {
    /// `(u, v) -> (x, y)`.
    pub fn forward(&self, uv: [f64; 2]) -> [f64; 2] {
        self.scaled.apply(uv)
    }

    /// `(x, y) -> (u, v)` through `u = (x phi1 + y phi2) / rho^2`,
    /// `v = (-x phi2 + y phi1) / rho^2`.
    pub fn inverse(&self, xy: [f64; 2]) -> [f64; 2] {
        let rho2 = self.polar.modulus * self.polar.modulus;
        let (p1, p2) = (self.polar.real(), self.polar.imag());
        [
            (xy[0] * p1 + xy[1] * p2) / rho2,
            (-xy[0] * p2 + xy[1] * p1) / rho2,
        ]
    }
}

pub fn build_rotation(s: StripPoint) -> Result<RotationForm> {
    let p = polar(s)?;
    let rotation = Rotation2::rotation(p.arg);
    Ok(RotationForm {
        scaled: rotation.scaled(p.modulus),
        rotation,
        fixed_point_det: Rotation2::identity().sub(&rotation).determinant(),
        polar: p,
    })
}
