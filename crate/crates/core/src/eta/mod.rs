//! The alternating zeta (Dirichlet eta) series on `Re s > 0`, its four real
//! component series, and zeta recovered through `eta(s) = (1 - 2^(1-s)) zeta(s)`.
//!
//! Every series is summed with Chebyshev-weight acceleration, so the number of
//! terms is fixed by the requested tolerance and grows roughly like
//! `0.9 |Im s| + 1.3 log10(1/tol)` rather than with the slow `n^(-Re s)` decay
//! of the raw partial sums.

pub(crate) mod accel;

use std::f64::consts::LN_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specialfn::lanczos_log_gamma;
use crate::sum::ComplexSum;

pub use accel::MAX_TERMS;

/// Default absolute tolerance for series evaluations.
pub const DEFAULT_TOL: f64 = 1e-10;

/// A point `alpha + i beta` of the open critical strip `0 < alpha < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawStripPoint")]
pub struct StripPoint {
    alpha: f64,
    beta: f64,
}

#[derive(Deserialize)]
struct RawStripPoint {
    alpha: f64,
    beta: f64,
}

impl TryFrom<RawStripPoint> for StripPoint {
    type Error = Error;

    fn try_from(raw: RawStripPoint) -> Result<Self> {
        StripPoint::new(raw.alpha, raw.beta)
    }
}

impl StripPoint {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain(format!(
                "strip point requires 0 < Re s < 1, got Re s = {alpha}"
            )));
        }
        if !beta.is_finite() {
            return Err(Error::Domain(format!("non-finite Im s = {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    /// Point on the critical line `Re s = 1/2`.
    pub fn critical(beta: f64) -> Result<Self> {
        Self::new(0.5, beta)
    }

    pub fn from_complex(s: Complex64) -> Result<Self> {
        Self::new(s.re, s.im)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.alpha, self.beta)
    }

    /// The mirror point `1 - s`.
    pub fn reflected(&self) -> StripPoint {
        StripPoint {
            alpha: 1.0 - self.alpha,
            beta: -self.beta,
        }
    }
}

impl fmt::Display for StripPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.alpha, self.beta)
    }
}

/// A truncated-series result with its error bound.
///
/// `error_bound` is the sum of the scheme's truncation bound (rigorous for the
/// exact weights, inflated by `1 + |Im s| / 10`) and a first-order estimate of
/// the floating-point rounding error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: Complex64,
    pub error_bound: f64,
    pub terms_used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealSeriesValue {
    pub value: f64,
    pub error_bound: f64,
    pub terms_used: usize,
}

/// Real and imaginary parts of `eta(s) = x + iy` and `eta(1 - s) = u + iv`,
/// each summed as its own real series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EtaComponents {
    pub x: RealSeriesValue,
    pub y: RealSeriesValue,
    pub u: RealSeriesValue,
    pub v: RealSeriesValue,
}

impl EtaComponents {
    pub fn eta_s(&self) -> Complex64 {
        Complex64::new(self.x.value, self.y.value)
    }

    pub fn eta_reflected(&self) -> Complex64 {
        Complex64::new(self.u.value, self.v.value)
    }
}

/// `ln( Gamma(Re s) / |Gamma(s)| )`: log of the total variation of the
/// measure representing `a_k = (k + 1)^(-s)`.
pub(crate) fn ln_total_variation(s: Complex64) -> f64 {
    lanczos_log_gamma(Complex64::new(s.re, 0.0)).re - lanczos_log_gamma(s).re
}

pub(crate) fn safety_factor(beta: f64) -> f64 {
    1.0 + beta.abs() / 10.0
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

/// Sums `sum_{k>=0} (-1)^k term(k)` to within `tol`.
///
/// `ln_variation` is the log total variation of the representing measure;
/// `beta` sets the safety factor and the phase-rounding estimate.
pub(crate) fn accelerated_sum<F>(
    ln_variation: f64,
    beta: f64,
    tol: f64,
    term: F,
) -> Result<SeriesValue>
where
    F: Fn(usize) -> Complex64,
{
    check_tol(tol)?;
    let ln_scale = ln_variation + safety_factor(beta).ln();
    let best = (ln_scale - accel::ln_d(MAX_TERMS)).exp();
    let convergence = |bound: f64| Error::Convergence {
        tol,
        budget: MAX_TERMS,
        best: bound,
    };

    let mut target = 0.5 * tol;
    for _ in 0..2 {
        let n = accel::terms_for(ln_scale, target).ok_or_else(|| convergence(best))?;
        let mut sum = ComplexSum::new();
        let mut abs_sum = 0.0;
        let mut sq_sum = 0.0;
        for (k, w) in accel::weights(n).into_iter().enumerate() {
            let t = term(k) * w;
            let m = t.norm();
            abs_sum += m;
            sq_sum += m * m;
            sum.add(t);
        }
        let value = sum.value();
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::NonFinite("accelerated series"));
        }
        let truncation = (ln_scale - accel::ln_d(n)).exp();
        // Per-term products carry a few ulps; the phase beta*ln(k+1) carries an
        // absolute error ~ eps*|beta|*ln(k+1), accumulated in quadrature.
        let rounding =
            f64::EPSILON * (4.0 * abs_sum + beta.abs() * ((n + 1) as f64).ln() * sq_sum.sqrt());
        let bound = truncation + rounding;
        if bound <= tol {
            return Ok(SeriesValue {
                value,
                error_bound: bound,
                terms_used: n,
            });
        }
        if rounding >= tol {
            return Err(convergence(bound));
        }
        target = 0.9 * (tol - rounding);
    }
    Err(convergence(best))
}

fn check_right_half_plane(s: Complex64, what: &str) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("{what}: non-finite argument {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "{what}: series requires Re s > 0, got Re s = {}",
            s.re
        )));
    }
    Ok(())
}

/// `(k + 1)^(-s)` as magnitude and phase.
#[inline]
pub(crate) fn power_term(k: usize, s: Complex64) -> Complex64 {
    let l = ((k + 1) as f64).ln();
    Complex64::from_polar((-s.re * l).exp(), -s.im * l)
}

/// `eta(s) = sum_{n>=1} (-1)^(n-1) n^(-s)` for `Re s > 0`.
pub fn eta(s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_right_half_plane(s, "eta")?;
    accelerated_sum(ln_total_variation(s), s.im, tol, |k| power_term(k, s))
}

fn real_series<F>(s: Complex64, tol: f64, term: F) -> Result<RealSeriesValue>
where
    F: Fn(usize) -> f64,
{
    let v = accelerated_sum(ln_total_variation(s), s.im, tol, |k| {
        Complex64::new(term(k), 0.0)
    })?;
    Ok(RealSeriesValue {
        value: v.value.re,
        error_bound: v.error_bound,
        terms_used: v.terms_used,
    })
}

/// The four real component series of `eta(s)` and `eta(1 - s)`.
pub fn eta_components(s: StripPoint, tol: f64) -> Result<EtaComponents> {
    check_tol(tol)?;
    let (alpha, beta) = (s.alpha(), s.beta());
    let direct = s.to_complex();
    let mirror = Complex64::new(1.0 - alpha, beta);
    let scaled_trig = move |k: usize, exponent: f64| {
        let l = ((k + 1) as f64).ln();
        let m = (-exponent * l).exp();
        let (sin, cos) = (beta * l).sin_cos();
        (m * cos, m * sin)
    };
    Ok(EtaComponents {
        x: real_series(direct, tol, |k| scaled_trig(k, alpha).0)?,
        y: real_series(direct, tol, |k| -scaled_trig(k, alpha).1)?,
        u: real_series(mirror, tol, |k| scaled_trig(k, 1.0 - alpha).0)?,
        v: real_series(mirror, tol, |k| scaled_trig(k, 1.0 - alpha).1)?,
    })
}

/// `zeta(s) = eta(s) / (1 - 2^(1-s))` for `Re s > 0`, `s != 1`.
pub fn zeta_from_eta(s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_right_half_plane(s, "zeta_from_eta")?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "zeta",
            at: s.to_string(),
        });
    }
    if s.re == 1.0 {
        let turns = s.im * LN_2 / std::f64::consts::TAU;
        if (turns - turns.round()).abs() <= 1e-12 * turns.abs().max(1.0) {
            return Err(Error::FactorZero(s.to_string()));
        }
    }
    let factor = Complex64::new(1.0, 0.0) - ((Complex64::new(1.0, 0.0) - s) * LN_2).exp();
    let modulus = factor.norm();
    if modulus == 0.0 {
        return Err(Error::FactorZero(s.to_string()));
    }
    let eta_value = eta(s, tol)?;
    let value = eta_value.value / factor;
    Ok(SeriesValue {
        value,
        error_bound: eta_value.error_bound / modulus + 4.0 * f64::EPSILON * value.norm(),
        terms_used: eta_value.terms_used,
    })
}

/// Independent route to `eta(s)`: plain partial sums followed by `depth`
/// rounds of averaging neighbouring partial sums (Euler's transform of the
/// tail). No error bound is attached; it serves as a cross-check.
pub fn eta_averaged_partial_sums(
    s: Complex64,
    base_terms: usize,
    depth: usize,
) -> Result<Complex64> {
    check_right_half_plane(s, "eta_averaged_partial_sums")?;
    if base_terms == 0 {
        return Err(Error::InvalidConfig("base_terms must be positive".into()));
    }
    let mut sum = ComplexSum::new();
    let mut partials = Vec::with_capacity(depth + 1);
    for k in 0..base_terms + depth {
        let t = power_term(k, s);
        if k % 2 == 0 {
            sum.add(t);
        } else {
            sum.add(-t);
        }
        if k + 1 >= base_terms {
            partials.push(sum.value());
        }
    }
    while partials.len() > 1 {
        partials = partials.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
    }
    Ok(partials[0])
}
