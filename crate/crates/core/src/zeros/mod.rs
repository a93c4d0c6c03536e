//! Critical-line zeros: sign-change scanning of the rotated zeta function,
//! Brent refinement and per-zero diagnostics.

pub mod roots;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eta::{self, StripPoint};
use crate::funceq::{self, DEFAULT_THETA_TOL};
use crate::specialfn::{riemann_siegel_theta, Angle};

pub use roots::{brent, find_brackets, uniform_grid, Bracket, BracketSearch, RootEstimate};

pub const DEFAULT_STEP: f64 = 0.02;
pub const DEFAULT_REFINE_TOL: f64 = 1e-9;
pub const DEFAULT_SERIES_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub t_lo: f64,
    pub t_hi: f64,
    pub step: f64,
    pub refine_tol: f64,
    pub series_tol: f64,
}

impl ScanConfig {
    /// Range `[t_lo, t_hi]` with default step and tolerances.
    pub fn new(t_lo: f64, t_hi: f64) -> Result<Self> {
        let config = Self {
            t_lo,
            t_hi,
            step: DEFAULT_STEP,
            refine_tol: DEFAULT_REFINE_TOL,
            series_tol: DEFAULT_SERIES_TOL,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_lo.is_finite() && self.t_hi.is_finite()) || self.t_lo >= self.t_hi {
            return Err(Error::InvalidConfig(format!(
                "scan range needs t_lo < t_hi, got [{}, {}]",
                self.t_lo, self.t_hi
            )));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "step must be positive, got {}",
                self.step
            )));
        }
        for (name, v) in [
            ("refine_tol", self.refine_tol),
            ("series_tol", self.series_tol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// A refined zero on the critical line with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub beta: f64,
    /// `|eta(1/2 + i beta)|`
    pub eta_abs: f64,
    pub omega_r1: f64,
    pub omega_r2: f64,
    /// Argument of the functional-equation factor at `1/2 + i beta`.
    pub theta: Angle,
    pub theta_nonzero: bool,
    /// Magnitude of the reflected-difference series at `1/2 + i beta`.
    pub eq8_abs: f64,
    pub bracket: Bracket,
}

impl ZeroRecord {
    /// `eta_abs < 10 refine_tol`.
    pub fn is_accepted(&self, refine_tol: f64) -> bool {
        self.eta_abs < 10.0 * refine_tol
    }
}

/// `e^(i theta(t)) zeta(1/2 + it)` without the realness check.
pub fn rotated_zeta(t: f64, tol: f64) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("t must be finite, got {t}")));
    }
    let z = eta::zeta_from_eta(Complex64::new(0.5, t), tol)?;
    Ok(Complex64::from_polar(1.0, riemann_siegel_theta(t)) * z.value)
}

/// Real part of `e^(i theta(t)) zeta(1/2 + it)`; its sign changes bracket zeros.
///
/// Fails with [`Error::RealnessViolation`] if the imaginary part exceeds
/// `10 tol`.
pub fn hardy_like(t: f64, tol: f64) -> Result<f64> {
    let w = rotated_zeta(t, tol)?;
    let limit = 10.0 * tol;
    if w.im.abs() > limit {
        return Err(Error::RealnessViolation {
            t,
            imag: w.im,
            limit,
        });
    }
    Ok(w.re)
}

/// Thread pool with `jobs` workers; `0` means available parallelism.
pub fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))
}

/// Sign-change brackets of [`hardy_like`] over the config grid, ascending.
pub fn scan(config: &ScanConfig, jobs: usize) -> Result<Vec<Bracket>> {
    config.validate()?;
    let grid = uniform_grid(config.t_lo, config.t_hi, config.step)?;
    let tol = config.series_tol;
    find_brackets(
        &grid,
        |t| hardy_like(t, tol),
        BracketSearch::default(),
        &pool(jobs)?,
    )
}

/// Refined ordinate inside `bracket`, and the final enclosing interval.
pub fn refine(bracket: Bracket, refine_tol: f64, series_tol: f64) -> Result<RootEstimate> {
    brent(
        |t| hardy_like(t, series_tol),
        bracket.0,
        bracket.1,
        refine_tol,
    )
}

/// Diagnostics for a refined zero `1/2 + i beta`.
pub fn analyze_zero(beta: f64, bracket: Bracket, series_tol: f64) -> Result<ZeroRecord> {
    analyze_zero_with(beta, bracket, series_tol, DEFAULT_THETA_TOL)
}

pub fn analyze_zero_with(
    beta: f64,
    bracket: Bracket,
    series_tol: f64,
    theta_tol: f64,
) -> Result<ZeroRecord> {
    let s = StripPoint::critical(beta)?;
    let eta_abs = eta::eta(s.to_complex(), series_tol)?.value.norm();
    let omega = funceq::omega_membership(s, series_tol)?;
    let theta = funceq::polar(s)?.arg;
    let eq8_abs = funceq::omega_residual(s, series_tol)?.series.value.norm();
    Ok(ZeroRecord {
        beta,
        eta_abs,
        omega_r1: omega.r1,
        omega_r2: omega.r2,
        theta,
        theta_nonzero: funceq::theta_is_nonzero(theta, theta_tol),
        eq8_abs,
        bracket,
    })
}

/// Scan, refine and analyze every zero in the configured range.
pub fn find_zeros(config: &ScanConfig, jobs: usize) -> Result<Vec<ZeroRecord>> {
    let brackets = scan(config, jobs)?;
    pool(jobs)?.install(|| {
        brackets
            .par_iter()
            .map(|&b| {
                let r = refine(b, config.refine_tol, config.series_tol)?;
                analyze_zero(r.root, r.bracket, config.series_tol)
            })
            .collect()
    })
}
