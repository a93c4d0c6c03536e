//! Complex Gamma and log-Gamma.
//!
//! `log_gamma` uses the Lanczos approximation with Godfrey's coefficients
//! (g = 607/128, 15 terms), which is accurate to a few ulps of the result
//! across the closed right half-plane. `gamma` falls back on the reflection
//! formula left of `Re z = 1/2`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G_PLUS_HALF: f64 = 5.242_187_5;
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_140_8e-5,
    3.689_918_265_953_162_5e-6,
];

/// Principal branch of `ln Gamma(z)` for `Re z > 0`.
///
/// The imaginary part is the continuous argument obtained by continuation
/// from the positive real axis, not a value reduced modulo `2 pi`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.im.is_finite() || !z.re.is_finite() {
        return Err(Error::Domain(format!(
            "log_gamma requires Re z > 0, got {z}"
        )));
    }
    let value = lanczos_log_gamma(z);
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("log_gamma"))
    }
}

/// Unchecked kernel; caller guarantees `Re z > 0`.
pub(crate) fn lanczos_log_gamma(z: Complex64) -> Complex64 {
    let shifted = z + LANCZOS_G_PLUS_HALF;
    let head = (z + 0.5) * shifted.ln() - shifted;
    let mut series = Complex64::new(LANCZOS_C0, 0.0);
    let mut denom = z;
    for c in LANCZOS_COEFFS {
        denom += 1.0;
        series += c / denom;
    }
    // The two logarithms are taken separately so each stays on its principal
    // branch; their sum is then continuous in the right half-plane.
    head + (series * SQRT_TWO_PI).ln() - z.ln()
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `Gamma(z)` on the whole plane minus the poles `0, -1, -2, ...`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {z}")));
    }
    if is_pole(z) {
        return Err(Error::Pole {
            function: "gamma",
            at: z.to_string(),
        });
    }
    let value = if z.re >= 0.5 {
        lanczos_log_gamma(z).exp()
    } else {
        let one_minus = Complex64::new(1.0, 0.0) - z;
        PI / ((z * PI).sin() * lanczos_log_gamma(one_minus).exp())
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("gamma"))
    }
}
