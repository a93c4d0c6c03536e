//! Chebyshev-weight acceleration of alternating series (Cohen, Rodriguez
//! Villegas and Zagier).
//!
//! For `S = sum_{k>=0} (-1)^k a_k` with `a_k = integral_0^1 x^k dmu(x)`, the
//! weighted sum `sum_{k<n} w_k a_k` differs from `S` by at most
//! `|mu| / d_n`, where `|mu|` is the total variation of the measure and
//! `d_n = cosh(n ln(3 + sqrt 8)) >= (3 + sqrt 8)^n / 2`.

use std::f64::consts::LN_2;

/// `ln(3 + sqrt 8)`.
pub(crate) const LN_DECAY: f64 = 1.762_747_174_039_086;

/// Upper limit on the number of accelerated terms.
pub const MAX_TERMS: usize = 2000;

pub(crate) const MIN_TERMS: usize = 4;

/// `ln d_n` for `d_n = cosh(n ln(3 + sqrt 8))`.
pub(crate) fn ln_d(n: usize) -> f64 {
    let x = n as f64 * LN_DECAY;
    x + (-2.0 * x).exp().ln_1p() - LN_2
}

/// Smallest `n` in `[MIN_TERMS, MAX_TERMS]` with `exp(ln_scale) / d_n <= target`.
pub(crate) fn terms_for(ln_scale: f64, target: f64) -> Option<usize> {
    if !(target > 0.0) || !ln_scale.is_finite() {
        return None;
    }
    let ln_target = target.ln();
    let guess = ((ln_scale - ln_target + LN_2) / LN_DECAY).ceil();
    let mut n = if guess.is_finite() && guess > MIN_TERMS as f64 {
        (guess as usize).saturating_sub(2).max(MIN_TERMS)
    } else {
        MIN_TERMS
    };
    while n <= MAX_TERMS {
        if ln_scale - ln_d(n) <= ln_target {
            return Some(n);
        }
        n += 1;
    }
    None
}

/// `x * 2^e` without intermediate overflow for large `|e|`.
fn scale_pow2(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
        if x == 0.0 {
            return 0.0;
        }
    }
    x * 2f64.powi(e as i32)
}

/// Weights `w_k`, `k < n`, with `sum_{k>=0} (-1)^k a_k ~ sum_{k<n} w_k a_k`.
///
/// The alternating sign is folded into the weights. The recurrence runs on
/// `b_k / d_n` held as a mantissa times a power of two, so the weights stay
/// accurate for term counts where `d_n` itself overflows.
pub(crate) fn weights(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let log2_inv_d = -ln_d(n) / LN_2;
    let whole = log2_inv_d.floor();
    let frac_factor = (log2_inv_d - whole).exp2();
    let mut exponent = whole as i64;
    let mut mantissa = -frac_factor;
    let mut c = -1.0;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let b = scale_pow2(mantissa, exponent);
        c = b - c;
        out.push(c);
        let kf = k as f64;
        mantissa *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
        if mantissa.abs() > 2f64.powi(500) {
            mantissa *= 2f64.powi(-500);
            exponent += 500;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decay_constant() {
        assert!((LN_DECAY - (3.0 + 8f64.sqrt()).ln()).abs() < 1e-15);
    }

    #[test]
    fn weights_start_alternating_and_taper() {
        let w = weights(30);
        assert!((w[0] - 1.0).abs() < 1e-15);
        assert!((w[1] + 1.0).abs() < 1e-12);
        assert!(w[29].abs() < 1e-4);
        assert!(w[29].abs() < w[25].abs());
        for pair in w.windows(2) {
            assert!(pair[0] * pair[1] < 0.0);
        }
    }

    #[test]
    fn matches_unscaled_recurrence() {
        // Reference: the textbook recurrence with d held explicitly.
        let n = 40usize;
        let nf = n as f64;
        let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
        d = 0.5 * (d + 1.0 / d);
        let mut b = -1.0;
        let mut c = -d;
        for (k, w) in weights(n).into_iter().enumerate() {
            c = b - c;
            assert!((w - c / d).abs() < 1e-14, "k = {k}");
            let kf = k as f64;
            b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
        }
    }

    #[test]
    fn large_term_counts_stay_finite() {
        let w = weights(MAX_TERMS);
        assert!(w.iter().all(|x| x.is_finite()));
        assert!((w[0] - 1.0).abs() < 1e-15);
        assert!(w.iter().all(|x| x.abs() <= 1.0 + 1e-12));
    }

    #[test]
    fn log2_sum() {
        // sum (-1)^k / (k + 1) = ln 2
        let w = weights(25);
        let s: f64 = w
            .iter()
            .enumerate()
            .map(|(k, w)| w / (k as f64 + 1.0))
            .sum();
        assert!((s - LN_2).abs() < 1e-15);
    }

    #[test]
    fn term_count_selection() {
        let n = terms_for(0.0, 1e-10).unwrap();
        assert!(-ln_d(n) <= 1e-10f64.ln());
        assert!(-ln_d(n - 1) > 1e-10f64.ln());
        assert!(terms_for(5000.0, 1e-10).is_none());
        assert!(terms_for(0.0, 0.0).is_none());
    }
}
