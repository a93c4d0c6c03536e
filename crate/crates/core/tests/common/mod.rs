//! Reference routes that share no code with the library: Stirling's series
//! for log-Gamma, Euler–Maclaurin for zeta, and a dense |eta| minimum search.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// Principal log-Gamma for `Re z > 0`: shift to `Re z >= 20`, then Stirling.
pub fn stirling_log_gamma(z: Complex64) -> Complex64 {
    assert!(z.re > 0.0);
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let mut series = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln();
    let w2 = w * w;
    let mut wp = w;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let k = (k + 1) as f64;
        series += b / (2.0 * k * (2.0 * k - 1.0) * wp);
        wp *= w2;
    }
    series - shift
}

/// Euler–Maclaurin zeta for `s != 1`, `|Im s| <= ~200`.
pub fn em_zeta(s: Complex64) -> Complex64 {
    let n_terms = (s.im.abs().ceil() as usize).max(30);
    let n = n_terms as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n_terms {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * n.ln()).exp();
    sum += n_pow * n / (s - 1.0) + 0.5 * n_pow;
    // (s)_(2k-1) N^(-s-2k+1) B_2k / (2k)!
    let mut rising = s;
    let mut factorial = 2.0;
    let mut term_pow = n_pow / n;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let k = k + 1;
        sum += b / factorial * rising * term_pow;
        let a = (2 * k) as f64;
        rising *= (s + (a - 1.0)) * (s + a);
        factorial *= (a + 1.0) * (a + 2.0);
        term_pow /= n * n;
    }
    sum
}

/// `eta(s) = (1 - 2^(1-s)) zeta(s)` through [`em_zeta`].
pub fn em_eta(s: Complex64) -> Complex64 {
    (Complex64::new(1.0, 0.0) - ((1.0 - s) * 2f64.ln()).exp()) * em_zeta(s)
}

fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Ordinates in `[lo, hi]` where `|eta(1/2 + it)|` has a local minimum below
/// `limit`, found on a grid of spacing `step` and polished by golden section.
pub fn dense_eta_minima(lo: f64, hi: f64, step: f64, limit: f64) -> Vec<f64> {
    let f = |t: f64| em_eta(Complex64::new(0.5, t)).norm();
    let n = ((hi - lo) / step).round() as usize;
    let values: Vec<f64> = (0..=n).map(|i| f(lo + i as f64 * step)).collect();
    let mut out = Vec::new();
    for i in 1..n {
        if values[i] <= values[i - 1] && values[i] < values[i + 1] && values[i] < 1e-2 {
            let t = lo + i as f64 * step;
            let (x, fx) = golden_min(f, t - step, t + step, 1e-12);
            if fx < limit {
                out.push(x);
            }
        }
    }
    out
}

/// Critical-line zero ordinates below 100 (mpmath `zetazero`, 30 digits).
pub const ZEROS_BELOW_100: [f64; 29] = [
    14.13472514173469,
    21.02203963877155,
    25.01085758014569,
    30.42487612585951,
    32.93506158773919,
    37.58617815882567,
    40.9187190121475,
    43.327073280915,
    48.00515088116716,
    49.7738324776723,
    52.97032147771446,
    56.44624769706339,
    59.34704400260235,
    60.83177852460981,
    65.11254404808161,
    67.07981052949417,
    69.54640171117398,
    72.067_157_674_481_9,
    75.70469069908393,
    77.14484006887481,
    79.33737502024937,
    82.91038085408603,
    84.73549298051705,
    87.42527461312523,
    88.80911120763447,
    92.49189927055848,
    94.65134404051989,
    95.87063422824531,
    98.83119421819369,
];

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
