//! Complex literals and number formatting.

use std::sync::OnceLock;

use num_complex::Complex64;
use regex::Regex;

/// Parses `a+bi` / `a-bi` with optional leading minus and decimal parts.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| {
        Regex::new(r"^(-?\d+(?:\.\d+)?)([+-]\d+(?:\.\d+)?)i$").expect("valid regex")
    });
    let caps = re.captures(text).ok_or_else(|| {
        format!("'{text}' is not a complex literal of the form a+bi (e.g. 0.5+14i)")
    })?;
    let re_part: f64 = caps[1]
        .parse()
        .map_err(|e| format!("real part of '{text}': {e}"))?;
    let im_part: f64 = caps[2]
        .parse()
        .map_err(|e| format!("imaginary part of '{text}': {e}"))?;
    Ok(Complex64::new(re_part, im_part))
}

/// Twelve significant digits; scientific notation outside `[1e-5, 1e12)`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

pub fn complex12(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {} {}i", sig12(z.re), sign, sig12(z.im.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_complex("1+0i").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(
            parse_complex("-1.5-2.25i").unwrap(),
            Complex64::new(-1.5, -2.25)
        );
        assert_eq!(parse_complex("0.5+14i").unwrap(), Complex64::new(0.5, 14.0));
        for bad in [
            "1", "1 + 2i", "+1+2i", "1+2", "1e3+2i", "i", ".5+1i", "1+2j",
        ] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig12(std::f64::consts::LN_2), "0.693147180560");
        assert_eq!(sig12(14.134725141734695), "14.1347251417");
        assert_eq!(sig12(-1.0), "-1.00000000000");
        assert_eq!(sig12(1.5e-9), "1.50000000000e-9");
        assert_eq!(sig12(0.0), "0");
    }
}
