//! Principal-value angle arithmetic.
//!
//! Every angle that leaves this crate as an [`Angle`] lies in the half-open
//! interval `(-pi, pi]`. Identities that only hold modulo `2 pi` are compared
//! with [`circular_distance`], never with plain subtraction.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An angle in radians, reduced to `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    /// Reduces `radians` to its principal value.
    pub fn new(radians: f64) -> Self {
        normalize_angle(radians)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> f64 {
        a.0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Reduces `x` modulo `2 pi` into `(-pi, pi]`.
///
/// Values within a few ulps of the branch point are mapped to `+pi`, so odd
/// multiples of `pi` land on `pi` even after rounding in the caller.
pub fn normalize_angle(x: f64) -> Angle {
    if !x.is_finite() {
        return Angle(f64::NAN);
    }
    let mut r = x % TAU;
    if r > PI {
        r -= TAU;
    } else if r <= -PI {
        r += TAU;
    }
    let snap = 4.0 * f64::EPSILON * x.abs().max(1.0);
    if (r - PI).abs() <= snap || (r + PI).abs() <= snap {
        r = PI;
    }
    Angle(r)
}

/// Principal argument of `a + ib`.
///
/// Follows the case table `a > 0: atan(b/a)`, `a < 0: atan(b/a) +- pi`,
/// `a = 0: +-pi/2`, where the sign is that of `b` and `b = 0` with `a < 0`
/// gives `+pi`.
pub fn arctan2(a: f64, b: f64) -> Result<Angle> {
    if a.is_nan() || b.is_nan() {
        return Err(Error::Domain(format!("arctan2 of NaN input ({a}, {b})")));
    }
    if a == 0.0 && b == 0.0 {
        return Err(Error::Domain("arctan2(0, 0) is undefined".into()));
    }
    let angle = if a > 0.0 {
        (b / a).atan()
    } else if a < 0.0 {
        if b >= 0.0 {
            (b / a).atan() + PI
        } else {
            (b / a).atan() - PI
        }
    } else if b > 0.0 {
        FRAC_PI_2
    } else {
        -FRAC_PI_2
    };
    // atan(b/a) + pi can round to just above pi for tiny b/a.
    Ok(if angle > PI { Angle(PI) } else { Angle(angle) })
}

/// Distance between two angles on the circle, in `[0, pi]`.
pub fn circular_distance(x: Angle, y: Angle) -> f64 {
    let d = (x.0 - y.0).abs() % TAU;
    if d > PI {
        TAU - d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn arctan2_table() {
        assert_abs_diff_eq!(
            arctan2(1.0, 1.0).unwrap().value(),
            PI / 4.0,
            epsilon = 1e-15
        );
        assert_eq!(arctan2(0.0, 1.0).unwrap().value(), FRAC_PI_2);
        assert_eq!(arctan2(0.0, -2.0).unwrap().value(), -FRAC_PI_2);
        assert_eq!(arctan2(-1.0, 0.0).unwrap().value(), PI);
        assert_eq!(arctan2(-1.0, -0.0).unwrap().value(), PI);
        assert_abs_diff_eq!(
            arctan2(-1.0, -1.0).unwrap().value(),
            -3.0 * PI / 4.0,
            epsilon = 1e-15
        );
        assert!(matches!(arctan2(0.0, 0.0), Err(Error::Domain(_))));
        assert!(arctan2(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn arctan2_stays_in_range_near_negative_axis() {
        let a = arctan2(-1.0, 1e-300).unwrap().value();
        assert!(a <= PI && a > 0.0);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_angle(0.0).value(), 0.0);
        assert_eq!(normalize_angle(3.0 * PI).value(), PI);
        assert_eq!(normalize_angle(-PI).value(), PI);
        assert_eq!(normalize_angle(PI).value(), PI);
        assert_abs_diff_eq!(
            normalize_angle(-3.0 * PI / 2.0).value(),
            FRAC_PI_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(normalize_angle(7.0).value(), 7.0 - TAU, epsilon = 1e-15);
        assert!(normalize_angle(f64::INFINITY).value().is_nan());
    }

    #[test]
    fn circular_distance_examples() {
        let d = circular_distance(Angle::new(PI), Angle::new(-PI + 1e-12));
        assert_abs_diff_eq!(d, 1e-12, epsilon = 1e-15);
        assert_eq!(circular_distance(Angle::ZERO, Angle::ZERO), 0.0);
        assert_abs_diff_eq!(
            circular_distance(Angle::new(FRAC_PI_2), Angle::new(-FRAC_PI_2)),
            PI,
            epsilon = 1e-15
        );
    }
}
