//! Sign-change bracketing on a grid and Brent refinement.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` on which a function changes sign. `lo == hi`
/// marks a grid point where the function is exactly zero.
pub type Bracket = (f64, f64);

/// Uniform grid from `lo` to `hi` inclusive with spacing at most `step`; the
/// last interval may be shorter.
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidConfig(format!(
            "need lo < hi, got [{lo}, {hi}]"
        )));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "step must be positive, got {step}"
        )));
    }
    let intervals = ((hi - lo) / step).ceil();
    if intervals > 1e8 {
        return Err(Error::InvalidConfig(format!(
            "grid of {intervals} intervals is too large"
        )));
    }
    let m = (intervals as usize).max(1);
    let mut grid: Vec<f64> = (0..m).map(|i| lo + i as f64 * step).collect();
    grid.push(hi);
    Ok(grid)
}

fn opposite(a: f64, b: f64) -> bool {
    (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)
}

/// Halves `[a, b]` up to `depth` times while the function stays within `dip`
/// of zero without changing sign, collecting any sign changes uncovered.
#[allow(clippy::too_many_arguments)]
fn subdivide<F>(
    f: &F,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    depth: u32,
    dip: f64,
    out: &mut Vec<Bracket>,
) -> Result<()>
where
    F: Fn(f64) -> Result<f64>,
{
    if opposite(fa, fb) {
        out.push((a, b));
        return Ok(());
    }
    if depth == 0 || fa.abs().min(fb.abs()) >= dip || fa == 0.0 || fb == 0.0 {
        return Ok(());
    }
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    if fm == 0.0 {
        out.push((m, m));
        return Ok(());
    }
    subdivide(f, a, fa, m, fm, depth - 1, dip, out)?;
    subdivide(f, m, fm, b, fb, depth - 1, dip, out)
}

/// Settings for [`find_brackets`].
#[derive(Debug, Clone, Copy)]
pub struct BracketSearch {
    /// Intervals whose endpoint values dip below this magnitude without a
    /// sign change are subdivided.
    pub dip: f64,
    /// Maximum number of halvings of such an interval.
    pub depth: u32,
}

impl Default for BracketSearch {
    fn default() -> Self {
        Self {
            dip: 1e-3,
            depth: 4,
        }
    }
}

/// All sign-change brackets of `f` over `grid`, ascending.
///
/// `f` is evaluated on `pool`; the result does not depend on how many
/// threads the pool has.
pub fn find_brackets<F>(
    grid: &[f64],
    f: F,
    search: BracketSearch,
    pool: &rayon::ThreadPool,
) -> Result<Vec<Bracket>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let values: Vec<f64> =
        pool.install(|| grid.par_iter().map(|&t| f(t)).collect::<Result<Vec<_>>>())?;
    let per_interval: Vec<Vec<Bracket>> = pool.install(|| {
        (0..grid.len().saturating_sub(1))
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                if values[i] == 0.0 {
                    out.push((grid[i], grid[i]));
                }
                subdivide(
                    &f,
                    grid[i],
                    values[i],
                    grid[i + 1],
                    values[i + 1],
                    search.depth,
                    search.dip,
                    &mut out,
                )?;
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut brackets: Vec<Bracket> = per_interval.into_iter().flatten().collect();
    if let (Some(&last), Some(&t)) = (values.last(), grid.last()) {
        if last == 0.0 {
            brackets.push((t, t));
        }
    }
    Ok(brackets)
}

/// A root located by [`brent`], with the final sign-change interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEstimate {
    pub root: f64,
    pub bracket: Bracket,
    pub iterations: usize,
}

const MAX_ITERATIONS: usize = 200;

/// Brent's method on a sign-changing bracket. Stops once the enclosing
/// interval is narrower than `tol` (plus a few ulps of the root).
pub fn brent<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<RootEstimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "root tolerance must be positive, got {tol}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a)?;
    if lo == hi {
        return if fa == 0.0 {
            Ok(RootEstimate {
                root: lo,
                bracket: (lo, hi),
                iterations: 0,
            })
        } else {
            Err(Error::NoSignChange { lo, hi })
        };
    }
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(RootEstimate {
            root: a,
            bracket: (a, a),
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(RootEstimate {
            root: b,
            bracket: (b, b),
            iterations: 0,
        });
    }
    if !opposite(fa, fb) {
        return Err(Error::NoSignChange { lo, hi });
    }
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for iteration in 0..MAX_ITERATIONS {
        if !opposite(fb, fc) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.25 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            let bracket = if fb == 0.0 {
                (b, b)
            } else {
                (b.min(c), b.max(c))
            };
            return Ok(RootEstimate {
                root: b,
                bracket,
                iterations: iteration,
            });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
    }
    Err(Error::Convergence {
        tol,
        budget: MAX_ITERATIONS,
        best: (c - b).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool() -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(2)
            .build()
            .unwrap()
    }

    #[test]
    fn grid_covers_range() {
        let g = uniform_grid(0.0, 1.0, 0.3).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert!(uniform_grid(1.0, 1.0, 0.1).is_err());
        assert!(uniform_grid(2.0, 1.0, 0.1).is_err());
        assert!(uniform_grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn brent_finds_sqrt2() {
        let r = brent(|x| Ok(x * x - 2.0), 0.0, 2.0, 1e-12).unwrap();
        assert!((r.root - 2f64.sqrt()).abs() < 1e-12);
        assert!(r.bracket.0 <= r.root && r.root <= r.bracket.1);
        assert!(r.bracket.1 - r.bracket.0 < 1e-12);
    }

    #[test]
    fn brent_rejects_bad_brackets() {
        assert!(matches!(
            brent(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-9),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            brent(Ok, 0.5, 0.5, 1e-9),
            Err(Error::NoSignChange { .. })
        ));
        assert_eq!(brent(Ok, 0.0, 0.0, 1e-9).unwrap().root, 0.0);
    }

    #[test]
    fn brackets_of_sine() {
        let grid = uniform_grid(0.5, 10.0, 0.1).unwrap();
        let b = find_brackets(&grid, |x| Ok(x.sin()), BracketSearch::default(), &pool()).unwrap();
        assert_eq!(b.len(), 3);
        for (k, (lo, hi)) in b.iter().enumerate() {
            let root = std::f64::consts::PI * (k + 1) as f64;
            assert!(*lo <= root && root <= *hi);
        }
    }

    #[test]
    fn exact_grid_zero_is_reported_once() {
        let grid = uniform_grid(-1.0, 1.0, 0.5).unwrap();
        let b = find_brackets(&grid, Ok, BracketSearch::default(), &pool()).unwrap();
        assert_eq!(b, vec![(0.0, 0.0)]);
    }

    #[test]
    fn near_tangency_is_split() {
        // two roots 0.004 apart inside one coarse interval, values at the
        // coarse endpoints are small but share a sign
        let f = |x: f64| Ok((x - 0.498) * (x - 0.502));
        let grid = [0.49, 0.51];
        let without = find_brackets(
            &grid,
            f,
            BracketSearch {
                dip: 1e-3,
                depth: 0,
            },
            &pool(),
        )
        .unwrap();
        assert!(without.is_empty());
        let with = find_brackets(&grid, f, BracketSearch::default(), &pool()).unwrap();
        assert_eq!(with.len(), 2);
    }
}
