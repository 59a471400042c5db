//! Scalar root finding and one-dimensional minimization.
//!
//! Small, dependency-free bracketing methods used throughout the crate:
//! plain bisection for the secular equations (robust, fixed cost), Brent
//! for the smooth monotone equations of the union optimizer, and
//! golden-section search for the piecewise-smooth aspect objective.

/// Bisection on `[lo, hi]` for a function known to satisfy f(lo) < 0 < f(hi)
/// *by construction* (the endpoints themselves are never evaluated, which
/// lets callers use open brackets whose endpoint signs are known exactly).
///
/// Stops when the bracket width drops below `tol(lo, hi)` or the midpoint
/// can no longer be distinguished from an endpoint in f64.
pub fn bisect_known_signs<F, T>(mut lo: f64, mut hi: f64, mut f: F, mut tol: T) -> f64
where
    F: FnMut(f64) -> f64,
    T: FnMut(f64, f64) -> f64,
{
    debug_assert!(lo < hi, "bisect_known_signs: empty bracket [{lo}, {hi}]");
    for _ in 0..1200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // f64 exhausted
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol(lo, hi) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Brent's method on a bracket with `f(a)` and `f(b)` of opposite sign.
///
/// `rel_tol` is relative on the abscissa. Panics with diagnostics if the
/// bracket does not straddle a sign change; callers arrange brackets so
/// that this cannot happen for mathematically valid inputs.
pub fn brent_root<F>(f: F, a: f64, b: f64, rel_tol: f64, max_iter: usize) -> f64
where
    F: FnMut(f64) -> f64,
{
    let mut f = f;
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    assert!(
        fa.signum() != fb.signum(),
        "brent_root: no sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}"
    );
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.abs() > fc.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * rel_tol * b.abs().max(1e-300);
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return b;
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic interpolation / secant
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
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
        b += if d.abs() > tol1 {
            d
        } else {
            tol1.copysign(xm)
        };
        fb = f(b);
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    b
}

/// Golden-section minimization of `f` on `[a, b]`.
///
/// Returns `(x_min, f_min)` to absolute abscissa tolerance `xtol`.
/// Derivative-free, so kinks inside the bracket are handled gracefully.
pub fn golden_min<F>(mut f: F, mut a: f64, mut b: f64, xtol: f64, max_iter: usize) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INVPHI * (b - a);
    let mut x2 = a + INVPHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if (b - a).abs() <= xtol {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INVPHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INVPHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt_two() {
        let r = bisect_known_signs(0.0, 2.0, |x| x * x - 2.0, |lo, _| 1e-14 * lo.max(1.0));
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn brent_finds_cubic_root() {
        let r = brent_root(|x| x * x * x - 8.0, 0.0, 5.0, 1e-14, 200);
        assert!((r - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_finds_parabola_min() {
        let (x, fx) = golden_min(|x| (x - 1.5) * (x - 1.5) + 0.25, -4.0, 7.0, 1e-10, 200);
        assert!((x - 1.5).abs() < 1e-8);
        assert!((fx - 0.25).abs() < 1e-12);
    }

    #[test]
    fn golden_handles_kink_at_minimum() {
        let (x, _) = golden_min(|x: f64| (x - 0.3).abs(), 0.0, 1.0, 1e-12, 300);
        assert!((x - 0.3).abs() < 1e-10);
    }
}
