//! Small numerics toolbox: adaptive quadrature, root finding, unimodal
//! maximization and Richardson-extrapolated differences.
//!
//! The routines here are deliberately plain; the evaluators in `trig` and the
//! quadratures in `lorentz` are built on top of them.

/// Adaptive Simpson quadrature of `f` over [a, b] to absolute tolerance `tol`.
///
/// Uses the classic recursive scheme with the 1/15 Richardson correction.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let c = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
    simpson_rec(f, a, b, fa, fb, fc, whole, tol, 52)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (a + c);
    let e = 0.5 * (c + b);
    let fd = f(d);
    let fe = f(e);
    let left = (c - a) / 6.0 * (fa + 4.0 * fd + fc);
    let right = (b - c) / 6.0 * (fc + 4.0 * fe + fb);
    let err = left + right - whole;
    if depth == 0 || err.abs() <= 15.0 * tol {
        return left + right + err / 15.0;
    }
    simpson_rec(f, a, c, fa, fc, fd, left, 0.5 * tol, depth - 1)
        + simpson_rec(f, c, b, fc, fb, fe, right, 0.5 * tol, depth - 1)
}

/// Bisection root of a continuous `f` with a sign change on [a, b].
///
/// Returns the midpoint of the final bracket. Panics in debug builds if the
/// bracket does not actually change sign.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    let fb = f(b);
    debug_assert!(
        fa == 0.0 || fb == 0.0 || (fa > 0.0) != (fb > 0.0),
        "bisect: no sign change on [{a}, {b}]"
    );
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= tol {
            return m;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Newton iteration safeguarded by a bisection bracket.
///
/// `f` must be monotone-ish on [lo, hi] with a sign change; `df` is its
/// derivative. Converges to |f| ~ machine precision or a bracket of width
/// `xtol`.
pub fn newton_bisect<F, D>(f: &F, df: &D, mut lo: f64, mut hi: f64, xtol: f64) -> f64
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return hi;
    }
    let increasing = fhi > flo;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..100 {
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        // maintain the bracket
        if (fx > 0.0) == increasing {
            hi = x;
        } else {
            lo = x;
            flo = fx;
        }
        let _ = flo;
        if hi - lo <= xtol {
            return 0.5 * (lo + hi);
        }
        let d = df(x);
        let step = if d != 0.0 { fx / d } else { f64::INFINITY };
        let mut next = x - step;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= xtol * 0.5 {
            return next;
        }
        x = next;
    }
    x
}

/// Golden-section maximization of a unimodal `f` on [a, b].
///
/// Returns (argmax, max). 120 iterations shrink the interval below f64
/// resolution for any practical range.
pub fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..120 {
        if (b - a).abs() < 1e-15 * (1.0 + a.abs() + b.abs()) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Central difference with one Richardson extrapolation step.
///
/// Returns (derivative estimate, error estimate).
pub fn richardson_diff<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> (f64, f64) {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let d1 = d(h);
    let d2 = d(0.5 * h);
    let extrap = (4.0 * d2 - d1) / 3.0;
    (extrap, (d2 - d1).abs())
}

/// Integral of `g(x)/sqrt(r - x)` over [a, b] with b <= r, where `g` is
/// smooth up to the endpoint. Substituting x = r - u^2 removes the
/// inverse-square-root singularity at x = r.
pub fn integrate_inv_sqrt_upper<F: Fn(f64) -> f64>(g: &F, a: f64, b: f64, r: f64, tol: f64) -> f64 {
    debug_assert!(a <= b && b <= r);
    let ua = (r - a).sqrt();
    let ub = (r - b).max(0.0).sqrt();
    // dx = -2u du, 1/sqrt(r-x) = 1/u: integrand becomes 2 g(r - u^2)
    adaptive_simpson(&|u: f64| 2.0 * g(r - u * u), ub, ua, tol)
}

/// Linear interpolation on a sorted knot table; clamps outside the range.
pub fn lerp_table(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[n - 1] {
        return ys[n - 1];
    }
    let i = match xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
        Ok(i) => return ys[i],
        Err(i) => i,
    };
    let t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    ys[i - 1] + t * (ys[i] - ys[i - 1])
}
