/// Bisection on a bracket `[lo, hi]` with `f(lo)` and `f(hi)` of opposite sign
/// (or one of them zero). Stops once the bracket is narrower than `tol` and
/// returns the midpoint.
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    if f(hi) == 0.0 {
        return hi;
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// First sign change of `f` on the uniform scan `lo + (hi - lo) i / steps`,
/// returned as a bracket.
pub(crate) fn first_sign_change<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    steps: usize,
) -> Option<(f64, f64)> {
    let at = |i: usize| lo + (hi - lo) * i as f64 / steps as f64;
    let mut prev = f(at(0));
    for i in 1..=steps {
        let x = at(i);
        let cur = f(x);
        if cur == 0.0 || (prev != 0.0 && (cur > 0.0) != (prev > 0.0)) {
            return Some((at(i - 1), x));
        }
        prev = cur;
    }
    None
}
