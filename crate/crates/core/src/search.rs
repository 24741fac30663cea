//! One-dimensional search primitives shared by the estimators.

/// `(√5 − 1) / 2`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Result of a bracketed scalar search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarMin {
    pub arg: f64,
    pub value: f64,
    /// Width of the final bracket.
    pub width: f64,
    pub evaluations: usize,
}

/// Golden-section minimisation of `f` on `[lo, hi]`.
///
/// Stops after `max_iter` shrinks or once the bracket is narrower than
/// `xtol`. The returned point is the best one evaluated, so for a convex `f`
/// with a flat bottom it is some point of the minimising interval.
pub fn golden_min<F>(mut f: F, lo: f64, hi: f64, xtol: f64, max_iter: usize) -> ScalarMin
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut evaluations = 2;
    let (mut best_x, mut best_f) = if fc <= fd { (c, fc) } else { (d, fd) };
    let mut iter = 0;
    while iter < max_iter && (b - a) > xtol {
        iter += 1;
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
            evaluations += 1;
            if fc < best_f {
                best_x = c;
                best_f = fc;
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
            evaluations += 1;
            if fd < best_f {
                best_x = d;
                best_f = fd;
            }
        }
    }
    ScalarMin { arg: best_x, value: best_f, width: b - a, evaluations }
}

/// Golden-section maximisation; see [`golden_min`].
pub fn golden_max<F>(mut f: F, lo: f64, hi: f64, xtol: f64, max_iter: usize) -> ScalarMin
where
    F: FnMut(f64) -> f64,
{
    let r = golden_min(|x| -f(x), lo, hi, xtol, max_iter);
    ScalarMin { value: -r.value, ..r }
}

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// `f(lo)` and `f(hi)` must have opposite signs (zero counts as either);
/// returns the endpoint pair after `iters` halvings, the first on the side
/// of `lo`.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let lo_positive = f(lo) > 0.0;
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return (mid, mid);
        }
        if (fm > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// `n` points spaced evenly in `ln t` over `[lo, hi]`, endpoints included.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![(lo * hi).sqrt()],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_smooth_minimum() {
        let r = golden_min(|x| (x - 0.2).powi(2), -1.0, 1.0, 1e-12, 200);
        assert!((r.arg - 0.2).abs() < 1e-7);
        assert!(r.value < 1e-14);
    }

    #[test]
    fn golden_on_kinked_and_flat_functions() {
        let r = golden_min(|x: f64| (x - 0.3).abs(), -2.0, 2.0, 1e-13, 300);
        assert!((r.arg - 0.3).abs() < 1e-12);
        // flat bottom on [-1, 0]
        let r = golden_min(|x: f64| (x + 1.0).max(0.0) + (-x).max(0.0), -3.0, 3.0, 1e-12, 300);
        assert!((-1.0 - 1e-9..=1e-9).contains(&r.arg));
        assert!((r.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn golden_max_flips_sign() {
        let r = golden_max(|x| 1.0 - (x - 2.0).powi(2), 0.0, 5.0, 1e-12, 200);
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bisect_brackets_root() {
        let (a, b) = bisect(|x| x * x - 2.0, 0.0, 2.0, 100);
        assert!((a - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(a <= b);
        let (a, _) = bisect(|x| 1.0 - x, 0.0, 4.0, 100);
        assert!((a - 1.0).abs() < 1e-15);
    }

    #[test]
    fn log_grid_endpoints() {
        let g = log_grid(1e-3, 1e3, 7);
        assert_eq!(g.len(), 7);
        assert!((g[0] - 1e-3).abs() < 1e-18);
        assert!((g[3] - 1.0).abs() < 1e-12);
        assert!((g[6] - 1e3).abs() < 1e-9);
    }
}
