//! Taylor-series evaluator for `w'' = z w`, used as an independent oracle.

use num_complex::Complex64;

/// `Ai(0)`.
pub const AI0: f64 = 0.355_028_053_887_817_2;
/// `Ai'(0)`.
pub const AIP0: f64 = -0.258_819_403_792_806_8;
/// `Bi(0)`.
pub const BI0: f64 = 0.614_926_627_446_000_7;
/// `Bi'(0)`.
pub const BIP0: f64 = 0.448_288_357_353_826_4;

const TERMS: usize = 80;
const MAX_STEP: f64 = 0.5;

/// Value and derivative at `a + t` of the solution with value `w` and
/// derivative `dw` at `a`. Coefficients follow
/// `(k+2)(k+1) c_{k+2} = a c_k + c_{k-1}`.
fn expand(a: Complex64, w: Complex64, dw: Complex64, t: Complex64) -> (Complex64, Complex64) {
    let mut c = [Complex64::new(0.0, 0.0); TERMS];
    c[0] = w;
    c[1] = dw;
    c[2] = a * w / 2.0;
    for k in 1..TERMS - 2 {
        c[k + 2] = (a * c[k] + c[k - 1]) / ((k + 2) as f64 * (k + 1) as f64);
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for k in (0..TERMS).rev() {
        value = value * t + c[k];
        if k > 0 {
            deriv = deriv * t + c[k] * k as f64;
        }
    }
    (value, deriv)
}

/// Solution of `w'' = z w` with data `(w0, dw0)` at 0, continued along the
/// segment to `z` in short Taylor steps.
pub fn airy_series(z: Complex64, w0: Complex64, dw0: Complex64) -> (Complex64, Complex64) {
    let steps = (z.norm() / MAX_STEP).ceil().max(1.0) as usize;
    let dz = z / steps as f64;
    let mut a = Complex64::new(0.0, 0.0);
    let (mut w, mut dw) = (w0, dw0);
    for _ in 0..steps {
        (w, dw) = expand(a, w, dw, dz);
        a += dz;
    }
    (w, dw)
}

/// `(Ai(x), Ai'(x))` for real `x`.
pub fn airy_ai(x: f64) -> (f64, f64) {
    let (w, dw) = airy_series(
        Complex64::new(x, 0.0),
        Complex64::new(AI0, 0.0),
        Complex64::new(AIP0, 0.0),
    );
    (w.re, dw.re)
}

/// The first `count` zeros of `Ai`, descending from 0.
pub fn airy_ai_zeros(count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    let step = 0.05;
    let mut x = 0.0;
    let mut fx = airy_ai(x).0;
    while out.len() < count {
        let y = x - step;
        let fy = airy_ai(y).0;
        if fx * fy < 0.0 {
            let (mut lo, mut hi) = (y, x);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if airy_ai(mid).0 * airy_ai(lo).0 <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let mut r = 0.5 * (lo + hi);
            for _ in 0..3 {
                let (v, dv) = airy_ai(r);
                r -= v / dv;
            }
            out.push(r);
        }
        x = y;
        fx = fy;
    }
    out
}
