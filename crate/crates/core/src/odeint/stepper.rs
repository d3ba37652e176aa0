//! Adaptive stepping of `w'' + P w = 0` along straight segments.
//!
//! The state holds `N / 2` solutions as `(w, w')` pairs that share steps.

use num_complex::Complex64;

use super::poly::RealPolynomial;
use super::tableau::{A, B, BHH, C, ER, STAGES};
use crate::error::OdeError;

const SAFE: f64 = 0.9;
const BETA: f64 = 0.04;
const EXPO: f64 = 1.0 / 8.0 - BETA * 0.2;
/// Bounds on `h / h_new`.
const SHRINK_LIMIT: f64 = 3.0;
const GROW_LIMIT: f64 = 1.0 / 6.0;
const MAX_STEPS: usize = 1_000_000;

pub(crate) type State<const N: usize> = [Complex64; N];

#[derive(Debug, Clone, Copy)]
pub(crate) struct StepControl {
    pub tol: f64,
    /// Largest `|w|` tolerated before giving up.
    pub overflow_cap: f64,
    /// Cap on steps, scaled by the local oscillation length `1/sqrt|P|`.
    pub spacing: f64,
}

impl StepControl {
    pub fn new(tol: f64) -> Self {
        StepControl {
            tol,
            overflow_cap: 1e150,
            spacing: 0.5,
        }
    }
}

fn rhs<const N: usize>(p: &RealPolynomial, z: Complex64, u: Complex64, y: &State<N>) -> State<N> {
    let pz = p.eval(z);
    let mut out = [Complex64::new(0.0, 0.0); N];
    for j in (0..N).step_by(2) {
        out[j] = u * y[j + 1];
        out[j + 1] = -u * pz * y[j];
    }
    out
}

/// One Dormand-Prince step of length `h` in direction `u` from `z`. Returns
/// the increment and the normalized error estimate.
pub(crate) fn step<const N: usize>(
    p: &RealPolynomial,
    z: Complex64,
    u: Complex64,
    y: &State<N>,
    h: f64,
    tol: f64,
) -> (State<N>, f64) {
    let zero = Complex64::new(0.0, 0.0);
    let mut k = [[zero; N]; STAGES];
    for i in 0..STAGES {
        let mut yi = *y;
        for (j, kj) in k.iter().enumerate().take(i) {
            let a = A[i][j];
            if a != 0.0 {
                for m in 0..N {
                    yi[m] += kj[m] * (a * h);
                }
            }
        }
        k[i] = rhs(p, z + u * (C[i] * h), u, &yi);
    }
    let mut inc = [zero; N];
    for (i, ki) in k.iter().enumerate() {
        if B[i] != 0.0 {
            for m in 0..N {
                inc[m] += ki[m] * (B[i] * h);
            }
        }
    }
    let mut err5 = 0.0;
    let mut err3 = 0.0;
    for j in (0..N).step_by(2) {
        let scale = [y[j], y[j + 1], y[j] + inc[j], y[j + 1] + inc[j + 1]]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        let sk = tol * scale.max(f64::MIN_POSITIVE);
        for m in [j, j + 1] {
            let mut e5 = zero;
            for (i, ki) in k.iter().enumerate() {
                e5 += ki[m] * ER[i];
            }
            let e3 = inc[m] / h - k[0][m] * BHH[0] - k[8][m] * BHH[1] - k[11][m] * BHH[2];
            err5 += (e5.norm() / sk).powi(2);
            err3 += (e3.norm() / sk).powi(2);
        }
    }
    let mut deno = err5 + 0.01 * err3;
    if deno <= 0.0 {
        deno = 1.0;
    }
    let err = h * err5 * (1.0 / (deno * N as f64)).sqrt();
    (inc, err)
}

/// Step cap at `z` from the local oscillation scale.
fn step_cap(p: &RealPolynomial, z: Complex64, ctl: &StepControl) -> f64 {
    ctl.spacing / (1.0 + p.eval(z).norm()).sqrt()
}

/// Integrate along the segment `from -> to`, calling `visit` with the point
/// and state after every accepted step. Returns the final state and the sum
/// of the increments, which keeps full relative precision for short hops.
pub(crate) fn segment<const N: usize>(
    p: &RealPolynomial,
    from: Complex64,
    to: Complex64,
    y0: State<N>,
    ctl: &StepControl,
    mut visit: impl FnMut(Complex64, &State<N>),
) -> Result<(State<N>, State<N>), OdeError> {
    let zero = Complex64::new(0.0, 0.0);
    let length = (to - from).norm();
    let mut y = y0;
    let mut total = [zero; N];
    if length == 0.0 {
        return Ok((y, total));
    }
    let u = (to - from) / length;
    let mut s = 0.0;
    let mut h = step_cap(p, from, ctl).min(length).min(0.1);
    let mut facold: f64 = 1e-4;
    let mut rejected = false;
    for _ in 0..MAX_STEPS {
        let z = from + u * s;
        let remaining = length - s;
        if remaining <= 0.0 {
            return Ok((y, total));
        }
        let cap = step_cap(p, z, ctl);
        h = h.min(cap);
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        if h <= f64::EPSILON * length.max(s) {
            return Err(OdeError::StepUnderflow { at: z });
        }
        let (inc, err) = step(p, z, u, &y, h, ctl.tol);
        let fac11 = err.powf(EXPO);
        let fac = (fac11 / facold.powf(BETA) / SAFE).clamp(GROW_LIMIT, SHRINK_LIMIT);
        let mut h_new = h / fac;
        if err <= 1.0 && err.is_finite() {
            facold = err.max(1e-4);
            for m in 0..N {
                y[m] += inc[m];
                total[m] += inc[m];
            }
            s = if last { length } else { s + h };
            let at = if last { to } else { from + u * s };
            if y.iter()
                .any(|c| !c.is_finite() || c.norm() > ctl.overflow_cap)
            {
                return Err(OdeError::OverflowGuard { at });
            }
            visit(at, &y);
            if rejected {
                h_new = h_new.min(h);
                rejected = false;
            }
            h = h_new;
        } else {
            let shrink = if err.is_finite() {
                (fac11 / SAFE).min(SHRINK_LIMIT)
            } else {
                10.0
            };
            h /= shrink.max(1.0 + f64::EPSILON);
            rejected = true;
        }
    }
    Err(OdeError::StepUnderflow { at: from + u * s })
}

/// Integrate through the polyline `nodes`, starting at `nodes[0]`.
pub(crate) fn polyline<const N: usize>(
    p: &RealPolynomial,
    nodes: &[Complex64],
    y0: State<N>,
    ctl: &StepControl,
    mut visit: impl FnMut(Complex64, &State<N>),
) -> Result<State<N>, OdeError> {
    let mut y = y0;
    for pair in nodes.windows(2) {
        y = segment(p, pair[0], pair[1], y, ctl, &mut visit)?.0;
    }
    Ok(y)
}
