//! Real zeros of real solutions on a real interval.

use num_complex::Complex64;

use super::poly::RealPolynomial;
use super::stepper::{segment, StepControl};
use super::{check_tol, InitialData};
use crate::error::OdeError;

const BISECTIONS: usize = 48;
const NEWTON_STEPS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct RealZeros {
    /// Ascending.
    pub zeros: Vec<f64>,
    /// Neighboring zeros closer than `100 * tol`.
    pub clusters: Vec<(f64, f64)>,
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Value and derivative at `x`, starting from the checkpoint `(x0, y0)`.
fn eval(
    p: &RealPolynomial,
    ctl: &StepControl,
    x0: f64,
    y0: [Complex64; 2],
    x: f64,
) -> Result<(f64, f64), OdeError> {
    let (y, _) = segment(p, real(x0), real(x), y0, ctl, |_, _| {})?;
    Ok((y[0].re, y[1].re))
}

/// Zeros of the solution with real data `init` in `[a, b]`. Sign changes
/// between checkpoints are bracketed, bisected, and polished by Newton
/// steps.
pub fn real_zeros(
    p: &RealPolynomial,
    init: InitialData,
    interval: (f64, f64),
    tol: f64,
) -> Result<RealZeros, OdeError> {
    check_tol(tol)?;
    let (a, b) = interval;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(OdeError::InvalidInput(format!("bad interval [{a}, {b}]")));
    }
    if [init.z0, init.w0, init.w0prime].iter().any(|c| c.im != 0.0) {
        return Err(OdeError::InvalidInput("initial data must be real".into()));
    }
    let x0 = init.z0.re;
    let ctl = StepControl::new(tol);
    let y0 = [init.w0, init.w0prime];
    let mut points: Vec<(f64, [Complex64; 2])> = vec![(x0, y0)];
    for end in [a, b] {
        if (end < x0 && x0 > a) || (end > x0 && x0 < b) {
            segment(p, real(x0), real(end), y0, &ctl, |z, y| {
                points.push((z.re, *y))
            })?;
        }
    }
    points.sort_by(|u, v| u.0.total_cmp(&v.0));

    let mut zeros = Vec::new();
    for (i, &(x, y)) in points.iter().enumerate() {
        if y[0].re == 0.0 {
            zeros.push(x);
            continue;
        }
        let Some(&(xn, yn)) = points.get(i + 1) else {
            break;
        };
        if yn[0].re == 0.0 || (y[0].re > 0.0) == (yn[0].re > 0.0) {
            continue;
        }
        let positive_left = y[0].re > 0.0;
        let (mut lo, mut hi) = (x, xn);
        for _ in 0..BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let (w, _) = eval(p, &ctl, x, y, mid)?;
            if w == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if (w > 0.0) == positive_left {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut r = 0.5 * (lo + hi);
        for _ in 0..NEWTON_STEPS {
            let (w, dw) = eval(p, &ctl, x, y, r)?;
            if dw == 0.0 {
                break;
            }
            let next = r - w / dw;
            if !(x..=xn).contains(&next) {
                break;
            }
            let done = (next - r).abs() <= f64::EPSILON * r.abs().max(1.0);
            r = next;
            if done {
                break;
            }
        }
        zeros.push(r);
    }
    zeros.retain(|&z| a <= z && z <= b);
    zeros.sort_by(f64::total_cmp);
    zeros.dedup_by(|u, v| (*u - *v).abs() <= f64::EPSILON * v.abs().max(1.0));
    let clusters = zeros
        .windows(2)
        .filter(|w| w[1] - w[0] < 100.0 * tol)
        .map(|w| (w[0], w[1]))
        .collect();
    Ok(RealZeros { zeros, clusters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::odeint::airy;
    use std::f64::consts::PI;

    #[test]
    fn sine_zeros_on_minus_ten_to_ten() {
        let p = RealPolynomial::new(vec![1.0]).unwrap();
        let init = InitialData::real(0.0, 0.0, 1.0).unwrap();
        let z = real_zeros(&p, init, (-10.0, 10.0), 1e-12).unwrap();
        assert_eq!(z.zeros.len(), 7);
        for (k, x) in z.zeros.iter().enumerate() {
            let m = k as f64 - 3.0;
            assert!((x - m * PI).abs() < 1e-9, "{x}");
        }
        assert!(z.clusters.is_empty());
    }

    #[test]
    fn airy_zeros_match_the_oracle() {
        let p = RealPolynomial::new(vec![0.0, -1.0]).unwrap();
        let init = InitialData::real(0.0, airy::AI0, airy::AIP0).unwrap();
        let z = real_zeros(&p, init, (-12.0, 5.0), 1e-12).unwrap();
        let oracle = airy::airy_ai_zeros(3);
        for (k, want) in oracle.iter().enumerate() {
            let got = z.zeros[z.zeros.len() - 1 - k];
            assert!((got - want).abs() < 1e-8, "{got} vs {want}");
        }
        assert!(z.zeros.iter().all(|&x| x <= 0.0));
    }

    #[test]
    fn hermite_two_zeros() {
        let p = crate::odeint::hermite_potential(2);
        let init = InitialData::real(0.0, -2.0, 0.0).unwrap();
        let z = real_zeros(&p, init, (-10.0, 10.0), 1e-12).unwrap();
        let r = 0.5f64.sqrt();
        assert_eq!(z.zeros.len(), 2);
        assert!((z.zeros[0] + r).abs() < 1e-10);
        assert!((z.zeros[1] - r).abs() < 1e-10);
    }

    #[test]
    fn start_outside_the_interval() {
        let p = RealPolynomial::new(vec![1.0]).unwrap();
        let init = InitialData::real(-5.0, 0.0, 1.0).unwrap();
        let z = real_zeros(&p, init, (0.5, 7.0), 1e-12).unwrap();
        let expected = [2.0 * PI - 5.0, 3.0 * PI - 5.0];
        assert_eq!(z.zeros.len(), 2);
        for (got, want) in z.zeros.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9);
        }
    }
}
