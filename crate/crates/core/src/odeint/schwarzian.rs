//! Finite-difference Schwarzian of `f = w1 / w2`, compared with `2P`.

use num_complex::Complex64;

use super::stepper::{segment, StepControl};
use super::{SolutionBasis, MIN_TOL};
use crate::error::OdeError;

/// Smallest admissible `|w2| / |(w1, w2)|` at a sample point.
const POLE_EPS: f64 = 1e-6;
/// Smallest admissible `|f'|`.
const CRITICAL_EPS: f64 = 1e-10;

/// Central difference scheme for `f'`, `f''`, `f'''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stencil {
    /// Second order; `f'''` uses the points `z +- h`, `z +- 2h`.
    Central2,
    /// Fourth order; `f'''` uses all seven points `z + j h`, `|j| <= 3`.
    #[default]
    Central4,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzianReport {
    /// `|S_f(z) - 2 P(z)|` per sample point.
    pub residuals: Vec<f64>,
    pub max: f64,
}

/// `f(z + d) - f(z)` for the offsets `d = j h`, `j = -3..=3`, from one short
/// hop per offset. Differences are formed from the hop increments so they
/// keep full relative precision.
fn offsets(
    basis: &SolutionBasis,
    z: Complex64,
    y: [Complex64; 4],
    h: Complex64,
) -> Result<[Complex64; 7], OdeError> {
    let ctl = StepControl::new(MIN_TOL);
    let mut g = [Complex64::new(0.0, 0.0); 7];
    for (slot, j) in (-3i32..=3).enumerate() {
        if j == 0 {
            continue;
        }
        let target = z + h * j as f64;
        let (end, inc) = segment(&basis.poly, z, target, y, &ctl, |_, _| {})?;
        if end[2].norm() < POLE_EPS * end[0].norm().max(end[2].norm()) {
            return Err(OdeError::PoleTooClose { at: target });
        }
        g[slot] = (inc[0] * y[2] - inc[2] * y[0]) / (y[2] * end[2]);
    }
    Ok(g)
}

/// Residual of the identity `S_f = 2P` at each sample point, with `f`
/// differentiated numerically along the real direction with step `h`.
pub fn schwarzian_residual(
    basis: &SolutionBasis,
    points: &[Complex64],
    h: f64,
    stencil: Stencil,
) -> Result<SchwarzianReport, OdeError> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(OdeError::InvalidInput(format!("step {h} must be positive")));
    }
    let mut residuals = Vec::with_capacity(points.len());
    for &z in points {
        let b = basis.at(z)?;
        if b.w2.norm() < POLE_EPS * b.w1.norm().max(b.w2.norm()) {
            return Err(OdeError::PoleTooClose { at: z });
        }
        let fp_exact = b.wronskian() / (b.w2 * b.w2);
        if fp_exact.norm() < CRITICAL_EPS {
            return Err(OdeError::CriticalPoint { at: z });
        }
        let g = offsets(basis, z, [b.w1, b.dw1, b.w2, b.dw2], Complex64::new(h, 0.0))?;
        let at = |j: i32| g[(j + 3) as usize];
        let (d1, d2, d3) = match stencil {
            Stencil::Central2 => (
                (at(1) - at(-1)) / (2.0 * h),
                (at(1) + at(-1)) / (h * h),
                (at(2) - at(1) * 2.0 + at(-1) * 2.0 - at(-2)) / (2.0 * h * h * h),
            ),
            Stencil::Central4 => (
                (-at(2) + at(1) * 8.0 - at(-1) * 8.0 + at(-2)) / (12.0 * h),
                (-at(2) + at(1) * 16.0 + at(-1) * 16.0 - at(-2)) / (12.0 * h * h),
                (-at(3) + at(2) * 8.0 - at(1) * 13.0 + at(-1) * 13.0 - at(-2) * 8.0 + at(-3))
                    / (8.0 * h * h * h),
            ),
        };
        if d1.norm() < CRITICAL_EPS {
            return Err(OdeError::CriticalPoint { at: z });
        }
        let s = d3 / d1 - (d2 / d1).powi(2) * 1.5;
        residuals.push((s - basis.poly.eval(z) * 2.0).norm());
    }
    let max = residuals.iter().copied().fold(0.0, f64::max);
    Ok(SchwarzianReport { residuals, max })
}
