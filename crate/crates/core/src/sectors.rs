//! Asymptotic values of `f = w1 / w2` along the Stokes directions of `P`, and
//! a count check against the unbounded faces of a Speiser graph.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::base::ExtendedComplex;
use crate::error::{OdeError, SectorError};
use crate::graph::SpeiserGraph;
use crate::odeint::stepper::{segment, StepControl};
use crate::odeint::{RealPolynomial, SolutionBasis};

pub const DEFAULT_SCHEDULE: [f64; 3] = [6.0, 9.0, 12.0];
pub const DEFAULT_CAUCHY_TOL: f64 = 1e-6;

/// The state is rescaled once its norm leaves `[1 / RESCALE, RESCALE]`.
const RESCALE: f64 = 1e40;
/// Largest growth exponent allowed over one sub-segment.
const GROWTH_PER_PIECE: f64 = 20.0;

/// Central angles of the `d + 2` sectors, in `[0, 2 pi)`, ascending.
pub fn stokes_directions(p: &RealPolynomial) -> Result<Vec<f64>, SectorError> {
    if p.is_zero() {
        return Err(SectorError::ZeroPolynomial);
    }
    let d = p.degree();
    let arg = if p.leading() < 0.0 { PI } else { 0.0 };
    let n = (d + 2) as f64;
    let mut angles: Vec<f64> = (0..d + 2)
        .map(|j| (2.0 * PI * j as f64 + PI - arg) / n)
        .map(|t| {
            let t = t.rem_euclid(2.0 * PI);
            if t >= 2.0 * PI - 1e-15 {
                0.0
            } else {
                t
            }
        })
        .collect();
    angles.sort_by(f64::total_cmp);
    Ok(angles)
}

/// Distance on the Riemann sphere, scaled so that antipodes are 2 apart.
pub fn chordal_distance(a: ExtendedComplex, b: ExtendedComplex) -> f64 {
    match (a, b) {
        (ExtendedComplex::Infinity, ExtendedComplex::Infinity) => 0.0,
        (ExtendedComplex::Finite(z), ExtendedComplex::Infinity)
        | (ExtendedComplex::Infinity, ExtendedComplex::Finite(z)) => {
            2.0 / (1.0 + z.norm_sqr()).sqrt()
        }
        (ExtendedComplex::Finite(z), ExtendedComplex::Finite(w)) => {
            2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
        }
    }
}

/// Chordal distance between the points `[a0 : a1]` and `[b0 : b1]`.
fn projective_distance(a: (Complex64, Complex64), b: (Complex64, Complex64)) -> f64 {
    let na = (a.0.norm_sqr() + a.1.norm_sqr()).sqrt();
    let nb = (b.0.norm_sqr() + b.1.norm_sqr()).sqrt();
    2.0 * (a.0 * b.1 - a.1 * b.0).norm() / (na * nb)
}

fn projective_value(w1: Complex64, w2: Complex64) -> ExtendedComplex {
    if w2.norm() <= f64::EPSILON * w1.norm() {
        ExtendedComplex::Infinity
    } else {
        ExtendedComplex::Finite(w1 / w2)
    }
}

fn rescale(y: &mut [Complex64; 4]) {
    let norm = y.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if norm > RESCALE || (norm > 0.0 && norm < 1.0 / RESCALE) {
        for c in y.iter_mut() {
            *c /= norm;
        }
    }
}

/// Integrate the basis from `from` to `to` in pieces short enough that the
/// state can be rescaled before it overflows. Only the ratio survives.
fn projective_segment(
    basis: &SolutionBasis,
    from: Complex64,
    to: Complex64,
    mut y: [Complex64; 4],
    ctl: &StepControl,
) -> Result<[Complex64; 4], OdeError> {
    let length = (to - from).norm();
    if length == 0.0 {
        return Ok(y);
    }
    let u = (to - from) / length;
    let mut s = 0.0;
    while s < length {
        let z = from + u * s;
        let piece = (GROWTH_PER_PIECE / (1.0 + basis.poly.eval(z).norm()).sqrt()).min(1.0);
        let next = (s + piece).min(length);
        let target = if next >= length { to } else { from + u * next };
        y = segment(&basis.poly, z, target, y, ctl, |_, _| {})?.0;
        rescale(&mut y);
        s = next;
    }
    Ok(y)
}

/// Ratio samples of the basis at the radii of `schedule` along the ray at
/// `angle` from the origin.
fn ray_samples(
    basis: &SolutionBasis,
    angle: f64,
    schedule: &[f64],
) -> Result<Vec<(Complex64, Complex64)>, OdeError> {
    let ctl = StepControl::new(basis.tol);
    let origin = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut y = [one, origin, origin, one];
    y = projective_segment(basis, basis.z0, origin, y, &ctl)?;
    let dir = Complex64::from_polar(1.0, angle);
    let mut at = origin;
    let mut out = Vec::with_capacity(schedule.len());
    for &r in schedule {
        let target = dir * r;
        y = projective_segment(basis, at, target, y, &ctl)?;
        at = target;
        out.push((y[0], y[2]));
    }
    Ok(out)
}

fn check_schedule(schedule: &[f64]) -> Result<(), SectorError> {
    let increasing = schedule.windows(2).all(|w| w[0] < w[1]);
    if schedule.iter().any(|r| !(r.is_finite() && *r > 0.0)) || !increasing {
        return Err(OdeError::InvalidInput(
            "radius schedule must be positive and increasing".into(),
        )
        .into());
    }
    Ok(())
}

/// Limit of `f` along the ray, accepted when the last two samples of the
/// schedule are within `tol` in the chordal metric. Returns the value and
/// that last gap.
pub fn asymptotic_value(
    basis: &SolutionBasis,
    angle: f64,
    schedule: &[f64],
    tol: f64,
) -> Result<(ExtendedComplex, f64), SectorError> {
    check_schedule(schedule)?;
    if schedule.len() < 2 {
        return Err(SectorError::NoConvergence { angle });
    }
    let samples = ray_samples(basis, angle, schedule)?;
    let n = samples.len();
    let gap = projective_distance(samples[n - 2], samples[n - 1]);
    if gap < tol {
        let (w1, w2) = samples[n - 1];
        Ok((projective_value(w1, w2), gap))
    } else {
        Err(SectorError::NoConvergence { angle })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RayOutcome {
    Converged { value: ExtendedComplex, gap: f64 },
    Divergent { reason: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RayProbe {
    pub angle: f64,
    pub outcome: RayOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorReport {
    pub rays: Vec<RayProbe>,
    /// Indices of rays sharing a converged value, in order of first ray.
    pub groups: Vec<Vec<usize>>,
}

impl SectorReport {
    pub fn converged(&self) -> impl Iterator<Item = (usize, ExtendedComplex)> + '_ {
        self.rays
            .iter()
            .enumerate()
            .filter_map(|(i, r)| match r.outcome {
                RayOutcome::Converged { value, .. } => Some((i, value)),
                RayOutcome::Divergent { .. } => None,
            })
    }

    pub fn all_converged(&self) -> bool {
        self.converged().count() == self.rays.len()
    }
}

/// Probe every Stokes direction of the basis polynomial. Failures on single
/// rays are recorded as divergent rather than returned.
pub fn sector_report(
    basis: &SolutionBasis,
    schedule: &[f64],
    tol: f64,
) -> Result<SectorReport, SectorError> {
    check_schedule(schedule)?;
    let angles = stokes_directions(&basis.poly)?;
    let rays: Vec<RayProbe> = angles
        .into_iter()
        .map(|angle| {
            let outcome = match asymptotic_value(basis, angle, schedule, tol) {
                Ok((value, gap)) => RayOutcome::Converged { value, gap },
                Err(e) => RayOutcome::Divergent {
                    reason: e.to_string(),
                },
            };
            RayProbe { angle, outcome }
        })
        .collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, ray) in rays.iter().enumerate() {
        let RayOutcome::Converged { value, .. } = ray.outcome else {
            continue;
        };
        let home = groups.iter_mut().find(|g| match rays[g[0]].outcome {
            RayOutcome::Converged { value: rep, .. } => {
                chordal_distance(rep, value) < tol.max(1e-9) * 10.0
            }
            RayOutcome::Divergent { .. } => false,
        });
        match home {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    Ok(SectorReport { rays, groups })
}

/// Fractional linear map as a matrix acting on `[z : 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius([[Complex64; 2]; 2]);

impl Mobius {
    /// The map taking `from[k]` to `to[k]` for `k = 0, 1, 2`.
    pub fn through(
        from: [ExtendedComplex; 3],
        to: [ExtendedComplex; 3],
    ) -> Result<Self, SectorError> {
        let a = Self::to_standard(from)?;
        let b = Self::to_standard(to)?;
        Ok(b.inverse().compose(&a))
    }

    /// The map sending the points to `0, inf, 1`.
    fn to_standard(p: [ExtendedComplex; 3]) -> Result<Self, SectorError> {
        for i in 0..3 {
            for j in i + 1..3 {
                if chordal_distance(p[i], p[j]) < 1e-12 {
                    return Err(SectorError::BadNormalization(format!("{} repeats", p[i])));
                }
            }
        }
        let c = |x: f64| Complex64::new(x, 0.0);
        use ExtendedComplex::{Finite as F, Infinity as I};
        let m = match p {
            [I, F(z2), F(z3)] => [[c(0.0), z3 - z2], [c(1.0), -z2]],
            [F(z1), I, F(z3)] => [[c(1.0), -z1], [c(0.0), z3 - z1]],
            [F(z1), F(z2), I] => [[c(1.0), -z1], [c(1.0), -z2]],
            [F(z1), F(z2), F(z3)] => [[z3 - z2, -z1 * (z3 - z2)], [z3 - z1, -z2 * (z3 - z1)]],
            _ => unreachable!("distinct points include at most one infinity"),
        };
        Ok(Mobius(m))
    }

    fn compose(&self, other: &Mobius) -> Mobius {
        let (a, b) = (self.0, other.0);
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mobius(m)
    }

    fn inverse(&self) -> Mobius {
        let [[a, b], [c, d]] = self.0;
        Mobius([[d, -b], [-c, a]])
    }

    pub fn apply(&self, z: ExtendedComplex) -> ExtendedComplex {
        let [[a, b], [c, d]] = self.0;
        let (num, den) = match z {
            ExtendedComplex::Finite(z) => (a * z + b, c * z + d),
            ExtendedComplex::Infinity => (a, c),
        };
        projective_value(num, den)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub unbounded_faces: usize,
    pub rays: usize,
    /// Whether a normalization was supplied and values were compared.
    pub values_checked: bool,
    /// Rays whose normalized value is not within tolerance of a base point.
    pub unmatched: Vec<(usize, ExtendedComplex)>,
}

impl CrossCheck {
    pub fn consistent(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// Compare the number of rays with the unbounded faces of `graph`. With a
/// normalization, also check that every converged value lands on a base
/// point of the graph. Value mismatches are reported, not raised.
pub fn cross_check(
    report: &SectorReport,
    graph: &SpeiserGraph,
    normalization: Option<&Mobius>,
    tol: f64,
) -> Result<CrossCheck, SectorError> {
    let faces = graph.unbounded_faces().count();
    let rays = report.rays.len();
    if faces != rays {
        return Err(SectorError::CountMismatch { graph: faces, rays });
    }
    let mut unmatched = Vec::new();
    if let Some(m) = normalization {
        let targets: Vec<ExtendedComplex> = graph
            .base()
            .labels()
            .iter()
            .map(|l| l.projection())
            .collect();
        for (i, value) in report.converged() {
            let image = m.apply(value);
            if !targets.iter().any(|&t| chordal_distance(t, image) < tol) {
                unmatched.push((i, image));
            }
        }
    }
    Ok(CrossCheck {
        unbounded_faces: faces,
        rays,
        values_checked: normalization.is_some(),
        unmatched,
    })
}
