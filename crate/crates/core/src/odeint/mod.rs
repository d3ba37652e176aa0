//! Solving `w'' + P w = 0` in the complex plane: basis solutions, real
//! zeros, the Wronskian, and the Schwarzian of `w1 / w2`.

pub mod airy;
mod poly;
mod schwarzian;
pub(crate) mod stepper;
mod tableau;
mod zeros;

use num_complex::Complex64;

use crate::error::OdeError;

use stepper::StepControl;

pub use poly::{hermite, hermite_potential, RealPolynomial};
pub use schwarzian::{schwarzian_residual, SchwarzianReport, Stencil};
pub use zeros::{real_zeros, RealZeros};

pub const DEFAULT_TOL: f64 = 1e-12;
pub(crate) const MIN_TOL: f64 = 1e-14;
const MAX_TOL: f64 = 1e-6;

pub(crate) fn check_tol(tol: f64) -> Result<(), OdeError> {
    if (MIN_TOL..=MAX_TOL).contains(&tol) {
        Ok(())
    } else {
        Err(OdeError::InvalidTolerance(tol))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialData {
    pub z0: Complex64,
    pub w0: Complex64,
    pub w0prime: Complex64,
}

impl InitialData {
    pub fn new(z0: Complex64, w0: Complex64, w0prime: Complex64) -> Result<Self, OdeError> {
        let zero = Complex64::new(0.0, 0.0);
        if w0 == zero && w0prime == zero {
            return Err(OdeError::InvalidInput(
                "initial data (0, 0) gives w = 0".into(),
            ));
        }
        if ![z0, w0, w0prime].iter().all(|c| c.is_finite()) {
            return Err(OdeError::InvalidInput("initial data must be finite".into()));
        }
        Ok(InitialData { z0, w0, w0prime })
    }

    pub fn real(x0: f64, w0: f64, w0prime: f64) -> Result<Self, OdeError> {
        Self::new(
            Complex64::new(x0, 0.0),
            Complex64::new(w0, 0.0),
            Complex64::new(w0prime, 0.0),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checkpoint {
    pub z: Complex64,
    pub w: Complex64,
    pub dw: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OdeSolution {
    pub poly: RealPolynomial,
    pub init: InitialData,
    /// Polyline starting at `init.z0`.
    pub path: Vec<Complex64>,
    /// One entry per accepted step, the initial point first.
    pub checkpoints: Vec<Checkpoint>,
    pub tol: f64,
}

impl OdeSolution {
    pub fn last(&self) -> Checkpoint {
        *self.checkpoints.last().expect("at least the initial point")
    }
}

fn path_from(z0: Complex64, path: &[Complex64]) -> Result<Vec<Complex64>, OdeError> {
    if path.iter().any(|z| !z.is_finite()) {
        return Err(OdeError::InvalidInput("path nodes must be finite".into()));
    }
    let mut nodes = vec![z0];
    nodes.extend_from_slice(path);
    Ok(nodes)
}

/// Integrate from `init.z0` through the nodes of `path` in order.
pub fn integrate(
    p: &RealPolynomial,
    init: InitialData,
    path: &[Complex64],
    tol: f64,
) -> Result<OdeSolution, OdeError> {
    check_tol(tol)?;
    let nodes = path_from(init.z0, path)?;
    let ctl = StepControl::new(tol);
    let mut checkpoints = vec![Checkpoint {
        z: init.z0,
        w: init.w0,
        dw: init.w0prime,
    }];
    stepper::polyline(
        p,
        &nodes,
        [init.w0, init.w0prime],
        &ctl,
        |z, y: &[Complex64; 2]| {
            checkpoints.push(Checkpoint {
                z,
                w: y[0],
                dw: y[1],
            });
        },
    )?;
    Ok(OdeSolution {
        poly: p.clone(),
        init,
        path: nodes,
        checkpoints,
        tol,
    })
}

/// The pair `w1` with data `(1, 0)` and `w2` with data `(0, 1)` at `z0`;
/// their Wronskian is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionBasis {
    pub poly: RealPolynomial,
    pub z0: Complex64,
    pub tol: f64,
}

/// `w1, w1', w2, w2'` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisPoint {
    pub z: Complex64,
    pub w1: Complex64,
    pub dw1: Complex64,
    pub w2: Complex64,
    pub dw2: Complex64,
}

impl BasisPoint {
    fn from_state(z: Complex64, y: &[Complex64; 4]) -> Self {
        BasisPoint {
            z,
            w1: y[0],
            dw1: y[1],
            w2: y[2],
            dw2: y[3],
        }
    }

    pub fn wronskian(&self) -> Complex64 {
        self.w1 * self.dw2 - self.dw1 * self.w2
    }

    /// `f = w1 / w2`.
    pub fn ratio(&self) -> Complex64 {
        self.w1 / self.w2
    }
}

pub fn solution_basis(
    p: &RealPolynomial,
    z0: Complex64,
    tol: f64,
) -> Result<SolutionBasis, OdeError> {
    check_tol(tol)?;
    if !z0.is_finite() {
        return Err(OdeError::InvalidInput("z0 must be finite".into()));
    }
    Ok(SolutionBasis {
        poly: p.clone(),
        z0,
        tol,
    })
}

impl SolutionBasis {
    fn start(&self) -> [Complex64; 4] {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        [one, zero, zero, one]
    }

    /// Both solutions along the polyline from `z0`, on shared checkpoints.
    pub fn along(&self, path: &[Complex64]) -> Result<Vec<BasisPoint>, OdeError> {
        let nodes = path_from(self.z0, path)?;
        let ctl = StepControl::new(self.tol);
        let y0 = self.start();
        let mut out = vec![BasisPoint::from_state(self.z0, &y0)];
        stepper::polyline(&self.poly, &nodes, y0, &ctl, |z, y: &[Complex64; 4]| {
            out.push(BasisPoint::from_state(z, y));
        })?;
        Ok(out)
    }

    /// Both solutions at `z`, reached along the segment from `z0`.
    pub fn at(&self, z: Complex64) -> Result<BasisPoint, OdeError> {
        Ok(*self.along(&[z])?.last().expect("non-empty"))
    }

    /// The two solutions as separate [`OdeSolution`]s.
    pub fn solutions(&self, path: &[Complex64]) -> Result<(OdeSolution, OdeSolution), OdeError> {
        let points = self.along(path)?;
        let nodes = path_from(self.z0, path)?;
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let make = |init: InitialData, pick: fn(&BasisPoint) -> Checkpoint| OdeSolution {
            poly: self.poly.clone(),
            init,
            path: nodes.clone(),
            checkpoints: points.iter().map(pick).collect(),
            tol: self.tol,
        };
        Ok((
            make(
                InitialData {
                    z0: self.z0,
                    w0: one,
                    w0prime: zero,
                },
                |b| Checkpoint {
                    z: b.z,
                    w: b.w1,
                    dw: b.dw1,
                },
            ),
            make(
                InitialData {
                    z0: self.z0,
                    w0: zero,
                    w0prime: one,
                },
                |b| Checkpoint {
                    z: b.z,
                    w: b.w2,
                    dw: b.dw2,
                },
            ),
        ))
    }
}

/// Largest `|W - 1|` over the checkpoints of the basis integrated from `z0`
/// to both ends of the real interval `[a, b]`.
pub fn wronskian_drift(basis: &SolutionBasis, interval: (f64, f64)) -> Result<f64, OdeError> {
    let (a, b) = interval;
    let one = Complex64::new(1.0, 0.0);
    let mut drift: f64 = 0.0;
    for end in [a, b] {
        for point in basis.along(&[Complex64::new(end, 0.0)])? {
            drift = drift.max((point.wronskian() - one).norm());
        }
    }
    Ok(drift)
}

/// As [`wronskian_drift`], with each deviation divided by the size of the
/// products that cancel in `W`.
pub fn relative_wronskian_drift(
    basis: &SolutionBasis,
    interval: (f64, f64),
) -> Result<f64, OdeError> {
    let (a, b) = interval;
    let one = Complex64::new(1.0, 0.0);
    let mut drift: f64 = 0.0;
    for end in [a, b] {
        for p in basis.along(&[Complex64::new(end, 0.0)])? {
            let size = (p.w1 * p.dw2).norm() + (p.dw1 * p.w2).norm();
            drift = drift.max((p.wronskian() - one).norm() / size.max(1.0));
        }
    }
    Ok(drift)
}
