use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LineComplexError {
    #[error("invalid base point set: {0}")]
    InvalidBaseSet(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("half-edge {0} has no pair")]
    DanglingHalfEdge(usize),
    #[error("face through corner ({vertex}, {corner}) cannot be labeled consistently")]
    UnlabelableFace { vertex: usize, corner: usize },
    #[error("collapsing parallel edges leaves a cycle: {0}")]
    NotATree(String),
    #[error("labels around vertex {vertex} wind {winding} slots, expected {q}")]
    WindingMismatch {
        vertex: usize,
        winding: usize,
        q: usize,
    },
    #[error("two adjacent faces at vertex {vertex} share a label")]
    ZeroGap { vertex: usize },
    #[error("need at least two logarithmic ends, got {0}")]
    TooFewEnds(usize),
    #[error("base point set has no label named `0`")]
    NoZeroLabel,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymmetryError {
    #[error(transparent)]
    LineComplex(#[from] LineComplexError),
    #[error("base point set has no label named `0`")]
    NoZeroLabel,
    #[error("graph carries split zero labels 0+ / 0-")]
    SplitZeroLabel,
    #[error("no orientation-reversing involution preserves the graph")]
    NoInvolution,
    #[error("label `{0}` cannot be split")]
    InvalidLabel(String),
    #[error("a real logarithmic singularity lies over `{0}`")]
    RealSingularityOverLabel(String),
    #[error("face {0} is bisected by the axis")]
    FaceOnAxis(usize),
    #[error("real-zero criterion fails at vertex {witness}")]
    CriterionFailed { witness: usize },
    #[error("degree {d} is congruent to 2 mod 4: no symmetric graph with infinitely many zeros, all real (finitely many roots only)")]
    VariantUnavailable { d: usize },
    #[error("finite zero variants need an even degree, got {d}")]
    OddFiniteVariant { d: usize },
    #[error("no conjugation-compatible base order extends the catalog tree for degree {d}")]
    CatalogSearchExhausted { d: usize },
    #[error("tree is not almost symmetric: {0}")]
    NotAlmostSymmetric(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OdeError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("tolerance {0} outside [1e-14, 1e-6]")]
    InvalidTolerance(f64),
    #[error("step size underflow near z = {at}")]
    StepUnderflow { at: Complex64 },
    #[error("solution magnitude exceeded the cap near z = {at}")]
    OverflowGuard { at: Complex64 },
    #[error("sample point {at} is too close to a zero of w2")]
    PoleTooClose { at: Complex64 },
    #[error("|f'| below threshold at {at}")]
    CriticalPoint { at: Complex64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SectorError {
    #[error(transparent)]
    Ode(#[from] OdeError),
    #[error("the zero polynomial has no Stokes directions")]
    ZeroPolynomial,
    #[error("ratio did not settle along the ray at angle {angle}")]
    NoConvergence { angle: f64 },
    #[error("graph has {graph} unbounded faces but {rays} rays were probed")]
    CountMismatch { graph: usize, rays: usize },
    #[error("normalization needs three distinct points: {0}")]
    BadNormalization(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeFileError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invariant violation: {rule}")]
    InvariantViolation { line: usize, rule: String },
}
