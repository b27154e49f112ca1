//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by body construction, evaluators and geodesic generators.
#[derive(Debug, Error)]
pub enum Error {
    /// A body descriptor violates a structural invariant (convexity, ray
    /// property, positivity of the radial function, ...).
    #[error("invalid body: {0}")]
    InvalidBody(String),

    /// Antipolar of a set that is not strictly separated from the origin.
    #[error("antipolar is empty: input body is not strictly separated from the origin")]
    EmptyAntipolar,

    /// Polar decomposition of the origin is undefined.
    #[error("polar decomposition is undefined at the origin")]
    OriginPoint,

    /// A derivative was requested at a corner angle where the support line is
    /// not unique. The payload carries the dual angle interval.
    #[error("support line is not unique (dual angle interval [{0}, {1}])")]
    NonUniqueSupport(f64, f64),

    /// Angle outside the evaluator's domain.
    #[error("angle {theta} outside the domain ({min}, {max})")]
    OutOfDomain { theta: f64, min: f64, max: f64 },

    /// Point outside the closed cone spanned by the body.
    #[error("point ({0}, {1}) lies outside the cone of the body")]
    OutsideCone(f64, f64),

    /// Hamiltonian maximization with a vanishing covector.
    #[error("zero covector")]
    ZeroCovector,

    /// Covector does not define a separating line (outside the antipolar).
    #[error("covector does not separate: (-h1, h2) is not in the antipolar set")]
    NotSeparating,

    /// Classification request inconsistent with the multiplier value.
    #[error("inconsistent extremal data: {0}")]
    Inconsistent(String),

    /// Heisenberg extremal parameters do not match the requested family.
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    /// Singular family-2 generator called at an angle with a singleton face.
    #[error("angle eta0 has a singleton face; not a singular direction")]
    NotSingularAngle,

    /// Lobachevsky case (i.b) requested on a body without a horizontal facet.
    #[error("boundary has no support point with a horizontal supporting line")]
    HorizontalFacetAbsent,

    /// The eta-quadrature leaves the evaluator domain before the requested time.
    #[error("quadrature blow-up: trajectory leaves the domain at t = {0}")]
    QuadratureBlowup(f64),

    /// Vertical-flow energy constraint violated at the initial angle.
    #[error("energy constraint violated at eta0: radicand = {0}")]
    EnergyViolation(f64),

    /// Lightlike switch schedule exceeds the sign-change bound for h3.
    #[error("too many switches: {requested} requested, at most {allowed} allowed")]
    TooManySwitches { requested: usize, allowed: usize },

    /// A prescribed lightlike switch time does not coincide with a zero of
    /// the horizontal covector, so no PMP lift exists.
    #[error("switch at t = {0} is infeasible: horizontal covector does not vanish there")]
    SwitchInfeasible(f64),

    /// The ODE oracle hit a face of dimension >= 1 on many steps.
    #[error("singular arc encountered on {0} of {1} steps; pointwise maximizer is not unique")]
    SingularArcEncountered(usize, usize),

    /// Malformed JSON input.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// Generic numeric failure (failed bracketing, no convergence, ...).
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
