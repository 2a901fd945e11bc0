use thiserror::Error;

/// Errors raised by the quintic-to-fold pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not a quintic: leading coefficient is zero")]
    DegenerateDegree,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("quintic is not depressed (quartic coefficient {0} != 0)")]
    NotDepressed(f64),
    #[error("no scale factor in {tried} satisfies the precondition")]
    NoScaleFound { tried: String },

    #[error("line normal vector is zero")]
    DegenerateLine,
    #[error("fold endpoints coincide: P and P' are the same point")]
    CoincidentPoints,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("lines are not parallel")]
    NotParallel,

    #[error("constant term is zero: t = 0 is a root and the remaining factor is a quartic")]
    ZeroConstantTerm,
    #[error("no h in the trial sequence gives a nonnegative discriminant")]
    NoValidH,
    #[error("invalid h = {0}: must be positive and finite")]
    InvalidH(f64),
    #[error("discriminant is negative ({0}) at the chosen h")]
    NegativeDiscriminant(f64),
    #[error("linear system for (k, p, q) is singular (pivot ratio {condition:e})")]
    SingularSystem { condition: f64 },
    #[error("P lies on line l (p = k = {0}); retry with a different h")]
    DegenerateP(f64),
    #[error("configuration does not reproduce the quintic (relative error {0:e})")]
    ConfigMismatch(f64),
    #[error("b = 0: fold xi cannot be parallel to the vertical line n")]
    ZeroB,

    #[error("no solutions to render")]
    EmptySolutions,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
