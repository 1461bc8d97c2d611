use thiserror::Error;

pub type Result<T> = std::result::Result<T, GmcError>;

#[derive(Debug, Error)]
pub enum GmcError {
    #[error("point ({0}, {1}) is not interior to the domain")]
    PointOutsideDomain(f64, f64),

    #[error("coincident evaluation points (distance {0:.3e})")]
    CoincidentPoints(f64),

    #[error("circle of radius {radius} at ({x}, {y}) exits the domain")]
    CircleExitsDomain { x: f64, y: f64, radius: f64 },

    #[error("covariance is ill-conditioned even with jitter {jitter:.3e}; closest entry pair is ({i}, {j}) at distance {dist:.3e}")]
    IllConditioned { jitter: f64, i: usize, j: usize, dist: f64 },

    #[error("map is not injective: Taylor coefficient |a_{n}| = {value:.3e} exceeds the de Branges bound by more than 10x")]
    NonInjectiveMap { n: usize, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("bracket sub-schedule has {got} scales, need at least {needed}")]
    SubScheduleTooCoarse { needed: usize, got: usize },

    #[error("Koebe margin violated: image of the pullback ball leaves B_4eps (max |w - z| = {max_dev:.3e} > {allowed:.3e})")]
    KoebeMarginViolated { max_dev: f64, allowed: f64 },

    #[error("Monte Carlo half-width {achieved:.3e} exceeds requested {requested:.3e}; increase the path count")]
    InsufficientPaths { requested: f64, achieved: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
