use crate::geometry::Cube;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid {name}: {msg}")]
    InvalidParam { name: &'static str, msg: String },

    /// Doubling a ring needs `alpha < 1/2`; thicker rings take the final
    /// half-step extension instead.
    #[error("ring with alpha = {alpha} is too thick to double (needs alpha < 1/2)")]
    AlphaNotThin { alpha: f64 },

    #[error("operation needs alpha >= 1/2, got alpha = {alpha}")]
    AlphaNotThick { alpha: f64 },

    #[error("ring tiling would need {needed} cubes, above the cap of {cap}")]
    TilingCap { needed: usize, cap: usize },

    #[error("no exact tiling of the ring with alpha = {alpha} within the layer cap")]
    TilingNoSnap { alpha: f64 },

    #[error(
        "quadrature did not reach rel tol {tol:.2e} within {evals} evaluations \
         (best estimate {best:.12e}, achieved {achieved:.2e})"
    )]
    QuadratureBudget {
        best: f64,
        achieved: f64,
        tol: f64,
        evals: u64,
    },

    #[error("weight has zero mass on sampled cube centered {center:?} with side {side}")]
    ZeroMass { center: [f64; 2], side: f64 },

    #[error("region {region:?} is not inside the grid box {grid:?}")]
    RegionOutsideGrid { region: Cube, grid: Cube },

    #[error("cube nesting violated: expected Q1 subset Q0 subset kappa*Q1 with kappa = {kappa}")]
    NestingViolated { kappa: f64 },

    #[error(
        "bump support (3/2)Q_k escapes the sample domain; enlarge the margin \
         (need eps >= {needed_eps})"
    )]
    SupportEscapesDomain { needed_eps: f64 },

    #[error("cover level {level} is missing mu(R); run measure_ring over the cover first")]
    MissingMeasure { level: usize },

    #[error("cover cubes overlap at level {level} (indices {a} and {b})")]
    OverlappingCover { level: usize, a: usize, b: usize },

    #[error("test-function suite is empty")]
    EmptySuite,

    #[error(
        "feasible region empty on the extended grid although delta/p = {ratio} > {threshold}; \
         closed form and sufficient condition disagree"
    )]
    FeasibilityInconsistent { ratio: f64, threshold: f64 },

    #[error("malformed CSV at line {line}: {msg}")]
    CsvFormat { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
