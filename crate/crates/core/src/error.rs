//! Error types shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the calculus.
///
/// Variants carry the residuals or witnesses a caller needs to decide whether
/// to retry with a looser tolerance.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("zero vector cannot be classified")]
    ZeroVector,

    #[error("point is outside the closed Siegel domain (defect {defect:.3e})")]
    NotInClosedDomain { defect: f64 },

    #[error("matrix does not preserve the Hermitian form within tolerance (form residual {form_residual:.3e}, det residual {det_residual:.3e})")]
    NotInGroup {
        form_residual: f64,
        det_residual: f64,
    },

    #[error("argument is not a negative vector")]
    NotNegative,

    #[error("columns do not span a 3-dimensional subspace with 1-dimensional orthogonal complement")]
    DegenerateSpan,

    #[error("null vectors pair to zero; no frame exists")]
    DegeneratePair,

    #[error("eigenvalue moduli sit inside the tolerance band around 1 (deviation {deviation:.3e}); classification is ambiguous")]
    NearBoundaryAmbiguous { deviation: f64 },

    #[error("element is not loxodromic")]
    NotLoxodromic,

    #[error("loxodromic normal form requires r > 1 (got {r})")]
    OutOfRegion { r: f64 },

    #[error("unit eigenvalues coincide; the eigenframe is not unique")]
    DegenerateUnitEigenvalues,

    #[error("loxodromic is too close to parabolic (r - 1 = {margin:.3e}); frame would be ill-conditioned")]
    NearParabolic { margin: f64 },

    #[error("a cross-ratio denominator pairing vanishes; value is projectively infinite")]
    DegeneratePairing,

    #[error("cross-ratios are real; the angle relations are not asserted there")]
    RealCrossRatioCase,

    #[error("cross-ratios are all real but neither sign relation holds (residuals {chain:.3e} / {real:.3e})")]
    InconsistentRealTriple { chain: f64, real: f64 },

    #[error("the two loxodromics share a fixed point")]
    SharedFixedPoint,

    #[error("no alpha-invariant is well-defined and non-zero")]
    NoValidAlpha,

    #[error("no beta-invariant is well-defined and non-zero")]
    NoValidBeta,

    #[error("pair is not non-singular: {failed}")]
    NotNonSingular { failed: String },

    #[error("an invariant needed by the identity relations is undefined")]
    UndefinedInvariant,

    #[error("cross-ratio triple violates the variety constraints (relation residual {relation:.3e}, inequality slack {slack:.3e})")]
    OffVariety { relation: f64, slack: f64 },

    #[error("cross-ratio triple lies on the real locus; realization is not unique there")]
    RealCrossRatioLocus,

    #[error("reconstructed pair fails the non-singularity check; the invariant record is inconsistent")]
    NotNonSingularResult,

    #[error("reconstruction did not converge (best residual {residual:.3e})")]
    NoConvergence { residual: f64 },

    #[error("boundary loxodromics are incompatible{}", curve.map(|c| format!(" along curve {c}")).unwrap_or_default())]
    IncompatibleBoundary { curve: Option<usize> },

    #[error("a peripheral element of the glued group is not loxodromic")]
    PeripheralNotLoxodromic,

    #[error("parameter budget mismatch: expected {expected} records, got {got}")]
    BudgetMismatch { expected: usize, got: usize },

    #[error("rejection sampling exhausted after {attempts} attempts")]
    ResampleExhausted { attempts: u32 },

    #[error("malformed input: {0}")]
    Malformed(String),
}
