use core::fmt;

/// Errors raised by parameter validation and domain checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A parameter that must be finite was NaN or infinite.
    NonFinite { name: &'static str, value: f64 },
    /// Gibbs states exist only at strictly positive temperature.
    NonPositiveTemperature { value: f64 },
    /// Concurrence must lie in `[0, 1)`; unit concurrence would need an
    /// infinite coupling.
    ConcurrenceOutOfRange { value: f64 },
    /// Cycle bath temperatures must satisfy `Th > Tl > 0`.
    BathOrdering { th: f64, tl: f64 },
    /// Both stroke couplings must be nonzero.
    ZeroCoupling,
    /// Hot- and cold-stroke couplings must share a sign.
    MixedCouplingSigns { j1: f64, j2: f64 },
    /// A probability vector did not sum to one.
    UnnormalizedProbabilities { sum: f64 },
    /// The positive-work inequality is stated only for antiferromagnetic
    /// cycles whose cold-stage gap lies strictly below the hot-stage gap.
    PositiveWorkRegime { gap_hot: f64, gap_cold: f64 },
    /// The concurrence form of the efficiency applies only for `c1 <= c2`.
    EfficiencyRegime { c1: f64, c2: f64 },
    /// Density matrix is not Hermitian.
    NotHermitian { deviation: f64 },
    /// Density matrix trace differs from one.
    NotUnitTrace { trace: f64 },
    /// Density matrix has a negative eigenvalue.
    NotPositiveSemidefinite { eigenvalue: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonFinite { name, value } => {
                write!(f, "{name} must be finite (got {value})")
            }
            Error::NonPositiveTemperature { value } => {
                write!(f, "temperature must be strictly positive (got {value})")
            }
            Error::ConcurrenceOutOfRange { value } => {
                write!(f, "concurrence must lie in [0, 1) (got {value})")
            }
            Error::BathOrdering { th, tl } => {
                write!(
                    f,
                    "bath temperatures must satisfy Th > Tl (got Th={th}, Tl={tl})"
                )
            }
            Error::ZeroCoupling => {
                write!(f, "coupling must be nonzero in both strokes")
            }
            Error::MixedCouplingSigns { j1, j2 } => {
                write!(
                    f,
                    "mixed-sign couplings: j1={j1} and j2={j2} must both be \
                     antiferromagnetic or both ferromagnetic"
                )
            }
            Error::UnnormalizedProbabilities { sum } => {
                write!(f, "probabilities must sum to 1 (got {sum})")
            }
            Error::PositiveWorkRegime { gap_hot, gap_cold } => {
                write!(
                    f,
                    "positive-work condition applies only to antiferromagnetic cycles \
                     with the cold gap strictly below the hot gap (got hot={gap_hot}, \
                     cold={gap_cold})"
                )
            }
            Error::EfficiencyRegime { c1, c2 } => {
                write!(
                    f,
                    "efficiency in concurrence form requires c1 <= c2 (got c1={c1}, c2={c2})"
                )
            }
            Error::NotHermitian { deviation } => {
                write!(
                    f,
                    "density matrix is not Hermitian (max deviation {deviation:e})"
                )
            }
            Error::NotUnitTrace { trace } => {
                write!(f, "density matrix trace must be 1 (got {trace})")
            }
            Error::NotPositiveSemidefinite { eigenvalue } => {
                write!(
                    f,
                    "density matrix has a negative eigenvalue ({eigenvalue:e})"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}
