use thiserror::Error;

/// Errors surfaced by the cohomology engine and the theorem harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be a positive integer, got {0}")]
    InvalidDegree(i64),

    #[error("characteristic must be prime, got {0}")]
    NonPrimeCharacteristic(u64),

    #[error("polarization scale must be a positive integer, got {0}")]
    InvalidPolarizationScale(i64),

    #[error("cohomology degree {index} out of range 0..={max}")]
    CohomologyDegreeOutOfRange { index: u8, max: u8 },

    #[error(
        "twist O({old_twist}) is not an integral multiple of the polarization \
         (O(1) corresponds to scale {scale})"
    )]
    UnrepresentableTwist { old_twist: i64, scale: i64 },

    #[error("twist parameter r must be at least 1, got {0}")]
    TwistOutOfRange(i64),

    #[error("degree {0} rejected: the canonical bundle is ample only for degree >= 5")]
    CanonicalNotAmple(i64),

    #[error("sweep grid is empty: {0}")]
    EmptyGrid(&'static str),
}
