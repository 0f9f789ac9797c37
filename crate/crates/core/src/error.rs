use num_bigint::BigInt;
use thiserror::Error;

/// Errors reported by the classification, quotient, sphere, curve, and
/// surgery operations.  Construction errors for Seifert data itself live in
/// [`crate::InvalidSeifertData`], parse errors in [`crate::ParseError`], and
/// move errors in [`crate::MoveError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("d must be a positive integer, got {d}")]
    NonPositiveD { d: BigInt },

    #[error("weights must be positive, got {value}")]
    NonPositiveWeight { value: BigInt },

    #[error("weights {a} and {b} must be coprime, gcd = {gcd}")]
    NonCoprimeWeights { a: BigInt, b: BigInt, gcd: BigInt },

    #[error("section report is inconsistent with the manifold and d: {reason}")]
    InconsistentReport { reason: String },

    #[error("surgery presentations require base genus 0, got {genus}")]
    PositiveBaseGenus { genus: u64 },

    #[error("twist vector has {got} entries for {expected} meridians")]
    MeridianCountMismatch { expected: usize, got: usize },

    #[error("meridian index {index} out of range for {count} meridians")]
    MeridianIndexOutOfRange { index: usize, count: usize },

    #[error("meridian permutation repeats index {index}")]
    RepeatedMeridianIndex { index: usize },

    #[error("meridian {index} has a finite coefficient, not infinity")]
    NotInfinityMeridian { index: usize },

    #[error("curve weights must have a0 = 1, got {a0}")]
    CurveWeightNotOne { a0: BigInt },

    #[error("curve root {index} = ({a}, {b}) must have both coordinates nonzero")]
    RootAtCoordinatePoint { index: usize, a: BigInt, b: BigInt },

    #[error("curve root {index} = ({a}, {b}) is not a coprime pair")]
    RootNotReduced { index: usize, a: BigInt, b: BigInt },

    #[error("curve roots {first} and {second} define the same factor; F would be singular")]
    RepeatedRoot { first: usize, second: usize },

    #[error("curve must satisfy k + eps1 + eps2 >= 1")]
    EmptyCurve,
}
