//! Exact signature analysis of coherent and semicoherent systems whose
//! component lifetimes follow a finite atomic joint distribution.
//!
//! The crate computes system signatures, probability signatures and
//! reliability curves, and decides, for a given distribution, whether the
//! reliability of every system is the signature-weighted mixture of the
//! order-statistic survival functions (and which signature makes it so).
//!
//! Numerics are generic over [`Scalar`]; [`Rational`] (arbitrary-precision)
//! is the instantiation for exact decisions and the one used by the CLI.
//! The `Exact*` and `Float*` aliases below fix the scalar type.

pub mod cli;
pub mod distribution;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod reliability;
pub mod scalar;
pub mod signature;
pub mod structure;

pub use distribution::{Atom, LifetimeDistribution, QualityFunction, StateDistribution, WeakExchangeability};
pub use error::{Error, ErrorKind, Result};
pub use reliability::{
    diagnose, probability_signature_oracle, reliability_curve, repr_boland, repr_prob_signature, repr_weighted,
    system_lifetime, system_reliability, system_reliability_by_atoms, verify_theorems, DiagnosisReport,
    ReliabilityCurve,
};
pub use scalar::Scalar;
pub use signature::{
    boland_signature, phi_level, probability_signature, signatures_agree, weighted_phi_level, weighted_signature,
    Signature, WeightFunction,
};
pub use structure::{
    appendix_basis, enumerate_systems, rank_over, rank_over_rationals, StructureFunction, SystemClass,
};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub type ExactDistribution = LifetimeDistribution<Rational>;
pub type ExactStateDistribution = StateDistribution<Rational>;
pub type ExactQuality = QualityFunction<Rational>;
pub type ExactSignature = Signature<Rational>;
pub type ExactWeights = WeightFunction<Rational>;
pub type ExactCurve = ReliabilityCurve<Rational>;
pub type ExactReport = DiagnosisReport<Rational>;

pub type FloatDistribution = LifetimeDistribution<f64>;
pub type FloatQuality = QualityFunction<f64>;
pub type FloatSignature = Signature<f64>;
pub type FloatCurve = ReliabilityCurve<f64>;

/// `numer / denom` as a [`Rational`].
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
