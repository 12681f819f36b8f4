//! System lifetimes and reliability, and the signature-based
//! representations of the reliability as mixtures of order-statistic
//! survival functions.

mod diagnosis;

pub use diagnosis::{
    diagnose, verify_theorems, ConditionWitness, DiagnosisReport, IntervalDiagnosis, ReportMode,
    RepresentationWitness, SignatureWitness, StateWitness, Witnesses,
};

use std::cmp::Ordering;

use crate::distribution::{LifetimeDistribution, StateDistribution};
use crate::error::{Error, Result};
use crate::scalar::{sum, Scalar};
use crate::signature::{boland_signature, probability_signature, weighted_signature, Signature, WeightFunction};
use crate::structure::StructureFunction;

fn check_arity<T: Scalar>(phi: &StructureFunction, d: &LifetimeDistribution<T>) -> Result<()> {
    if phi.n() != d.n() {
        return Err(Error::MixedArity {
            first: phi.n(),
            other: d.n(),
        });
    }
    Ok(())
}

/// The failure time of the system: the first component failure time after
/// which the system is down. Components failing at the same instant fail
/// together.
pub fn system_lifetime<T: Scalar>(phi: &StructureFunction, lifetimes: &[T]) -> Result<T> {
    if lifetimes.len() != phi.n() {
        return Err(Error::StateLength {
            expected: phi.n(),
            actual: lifetimes.len(),
        });
    }
    if !phi.is_semicoherent() {
        return Err(Error::NotSemicoherent);
    }
    let mut times: Vec<&T> = lifetimes.iter().collect();
    times.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    for v in times {
        let state = lifetimes
            .iter()
            .enumerate()
            .filter(|(_, x)| *x > v)
            .fold(0usize, |acc, (i, _)| acc | (1 << i));
        if !phi.value(state) {
            return Ok(v.clone());
        }
    }
    unreachable!("a semicoherent system is down once every component has failed")
}

/// `Pr(T = X_{k:n})` accumulated atom by atom from the system lifetime.
pub fn probability_signature_oracle<T: Scalar>(
    phi: &StructureFunction,
    d: &LifetimeDistribution<T>,
) -> Result<Signature<T>> {
    check_arity(phi, d)?;
    d.require_no_ties()?;
    let mut p = vec![T::zero(); d.n()];
    for atom in d.atoms() {
        let life = system_lifetime(phi, &atom.lifetimes)?;
        let rank = atom.lifetimes.iter().filter(|x| **x < life).count();
        p[rank] = p[rank].clone() + atom.prob.clone();
    }
    Ok(Signature::new(p))
}

/// `Pr(T > t) = sum_x phi(x) Pr(chi(t) = x)`.
pub fn system_reliability<T: Scalar>(phi: &StructureFunction, d: &LifetimeDistribution<T>, t: &T) -> Result<T> {
    check_arity(phi, d)?;
    Ok(reliability_from_states(phi, &d.state_distribution(t)?))
}

pub(crate) fn reliability_from_states<T: Scalar>(phi: &StructureFunction, sd: &StateDistribution<T>) -> T {
    sum(sd
        .probs()
        .iter()
        .enumerate()
        .filter(|(s, _)| phi.value(*s))
        .map(|(_, p)| p))
}

/// `Pr(T > t)` by summing the atoms whose system lifetime exceeds `t`.
pub fn system_reliability_by_atoms<T: Scalar>(
    phi: &StructureFunction,
    d: &LifetimeDistribution<T>,
    t: &T,
) -> Result<T> {
    check_arity(phi, d)?;
    if *t <= T::zero() {
        return Err(Error::NonPositiveTime);
    }
    let mut total = T::zero();
    for atom in d.atoms() {
        if system_lifetime(phi, &atom.lifetimes)? > *t {
            total = total + atom.prob.clone();
        }
    }
    Ok(total)
}

/// Piecewise-constant reliability: `values[0]` holds on `(0, breakpoints[0])`
/// and `values[i]` on `[breakpoints[i-1], breakpoints[i])`, the last one
/// extending to infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityCurve<T> {
    pub breakpoints: Vec<T>,
    pub values: Vec<T>,
}

impl<T: Scalar> ReliabilityCurve<T> {
    pub fn value_at(&self, t: &T) -> T {
        let idx = self.breakpoints.iter().take_while(|v| *v <= t).count();
        self.values[idx].clone()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] <= w[0] || w[1].approx_eq(&w[0]))
    }
}

pub fn reliability_curve<T: Scalar>(phi: &StructureFunction, d: &LifetimeDistribution<T>) -> Result<ReliabilityCurve<T>> {
    check_arity(phi, d)?;
    let breakpoints = d.breakpoints();
    let mut values = Vec::with_capacity(breakpoints.len() + 1);
    // every component works before the first breakpoint
    values.push(phi.indicator(crate::structure::full_mask(d.n())));
    for t in &breakpoints {
        values.push(system_reliability(phi, d, t)?);
    }
    Ok(ReliabilityCurve { breakpoints, values })
}

/// `sum_k c_k Pr(X_{k:n} > t)` for coefficients `c` indexed from 1.
pub(crate) fn mix_order_statistics<T: Scalar>(coefficients: &Signature<T>, sd: &StateDistribution<T>) -> T {
    (1..=coefficients.n()).fold(T::zero(), |acc, k| {
        acc + coefficients.get(k).clone() * sd.order_stat_survival(k)
    })
}

/// The system-signature mixture `sum_k s_k Pr(X_{k:n} > t)`.
///
/// This is only a candidate for the reliability; whether the two agree is
/// exactly what the diagnosis decides.
pub fn repr_boland<T: Scalar>(phi: &StructureFunction, d: &LifetimeDistribution<T>, t: &T) -> Result<T> {
    check_arity(phi, d)?;
    let s = boland_signature::<T>(phi)?;
    Ok(mix_order_statistics(&s, &d.state_distribution(t)?))
}

/// The probability-signature mixture `sum_k Pr(T = X_{k:n}) Pr(X_{k:n} > t)`.
pub fn repr_prob_signature<T: Scalar>(phi: &StructureFunction, d: &LifetimeDistribution<T>, t: &T) -> Result<T> {
    check_arity(phi, d)?;
    d.require_no_ties()?;
    let p = probability_signature(phi, &d.relative_quality())?;
    Ok(mix_order_statistics(&p, &d.state_distribution(t)?))
}

/// The weighted mixture `sum_k (phi^w_{n-k+1} - phi^w_{n-k}) Pr(X_{k:n} > t)`.
pub fn repr_weighted<T: Scalar>(
    phi: &StructureFunction,
    d: &LifetimeDistribution<T>,
    w: &WeightFunction<T>,
    t: &T,
) -> Result<T> {
    check_arity(phi, d)?;
    let c = weighted_signature(phi, w)?;
    Ok(mix_order_statistics(&c, &d.state_distribution(t)?))
}
