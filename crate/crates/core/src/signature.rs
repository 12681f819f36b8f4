//! Level averages of a structure function, system signatures, weighted level
//! sums and probability signatures.
//!
//! Signatures are indexed from 1: entry `k` is the weight of the `k`-th
//! component failure (the order statistic `X_{k:n}`).

use crate::distribution::QualityFunction;
use crate::error::{Error, Result};
use crate::scalar::{binomial, sum, Scalar};
use crate::structure::{level, level_states, StructureFunction, MAX_COMPONENTS};

#[derive(Debug, Clone, PartialEq)]
pub struct Signature<T>(Vec<T>);

impl<T: Scalar> Signature<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Signature(entries)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.0
    }

    /// Entry `k`, 1-based.
    pub fn get(&self, k: usize) -> &T {
        &self.0[k - 1]
    }

    pub fn total(&self) -> T {
        sum(&self.0)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(b))
    }

    /// Canonical text forms, index 1 first.
    pub fn to_texts(&self) -> Vec<String> {
        self.0.iter().map(Scalar::to_text).collect()
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }
}

/// Weights on state vectors, indexed by working-component mask.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> WeightFunction<T> {
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        if n > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                n,
                max: MAX_COMPONENTS,
            });
        }
        if values.len() != 1 << n {
            return Err(Error::WeightArity {
                expected: n,
                actual: values.len().trailing_zeros() as usize,
            });
        }
        Ok(WeightFunction { n, values })
    }

    /// `w(x) = 1 / C(n, |x|)`, which turns weighted level sums into level averages.
    pub fn level_uniform(n: usize) -> Self {
        let values = (0..1usize << n).map(|s| T::one() / binomial::<T>(n, level(s))).collect();
        WeightFunction { n, values }
    }

    pub fn zeros(n: usize) -> Self {
        WeightFunction {
            n,
            values: vec![T::zero(); 1 << n],
        }
    }

    pub fn from_quality(q: &QualityFunction<T>) -> Self {
        WeightFunction {
            n: q.n(),
            values: q.values().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, state: usize) -> &T {
        &self.values[state]
    }

    /// `sum_{|z| = k} w(z)`.
    pub fn level_sum(&self, k: usize) -> T {
        sum(level_states(self.n, k).map(|s| &self.values[s]))
    }
}

/// Average of `phi` over the states with exactly `k` working components.
pub fn phi_level<T: Scalar>(phi: &StructureFunction, k: usize) -> Result<T> {
    let n = phi.n();
    if k > n {
        return Err(Error::LevelOutOfRange { k, n });
    }
    Ok(T::from_count(phi.level_count(k) as u64) / binomial::<T>(n, k))
}

/// The system signature `s_k = phi_{n-k+1} - phi_{n-k}`.
pub fn boland_signature<T: Scalar>(phi: &StructureFunction) -> Result<Signature<T>> {
    if !phi.is_semicoherent() {
        return Err(Error::NotSemicoherent);
    }
    let n = phi.n();
    let levels = (0..=n).map(|k| phi_level::<T>(phi, k)).collect::<Result<Vec<_>>>()?;
    Ok(Signature(
        (1..=n)
            .map(|k| levels[n - k + 1].clone() - levels[n - k].clone())
            .collect(),
    ))
}

/// `sum_{|x| = k} w(x) phi(x)` for `1 <= k <= n`; level 0 is taken as 0.
pub fn weighted_phi_level<T: Scalar>(phi: &StructureFunction, w: &WeightFunction<T>, k: usize) -> Result<T> {
    let n = phi.n();
    if w.n() != n {
        return Err(Error::WeightArity {
            expected: n,
            actual: w.n(),
        });
    }
    if k > n {
        return Err(Error::LevelOutOfRange { k, n });
    }
    if k == 0 {
        return Ok(T::zero());
    }
    Ok(level_states(n, k)
        .filter(|&s| phi.value(s))
        .fold(T::zero(), |acc, s| acc + w.get(s).clone()))
}

/// `(phi^w_{n-k+1} - phi^w_{n-k})_{k = 1..n}`.
pub fn weighted_signature<T: Scalar>(phi: &StructureFunction, w: &WeightFunction<T>) -> Result<Signature<T>> {
    let n = phi.n();
    let levels = (0..=n)
        .map(|k| weighted_phi_level(phi, w, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(Signature(
        (1..=n)
            .map(|k| levels[n - k + 1].clone() - levels[n - k].clone())
            .collect(),
    ))
}

/// The probability signature `Pr(T = X_{k:n})` computed from the relative
/// quality function of a distribution without ties.
pub fn probability_signature<T: Scalar>(phi: &StructureFunction, q: &QualityFunction<T>) -> Result<Signature<T>> {
    if q.from_ties() {
        return Err(Error::Ties);
    }
    if q.n() != phi.n() {
        return Err(Error::MixedArity {
            first: phi.n(),
            other: q.n(),
        });
    }
    weighted_signature(phi, &WeightFunction::from_quality(q))
}

/// Whether the probability signature equals the system signature exactly.
pub fn signatures_agree<T: Scalar>(phi: &StructureFunction, q: &QualityFunction<T>) -> Result<bool> {
    let prob = probability_signature(phi, q)?;
    let system = boland_signature::<T>(phi)?;
    Ok(prob.approx_eq(&system))
}
