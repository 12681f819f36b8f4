//! Finite atomic joint lifetime distributions and the quantities derived
//! from them: component-state distributions at a fixed time, the relative
//! quality function, and the various symmetry notions.
//!
//! Every component-state distribution is a right-continuous step function of
//! the time `t` that only changes at the distinct lifetime values
//! ([`LifetimeDistribution::breakpoints`]). Any statement quantified over all
//! `t > 0` is therefore decided by checking each breakpoint; times below the
//! smallest lifetime give a point mass on the all-working state.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{binomial, is_negative, sum, Scalar};
use crate::signature::WeightFunction;
use crate::structure::{full_mask, level, level_states, MAX_COMPONENTS};

/// Largest component count for which weak exchangeability is decided
/// (the check ranges over all `n!` orderings).
pub const MAX_ORDERING_COMPONENTS: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct Atom<T> {
    pub lifetimes: Vec<T>,
    pub prob: T,
}

/// A joint distribution of `n` component lifetimes with finitely many atoms.
///
/// Atoms are kept in canonical form: zero-probability atoms dropped,
/// duplicate lifetime vectors merged, sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct LifetimeDistribution<T> {
    n: usize,
    atoms: Vec<Atom<T>>,
}

fn lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.partial_cmp(y).unwrap_or(Ordering::Equal))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

fn vectors_equal<T: Scalar>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
}

impl<T: Scalar> LifetimeDistribution<T> {
    pub fn new(n: usize, atoms: Vec<(Vec<T>, T)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewComponents { n, min: 1 });
        }
        if n > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                n,
                max: MAX_COMPONENTS,
            });
        }
        if atoms.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for (atom, (lifetimes, prob)) in atoms.iter().enumerate() {
            if lifetimes.len() != n {
                return Err(Error::AtomArity {
                    atom,
                    expected: n,
                    actual: lifetimes.len(),
                });
            }
            if let Some(component) = lifetimes.iter().position(|x| *x <= T::zero()) {
                return Err(Error::NonPositiveLifetime {
                    atom,
                    component: component + 1,
                });
            }
            if is_negative(prob) || *prob > T::one() {
                return Err(Error::ProbabilityOutOfRange { atom });
            }
        }
        let total = sum(atoms.iter().map(|(_, p)| p));
        if !total.approx_eq(&T::one()) {
            return Err(Error::ProbabilitySum {
                deficit: (T::one() - total).to_text(),
            });
        }

        let mut merged: Vec<Atom<T>> = Vec::with_capacity(atoms.len());
        for (lifetimes, prob) in atoms {
            if prob.approx_eq(&T::zero()) {
                continue;
            }
            match merged.iter_mut().find(|a| vectors_equal(&a.lifetimes, &lifetimes)) {
                Some(existing) => existing.prob = existing.prob.clone() + prob,
                None => merged.push(Atom { lifetimes, prob }),
            }
        }
        merged.sort_by(|a, b| lex_cmp(&a.lifetimes, &b.lifetimes));
        Ok(LifetimeDistribution { n, atoms: merged })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn atoms(&self) -> &[Atom<T>] {
        &self.atoms
    }

    /// True iff some atom has two equal component lifetimes.
    pub fn has_ties(&self) -> bool {
        self.atoms.iter().any(|a| {
            (0..self.n).any(|i| (i + 1..self.n).any(|j| a.lifetimes[i].approx_eq(&a.lifetimes[j])))
        })
    }

    pub fn require_no_ties(&self) -> Result<()> {
        if self.has_ties() {
            Err(Error::Ties)
        } else {
            Ok(())
        }
    }

    /// Distinct lifetime values across all atoms, strictly increasing.
    pub fn breakpoints(&self) -> Vec<T> {
        let mut values: Vec<T> = self
            .atoms
            .iter()
            .flat_map(|a| a.lifetimes.iter().cloned())
            .collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        values.dedup_by(|a, b| a.approx_eq(b));
        values
    }

    /// The distribution with coordinates rearranged: component `i` of the
    /// result carries the lifetime of component `perm[i]` (both 0-based).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let atoms = self
            .atoms
            .iter()
            .map(|a| (perm.iter().map(|&p| a.lifetimes[p].clone()).collect(), a.prob.clone()))
            .collect();
        Self::new(self.n, atoms).expect("permutation preserves validity")
    }

    fn check_time(t: &T) -> Result<()> {
        if *t <= T::zero() {
            return Err(Error::NonPositiveTime);
        }
        Ok(())
    }

    /// Working-component mask of an atom at time `t`.
    fn state_of(atom: &Atom<T>, t: &T) -> usize {
        atom.lifetimes
            .iter()
            .enumerate()
            .filter(|(_, x)| *x > t)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Joint distribution of the component states `Ind(X_i > t)`.
    pub fn state_distribution(&self, t: &T) -> Result<StateDistribution<T>> {
        Self::check_time(t)?;
        let mut probs = vec![T::zero(); 1 << self.n];
        for atom in &self.atoms {
            let s = Self::state_of(atom, t);
            probs[s] = probs[s].clone() + atom.prob.clone();
        }
        Ok(StateDistribution {
            n: self.n,
            t: t.clone(),
            probs,
        })
    }

    /// The relative quality function: `q(A)` is the probability that every
    /// component in `A` strictly outlives every component outside `A`, with
    /// `q(empty) = q([n]) = 1`. Tied atoms contribute nothing to the strict
    /// inequality.
    pub fn relative_quality(&self) -> QualityFunction<T> {
        let full = full_mask(self.n);
        let mut values = vec![T::zero(); 1 << self.n];
        values[0] = T::one();
        values[full] = T::one();
        for atom in &self.atoms {
            for (subset, value) in values.iter_mut().enumerate().take(full).skip(1) {
                let min_in = (0..self.n)
                    .filter(|i| subset >> i & 1 == 1)
                    .map(|i| &atom.lifetimes[i])
                    .fold(None, |m: Option<&T>, x| match m {
                        Some(m) if m <= x => Some(m),
                        _ => Some(x),
                    })
                    .expect("subset is nonempty");
                let beaten = (0..self.n)
                    .filter(|i| subset >> i & 1 == 0)
                    .all(|i| atom.lifetimes[i] < *min_in);
                if beaten {
                    *value = value.clone() + atom.prob.clone();
                }
            }
        }
        QualityFunction {
            n: self.n,
            values,
            from_ties: self.has_ties(),
        }
    }

    pub fn states_exchangeable_at(&self, t: &T) -> Result<bool> {
        Ok(self.state_distribution(t)?.is_exchangeable())
    }

    /// State exchangeability for every `t > 0`, decided on the breakpoints.
    pub fn states_exchangeable_everywhere(&self) -> bool {
        self.breakpoints().iter().all(|t| {
            self.states_exchangeable_at(t)
                .expect("breakpoints are positive")
        })
    }

    /// Invariance of the joint lifetime law under every coordinate permutation.
    /// Adjacent transpositions generate the symmetric group, so they suffice.
    pub fn lifetimes_exchangeable(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.n).collect();
            perm.swap(i, i + 1);
            self.same_law(&self.permuted(&perm))
        })
    }

    fn same_law(&self, other: &Self) -> bool {
        self.atoms.len() == other.atoms.len()
            && self.atoms.iter().all(|a| {
                other
                    .atoms
                    .iter()
                    .any(|b| vectors_equal(&a.lifetimes, &b.lifetimes) && a.prob.approx_eq(&b.prob))
            })
    }

    /// `Pr(X_{k:n} > t)`, the reliability of the `(n-k+1)`-out-of-`n` system.
    pub fn order_stat_survival(&self, k: usize, t: &T) -> Result<T> {
        if k == 0 || k > self.n {
            return Err(Error::OrderOutOfRange { k, n: self.n });
        }
        Ok(self.state_distribution(t)?.order_stat_survival(k))
    }

    /// Probability that every component in `subset` survives beyond `t`.
    pub fn group_reliability(&self, subset: usize, t: &T) -> Result<T> {
        Self::check_time(t)?;
        Ok(sum(self
            .atoms
            .iter()
            .filter(|a| Self::state_of(a, t) & subset == subset)
            .map(|a| &a.prob)))
    }

    /// Whether `Pr(chi(t) = x) = w(x) * sum_{|z| = |x|} Pr(chi(t) = z)` for every `x != 0`.
    pub fn condition_w(&self, w: &WeightFunction<T>, t: &T) -> Result<bool> {
        Ok(self.state_distribution(t)?.condition_w_witness(w)?.is_none())
    }

    /// Decides weak exchangeability: for every ordering with positive
    /// probability, conditioning on it leaves the law of every order
    /// statistic unchanged. Zero-probability orderings are skipped and listed.
    pub fn weak_exchangeability(&self) -> Result<WeakExchangeability<T>> {
        self.require_no_ties()?;
        if self.n > MAX_ORDERING_COMPONENTS {
            return Err(Error::TooManyComponents {
                n: self.n,
                max: MAX_ORDERING_COMPONENTS,
            });
        }
        // Without ties each atom realizes exactly one strict ordering.
        let orderings: Vec<Vec<usize>> = self.atoms.iter().map(|a| ascending_order(&a.lifetimes)).collect();
        let sorted: Vec<Vec<T>> = self
            .atoms
            .iter()
            .map(|a| {
                let mut v = a.lifetimes.clone();
                v.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
                v
            })
            .collect();
        let breakpoints = self.breakpoints();

        let mut skipped = Vec::new();
        let mut witness = None;
        for sigma in permutations(self.n) {
            let members: Vec<usize> = (0..self.atoms.len()).filter(|&a| orderings[a] == sigma).collect();
            if members.is_empty() {
                skipped.push(sigma.iter().map(|i| i + 1).collect());
                continue;
            }
            if witness.is_some() {
                continue;
            }
            let mass = sum(members.iter().map(|&a| &self.atoms[a].prob));
            'search: for k in 1..=self.n {
                for t in &breakpoints {
                    let failed = |a: usize| sorted[a][k - 1] <= *t;
                    let joint = sum(members.iter().filter(|&&a| failed(a)).map(|&a| &self.atoms[a].prob));
                    let marginal = sum((0..self.atoms.len()).filter(|&a| failed(a)).map(|a| &self.atoms[a].prob));
                    if !joint.approx_eq(&(marginal.clone() * mass.clone())) {
                        witness = Some(WeakWitness {
                            ordering: sigma.iter().map(|i| i + 1).collect(),
                            k,
                            t: t.clone(),
                            unconditional: marginal,
                            conditional: joint / mass.clone(),
                        });
                        break 'search;
                    }
                }
            }
        }
        Ok(WeakExchangeability {
            holds: witness.is_none(),
            skipped_orderings: skipped,
            witness,
        })
    }

    pub fn weakly_exchangeable(&self) -> Result<bool> {
        Ok(self.weak_exchangeability()?.holds)
    }
}

/// Component indices (0-based) sorted by ascending lifetime.
fn ascending_order<T: Scalar>(lifetimes: &[T]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..lifetimes.len()).collect();
    idx.sort_by(|&a, &b| lifetimes[a].partial_cmp(&lifetimes[b]).unwrap_or(Ordering::Equal));
    idx
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Outcome of the weak exchangeability check.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakExchangeability<T> {
    pub holds: bool,
    /// Orderings (1-based, ascending lifetimes) with zero probability.
    pub skipped_orderings: Vec<Vec<usize>>,
    pub witness: Option<WeakWitness<T>>,
}

/// An ordering, order statistic and time at which conditioning changes
/// `Pr(X_{k:n} <= t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakWitness<T> {
    pub ordering: Vec<usize>,
    pub k: usize,
    pub t: T,
    pub unconditional: T,
    pub conditional: T,
}

/// Joint law of the component states at a fixed time.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDistribution<T> {
    n: usize,
    t: T,
    probs: Vec<T>,
}

impl<T: Scalar> StateDistribution<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> &T {
        &self.t
    }

    /// Probability of each state, indexed by working-component mask.
    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn prob(&self, state: usize) -> &T {
        &self.probs[state]
    }

    /// `sum_{|z| = k} Pr(chi(t) = z)`.
    pub fn level_total(&self, k: usize) -> T {
        sum(level_states(self.n, k).map(|s| &self.probs[s]))
    }

    /// First pair of same-level states with different probabilities.
    pub fn exchangeability_witness(&self) -> Option<(usize, usize)> {
        for k in 1..self.n {
            let mut states = level_states(self.n, k);
            let first = states.next().expect("level is nonempty");
            if let Some(other) = states.find(|&s| !self.probs[s].approx_eq(&self.probs[first])) {
                return Some((first, other));
            }
        }
        None
    }

    pub fn is_exchangeable(&self) -> bool {
        self.exchangeability_witness().is_none()
    }

    /// First nonzero state violating the weighted condition, if any.
    pub fn condition_w_witness(&self, w: &WeightFunction<T>) -> Result<Option<usize>> {
        if w.n() != self.n {
            return Err(Error::WeightArity {
                expected: self.n,
                actual: w.n(),
            });
        }
        let totals: Vec<T> = (0..=self.n).map(|k| self.level_total(k)).collect();
        Ok((1..self.probs.len()).find(|&s| {
            let rhs = w.get(s).clone() * totals[level(s)].clone();
            !self.probs[s].approx_eq(&rhs)
        }))
    }

    /// `sum_{|x| >= n - k + 1} Pr(chi(t) = x)` for `0 <= k <= n + 1`;
    /// `k = 0` gives 0 and `k = n + 1` gives 1.
    pub(crate) fn order_stat_survival(&self, k: usize) -> T {
        debug_assert!(k <= self.n + 1);
        let threshold = self.n + 1 - k;
        sum(self
            .probs
            .iter()
            .enumerate()
            .filter(|(s, _)| level(*s) >= threshold)
            .map(|(_, p)| p))
    }
}

/// The relative quality function over all subsets of `[n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QualityFunction<T> {
    n: usize,
    values: Vec<T>,
    from_ties: bool,
}

impl<T: Scalar> QualityFunction<T> {
    /// A quality function given directly by its values (indexed by subset mask).
    pub fn from_values(n: usize, values: Vec<T>) -> Result<Self> {
        if n == 0 || n > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                n,
                max: MAX_COMPONENTS,
            });
        }
        if values.len() != 1 << n {
            return Err(Error::InvalidQuality {
                detail: format!("expected {} values, got {}", 1 << n, values.len()),
            });
        }
        if !values[0].approx_eq(&T::one()) || !values[full_mask(n)].approx_eq(&T::one()) {
            return Err(Error::InvalidQuality {
                detail: "the convention q(empty) = q([n]) = 1".into(),
            });
        }
        if let Some(s) = values.iter().position(|v| is_negative(v) || *v > T::one()) {
            return Err(Error::InvalidQuality {
                detail: format!("the range [0, 1] at subset {s:#b}"),
            });
        }
        Ok(QualityFunction {
            n,
            values,
            from_ties: false,
        })
    }

    /// `q(A) = 1 / C(n, |A|)`.
    pub fn symmetric(n: usize) -> Self {
        let values = (0..1usize << n).map(|s| T::one() / binomial::<T>(n, level(s))).collect();
        QualityFunction {
            n,
            values,
            from_ties: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, subset: usize) -> &T {
        &self.values[subset]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Whether the underlying distribution had ties.
    pub fn from_ties(&self) -> bool {
        self.from_ties
    }

    /// Whether every level sums to one.
    pub fn levels_sum_to_one(&self) -> bool {
        (1..=self.n).all(|k| sum(level_states(self.n, k).map(|s| &self.values[s])).approx_eq(&T::one()))
    }

    /// First subset with `q(A) != 1 / C(n, |A|)`.
    pub fn asymmetry_witness(&self) -> Option<usize> {
        (0..self.values.len()).find(|&s| {
            let expected = T::one() / binomial::<T>(self.n, level(s));
            !self.values[s].approx_eq(&expected)
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry_witness().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{crossed_pair, shifted_triples, single_atom};
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ties_detection() {
        assert!(!crossed_pair().has_ties());
        assert!(single_atom(&[1, 1, 2]).has_ties());
        assert!(!shifted_triples().has_ties());
    }

    #[test]
    fn validation_errors() {
        let one = Rational::from_integer(1.into());
        assert_eq!(
            LifetimeDistribution::<Rational>::new(2, vec![]),
            Err(Error::EmptyDistribution)
        );
        assert_eq!(
            LifetimeDistribution::new(2, vec![(vec![one.clone()], one.clone())]),
            Err(Error::AtomArity { atom: 0, expected: 2, actual: 1 })
        );
        assert_eq!(
            LifetimeDistribution::new(2, vec![(vec![one.clone(), r(0, 1)], one.clone())]),
            Err(Error::NonPositiveLifetime { atom: 0, component: 2 })
        );
        assert_eq!(
            LifetimeDistribution::new(1, vec![(vec![one.clone()], r(3, 4))]),
            Err(Error::ProbabilitySum { deficit: "1/4".into() })
        );
        assert_eq!(
            LifetimeDistribution::new(1, vec![(vec![one.clone()], r(-1, 4)), (vec![r(2, 1)], r(5, 4))]),
            Err(Error::ProbabilityOutOfRange { atom: 0 })
        );
    }

    #[test]
    fn duplicates_merge_and_zero_atoms_drop() {
        let d = LifetimeDistribution::new(
            2,
            vec![
                (vec![r(1, 1), r(2, 1)], r(1, 4)),
                (vec![r(3, 1), r(1, 1)], r(0, 1)),
                (vec![r(1, 1), r(2, 1)], r(3, 4)),
            ],
        )
        .unwrap();
        assert_eq!(d.atoms().len(), 1);
        assert_eq!(d.atoms()[0].prob, r(1, 1));
    }

    #[test]
    fn quality_of_shifted_triples() {
        let q = shifted_triples().relative_quality();
        for s in [0b001, 0b010, 0b011, 0b101] {
            assert_eq!(*q.get(s), r(3, 8), "subset {s:#b}");
        }
        for s in [0b100, 0b110] {
            assert_eq!(*q.get(s), r(2, 8), "subset {s:#b}");
        }
        assert!(q.levels_sum_to_one());
        assert!(!q.is_symmetric());
        assert_eq!(q.asymmetry_witness(), Some(0b001));
    }

    #[test]
    fn quality_of_crossed_pair() {
        let q = crossed_pair().relative_quality();
        assert_eq!(*q.get(0b01), r(1, 2));
        assert_eq!(*q.get(0b10), r(1, 2));
        assert!(q.is_symmetric());
    }

    #[test]
    fn quality_of_single_atom_is_a_chain() {
        let q = single_atom(&[2, 3, 1]).relative_quality();
        // top-1 is component 2, top-2 is {1, 2}
        let ones: Vec<usize> = (0..8).filter(|&s| *q.get(s) == r(1, 1)).collect();
        assert_eq!(ones, vec![0b000, 0b010, 0b011, 0b111]);
        assert!((0..8).all(|s| *q.get(s) == r(1, 1) || *q.get(s) == r(0, 1)));
    }

    #[test]
    fn symmetric_quality_for_two() {
        let q = QualityFunction::from_values(2, vec![r(1, 1), r(1, 2), r(1, 2), r(1, 1)]).unwrap();
        assert!(q.is_symmetric());
        assert!(QualityFunction::from_values(2, vec![r(0, 1), r(1, 2), r(1, 2), r(1, 1)]).is_err());
        assert!(QualityFunction::<Rational>::symmetric(4).levels_sum_to_one());
    }

    #[test]
    fn crossed_pair_states_at_two() {
        let sd = crossed_pair().state_distribution(&r(2, 1)).unwrap();
        for s in 0..4 {
            assert_eq!(*sd.prob(s), r(1, 4));
        }
        assert!(sd.is_exchangeable());
    }

    #[test]
    fn extreme_times_give_point_masses() {
        let d = shifted_triples();
        let early = d.state_distribution(&r(1, 2)).unwrap();
        assert_eq!(*early.prob(0b111), r(1, 1));
        let late = d.state_distribution(&r(5, 1)).unwrap();
        assert_eq!(*late.prob(0), r(1, 1));
        assert_eq!(d.state_distribution(&r(0, 1)), Err(Error::NonPositiveTime));
    }

    #[test]
    fn breakpoint_lists() {
        let as_r = |v: &[i64]| v.iter().map(|&x| r(x, 1)).collect::<Vec<_>>();
        assert_eq!(crossed_pair().breakpoints(), as_r(&[1, 2, 3, 4]));
        assert_eq!(shifted_triples().breakpoints(), as_r(&[1, 2, 3, 4, 5]));
        assert_eq!(single_atom(&[5, 5, 5]).breakpoints(), as_r(&[5]));
    }

    #[test]
    fn state_exchangeability_examples() {
        let d = crossed_pair();
        for t in [r(1, 1), r(3, 2), r(2, 1), r(7, 2)] {
            assert!(d.states_exchangeable_at(&t).unwrap());
        }
        assert!(d.states_exchangeable_everywhere());
        let e = shifted_triples();
        let sd = e.state_distribution(&r(3, 1)).unwrap();
        for s in 1..7 {
            assert_eq!(*sd.prob(s), r(1, 8));
        }
        assert!(e.states_exchangeable_at(&r(3, 1)).unwrap());
        assert!(!single_atom(&[1, 2, 3]).states_exchangeable_at(&r(3, 2)).unwrap());
    }

    #[test]
    fn lifetime_exchangeability_examples() {
        assert!(!crossed_pair().lifetimes_exchangeable());
        assert!(!single_atom(&[1, 2, 3]).lifetimes_exchangeable());
        let orbit: Vec<(Vec<Rational>, Rational)> = permutations(3)
            .into_iter()
            .map(|p| (p.iter().map(|&i| r(i as i64 + 1, 1)).collect(), r(1, 6)))
            .collect();
        assert!(LifetimeDistribution::new(3, orbit).unwrap().lifetimes_exchangeable());
    }

    #[test]
    fn weak_exchangeability_examples() {
        let report = crossed_pair().weak_exchangeability().unwrap();
        assert!(!report.holds);
        assert!(report.skipped_orderings.is_empty());
        let single = single_atom(&[1, 2]).weak_exchangeability().unwrap();
        assert!(single.holds);
        assert_eq!(single.skipped_orderings, vec![vec![2, 1]]);
        assert_eq!(single_atom(&[1, 1, 2]).weakly_exchangeable(), Err(Error::Ties));
    }

    #[test]
    fn order_statistics_and_groups() {
        let d = crossed_pair();
        assert_eq!(d.order_stat_survival(1, &r(2, 1)).unwrap(), r(1, 4));
        assert_eq!(d.order_stat_survival(2, &r(1, 2)).unwrap(), r(1, 1));
        assert!(d.order_stat_survival(3, &r(1, 1)).is_err());
        assert_eq!(d.group_reliability(0, &r(2, 1)).unwrap(), r(1, 1));
        assert_eq!(d.group_reliability(0b01, &r(2, 1)).unwrap(), r(1, 2));
    }

    #[test]
    fn condition_w_with_quality_on_crossed_pair() {
        let d = crossed_pair();
        let w = WeightFunction::from_quality(&d.relative_quality());
        assert!(d.condition_w(&w, &r(2, 1)).unwrap());
        let wrong = WeightFunction::<Rational>::level_uniform(3);
        assert!(matches!(d.condition_w(&wrong, &r(2, 1)), Err(Error::WeightArity { .. })));
    }

    #[test]
    fn permutation_listing() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn float_instantiation_runs() {
        let d = LifetimeDistribution::<f64>::new(
            2,
            vec![(vec![2.0, 1.0], 0.25), (vec![4.0, 2.0], 0.25), (vec![1.0, 3.0], 0.25), (vec![3.0, 4.0], 0.25)],
        )
        .unwrap();
        assert!(d.states_exchangeable_everywhere());
        assert_eq!(*d.relative_quality().get(1), 0.5);
    }
}
