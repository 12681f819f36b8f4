//! Small reference distributions with known properties, used by the test
//! suites and handy for experimentation.

use crate::distribution::LifetimeDistribution;
use crate::Rational;

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn build(n: usize, atoms: &[(&[i64], Rational)]) -> LifetimeDistribution<Rational> {
    LifetimeDistribution::new(
        n,
        atoms
            .iter()
            .map(|(x, p)| (x.iter().map(|&v| int(v)).collect(), p.clone()))
            .collect(),
    )
    .expect("fixture is a valid distribution")
}

/// Two components, atoms `(2,1), (4,2), (1,3), (3,4)` each with probability 1/4.
///
/// Component states are exchangeable at every time although the lifetimes
/// are not exchangeable (nor weakly exchangeable).
pub fn crossed_pair() -> LifetimeDistribution<Rational> {
    let quarter = Rational::new(1.into(), 4.into());
    build(
        2,
        &[
            (&[2, 1], quarter.clone()),
            (&[4, 2], quarter.clone()),
            (&[1, 3], quarter.clone()),
            (&[3, 4], quarter),
        ],
    )
}

/// Three components with eight equiprobable atoms: states are exchangeable
/// at every time but the relative quality function is not symmetric.
pub fn shifted_triples() -> LifetimeDistribution<Rational> {
    let eighth = Rational::new(1.into(), 8.into());
    let atoms: [&[i64]; 8] = [
        &[1, 2, 4],
        &[2, 4, 5],
        &[3, 1, 2],
        &[4, 2, 3],
        &[5, 3, 4],
        &[2, 3, 1],
        &[3, 4, 2],
        &[4, 5, 3],
    ];
    build(3, &atoms.map(|x| (x, eighth.clone())))
}

/// The six orderings of `(1, 2, 3)` listed as
/// `(1,2,3), (1,3,2), (2,1,3), (2,3,1), (3,2,1), (3,1,2)` with the given
/// probabilities (zeros allowed).
pub fn orderings_of_three(probs: [Rational; 6]) -> LifetimeDistribution<Rational> {
    let vectors: [&[i64]; 6] = [&[1, 2, 3], &[1, 3, 2], &[2, 1, 3], &[2, 3, 1], &[3, 2, 1], &[3, 1, 2]];
    let atoms: Vec<(&[i64], Rational)> = vectors.into_iter().zip(probs).collect();
    build(3, &atoms)
}

/// One atom with probability 1.
pub fn single_atom(lifetimes: &[i64]) -> LifetimeDistribution<Rational> {
    build(lifetimes.len(), &[(lifetimes, int(1))])
}
