//! Seeded corpus generators and brute-force oracles shared by the
//! integration tests. Nothing here calls into the crate's numerics; the
//! oracles work directly on atoms so they can be compared against it.
#![allow(dead_code)]

use coherent_signature::{LifetimeDistribution, Rational, StructureFunction};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    r(n, 1)
}

/// Raw atoms with integer weights, normalized into a distribution.
pub fn from_weighted(n: usize, atoms: Vec<(Vec<i64>, i64)>) -> LifetimeDistribution<Rational> {
    let total: i64 = atoms.iter().map(|(_, w)| w).sum();
    LifetimeDistribution::new(
        n,
        atoms
            .into_iter()
            .map(|(x, w)| (x.into_iter().map(int).collect(), r(w, total)))
            .collect(),
    )
    .expect("generated distribution is valid")
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn distinct_values(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<i64> {
    let mut pool: Vec<i64> = (1..=max).collect();
    pool.shuffle(rng);
    pool.truncate(n);
    pool
}

fn apply(perm: &[usize], v: &[i64]) -> Vec<i64> {
    perm.iter().map(|&i| v[i]).collect()
}

/// Every permutation of a few random base vectors, equal weight inside a
/// base vector's orbit. Lifetimes are exchangeable.
pub fn uniform_over_orderings(rng: &mut ChaCha8Rng, n: usize) -> LifetimeDistribution<Rational> {
    let bases = rng.gen_range(1..=2);
    let perms = all_permutations(n);
    let mut atoms = Vec::new();
    for _ in 0..bases {
        let v = distinct_values(rng, n, 2 * n as i64 + 2);
        let w = rng.gen_range(1..=4);
        atoms.extend(perms.iter().map(|p| (apply(p, &v), w)));
    }
    from_weighted(n, atoms)
}

/// Generic atoms. Half the draws are free tie-free vectors on a small grid;
/// the other half put random weights on the orderings of one fixed vector.
pub fn random_atoms(rng: &mut ChaCha8Rng, n: usize) -> LifetimeDistribution<Rational> {
    let count = rng.gen_range(4..=10);
    let atoms = if rng.gen_bool(0.5) {
        (0..count)
            .map(|_| (distinct_values(rng, n, n as i64 + 3), rng.gen_range(1..=6)))
            .collect()
    } else {
        let base: Vec<i64> = (1..=n as i64).collect();
        let mut perms = all_permutations(n);
        perms.shuffle(rng);
        perms.truncate(count.min(perms.len()));
        perms.iter().map(|p| (apply(p, &base), rng.gen_range(1..=6))).collect()
    };
    from_weighted(n, atoms)
}

/// Orbits of random vectors under the cyclic shift of the components, equal
/// weight inside an orbit and unequal weights across orbits. States are
/// exchangeable for n = 3; lifetimes generally are not.
pub fn cyclic_orbits(rng: &mut ChaCha8Rng, n: usize) -> LifetimeDistribution<Rational> {
    let orbits = rng.gen_range(1..=3);
    let mut atoms = Vec::new();
    for j in 0..orbits {
        let v = distinct_values(rng, n, 2 * n as i64 + 2);
        let w = rng.gen_range(1..=5) + j as i64;
        for shift in 0..n {
            let perm: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
            atoms.push((apply(&perm, &v), w));
        }
    }
    from_weighted(n, atoms)
}

pub type Generator = fn(&mut ChaCha8Rng, usize) -> LifetimeDistribution<Rational>;

pub const GENERATORS: [(&str, Generator); 3] = [
    ("uniform over orderings", uniform_over_orderings),
    ("random atoms", random_atoms),
    ("cyclic orbits", cyclic_orbits),
];

// ---- oracles ----

pub fn atoms_of(d: &LifetimeDistribution<Rational>) -> Vec<(Vec<Rational>, Rational)> {
    d.atoms().iter().map(|a| (a.lifetimes.clone(), a.prob.clone())).collect()
}

pub fn breakpoints_of(d: &LifetimeDistribution<Rational>) -> Vec<Rational> {
    let mut v: Vec<Rational> = d.atoms().iter().flat_map(|a| a.lifetimes.clone()).collect();
    v.sort();
    v.dedup();
    v
}

/// System lifetime as the largest, over path sets, of the earliest failure
/// inside the path set.
pub fn lifetime_by_paths(phi: &StructureFunction, x: &[Rational]) -> Rational {
    let n = x.len();
    (1..1usize << n)
        .filter(|&s| phi.value(s))
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).map(|i| x[i].clone()).min().unwrap())
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn reliability_oracle(phi: &StructureFunction, d: &LifetimeDistribution<Rational>, t: &Rational) -> Rational {
    atoms_of(d)
        .into_iter()
        .filter(|(x, _)| lifetime_by_paths(phi, x) > *t)
        .map(|(_, p)| p)
        .sum()
}

/// `Pr(X_{k:n} > t)` by sorting each atom.
pub fn order_stat_oracle(d: &LifetimeDistribution<Rational>, k: usize, t: &Rational) -> Rational {
    atoms_of(d)
        .into_iter()
        .filter(|(x, _)| {
            let mut s = x.clone();
            s.sort();
            s[k - 1] > *t
        })
        .map(|(_, p)| p)
        .sum()
}

/// `Pr(chi(t) = x)` for every state mask.
pub fn state_probs_oracle(d: &LifetimeDistribution<Rational>, t: &Rational) -> Vec<Rational> {
    let n = d.n();
    let mut probs = vec![Rational::zero(); 1 << n];
    for (x, p) in atoms_of(d) {
        let s = (0..n).filter(|&i| x[i] > *t).fold(0, |acc, i| acc | 1 << i);
        probs[s] += p;
    }
    probs
}

pub fn popcount(s: usize) -> usize {
    s.count_ones() as usize
}

pub fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

pub fn states_exchangeable_oracle(d: &LifetimeDistribution<Rational>, t: &Rational) -> bool {
    let probs = state_probs_oracle(d, t);
    (0..probs.len()).all(|a| (0..probs.len()).all(|b| popcount(a) != popcount(b) || probs[a] == probs[b]))
}

/// `q(A) = Pr(every lifetime in A exceeds every lifetime outside A)`.
pub fn quality_oracle(d: &LifetimeDistribution<Rational>) -> Vec<Rational> {
    let n = d.n();
    (0..1usize << n)
        .map(|a| {
            atoms_of(d)
                .into_iter()
                .filter(|(x, _)| {
                    (0..n).all(|i| (0..n).all(|j| !(a >> i & 1 == 1 && a >> j & 1 == 0) || x[i] > x[j]))
                })
                .map(|(_, p)| p)
                .sum()
        })
        .collect()
}

pub fn q_symmetric_oracle(q: &[Rational], n: usize) -> bool {
    (0..q.len()).all(|a| q[a] == r(1, binomial(n, popcount(a))))
}

/// The state condition with weights `q` at `t`, for every nonzero state.
pub fn condition_q_oracle(d: &LifetimeDistribution<Rational>, q: &[Rational], t: &Rational) -> bool {
    let probs = state_probs_oracle(d, t);
    (1..probs.len()).all(|x| {
        let level: Rational = (0..probs.len())
            .filter(|&z| popcount(z) == popcount(x))
            .map(|z| probs[z].clone())
            .sum();
        probs[x] == q[x].clone() * level
    })
}

/// System signature by averaging over every failure order of the components.
pub fn signature_by_failure_orders(phi: &StructureFunction) -> Vec<Rational> {
    let n = phi.n();
    let perms = all_permutations(n);
    let mut counts = vec![0i64; n];
    for p in &perms {
        let mut state = (1usize << n) - 1;
        for (k, &i) in p.iter().enumerate() {
            state &= !(1 << i);
            if !phi.value(state) {
                counts[k] += 1;
                break;
            }
        }
    }
    counts.into_iter().map(|c| r(c, perms.len() as i64)).collect()
}

/// `Pr(T = X_{k:n})` by locating the system lifetime inside each sorted atom.
pub fn probability_signature_by_atoms(phi: &StructureFunction, d: &LifetimeDistribution<Rational>) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d.n()];
    for (x, p) in atoms_of(d) {
        let life = lifetime_by_paths(phi, &x);
        let k = x.iter().filter(|v| **v < life).count();
        out[k] += p;
    }
    out
}

pub fn mixture(coefficients: &[Rational], d: &LifetimeDistribution<Rational>, t: &Rational) -> Rational {
    coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| c.clone() * order_stat_oracle(d, i + 1, t))
        .sum()
}

/// Every monotone table on `n` variables by exhaustive filtering of all
/// `2^(2^n)` tables.
pub fn monotone_tables_by_filter(n: usize) -> Vec<Vec<bool>> {
    let width = 1usize << n;
    (0u64..1 << width)
        .map(|code| (0..width).map(|s| code >> s & 1 == 1).collect::<Vec<bool>>())
        .filter(|t| (0..width).all(|a| (0..width).all(|b| a & b != a || !t[a] || t[b])))
        .collect()
}

pub fn is_essential_table(t: &[bool], i: usize) -> bool {
    (0..t.len()).any(|s| t[s] != t[s ^ (1 << i)])
}

pub fn one() -> Rational {
    Rational::one()
}
