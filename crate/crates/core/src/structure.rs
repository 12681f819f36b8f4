//! Monotone Boolean structure functions stored as truth tables.
//!
//! State vectors are encoded as bitmasks: component `i` (1-based) occupies bit
//! `i - 1`, so index 0 is the all-failed state and index `2^n - 1` the
//! all-working state. The same encoding identifies a state vector with the
//! subset of working components.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest component count accepted for a truth table.
pub const MAX_COMPONENTS: usize = 16;

/// Largest component count for exhaustive enumeration of a system class.
pub const MAX_ENUMERATION: usize = 5;

/// Largest component count for the linearly independent basis construction.
pub const MAX_BASIS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemClass {
    /// Monotone, every variable essential, `n >= 3`.
    Coherent,
    /// Monotone with `phi(0) = 0` and `phi(1) = 1`, `n >= 2`.
    Semicoherent,
}

impl SystemClass {
    pub fn min_components(self) -> usize {
        match self {
            SystemClass::Coherent => 3,
            SystemClass::Semicoherent => 2,
        }
    }

    pub fn check_arity(self, n: usize) -> Result<()> {
        let min = self.min_components();
        if n < min {
            return Err(Error::ClassArity { class: self, n, min });
        }
        Ok(())
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SystemClass::Coherent => "coherent",
            SystemClass::Semicoherent => "semicoherent",
        }
    }
}

impl FromStr for SystemClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coherent" => Ok(SystemClass::Coherent),
            "semicoherent" => Ok(SystemClass::Semicoherent),
            other => Err(Error::Parse(format!("unknown system class `{other}`"))),
        }
    }
}

impl fmt::Display for SystemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Number of working components in a state mask.
#[inline]
pub fn level(state: usize) -> usize {
    state.count_ones() as usize
}

/// All states of `n` components with exactly `k` working, ascending.
pub fn level_states(n: usize, k: usize) -> impl Iterator<Item = usize> {
    (0..1usize << n).filter(move |&s| level(s) == k)
}

/// Mask of the 1-based component set `[n]`.
#[inline]
pub fn full_mask(n: usize) -> usize {
    (1usize << n) - 1
}

/// A monotone Boolean function on `n` components.
///
/// Classification flags are computed on construction; instances are
/// immutable afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureFunction {
    n: usize,
    table: Vec<bool>,
    essential: Vec<bool>,
}

impl StructureFunction {
    /// Builds a structure function from its full truth table.
    pub fn from_truth_table(n: usize, bits: Vec<bool>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewComponents { n, min: 2 });
        }
        if n > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                n,
                max: MAX_COMPONENTS,
            });
        }
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::TableLength {
                n,
                expected,
                actual: bits.len(),
            });
        }
        if let Some((lower, upper)) = monotonicity_witness(n, &bits) {
            return Err(Error::NotMonotone { lower, upper });
        }
        let essential = (0..n)
            .map(|i| {
                let bit = 1usize << i;
                (0..expected).any(|s| s & bit == 0 && bits[s] != bits[s | bit])
            })
            .collect();
        Ok(StructureFunction {
            n,
            table: bits,
            essential,
        })
    }

    /// Parses a `0`/`1` string with index 0 first.
    pub fn from_bit_string(n: usize, bits: &str) -> Result<Self> {
        let table = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("invalid truth-table character `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_truth_table(n, table)
    }

    /// `phi(x) = 1` iff every component of some path works. Components are 1-based.
    pub fn from_path_sets(n: usize, paths: &[Vec<usize>]) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::NoPaths);
        }
        if n > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                n,
                max: MAX_COMPONENTS,
            });
        }
        let mut masks = Vec::with_capacity(paths.len());
        for (index, path) in paths.iter().enumerate() {
            if path.is_empty() {
                return Err(Error::EmptyPath { index });
            }
            let mut mask = 0usize;
            for &component in path {
                if component == 0 || component > n {
                    return Err(Error::ComponentOutOfRange { component, n });
                }
                mask |= 1 << (component - 1);
            }
            masks.push(mask);
        }
        let table = (0..1usize << n)
            .map(|s| masks.iter().any(|&m| m & !s == 0))
            .collect();
        Self::from_truth_table(n, table)
    }

    /// The order-statistic function `x_{k:n}`: 1 iff at least `n - k + 1` components work.
    ///
    /// `k = 1` is the series system, `k = n` the parallel system.
    pub fn k_out_of_n(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::OrderOutOfRange { k, n });
        }
        let threshold = n - k + 1;
        let table = (0..1usize << n).map(|s| level(s) >= threshold).collect();
        Self::from_truth_table(n, table)
    }

    pub fn series(n: usize) -> Result<Self> {
        Self::k_out_of_n(n, 1)
    }

    pub fn parallel(n: usize) -> Result<Self> {
        Self::k_out_of_n(n, n)
    }

    /// `prod_{i in subset} x_i`, with `subset` a nonempty component mask.
    pub(crate) fn product(n: usize, subset: usize) -> Self {
        debug_assert!(subset != 0);
        let table = (0..1usize << n).map(|s| s & subset == subset).collect();
        Self::from_truth_table(n, table).expect("products are monotone")
    }

    /// Pointwise OR, i.e. the coproduct `x + y - xy` on 0/1 values.
    pub fn coproduct(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MixedArity {
                first: self.n,
                other: other.n,
            });
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| *a || *b)
            .collect();
        Self::from_truth_table(self.n, table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// Value at an encoded state index.
    #[inline]
    pub fn value(&self, state: usize) -> bool {
        self.table[state]
    }

    /// Evaluates the function on a state vector `(x_1, ..., x_n)`.
    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::StateLength {
                expected: self.n,
                actual: x.len(),
            });
        }
        Ok(self.table[encode_state(x)])
    }

    /// Truth table as a `0`/`1` string, index 0 first.
    pub fn bit_string(&self) -> String {
        self.table.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Truth table read as an unsigned integer (bit `j` = entry `j`), for `n <= 6`.
    pub fn table_key(&self) -> Option<u64> {
        (self.n <= 6).then(|| {
            self.table
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .fold(0u64, |acc, (j, _)| acc | (1 << j))
        })
    }

    /// Whether component `k` (1-based) is essential.
    pub fn is_essential(&self, k: usize) -> bool {
        k >= 1 && k <= self.n && self.essential[k - 1]
    }

    pub fn all_essential(&self) -> bool {
        self.essential.iter().all(|&e| e)
    }

    /// Always true for a constructed function; construction rejects anything else.
    pub fn is_monotone(&self) -> bool {
        true
    }

    pub fn is_semicoherent(&self) -> bool {
        !self.table[0] && self.table[full_mask(self.n)]
    }

    pub fn is_coherent(&self) -> bool {
        self.n >= 3 && self.all_essential()
    }

    pub fn belongs_to(&self, class: SystemClass) -> bool {
        match class {
            SystemClass::Coherent => self.is_coherent(),
            SystemClass::Semicoherent => self.is_semicoherent(),
        }
    }

    /// Number of working states at level `k` on which the function is 1.
    pub fn level_count(&self, k: usize) -> usize {
        level_states(self.n, k).filter(|&s| self.table[s]).count()
    }

    /// `phi` as a 0/1 scalar at a state index.
    pub(crate) fn indicator<T: Scalar>(&self, state: usize) -> T {
        if self.table[state] {
            T::one()
        } else {
            T::zero()
        }
    }
}

impl fmt::Debug for StructureFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureFunction(n={}, {})", self.n, self.bit_string())
    }
}

impl PartialOrd for StructureFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by component count, then by truth table read as an integer.
impl Ord for StructureFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.table.iter().rev().cmp(other.table.iter().rev()))
    }
}

/// Encodes `(x_1, ..., x_n)` as a state index.
pub fn encode_state(x: &[bool]) -> usize {
    x.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

/// Decodes a state index into `(x_1, ..., x_n)`.
pub fn decode_state(n: usize, state: usize) -> Vec<bool> {
    (0..n).map(|i| state >> i & 1 == 1).collect()
}

fn monotonicity_witness(n: usize, bits: &[bool]) -> Option<(usize, usize)> {
    for s in 0..bits.len() {
        if !bits[s] {
            continue;
        }
        for i in 0..n {
            let up = s | (1 << i);
            if up != s && !bits[up] {
                return Some((s, up));
            }
        }
    }
    None
}

/// All monotone tables on `m` variables as integers (bit `j` = entry `j`).
fn monotone_tables(m: usize) -> Vec<u64> {
    if m == 0 {
        return vec![0, 1];
    }
    let lower = monotone_tables(m - 1);
    let shift = 1u32 << (m - 1);
    let mut out = Vec::new();
    // f = f0 on states without component m, f1 on states with it; monotone iff f0 <= f1.
    for &f0 in &lower {
        for &f1 in &lower {
            if f0 & !f1 == 0 {
                out.push(f0 | (f1 << shift));
            }
        }
    }
    out
}

/// Every structure function of the given class on `n` components,
/// ascending by truth table read as an integer.
pub fn enumerate_systems(n: usize, class: SystemClass) -> Result<Vec<StructureFunction>> {
    if n > MAX_ENUMERATION {
        return Err(Error::EnumerationBound {
            n,
            max: MAX_ENUMERATION,
        });
    }
    class.check_arity(n)?;
    let mut tables = monotone_tables(n);
    tables.sort_unstable();
    Ok(tables
        .into_iter()
        .map(|key| {
            let table = (0..1usize << n).map(|j| key >> j & 1 == 1).collect();
            StructureFunction::from_truth_table(n, table).expect("enumerated tables are monotone")
        })
        .filter(|f| f.belongs_to(class))
        .collect())
}

/// Successor map used to pair each `(n-1)`-subset `[n] \ {k}` with
/// `[n] \ {succ(k)}` in the coherent basis. Components are 1-based.
pub fn appendix_successor(n: usize, k: usize) -> usize {
    debug_assert!(n >= 3 && (1..=n).contains(&k));
    if n == 4 {
        return [0, 2, 3, 4, 2][k];
    }
    if n % 2 == 1 {
        return k % n + 1;
    }
    // (1,2,3) composed with (4,5,...,n)
    if k <= 3 {
        k % 3 + 1
    } else if k == n {
        4
    } else {
        k + 1
    }
}

/// The partner set `A*` of a proper nonempty subset `A` in the coherent basis.
///
/// For `|A| <= n - 2` the choice is `[n] \ {max(A)}`; for `A = [n] \ {k}` it is
/// `[n] \ {succ(k)}`. Returns `None` for `A = [n]` or `A` empty.
pub fn appendix_partner(n: usize, subset: usize) -> Option<usize> {
    let full = full_mask(n);
    if subset == 0 || subset == full {
        return None;
    }
    let size = level(subset);
    if size == n - 1 {
        let missing = (full & !subset).trailing_zeros() as usize + 1;
        let succ = appendix_successor(n, missing);
        Some(full & !(1 << (succ - 1)))
    } else {
        let max = usize::BITS - 1 - subset.leading_zeros();
        Some(full & !(1 << max))
    }
}

/// `2^n - 1` structure functions of the class whose truth tables are
/// linearly independent over the rationals, indexed by nonempty `A`
/// ascending as masks.
///
/// Semicoherent: the products `prod_{i in A} x_i`. Coherent: the
/// coproduct of the products over `A` and its partner `A*` for `A != [n]`,
/// and the full product for `A = [n]`.
pub fn appendix_basis(n: usize, class: SystemClass) -> Result<Vec<StructureFunction>> {
    class.check_arity(n)?;
    if n > MAX_BASIS {
        return Err(Error::TooManyComponents { n, max: MAX_BASIS });
    }
    let full = full_mask(n);
    (1..=full)
        .map(|subset| {
            let product = StructureFunction::product(n, subset);
            let partner = match class {
                SystemClass::Coherent => appendix_partner(n, subset),
                SystemClass::Semicoherent => None,
            };
            match partner {
                Some(partner) => product.coproduct(&StructureFunction::product(n, partner)),
                None => Ok(product),
            }
        })
        .collect()
}

/// Rank of the 0/1 value matrix (one row per function) over the scalar field.
pub fn rank_over<T: Scalar>(fs: &[StructureFunction]) -> Result<usize> {
    let Some(first) = fs.first() else {
        return Ok(0);
    };
    if let Some(other) = fs.iter().find(|f| f.n != first.n) {
        return Err(Error::MixedArity {
            first: first.n,
            other: other.n,
        });
    }
    let width = 1usize << first.n;
    let zero = T::zero();
    let mut rows: Vec<Vec<T>> = fs.iter().map(|f| (0..width).map(|j| f.indicator(j)).collect()).collect();
    let mut rank = 0;
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].approx_eq(&zero)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &done[rank];
        let support: Vec<usize> = (col + 1..width)
            .filter(|&j| !pivot_row[j].approx_eq(&zero))
            .collect();
        for row in rest.iter_mut() {
            if row[col].approx_eq(&zero) {
                continue;
            }
            let factor = row[col].clone() / pivot_row[col].clone();
            row[col] = T::zero();
            for &j in &support {
                let delta = factor.clone() * pivot_row[j].clone();
                row[j] = row[j].clone() - delta;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Exact rank over the rationals.
pub fn rank_over_rationals(fs: &[StructureFunction]) -> Result<usize> {
    rank_over::<crate::Rational>(fs)
}
