//! Numeric abstraction shared by every computation in the crate.
//!
//! All formulas only need field operations, comparisons and small integer
//! constants (binomial coefficients, counts), so the code is written against
//! [`Scalar`] and instantiated with [`crate::Rational`] for exact decisions.
//! Floating point instantiations exist for quick numerical evaluation; their
//! equality tests are exact on the float values, apart from the rounding
//! allowance in [`Scalar::approx_eq`].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Zero};

/// A field-like number type usable for probabilities, lifetimes and weights.
pub trait Scalar:
    Clone + Debug + PartialEq + PartialOrd + Num + FromPrimitive + Send + Sync + 'static
{
    /// Whether equality on this type is exact (rationals) or subject to rounding.
    const EXACT: bool;

    /// Converts a nonnegative integer count.
    fn from_count(count: u64) -> Self {
        Self::from_u64(count).expect("count representable in scalar type")
    }

    /// Equality used by every decision procedure. Exact types use `==`.
    fn approx_eq(&self, other: &Self) -> bool;

    /// Canonical text form. Rationals print as `a/b` with `b > 0` in lowest terms.
    fn to_text(&self) -> String;

    /// Parses `a/b`, an integer, or (for float types) a decimal literal.
    fn parse_text(text: &str) -> Option<Self>;
}

fn split_fraction(text: &str) -> (&str, Option<&str>) {
    match text.split_once('/') {
        Some((num, den)) => (num.trim(), Some(den.trim())),
        None => (text.trim(), None),
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn to_text(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_text(text: &str) -> Option<Self> {
        let (num, den) = split_fraction(text);
        let num: BigInt = num.parse().ok()?;
        let den: BigInt = match den {
            Some(d) => d.parse().ok()?,
            None => BigInt::from(1),
        };
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    }
}

macro_rules! impl_scalar_machine_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            const EXACT: bool = true;

            fn approx_eq(&self, other: &Self) -> bool {
                self == other
            }

            fn to_text(&self) -> String {
                format!("{}/{}", self.numer(), self.denom())
            }

            fn parse_text(text: &str) -> Option<Self> {
                let (num, den) = split_fraction(text);
                let num: $int = num.parse().ok()?;
                let den: $int = match den {
                    Some(d) => d.parse().ok()?,
                    None => 1,
                };
                if den == 0 {
                    return None;
                }
                Some(Ratio::new(num, den))
            }
        }
    };
}

impl_scalar_machine_ratio!(i64);
impl_scalar_machine_ratio!(i128);

macro_rules! impl_scalar_float {
    ($float:ty) => {
        impl Scalar for $float {
            const EXACT: bool = false;

            fn approx_eq(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= 16.0 * <$float>::EPSILON * scale
            }

            fn to_text(&self) -> String {
                format!("{}", self)
            }

            fn parse_text(text: &str) -> Option<Self> {
                let (num, den) = split_fraction(text);
                let num: $float = num.parse().ok()?;
                match den {
                    Some(d) => {
                        let den: $float = d.parse().ok()?;
                        (den != 0.0).then(|| num / den)
                    }
                    None => Some(num),
                }
            }
        }
    };
}

impl_scalar_float!(f32);
impl_scalar_float!(f64);

/// `C(n, k)` as a scalar; zero when `k > n`.
pub(crate) fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    T::from_count(num_integer::binomial(n as u64, k as u64))
}

/// Sum of a sequence of scalars.
pub(crate) fn sum<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc + v.clone())
}

pub(crate) fn is_negative<T: Scalar>(value: &T) -> bool {
    *value < T::zero()
}
