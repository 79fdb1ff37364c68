use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, RefNum, Signed};

/// An exact integral domain usable as the ring behind [`RationalMatrix`].
///
/// `BigInt` is the verified default. Fixed-width integers work for small
/// matrices but overflow once elimination minors outgrow the type.
///
/// [`RationalMatrix`]: super::RationalMatrix
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
    /// One fraction-free update step: `(pivot * x - a * y) / prev`, where the
    /// division is known to be exact.
    fn bareiss_step(pivot: &Self, x: &Self, a: &Self, y: &Self, prev: &Self) -> Self;

    /// `pivot * x / prev`, exact.
    fn bareiss_scale(pivot: &Self, x: &Self, prev: &Self) -> Self;
}

impl<T> Scalar for T
where
    T: Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static,
    for<'a> &'a T: RefNum<T>,
{
    #[inline]
    fn bareiss_step(pivot: &T, x: &T, a: &T, y: &T, prev: &T) -> T {
        let num = match (x.is_zero(), a.is_zero() || y.is_zero()) {
            (true, true) => return T::zero(),
            (true, false) => -(a * y),
            (false, true) => pivot * x,
            (false, false) => pivot * x - a * y,
        };
        exact_div(num, prev)
    }

    #[inline]
    fn bareiss_scale(pivot: &T, x: &T, prev: &T) -> T {
        if x.is_zero() {
            return T::zero();
        }
        exact_div(pivot * x, prev)
    }
}

#[inline]
fn exact_div<T: Integer + Clone>(num: T, den: &T) -> T
where
    for<'a> &'a T: RefNum<T>,
{
    if den.is_one() {
        return num;
    }
    debug_assert!(num.is_multiple_of(den), "inexact fraction-free division");
    &num / den
}
