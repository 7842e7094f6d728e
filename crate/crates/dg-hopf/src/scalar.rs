//! Ground-field scalars.
//!
//! Everything in this crate is linear algebra over a field of characteristic
//! zero with *exact* arithmetic — identities are checked with zero tolerance,
//! so floating point is ruled out. The [`Scalar`] trait collects the bounds
//! the algorithms need (field operations, negation, conversion from small
//! integers, printing for witnesses). The crate root exports the concrete
//! instantiation [`crate::Rat`] = arbitrary-precision rationals, which is what
//! the test corpus, the CLI, and the acceptance suite use.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// An exact field of characteristic zero.
///
/// `Num` supplies `0`, `1`, and the ring operations including division, which
/// the implementations use as exact field division (every nonzero element must
/// be invertible). `FromPrimitive` supplies the integer constants needed for
/// series coefficients such as `1/n!`.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + 'static
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Neg<Output = T> + FromPrimitive + 'static
{
}

/// The integer `n` as a scalar.
pub fn int<K: Scalar>(n: i64) -> K {
    K::from_i64(n).expect("characteristic-zero field embeds the integers")
}

/// The exact fraction `p/q` as a scalar. Panics if `q = 0`.
pub fn frac<K: Scalar>(p: i64, q: i64) -> K {
    assert!(q != 0, "zero denominator");
    int::<K>(p) / int::<K>(q)
}

/// `(-1)^n` for a degree or a product of degrees.
pub fn sign<K: Scalar>(n: i64) -> K {
    if n.rem_euclid(2) == 0 { K::one() } else { -K::one() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn small_constants() {
        assert_eq!(int::<Rat>(-3) + int::<Rat>(3), Rat::from_i64(0).unwrap());
        assert_eq!(frac::<Rat>(1, 2) + frac::<Rat>(1, 3), frac::<Rat>(5, 6));
        assert_eq!(sign::<Rat>(3) * sign::<Rat>(5), int::<Rat>(1));
        assert_eq!(sign::<Rat>(-1), int::<Rat>(-1));
    }
}
