//! Exact scalars and univariate polynomials.
//!
//! Rationals are `num_rational::BigRational`, which already keeps the
//! canonical reduced form with a positive denominator. On top of that this
//! module adds Gaussian rationals, integer and rational polynomials, and
//! Sturm-sequence real root counting and isolation.

mod gaussian;
mod intpoly;
mod ratpoly;
mod sturm;

pub use gaussian::GaussianRational;
pub use intpoly::{poly_gcd, poly_reverse, IntPolynomial};
pub use ratpoly::RationalPolynomial;
pub use sturm::{isolate_real_roots, refine_root, sturm_count, SturmSequence};

pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
pub(crate) fn int_rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn rational_add_sub_cancels(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn rational_reciprocal(a in arb_rational()) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * a.recip()).is_one());
        }

        #[test]
        fn rational_is_canonical(n in -1000i64..1000, d in -1000i64..1000) {
            prop_assume!(d != 0);
            let q = rat(n, d);
            prop_assert!(q.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(q.numer(), q.denom()).is_one() || q.is_zero());
        }
    }
}
