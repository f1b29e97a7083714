//! Exact scalars and integer polynomials.
//!
//! Integers and rationals are arbitrary precision (`num-bigint` /
//! `num-rational`); rationals are always stored reduced with a positive
//! denominator.

mod poly;

pub use poly::{
    bareiss_determinant, discriminant, poly_gcd, resultant, square_free_decomposition,
    square_free_part, sturm_habicht_sequence, variations_at, IntPolynomial,
};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Number of sign changes in `vals` after deleting zero entries.
pub fn sign_variations<T: Signed>(vals: &[T]) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for v in vals {
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_rational_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() || hi.is_integer() {
        return fl + Rational::one();
    }
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    fl + simplest_positive(&hi_frac.recip(), &lo_frac.recip()).recip()
}

/// Least common multiple of the denominators of `vals` (1 when empty).
pub fn denominator_lcm<'a>(vals: impl IntoIterator<Item = &'a Rational>) -> Integer {
    vals.into_iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v.denom()))
}
