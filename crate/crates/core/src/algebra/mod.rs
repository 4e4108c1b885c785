//! Exact integer, rational and bivariate polynomial arithmetic.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; the
//! combinatorial helpers and [`BiPoly`] live here.

mod bipoly;
mod tables;

pub use bipoly::{BiPoly, ParsePolyError, Term};
pub use tables::{BinomialTable, FactorialTable};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;

/// Binomial coefficient `C(n, k)` for `n >= 0`.
///
/// Returns zero when `k < 0` or `k > n`; identity sums index freely outside
/// the support and treat those terms as absent.
pub fn binomial(n: i64, k: i64) -> Result<BigInt, Error> {
    if n < 0 {
        return Err(Error::Domain(format!("binomial({n}, {k}) needs n >= 0")));
    }
    Ok(binomial_unchecked(n, k))
}

/// Binomial coefficient for callers that already know `n >= 0`.
pub(crate) fn binomial_unchecked(n: i64, k: i64) -> BigInt {
    debug_assert!(n >= 0);
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rising factorial `x (x+1) ... (x+k-1)`, with the empty product for `k = 0`.
pub fn rising_factorial(x: i64, k: u32) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * (x + i))
}

/// Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: i64) -> Result<BigInt, Error> {
    if n < 0 {
        return Err(Error::Domain(format!("catalan({n}) needs n >= 0")));
    }
    Ok(binomial_unchecked(2 * n, n) / (n + 1))
}

/// `base^exp` for a nonnegative exponent.
pub fn int_pow(base: i64, exp: i64) -> Result<BigInt, Error> {
    let exp = u32::try_from(exp)
        .map_err(|_| Error::Domain(format!("power {base}^{exp} needs a small nonnegative exponent")))?;
    Ok(num_traits::pow(BigInt::from(base), exp as usize))
}

/// Converts a rational that must be integral; fails loudly otherwise.
pub fn expect_integral(value: &Rational, context: &str) -> Result<BigInt, Error> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NotIntegral { context: context.to_string(), value: value.to_string() })
    }
}

pub(crate) fn rational(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `(-1)^e` for any integer `e`.
pub(crate) fn sign_power(e: i64) -> i64 {
    if e.is_even() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        let (m, j) = (1, 0);
        assert_eq!(binomial(2 * m + 2, m - j).unwrap(), BigInt::from(4));
        assert_eq!(binomial(5, 7).unwrap(), BigInt::zero());
        assert_eq!(binomial(5, -1).unwrap(), BigInt::zero());
        assert!(matches!(binomial(-1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn pascal_rule_up_to_100() {
        for n in 1..=100 {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(5, 0), BigInt::one());
        assert_eq!(rising_factorial(3, 3), BigInt::from(60));
        let n = 1;
        assert_eq!(rising_factorial(2 * n + 1, 3), BigInt::from(60));
        assert_eq!(rising_factorial(-2, 3), BigInt::zero());
    }

    #[test]
    fn catalan_matches_known_terms() {
        let known = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, c) in known.iter().enumerate() {
            assert_eq!(catalan(n as i64).unwrap(), BigInt::from(*c));
        }
    }

    #[test]
    fn non_integral_is_rejected() {
        let half = ratio(1, 2);
        assert!(expect_integral(&half, "half").is_err());
        assert_eq!(expect_integral(&ratio(6, 3), "two").unwrap(), BigInt::from(2));
    }

    proptest! {
        #[test]
        fn rational_times_reciprocal_is_one(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(a != 0 && b != 0);
            let q = ratio(a, b);
            prop_assert_eq!(q.clone() * ratio(b, a), Rational::one());
            prop_assert!(q.denom().is_positive());
        }
    }
}
