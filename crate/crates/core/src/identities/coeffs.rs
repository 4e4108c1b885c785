//! Coefficient polynomials of the specialised minor-sum identities.
//!
//! ```text
//! alpha = 6(m-n)(n+1)(m+1) + (l+1)(2k+l+2)(2n+1)(2n+2) - 2(m-n)k(k+1)(2n+2m+3)
//! beta  = 6(m-n)(n+1)(m+1) + (l+1)(2k+l+3)(2n+2)(2n+3) - 2(m-n)k(k+2)(2n+2m+5)
//! gamma = 2(m-n)(n+1)(m+1) + (l+1)(2k+l+2)(2n+2)(2n+3) - 2(m-n)k(k+1)(2n+2m+5)
//! lambda = 2(2n+1)(2k+l+2)(2(k+1)(k+l+1)-(m+1)) + 2(m-n)(k+l+1)(2k+1)(2k+3)
//! ```
//!
//! `gamma` is sometimes written with the single argument `m`; it depends on
//! `l` as well, and is treated as a function of `(m, l)` like the others.

use super::formula::{Env, Poly};
use crate::algebra::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffPoly {
    Alpha,
    Beta,
    Gamma,
    Lambda,
}

impl CoeffPoly {
    pub const ALL: [CoeffPoly; 4] = [CoeffPoly::Alpha, CoeffPoly::Beta, CoeffPoly::Gamma, CoeffPoly::Lambda];

    pub fn name(self) -> &'static str {
        match self {
            CoeffPoly::Alpha => "alpha",
            CoeffPoly::Beta => "beta",
            CoeffPoly::Gamma => "gamma",
            CoeffPoly::Lambda => "lambda",
        }
    }

    pub fn poly(self) -> Poly {
        match self {
            CoeffPoly::Alpha => Poly::from_factors(&[
                (6, &["m-n", "n+1", "m+1"]),
                (1, &["l+1", "2k+l+2", "2n+1", "2n+2"]),
                (-2, &["m-n", "k", "k+1", "2n+2m+3"]),
            ]),
            CoeffPoly::Beta => Poly::from_factors(&[
                (6, &["m-n", "n+1", "m+1"]),
                (1, &["l+1", "2k+l+3", "2n+2", "2n+3"]),
                (-2, &["m-n", "k", "k+2", "2n+2m+5"]),
            ]),
            CoeffPoly::Gamma => Poly::from_factors(&[
                (2, &["m-n", "n+1", "m+1"]),
                (1, &["l+1", "2k+l+2", "2n+2", "2n+3"]),
                (-2, &["m-n", "k", "k+1", "2n+2m+5"]),
            ]),
            // 2(k+1)(k+l+1) - (m+1) expanded: 2k^2 + 2kl + 4k + 2l + 2 - m - 1.
            CoeffPoly::Lambda => Poly::from_factors(&[
                (4, &["2n+1", "2k+l+2", "k+1", "k+l+1"]),
                (-2, &["2n+1", "2k+l+2", "m+1"]),
                (2, &["m-n", "k+l+1", "2k+1", "2k+3"]),
            ]),
        }
    }

    /// Value at `(n, k, m, l)`.
    pub fn eval(self, n: i64, k: i64, m: i64, l: i64) -> BigInt {
        self.poly().eval(&Env { n, m, l, k })
    }
}

/// The reductions at `l = 0` and `m = n - 1, n, n + 1`, as printed.
pub fn printed_specialization(c: CoeffPoly, shift: i64, n: i64, k: i64) -> Option<i64> {
    Some(match (c, shift) {
        (CoeffPoly::Alpha, -1) => (n + k + 3) * (8 * n * k + 2 * n + 2 * k + 2),
        (CoeffPoly::Alpha, 0) => (2 * k + 2) * (2 * n + 1) * (2 * n + 2),
        (CoeffPoly::Alpha, 1) => (n - k + 1) * (8 * n * k + 14 * n + 10 * k + 16),
        (CoeffPoly::Beta, -1) => (n + k + 3) * (8 * n * k + 6 * n + 6 * k + 6),
        (CoeffPoly::Beta, 0) => (2 * k + 3) * (2 * n + 2) * (2 * n + 3),
        (CoeffPoly::Beta, 1) => (n - k + 1) * (8 * n * k + 18 * n + 14 * k + 30),
        (CoeffPoly::Gamma, -1) => (n + k + 2) * (8 * n * k + 6 * n + 6 * k + 6),
        (CoeffPoly::Gamma, 0) => (2 * k + 2) * (2 * n + 2) * (2 * n + 3),
        (CoeffPoly::Gamma, 1) => (n - k + 1) * (8 * n * k + 10 * n + 14 * k + 6),
        (CoeffPoly::Lambda, 0) => (2 * n + 1) * (2 * k + 2) * ((2 * k + 1) * (2 * k + 3) - (2 * n + 1)),
        _ => return None,
    })
}

/// The same reductions, recomputed from the general polynomials. Two printed
/// forms differ from these: `alpha` at `m = n - 1` (first factor `n+k+2`,
/// not `n+k+3`) and `gamma` at `m = n + 1` (constant `16`, not `6`).
pub fn corrected_specialization(c: CoeffPoly, shift: i64, n: i64, k: i64) -> Option<i64> {
    match (c, shift) {
        (CoeffPoly::Alpha, -1) => Some((n + k + 2) * (8 * n * k + 2 * n + 2 * k + 2)),
        (CoeffPoly::Gamma, 1) => Some((n - k + 1) * (8 * n * k + 10 * n + 14 * k + 16)),
        _ => printed_specialization(c, shift, n, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_at_diagonal_example() {
        assert_eq!(CoeffPoly::Alpha.eval(1, 0, 1, 0), BigInt::from(2 * 3 * 4));
    }

    #[test]
    fn corrected_specializations_hold() {
        for c in CoeffPoly::ALL {
            for shift in [-1, 0, 1] {
                for n in 0..=50i64 {
                    for k in 0..=50i64 {
                        if let Some(v) = corrected_specialization(c, shift, n, k) {
                            assert_eq!(c.eval(n, k, n + shift, 0), BigInt::from(v), "{} shift {shift} n={n} k={k}", c.name());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn printed_specializations_agree_except_two() {
        let mut differing = Vec::new();
        for c in CoeffPoly::ALL {
            for shift in [-1, 0, 1] {
                let mut ok = true;
                let mut any = false;
                for n in 0..=50i64 {
                    for k in 0..=50i64 {
                        if let Some(v) = printed_specialization(c, shift, n, k) {
                            any = true;
                            ok &= c.eval(n, k, n + shift, 0) == BigInt::from(v);
                        }
                    }
                }
                if any && !ok {
                    differing.push((c, shift));
                }
            }
        }
        assert_eq!(differing, vec![(CoeffPoly::Alpha, -1), (CoeffPoly::Gamma, 1)]);
    }
}
