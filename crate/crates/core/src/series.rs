//! Truncated power series in `t` with [`BiPoly`] coefficients.
//!
//! The column generating functions `M_k(x, y; t)` satisfy
//!
//! ```text
//! M_0(x,y;t) = 1 + x t M_0(x,y;t) + t^2 M_0(y,y;t) M_0(x,y;t)
//! M_k(x,y;t) = M_0(x,y;t) (t M_0(y,y;t))^k
//! ```
//!
//! Closed forms involve a square root; only these polynomial relations are
//! checked here, coefficient by coefficient.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{binomial_unchecked, expect_integral, ratio, BiPoly, Rational};
use crate::error::{Error, Result};
use crate::triangle::WeightTriangle;

/// Series `sum_{n <= order} c_n t^n`. Values are exact through `order` and say
/// nothing beyond it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BiPoly>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms past `order`.
    pub fn new(order: usize, mut coeffs: Vec<BiPoly>) -> Self {
        coeffs.resize(order + 1, BiPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![BiPoly::one()])
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![BiPoly::zero(), BiPoly::one()])
    }

    /// A series with integer coefficients.
    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new(order, coeffs.iter().map(|&c| BiPoly::constant(c)).collect())
    }

    /// `M_k(x, y; t)` through `t^order`.
    pub fn from_column(k: usize, order: usize) -> Self {
        Self::from_triangle_column(&WeightTriangle::build(order), k, order)
    }

    /// Column `k` of an already built triangle. Panics if the triangle has
    /// fewer than `order + 1` rows.
    pub fn from_triangle_column(tri: &WeightTriangle, k: usize, order: usize) -> Self {
        let coeffs = (0..=order as i64).map(|n| tri.entry(n, k as i64).clone()).collect();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BiPoly {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, value: BiPoly) {
        self.coeffs[n] = value;
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self::new(self.order, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self::new(self.order, coeffs))
    }

    /// Cauchy product through the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut coeffs = vec![BiPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self::new(self.order, coeffs))
    }

    pub fn scale(&self, factor: &BiPoly) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BiPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.order, coeffs)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Replaces every `x` by `y` in each coefficient.
    pub fn substitute_y_for_x(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(BiPoly::x_as_y).collect())
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let unit = if *c0 == BiPoly::one() {
            BiPoly::one()
        } else if *c0 == BiPoly::constant(-1) {
            BiPoly::constant(-1)
        } else {
            return Err(Error::Domain(format!("series inverse needs constant term ±1, got {c0}")));
        };
        let mut inv = vec![unit.clone()];
        for n in 1..=self.order {
            let mut acc = BiPoly::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &inv[n - i];
            }
            inv.push(&(-acc) * &unit);
        }
        Ok(Self::new(self.order, inv))
    }

    /// Square root with constant term 1. Fails if some coefficient would need a
    /// non-integral halving.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != BiPoly::one() {
            return Err(Error::Domain("series square root needs constant term 1".into()));
        }
        let two = BigInt::from(2);
        let mut s = vec![BiPoly::one()];
        for n in 1..=self.order {
            let mut rest = self.coeffs[n].clone();
            for i in 1..n {
                rest -= &(&s[i] * &s[n - i]);
            }
            let half = rest
                .div_exact(&two)
                .ok_or_else(|| Error::Domain(format!("series square root not integral at t^{n}")))?;
            s.push(half);
        }
        Ok(Self::new(self.order, s))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

/// Outcome of a coefficientwise series check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub check: String,
    pub order: usize,
    pub comparisons: usize,
    pub first_failure: Option<usize>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn first_difference(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    a.coeffs.iter().zip(&b.coeffs).position(|(p, q)| p != q)
}

/// Lowest degree where `m0` violates `M_0 = 1 + x t M_0 + t^2 M_0(y,y) M_0`.
pub fn functional_equation_failure(m0: &TruncatedSeries) -> Option<usize> {
    let n = m0.order();
    let rhs = TruncatedSeries::one(n)
        .add(&m0.scale(&BiPoly::x()).shift(1))
        .and_then(|s| s.add(&m0.substitute_y_for_x().mul(m0)?.shift(2)))
        .expect("orders agree");
    first_difference(m0, &rhs)
}

pub fn verify_functional_equation(order: usize) -> SeriesReport {
    let m0 = TruncatedSeries::from_column(0, order);
    SeriesReport {
        check: "functional-equation".into(),
        order,
        comparisons: order + 1,
        first_failure: functional_equation_failure(&m0),
    }
}

/// Checks `M_k = M_0 (t M_0(y,y))^k` for `1 <= k <= k_max`. The reported
/// failure degree is the smallest over all `k`.
pub fn verify_riordan(order: usize, k_max: usize) -> SeriesReport {
    let tri = WeightTriangle::build(order);
    let m0 = TruncatedSeries::from_triangle_column(&tri, 0, order);
    let f = m0.substitute_y_for_x().shift(1);
    let mut power = m0.clone();
    let mut first_failure: Option<usize> = None;
    for k in 1..=k_max {
        power = power.mul(&f).expect("orders agree");
        let column = TruncatedSeries::from_triangle_column(&tri, k, order);
        if let Some(d) = first_difference(&column, &power) {
            first_failure = Some(first_failure.map_or(d, |e| e.min(d)));
        }
    }
    SeriesReport { check: "riordan".into(), order, comparisons: k_max * (order + 1), first_failure }
}

/// `G = M_0(y, y; t)` built from its own quadratic `G = 1 + y t G + t^2 G^2`,
/// with no reference to the triangle.
pub fn diagonal_quadratic_solution(order: usize) -> TruncatedSeries {
    let y = BiPoly::y();
    let mut g: Vec<BiPoly> = vec![BiPoly::one()];
    for n in 1..=order {
        let mut c = &y * &g[n - 1];
        if n >= 2 {
            for i in 0..=n - 2 {
                c += &(&g[i] * &g[n - 2 - i]);
            }
        }
        g.push(c);
    }
    TruncatedSeries::new(order, g)
}

pub fn verify_quadratic_solution(order: usize) -> SeriesReport {
    let from_triangle = TruncatedSeries::from_column(0, order).substitute_y_for_x();
    SeriesReport {
        check: "diagonal-quadratic".into(),
        order,
        comparisons: order + 1,
        first_failure: first_difference(&from_triangle, &diagonal_quadratic_solution(order)),
    }
}

/// Which Catalan power series a coefficient is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalanVariant {
    /// `C(t)^alpha`
    Plain,
    /// `C(t)^alpha / sqrt(1 - 4t)`
    OverSqrt,
}

/// `[t^n] C(t)^alpha` is `alpha/(2n+alpha) C(2n+alpha, n)`, and
/// `[t^n] C(t)^alpha / sqrt(1-4t)` is `C(2n+alpha, n)`.
pub fn catalan_power_coeff(alpha: i64, n: i64, variant: CatalanVariant) -> Result<BigInt> {
    if alpha < 1 || n < 0 {
        return Err(Error::Domain(format!("Catalan power needs alpha >= 1 and n >= 0, got alpha={alpha} n={n}")));
    }
    let b = binomial_unchecked(2 * n + alpha, n);
    match variant {
        CatalanVariant::OverSqrt => Ok(b),
        CatalanVariant::Plain => {
            let v: Rational = ratio(alpha, 2 * n + alpha) * Rational::from_integer(b);
            expect_integral(&v, "Catalan power coefficient")
        }
    }
}

/// `C(t)` from `C = 1 + t C^2`, by fixed-point iteration.
pub fn catalan_series(order: usize) -> TruncatedSeries {
    let mut c = TruncatedSeries::one(order);
    for _ in 0..=order {
        c = TruncatedSeries::one(order).add(&c.mul(&c).expect("same order").shift(1)).expect("same order");
    }
    c
}

/// Compares [`catalan_power_coeff`] with powers of [`catalan_series`], divided
/// by `sqrt(1-4t)` for the second variant, for `1 <= alpha <= alpha_max` and
/// `n <= order`.
pub fn verify_catalan_powers(alpha_max: u32, order: usize) -> SeriesReport {
    let c = catalan_series(order);
    let inv_root = TruncatedSeries::from_ints(order, &[1, -4])
        .sqrt()
        .and_then(|s| s.inverse())
        .expect("1 - 4t has an integral square root");
    let mut first_failure: Option<usize> = None;
    let mut comparisons = 0;
    let mut power = TruncatedSeries::one(order);
    for alpha in 1..=alpha_max {
        power = power.mul(&c).expect("same order");
        let over = power.mul(&inv_root).expect("same order");
        for n in 0..=order {
            for (series, variant) in [(&power, CatalanVariant::Plain), (&over, CatalanVariant::OverSqrt)] {
                comparisons += 1;
                let expected = catalan_power_coeff(alpha as i64, n as i64, variant).ok();
                if expected.map(BiPoly::from).as_ref() != Some(series.coeff(n)) {
                    first_failure = Some(first_failure.map_or(n, |e| e.min(n)));
                }
            }
        }
    }
    SeriesReport { check: "catalan-powers".into(), order, comparisons, first_failure }
}

/// Convenience: `[t^n]` of a series with integer coefficients.
pub fn integer_coeff(s: &TruncatedSeries, n: usize) -> Option<BigInt> {
    let c = s.coeff(n);
    if c.is_zero() {
        return Some(BigInt::zero());
    }
    (c.degree() == Some(0)).then(|| c.coeff(0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalan;
    use proptest::prelude::*;

    fn poly(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn column_examples() {
        let s = TruncatedSeries::from_column(0, 2);
        assert_eq!(s.coeffs(), &[BiPoly::one(), poly("x"), poly("x^2 + 1")]);
        let s = TruncatedSeries::from_column(1, 2);
        assert_eq!(s.coeffs(), &[BiPoly::zero(), BiPoly::one(), poly("x + y")]);
        assert!(TruncatedSeries::from_column(3, 2).coeffs().iter().all(BiPoly::is_zero));
    }

    #[test]
    fn product_and_substitution() {
        let a = TruncatedSeries::from_ints(4, &[1, 1]);
        let b = TruncatedSeries::from_ints(4, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::from_ints(4, &[1, 0, -1]));
        let s = TruncatedSeries::new(3, vec![BiPoly::one(), BiPoly::x()]);
        assert_eq!(s.substitute_y_for_x(), TruncatedSeries::new(3, vec![BiPoly::one(), BiPoly::y()]));
        assert!(matches!(a.mul(&TruncatedSeries::one(3)), Err(Error::OrderMismatch(4, 3))));
    }

    #[test]
    fn first_column_shift_relation() {
        let n = 10;
        let m0 = TruncatedSeries::from_column(0, n);
        let rhs = m0.mul(&m0.substitute_y_for_x().shift(1)).unwrap();
        assert_eq!(rhs, TruncatedSeries::from_column(1, n));
    }

    #[test]
    fn functional_equation() {
        assert!(verify_functional_equation(10).passed());
        assert!(verify_functional_equation(1).passed());
        let mut m0 = TruncatedSeries::from_column(0, 10);
        let bumped = m0.coeff(6) + &BiPoly::one();
        m0.set_coeff(6, bumped);
        assert_eq!(functional_equation_failure(&m0), Some(6));
    }

    #[test]
    fn riordan_relation() {
        assert!(verify_riordan(10, 5).passed());
        assert!(verify_riordan(2, 0).passed());
        let tri = WeightTriangle::build(2);
        let m0 = TruncatedSeries::from_triangle_column(&tri, 0, 2);
        let m1 = m0.mul(&m0.substitute_y_for_x().shift(1)).unwrap();
        assert_eq!(m1.coeff(2), &poly("x + y"));
    }

    #[test]
    fn catalan_numbers_at_one_two() {
        let m0 = TruncatedSeries::from_column(0, 20);
        for n in 0..=20 {
            assert_eq!(m0.coeff(n).eval_i64(1, 2), catalan(n as i64).unwrap());
        }
    }

    #[test]
    fn quadratic_solution() {
        assert!(verify_quadratic_solution(15).passed());
    }

    #[test]
    fn catalan_power_examples() {
        assert_eq!(catalan_power_coeff(1, 3, CatalanVariant::Plain).unwrap(), BigInt::from(5));
        assert_eq!(catalan_power_coeff(3, 2, CatalanVariant::Plain).unwrap(), BigInt::from(9));
        assert_eq!(catalan_power_coeff(1, 2, CatalanVariant::OverSqrt).unwrap(), BigInt::from(10));
        assert_eq!(BigInt::from(10), poly("x^2 + 1").eval_i64(3, 2));
        assert!(catalan_power_coeff(0, 2, CatalanVariant::Plain).is_err());
    }

    #[test]
    fn catalan_powers_match_series() {
        assert!(verify_catalan_powers(12, 12).passed());
        let c = catalan_series(10);
        for n in 0..=10 {
            assert_eq!(integer_coeff(&c, n).unwrap(), catalan(n as i64).unwrap());
        }
    }

    #[test]
    fn sqrt_and_inverse() {
        let s = TruncatedSeries::from_ints(8, &[1, -4]).sqrt().unwrap();
        assert_eq!(s.mul(&s).unwrap(), TruncatedSeries::from_ints(8, &[1, -4]));
        let inv = s.inverse().unwrap();
        assert_eq!(inv.mul(&s).unwrap(), TruncatedSeries::one(8));
        assert!(TruncatedSeries::from_ints(3, &[1, 1]).sqrt().is_err());
        assert!(TruncatedSeries::from_ints(3, &[2, 1]).inverse().is_err());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(proptest::collection::vec((0u32..3, 0u32..3, -5i64..5), 0..4), order + 1).prop_map(
            move |cs| {
                let coeffs = cs
                    .into_iter()
                    .map(|ts| ts.into_iter().fold(BiPoly::zero(), |acc, (i, j, c)| acc + BiPoly::monomial(i, j, c)))
                    .collect();
                TruncatedSeries::new(order, coeffs)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn mul_is_commutative_and_associative(a in arb_series(5), b in arb_series(5), c in arb_series(5)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }
    }
}
