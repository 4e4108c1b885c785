//! The weight triangle `M_{n,k}(x, y)` and its integer specialisations.
//!
//! Two classical tables live here: the Shapiro Catalan triangle `B_{n,k}`
//! ([`shapiro_entry`]) and the table of weight polynomials
//! ([`WeightTriangle`]). Entry `(4, 2)` of the polynomial table is
//! `x^2 + 2xy + 3y^2 + 3`; it is sometimes quoted with `3y^3`, which neither
//! the recurrence nor exhaustive enumeration supports.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{binomial_unchecked, catalan, expect_integral, ratio, BiPoly, BigInt, Rational};
use crate::error::{Error, Result};

/// Lower-triangular array of weight polynomials, built by the last-step
/// recurrence:
///
/// ```text
/// M_{0,0} = 1
/// M_{n,0} = x M_{n-1,0} + M_{n-1,1}
/// M_{n,k} = M_{n-1,k-1} + y M_{n-1,k} + M_{n-1,k+1}      (k >= 1)
/// ```
#[derive(Clone, Debug)]
pub struct WeightTriangle {
    rows: Vec<Vec<BiPoly>>,
    zero: BiPoly,
}

impl WeightTriangle {
    pub fn build(n_max: usize) -> Self {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let mut rows: Vec<Vec<BiPoly>> = vec![vec![BiPoly::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k);
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut entry = BiPoly::zero();
                if k == 0 {
                    entry += &x * &prev[0];
                } else {
                    entry += &prev[k - 1];
                    if let Some(p) = at(k) {
                        entry += &y * p;
                    }
                }
                if let Some(p) = at(k + 1) {
                    entry += p;
                }
                row.push(entry);
            }
            rows.push(row);
        }
        WeightTriangle { rows, zero: BiPoly::zero() }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `M_{n,k}`, zero for `k < 0` or `k > n`. Panics if `n` exceeds the built
    /// size or is negative.
    pub fn entry(&self, n: i64, k: i64) -> &BiPoly {
        assert!(n >= 0 && n as usize <= self.n_max(), "row {n} not built (n_max = {})", self.n_max());
        if k < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }

    pub fn row(&self, n: usize) -> &[BiPoly] {
        &self.rows[n]
    }

    /// Every entry evaluated at an integer point.
    pub fn evaluate(&self, point: Point) -> IntTriangle {
        let (x0, y0) = (BigInt::from(point.x), BigInt::from(point.y));
        let rows = self.rows.iter().map(|r| r.iter().map(|p| p.eval(&x0, &y0)).collect()).collect();
        IntTriangle { rows, point: Some(point) }
    }

    /// Every entry under the formal substitution `x := xs, y := ys`.
    pub fn substitute(&self, xs: &BiPoly, ys: &BiPoly) -> WeightTriangle {
        let rows = self.rows.iter().map(|r| r.iter().map(|p| p.substitute(xs, ys)).collect()).collect();
        WeightTriangle { rows, zero: BiPoly::zero() }
    }

    /// The `(y, y)` specialisation, univariate in `y`.
    pub fn diagonal_weights(&self) -> WeightTriangle {
        let rows = self.rows.iter().map(|r| r.iter().map(BiPoly::x_as_y).collect()).collect();
        WeightTriangle { rows, zero: BiPoly::zero() }
    }
}

/// Integer triangle, usually a specialisation of [`WeightTriangle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntTriangle {
    rows: Vec<Vec<BigInt>>,
    point: Option<Point>,
}

impl IntTriangle {
    /// Runs the recurrence directly over the integers at `point`.
    pub fn by_recurrence(n_max: usize, point: Point) -> Self {
        let (x0, y0) = (BigInt::from(point.x), BigInt::from(point.y));
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let row = (0..=n)
                .map(|k| if k == 0 { &x0 * &prev[0] + at(1) } else { &prev[k - 1] + &y0 * at(k) + at(k + 1) })
                .collect();
            rows.push(row);
        }
        IntTriangle { rows, point: Some(point) }
    }

    /// Fills rows `0..=n_max` from an entry function.
    pub fn from_fn(n_max: usize, f: impl Fn(i64, i64) -> BigInt) -> Self {
        let rows = (0..=n_max as i64).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect();
        IntTriangle { rows, point: None }
    }

    pub fn point(&self) -> Option<Point> {
        self.point
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`, zero outside `0 <= k <= n`. Panics past `n_max`.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        assert!(n >= 0 && n as usize <= self.n_max(), "row {n} not built (n_max = {})", self.n_max());
        if k < 0 || k > n {
            return BigInt::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// An integer evaluation point `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl FromStr for Point {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("expected a point `x,y`, got {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(Point { x: a.trim().parse().map_err(|_| bad())?, y: b.trim().parse().map_err(|_| bad())? })
    }
}

/// Closed form of `M_{n,k}` at the four points where one is known:
///
/// ```text
/// (1,2): (2k+1)/(2n+1) C(2n+1, n-k)
/// (2,2): (2k+2)/(2n+2) C(2n+2, n-k)
/// (3,2): C(2n+1, n-k)
/// (0,0): (k+1)/(n+1) C(n+1, (n-k)/2)   when n-k is even, else 0
/// ```
///
/// Fractional forms are evaluated exactly and must come out integral.
pub fn closed_form(n: i64, k: i64, point: Point) -> Result<BigInt> {
    if k < 0 || k > n {
        return Err(Error::Domain(format!("closed form needs 0 <= k <= n, got n={n} k={k}")));
    }
    let value: Rational = match (point.x, point.y) {
        (1, 2) => ratio(2 * k + 1, 2 * n + 1) * Rational::from_integer(binomial_unchecked(2 * n + 1, n - k)),
        (2, 2) => ratio(2 * k + 2, 2 * n + 2) * Rational::from_integer(binomial_unchecked(2 * n + 2, n - k)),
        (3, 2) => Rational::from_integer(binomial_unchecked(2 * n + 1, n - k)),
        (0, 0) => {
            if (n - k) % 2 != 0 {
                Rational::zero()
            } else {
                ratio(k + 1, n + 1) * Rational::from_integer(binomial_unchecked(n + 1, (n - k) / 2))
            }
        }
        (x, y) => return Err(Error::UnsupportedSpecialization(x, y)),
    };
    expect_integral(&value, &format!("closed form at ({point}), n={n} k={k}"))
}

/// Shapiro's Catalan triangle `B_{n,k} = (k+1)/(n+1) C(2n+2, n-k)`.
pub fn shapiro_entry(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("Shapiro entry needs 0 <= k <= n, got n={n} k={k}")));
    }
    let v = ratio(k + 1, n + 1) * Rational::from_integer(binomial_unchecked(2 * n + 2, n - k));
    expect_integral(&v, "Shapiro entry")
}

/// Narayana number `N_{n,k} = C(n,k) C(n,k-1) / n`; zero outside `1 <= k <= n`.
pub fn narayana(n: i64, k: i64) -> BigInt {
    if n < 1 || k < 1 || k > n {
        return BigInt::zero();
    }
    binomial_unchecked(n, k) * binomial_unchecked(n, k - 1) / n
}

/// The column-0 sequences of the named specialisations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sequence {
    AeratedCatalan,
    Riordan,
    Fine,
    CentralBinomial,
    Motzkin,
    Catalan,
    CatalanShift,
    Gould,
}

impl Sequence {
    pub const ALL: [Sequence; 8] = [
        Sequence::AeratedCatalan,
        Sequence::Riordan,
        Sequence::Fine,
        Sequence::CentralBinomial,
        Sequence::Motzkin,
        Sequence::Catalan,
        Sequence::CatalanShift,
        Sequence::Gould,
    ];

    pub fn point(self) -> Point {
        match self {
            Sequence::AeratedCatalan => Point::new(0, 0),
            Sequence::Riordan => Point::new(0, 1),
            Sequence::Fine => Point::new(0, 2),
            Sequence::CentralBinomial => Point::new(1, 0),
            Sequence::Motzkin => Point::new(1, 1),
            Sequence::Catalan => Point::new(1, 2),
            Sequence::CatalanShift => Point::new(2, 2),
            Sequence::Gould => Point::new(3, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sequence::AeratedCatalan => "aerated_catalan",
            Sequence::Riordan => "riordan",
            Sequence::Fine => "fine",
            Sequence::CentralBinomial => "central_binomial",
            Sequence::Motzkin => "motzkin",
            Sequence::Catalan => "catalan",
            Sequence::CatalanShift => "catalan_shift",
            Sequence::Gould => "gould",
        }
    }

    /// OEIS number of the sequence.
    pub fn oeis(self) -> &'static str {
        match self {
            Sequence::AeratedCatalan => "A126120",
            Sequence::Riordan => "A005043",
            Sequence::Fine => "A000957",
            Sequence::CentralBinomial => "A001405",
            Sequence::Motzkin => "A001006",
            Sequence::Catalan => "A000108",
            Sequence::CatalanShift => "A000108",
            Sequence::Gould => "A001700",
        }
    }

    /// First `count` terms, read off column 0 of the weight triangle.
    pub fn terms(self, count: usize) -> Vec<BigInt> {
        if count == 0 {
            return Vec::new();
        }
        let tri = WeightTriangle::build(count - 1);
        let p = self.point();
        let (x0, y0) = (BigInt::from(p.x), BigInt::from(p.y));
        (0..count as i64).map(|n| tri.entry(n, 0).eval(&x0, &y0)).collect()
    }
}

impl FromStr for Sequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "sequence", name: s.to_string() })
    }
}

/// The `n`-th term of a named column-0 sequence. `catalan` is additionally
/// cross-checked against `C(2n, n)/(n+1)`.
pub fn sequence(name: &str, n: usize) -> Result<BigInt> {
    let seq: Sequence = name.parse()?;
    let value = seq.terms(n + 1).pop().expect("nonempty");
    if seq == Sequence::Catalan {
        let direct = catalan(n as i64)?;
        if direct != value {
            return Err(Error::Domain(format!("catalan({n}) mismatch: triangle {value}, formula {direct}")));
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::set_weight;

    fn poly(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn polynomial_table_rows() {
        let t = WeightTriangle::build(4);
        assert_eq!(t.row(2), &[poly("x^2 + 1"), poly("x + y"), BiPoly::one()]);
        assert_eq!(t.entry(3, 0), &poly("x^3 + 2*x + y"));
        assert_eq!(t.entry(3, 1), &poly("x^2 + x*y + y^2 + 2"));
        assert_eq!(t.entry(4, 0), &poly("x^4 + 3*x^2 + 2*x*y + y^2 + 2"));
        assert_eq!(t.entry(4, 1), &poly("x^3 + x^2*y + x*y^2 + 3*x + y^3 + 5*y"));
        assert_eq!(t.entry(4, 2), &poly("x^2 + 2*x*y + 3*y^2 + 3"));
        assert_ne!(t.entry(4, 2), &poly("x^2 + 2*x*y + 3*y^3 + 3"));
        assert_eq!(t.entry(4, 3), &poly("x + 3*y"));
        assert!(t.entry(2, 3).is_zero());
        assert!(t.entry(2, -1).is_zero());
    }

    #[test]
    fn diagonal_is_one() {
        let t = WeightTriangle::build(20);
        for n in 0..=20 {
            assert_eq!(t.entry(n, n), &BiPoly::one());
        }
    }

    #[test]
    fn recurrence_matches_enumeration() {
        let t = WeightTriangle::build(10);
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(t.entry(n, k), &set_weight(n as usize, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn odd_parity_vanishes_at_origin() {
        let t = WeightTriangle::build(16).evaluate(Point::new(0, 0));
        for n in 0..=16i64 {
            for k in 0..=n {
                if (n - k) % 2 == 1 {
                    assert!(t.get(n, k).is_zero());
                }
            }
        }
    }

    #[test]
    fn integer_recurrence_matches_evaluation() {
        let sym = WeightTriangle::build(14);
        for p in [Point::new(0, 0), Point::new(1, 2), Point::new(-3, 5), Point::new(7, -2)] {
            assert_eq!(sym.evaluate(p), IntTriangle::by_recurrence(14, p));
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(2, 0, Point::new(2, 2)).unwrap(), BigInt::from(5));
        assert_eq!(closed_form(5, 1, Point::new(2, 2)).unwrap(), BigInt::from(165));
        assert_eq!(closed_form(3, 1, Point::new(0, 0)).unwrap(), BigInt::from(2));
        assert_eq!(closed_form(3, 0, Point::new(0, 0)).unwrap(), BigInt::zero());
        assert!(matches!(closed_form(3, 1, Point::new(1, 1)), Err(Error::UnsupportedSpecialization(1, 1))));
        assert!(closed_form(3, 4, Point::new(1, 2)).is_err());
    }

    #[test]
    fn closed_forms_match_triangle() {
        let t = WeightTriangle::build(30);
        for p in [Point::new(1, 2), Point::new(2, 2), Point::new(3, 2), Point::new(0, 0)] {
            let ev = t.evaluate(p);
            for n in 0..=30 {
                for k in 0..=n {
                    assert_eq!(closed_form(n, k, p).unwrap(), ev.get(n, k), "({p}) n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn shapiro_examples() {
        assert_eq!(shapiro_entry(3, 0).unwrap(), BigInt::from(14));
        assert_eq!(shapiro_entry(4, 2).unwrap(), BigInt::from(27));
        for n in 0..=20 {
            assert_eq!(shapiro_entry(n, n).unwrap(), BigInt::one());
            for k in 0..=n {
                assert_eq!(shapiro_entry(n, k).unwrap(), closed_form(n, k, Point::new(2, 2)).unwrap());
            }
        }
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana(3, 2), BigInt::from(3));
        assert_eq!(narayana(4, 2), BigInt::from(6));
        assert_eq!((1..=5).map(|k| narayana(5, k)).sum::<BigInt>(), BigInt::from(42));
        assert!(narayana(4, 0).is_zero());
        assert!(narayana(4, 5).is_zero());
        for n in 1..=20 {
            let row: BigInt = (1..=n).map(|k| narayana(n, k)).sum();
            assert_eq!(row, catalan(n).unwrap());
        }
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(sequence("catalan", 4).unwrap(), BigInt::from(14));
        assert_eq!(sequence("riordan", 5).unwrap(), BigInt::from(6));
        assert_eq!(sequence("riordan", 6).unwrap(), BigInt::from(15));
        assert_eq!(sequence("fine", 4).unwrap(), BigInt::from(6));
        assert!(matches!(sequence("lucas", 3), Err(Error::Unknown { .. })));
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sequences_against_reference_terms() {
        // First ten terms from OEIS; Fine numbers are A000957 from offset 1.
        assert_eq!(Sequence::Riordan.terms(10), ints(&[1, 0, 1, 1, 3, 6, 15, 36, 91, 232]));
        assert_eq!(Sequence::Fine.terms(10), ints(&[1, 0, 1, 2, 6, 18, 57, 186, 622, 2120]));
        assert_eq!(Sequence::Motzkin.terms(10), ints(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835]));
    }

    #[test]
    fn sequences_against_closed_forms() {
        let count = 20;
        let b = |n: i64, k: i64| binomial_unchecked(n, k);
        let cat = |n: i64| catalan(n).unwrap();
        for (n, v) in Sequence::Catalan.terms(count).into_iter().enumerate() {
            assert_eq!(v, cat(n as i64));
        }
        for (n, v) in Sequence::CatalanShift.terms(count).into_iter().enumerate() {
            assert_eq!(v, cat(n as i64 + 1));
        }
        for (n, v) in Sequence::CentralBinomial.terms(count).into_iter().enumerate() {
            let n = n as i64;
            assert_eq!(v, b(n, n / 2));
        }
        for (n, v) in Sequence::Gould.terms(count).into_iter().enumerate() {
            let n = n as i64;
            assert_eq!(v, b(2 * n + 1, n));
        }
        for (n, v) in Sequence::AeratedCatalan.terms(count).into_iter().enumerate() {
            let expected = if n % 2 == 0 { cat(n as i64 / 2) } else { BigInt::zero() };
            assert_eq!(v, expected);
        }
        for (n, v) in Sequence::Motzkin.terms(count).into_iter().enumerate() {
            let n = n as i64;
            let expected: BigInt = (0..=n / 2).map(|k| b(n, 2 * k) * cat(k)).sum();
            assert_eq!(v, expected);
        }
    }

    #[test]
    fn point_parsing() {
        assert_eq!("2,2".parse::<Point>().unwrap(), Point::new(2, 2));
        assert_eq!(" -1 , 3".parse::<Point>().unwrap(), Point::new(-1, 3));
        assert!("2".parse::<Point>().is_err());
    }
}
