//! The minor-sum transform of a lower-triangular array:
//!
//! ```text
//! A^(p)_{n,k}(m, r, l) = det( A_{n + i m + j r, k + j l} )_{0 <= i, j <= p}
//! S^(p)_{n}            = sum_{k=0}^{n} A^(p)_{n,k}
//! ```
//!
//! Entries outside `0 <= k <= n` are zero.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{binomial_unchecked, BigInt};
use crate::error::{Error, Result};
use crate::triangle::{shapiro_entry, IntTriangle, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleSource {
    Pascal,
    Shapiro,
    /// The weight triangle at an integer point.
    Motzkin(Point),
}

impl TriangleSource {
    pub fn entry_fn(self, n_max: usize) -> Box<dyn Fn(i64, i64) -> BigInt + Sync> {
        match self {
            TriangleSource::Pascal => Box::new(|n, k| if n < 0 { BigInt::zero() } else { binomial_unchecked(n, k) }),
            TriangleSource::Shapiro => Box::new(|n, k| shapiro_entry(n, k).unwrap_or_default()),
            TriangleSource::Motzkin(p) => {
                let t = IntTriangle::by_recurrence(n_max, p);
                Box::new(move |n, k| if n < 0 || n as usize > t.n_max() { BigInt::zero() } else { t.get(n, k) })
            }
        }
    }
}

impl fmt::Display for TriangleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleSource::Pascal => f.write_str("pascal"),
            TriangleSource::Shapiro => f.write_str("shapiro"),
            TriangleSource::Motzkin(p) => write!(f, "motzkin@{p}"),
        }
    }
}

/// `pascal`, `shapiro`, or `motzkin@x,y`.
impl FromStr for TriangleSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pascal" => Ok(TriangleSource::Pascal),
            "shapiro" => Ok(TriangleSource::Shapiro),
            _ => match s.strip_prefix("motzkin@") {
                Some(p) => Ok(TriangleSource::Motzkin(p.parse()?)),
                None => Err(Error::Unknown { kind: "triangle source", name: s.to_string() }),
            },
        }
    }
}

/// Shape of the transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TransformParams {
    pub m: i64,
    pub r: i64,
    pub l: i64,
    pub p: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformRow {
    pub n: i64,
    #[serde(serialize_with = "ser_ints")]
    pub entries: Vec<BigInt>,
    #[serde(serialize_with = "ser_int")]
    pub sum: BigInt,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Fraction-free Gaussian elimination. Every division is exact.
pub fn det_bareiss(matrix: &[Vec<BigInt>]) -> BigInt {
    let size = matrix.len();
    if size == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for c in 0..size - 1 {
        if a[c][c].is_zero() {
            match (c + 1..size).find(|&r| !a[r][c].is_zero()) {
                Some(r) => {
                    a.swap(c, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in c + 1..size {
            for j in c + 1..size {
                let v = (&a[i][j] * &a[c][c] - &a[i][c] * &a[c][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[c][c].clone();
    }
    let d = a[size - 1][size - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row. Exponential; used as an oracle.
pub fn det_cofactor(matrix: &[Vec<BigInt>]) -> BigInt {
    let size = matrix.len();
    if size == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for col in 0..size {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = matrix[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &matrix[0][col] * det_cofactor(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn transform_matrix(a: &dyn Fn(i64, i64) -> BigInt, n: i64, k: i64, tp: TransformParams) -> Vec<Vec<BigInt>> {
    let entry = |row: i64, col: i64| if row < 0 || col < 0 || col > row { BigInt::zero() } else { a(row, col) };
    (0..=tp.p as i64)
        .map(|i| (0..=tp.p as i64).map(|j| entry(n + i * tp.m + j * tp.r, k + j * tp.l)).collect())
        .collect()
}

fn rows_needed(n_max: i64, tp: TransformParams) -> usize {
    let p = tp.p as i64;
    (n_max + p * tp.m.max(0) + p * tp.r.max(0)).max(0) as usize
}

/// Transformed rows `0..=n_max` with their sums.
pub fn minor_sum_transform(source: TriangleSource, tp: TransformParams, n_max: i64) -> Result<Vec<TransformRow>> {
    if tp.p < 1 {
        return Err(Error::Domain("the transform needs p >= 1".into()));
    }
    let a = source.entry_fn(rows_needed(n_max, tp));
    Ok((0..=n_max)
        .map(|n| {
            let entries: Vec<BigInt> = (0..=n).map(|k| det_bareiss(&transform_matrix(&*a, n, k, tp))).collect();
            let sum = entries.iter().sum();
            TransformRow { n, entries, sum }
        })
        .collect())
}

/// Same transform with cofactor-expansion determinants.
pub fn minor_sum_transform_cofactor(source: TriangleSource, tp: TransformParams, n_max: i64) -> Vec<TransformRow> {
    let a = source.entry_fn(rows_needed(n_max, tp));
    (0..=n_max)
        .map(|n| {
            let entries: Vec<BigInt> = (0..=n).map(|k| det_cofactor(&transform_matrix(&*a, n, k, tp))).collect();
            let sum = entries.iter().sum();
            TransformRow { n, entries, sum }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalan;
    use crate::triangle::narayana;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    const ADJACENT: TransformParams = TransformParams { m: 1, r: 0, l: 1, p: 1 };
    const SHIFTED: TransformParams = TransformParams { m: 1, r: 1, l: 1, p: 1 };

    #[test]
    fn shapiro_table() {
        let rows = minor_sum_transform(TriangleSource::Shapiro, ADJACENT, 4).unwrap();
        let expected: [&[i64]; 5] = [&[1], &[3, 1], &[14, 10, 1], &[84, 90, 21, 1], &[594, 825, 308, 36, 1]];
        for (row, want) in rows.iter().zip(expected) {
            assert_eq!(row.entries, ints(want));
        }
        assert_eq!(rows[2].sum, BigInt::from(25));
        let sums: Vec<BigInt> = rows.iter().map(|r| r.sum.clone()).collect();
        assert_eq!(sums, ints(&[1, 4, 25, 196, 1764]));
    }

    #[test]
    fn shapiro_row_sums_are_catalan_squares() {
        for row in minor_sum_transform(TriangleSource::Shapiro, ADJACENT, 15).unwrap() {
            let c = catalan(row.n + 1).unwrap();
            assert_eq!(row.sum, &c * &c);
        }
    }

    #[test]
    fn pascal_displays() {
        for tp in [ADJACENT, SHIFTED] {
            let rows = minor_sum_transform(TriangleSource::Pascal, tp, 15).unwrap();
            assert_eq!(rows[3].sum, BigInt::from(14));
            for row in &rows {
                assert_eq!(row.sum, catalan(row.n + 1).unwrap());
            }
        }
        // Each entry of the adjacent transform is a Narayana number.
        for row in minor_sum_transform(TriangleSource::Pascal, ADJACENT, 12).unwrap() {
            for (k, v) in row.entries.iter().enumerate() {
                assert_eq!(*v, narayana(row.n + 1, k as i64 + 1));
            }
        }
    }

    #[test]
    fn motzkin_source_at_two_two_is_shapiro() {
        let a = minor_sum_transform(TriangleSource::Motzkin(Point::new(2, 2)), ADJACENT, 10).unwrap();
        let b = minor_sum_transform(TriangleSource::Shapiro, ADJACENT, 10).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn higher_order_transform_agrees_with_cofactor() {
        for tp in [
            TransformParams { m: 1, r: 0, l: 1, p: 2 },
            TransformParams { m: 2, r: 1, l: 1, p: 3 },
            TransformParams { m: 1, r: -1, l: 2, p: 2 },
        ] {
            for src in [TriangleSource::Pascal, TriangleSource::Shapiro, TriangleSource::Motzkin(Point::new(1, 1))] {
                assert_eq!(
                    minor_sum_transform(src, tp, 8).unwrap(),
                    minor_sum_transform_cofactor(src, tp, 8),
                    "{src} {tp:?}"
                );
            }
        }
        assert!(minor_sum_transform(TriangleSource::Pascal, TransformParams { m: 1, r: 0, l: 1, p: 0 }, 3).is_err());
    }

    #[test]
    fn source_parsing() {
        assert_eq!("pascal".parse::<TriangleSource>().unwrap(), TriangleSource::Pascal);
        assert_eq!("motzkin@1,1".parse::<TriangleSource>().unwrap(), TriangleSource::Motzkin(Point::new(1, 1)));
        assert!("fibonacci".parse::<TriangleSource>().is_err());
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(entries in proptest::collection::vec(-20i64..20, 16), size in 0usize..=4) {
            let m: Vec<Vec<BigInt>> = (0..size).map(|i| (0..size).map(|j| BigInt::from(entries[i * 4 + j])).collect()).collect();
            prop_assert_eq!(det_bareiss(&m), det_cofactor(&m));
        }
    }
}
