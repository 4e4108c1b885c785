use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Pascal rows `0..=max_n`, for sweeps that hit the same binomials repeatedly.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero outside `0 <= k <= n`. Panics if `n` is negative or
    /// beyond the table.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        assert!(n >= 0 && (n as usize) <= self.max_n(), "binomial table has no row {n}");
        if k < 0 || k > n {
            return BigInt::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }
}

/// Factorials `0!..=max_n!`.
#[derive(Clone, Debug)]
pub struct FactorialTable {
    values: Vec<BigInt>,
}

impl FactorialTable {
    pub fn new(max_n: usize) -> Self {
        let mut values = Vec::with_capacity(max_n + 1);
        values.push(BigInt::one());
        for i in 1..=max_n {
            let next = &values[i - 1] * i;
            values.push(next);
        }
        FactorialTable { values }
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;

    #[test]
    fn table_agrees_with_multiplicative_formula() {
        let table = BinomialTable::new(60);
        for n in 0..=60 {
            for k in -2..=62 {
                assert_eq!(table.get(n, k), binomial(n, k).unwrap());
            }
        }
    }

    #[test]
    fn factorials() {
        let f = FactorialTable::new(10);
        assert_eq!(f.get(0), &BigInt::one());
        assert_eq!(f.get(10), &BigInt::from(3_628_800));
    }
}
