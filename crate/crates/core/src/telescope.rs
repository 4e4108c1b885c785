//! Creative-telescoping checks for the five alternating sums.
//!
//! Each summand `F(m, j)` is normalised so that `sum_j F(m, j) = 1`. A
//! certificate `R(m, j)` proves this if, with `G = R F`,
//!
//! ```text
//! F(m+1, j) - F(m, j) = G(m, j+1) - G(m, j)          for 0 <= j <= m+1
//! G(m, 0) = 0,   G(m, m+2) = 0
//! ```
//!
//! Summing over `j` then gives `F(m+1) = F(m)`.
//!
//! `R` has poles at `j = m+1` (and `m+2`) that are cancelled by zeros of `F`,
//! so `G` there is a finite nonzero limit. [`Hyper`] keeps each summand as a
//! product of factorials and evaluates `G` through the reciprocal gamma
//! function, which is entire: a vanishing linear factor `L` in the
//! denominator next to `(L-1)!` becomes `L!`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rational, sign_power, BiPoly, BigInt, BinomialTable, FactorialTable, Rational};
use crate::error::{Error, Result};

const MAX_FAILURES: usize = 10;

/// Rows up to this `m` compare the factorial and binomial forms at every `j`.
const CROSS_CHECK_M: i64 = 60;

/// `a m + b j + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Aff {
    pub m: i64,
    pub j: i64,
    pub c: i64,
}

const fn aff(m: i64, j: i64, c: i64) -> Aff {
    Aff { m, j, c }
}

impl Aff {
    pub fn eval(self, m: i64, j: i64) -> i64 {
        self.m * m + self.j * j + self.c
    }

    fn poly(self) -> BiPoly {
        &(&BiPoly::x().scale(&self.m.into()) + &BiPoly::y().scale(&self.j.into())) + &BiPoly::from(self.c)
    }
}

/// `(-1)^j * prod(num) prod(num_fact!) / (prod(den) prod(den_fact!))`.
#[derive(Clone, Debug)]
pub struct Hyper {
    pub num: Vec<Aff>,
    pub den: Vec<Aff>,
    pub num_fact: Vec<Aff>,
    pub den_fact: Vec<Aff>,
}

impl Hyper {
    /// Value of `extra_num / prod(extra_den) * self` at `(m, j)`, with poles
    /// removed where the reciprocal factorials allow it.
    fn eval_times(&self, facts: &FactorialTable, extra_num: &Rational, extra_den: &[Aff], m: i64, j: i64) -> Result<Rational> {
        let mut den_fact = self.den_fact.clone();
        let mut den_lin = Vec::new();
        for &l in self.den.iter().chain(extra_den) {
            if l.eval(m, j) != 0 {
                den_lin.push(l);
                continue;
            }
            // 1 / (L (L-1)!) = 1 / L!
            let below = aff(l.m, l.j, l.c - 1);
            match den_fact.iter().position(|&d| d == below) {
                Some(i) => den_fact[i] = l,
                None => return Err(Error::Domain(format!("pole of the certificate at m={m} j={j}"))),
            }
        }
        if extra_num.is_zero() || self.num.iter().any(|a| a.eval(m, j) == 0) {
            return Ok(Rational::zero());
        }
        // Reciprocal factorial of a negative integer is zero.
        if den_fact.iter().any(|d| d.eval(m, j) < 0) {
            return Ok(Rational::zero());
        }
        let fact = |a: Aff| -> Result<&BigInt> {
            let v = a.eval(m, j);
            if v < 0 || v as usize > facts.max_n() {
                return Err(Error::Domain(format!("factorial argument {v} outside the table at m={m} j={j}")));
            }
            Ok(facts.get(v as usize))
        };
        let mut num = BigInt::from(sign_power(j));
        for a in &self.num {
            num *= a.eval(m, j);
        }
        for &a in &self.num_fact {
            num *= fact(a)?;
        }
        let mut den = BigInt::one();
        for a in &den_lin {
            den *= a.eval(m, j);
        }
        for &a in &den_fact {
            den *= fact(a)?;
        }
        Ok(extra_num * Rational::new(num, den))
    }

    /// `self(m', j') / self(m, j)` for integer shifts, as a product of
    /// linear factors. Valid away from poles; used at random points where
    /// the factorials themselves would be huge.
    fn shift_ratio(&self, m: i64, j: i64, dm: i64, dj: i64) -> Option<Rational> {
        let lin = |a: &Aff, m, j| rational(a.eval(m, j));
        let mut r = if (dj % 2) == 0 { Rational::one() } else { -Rational::one() };
        for a in &self.num {
            r *= lin(a, m + dm, j + dj) / nonzero(lin(a, m, j))?;
        }
        for a in &self.den {
            r *= lin(a, m, j) / nonzero(lin(a, m + dm, j + dj))?;
        }
        let fact_ratio = |a: &Aff| -> Option<Rational> {
            // (x + s)! / x! with x = a(m, j)
            let x = a.eval(m, j);
            let s = a.m * dm + a.j * dj;
            let mut r = Rational::one();
            if s >= 0 {
                for i in 1..=s {
                    r *= rational(x + i);
                }
            } else {
                for i in 0..-s {
                    r /= nonzero(rational(x - i))?;
                }
            }
            Some(r)
        };
        for a in &self.num_fact {
            r *= fact_ratio(a)?;
        }
        for a in &self.den_fact {
            r /= nonzero(fact_ratio(a)?)?;
        }
        Some(r)
    }
}

fn nonzero(r: Rational) -> Option<Rational> {
    (!r.is_zero()).then_some(r)
}

/// The five normalised summands, all written in `(m, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Summand {
    /// `(-1)^j (2j+2)^2/(2m+2)^2 C(2m+2,m-j)^2 / C(2m+1,m)`
    SquaredShapiro,
    /// `(-1)^j (2j+2)^2/((2m+2)(2m+3)) C(2m+3,m-j) C(2m+3,m-j+1) / C(2m+2,m+1)`
    AdjacentShapiro,
    /// `(-1)^j (2j+1)/(2m+1) C(2m+1,m-j)^2 / C(2m,m)`
    SquaredOdd,
    /// `(-1)^j (2j+2)(2j+3)(2j+4)/((2m+2)(2m+3)(2m+4)^2 C_{m+1}) C(2m+4,m-j) C(2m+4,m-j+1)`
    CatalanAdjacent,
    /// `(-1)^j (2j+2)(2j+3)(2j+4)/(2(2m+2)(2m+3)(2m+6)(2m+7) C_{m+1}) C(2m+3,m-j) C(2m+7,m-j+2)`
    CatalanGap,
}

impl Summand {
    pub const ALL: [Summand; 5] =
        [Summand::SquaredShapiro, Summand::AdjacentShapiro, Summand::SquaredOdd, Summand::CatalanAdjacent, Summand::CatalanGap];

    pub fn name(self) -> &'static str {
        match self {
            Summand::SquaredShapiro => "squared-shapiro",
            Summand::AdjacentShapiro => "adjacent-shapiro",
            Summand::SquaredOdd => "squared-odd",
            Summand::CatalanAdjacent => "catalan-adjacent",
            Summand::CatalanGap => "catalan-gap",
        }
    }

    /// Direct evaluation from binomial coefficients, zero for `j` outside `[0, m]`.
    pub fn eval(self, m: i64, j: i64) -> Rational {
        self.eval_with(&BinomialTable::new((2 * m + 8).max(0) as usize), m, j)
    }

    fn eval_with(self, b: &BinomialTable, m: i64, j: i64) -> Rational {
        if j < 0 || j > m || m < 0 {
            return Rational::zero();
        }
        let c = |n: i64, k: i64| rational(b.get(n, k));
        let q = |a: i64| rational(a);
        let cat = |n: i64| c(2 * n, n) / q(n + 1);
        let s = q(sign_power(j));
        match self {
            Summand::SquaredShapiro => {
                s * q(2 * j + 2).pow(2) / q(2 * m + 2).pow(2) * c(2 * m + 2, m - j).pow(2) / c(2 * m + 1, m)
            }
            Summand::AdjacentShapiro => {
                s * q(2 * j + 2).pow(2) / (q(2 * m + 2) * q(2 * m + 3)) * c(2 * m + 3, m - j) * c(2 * m + 3, m - j + 1)
                    / c(2 * m + 2, m + 1)
            }
            Summand::SquaredOdd => s * q(2 * j + 1) / q(2 * m + 1) * c(2 * m + 1, m - j).pow(2) / c(2 * m, m),
            Summand::CatalanAdjacent => {
                s * q(2 * j + 2) * q(2 * j + 3) * q(2 * j + 4)
                    / (q(2 * m + 2) * q(2 * m + 3) * q(2 * m + 4).pow(2) * cat(m + 1))
                    * c(2 * m + 4, m - j)
                    * c(2 * m + 4, m - j + 1)
            }
            Summand::CatalanGap => {
                s * q(2 * j + 2) * q(2 * j + 3) * q(2 * j + 4)
                    / (q(2) * q(2 * m + 2) * q(2 * m + 3) * q(2 * m + 6) * q(2 * m + 7) * cat(m + 1))
                    * c(2 * m + 3, m - j)
                    * c(2 * m + 7, m - j + 2)
            }
        }
    }

    /// The same summand as a factorial product.
    pub fn hyper(self) -> Hyper {
        // C(a, b) = a! / (b! (a-b)!)
        let mut h = Hyper { num: vec![], den: vec![], num_fact: vec![], den_fact: vec![] };
        let binom = |h: &mut Hyper, top: Aff, bottom: Aff, inverse: bool| {
            let rest = aff(top.m - bottom.m, top.j - bottom.j, top.c - bottom.c);
            if inverse {
                h.den_fact.push(top);
                h.num_fact.extend([bottom, rest]);
            } else {
                h.num_fact.push(top);
                h.den_fact.extend([bottom, rest]);
            }
        };
        let mj = |c: i64| aff(1, -1, c);
        match self {
            Summand::SquaredShapiro => {
                h.num = vec![aff(0, 2, 2), aff(0, 2, 2)];
                h.den = vec![aff(2, 0, 2), aff(2, 0, 2)];
                binom(&mut h, aff(2, 0, 2), mj(0), false);
                binom(&mut h, aff(2, 0, 2), mj(0), false);
                binom(&mut h, aff(2, 0, 1), aff(1, 0, 0), true);
            }
            Summand::AdjacentShapiro => {
                h.num = vec![aff(0, 2, 2), aff(0, 2, 2)];
                h.den = vec![aff(2, 0, 2), aff(2, 0, 3)];
                binom(&mut h, aff(2, 0, 3), mj(0), false);
                binom(&mut h, aff(2, 0, 3), mj(1), false);
                binom(&mut h, aff(2, 0, 2), aff(1, 0, 1), true);
            }
            Summand::SquaredOdd => {
                h.num = vec![aff(0, 2, 1)];
                h.den = vec![aff(2, 0, 1)];
                binom(&mut h, aff(2, 0, 1), mj(0), false);
                binom(&mut h, aff(2, 0, 1), mj(0), false);
                binom(&mut h, aff(2, 0, 0), aff(1, 0, 0), true);
            }
            Summand::CatalanAdjacent | Summand::CatalanGap => {
                h.num = vec![aff(0, 2, 2), aff(0, 2, 3), aff(0, 2, 4)];
                // C_{m+1} = C(2m+2, m+1) / (m+2)
                binom(&mut h, aff(2, 0, 2), aff(1, 0, 1), true);
                h.num.push(aff(1, 0, 2));
                if self == Summand::CatalanAdjacent {
                    h.den.extend([aff(2, 0, 2), aff(2, 0, 3), aff(2, 0, 4), aff(2, 0, 4)]);
                    binom(&mut h, aff(2, 0, 4), mj(0), false);
                    binom(&mut h, aff(2, 0, 4), mj(1), false);
                } else {
                    h.den.extend([aff(0, 0, 2), aff(2, 0, 2), aff(2, 0, 3), aff(2, 0, 6), aff(2, 0, 7)]);
                    binom(&mut h, aff(2, 0, 3), mj(0), false);
                    binom(&mut h, aff(2, 0, 7), mj(2), false);
                }
            }
        }
        h
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Summand {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Summand::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "summand", name: s.to_string() })
    }
}

/// A telescoping certificate: `sum(c * prod(factors)) / prod(den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// `(j^2(j+1) - j(3m+5)(m+1)) / (2(j+1)(m-j+1)^2)`
    SquaredShapiro,
    /// `(j^2(j+1) - j(3m+5)(m+2)) / (2(j+1)(m-j+1)(m-j+2))`
    AdjacentShapiro,
    /// `(j^3 - 3j(m+1)^2) / ((2j+1)(m-j+1)^2)`
    SquaredOdd,
    /// `(j(j+1)^2 - j(3m+7)(m+2)) / ((2j+3)(m-j+1)(m-j+2))`
    CatalanAdjacent,
    /// `(j^2(j+2) - j(3m+7)(m+3)) / ((2j+3)(m-j+1)(m-j+3))`
    CatalanGap,
    /// Twice [`Certificate::CatalanGap`], as it is sometimes quoted. Fails.
    CatalanGapDoubled,
}

type NumTerm = (i64, Vec<Aff>);

impl Certificate {
    pub const ALL: [Certificate; 6] = [
        Certificate::SquaredShapiro,
        Certificate::AdjacentShapiro,
        Certificate::SquaredOdd,
        Certificate::CatalanAdjacent,
        Certificate::CatalanGap,
        Certificate::CatalanGapDoubled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Certificate::CatalanGapDoubled => "catalan-gap-doubled",
            c => c.summand().name(),
        }
    }

    /// The summand this certificate is written for.
    pub fn summand(self) -> Summand {
        match self {
            Certificate::SquaredShapiro => Summand::SquaredShapiro,
            Certificate::AdjacentShapiro => Summand::AdjacentShapiro,
            Certificate::SquaredOdd => Summand::SquaredOdd,
            Certificate::CatalanAdjacent => Summand::CatalanAdjacent,
            Certificate::CatalanGap | Certificate::CatalanGapDoubled => Summand::CatalanGap,
        }
    }

    fn numerator(self) -> Vec<NumTerm> {
        const J: Aff = aff(0, 1, 0);
        match self {
            Certificate::SquaredShapiro => vec![(1, vec![J, J, aff(0, 1, 1)]), (-1, vec![J, aff(3, 0, 5), aff(1, 0, 1)])],
            Certificate::AdjacentShapiro => vec![(1, vec![J, J, aff(0, 1, 1)]), (-1, vec![J, aff(3, 0, 5), aff(1, 0, 2)])],
            Certificate::SquaredOdd => vec![(1, vec![J, J, J]), (-3, vec![J, aff(1, 0, 1), aff(1, 0, 1)])],
            Certificate::CatalanAdjacent => vec![(1, vec![J, aff(0, 1, 1), aff(0, 1, 1)]), (-1, vec![J, aff(3, 0, 7), aff(1, 0, 2)])],
            Certificate::CatalanGap => vec![(1, vec![J, J, aff(0, 1, 2)]), (-1, vec![J, aff(3, 0, 7), aff(1, 0, 3)])],
            Certificate::CatalanGapDoubled => vec![(2, vec![J, J, aff(0, 1, 2)]), (-2, vec![J, aff(3, 0, 7), aff(1, 0, 3)])],
        }
    }

    fn denominator(self) -> Vec<Aff> {
        match self {
            Certificate::SquaredShapiro => vec![aff(0, 0, 2), aff(0, 1, 1), aff(1, -1, 1), aff(1, -1, 1)],
            Certificate::AdjacentShapiro => vec![aff(0, 0, 2), aff(0, 1, 1), aff(1, -1, 1), aff(1, -1, 2)],
            Certificate::SquaredOdd => vec![aff(0, 2, 1), aff(1, -1, 1), aff(1, -1, 1)],
            Certificate::CatalanAdjacent => vec![aff(0, 2, 3), aff(1, -1, 1), aff(1, -1, 2)],
            Certificate::CatalanGap | Certificate::CatalanGapDoubled => vec![aff(0, 2, 3), aff(1, -1, 1), aff(1, -1, 3)],
        }
    }

    fn numerator_value(self, m: i64, j: i64) -> Rational {
        let mut acc = Rational::zero();
        for (c, factors) in self.numerator() {
            let mut t = rational(c);
            for a in &factors {
                t *= rational(a.eval(m, j));
            }
            acc += t;
        }
        acc
    }

    /// `R(m, j)` factor by factor in rational arithmetic. `None` at a pole.
    pub fn eval(self, m: i64, j: i64) -> Option<Rational> {
        let mut r = self.numerator_value(m, j);
        for a in self.denominator() {
            r /= nonzero(rational(a.eval(m, j)))?;
        }
        Some(r)
    }

    /// Numerator and denominator as expanded polynomials in `(m, j)`.
    pub fn expanded(self) -> (BiPoly, BiPoly) {
        let mut num = BiPoly::zero();
        for (c, factors) in self.numerator() {
            num += &factors.iter().fold(BiPoly::from(c), |acc, a| &acc * &a.poly());
        }
        let den = self.denominator().iter().fold(BiPoly::one(), |acc, a| &acc * &a.poly());
        (num, den)
    }

    /// `R(m, j)` from the expanded polynomials: integer numerator and
    /// denominator, then one reduction. `None` at a pole.
    pub fn eval_expanded(self, m: i64, j: i64) -> Option<Rational> {
        let (num, den) = self.expanded();
        let (m, j) = (BigInt::from(m), BigInt::from(j));
        let d = den.eval(&m, &j);
        (!d.is_zero()).then(|| Rational::new(num.eval(&m, &j), d))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Certificate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Certificate::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "certificate", name: s.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TelescopeReport {
    pub check: String,
    pub summand: Summand,
    pub certificate: Option<Certificate>,
    pub max_m: i64,
    pub points: u64,
    pub failure_count: u64,
    /// The first few failing coordinates with a reason.
    pub failures: Vec<String>,
}

impl TelescopeReport {
    fn new(check: &str, summand: Summand, certificate: Option<Certificate>, max_m: i64) -> Self {
        TelescopeReport {
            check: check.to_string(),
            summand,
            certificate,
            max_m,
            points: 0,
            failure_count: 0,
            failures: vec![],
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.points > 0
    }

    fn absorb(&mut self, points: u64, failures: Vec<String>) {
        self.points += points;
        self.failure_count += failures.len() as u64;
        for f in failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
    }
}

/// `G(m, j) = R(m, j) F(m, j)`, with removable singularities filled in.
pub fn g_value(facts: &FactorialTable, summand: Summand, cert: Certificate, m: i64, j: i64) -> Result<Rational> {
    if j < 0 {
        return Ok(Rational::zero());
    }
    summand.hyper().eval_times(facts, &cert.numerator_value(m, j), &cert.denominator(), m, j)
}

/// The telescoping recurrence and both boundaries for `0 <= m <= max_m`.
pub fn wz_check(summand: Summand, cert: Certificate, max_m: i64) -> Result<TelescopeReport> {
    if max_m < 1 {
        return Err(Error::Domain(format!("wz_check needs max_m >= 1, got {max_m}")));
    }
    let size = (2 * max_m + 16) as usize;
    let facts = FactorialTable::new(size);
    let binoms = BinomialTable::new(size);
    let hyper = summand.hyper();
    let per_m: Vec<(u64, Vec<String>)> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let mut points = 0;
            let mut bad = Vec::new();
            let row = |m: i64| -> Vec<Rational> { (0..=m + 2).map(|j| summand.eval_with(&binoms, m, j)).collect() };
            let (f0, f1) = (row(m), row(m + 1));
            // Away from poles G is R F; at a pole the factorial form supplies the limit.
            let gs: Vec<Result<Rational>> = (0..=m + 2)
                .map(|j| match cert.eval(m, j) {
                    Some(r) => Ok(r * &f0[j as usize]),
                    None => g_value(&facts, summand, cert, m, j),
                })
                .collect();
            for (j, gv) in [(0, &gs[0]), (m + 2, &gs[(m + 2) as usize])] {
                points += 1;
                match gv {
                    Ok(v) if v.is_zero() => {}
                    Ok(v) => bad.push(format!("m={m} j={j}: boundary G = {v}, expected 0")),
                    Err(e) => bad.push(format!("m={m} j={j}: {e}")),
                }
            }
            for j in 0..=m + 1 {
                points += 1;
                // The factorial form must agree with the binomial form; on the
                // full row for small m, at the ends of the row beyond.
                if m <= CROSS_CHECK_M || j == 0 || j >= m {
                    match hyper.eval_times(&facts, &Rational::one(), &[], m, j) {
                        Ok(h) if h == f0[j as usize] => {}
                        Ok(h) => bad.push(format!("m={m} j={j}: factorial form {h} != binomial form {}", f0[j as usize])),
                        Err(e) => bad.push(format!("m={m} j={j}: {e}")),
                    }
                }
                let ju = j as usize;
                match (&gs[ju], &gs[ju + 1]) {
                    (Ok(g0), Ok(g1)) => {
                        let lhs = &f1[ju] - &f0[ju];
                        let rhs = g1 - g0;
                        if lhs != rhs {
                            bad.push(format!("m={m} j={j}: F(m+1,j)-F(m,j) = {lhs}, G(m,j+1)-G(m,j) = {rhs}"));
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => bad.push(format!("m={m} j={j}: {e}")),
                }
            }
            (points, bad)
        })
        .collect();
    let mut rep = TelescopeReport::new("wz", summand, Some(cert), max_m);
    for (points, bad) in per_m {
        rep.absorb(points, bad);
    }
    Ok(rep)
}

/// `sum_j F(m, j) = 1` for `0 <= m <= max_m`, by direct summation.
pub fn constant_sum_check(summand: Summand, max_m: i64) -> TelescopeReport {
    let binoms = BinomialTable::new((2 * max_m + 16).max(0) as usize);
    let per_m: Vec<(u64, Vec<String>)> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let total: Rational = (0..=m).map(|j| summand.eval_with(&binoms, m, j)).sum();
            let bad = if total.is_one() { vec![] } else { vec![format!("m={m}: sum = {total}")] };
            (1, bad)
        })
        .collect();
    let mut rep = TelescopeReport::new("constant-sum", summand, None, max_m);
    for (points, bad) in per_m {
        rep.absorb(points, bad);
    }
    rep
}

/// The recurrence divided by `F(m, j)`, a rational-function identity in
/// `(m, j)`:
///
/// ```text
/// F(m+1,j)/F(m,j) - 1 = R(m,j+1) F(m,j+1)/F(m,j) - R(m,j)
/// ```
///
/// Returns `None` when a pole or a zero of `F` makes the point unusable.
pub fn ratio_identity_holds(summand: Summand, cert: Certificate, m: i64, j: i64) -> Option<bool> {
    let h = summand.hyper();
    let up_m = h.shift_ratio(m, j, 1, 0)?;
    let up_j = h.shift_ratio(m, j, 0, 1)?;
    let lhs = up_m - Rational::one();
    let rhs = cert.eval(m, j + 1)? * up_j - cert.eval(m, j)?;
    Some(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn summand_examples() {
        assert_eq!(Summand::SquaredShapiro.eval(1, 0), q(4 * 16, 16 * 3));
        assert_eq!(Summand::SquaredShapiro.eval(1, 1) + Summand::SquaredShapiro.eval(1, 0), q(1, 1));
        assert_eq!(Summand::CatalanGap.eval(0, 0), q(1, 1));
        assert_eq!(Summand::AdjacentShapiro.eval(0, 0), q(1, 1));
        assert!(Summand::SquaredOdd.eval(3, 4).is_zero());
        assert!(Summand::SquaredOdd.eval(3, -1).is_zero());
        assert_eq!("catalan-gap".parse::<Summand>().unwrap(), Summand::CatalanGap);
        assert!("f6".parse::<Summand>().is_err());
    }

    #[test]
    fn hand_check_at_one_one() {
        let facts = FactorialTable::new(40);
        let (s, c) = (Summand::SquaredShapiro, Certificate::SquaredShapiro);
        let lhs = s.eval(2, 1) - s.eval(1, 1);
        let rhs = g_value(&facts, s, c, 1, 2).unwrap() - g_value(&facts, s, c, 1, 1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn removable_singularity_is_filled() {
        let facts = FactorialTable::new(60);
        for s in Summand::ALL {
            let c = Certificate::ALL.into_iter().find(|c| c.summand() == s).unwrap();
            for m in 0..10 {
                // At j = m + 1 the naive product is 0 * pole.
                assert!(c.eval(m, m + 1).is_none());
                let g = g_value(&facts, s, c, m, m + 1).unwrap();
                assert_eq!(g, -s.eval(m + 1, m + 1), "{s} m={m}");
            }
        }
    }

    #[test]
    fn all_certificates_pass_small() {
        for c in Certificate::ALL {
            let rep = wz_check(c.summand(), c, 30).unwrap();
            assert_eq!(rep.passed(), c != Certificate::CatalanGapDoubled, "{c}: {:?}", rep.failures);
        }
        for s in Summand::ALL {
            assert!(constant_sum_check(s, 30).passed());
        }
    }

    #[test]
    fn mismatched_certificate_fails() {
        assert!(!wz_check(Summand::CatalanAdjacent, Certificate::CatalanGap, 10).unwrap().passed());
        assert!(!wz_check(Summand::SquaredShapiro, Certificate::SquaredOdd, 10).unwrap().passed());
        assert!(wz_check(Summand::SquaredOdd, Certificate::SquaredOdd, 0).is_err());
    }

    #[test]
    fn evaluation_paths_agree() {
        for c in Certificate::ALL {
            for m in -20..20 {
                for j in -20..20 {
                    assert_eq!(c.eval(m, j), c.eval_expanded(m, j), "{c} at ({m},{j})");
                }
            }
        }
    }

    #[test]
    fn ratio_identity_at_large_points() {
        for c in Certificate::ALL {
            let mut held = 0;
            let mut failed = 0;
            for (m, j) in [(1000, 17), (123_456, -77), (-5000, 4999), (77, 300), (999_983, 500_000)] {
                match ratio_identity_holds(c.summand(), c, m, j) {
                    Some(true) => held += 1,
                    Some(false) => failed += 1,
                    None => {}
                }
            }
            if c == Certificate::CatalanGapDoubled {
                assert!(failed > 0);
            } else {
                assert_eq!(failed, 0, "{c}");
                assert!(held > 0);
            }
        }
    }
}
