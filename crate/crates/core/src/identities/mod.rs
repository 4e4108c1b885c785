//! Exact verification of the minor-sum identities.
//!
//! Every check compares two exact values, either polynomials in `x, y` or
//! rationals, and records the first few mismatches. Nothing is sampled: a
//! sweep visits every instance in its box.

pub mod coeffs;
pub mod formula;
pub mod registry;
pub mod transform;

use std::fmt::Display;
use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{BiPoly, BigInt, Rational};
use crate::error::{Error, Result};
use crate::triangle::{IntTriangle, Point, WeightTriangle};
use formula::{Env, Formula, Side};
use registry::{Domain, Identity, Kind, L_MIN};
use transform::minor_sum_transform;

const MAX_FAILURES: usize = 10;

/// Points used by the at-point mode of the theorem checks.
pub const SAMPLE_POINTS: [Point; 6] =
    [Point::new(2, 3), Point::new(5, 7), Point::new(-2, 3), Point::new(1, 2), Point::new(0, 0), Point::new(3, -1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Polynomial identities in `x, y`.
    #[default]
    Symbolic,
    /// The same identities at each of [`SAMPLE_POINTS`].
    AtPoint,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "at-point" => Ok(Mode::AtPoint),
            _ => Err(Error::Unknown { kind: "mode", name: s.to_string() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    /// Largest value of the sweep parameters.
    pub bound: i64,
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn new(identity: &str, bound: i64) -> Self {
        VerificationReport { identity: identity.to_string(), bound, instances: 0, failure_count: 0, failures: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn record(&mut self, outcome: Option<Failure>) {
        self.instances += 1;
        if let Some(f) = outcome {
            self.failure_count += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
    }

    fn from_outcomes(identity: &str, bound: i64, outcomes: Vec<Option<Failure>>) -> Self {
        let mut rep = VerificationReport::new(identity, bound);
        for o in outcomes {
            rep.record(o);
        }
        rep
    }
}

fn compare<V: PartialEq + Display>(params: String, lhs: V, rhs: V) -> Option<Failure> {
    (lhs != rhs).then(|| Failure { params, lhs: lhs.to_string(), rhs: rhs.to_string() })
}

/// `a d - b c`.
pub fn det2<V>(a: &V, b: &V, c: &V, d: &V) -> V
where
    for<'a> &'a V: Mul<&'a V, Output = V>,
    V: Sub<Output = V>,
{
    a * d - b * c
}

/// Ring values the theorem checks run over.
trait Ring: Clone + PartialEq + Display + Send + Sync + Add<Output = Self> + Sub<Output = Self>
where
    for<'a> &'a Self: Mul<&'a Self, Output = Self>,
{
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn from_i64(v: i64) -> Self {
        BiPoly::from(v)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// Entry lookup into a triangle, zero outside `0 <= k <= n`.
trait Table<V>: Sync {
    fn at(&self, n: i64, k: i64) -> V;
}

impl Table<BiPoly> for WeightTriangle {
    fn at(&self, n: i64, k: i64) -> BiPoly {
        self.entry(n, k).clone()
    }
}

impl Table<BigInt> for IntTriangle {
    fn at(&self, n: i64, k: i64) -> BigInt {
        self.get(n, k)
    }
}

fn minor_sum_lhs<V: Ring>(a: &impl Table<V>, n: i64, m: i64, r: i64, l: i64) -> V
where
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    let upper = (n + r + 1).min(m + r - l);
    let mut acc = V::zero();
    for k in 0..=upper {
        acc = acc + det2(&a.at(n, k), &a.at(m, k + l + 1), &a.at(n + r + 1, k), &a.at(m + r + 1, k + l + 1));
    }
    acc
}

fn minor_sum_rhs<V: Ring>(a: &impl Table<V>, second: impl Fn(i64) -> V, n: i64, m: i64, r: i64) -> V
where
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    let mut acc = V::zero();
    for i in 0..=r {
        acc = acc + &a.at(n + i, 0) * &second(m + r - i);
    }
    acc
}

fn two_row_sides<V: Ring>(d: &impl Table<V>, n: i64) -> (V, V)
where
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    let mut lhs = V::zero();
    for k in 0..=n {
        lhs = lhs + det2(&d.at(n, k), &d.at(n, k + 1), &d.at(n + 2, k), &d.at(n + 2, k + 1));
    }
    let rhs = &(&V::from_i64(2) * &d.at(n, 0)) * &d.at(n + 1, 0);
    (lhs, rhs)
}

/// The four triangles a theorem check needs, all sized for one sweep bound.
struct Triangles<V> {
    /// `M(x, y)`.
    main: Box<dyn Table<V>>,
    /// `M(y, y)`.
    diag: Box<dyn Table<V>>,
    /// `M(y + 1, y)`.
    shifted: Box<dyn Table<V>>,
    label: String,
}

fn symbolic_triangles(rows: usize) -> Triangles<BiPoly> {
    let w = WeightTriangle::build(rows);
    let diag = w.diagonal_weights();
    let shifted = w.substitute(&(&BiPoly::y() + &BiPoly::one()), &BiPoly::y());
    Triangles { main: Box::new(w), diag: Box::new(diag), shifted: Box::new(shifted), label: String::new() }
}

fn point_triangles(rows: usize, p: Point) -> Triangles<BigInt> {
    Triangles {
        main: Box::new(IntTriangle::by_recurrence(rows, p)),
        diag: Box::new(IntTriangle::by_recurrence(rows, Point::new(p.y, p.y))),
        shifted: Box::new(IntTriangle::by_recurrence(rows, Point::new(p.y + 1, p.y))),
        label: format!(" at ({p})"),
    }
}

impl<V> Table<V> for Box<dyn Table<V>> {
    fn at(&self, n: i64, k: i64) -> V {
        (**self).at(n, k)
    }
}

/// The minor-sum theorem on the weight triangle:
///
/// ```text
/// sum_{k=0}^{N} [M_{n,k} M_{m+r+1,k+l+1} - M_{m,k+l+1} M_{n+r+1,k}]
///     = sum_{i=0}^{r} M_{n+i,0}(x,y) M_{m+r-i,l}(y,y),   N = min(n+r+1, m+r-l)
/// ```
///
/// for `0 <= l <= m + r`.
pub fn verify_general_minor_sum(n: i64, m: i64, r: i64, l: i64) -> Result<VerificationReport> {
    check_params(n, m, r, l)?;
    let t = symbolic_triangles((n.max(m) + r + 1) as usize);
    let mut rep = VerificationReport::new("general-minor-sum", n.max(m));
    rep.record(general_instance(&t, n, m, r, l));
    Ok(rep)
}

fn check_params(n: i64, m: i64, r: i64, l: i64) -> Result<()> {
    if n < 0 || m < 0 || r < 0 || l < 0 || l > m + r {
        return Err(Error::Domain(format!("need n, m, r >= 0 and 0 <= l <= m + r, got ({n}, {m}, {r}, {l})")));
    }
    Ok(())
}

fn general_instance<V: Ring>(t: &Triangles<V>, n: i64, m: i64, r: i64, l: i64) -> Option<Failure>
where
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    let lhs = minor_sum_lhs(&t.main, n, m, r, l);
    let rhs = minor_sum_rhs(&t.main, |j| t.diag.at(j, l), n, m, r);
    compare(format!("n={n} m={m} r={r} l={l}{}", t.label), lhs, rhs)
}

/// The minor sums added over `0 <= l <= m + r`, against
/// `sum_i M_{n+i,0}(x,y) M_{m+r-i,0}(y+1,y)`. `M(y+1, y)` on the axis is also
/// compared with the row sum of `M(y, y)`.
fn total_instance<V: Ring>(t: &Triangles<V>, n: i64, m: i64, r: i64) -> Option<Failure>
where
    for<'a> &'a V: Mul<&'a V, Output = V>,
{
    let params = format!("n={n} m={m} r={r}{}", t.label);
    for j in 0..=m + r {
        let row_sum = (0..=j).fold(V::zero(), |acc, l| acc + t.diag.at(j, l));
        if let Some(mut f) = compare(params.clone(), t.shifted.at(j, 0), row_sum) {
            f.params = format!("{params}: axis entry of row {j}");
            return Some(f);
        }
    }
    let lhs = (0..=m + r).fold(V::zero(), |acc, l| acc + minor_sum_lhs(&t.main, n, m, r, l));
    let rhs = minor_sum_rhs(&t.main, |j| t.shifted.at(j, 0), n, m, r);
    compare(params, lhs, rhs)
}

/// `r = 0` case: `sum_k det(M_{n,k}, M_{m,k+l+1}; M_{n+1,k}, M_{m+1,k+l+1})
/// = M_{n,0}(x,y) M_{m,l}(y,y)`.
pub fn verify_first_row_minor_sum(n: i64, m: i64, l: i64) -> Result<VerificationReport> {
    check_params(n, m, 0, l)?;
    let t = symbolic_triangles((n.max(m) + 1) as usize);
    let mut rep = VerificationReport::new("first-row-minor-sum", n.max(m));
    rep.record(general_instance(&t, n, m, 0, l));
    Ok(rep)
}

/// `sum_{k=0}^{n} det(M_{n,k}, M_{n,k+1}; M_{n+2,k}, M_{n+2,k+1})
/// = 2 M_{n,0} M_{n+1,0}`, everything at `(y, y)`.
pub fn verify_two_row_diagonal(n: i64) -> Result<VerificationReport> {
    if n < 0 {
        return Err(Error::Domain(format!("need n >= 0, got {n}")));
    }
    let d = WeightTriangle::build(n as usize + 2).diagonal_weights();
    let (lhs, rhs) = two_row_sides(&d, n);
    let mut rep = VerificationReport::new("two-row-diagonal", n);
    rep.record(compare(format!("n={n}"), lhs, rhs));
    Ok(rep)
}

/// The theorem-level entries of the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremCheck {
    GeneralMinorSum,
    GeneralMinorSumTotal,
    FirstRow,
    TwoRowDiagonal,
}

/// Largest `r` visited by the general sweeps.
pub const R_MAX: i64 = 3;

impl TheoremCheck {
    /// Cap on the sweep bound; symbolic polynomials grow quickly.
    pub fn cap(self, mode: Mode) -> i64 {
        match (self, mode) {
            (TheoremCheck::GeneralMinorSum | TheoremCheck::GeneralMinorSumTotal, Mode::Symbolic) => 8,
            (_, Mode::Symbolic) => 10,
            (TheoremCheck::TwoRowDiagonal, Mode::AtPoint) => 30,
            (_, Mode::AtPoint) => 14,
        }
    }

    fn instances(self, bound: i64) -> Vec<(i64, i64, i64, i64)> {
        let mut out = Vec::new();
        match self {
            TheoremCheck::GeneralMinorSum => {
                for n in 0..=bound {
                    for m in 0..=bound {
                        for r in 0..=R_MAX {
                            for l in 0..=m + r {
                                out.push((n, m, r, l));
                            }
                        }
                    }
                }
            }
            TheoremCheck::GeneralMinorSumTotal => {
                for n in 0..=bound {
                    for m in 0..=bound {
                        for r in 0..=R_MAX {
                            out.push((n, m, r, 0));
                        }
                    }
                }
            }
            TheoremCheck::FirstRow => {
                for n in 0..=bound {
                    for m in 0..=bound {
                        for l in 0..=m {
                            out.push((n, m, 0, l));
                        }
                    }
                }
            }
            TheoremCheck::TwoRowDiagonal => out.extend((0..=bound).map(|n| (n, 0, 0, 0))),
        }
        out
    }

    fn run<V: Ring>(self, t: &Triangles<V>, (n, m, r, l): (i64, i64, i64, i64)) -> Option<Failure>
    where
        for<'a> &'a V: Mul<&'a V, Output = V>,
    {
        match self {
            TheoremCheck::GeneralMinorSum | TheoremCheck::FirstRow => general_instance(t, n, m, r, l),
            TheoremCheck::GeneralMinorSumTotal => total_instance(t, n, m, r),
            TheoremCheck::TwoRowDiagonal => {
                let (lhs, rhs) = two_row_sides(&t.diag, n);
                compare(format!("n={n}{}", t.label), lhs, rhs)
            }
        }
    }

    pub fn sweep(self, id: &str, max: i64, mode: Mode) -> VerificationReport {
        let bound = max.min(self.cap(mode));
        let instances = self.instances(bound);
        let rows = (bound + R_MAX + 2) as usize;
        let outcomes = match mode {
            Mode::Symbolic => {
                let t = symbolic_triangles(rows);
                instances.par_iter().map(|&inst| self.run(&t, inst)).collect()
            }
            Mode::AtPoint => {
                let ts: Vec<Triangles<BigInt>> = SAMPLE_POINTS.iter().map(|&p| point_triangles(rows, p)).collect();
                ts.iter()
                    .flat_map(|t| instances.iter().map(move |&inst| (t, inst)))
                    .collect::<Vec<_>>()
                    .par_iter()
                    .map(|&(t, inst)| self.run(t, inst))
                    .collect()
            }
        };
        VerificationReport::from_outcomes(id, bound, outcomes)
    }
}

/// Which sign an alternating minor sum carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltSign {
    /// `(-1)^(n-k)`
    NMinusK,
    /// `(-1)^k`
    K,
}

/// `sum_{k=0}^{n} sign * det(T_{n,k}, T_{n,k+1}; T_{n+gap,k}, T_{n+gap,k+1}) = rhs(n)`
/// with `T` the weight triangle at `point`.
#[derive(Clone, Debug)]
pub struct AltDet {
    pub point: Point,
    pub gap: i64,
    pub sign: AltSign,
    pub rhs: Side,
}

impl AltDet {
    pub fn lhs(&self, t: &IntTriangle, n: i64) -> BigInt {
        let mut acc = BigInt::from(0);
        for k in 0..=n {
            let d = det2(&t.get(n, k), &t.get(n, k + 1), &t.get(n + self.gap, k), &t.get(n + self.gap, k + 1));
            let odd = match self.sign {
                AltSign::NMinusK => (n - k) % 2 != 0,
                AltSign::K => k % 2 != 0,
            };
            if odd {
                acc -= d;
            } else {
                acc += d;
            }
        }
        acc
    }

    fn instance(&self, t: &IntTriangle, n: i64) -> Option<Failure> {
        let lhs = Rational::from_integer(self.lhs(t, n));
        match self.rhs.eval(&Env { n, ..Env::default() }) {
            Ok(rhs) => compare(format!("n={n}"), lhs, rhs),
            Err(e) => Some(Failure { params: format!("n={n}"), lhs: lhs.to_string(), rhs: e.to_string() }),
        }
    }
}

/// Runs one registry entry over its sweep box.
pub fn verify_entry(entry: &Identity, max: i64, mode: Mode) -> VerificationReport {
    match &entry.kind {
        Kind::Sum { formula, domain } => sweep_sum(entry.id, formula, *domain, max),
        Kind::AltDet(a) => {
            let t = IntTriangle::by_recurrence((max + a.gap + 1).max(0) as usize, a.point);
            let outcomes = (0..=max).into_par_iter().map(|n| a.instance(&t, n)).collect();
            VerificationReport::from_outcomes(entry.id, max, outcomes)
        }
        Kind::Transform { source, params, row_sum } => {
            let mut rep = VerificationReport::new(entry.id, max);
            match minor_sum_transform(*source, *params, max) {
                Ok(rows) => {
                    for row in rows {
                        let expected = row_sum.lhs.eval(&Env { n: row.n, ..Env::default() });
                        let got = Rational::from_integer(row.sum);
                        rep.record(match expected {
                            Ok(e) => compare(format!("n={}", row.n), got, e),
                            Err(e) => Some(Failure {
                                params: format!("n={}", row.n),
                                lhs: got.to_string(),
                                rhs: e.to_string(),
                            }),
                        });
                    }
                }
                Err(e) => rep.record(Some(Failure { params: String::new(), lhs: e.to_string(), rhs: String::new() })),
            }
            rep
        }
        Kind::Theorem(t) => t.sweep(entry.id, max, mode),
    }
}

/// Parameter tuples of a sum identity's sweep box.
pub fn domain_instances(domain: Domain, max: i64) -> Vec<Env> {
    let mut out = Vec::new();
    match domain {
        Domain::N => out.extend((0..=max).map(|n| Env { n, ..Env::default() })),
        Domain::M => out.extend((0..=max).map(|m| Env { m, ..Env::default() })),
        Domain::NL => {
            for n in 0..=max {
                out.extend((L_MIN..=n).map(|l| Env { n, l, ..Env::default() }));
            }
        }
        Domain::NML => {
            for n in 0..=max {
                for m in 0..=max {
                    out.extend((L_MIN..=m).map(|l| Env { n, m, l, k: 0 }));
                }
            }
        }
    }
    out
}

fn env_label(domain: Domain, e: &Env) -> String {
    match domain {
        Domain::N => format!("n={}", e.n),
        Domain::M => format!("m={}", e.m),
        Domain::NL => format!("n={} l={}", e.n, e.l),
        Domain::NML => format!("n={} m={} l={}", e.n, e.m, e.l),
    }
}

/// Both sides of a sum identity at one instance.
pub fn sum_instance(formula: &Formula, domain: Domain, env: &Env) -> Option<Failure> {
    let params = env_label(domain, env);
    match (formula.lhs.eval(env), formula.rhs.eval(env)) {
        (Ok(a), Ok(b)) => compare(params, a, b),
        (a, b) => {
            let show = |r: Result<Rational>| r.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
            Some(Failure { params, lhs: show(a), rhs: show(b) })
        }
    }
}

pub fn sweep_sum(id: &str, formula: &Formula, domain: Domain, max: i64) -> VerificationReport {
    let outcomes = domain_instances(domain, max).par_iter().map(|e| sum_instance(formula, domain, e)).collect();
    VerificationReport::from_outcomes(id, max, outcomes)
}

/// A single instance of a registered sum identity. Returns both sides.
pub fn evaluate_sum(id: &str, env: &Env) -> Result<(Rational, Rational)> {
    match &find(id)?.kind {
        Kind::Sum { formula, .. } => Ok((formula.lhs.eval(env)?, formula.rhs.eval(env)?)),
        _ => Err(Error::Domain(format!("{id} is not a closed sum identity"))),
    }
}

/// Left side of a registered alternating minor sum at `n`, with its expected value.
pub fn evaluate_alt_det(id: &str, n: i64) -> Result<(BigInt, BigInt)> {
    match &find(id)?.kind {
        Kind::AltDet(a) => {
            if n < 0 {
                return Err(Error::Domain(format!("need n >= 0, got {n}")));
            }
            let t = IntTriangle::by_recurrence((n + a.gap + 1) as usize, a.point);
            let rhs = a.rhs.eval(&Env { n, ..Env::default() })?;
            Ok((a.lhs(&t, n), crate::algebra::expect_integral(&rhs, id)?))
        }
        _ => Err(Error::Domain(format!("{id} is not an alternating minor sum"))),
    }
}

/// Every registered identity, in a fixed order.
pub fn registry() -> &'static [Identity] {
    static REG: OnceLock<Vec<Identity>> = OnceLock::new();
    REG.get_or_init(registry::build)
}

pub fn find(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Unknown { kind: "identity", name: id.to_string() })
}

/// Sweeps every registered identity in registry order.
pub fn verify_all(max: i64, mode: Mode) -> Vec<VerificationReport> {
    registry().iter().map(|e| verify_entry(e, max, mode)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalan;
    use formula::Var;
    use registry::uncorrected_variants;

    fn int(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn det2_example() {
        let v = |x: i64| BigInt::from(x);
        assert_eq!(det2(&v(5), &v(4), &v(14), &v(14)), v(14));
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|e| e.id).collect();
        ids.sort();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        assert!(find("deng-yan").is_ok());
        assert!(matches!(find("nope"), Err(Error::Unknown { .. })));
    }

    #[test]
    fn documented_examples() {
        let n = |n| Env { n, ..Env::default() };
        let m = |m| Env { m, ..Env::default() };
        assert_eq!(evaluate_sum("minor-sum-12-diag", &n(1)).unwrap(), (int(2), int(2)));
        assert_eq!(evaluate_sum("odd-catalan-squares", &m(1)).unwrap(), (int(5), int(5)));
        assert_eq!(evaluate_sum("alt-central", &m(2)).unwrap(), (int(6), int(6)));
        assert_eq!(evaluate_sum("deng-yan", &n(1)).unwrap(), (int(4), int(4)));
        assert_eq!(evaluate_alt_det("alt-det-00", 2).unwrap(), (BigInt::from(5), BigInt::from(5)));
        assert_eq!(evaluate_alt_det("alt-det-22-2", 1).unwrap(), (BigInt::from(8), BigInt::from(8)));
        assert_eq!(evaluate_alt_det("alt-det-11-1", 3).unwrap(), (BigInt::from(4), BigInt::from(4)));
        assert!(evaluate_sum("alt-det-00", &n(1)).is_err());
    }

    #[test]
    fn general_minor_sum_examples() {
        let t = symbolic_triangles(4);
        let lhs = minor_sum_lhs(&t.main, 0, 0, 1, 0);
        assert_eq!(lhs, "x + y".parse().unwrap());
        let lhs = minor_sum_lhs(&t.main, 1, 1, 0, 0);
        assert_eq!(lhs, "x*y".parse().unwrap());
        assert!(verify_general_minor_sum(2, 3, 1, 2).unwrap().passed());
        assert!(verify_general_minor_sum(1, 1, 0, 5).is_err());
        assert!(verify_first_row_minor_sum(3, 2, 1).unwrap().passed());
        let d = WeightTriangle::build(2).diagonal_weights();
        assert_eq!(two_row_sides(&d, 0).0, "2*y".parse().unwrap());
        assert!(verify_two_row_diagonal(5).unwrap().passed());
    }

    #[test]
    fn theorem_sweeps_pass_in_both_modes() {
        for t in [
            TheoremCheck::GeneralMinorSum,
            TheoremCheck::GeneralMinorSumTotal,
            TheoremCheck::FirstRow,
            TheoremCheck::TwoRowDiagonal,
        ] {
            for mode in [Mode::Symbolic, Mode::AtPoint] {
                let rep = t.sweep("t", 4, mode);
                assert!(rep.passed(), "{t:?} {mode:?}: {:?}", rep.failures);
                assert!(rep.instances > 0);
            }
        }
    }

    #[test]
    fn every_registry_entry_passes_small_sweep() {
        for e in registry() {
            let rep = verify_entry(e, 6, Mode::AtPoint);
            assert!(rep.passed(), "{}: {:?}", e.id, rep.failures);
        }
    }

    #[test]
    fn sum_identities_pass_to_twenty() {
        for e in registry() {
            if let Kind::Sum { .. } = e.kind {
                let rep = verify_entry(e, 20, Mode::Symbolic);
                assert!(rep.passed(), "{}: {:?}", e.id, rep.failures);
            }
        }
    }

    #[test]
    fn uncorrected_variants_fail() {
        for e in uncorrected_variants() {
            let rep = verify_entry(&e, 8, Mode::Symbolic);
            assert!(!rep.passed(), "{} unexpectedly holds", e.id);
        }
    }

    /// Every genuine one-coefficient perturbation of every sum identity must be caught.
    #[test]
    fn mutations_are_caught() {
        let mut survivors = Vec::new();
        for e in registry() {
            let Kind::Sum { formula, domain } = &e.kind else { continue };
            let instances = domain_instances(*domain, 6);
            let live: Vec<Var> = domain.live().to_vec();
            for (i, mutant) in formula.mutations(&live).iter().enumerate() {
                // Mutants equal to the original side by side (binomial symmetry)
                // are not perturbations.
                let equivalent = instances.iter().all(|env| {
                    let same = |a: &Side, b: &Side| a.eval(env).ok() == b.eval(env).ok();
                    same(&mutant.lhs, &formula.lhs) && same(&mutant.rhs, &formula.rhs)
                });
                if !equivalent && instances.iter().all(|env| sum_instance(mutant, *domain, env).is_none()) {
                    survivors.push(format!("{} #{i}: {mutant}", e.id));
                }
            }
        }
        assert!(survivors.is_empty(), "{survivors:#?}");
    }

    fn lhs_of(id: &str, env: Env) -> Rational {
        evaluate_sum(id, &env).unwrap().0
    }

    /// The family left sides are minor sums of a specialised triangle.
    #[test]
    fn families_match_triangle_minor_sums() {
        let cases = [("minor-sum-12", Point::new(1, 2)), ("minor-sum-22", Point::new(2, 2)), ("minor-sum-32", Point::new(3, 2))];
        for (id, p) in cases {
            let t = IntTriangle::by_recurrence(12, p);
            for n in 0..=8 {
                for m in 0..=8 {
                    for l in 0..=m {
                        let v = minor_sum_lhs(&t, n, m, 0, l);
                        assert_eq!(Rational::from_integer(v), lhs_of(id, Env { n, m, l, k: 0 }), "{id} {n} {m} {l}");
                    }
                }
            }
        }
        let t = IntTriangle::by_recurrence(20, Point::new(0, 0));
        for n in 0..=6 {
            for m in 0..=6 {
                for l in 0..=m {
                    let v = minor_sum_lhs(&t, 2 * n, 2 * m, 0, 2 * l);
                    assert_eq!(Rational::from_integer(v), lhs_of("minor-sum-00", Env { n, m, l, k: 0 }));
                }
            }
        }
    }

    /// The corollaries are the families at `l = 0` and `m - n` in `{-1, 0, 1}`.
    #[test]
    fn corollaries_are_family_specialisations() {
        for (family, suffix) in [("minor-sum-12", "12"), ("minor-sum-22", "22"), ("minor-sum-32", "32")] {
            for n in 0..=12 {
                let at = |n, m| lhs_of(family, Env { n, m, l: 0, k: 0 });
                let cor = |which: &str| lhs_of(&format!("minor-sum-{suffix}-{which}"), Env { n, ..Env::default() });
                assert_eq!(cor("below"), at(n + 1, n));
                assert_eq!(cor("diag"), at(n, n));
                assert_eq!(cor("above"), at(n, n + 1));
            }
        }
        for m in 0..=12 {
            let c = Rational::from_integer(catalan(m).unwrap());
            assert_eq!(lhs_of("minor-sum-00-diag", Env { m, ..Env::default() }), &c * &c);
            assert_eq!(lhs_of("minor-sum-00", Env { n: m, m, l: 0, k: 0 }), &c * &c);
        }
    }
}
