use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse polynomial in two symbols with big-integer coefficients.
///
/// Terms are keyed by the exponent pair `(i, j)` of `x^i y^j`; no stored
/// coefficient is ever zero, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// One `c * x^i * y^j` term, as used by the JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub i: u32,
    pub j: u32,
    pub c: BigInt,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(1)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut p = BiPoly::zero();
        for t in terms {
            p.add_term(t.i, t.j, t.c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn max_x_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Terms in graded lexicographic order: higher total degree first, then
    /// higher `x` exponent first.
    pub fn terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| Term { i, j, c: c.clone() })
            .collect();
        out.sort_by(|a, b| (b.i + b.j, b.i).cmp(&(a.i + a.j, a.i)));
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &BigInt) -> BiPoly {
        if factor.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(&k, c)| (k, c * factor)).collect() }
    }

    /// Divides every coefficient by `d`, or `None` if some coefficient is not
    /// a multiple of `d`.
    pub fn div_exact(&self, d: &BigInt) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (&k, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(k, q);
        }
        Some(BiPoly { terms })
    }

    /// Exact value at an integer point.
    pub fn eval(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        let xs = powers(x0, self.max_x_degree());
        let ys = powers(y0, self.max_y_degree());
        self.terms
            .iter()
            .fold(BigInt::zero(), |acc, (&(i, j), c)| acc + c * &xs[i as usize] * &ys[j as usize])
    }

    pub fn eval_i64(&self, x0: i64, y0: i64) -> BigInt {
        self.eval(&BigInt::from(x0), &BigInt::from(y0))
    }

    /// Formal substitution `x := xs, y := ys`.
    pub fn substitute(&self, xs: &BiPoly, ys: &BiPoly) -> BiPoly {
        let xp = poly_powers(xs, self.max_x_degree());
        let yp = poly_powers(ys, self.max_y_degree());
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let term = (&xp[i as usize] * &yp[j as usize]).scale(c);
            out += &term;
        }
        out
    }

    /// The specialization `x := y`, done by merging exponents.
    pub fn x_as_y(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(0, i + j, c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Renders with custom symbol names, e.g. `("m", "j")`.
    pub fn format_with(&self, xname: &str, yname: &str) -> String {
        let terms = self.terms();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, t) in terms.iter().enumerate() {
            let negative = t.c.is_negative();
            let mag = t.c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (t.i == 0 && t.j == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [(xname, t.i), (yname, t.j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn powers(base: &BigInt, max: u32) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(max as usize + 1);
    v.push(BigInt::one());
    for k in 1..=max as usize {
        let next = &v[k - 1] * base;
        v.push(next);
    }
    v
}

fn poly_powers(base: &BiPoly, max: u32) -> Vec<BiPoly> {
    let mut v = Vec::with_capacity(max as usize + 1);
    v.push(BiPoly::one());
    for k in 1..=max as usize {
        let next = &v[k - 1] * base;
        v.push(next);
    }
    v
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x", "y"))
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(c)
    }
}

impl From<BigInt> for BiPoly {
    fn from(c: BigInt) -> Self {
        BiPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &'a BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl AddAssign<BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: BiPoly) {
        for ((i, j), c) in rhs.terms {
            self.add_term(i, j, c);
        }
    }
}

impl<'a> SubAssign<&'a BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &'a BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -c);
        }
    }
}

impl<'a, 'b> Add<&'b BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'b BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += rhs;
        self
    }
}

impl<'a, 'b> Sub<&'b BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'b BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: BiPoly) -> BiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<'a> Neg for &'a BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.clone().neg()
    }
}

// Dense accumulation up to this many cells; the triangle entries are dense
// in their bounding box, so this covers nearly every product in practice.
const DENSE_LIMIT: usize = 1 << 20;

impl<'a, 'b> Mul<&'b BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'b BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let width = (self.max_y_degree() + rhs.max_y_degree() + 1) as usize;
        let height = (self.max_x_degree() + rhs.max_x_degree() + 1) as usize;
        if width.saturating_mul(height) <= DENSE_LIMIT {
            let mut acc = vec![BigInt::zero(); width * height];
            for (&(ai, aj), ac) in &self.terms {
                for (&(bi, bj), bc) in &rhs.terms {
                    acc[(ai + bi) as usize * width + (aj + bj) as usize] += ac * bc;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| (((idx / width) as u32, (idx % width) as u32), c))
                .collect();
            BiPoly { terms }
        } else {
            let mut out = BiPoly::zero();
            for (&(ai, aj), ac) in &self.terms {
                for (&(bi, bj), bc) in &rhs.terms {
                    out.add_term(ai + bi, aj + bj, ac * bc);
                }
            }
            out
        }
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    i: u32,
    j: u32,
    c: String,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .into_iter()
            .map(|t| TermJson { i: t.i, j: t.j, c: t.c.to_string() })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for t in raw {
            let c = BigInt::from_str(&t.c).map_err(|e| D::Error::custom(format!("coefficient {:?}: {e}", t.c)))?;
            terms.push(Term { i: t.i, j: t.j, c });
        }
        Ok(BiPoly::from_terms(terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial {input:?}: {reason}")]
pub struct ParsePolyError {
    input: String,
    reason: String,
}

impl FromStr for BiPoly {
    type Err = ParsePolyError;

    /// Parses the text form produced by `Display`, e.g. `x^2 - 2*x*y + 3`.
    /// Factors within a term may repeat (`x*x`), and whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| ParsePolyError { input: s.to_string(), reason: reason.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        let mut out = BiPoly::zero();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if pos != 0 {
                return Err(fail("expected '+' or '-' between terms"));
            }
            let end = compact[pos..].find(['+', '-']).map_or(compact.len(), |e| pos + e);
            let body = &compact[pos..end];
            if body.is_empty() {
                return Err(fail("empty term"));
            }
            let mut coeff = BigInt::one();
            let (mut i, mut j) = (0u32, 0u32);
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| fail("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "x" => i += exp,
                    "y" => j += exp,
                    digits => {
                        let v = BigInt::from_str(digits).map_err(|_| fail("bad factor"))?;
                        coeff *= num_traits::pow(v, exp as usize);
                    }
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(i, j, coeff);
            pos = end;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("x + y") + &p("x - y"), p("2*x"));
        assert_eq!(&(&p("x^2 + 1") + &p("2*x")) + &p("y"), p("x^2 + 2*x + y + 1"));
        assert_eq!(&p("x^3 + 5") + &BiPoly::zero(), p("x^3 + 5"));
        assert!((&p("x*y") - &p("x*y")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x + y") * &BiPoly::one(), p("x + y"));
        assert_eq!(&BiPoly::x() * &BiPoly::x(), p("x^2"));
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    }

    #[test]
    fn eval_examples() {
        let q = p("x^2 + 1");
        assert_eq!(q.eval_i64(1, 2), BigInt::from(2));
        assert_eq!(q.eval_i64(3, 2), BigInt::from(10));
        assert_eq!(p("4*x*y - 7").eval_i64(0, 0), BigInt::from(-7));
    }

    #[test]
    fn display_is_graded_lex() {
        let q = &(&p("3") + &p("3*y^2")) + &(&p("2*x*y") + &p("x^2"));
        assert_eq!(q.to_string(), "x^2 + 2*x*y + 3*y^2 + 3");
        assert_eq!(p("-x + y^3").to_string(), "y^3 - x");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("x").format_with("m", "j"), "m");
    }

    #[test]
    fn json_form() {
        let q = p("x^2 + 2*x*y + 3*y^2 + 3");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(
            json,
            r#"[{"i":2,"j":0,"c":"1"},{"i":1,"j":1,"c":"2"},{"i":0,"j":2,"c":"3"},{"i":0,"j":0,"c":"3"}]"#
        );
        let back: BiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        let big: BiPoly = serde_json::from_str(r#"[{"i":0,"j":0,"c":"123456789012345678901234567890"}]"#).unwrap();
        assert_eq!(big.coeff(0, 0).to_string(), "123456789012345678901234567890");
        assert!(serde_json::from_str::<BiPoly>(r#"[{"i":0,"j":0,"c":"1.5"}]"#).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<BiPoly>().is_err());
        assert!("x^".parse::<BiPoly>().is_err());
        assert!("z".parse::<BiPoly>().is_err());
        assert!("x++y".parse::<BiPoly>().is_err());
    }

    #[test]
    fn substitution() {
        let q = p("x^2 + x*y + 1");
        assert_eq!(q.x_as_y(), p("2*y^2 + 1"));
        assert_eq!(q.substitute(&BiPoly::y(), &BiPoly::y()), q.x_as_y());
        assert_eq!(q.substitute(&p("y + 1"), &BiPoly::y()), p("2*y^2 + 3*y + 2"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("4*x + 2").div_exact(&BigInt::from(2)), Some(p("2*x + 1")));
        assert_eq!(p("4*x + 3").div_exact(&BigInt::from(2)), None);
    }

    fn arb_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..5, 0u32..5, -20i64..20), 0..8)
            .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(i, j, c)| Term { i, j, c: c.into() })))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), x0 in -6i64..6, y0 in -6i64..6) {
            let (xb, yb) = (BigInt::from(x0), BigInt::from(y0));
            prop_assert_eq!((&a * &b).eval(&xb, &yb), a.eval(&xb, &yb) * b.eval(&xb, &yb));
            prop_assert_eq!((&a + &b).eval(&xb, &yb), a.eval(&xb, &yb) + b.eval(&xb, &yb));
        }

        #[test]
        fn text_and_json_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<BiPoly>().unwrap(), a.clone());
            let json = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<BiPoly>(&json).unwrap(), a);
        }
    }
}
