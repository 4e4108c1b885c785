//! A small expression language for hypergeometric-style identities.
//!
//! A side of an identity is a product of atoms (affine factors, binomials,
//! Catalan numbers, rising factorials, powers, signs) divided by another such
//! product, optionally summed over `k` between two bounds. Everything is
//! affine in the free parameters `n, m, l` and the summation index `k`, which
//! makes it possible to enumerate single-coefficient mutations of a formula
//! and check that the sweeps catch every one of them.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{binomial, catalan, int_pow, rising_factorial, BigInt, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    N,
    M,
    L,
    K,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::N, Var::M, Var::L, Var::K];

    fn index(self) -> usize {
        self as usize
    }

    fn symbol(self) -> char {
        match self {
            Var::N => 'n',
            Var::M => 'm',
            Var::L => 'l',
            Var::K => 'k',
        }
    }

    fn from_symbol(c: char) -> Option<Var> {
        match c {
            'n' => Some(Var::N),
            'm' => Some(Var::M),
            'l' => Some(Var::L),
            'k' | 'j' => Some(Var::K),
            _ => None,
        }
    }
}

/// Values of the parameters at one instance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Env {
    pub n: i64,
    pub m: i64,
    pub l: i64,
    pub k: i64,
}

impl Env {
    pub fn get(&self, v: Var) -> i64 {
        match v {
            Var::N => self.n,
            Var::M => self.m,
            Var::L => self.l,
            Var::K => self.k,
        }
    }

    pub fn with_k(self, k: i64) -> Env {
        Env { k, ..self }
    }
}

/// Affine form `c_n n + c_m m + c_l l + c_k k + c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Lin {
    coeffs: [i64; 4],
    constant: i64,
}

impl Lin {
    pub fn constant(c: i64) -> Lin {
        Lin { coeffs: [0; 4], constant: c }
    }

    pub fn eval(&self, env: &Env) -> i64 {
        Var::ALL.iter().map(|&v| self.coeffs[v.index()] * env.get(v)).sum::<i64>() + self.constant
    }

    pub fn coeff(&self, v: Var) -> i64 {
        self.coeffs[v.index()]
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    pub fn uses(&self, v: Var) -> bool {
        self.coeffs[v.index()] != 0
    }

    /// Every form obtained by adding 1 to one coefficient of a variable in
    /// `live` or to the constant.
    fn mutations(&self, live: &[Var]) -> Vec<Lin> {
        let mut out = Vec::new();
        for &v in live {
            let mut l = *self;
            l.coeffs[v.index()] += 1;
            out.push(l);
        }
        let mut l = *self;
        l.constant += 1;
        out.push(l);
        out
    }
}

/// Parses forms such as `2n+2l+3`, `m-k-l`, `-1`, `j-1` (`j` is read as `k`).
impl FromStr for Lin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Lin> {
        let bad = || Error::Domain(format!("cannot parse affine form {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Lin::default();
        let mut chars = compact.chars().peekable();
        while chars.peek().is_some() {
            let mut sign = 1;
            if let Some(&c) = chars.peek() {
                if c == '+' || c == '-' {
                    sign = if c == '-' { -1 } else { 1 };
                    chars.next();
                }
            }
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let var = match chars.peek() {
                Some(&c) if c.is_ascii_alphabetic() => {
                    chars.next();
                    Some(Var::from_symbol(c).ok_or_else(bad)?)
                }
                _ => None,
            };
            let magnitude: i64 = if digits.is_empty() {
                if var.is_none() {
                    return Err(bad());
                }
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            match var {
                Some(v) => out.coeffs[v.index()] += sign * magnitude,
                None => out.constant += sign * magnitude,
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for v in Var::ALL {
            let c = self.coeffs[v.index()];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if wrote { "+" } else { "" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}{}", v.symbol())?;
            } else {
                write!(f, "{sign}{mag}{}", v.symbol())?;
            }
            wrote = true;
        }
        if self.constant != 0 || !wrote {
            if wrote {
                let sign = if self.constant < 0 { "-" } else { "+" };
                write!(f, "{sign}{}", self.constant.abs())?;
            } else {
                write!(f, "{}", self.constant)?;
            }
        }
        Ok(())
    }
}

/// Shorthand for registry literals; panics on malformed input.
pub fn lin(s: &str) -> Lin {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

/// A polynomial written as `sum c_i * prod_j L_ij` with affine `L_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<(i64, Vec<Lin>)>,
}

impl Poly {
    pub fn new(terms: Vec<(i64, Vec<Lin>)>) -> Self {
        Poly { terms }
    }

    /// Builds from `(coefficient, [factor, ...])` pairs written as text.
    pub fn from_factors(terms: &[(i64, &[&str])]) -> Self {
        Poly { terms: terms.iter().map(|(c, fs)| (*c, fs.iter().map(|s| lin(s)).collect())).collect() }
    }

    /// Parses a sum of monomials such as `8nk+2n+10k+4`.
    pub fn monomials(s: &str) -> Self {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let mono = &body[..end];
            rest = &body[end..];
            let split = mono.find(|c: char| !c.is_ascii_digit()).unwrap_or(mono.len());
            let coeff: i64 = if split == 0 { 1 } else { mono[..split].parse().expect("monomial coefficient") };
            let factors = mono[split..]
                .chars()
                .map(|c| {
                    let v = Var::from_symbol(c).unwrap_or_else(|| panic!("unknown variable {c:?} in {s:?}"));
                    let mut l = Lin::default();
                    l.coeffs[v.index()] = 1;
                    l
                })
                .collect();
            terms.push((sign * coeff, factors));
        }
        Poly { terms }
    }

    pub fn eval(&self, env: &Env) -> BigInt {
        self.terms
            .iter()
            .map(|(c, fs)| fs.iter().fold(BigInt::from(*c), |acc, l| acc * l.eval(env)))
            .sum()
    }

    fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(_, fs)| fs.iter().any(|l| l.uses(v)))
    }

    fn mutations(&self, live: &[Var]) -> Vec<Poly> {
        let mut out = Vec::new();
        for (i, (c, fs)) in self.terms.iter().enumerate() {
            let mut p = self.clone();
            p.terms[i].0 = c + 1;
            out.push(p);
            for (j, l) in fs.iter().enumerate() {
                for mutated in l.mutations(live) {
                    let mut p = self.clone();
                    p.terms[i].1[j] = mutated;
                    out.push(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, fs)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if mag != 1 || fs.is_empty() {
                parts.push(mag.to_string());
            }
            parts.extend(fs.iter().map(|l| {
                let s = l.to_string();
                if s.len() == 1 {
                    s
                } else {
                    format!("({s})")
                }
            }));
            f.write_str(&parts.join(""))?;
        }
        Ok(())
    }
}

/// One factor of a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Int(i64),
    Lin(Lin),
    Poly(Poly),
    Binom(Lin, Lin),
    Catalan(Lin),
    /// `(x)_k` with a fixed length.
    Rising(Lin, u32),
    /// `base^e`
    Pow(i64, Lin),
    /// `(-1)^e`
    Sign(Lin),
    /// Motzkin number, computed as `sum_i C(n, 2i) C_i`.
    Motzkin(Lin),
}

fn motzkin_number(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!("Motzkin number M_{n}")));
    }
    let mut total = BigInt::zero();
    for i in 0..=n / 2 {
        total += binomial(n, 2 * i)? * catalan(i)?;
    }
    Ok(total)
}

impl Atom {
    pub fn eval(&self, env: &Env) -> Result<BigInt> {
        Ok(match self {
            Atom::Int(c) => BigInt::from(*c),
            Atom::Lin(l) => BigInt::from(l.eval(env)),
            Atom::Poly(p) => p.eval(env),
            Atom::Binom(a, b) => binomial(a.eval(env), b.eval(env))?,
            Atom::Catalan(a) => catalan(a.eval(env))?,
            Atom::Rising(a, len) => rising_factorial(a.eval(env), *len),
            Atom::Pow(base, e) => int_pow(*base, e.eval(env))?,
            Atom::Sign(e) => BigInt::from(if e.eval(env).rem_euclid(2) == 0 { 1 } else { -1 }),
            Atom::Motzkin(a) => motzkin_number(a.eval(env))?,
        })
    }

    fn uses(&self, v: Var) -> bool {
        match self {
            Atom::Int(_) => false,
            Atom::Lin(l) | Atom::Catalan(l) | Atom::Rising(l, _) | Atom::Pow(_, l) | Atom::Sign(l) | Atom::Motzkin(l) => {
                l.uses(v)
            }
            Atom::Poly(p) => p.uses(v),
            Atom::Binom(a, b) => a.uses(v) || b.uses(v),
        }
    }

    fn mutations(&self, live: &[Var]) -> Vec<Atom> {
        match self {
            Atom::Int(c) => vec![Atom::Int(c + 1)],
            Atom::Lin(l) => l.mutations(live).into_iter().map(Atom::Lin).collect(),
            Atom::Poly(p) => p.mutations(live).into_iter().map(Atom::Poly).collect(),
            Atom::Binom(a, b) => {
                let mut out: Vec<Atom> = a.mutations(live).into_iter().map(|x| Atom::Binom(x, *b)).collect();
                out.extend(b.mutations(live).into_iter().map(|x| Atom::Binom(*a, x)));
                out
            }
            Atom::Catalan(l) => l.mutations(live).into_iter().map(Atom::Catalan).collect(),
            Atom::Rising(l, len) => {
                let mut out: Vec<Atom> = l.mutations(live).into_iter().map(|x| Atom::Rising(x, *len)).collect();
                out.push(Atom::Rising(*l, len + 1));
                out
            }
            Atom::Pow(b, l) => {
                let mut out: Vec<Atom> = l.mutations(live).into_iter().map(|x| Atom::Pow(*b, x)).collect();
                out.push(Atom::Pow(b + 1, *l));
                out
            }
            Atom::Sign(l) => l.mutations(live).into_iter().map(Atom::Sign).collect(),
            Atom::Motzkin(l) => l.mutations(live).into_iter().map(Atom::Motzkin).collect(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(c) => write!(f, "{c}"),
            Atom::Lin(l) => write!(f, "({l})"),
            Atom::Poly(p) => write!(f, "({p})"),
            Atom::Binom(a, b) => write!(f, "binom({a}, {b})"),
            Atom::Catalan(a) => write!(f, "C[{a}]"),
            Atom::Rising(a, len) => write!(f, "({a})_{len}"),
            Atom::Pow(b, e) => write!(f, "{b}^({e})"),
            Atom::Sign(e) => write!(f, "(-1)^({e})"),
            Atom::Motzkin(a) => write!(f, "Motzkin[{a}]"),
        }
    }
}

/// `prod(num) / prod(den)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Product {
    pub num: Vec<Atom>,
    pub den: Vec<Atom>,
}

impl Product {
    pub fn new(num: Vec<Atom>, den: Vec<Atom>) -> Self {
        Product { num, den }
    }

    pub fn eval(&self, env: &Env) -> Result<Rational> {
        let mut num = BigInt::from(1);
        for a in &self.num {
            num *= a.eval(env)?;
            if num.is_zero() {
                return Ok(Rational::zero());
            }
        }
        let mut den = BigInt::from(1);
        for a in &self.den {
            den *= a.eval(env)?;
        }
        if den.is_zero() {
            return Err(Error::Domain(format!("zero denominator in {self} at {env:?}")));
        }
        Ok(Rational::new(num, den))
    }

    fn uses(&self, v: Var) -> bool {
        self.num.iter().chain(&self.den).any(|a| a.uses(v))
    }

    fn mutations(&self, live: &[Var]) -> Vec<Product> {
        let mut out = Vec::new();
        for (i, a) in self.num.iter().enumerate() {
            for m in a.mutations(live) {
                let mut p = self.clone();
                p.num[i] = m;
                out.push(p);
            }
        }
        for (i, a) in self.den.iter().enumerate() {
            for m in a.mutations(live) {
                let mut p = self.clone();
                p.den[i] = m;
                out.push(p);
            }
        }
        out
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |atoms: &[Atom]| atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
        let num = if self.num.is_empty() { "1".to_string() } else { join(&self.num) };
        if self.den.is_empty() {
            f.write_str(&num)
        } else {
            write!(f, "{num} / [{}]", join(&self.den))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Lin(Lin),
    Min(Lin, Lin),
}

impl Bound {
    pub fn eval(&self, env: &Env) -> i64 {
        match self {
            Bound::Lin(l) => l.eval(env),
            Bound::Min(a, b) => a.eval(env).min(b.eval(env)),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Lin(l) => write!(f, "{l}"),
            Bound::Min(a, b) => write!(f, "min({a}, {b})"),
        }
    }
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Term(Product),
    Sum { lower: Lin, upper: Bound, term: Product },
}

impl Side {
    pub fn eval(&self, env: &Env) -> Result<Rational> {
        match self {
            Side::Term(p) => p.eval(env),
            Side::Sum { lower, upper, term } => {
                let mut acc = Rational::zero();
                for k in lower.eval(env)..=upper.eval(env) {
                    acc += term.eval(&env.with_k(k))?;
                }
                Ok(acc)
            }
        }
    }

    fn uses(&self, v: Var) -> bool {
        match self {
            Side::Term(p) | Side::Sum { term: p, .. } => p.uses(v),
        }
    }

    fn mutations(&self, live: &[Var]) -> Vec<Side> {
        match self {
            Side::Term(p) => p.mutations(live).into_iter().map(Side::Term).collect(),
            Side::Sum { lower, upper, term } => {
                // The k-coefficient is only meaningful inside sums.
                let mut live = live.to_vec();
                live.push(Var::K);
                term.mutations(&live)
                    .into_iter()
                    .map(|t| Side::Sum { lower: *lower, upper: *upper, term: t })
                    .collect()
            }
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Term(p) => write!(f, "{p}"),
            Side::Sum { lower, upper, term } => write!(f, "sum_{{k={lower}..{upper}}} {term}"),
        }
    }
}

/// `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub lhs: Side,
    pub rhs: Side,
}

impl Formula {
    pub fn new(lhs: Side, rhs: Side) -> Self {
        Formula { lhs, rhs }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.lhs.uses(v) || self.rhs.uses(v)
    }

    /// Single-coefficient mutations outside the summation bounds. `live` lists
    /// the free parameters that actually vary over the identity's domain.
    pub fn mutations(&self, live: &[Var]) -> Vec<Formula> {
        let mut out: Vec<Formula> =
            self.lhs.mutations(live).into_iter().map(|s| Formula::new(s, self.rhs.clone())).collect();
        out.extend(self.rhs.mutations(live).into_iter().map(|s| Formula::new(self.lhs.clone(), s)));
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Builders used by the registry.
pub mod build {
    use super::*;

    pub fn int(c: i64) -> Atom {
        Atom::Int(c)
    }

    pub fn f(s: &str) -> Atom {
        Atom::Lin(lin(s))
    }

    pub fn binom(a: &str, b: &str) -> Atom {
        Atom::Binom(lin(a), lin(b))
    }

    pub fn cat(a: &str) -> Atom {
        Atom::Catalan(lin(a))
    }

    pub fn rf(a: &str, len: u32) -> Atom {
        Atom::Rising(lin(a), len)
    }

    pub fn pow(base: i64, e: &str) -> Atom {
        Atom::Pow(base, lin(e))
    }

    pub fn sign(e: &str) -> Atom {
        Atom::Sign(lin(e))
    }

    pub fn motzkin(a: &str) -> Atom {
        Atom::Motzkin(lin(a))
    }

    pub fn poly(p: Poly) -> Atom {
        Atom::Poly(p)
    }

    pub fn mono(s: &str) -> Atom {
        Atom::Poly(Poly::monomials(s))
    }

    pub fn term(num: Vec<Atom>, den: Vec<Atom>) -> Side {
        Side::Term(Product::new(num, den))
    }

    pub fn sum(lower: &str, upper: &str, num: Vec<Atom>, den: Vec<Atom>) -> Side {
        Side::Sum { lower: lin(lower), upper: Bound::Lin(lin(upper)), term: Product::new(num, den) }
    }

    pub fn sum_min(lower: &str, a: &str, b: &str, num: Vec<Atom>, den: Vec<Atom>) -> Side {
        Side::Sum { lower: lin(lower), upper: Bound::Min(lin(a), lin(b)), term: Product::new(num, den) }
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    #[test]
    fn lin_parse_and_display() {
        let l = lin("2n+2l+3");
        assert_eq!(l.eval(&Env { n: 1, m: 0, l: 2, k: 0 }), 9);
        assert_eq!(l.to_string(), "2n+2l+3");
        assert_eq!(lin("m-k-l").to_string(), "m-l-k");
        assert_eq!(lin("-1").to_string(), "-1");
        assert_eq!(lin("j-1"), lin("k-1"));
        assert_eq!(lin("0").to_string(), "0");
        assert!("2x+1".parse::<Lin>().is_err());
        assert!("".parse::<Lin>().is_err());
        assert!("+".parse::<Lin>().is_err());
    }

    #[test]
    fn monomial_parse() {
        let p = Poly::monomials("8nk+2n+10k+4");
        assert_eq!(p.eval(&Env { n: 2, m: 0, l: 0, k: 3 }), BigInt::from(48 + 4 + 30 + 4));
        let q = Poly::monomials("-2nk+1");
        assert_eq!(q.eval(&Env { n: 1, m: 0, l: 0, k: 1 }), BigInt::from(-1));
    }

    #[test]
    fn deng_yan_by_hand() {
        let id = Formula::new(
            term(vec![pow(4, "n")], vec![]),
            sum("0", "n", vec![f("2k+1"), f("2k+1"), binom("2n+1", "n-k")], vec![f("2n+1")]),
        );
        let env = Env { n: 1, ..Env::default() };
        assert_eq!(id.lhs.eval(&env).unwrap(), Rational::from_integer(4.into()));
        assert_eq!(id.rhs.eval(&env).unwrap(), Rational::from_integer(4.into()));
    }

    #[test]
    fn sign_and_motzkin_atoms() {
        let env = Env { n: 4, ..Env::default() };
        assert_eq!(sign("n+1").eval(&env).unwrap(), BigInt::from(-1));
        assert_eq!(motzkin("n").eval(&env).unwrap(), BigInt::from(9));
        assert!(cat("n-5").eval(&env).is_err());
        assert!(binom("n-5", "0").eval(&env).is_err());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let p = Product::new(vec![int(1)], vec![f("n-4")]);
        assert!(p.eval(&Env { n: 4, ..Env::default() }).is_err());
    }

    #[test]
    fn mutations_touch_only_live_variables() {
        let side = term(vec![f("n+1")], vec![]);
        let ms = Formula::new(side.clone(), side).mutations(&[Var::N]);
        // n-coefficient and constant on each side.
        assert_eq!(ms.len(), 4);
    }
}
