//! Weighted partial Motzkin paths.
//!
//! A path is a sequence of `U = (1, 1)`, `D = (1, -1)` and `H = (1, 0)` steps
//! starting at the origin and never dipping below the axis. Up and down steps
//! weigh 1; a horizontal step weighs `x` on the axis and `y` above it.
//!
//! A step is *at level i* when its end point has height `i`. An up step is
//! R-visible when it is the last up step reaching its level and the path never
//! drops back below that level afterwards; a path ending at height `k` has
//! exactly `k` of them, one per level `1..=k`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::BiPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    H,
    D,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::U, Step::H, Step::D];

    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::H => 0,
            Step::D => -1,
        }
    }

    /// The mirror step used by path reversal: `U <-> D`, `H` fixed.
    pub fn mirrored(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::H => Step::H,
            Step::D => Step::U,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Step::U => 'U',
            Step::H => 'H',
            Step::D => 'D',
        }
    }

    fn from_symbol(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::U),
            'H' => Some(Step::H),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

/// Parses a bare step word such as `UHD`. The result need not be a valid path.
pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .map(|c| Step::from_symbol(c).ok_or_else(|| Error::InvalidPath(format!("unexpected step {c:?} in {s:?}"))))
        .collect()
}

pub fn format_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| s.symbol()).collect()
}

/// Reads the steps right to left, exchanging `U` and `D`.
pub fn reverse_steps(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| s.mirrored()).collect()
}

/// A path from `(0, 0)` to `(n, k)` that never goes below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartialMotzkinPath {
    steps: Vec<Step>,
}

impl PartialMotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i64;
        for (t, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(Error::InvalidPath(format!(
                    "{} drops below the axis at step {t}",
                    format_steps(&steps)
                )));
            }
        }
        Ok(PartialMotzkinPath { steps })
    }

    pub fn empty() -> Self {
        PartialMotzkinPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `h_0 = 0, h_1, ..., h_n`.
    pub fn heights(&self) -> Vec<i64> {
        let mut hs = Vec::with_capacity(self.steps.len() + 1);
        hs.push(0);
        let mut h = 0;
        for s in &self.steps {
            h += s.delta();
            hs.push(h);
        }
        hs
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// `(a, b)` where the weight is `x^a y^b`: horizontal steps on the axis
    /// and above it.
    pub fn weight_exponents(&self) -> (u32, u32) {
        let mut h = 0i64;
        let (mut base, mut high) = (0u32, 0u32);
        for s in &self.steps {
            h += s.delta();
            if *s == Step::H {
                if h == 0 {
                    base += 1;
                } else {
                    high += 1;
                }
            }
        }
        (base, high)
    }

    pub fn weight(&self) -> BiPoly {
        let (a, b) = self.weight_exponents();
        BiPoly::monomial(a, b, 1)
    }

    /// The reversed step word; generally not a path from the origin by itself.
    pub fn reversed_steps(&self) -> Vec<Step> {
        reverse_steps(&self.steps)
    }

    /// Indices of the R-visible up steps in path order.
    ///
    /// Right-to-left scan: an up step is R-visible iff every later height is
    /// at least the level it reaches.
    pub fn r_visible_ups(&self) -> Vec<usize> {
        let hs = self.heights();
        let mut suffix_min = *hs.last().unwrap();
        let mut out = Vec::new();
        for t in (0..self.steps.len()).rev() {
            let level = hs[t + 1];
            suffix_min = suffix_min.min(level);
            if self.steps[t] == Step::U && suffix_min >= level {
                out.push(t);
            }
        }
        out.reverse();
        out
    }

    /// Splits the path as `P0 U P1 U ... U Pk` at its `k >= 1` R-visible up
    /// steps. Every part is returned as a Motzkin path in its own frame.
    pub fn decompose(&self) -> Result<Vec<PartialMotzkinPath>> {
        let ups = self.r_visible_ups();
        if ups.is_empty() {
            return Err(Error::Domain(format!(
                "decomposition needs end height >= 1, {} ends on the axis",
                self
            )));
        }
        let mut parts = Vec::with_capacity(ups.len() + 1);
        let mut start = 0;
        for &u in &ups {
            parts.push(PartialMotzkinPath { steps: self.steps[start..u].to_vec() });
            start = u + 1;
        }
        parts.push(PartialMotzkinPath { steps: self.steps[start..].to_vec() });
        Ok(parts)
    }

    /// Inverse of [`decompose`](Self::decompose): joins the parts with up steps.
    pub fn recompose(parts: &[PartialMotzkinPath]) -> Result<PartialMotzkinPath> {
        let mut steps = Vec::new();
        for (idx, part) in parts.iter().enumerate() {
            if idx > 0 {
                steps.push(Step::U);
            }
            steps.extend_from_slice(&part.steps);
        }
        PartialMotzkinPath::new(steps)
    }
}

impl fmt::Display for PartialMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_steps(&self.steps))
    }
}

impl FromStr for PartialMotzkinPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PartialMotzkinPath::new(parse_steps(s)?)
    }
}

/// All paths of length `n` ending at height `k`, in lexicographic order of
/// step words with `U < H < D`. Empty when `k < 0` or `k > n`.
pub fn enumerate_paths(n: usize, k: i64) -> Vec<PartialMotzkinPath> {
    let mut out = Vec::new();
    if k < 0 || k > n as i64 {
        return out;
    }
    let mut buf = Vec::with_capacity(n);
    extend_paths(n, k, 0, &mut buf, &mut out);
    out
}

fn extend_paths(n: usize, target: i64, h: i64, buf: &mut Vec<Step>, out: &mut Vec<PartialMotzkinPath>) {
    if buf.len() == n {
        if h == target {
            out.push(PartialMotzkinPath { steps: buf.clone() });
        }
        return;
    }
    let left = (n - buf.len() - 1) as i64;
    for s in Step::ALL {
        let next = h + s.delta();
        if next < 0 || (target - next).abs() > left {
            continue;
        }
        buf.push(s);
        extend_paths(n, target, next, buf, out);
        buf.pop();
    }
}

/// Total weight of all paths of length `n` ending at height `k`, by brute
/// force. This is the independent oracle for the recurrence-built triangle.
pub fn set_weight(n: usize, k: i64) -> BiPoly {
    let mut total = BiPoly::zero();
    for p in enumerate_paths(n, k) {
        total += p.weight();
    }
    total
}

/// A path ending on the axis whose axis-level horizontal steps carry an
/// explicit mark: marked steps weigh 1, unmarked ones weigh `y`. This splits
/// an axis weight of `y + 1` into its two summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPath {
    path: PartialMotzkinPath,
    marks: BTreeSet<usize>,
}

impl MarkedPath {
    pub fn new(path: PartialMotzkinPath, marks: BTreeSet<usize>) -> Result<Self> {
        let hs = path.heights();
        for &idx in &marks {
            let ok = idx < path.len() && path.steps[idx] == Step::H && hs[idx + 1] == 0;
            if !ok {
                return Err(Error::InvalidPath(format!(
                    "mark {idx} on {path} is not a horizontal step on the axis"
                )));
            }
        }
        Ok(MarkedPath { path, marks })
    }

    pub fn path(&self) -> &PartialMotzkinPath {
        &self.path
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    /// Weight as a polynomial in `y`: marked steps contribute 1, every other
    /// horizontal step `y`.
    pub fn weight(&self) -> BiPoly {
        let (base, high) = self.path.weight_exponents();
        BiPoly::monomial(0, base + high - self.marks.len() as u32, 1)
    }

    /// Every marking of every path of length `n` that ends on the axis.
    pub fn enumerate(n: usize) -> Vec<MarkedPath> {
        let mut out = Vec::new();
        for path in enumerate_paths(n, 0) {
            let hs = path.heights();
            let axis: Vec<usize> = (0..path.len())
                .filter(|&t| path.steps[t] == Step::H && hs[t + 1] == 0)
                .collect();
            for mask in 0u64..(1u64 << axis.len()) {
                let marks = axis.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &t)| t).collect();
                out.push(MarkedPath { path: path.clone(), marks });
            }
        }
        out
    }
}

impl fmt::Display for MarkedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        write!(f, "{}|marks={}", self.path, marks.join(","))
    }
}

impl FromStr for MarkedPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (word, marks) = match s.split_once('|') {
            Some((w, rest)) => {
                let list = rest
                    .strip_prefix("marks=")
                    .ok_or_else(|| Error::InvalidPath(format!("expected `marks=` in {s:?}")))?;
                let marks = if list.is_empty() {
                    BTreeSet::new()
                } else {
                    list.split(',')
                        .map(|m| m.parse::<usize>().map_err(|_| Error::InvalidPath(format!("bad mark {m:?}"))))
                        .collect::<Result<_>>()?
                };
                (w, marks)
            }
            None => (s, BTreeSet::new()),
        };
        MarkedPath::new(word.parse()?, marks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> PartialMotzkinPath {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(PartialMotzkinPath::empty().weight(), BiPoly::one());
        assert_eq!(path("HH").weight(), poly("x^2"));
        assert_eq!(path("UHD").weight(), poly("y"));
        assert_eq!(path("HUHDH").weight(), poly("x^2*y"));
    }

    #[test]
    fn rejects_paths_below_axis() {
        assert!("D".parse::<PartialMotzkinPath>().is_err());
        assert!("UDD".parse::<PartialMotzkinPath>().is_err());
        assert!("UXD".parse::<PartialMotzkinPath>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_paths(0, 0), vec![PartialMotzkinPath::empty()]);
        assert_eq!(enumerate_paths(2, 0), vec![path("UD"), path("HH")]);
        let three_one = enumerate_paths(3, 1);
        assert_eq!(three_one.len(), 5);
        assert_eq!(set_weight(3, 1), poly("x^2 + x*y + y^2 + 2"));
        assert!(enumerate_paths(3, 4).is_empty());
        assert!(enumerate_paths(3, -1).is_empty());
    }

    #[test]
    fn set_weight_examples() {
        assert_eq!(set_weight(4, 2), poly("x^2 + 2*x*y + 3*y^2 + 3"));
        assert_eq!(set_weight(1, 1), BiPoly::one());
        assert_eq!(set_weight(4, 1), poly("x^3 + x^2*y + x*y^2 + y^3 + 3*x + 5*y"));
    }

    #[test]
    fn reversal() {
        assert_eq!(format_steps(&path("UUH").reversed_steps()), "HDD");
        assert_eq!(format_steps(&path("UHD").reversed_steps()), "UHD");
        for n in 0..=8 {
            for k in 0..=n as i64 {
                for p in enumerate_paths(n, k) {
                    assert_eq!(reverse_steps(&p.reversed_steps()), p.steps());
                }
            }
        }
    }

    #[test]
    fn r_visible_examples() {
        assert!(path("UD").r_visible_ups().is_empty());
        assert_eq!(path("UU").r_visible_ups(), vec![0, 1]);
        assert_eq!(path("UDU").r_visible_ups(), vec![2]);
        assert_eq!(path("UUDU").r_visible_ups(), vec![0, 3]);
    }

    /// Straight from the definition: the last up step reaching level `i`, for
    /// each level `i` up to the end height.
    fn r_visible_by_definition(p: &PartialMotzkinPath) -> Vec<usize> {
        let hs = p.heights();
        let end = p.end_height();
        let mut out: Vec<usize> = (0..p.len())
            .filter(|&t| p.steps()[t] == Step::U)
            .filter(|&t| hs[t + 1] <= end)
            .filter(|&t| !((t + 1)..p.len()).any(|s| p.steps()[s] == Step::U && hs[s + 1] == hs[t + 1]))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn r_visible_scan_matches_definition() {
        for n in 0..=10 {
            for k in 0..=n as i64 {
                for p in enumerate_paths(n, k) {
                    assert_eq!(p.r_visible_ups(), r_visible_by_definition(&p), "{p}");
                }
            }
        }
    }

    #[test]
    fn r_visible_count_is_end_height() {
        for n in 0..=12 {
            for k in 0..=n as i64 {
                for p in enumerate_paths(n, k) {
                    assert_eq!(p.r_visible_ups().len() as i64, k, "{p}");
                    assert!(p.heights().iter().all(|&h| h >= 0));
                }
            }
        }
    }

    #[test]
    fn weight_at_one_one_counts_paths() {
        for n in 0..=12 {
            for k in 0..=n as i64 {
                let count = enumerate_paths(n, k).len();
                assert_eq!(set_weight(n, k).eval_i64(1, 1), count.into());
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let parts = |s: &str| -> Vec<String> { path(s).decompose().unwrap().iter().map(|p| p.to_string()).collect() };
        assert_eq!(parts("UU"), vec!["", "", ""]);
        assert_eq!(parts("HU"), vec!["H", ""]);
        assert_eq!(parts("UDUH"), vec!["UD", "H"]);
        assert!(path("UD").decompose().is_err());
    }

    #[test]
    fn decomposition_round_trip() {
        for n in 1..=12 {
            for k in 1..=n as i64 {
                for p in enumerate_paths(n, k) {
                    let parts = p.decompose().unwrap();
                    assert_eq!(parts.len() as i64, k + 1);
                    assert!(parts.iter().all(|q| q.end_height() == 0), "{p}");
                    assert_eq!(PartialMotzkinPath::recompose(&parts).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn marked_paths() {
        let mp: MarkedPath = "HUDH|marks=0,3".parse().unwrap();
        assert_eq!(mp.to_string(), "HUDH|marks=0,3");
        assert_eq!(mp.weight(), BiPoly::one());
        let mp: MarkedPath = "HUHDH|marks=4".parse().unwrap();
        assert_eq!(mp.weight(), poly("y^2"));
        assert!("UHD|marks=1".parse::<MarkedPath>().is_err());
        assert!("HH|marks=2".parse::<MarkedPath>().is_err());
        assert_eq!("UD".parse::<MarkedPath>().unwrap().to_string(), "UD|marks=");
    }
}
