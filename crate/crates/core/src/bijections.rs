//! Weight-preserving bijections on partial Motzkin paths.
//!
//! - [`raise_marks`] / [`lower_visible_ups`]: paths ending on the axis whose
//!   axis-level `H` steps weigh `y + 1`, against paths of any end height with
//!   every `H` weighted `y`.
//! - [`phi_forward`] / [`phi_backward`]: the map behind the minor-sum theorem,
//!   between `A \ C` and `B` (see [`PhiParams`]).
//! - [`pair_with_reverse`] / [`split_at_middle`]: pairs of paths with equal length and
//!   end height against Motzkin paths of twice the length.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::BiPoly;
use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, format_steps, reverse_steps, MarkedPath, PartialMotzkinPath, Step};

const MAX_COUNTEREXAMPLES: usize = 10;

/// Replaces each marked axis `H` by `U`. The image ends at height `|marks|`.
pub fn raise_marks(mp: &MarkedPath) -> Result<PartialMotzkinPath> {
    if mp.path().end_height() != 0 {
        return Err(Error::Precondition(format!("{} does not end on the axis", mp.path())));
    }
    let mut steps = mp.path().steps().to_vec();
    for &i in mp.marks() {
        steps[i] = Step::U;
    }
    PartialMotzkinPath::new(steps)
}

/// Replaces each R-visible up step by a marked `H`.
pub fn lower_visible_ups(p: &PartialMotzkinPath) -> Result<MarkedPath> {
    let ups = p.r_visible_ups();
    let mut steps = p.steps().to_vec();
    for &i in &ups {
        steps[i] = Step::H;
    }
    let path = PartialMotzkinPath::new(steps)?;
    MarkedPath::new(path, ups.into_iter().collect())
}

/// Shape parameters `(n, m, r, l)` for the map `phi`.
///
/// With `k` and `j` free:
///
/// ```text
/// A: P in M_{n,k},       Q  in M_{m+r+1, k+l+1}
/// B: P* in M_{n+r+1,j},  Q* in M_{m, j+l+1}
/// C: pairs in A whose (k+1)-th R-visible up step of Q has index <= r
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhiParams {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub l: usize,
}

impl PhiParams {
    pub fn new(n: usize, m: usize, r: usize, l: usize) -> Self {
        PhiParams { n, m, r, l }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathPair {
    pub p: String,
    pub q: String,
}

/// Two paths, kept together with the parameters that classify them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiPair {
    pub p: PartialMotzkinPath,
    pub q: PartialMotzkinPath,
    pub params: PhiParams,
}

impl PhiPair {
    pub fn new(p: PartialMotzkinPath, q: PartialMotzkinPath, params: PhiParams) -> Self {
        PhiPair { p, q, params }
    }

    pub fn weight(&self) -> BiPoly {
        &self.p.weight() * &self.q.weight()
    }

    /// `Some(k)` when the pair lies in `A`.
    pub fn in_a(&self) -> Option<usize> {
        let PhiParams { n, m, r, l } = self.params;
        let k = self.p.end_height();
        let ok = self.p.len() == n && self.q.len() == m + r + 1 && self.q.end_height() == k + l as i64 + 1;
        ok.then_some(k as usize)
    }

    /// `Some(j)` when the pair lies in `B`.
    pub fn in_b(&self) -> Option<usize> {
        let PhiParams { n, m, r, l } = self.params;
        let j = self.p.end_height();
        let ok = self.p.len() == n + r + 1 && self.q.len() == m && self.q.end_height() == j + l as i64 + 1;
        ok.then_some(j as usize)
    }

    pub fn in_c(&self) -> bool {
        match self.in_a() {
            Some(k) => self.q.r_visible_ups()[k] <= self.params.r,
            None => false,
        }
    }

    fn display(&self) -> PathPair {
        PathPair { p: self.p.to_string(), q: self.q.to_string() }
    }
}

/// Moves the `r + 1` steps just before the `(k+1)`-th R-visible up step of `Q`
/// onto the end of `P`, reversed.
pub fn phi_forward(pair: &PhiPair) -> Result<PhiPair> {
    let k = pair
        .in_a()
        .ok_or_else(|| Error::Precondition(format!("({}, {}) is not in A for {:?}", pair.p, pair.q, pair.params)))?;
    let r = pair.params.r;
    let ups = pair.q.r_visible_ups();
    let u = *ups
        .get(k)
        .ok_or_else(|| Error::Precondition(format!("{} has no R-visible up step number {}", pair.q, k + 1)))?;
    if u <= r {
        return Err(Error::Precondition(format!(
            "({}, {}) is in C: only {u} steps precede the marked up step, need {}",
            pair.p,
            pair.q,
            r + 1
        )));
    }
    let q = pair.q.steps();
    let start = u - r - 1;
    let mut p_star = pair.p.steps().to_vec();
    p_star.extend(reverse_steps(&q[start..u]));
    let mut q_star = q[..start].to_vec();
    q_star.extend_from_slice(&q[u..]);
    Ok(PhiPair::new(PartialMotzkinPath::new(p_star)?, PartialMotzkinPath::new(q_star)?, pair.params))
}

/// Inverse of [`phi_forward`]: cuts the last `r + 1` steps off `P*` and inserts
/// them, reversed, just before the `(j+1)`-th R-visible up step of `Q*`.
pub fn phi_backward(pair: &PhiPair) -> Result<PhiPair> {
    let j = pair
        .in_b()
        .ok_or_else(|| Error::Precondition(format!("({}, {}) is not in B for {:?}", pair.p, pair.q, pair.params)))?;
    let n = pair.params.n;
    let (head, tail) = pair.p.steps().split_at(n);
    let ups = pair.q.r_visible_ups();
    let u = ups[j];
    let q = pair.q.steps();
    let mut q_new = q[..u].to_vec();
    q_new.extend(reverse_steps(tail));
    q_new.extend_from_slice(&q[u..]);
    let q_new = PartialMotzkinPath::new(q_new)
        .map_err(|e| Error::Precondition(format!("phi_backward produced an invalid path: {e}")))?;
    Ok(PhiPair::new(PartialMotzkinPath::new(head.to_vec())?, q_new, pair.params))
}

/// `P` followed by the reversal of `Q`.
pub fn pair_with_reverse(p: &PartialMotzkinPath, q: &PartialMotzkinPath) -> Result<PartialMotzkinPath> {
    if p.len() != q.len() || p.end_height() != q.end_height() {
        return Err(Error::Precondition(format!(
            "pairing needs equal lengths and end heights, got {p} and {q}"
        )));
    }
    let mut steps = p.steps().to_vec();
    steps.extend(q.reversed_steps());
    PartialMotzkinPath::new(steps)
}

/// Inverse of [`pair_with_reverse`]: halves a path of even length ending on the axis.
pub fn split_at_middle(path: &PartialMotzkinPath) -> Result<(PartialMotzkinPath, PartialMotzkinPath)> {
    if path.len() % 2 != 0 || path.end_height() != 0 {
        return Err(Error::Precondition(format!("{path} is not of even length ending on the axis")));
    }
    let (a, b) = path.steps().split_at(path.len() / 2);
    Ok((PartialMotzkinPath::new(a.to_vec())?, PartialMotzkinPath::new(reverse_steps(b))?))
}

/// Outcome of an exhaustive bijection check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub map: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    fn new(map: &str) -> Self {
        BijectionReport { map: map.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < MAX_COUNTEREXAMPLES {
            self.failures.push(msg);
        } else if self.failures.len() == MAX_COUNTEREXAMPLES {
            self.failures.push("further failures omitted".into());
        }
    }

    fn merge(mut self, other: BijectionReport) -> Self {
        self.checked += other.checked;
        for f in other.failures {
            self.fail(f);
        }
        self
    }
}

/// Both round trips for every input of length `<= max_n`, the end-height and
/// weight bookkeeping, and the weight identity
/// `sum over marked paths = sum_l M_{n,l}(y, y)`.
pub fn check_mark_raising(max_n: usize) -> BijectionReport {
    (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut rep = BijectionReport::new("mark-raising");
            let mut marked_total = BiPoly::zero();
            for mp in MarkedPath::enumerate(n) {
                rep.checked += 1;
                marked_total += mp.weight();
                match raise_marks(&mp) {
                    Ok(p) => {
                        if p.end_height() != mp.marks().len() as i64 {
                            rep.fail(format!("{mp}: image {p} ends at {}", p.end_height()));
                        }
                        if p.weight().x_as_y() != mp.weight() {
                            rep.fail(format!("{mp}: weight not preserved by {p}"));
                        }
                        match lower_visible_ups(&p) {
                            Ok(back) if back == mp => {}
                            Ok(back) => rep.fail(format!("{mp} -> {p} -> {back}")),
                            Err(e) => rep.fail(format!("{mp} -> {p}: {e}")),
                        }
                    }
                    Err(e) => rep.fail(format!("{mp}: {e}")),
                }
            }
            let mut image_total = BiPoly::zero();
            for l in 0..=n as i64 {
                for p in enumerate_paths(n, l) {
                    rep.checked += 1;
                    image_total += p.weight().x_as_y();
                    match lower_visible_ups(&p).and_then(|mp| raise_marks(&mp)) {
                        Ok(again) if again == p => {}
                        Ok(again) => rep.fail(format!("{p} -> {again}")),
                        Err(e) => rep.fail(format!("{p}: {e}")),
                    }
                }
            }
            if marked_total != image_total {
                rep.fail(format!("n={n}: marked weight {marked_total} != image weight {image_total}"));
            }
            rep
        })
        .reduce(|| BijectionReport::new("mark-raising"), BijectionReport::merge)
}

/// All of `A`, split into `C` and its complement.
pub fn enumerate_a(params: PhiParams) -> Vec<PhiPair> {
    let PhiParams { n, m, r, l } = params;
    let mut out = Vec::new();
    for k in 0..=n {
        let qs = enumerate_paths(m + r + 1, (k + l + 1) as i64);
        for p in enumerate_paths(n, k as i64) {
            for q in &qs {
                out.push(PhiPair::new(p.clone(), q.clone(), params));
            }
        }
    }
    out
}

pub fn enumerate_b(params: PhiParams) -> Vec<PhiPair> {
    let PhiParams { n, m, r, l } = params;
    let mut out = Vec::new();
    for j in 0..=n + r + 1 {
        let qs = enumerate_paths(m, (j + l + 1) as i64);
        for p in enumerate_paths(n + r + 1, j as i64) {
            for q in &qs {
                out.push(PhiPair::new(p.clone(), q.clone(), params));
            }
        }
    }
    out
}

/// Total weight of `C`, by enumeration.
pub fn weight_of_c(params: PhiParams) -> BiPoly {
    let mut total = BiPoly::zero();
    for pair in enumerate_a(params).into_iter().filter(PhiPair::in_c) {
        total += pair.weight();
    }
    total
}

/// Exhaustive check of `phi` at one parameter tuple: forward lands in `B`,
/// preserves weight and is undone by backward; backward lands in `A \ C` and
/// is undone by forward; `|A \ C| = |B|`.
pub fn check_phi_at(params: PhiParams) -> BijectionReport {
    let mut rep = BijectionReport::new("phi");
    let mut image = HashSet::new();
    let mut outside_c = 0usize;
    for pair in enumerate_a(params) {
        if pair.in_c() {
            if phi_forward(&pair).is_ok() {
                rep.fail(format!("{params:?}: forward accepted {:?} from C", pair.display()));
            }
            continue;
        }
        outside_c += 1;
        rep.checked += 1;
        match phi_forward(&pair) {
            Ok(fwd) => {
                if fwd.in_b().is_none() {
                    rep.fail(format!("{params:?}: {:?} -> {:?} not in B", pair.display(), fwd.display()));
                }
                if fwd.weight() != pair.weight() {
                    rep.fail(format!("{params:?}: {:?} changes weight", pair.display()));
                }
                match phi_backward(&fwd) {
                    Ok(back) if back == pair => {}
                    Ok(back) => rep.fail(format!("{params:?}: {:?} -> {:?}", pair.display(), back.display())),
                    Err(e) => rep.fail(format!("{params:?}: {e}")),
                }
                image.insert((fwd.p, fwd.q));
            }
            Err(e) => rep.fail(format!("{params:?}: {:?}: {e}", pair.display())),
        }
    }
    let b = enumerate_b(params);
    if b.len() != outside_c || image.len() != outside_c {
        rep.fail(format!("{params:?}: |A\\C| = {outside_c}, |B| = {}, |image| = {}", b.len(), image.len()));
    }
    for pair in b {
        rep.checked += 1;
        match phi_backward(&pair) {
            Ok(back) => {
                if back.in_a().is_none() || back.in_c() {
                    rep.fail(format!("{params:?}: backward {:?} not in A \\ C", pair.display()));
                }
                match phi_forward(&back) {
                    Ok(again) if again == pair => {}
                    Ok(again) => rep.fail(format!("{params:?}: {:?} -> {:?}", pair.display(), again.display())),
                    Err(e) => rep.fail(format!("{params:?}: {e}")),
                }
            }
            Err(e) => rep.fail(format!("{params:?}: {:?}: {e}", pair.display())),
        }
    }
    rep
}

/// [`check_phi_at`] over `n, m <= max_nm`, `r <= max_r`, `l <= max_l`.
pub fn check_phi(max_nm: usize, max_r: usize, max_l: usize) -> BijectionReport {
    let mut grid = Vec::new();
    for n in 0..=max_nm {
        for m in 0..=max_nm {
            for r in 0..=max_r {
                for l in 0..=max_l {
                    grid.push(PhiParams::new(n, m, r, l));
                }
            }
        }
    }
    grid.into_par_iter()
        .map(check_phi_at)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(BijectionReport::new("phi"), BijectionReport::merge)
}

/// The pairing is injective, onto `M_{2m,0}` and weight preserving, for every
/// `m <= max_m`.
pub fn check_pairing(max_m: usize) -> BijectionReport {
    let mut rep = BijectionReport::new("pairing");
    for m in 0..=max_m {
        let mut image = BTreeSet::new();
        let mut pairs = 0usize;
        for j in 0..=m as i64 {
            let paths = enumerate_paths(m, j);
            for p in &paths {
                for q in &paths {
                    pairs += 1;
                    rep.checked += 1;
                    match pair_with_reverse(p, q) {
                        Ok(w) => {
                            if w.weight() != &p.weight() * &q.weight() {
                                rep.fail(format!("({p}, {q}) -> {w} changes weight"));
                            }
                            match split_at_middle(&w) {
                                Ok((a, b)) if &a == p && &b == q => {}
                                _ => rep.fail(format!("({p}, {q}) -> {w} does not split back")),
                            }
                            image.insert(w);
                        }
                        Err(e) => rep.fail(format!("({p}, {q}): {e}")),
                    }
                }
            }
        }
        let target: BTreeSet<_> = enumerate_paths(2 * m, 0).into_iter().collect();
        if image.len() != pairs {
            rep.fail(format!("m={m}: {pairs} pairs but {} distinct images", image.len()));
        }
        if image != target {
            rep.fail(format!("m={m}: image is not all of M_(2m,0) ({} vs {})", image.len(), target.len()));
        }
    }
    rep
}

/// Parses `P,Q` into a pair, e.g. `U,HUU`.
pub fn parse_pair(s: &str, params: PhiParams) -> Result<PhiPair> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| Error::InvalidPath(format!("expected `P,Q`, got {s:?}")))?;
    let empty = |w: &str| if w == "e" || w.is_empty() { String::new() } else { w.to_string() };
    Ok(PhiPair::new(empty(p.trim()).parse()?, empty(q.trim()).parse()?, params))
}

/// Step word for display, with `e` for the empty path.
pub fn show(p: &PartialMotzkinPath) -> String {
    if p.is_empty() {
        "e".into()
    } else {
        format_steps(p.steps())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::WeightTriangle;

    fn path(s: &str) -> PartialMotzkinPath {
        s.parse().unwrap()
    }

    fn marked(s: &str) -> MarkedPath {
        s.parse().unwrap()
    }

    #[test]
    fn mark_raising_examples() {
        assert_eq!(raise_marks(&marked("HH|marks=0,1")).unwrap(), path("UU"));
        assert_eq!(raise_marks(&marked("UD|marks=")).unwrap(), path("UD"));
        assert_eq!(raise_marks(&marked("HUD|marks=0")).unwrap(), path("UUD"));
        assert_eq!(lower_visible_ups(&path("UU")).unwrap(), marked("HH|marks=0,1"));
        assert_eq!(lower_visible_ups(&path("UD")).unwrap(), marked("UD|marks="));
        assert_eq!(lower_visible_ups(&path("UUD")).unwrap(), marked("HUD|marks=0"));
    }

    #[test]
    fn mark_raising_round_trips() {
        let rep = check_mark_raising(8);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn marked_weight_is_shifted_first_column() {
        let tri = WeightTriangle::build(10);
        let ys = BiPoly::y();
        let shifted = &ys + &BiPoly::one();
        for n in 0..=10usize {
            let total = MarkedPath::enumerate(n).iter().fold(BiPoly::zero(), |acc, mp| acc + mp.weight());
            assert_eq!(total, tri.entry(n as i64, 0).substitute(&shifted, &ys));
        }
    }

    #[test]
    fn phi_first_example() {
        let params = PhiParams::new(0, 1, 0, 0);
        let pair = PhiPair::new(PartialMotzkinPath::empty(), path("HU"), params);
        let fwd = phi_forward(&pair).unwrap();
        assert_eq!((fwd.p.clone(), fwd.q.clone()), (path("H"), path("U")));
        assert_eq!(fwd.weight(), BiPoly::x());
        assert_eq!(phi_backward(&fwd).unwrap(), pair);
    }

    #[test]
    fn phi_second_example() {
        let params = PhiParams::new(1, 2, 0, 0);
        let pair = PhiPair::new(path("U"), path("HUU"), params);
        let fwd = phi_forward(&pair).unwrap();
        assert_eq!((fwd.p.clone(), fwd.q.clone()), (path("UD"), path("HU")));
        assert_eq!(fwd.in_b(), Some(0));
        assert_eq!(phi_backward(&fwd).unwrap(), pair);
    }

    #[test]
    fn phi_rejects_c() {
        // U* is the first step of Q, so no r + 1 steps precede it.
        let pair = PhiPair::new(PartialMotzkinPath::empty(), path("UH"), PhiParams::new(0, 1, 0, 0));
        assert!(pair.in_c());
        assert!(matches!(phi_forward(&pair), Err(Error::Precondition(_))));
        // Prefix of length exactly r before U*.
        let pair = PhiPair::new(PartialMotzkinPath::empty(), path("HU"), PhiParams::new(0, 0, 1, 0));
        assert!(pair.in_c());
        assert!(phi_forward(&pair).is_err());
    }

    #[test]
    fn phi_small_sweep() {
        let rep = check_phi(3, 1, 1);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn c_weight_matches_the_right_hand_side() {
        let tri = WeightTriangle::build(12);
        let diag = tri.diagonal_weights();
        for (n, m, r, l) in [(0, 0, 0, 0), (1, 2, 1, 0), (2, 2, 2, 1), (2, 3, 1, 2)] {
            let mut rhs = BiPoly::zero();
            for i in 0..=r as i64 {
                rhs += tri.entry(n as i64 + i, 0) * diag.entry((m + r) as i64 - i, l as i64);
            }
            assert_eq!(weight_of_c(PhiParams::new(n, m, r, l)), rhs, "{n} {m} {r} {l}");
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair_with_reverse(&path("U"), &path("U")).unwrap(), path("UD"));
        assert!(pair_with_reverse(&path("U"), &path("H")).is_err());
        let (p, q) = split_at_middle(&path("UHHD")).unwrap();
        assert_eq!((p, q), (path("UH"), path("UH")));
        let pairs: usize = (0..=2).map(|j| enumerate_paths(2, j).len().pow(2)).sum();
        assert_eq!(pairs, 9);
        assert_eq!(enumerate_paths(4, 0).len(), 9);
    }

    #[test]
    fn pairing_bijective() {
        let rep = check_pairing(5);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn pair_parsing() {
        let pair = parse_pair("e,HU", PhiParams::new(0, 1, 0, 0)).unwrap();
        assert!(pair.p.is_empty());
        assert_eq!(show(&pair.p), "e");
        assert!(parse_pair("UU", PhiParams::new(0, 1, 0, 0)).is_err());
    }
}
