//! The identity catalogue.
//!
//! Four kinds of entry:
//!
//! - closed binomial sums, written in the [`formula`](super::formula) language;
//! - signed sums of adjacent 2x2 minors of a specialised weight triangle;
//! - row sums of the minor-sum transform of a classical triangle;
//! - the symbolic minor-sum theorems on the weight triangle itself.
//!
//! Every sum identity is written with its closed side on the left. Three
//! entries differ from the usually quoted forms and carry the corrected
//! version: the first-column family at `(1, 2)` uses the factor `2k+2l+3`,
//! the `(3, 2)` family at `m = n + 1` uses `8nk+10n+14k+16`, and
//! the two-row sum at `y = 2` has left side `C_{n+1} C_{n+2}`. The
//! uncorrected forms are kept in [`uncorrected_variants`] as negative
//! controls.

use super::coeffs::CoeffPoly;
use super::formula::build::*;
use super::formula::{Formula, Var};
use super::transform::{TransformParams, TriangleSource};
use super::{AltDet, AltSign, TheoremCheck};
use crate::triangle::Point;

/// Parameter ranges of a sum identity. `l` runs from [`L_MIN`] up to the
/// other parameter, covering the negative extension of the families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    N,
    M,
    NL,
    NML,
}

pub const L_MIN: i64 = -3;

impl Domain {
    pub fn live(self) -> &'static [Var] {
        match self {
            Domain::N => &[Var::N],
            Domain::M => &[Var::M],
            Domain::NL => &[Var::N, Var::L],
            Domain::NML => &[Var::N, Var::M, Var::L],
        }
    }
}

#[derive(Clone, Debug)]
pub enum Kind {
    Sum { formula: Formula, domain: Domain },
    AltDet(AltDet),
    Transform { source: TriangleSource, params: TransformParams, row_sum: Formula },
    Theorem(TheoremCheck),
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub id: &'static str,
    pub summary: &'static str,
    pub kind: Kind,
}

fn sum_id(id: &'static str, summary: &'static str, domain: Domain, formula: Formula) -> Identity {
    Identity { id, summary, kind: Kind::Sum { formula, domain } }
}

fn minor_sum_12(inner: &str) -> Formula {
    Formula::new(
        term(vec![f("l+1"), binom("2m+2", "m-l"), cat("n")], vec![f("m+1")]),
        sum_min(
            "0",
            "n+1",
            "m-l",
            vec![f("2k+1"), f(inner), poly(CoeffPoly::Alpha.poly()), binom("2n+3", "n-k+1"), binom("2m+3", "m-k-l")],
            vec![rf("2n+1", 3), rf("2m+1", 3)],
        ),
    )
}

fn minor_sum_32_above(inner: &str) -> Formula {
    Formula::new(
        term(vec![binom("2n+1", "n"), cat("n+2")], vec![]),
        sum("0", "n", vec![mono(inner), binom("2n+4", "n-k"), binom("2n+3", "n-k+1")], vec![rf("2n+2", 3)]),
    )
}

fn gap_two_22(lhs: Vec<crate::identities::formula::Atom>) -> Formula {
    Formula::new(
        term(lhs, vec![]),
        sum(
            "0",
            "n",
            vec![f("2k+2"), f("2k+3"), f("2k+4"), binom("2n+3", "n-k"), binom("2n+7", "n-k+2")],
            vec![f("2n+2"), f("2n+3"), f("2n+6"), f("2n+7")],
        ),
    )
}

pub(super) fn build() -> Vec<Identity> {
    let mut v = vec![
        sum_id(
            "minor-sum-12",
            "first-row minor sums of the (1,2) triangle",
            Domain::NML,
            minor_sum_12("2k+2l+3"),
        ),
        sum_id(
            "minor-sum-22",
            "first-row minor sums of the (2,2) triangle",
            Domain::NML,
            Formula::new(
                term(vec![f("l+1"), binom("2m+2", "m-l"), cat("n+1")], vec![f("m+1")]),
                sum_min(
                    "0",
                    "n+1",
                    "m-l",
                    vec![
                        f("2k+2"),
                        f("2k+2l+4"),
                        poly(CoeffPoly::Beta.poly()),
                        binom("2n+4", "n-k+1"),
                        binom("2m+4", "m-k-l"),
                    ],
                    vec![rf("2n+2", 3), rf("2m+2", 3)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-32",
            "first-row minor sums of the (3,2) triangle",
            Domain::NML,
            Formula::new(
                term(vec![f("l+1"), binom("2m+2", "m-l"), binom("2n+1", "n")], vec![f("m+1")]),
                sum_min(
                    "0",
                    "n+1",
                    "m-l",
                    vec![poly(CoeffPoly::Gamma.poly()), binom("2n+3", "n-k+1"), binom("2m+3", "m-k-l")],
                    vec![rf("2n+2", 2), rf("2m+2", 2)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-00",
            "first-row minor sums of the (0,0) triangle, even rows",
            Domain::NML,
            Formula::new(
                term(vec![f("2l+1"), binom("2m+1", "m-l"), cat("n")], vec![f("2m+1")]),
                sum_min(
                    "0",
                    "n+1",
                    "m-l",
                    vec![poly(CoeffPoly::Lambda.poly()), binom("2n+2", "n-k"), binom("2m+2", "m-k-l")],
                    vec![rf("2n+1", 2), rf("2m+1", 2)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-12-below",
            "C_{n+1}^2 from the (1,2) family at m = n-1",
            Domain::N,
            Formula::new(
                term(vec![cat("n+1"), cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+1"), f("2k+3"), mono("8nk+2n+10k+4"), binom("2n+2", "n-k"), binom("2n+5", "n-k+2")],
                    vec![rf("2n+1", 5)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-12-diag",
            "C_n C_{n+1} from the (1,2) family at m = n",
            Domain::N,
            Formula::new(
                term(vec![cat("n"), cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+1"), f("2k+2"), f("2k+3"), binom("2n+3", "n-k"), binom("2n+3", "n-k+1")],
                    vec![f("2n+1"), f("2n+2"), f("2n+3"), f("2n+3")],
                ),
            ),
        ),
        sum_id(
            "minor-sum-12-above",
            "C_n C_{n+2} from the (1,2) family at m = n+1",
            Domain::N,
            Formula::new(
                term(vec![cat("n"), cat("n+2")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+1"), f("2k+3"), mono("8nk+14n+10k+16"), binom("2n+2", "n-k"), binom("2n+5", "n-k+1")],
                    vec![rf("2n+1", 5)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-22-below",
            "C_{n+1} C_{n+2} from the (2,2) family at m = n-1",
            Domain::N,
            Formula::new(
                term(vec![cat("n+1"), cat("n+2")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+2"), f("2k+4"), mono("8nk+6n+14k+12"), binom("2n+3", "n-k"), binom("2n+6", "n-k+2")],
                    vec![rf("2n+2", 5)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-22-diag",
            "C_{n+1}^2 from the (2,2) family at m = n",
            Domain::N,
            Formula::new(
                term(vec![cat("n+1"), cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+2"), f("2k+3"), f("2k+4"), binom("2n+4", "n-k"), binom("2n+4", "n-k+1")],
                    vec![f("2n+2"), f("2n+3"), f("2n+4"), f("2n+4")],
                ),
            ),
        ),
        sum_id(
            "minor-sum-22-above",
            "C_{n+1} C_{n+2} from the (2,2) family at m = n+1",
            Domain::N,
            Formula::new(
                term(vec![cat("n+1"), cat("n+2")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+2"), f("2k+4"), mono("8nk+18n+14k+30"), binom("2n+3", "n-k"), binom("2n+6", "n-k+1")],
                    vec![rf("2n+2", 5)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-32-below",
            "binom(2n+3,n+1) C_{n+1} from the (3,2) family at m = n-1",
            Domain::N,
            Formula::new(
                term(vec![binom("2n+3", "n+1"), cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![mono("8nk+6n+14k+12"), binom("2n+3", "n-k"), binom("2n+4", "n-k+2")],
                    vec![rf("2n+2", 3)],
                ),
            ),
        ),
        sum_id(
            "minor-sum-32-diag",
            "binom(2n+1,n) C_{n+1} from the (3,2) family at m = n",
            Domain::N,
            Formula::new(
                term(vec![binom("2n+1", "n"), cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+2"), binom("2n+3", "n-k"), binom("2n+3", "n-k+1")],
                    vec![f("2n+2"), f("2n+3")],
                ),
            ),
        ),
        sum_id(
            "minor-sum-32-above",
            "binom(2n+1,n) C_{n+2} from the (3,2) family at m = n+1",
            Domain::N,
            minor_sum_32_above("8nk+10n+14k+16"),
        ),
        sum_id(
            "minor-sum-00-diag",
            "C_m^2 from the (0,0) family at n = m, l = 0",
            Domain::M,
            Formula::new(
                term(vec![cat("m"), cat("m")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![f("2k+2"), mono("4kk+8k-2m+2"), binom("2m+2", "m-k"), binom("2m+2", "m-k")],
                    vec![f("2m+1"), f("2m+2"), f("2m+2")],
                ),
            ),
        ),
        sum_id(
            "diag-ell-12",
            "the (1,2) family at m = n, any l",
            Domain::NL,
            Formula::new(
                term(vec![binom("2n+2", "n-l"), cat("n")], vec![f("n+1")]),
                sum(
                    "0",
                    "n-l",
                    vec![f("2k+1"), f("2k+l+2"), f("2k+2l+3"), binom("2n+3", "n-k-l"), binom("2n+3", "n-k+1")],
                    vec![f("2n+1"), f("2n+2"), f("2n+3"), f("2n+3")],
                ),
            ),
        ),
        sum_id(
            "diag-ell-22",
            "the (2,2) family at m = n, any l",
            Domain::NL,
            Formula::new(
                term(vec![binom("2n+2", "n-l"), cat("n+1")], vec![f("n+1")]),
                sum(
                    "0",
                    "n-l",
                    vec![f("2k+2"), f("2k+l+3"), f("2k+2l+4"), binom("2n+4", "n-k-l"), binom("2n+4", "n-k+1")],
                    vec![f("2n+2"), f("2n+3"), f("2n+4"), f("2n+4")],
                ),
            ),
        ),
        sum_id(
            "diag-ell-32",
            "the (3,2) family at m = n, any l",
            Domain::NL,
            Formula::new(
                term(vec![binom("2n+2", "n-l"), binom("2n+1", "n")], vec![f("n+1")]),
                sum(
                    "0",
                    "n-l",
                    vec![f("2k+l+2"), binom("2n+3", "n-k-l"), binom("2n+3", "n-k+1")],
                    vec![f("2n+2"), f("2n+3")],
                ),
            ),
        ),
        sum_id(
            "odd-cubes-squared",
            "sum (2k+1)^3 binom(2n+1,n-k)^2 / (2n+1)^2 = binom(2n,n)^2",
            Domain::N,
            Formula::new(
                term(vec![binom("2n", "n"), binom("2n", "n")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("2k+1"), f("2k+1"), f("2k+1"), binom("2n+1", "n-k"), binom("2n+1", "n-k")],
                    vec![f("2n+1"), f("2n+1")],
                ),
            ),
        ),
        sum_id(
            "cubes-squared",
            "sum (k+1)^3 binom(2n+2,n-k)^2 / (n+1)^2 = binom(2n,n) binom(2n+1,n)",
            Domain::N,
            Formula::new(
                term(vec![binom("2n", "n"), binom("2n+1", "n")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![f("k+1"), f("k+1"), f("k+1"), binom("2n+2", "n-k"), binom("2n+2", "n-k")],
                    vec![f("n+1"), f("n+1")],
                ),
            ),
        ),
        sum_id(
            "odd-linear-squared",
            "sum (2k+1) binom(2n+1,n-k)^2 / (2n+1) = binom(2n,n)^2",
            Domain::N,
            Formula::new(
                term(vec![binom("2n", "n"), binom("2n", "n")], vec![]),
                sum("0", "n", vec![f("2k+1"), binom("2n+1", "n-k"), binom("2n+1", "n-k")], vec![f("2n+1")]),
            ),
        ),
        sum_id(
            "deng-yan",
            "sum (2k+1)^2 binom(2n+1,n-k) / (2n+1) = 4^n",
            Domain::N,
            Formula::new(
                term(vec![pow(4, "n")], vec![]),
                sum("0", "n", vec![f("2k+1"), f("2k+1"), binom("2n+1", "n-k")], vec![f("2n+1")]),
            ),
        ),
        sum_id(
            "gap-two-22",
            "two-row diagonal minor sum of the (2,2) triangle",
            Domain::N,
            gap_two_22(vec![cat("n+1"), cat("n+2")]),
        ),
        sum_id(
            "odd-catalan-squares",
            "C_{2m+1} as a sum of squared Shapiro entries",
            Domain::M,
            Formula::new(
                term(vec![cat("2m+1")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![f("2j+2"), f("2j+2"), binom("2m+2", "m-j"), binom("2m+2", "m-j")],
                    vec![f("2m+2"), f("2m+2")],
                ),
            ),
        ),
        sum_id(
            "even-catalan-products",
            "C_{2m+2} as a sum of adjacent Shapiro products",
            Domain::M,
            Formula::new(
                term(vec![cat("2m+2")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![f("2j+2"), f("2j+2"), binom("2m+3", "m-j"), binom("2m+3", "m-j+1")],
                    vec![f("2m+2"), f("2m+3")],
                ),
            ),
        ),
        sum_id(
            "even-catalan-odd-weights",
            "C_{2m} as a sum of squared (1,2) entries",
            Domain::M,
            Formula::new(
                term(vec![cat("2m")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![f("2j+1"), f("2j+1"), binom("2m+1", "m-j"), binom("2m+1", "m-j")],
                    vec![f("2m+1"), f("2m+1")],
                ),
            ),
        ),
        sum_id(
            "squared-central-odd",
            "sum (j+1) binom(2m+2,m-j)^2 / (m+1) = binom(2m+1,m)^2",
            Domain::M,
            Formula::new(
                term(vec![binom("2m+1", "m"), binom("2m+1", "m")], vec![]),
                sum("0", "m", vec![f("j+1"), binom("2m+2", "m-j"), binom("2m+2", "m-j")], vec![f("m+1")]),
            ),
        ),
        sum_id(
            "cameron-nkwanta",
            "sum (j+1)^2 binom(2m+2,m-j) / (m+1) = 4^m",
            Domain::M,
            Formula::new(
                term(vec![pow(4, "m")], vec![]),
                sum("0", "m", vec![f("j+1"), f("j+1"), binom("2m+2", "m-j")], vec![f("m+1")]),
            ),
        ),
        sum_id(
            "alt-central-odd",
            "alternating squared Shapiro sum = binom(2m+1,m)",
            Domain::M,
            Formula::new(
                term(vec![binom("2m+1", "m")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![sign("j"), f("2j+2"), f("2j+2"), binom("2m+2", "m-j"), binom("2m+2", "m-j")],
                    vec![f("2m+2"), f("2m+2")],
                ),
            ),
        ),
        sum_id(
            "alt-central-even",
            "alternating adjacent Shapiro products = binom(2m+2,m+1)",
            Domain::M,
            Formula::new(
                term(vec![binom("2m+2", "m+1")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![sign("j"), f("2j+2"), f("2j+2"), binom("2m+3", "m-j"), binom("2m+3", "m-j+1")],
                    vec![f("2m+2"), f("2m+3")],
                ),
            ),
        ),
        sum_id(
            "alt-central",
            "alternating sum (2j+1) binom(2m+1,m-j)^2 / (2m+1) = binom(2m,m)",
            Domain::M,
            Formula::new(
                term(vec![binom("2m", "m")], vec![]),
                sum(
                    "0",
                    "m",
                    vec![sign("j"), f("2j+1"), binom("2m+1", "m-j"), binom("2m+1", "m-j")],
                    vec![f("2m+1")],
                ),
            ),
        ),
        sum_id(
            "alt-catalan-adjacent",
            "C_{n+1} as an alternating sum over adjacent (2,2) rows",
            Domain::N,
            Formula::new(
                term(vec![cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![sign("k"), f("2k+2"), f("2k+3"), f("2k+4"), binom("2n+4", "n-k"), binom("2n+4", "n-k+1")],
                    vec![f("2n+2"), f("2n+3"), f("2n+4"), f("2n+4")],
                ),
            ),
        ),
        sum_id(
            "alt-catalan-gap",
            "2 C_{n+1} as an alternating sum over (2,2) rows two apart",
            Domain::N,
            Formula::new(
                term(vec![int(2), cat("n+1")], vec![]),
                sum(
                    "0",
                    "n",
                    vec![sign("k"), f("2k+2"), f("2k+3"), f("2k+4"), binom("2n+3", "n-k"), binom("2n+7", "n-k+2")],
                    vec![f("2n+2"), f("2n+3"), f("2n+6"), f("2n+7")],
                ),
            ),
        ),
        Identity {
            id: "alt-det-00",
            summary: "signed adjacent-row minor sum of the (0,0) triangle = C_{n+1}",
            kind: Kind::AltDet(AltDet {
                point: Point::new(0, 0),
                gap: 1,
                sign: AltSign::NMinusK,
                rhs: term(vec![cat("n+1")], vec![]),
            }),
        },
        Identity {
            id: "alt-det-22-1",
            summary: "signed adjacent-row minor sum of the (2,2) triangle = C_{n+1}",
            kind: Kind::AltDet(AltDet {
                point: Point::new(2, 2),
                gap: 1,
                sign: AltSign::K,
                rhs: term(vec![cat("n+1")], vec![]),
            }),
        },
        Identity {
            id: "alt-det-22-2",
            summary: "signed gap-two minor sum of the (2,2) triangle = 4 C_{n+1}",
            kind: Kind::AltDet(AltDet {
                point: Point::new(2, 2),
                gap: 2,
                sign: AltSign::K,
                rhs: term(vec![int(4), cat("n+1")], vec![]),
            }),
        },
        Identity {
            id: "alt-det-11-1",
            summary: "signed adjacent-row minor sum of the Motzkin triangle = M_n",
            kind: Kind::AltDet(AltDet {
                point: Point::new(1, 1),
                gap: 1,
                sign: AltSign::NMinusK,
                rhs: term(vec![motzkin("n")], vec![]),
            }),
        },
        Identity {
            id: "alt-det-11-2",
            summary: "signed gap-two minor sum of the Motzkin triangle = 2 M_n",
            kind: Kind::AltDet(AltDet {
                point: Point::new(1, 1),
                gap: 2,
                sign: AltSign::NMinusK,
                rhs: term(vec![int(2), motzkin("n")], vec![]),
            }),
        },
        Identity {
            id: "pascal-narayana-adjacent",
            summary: "adjacent 2x2 minors of Pascal's triangle sum to C_{n+1}",
            kind: Kind::Transform {
                source: TriangleSource::Pascal,
                params: TransformParams { m: 1, r: 0, l: 1, p: 1 },
                row_sum: Formula::new(term(vec![cat("n+1")], vec![]), term(vec![], vec![])),
            },
        },
        Identity {
            id: "pascal-narayana-shifted",
            summary: "shifted 2x2 minors of Pascal's triangle sum to C_{n+1}",
            kind: Kind::Transform {
                source: TriangleSource::Pascal,
                params: TransformParams { m: 1, r: 1, l: 1, p: 1 },
                row_sum: Formula::new(term(vec![cat("n+1")], vec![]), term(vec![], vec![])),
            },
        },
        Identity {
            id: "shapiro-minor-row-sum",
            summary: "adjacent 2x2 minors of Shapiro's triangle sum to C_{n+1}^2",
            kind: Kind::Transform {
                source: TriangleSource::Shapiro,
                params: TransformParams { m: 1, r: 0, l: 1, p: 1 },
                row_sum: Formula::new(term(vec![cat("n+1"), cat("n+1")], vec![]), term(vec![], vec![])),
            },
        },
    ];
    v.extend([
        Identity {
            id: "general-minor-sum",
            summary: "weight-triangle minor sums over rows n, n+r+1 and m, m+r+1",
            kind: Kind::Theorem(TheoremCheck::GeneralMinorSum),
        },
        Identity {
            id: "general-minor-sum-total",
            summary: "the general minor sums added over l, against M(y+1, y)",
            kind: Kind::Theorem(TheoremCheck::GeneralMinorSumTotal),
        },
        Identity {
            id: "first-row-minor-sum",
            summary: "weight-triangle minor sums over adjacent rows, r = 0",
            kind: Kind::Theorem(TheoremCheck::FirstRow),
        },
        Identity {
            id: "two-row-diagonal",
            summary: "minor sums of the (y,y) triangle over rows n, n+2",
            kind: Kind::Theorem(TheoremCheck::TwoRowDiagonal),
        },
    ]);
    v
}

/// Forms that appear in print but fail; each must be caught by its sweep.
pub fn uncorrected_variants() -> Vec<Identity> {
    vec![
        sum_id(
            "minor-sum-12-uncorrected",
            "(1,2) family with the factor 2k+2l+1",
            Domain::NML,
            minor_sum_12("2k+2l+1"),
        ),
        sum_id(
            "minor-sum-32-above-uncorrected",
            "(3,2) family at m = n+1 with constant 6",
            Domain::N,
            minor_sum_32_above("8nk+10n+14k+6"),
        ),
        sum_id(
            "gap-two-22-uncorrected",
            "two-row (2,2) sum with left side C_n C_{n+1}",
            Domain::N,
            gap_two_22(vec![cat("n"), cat("n+1")]),
        ),
    ]
}
