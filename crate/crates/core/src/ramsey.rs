//! Rule table for Ramsey numbers `r(left, right)` of the tree families.
//!
//! Every rule is evaluated against the query. Rules whose family pattern
//! matches append their hypothesis checks to the trace; the first rule in
//! [`PRIORITY`] whose hypotheses all hold decides the answer. All rules that
//! produce an answer must agree (their intervals must intersect, and every
//! lower end must respect the maximum-degree bound), otherwise the query
//! reports an internal consistency error.
//!
//! Queries are evaluated in the order given; `r(G1, G2) = r(G2, G1)` is not
//! used to move a query onto a rule stated for the swapped pair.

use std::fmt;

use serde::Serialize;

use crate::constructions::{frobenius_rep, plan_descriptor};
use crate::error::{Error, Result};
use crate::graph::{choose2, WitnessDescriptor};
use crate::trees::{Family, TreeSpec};
use crate::turan::ex_value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Two stars.
    StarStar,
    /// Star against a smaller-or-larger tprime, `n > m >= 4`.
    StarTprime,
    /// Star against tstar, `n > m >= 6`.
    StarTstar,
    /// Star against a spider of the same order: `2n-3`.
    StarSpiderEqual,
    /// Two spiders of the same order.
    SpiderSpiderEqual,
    /// Spider against tprime or tstar of the same order: `2n-5`.
    SpiderBroomEqual,
    /// Path on `n-s` vertices against a spider on `n`, `s <= 3`: `2n-7`.
    PathSpider,
    /// tprime against a spider, adjacent order or `n >= max(m+2, 19-m)`.
    TprimeSpider,
    /// Spider or tstar of order `m` against a spider of order `m+1`: `2m-5`.
    SpiderSpiderAdjacent,
    /// Any tree against a star with `(m-1) | (n-2)`: `m+n-2`.
    TreeStarDivisible,
    /// Spider against tprime with `(m-1) | (n-3)`: `m+n-3`.
    SpiderTprimeDivisible,
    /// Against a spider with `(m-1) | (n-4)`: `m+n-4`.
    TreeSpiderDivisible,
    /// Spider against a star with `(m-1)` not dividing `n-2`.
    SpiderStar,
    /// Any non-star tree against a star, `n = k(m-1)+b`, `b != 2`. Stars are
    /// excluded: the bound `m+n-3` is false for them (e.g. `r(star:4, star:10)
    /// = 12`).
    TreeStar,
    /// Spider against a larger tprime or tstar with `(m-1)` not dividing `n-3`.
    SpiderBroom,
    /// Star against a larger spider.
    StarSpider,
    /// Path, tstar or spider against a larger spider with `(m-1)` not
    /// dividing `n-4`.
    TreeSpider,
    /// No exact rule applies; maximum-degree lower bound only.
    MaxDegreeBound,
}

/// Evaluation order; earlier rules are more specific.
pub const PRIORITY: [Rule; 17] = [
    Rule::StarStar,
    Rule::StarTprime,
    Rule::StarTstar,
    Rule::StarSpiderEqual,
    Rule::SpiderSpiderEqual,
    Rule::SpiderBroomEqual,
    Rule::PathSpider,
    Rule::TprimeSpider,
    Rule::SpiderSpiderAdjacent,
    Rule::TreeStarDivisible,
    Rule::SpiderTprimeDivisible,
    Rule::TreeSpiderDivisible,
    Rule::SpiderStar,
    Rule::TreeStar,
    Rule::SpiderBroom,
    Rule::StarSpider,
    Rule::TreeSpider,
];

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::StarStar => "star-star",
            Rule::StarTprime => "star-tprime",
            Rule::StarTstar => "star-tstar",
            Rule::StarSpiderEqual => "star-spider-equal",
            Rule::SpiderSpiderEqual => "spider-spider-equal",
            Rule::SpiderBroomEqual => "spider-broom-equal",
            Rule::PathSpider => "path-spider",
            Rule::TprimeSpider => "tprime-spider",
            Rule::SpiderSpiderAdjacent => "spider-spider-adjacent",
            Rule::TreeStarDivisible => "tree-star-divisible",
            Rule::SpiderTprimeDivisible => "spider-tprime-divisible",
            Rule::TreeSpiderDivisible => "tree-spider-divisible",
            Rule::SpiderStar => "spider-star",
            Rule::TreeStar => "tree-star",
            Rule::SpiderBroom => "spider-broom",
            Rule::StarSpider => "star-spider",
            Rule::TreeSpider => "tree-spider",
            Rule::MaxDegreeBound => "max-degree-bound",
        }
    }

    /// The upper bound behind this rule is the Turán-sum criterion
    /// ([`ramsey_upper_via_turan`]) applied at the rule's upper end.
    pub fn upper_via_turan(self) -> bool {
        matches!(
            self,
            Rule::SpiderSpiderEqual
                | Rule::SpiderBroomEqual
                | Rule::PathSpider
                | Rule::TprimeSpider
                | Rule::SpiderSpiderAdjacent
                | Rule::TreeSpiderDivisible
                | Rule::StarSpider
                | Rule::TreeSpider
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bound {
    Exact {
        value: u64,
    },
    Range {
        lo: u64,
        hi: u64,
    },
    /// Only a lower bound is known, if any.
    Unknown {
        lo: Option<u64>,
    },
}

impl Bound {
    /// The proven lower end; what a witness must certify.
    pub fn lower(&self) -> Option<u64> {
        match *self {
            Bound::Exact { value } => Some(value),
            Bound::Range { lo, .. } => Some(lo),
            Bound::Unknown { lo } => lo,
        }
    }

    pub fn upper(&self) -> Option<u64> {
        match *self {
            Bound::Exact { value } => Some(value),
            Bound::Range { hi, .. } => Some(hi),
            Bound::Unknown { .. } => None,
        }
    }

    fn interval(&self) -> (u64, u64) {
        (self.lower().unwrap_or(0), self.upper().unwrap_or(u64::MAX))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exact { value } => write!(f, "{value}"),
            Bound::Range { lo, hi } => write!(f, "{lo}..={hi}"),
            Bound::Unknown { lo: Some(lo) } => write!(f, ">= {lo}"),
            Bound::Unknown { lo: None } => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub rule: Rule,
    pub condition: String,
    pub holds: bool,
}

/// How a witness for the lower end of a rule is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "recipe", rename_all = "kebab-case")]
pub enum WitnessPlan {
    /// Maximum-degree construction for the given bound mode.
    Degree { mode: DegreeMode },
    /// `copies` disjoint cliques of order `size`.
    Cliques { copies: usize, size: usize },
    /// `x K_{m-1} u y K_{m-2}` from a two-coin representation.
    TwoCliqueSizes { m: usize },
    /// Complement of `copies` cliques of order `size`.
    ComplementOfCliques { copies: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyAnswer {
    pub left: TreeSpec,
    pub right: TreeSpec,
    #[serde(flatten)]
    pub bound: Bound,
    pub rule: Rule,
    pub trace: Vec<Check>,
    /// Set for open cases with a conjectured value; never an exact claim.
    pub note: Option<String>,
    pub plan: Option<WitnessPlan>,
    pub witness: Option<WitnessDescriptor>,
}

struct Outcome {
    rule: Rule,
    bound: Bound,
    plan: Option<WitnessPlan>,
    note: Option<String>,
}

struct Eval {
    left: TreeSpec,
    right: TreeSpec,
    trace: Vec<Check>,
}

impl Eval {
    fn check(&mut self, rule: Rule, condition: impl Into<String>, holds: bool) -> bool {
        self.trace.push(Check { rule, condition: condition.into(), holds });
        holds
    }

    /// Record every check (no short-circuit) and report whether all hold.
    fn all(&mut self, rule: Rule, checks: &[(&str, bool)]) -> bool {
        checks.iter().fold(true, |acc, &(c, h)| self.check(rule, c, h) && acc)
    }

    fn rule(&mut self, rule: Rule) -> Option<Outcome> {
        let (lf, m) = (self.left.family, self.left.n as u64);
        let (rf, n) = (self.right.family, self.right.n as u64);
        let exact =
            |value: u64, plan| Outcome { rule, bound: Bound::Exact { value }, plan, note: None };
        let divides = |a: u64, b: u64| a != 0 && b.is_multiple_of(a);
        match rule {
            Rule::StarStar => {
                if lf != Family::Star || rf != Family::Star {
                    return None;
                }
                if !self.all(rule, &[("m >= 3", m >= 3), ("n >= 3", n >= 3)]) {
                    return None;
                }
                let odd = self.check(rule, "m*n odd", (m * n) % 2 == 1);
                let value = if odd { m + n - 3 } else { m + n - 2 };
                Some(exact(value, Some(WitnessPlan::Degree { mode: DegreeMode::Parity })))
            }
            Rule::StarTprime => {
                if lf != Family::Star || rf != Family::Tprime {
                    return None;
                }
                if !self.all(rule, &[("n > m", n > m), ("m >= 4", m >= 4)]) {
                    return None;
                }
                let even = self.check(rule, "2 | m(n-1)", (m * (n - 1)) % 2 == 0);
                let value = if even { m + n - 3 } else { m + n - 4 };
                Some(exact(value, Some(WitnessPlan::Degree { mode: DegreeMode::Parity })))
            }
            Rule::StarTstar => {
                if lf != Family::Star || rf != Family::Tstar {
                    return None;
                }
                if !self.all(rule, &[("n > m", n > m), ("m >= 6", m >= 6)]) {
                    return None;
                }
                if self.check(rule, "(m-1) | (n-3)", divides(m - 1, n - 3)) {
                    let copies = ((n - 3) / (m - 1) + 1) as usize;
                    let plan = WitnessPlan::Cliques { copies, size: m as usize - 1 };
                    Some(exact(m + n - 3, Some(plan)))
                } else {
                    Some(exact(m + n - 4, None))
                }
            }
            Rule::StarSpiderEqual => {
                if lf != Family::Star || !rf.is_spider() {
                    return None;
                }
                if !self.all(rule, &[("m = n", m == n), ("n >= 4", n >= 4)]) {
                    return None;
                }
                let plan = WitnessPlan::ComplementOfCliques { copies: 2, size: n as usize - 2 };
                Some(exact(2 * n - 3, Some(plan)))
            }
            Rule::SpiderSpiderEqual => {
                if !lf.is_spider() || !rf.is_spider() || !self.check(rule, "m = n", m == n) {
                    return None;
                }
                let plan = Some(WitnessPlan::Degree { mode: DegreeMode::Parity });
                if self.check(rule, "n odd and n >= 17", n % 2 == 1 && n >= 17) {
                    Some(exact(2 * n - 7, plan))
                } else if self.check(rule, "n even and n >= 12", n % 2 == 0 && n >= 12) {
                    Some(exact(2 * n - 6, plan))
                } else {
                    None
                }
            }
            Rule::SpiderBroomEqual => {
                if !lf.is_spider() || !matches!(rf, Family::Tprime | Family::Tstar) {
                    return None;
                }
                if !self.all(rule, &[("m = n", m == n), ("n >= 8", n >= 8)]) {
                    return None;
                }
                let plan = WitnessPlan::Cliques { copies: 2, size: n as usize - 3 };
                Some(exact(2 * n - 5, Some(plan)))
            }
            Rule::PathSpider => {
                if lf != Family::Path || !rf.is_spider() {
                    return None;
                }
                let s = n.checked_sub(m);
                if !self.check(rule, "m = n - s with s in {0,1,2,3}", matches!(s, Some(0..=3))) {
                    return None;
                }
                let min_n = [17, 13, 11, 8][s.unwrap() as usize];
                if !self.check(rule, format!("n >= {min_n} for s = {}", s.unwrap()), n >= min_n) {
                    return None;
                }
                let plan = WitnessPlan::Degree { mode: DegreeMode::SmallerFirst };
                Some(exact(2 * n - 7, Some(plan)))
            }
            Rule::TprimeSpider => {
                if lf != Family::Tprime || !rf.is_spider() {
                    return None;
                }
                if self.check(rule, "n = m + 1", n == m + 1) {
                    let plan = Some(WitnessPlan::Degree { mode: DegreeMode::Parity });
                    if self.check(rule, "m odd and m >= 9", m % 2 == 1 && m >= 9) {
                        return Some(exact(2 * m - 4, plan));
                    }
                    if self.check(rule, "m even and m >= 16", m % 2 == 0 && m >= 16) {
                        return Some(exact(2 * m - 5, plan));
                    }
                    return None;
                }
                let far = n >= (m + 2).max(19u64.saturating_sub(m));
                if self.all(
                    rule,
                    &[
                        ("m >= 7", m >= 7),
                        ("n >= max(m+2, 19-m)", far),
                        ("(m-1) does not divide (n-4)", !divides(m - 1, n - 4)),
                    ],
                ) {
                    Some(exact(m + n - 5, best_degree_plan(&self.left, &self.right)))
                } else {
                    None
                }
            }
            Rule::SpiderSpiderAdjacent => {
                if !matches!(lf, Family::T1 | Family::T2 | Family::Tstar) || !rf.is_spider() {
                    return None;
                }
                if !self.all(rule, &[("n = m + 1", n == m + 1), ("m >= 12", m >= 12)]) {
                    return None;
                }
                let plan = WitnessPlan::Degree { mode: DegreeMode::Parity };
                Some(exact(2 * m - 5, Some(plan)))
            }
            Rule::TreeStarDivisible => {
                if rf != Family::Star {
                    return None;
                }
                if !self.all(
                    rule,
                    &[("m >= 3", m >= 3), ("(m-1) | (n-2)", n >= 2 && divides(m - 1, n - 2))],
                ) {
                    return None;
                }
                let copies = ((n - 2) / (m - 1) + 1) as usize;
                let plan = WitnessPlan::Cliques { copies, size: m as usize - 1 };
                Some(exact(m + n - 2, Some(plan)))
            }
            Rule::SpiderTprimeDivisible => {
                if !lf.is_spider() || rf != Family::Tprime {
                    return None;
                }
                if !self.all(rule, &[("m >= 5", m >= 5), ("(m-1) | (n-3)", divides(m - 1, n - 3))])
                {
                    return None;
                }
                let copies = ((n - 3) / (m - 1) + 1) as usize;
                let plan = WitnessPlan::Cliques { copies, size: m as usize - 1 };
                Some(exact(m + n - 3, Some(plan)))
            }
            Rule::TreeSpiderDivisible => {
                let min_m = match lf {
                    Family::Tprime | Family::T1 | Family::T2 => 5,
                    Family::Tstar => 6,
                    // At m = 4 the Turán sum only ties C(p, 2); r(path:4, t1:7) = 8.
                    Family::Path => 5,
                    Family::Star => return None,
                };
                if !rf.is_spider() {
                    return None;
                }
                if !self.all(
                    rule,
                    &[
                        (&format!("m >= {min_m}"), m >= min_m),
                        ("n >= 7", n >= 7),
                        ("(m-1) | (n-4)", n >= 4 && divides(m - 1, n - 4)),
                    ],
                ) {
                    return None;
                }
                let copies = ((n - 4) / (m - 1) + 1) as usize;
                let plan = WitnessPlan::Cliques { copies, size: m as usize - 1 };
                Some(exact(m + n - 4, Some(plan)))
            }
            Rule::SpiderStar => {
                if !lf.is_spider() || rf != Family::Star {
                    return None;
                }
                if !self.all(
                    rule,
                    &[
                        ("n > m", n > m),
                        ("m >= 5", m >= 5),
                        ("(m-1) does not divide (n-2)", !divides(m - 1, n - 2)),
                    ],
                ) {
                    return None;
                }
                let large = self.check(rule, "n >= (m-3)^2 + 1", n > (m - 3) * (m - 3));
                let rep = frobenius_rep(m - 1, m - 2, m + n - 4).is_some();
                let rep = self.check(rule, "m+n-4 = (m-1)x + (m-2)y", rep);
                if large || rep {
                    let plan = WitnessPlan::TwoCliqueSizes { m: m as usize };
                    Some(exact(m + n - 3, Some(plan)))
                } else {
                    Some(Outcome {
                        rule,
                        bound: Bound::Range { lo: m + n - 4, hi: m + n - 3 },
                        plan: best_degree_plan(&self.left, &self.right),
                        note: None,
                    })
                }
            }
            Rule::TreeStar => {
                if rf != Family::Star
                    || !self.all(
                        rule,
                        &[
                            ("m >= 3", m >= 3),
                            ("left is not a star", self.left.max_degree() + 1 < self.left.n),
                        ],
                    )
                {
                    return None;
                }
                let (k, b) = (n / (m - 1), n % (m - 1));
                if !self.all(rule, &[("k >= 1", k >= 1), ("b != 2", b != 2)]) {
                    return None;
                }
                if self.check(rule, "k >= m - b", k + b >= m) {
                    let plan = WitnessPlan::TwoCliqueSizes { m: m as usize };
                    Some(exact(m + n - 3, Some(plan)))
                } else {
                    let (lo, mode) = best_degree_bound(&self.left, &self.right)?;
                    Some(Outcome {
                        rule,
                        bound: Bound::Range { lo, hi: m + n - 3 },
                        plan: Some(WitnessPlan::Degree { mode }),
                        note: None,
                    })
                }
            }
            Rule::SpiderBroom => {
                if !lf.is_spider() || !matches!(rf, Family::Tprime | Family::Tstar) {
                    return None;
                }
                if !self.all(
                    rule,
                    &[
                        ("n > m", n > m),
                        ("m >= 5", m >= 5),
                        ("(m-1) does not divide (n-3)", !divides(m - 1, n - 3)),
                    ],
                ) {
                    return None;
                }
                let (k, b) = (n / (m - 1), n % (m - 1));
                let (_q, a) = (n / (m - 2), n % (m - 2));
                let c1 = self.check(rule, "b in {1,2,4}", matches!(b, 1 | 2 | 4));
                let c2 = self.check(rule, "b = 0 and k >= 3", b == 0 && k >= 3);
                let c3 = self.check(rule, "n >= (m-3)^2 + 2", n >= (m - 3) * (m - 3) + 2);
                let c4 = self.check(
                    rule,
                    "n >= m^2 - 1 - b(m-2)",
                    n as i64 >= (m * m) as i64 - 1 - (b * (m - 2)) as i64,
                );
                let c5 = self.check(
                    rule,
                    "a >= 3 and n >= (a-4)(m-1) + 4",
                    a >= 3 && n as i64 >= (a as i64 - 4) * (m as i64 - 1) + 4,
                );
                if c1 || c2 || c3 || c4 || c5 {
                    let plan = Some(WitnessPlan::TwoCliqueSizes { m: m as usize });
                    Some(exact(m + n - 4, plan))
                } else {
                    let lo = if rf == Family::Tprime { m + n - 5 } else { m + n - 6 };
                    Some(Outcome {
                        rule,
                        bound: Bound::Range { lo, hi: m + n - 4 },
                        plan: best_degree_plan(&self.left, &self.right),
                        note: None,
                    })
                }
            }
            Rule::StarSpider => {
                if lf != Family::Star || !rf.is_spider() {
                    return None;
                }
                if !self.all(rule, &[("m >= 5", m >= 5), ("n >= 8", n >= 8), ("n > m", n > m)]) {
                    return None;
                }
                let plan = Some(WitnessPlan::Degree { mode: DegreeMode::Parity });
                if self.check(rule, "2 | m*n", (m * n) % 2 == 0) {
                    Some(exact(m + n - 4, plan))
                } else {
                    Some(Outcome {
                        rule,
                        bound: Bound::Range { lo: m + n - 5, hi: m + n - 4 },
                        plan,
                        note: Some(format!("conjectured value {} (open for odd m*n)", m + n - 4)),
                    })
                }
            }
            Rule::TreeSpider => {
                if !matches!(lf, Family::Path | Family::Tstar | Family::T1 | Family::T2)
                    || !rf.is_spider()
                {
                    return None;
                }
                let adjacent = n == m + 1 && n >= 12;
                let far = n >= (m + 2).max(19u64.saturating_sub(m));
                if !self.all(
                    rule,
                    &[
                        ("m >= 7", m >= 7),
                        ("(m-1) does not divide (n-4)", !divides(m - 1, n - 4)),
                        ("n = m+1 >= 12 or n >= max(m+2, 19-m)", adjacent || far),
                    ],
                ) {
                    return None;
                }
                let large = self.check(rule, "n >= (m-3)^2 + 3", n >= (m - 3) * (m - 3) + 3);
                let rep = frobenius_rep(m - 1, m - 2, m + n - 6).is_some();
                let rep = self.check(rule, "m+n-6 = (m-1)x + (m-2)y", rep);
                let cor = far && [2u64, 3, 5].iter().any(|&b| n >= b && (n - b) % (m - 1) == 0);
                let cor = self.check(rule, "(m-1) | (n-b) for b in {2,3,5}", cor);
                if large || rep || cor {
                    let plan = WitnessPlan::TwoCliqueSizes { m: m as usize };
                    Some(exact(m + n - 5, Some(plan)))
                } else {
                    let (lo, mode) = best_degree_bound(&self.left, &self.right)?;
                    Some(Outcome {
                        rule,
                        bound: Bound::Range { lo, hi: m + n - 5 },
                        plan: Some(WitnessPlan::Degree { mode }),
                        note: None,
                    })
                }
            }
            Rule::MaxDegreeBound => None,
        }
    }
}

/// Which maximum-degree lower bound to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeMode {
    /// `d1 + d2 - [ (d1-1)(d2-1) odd ]`.
    Parity,
    /// Left connected of order `m`, `d1 < d2 <= m`: `2 d2 - 1`.
    SmallerFirst,
    /// Left connected of order `m`, `d1 != m-1`, `d2 > m`: `d1 + d2`.
    LargerSecond,
}

/// Lower bound on `r(G1, G2)` from the maximum degrees `d1`, `d2` (both at
/// least 2). The caller vouches for the mode's structural hypotheses.
pub fn degree_lower_bound(d1: u64, d2: u64, mode: DegreeMode) -> Result<u64> {
    if d1 < 2 || d2 < 2 {
        return Err(Error::InvalidDegree(format!("need d1, d2 >= 2, got {d1}, {d2}")));
    }
    Ok(match mode {
        DegreeMode::Parity => d1 + d2 - ((d1 - 1) * (d2 - 1) % 2),
        DegreeMode::SmallerFirst => 2 * d2 - 1,
        DegreeMode::LargerSecond => d1 + d2,
    })
}

/// Largest maximum-degree bound whose hypotheses hold for the pair (trees are
/// connected, so only the degree conditions need checking).
pub fn best_degree_bound(left: &TreeSpec, right: &TreeSpec) -> Option<(u64, DegreeMode)> {
    let (d1, d2, m) = (left.max_degree() as u64, right.max_degree() as u64, left.n as u64);
    if d1 < 2 || d2 < 2 {
        return None;
    }
    let mut best = (degree_lower_bound(d1, d2, DegreeMode::Parity).ok()?, DegreeMode::Parity);
    if d1 < d2 && d2 <= m {
        let v = degree_lower_bound(d1, d2, DegreeMode::SmallerFirst).ok()?;
        if v > best.0 {
            best = (v, DegreeMode::SmallerFirst);
        }
    }
    if d1 + 1 != m && d2 > m {
        let v = degree_lower_bound(d1, d2, DegreeMode::LargerSecond).ok()?;
        if v > best.0 {
            best = (v, DegreeMode::LargerSecond);
        }
    }
    Some(best)
}

fn best_degree_plan(left: &TreeSpec, right: &TreeSpec) -> Option<WitnessPlan> {
    best_degree_bound(left, right).map(|(_, mode)| WitnessPlan::Degree { mode })
}

/// Evaluate the rule table. The only error is an internal disagreement
/// between rules.
pub fn ramsey_value(left: TreeSpec, right: TreeSpec) -> Result<RamseyAnswer> {
    let mut eval = Eval { left, right, trace: Vec::new() };
    let outcomes: Vec<Outcome> = PRIORITY.iter().filter_map(|&r| eval.rule(r)).collect();
    let degree = best_degree_bound(&left, &right);

    for (i, a) in outcomes.iter().enumerate() {
        let (alo, ahi) = a.bound.interval();
        if let Some((d, _)) = degree {
            if ahi < d {
                return Err(Error::Inconsistent(format!(
                    "{} gives {} below the degree bound {d} for ({left}, {right})",
                    a.rule, a.bound
                )));
            }
        }
        for b in &outcomes[i + 1..] {
            let (blo, bhi) = b.bound.interval();
            if alo.max(blo) > ahi.min(bhi) {
                return Err(Error::Inconsistent(format!(
                    "{} gives {} but {} gives {} for ({left}, {right})",
                    a.rule, a.bound, b.rule, b.bound
                )));
            }
        }
    }

    let mut answer = match outcomes.into_iter().next() {
        Some(o) => RamseyAnswer {
            left,
            right,
            bound: o.bound,
            rule: o.rule,
            trace: eval.trace,
            note: o.note,
            plan: o.plan,
            witness: None,
        },
        None => RamseyAnswer {
            left,
            right,
            bound: Bound::Unknown { lo: degree.map(|d| d.0) },
            rule: Rule::MaxDegreeBound,
            trace: eval.trace,
            note: None,
            plan: degree.map(|(_, mode)| WitnessPlan::Degree { mode }),
            witness: None,
        },
    };
    if let (Some(plan), Some(lower)) = (answer.plan, answer.bound.lower()) {
        answer.witness = lower
            .checked_sub(1)
            .and_then(|order| plan_descriptor(plan, &left, &right, order as usize));
    }
    Ok(answer)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuranUpper {
    pub p: u64,
    pub ex_left: u64,
    pub ex_right: u64,
    pub pairs: u64,
    /// `ex_left + ex_right < C(p, 2)`, certifying `r(left, right) <= p`.
    pub holds: bool,
}

/// If `ex(p; left) + ex(p; right) < C(p, 2)` then every graph on `p` vertices
/// contains `left` or has a complement containing `right`.
pub fn ramsey_upper_via_turan(left: TreeSpec, right: TreeSpec, p: u64) -> Result<TuranUpper> {
    if p < left.n.max(right.n) as u64 {
        return Err(Error::OutsideDomain(format!(
            "p = {p} is below max(m, n) = {}",
            left.n.max(right.n)
        )));
    }
    let ex_left = ex_value(left.family, left.n, p)?.value;
    let ex_right = ex_value(right.family, right.n, p)?.value;
    let pairs = choose2(p);
    Ok(TuranUpper { p, ex_left, ex_right, pairs, holds: ex_left + ex_right < pairs })
}
