//! Exhaustive checks at small orders: Turán numbers by branch and bound over
//! isomorphism-free enumeration, Ramsey arrowing by searching for a
//! counterexample graph, and the small structural bounds behind the spider
//! formulas.
//!
//! Budgets are enforced before any search starts; a search that runs past its
//! time limit fails rather than returning a partial answer.

pub mod canon;
pub mod enumerate;

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::containment::{contains, is_connected};
use crate::error::{Error, Result};
use crate::graph::{choose2, encode_graph6, Graph, VertexSet};
use crate::trees::{make_tree, Family};
use enumerate::{check_deadline, next_level};

/// Environment variable overriding [`OracleBudget::max_order`].
pub const MAX_ORDER_ENV: &str = "TRT_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub max_order: usize,
    pub max_coloring_order: usize,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_order: 9, max_coloring_order: 8, time_limit: None }
    }
}

impl OracleBudget {
    /// Defaults, with `max_order` taken from `TRT_MAX_ORDER` when set.
    pub fn from_env() -> Result<Self> {
        let mut b = OracleBudget::default();
        if let Ok(v) = std::env::var(MAX_ORDER_ENV) {
            b.max_order = v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{MAX_ORDER_ENV} must be a count, got {v:?}"))
            })?;
        }
        Ok(b)
    }

    fn deadline(&self) -> Option<Instant> {
        self.time_limit.map(|t| Instant::now() + t)
    }

    fn check_order(&self, p: usize) -> Result<()> {
        if p > self.max_order {
            return Err(Error::BudgetExceeded(format!(
                "order {p} exceeds the enumeration cap {}",
                self.max_order
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExOracle {
    pub p: usize,
    pub value: u64,
    #[serde(serialize_with = "as_graph6")]
    pub witness: Graph,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&encode_graph6(g))
}

fn as_graph6_opt<S: serde::Serializer>(
    g: &Option<Graph>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.serialize_some(&encode_graph6(g)),
        None => s.serialize_none(),
    }
}

/// Most edges a tree-free graph on `p` vertices can have by clique union.
fn clique_union_floor(p: usize, n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let (k, r) = ((p / (n - 1)) as u64, (p % (n - 1)) as u64);
    k * choose2(n as u64 - 1) + choose2(r)
}

struct Search<'a> {
    p: usize,
    tree: &'a Graph,
    connected: bool,
    extra: Option<&'a (dyn Fn(&Graph) -> bool + Sync)>,
    deadline: Option<Instant>,
}

impl Search<'_> {
    /// Edges achievable by extending a graph on `q` vertices to `p`.
    fn room(&self, q: usize) -> u64 {
        (q..self.p).map(|i| i as u64).sum()
    }

    /// Best graph with at least `seed` edges, if any.
    fn run(&self, seed: u64) -> Result<Option<(u64, Graph)>> {
        let (p, tree) = (self.p, self.tree);
        if p == 0 {
            let g = Graph::empty(0)?;
            return Ok((seed == 0 && !contains(&g, tree)?).then_some((0, g)));
        }
        let keep = |g: &Graph| -> Result<bool> {
            Ok(g.edge_count() + self.room(g.order()) >= seed && !contains(g, tree)?)
        };
        let mut level = vec![Graph::empty(0)?];
        for _ in 0..p - 1 {
            level = next_level(&level, &keep, self.deadline)?;
        }

        let best = AtomicU64::new(seed);
        let found = level
            .par_iter()
            .map(|parent| -> Result<Option<(u64, Graph)>> {
                check_deadline(self.deadline)?;
                self.best_child(parent, &best)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(found.into_iter().flatten().fold(None, |acc: Option<(u64, Graph)>, (v, g)| match acc {
            Some((a, _)) if a >= v => acc,
            _ => Some((v, g)),
        }))
    }

    fn best_child(&self, parent: &Graph, best: &AtomicU64) -> Result<Option<(u64, Graph)>> {
        let base = parent.edge_count();
        let mut local: Option<(u64, Graph)> = None;
        for s in 0..(1u128 << parent.order()) as VertexSet {
            let value = base + s.count_ones() as u64;
            if value < best.load(Ordering::Relaxed) || local.as_ref().is_some_and(|l| value <= l.0)
            {
                continue;
            }
            let child = parent.with_new_vertex(s)?;
            if self.connected && !is_connected(&child) {
                continue;
            }
            if self.extra.is_some_and(|f| !f(&child)) || contains(&child, self.tree)? {
                continue;
            }
            best.fetch_max(value, Ordering::Relaxed);
            local = Some((value, child));
        }
        Ok(local)
    }
}

/// Largest number of edges in a graph on `p` vertices (connected, if asked)
/// that does not contain `tree`, with one maximizer.
pub fn ex_oracle(
    p: usize,
    tree: &Graph,
    connected_only: bool,
    budget: &OracleBudget,
) -> Result<ExOracle> {
    ex_oracle_with_hint(p, tree, connected_only, None, budget)
}

/// As [`ex_oracle`], with a guessed lower bound used only for pruning. A
/// wrong guess costs a second search, never a wrong answer.
pub fn ex_oracle_with_hint(
    p: usize,
    tree: &Graph,
    connected_only: bool,
    hint: Option<u64>,
    budget: &OracleBudget,
) -> Result<ExOracle> {
    budget.check_order(p)?;
    let search =
        Search { p, tree, connected: connected_only, extra: None, deadline: budget.deadline() };
    let safe = if connected_only { 0 } else { clique_union_floor(p, tree.order()) };
    let mut found = None;
    if let Some(h) = hint.filter(|&h| h > safe) {
        found = search.run(h)?;
    }
    if found.is_none() {
        found = search.run(safe)?;
    }
    let (value, witness) = found.ok_or_else(|| {
        Error::OutsideDomain(format!("every graph on {p} vertices contains the tree"))
    })?;
    Ok(ExOracle { p, value, witness })
}

#[derive(Debug, Clone, Serialize)]
pub struct RamseyOracle {
    pub order: usize,
    /// Every graph on `order` vertices contains the left tree or has a
    /// complement containing the right tree.
    pub arrows: bool,
    #[serde(serialize_with = "as_graph6_opt")]
    pub counterexample: Option<Graph>,
}

pub fn ramsey_oracle(
    order: usize,
    left: &Graph,
    right: &Graph,
    budget: &OracleBudget,
) -> Result<RamseyOracle> {
    if order > budget.max_coloring_order {
        return Err(Error::BudgetExceeded(format!(
            "order {order} exceeds the coloring cap {}",
            budget.max_coloring_order
        )));
    }
    let deadline = budget.deadline();
    let avoids = |g: &Graph| -> Result<bool> {
        Ok(!contains(g, left)? && !contains(&g.complement(), right)?)
    };
    let counterexample = if order == 0 {
        let g = Graph::empty(0)?;
        avoids(&g)?.then_some(g)
    } else {
        let keep = |g: &Graph| -> Result<bool> { Ok(!contains(g, left)?) };
        let mut level = vec![Graph::empty(0)?];
        for _ in 0..order - 1 {
            level = next_level(&level, &keep, deadline)?;
        }
        let hits = level
            .par_iter()
            .map(|parent| -> Result<Option<Graph>> {
                check_deadline(deadline)?;
                for s in 0..(1u128 << parent.order()) as VertexSet {
                    let child = parent.with_new_vertex(s)?;
                    if avoids(&child)? {
                        return Ok(Some(child));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?;
        hits.into_iter().flatten().next()
    };
    Ok(RamseyOracle { order, arrows: counterexample.is_none(), counterexample })
}

/// Least `N` with `ramsey_oracle(N, ..)` arrowing, searching up to the
/// coloring cap.
pub fn ramsey_number_oracle(left: &Graph, right: &Graph, budget: &OracleBudget) -> Result<usize> {
    for order in 0..=budget.max_coloring_order {
        if ramsey_oracle(order, left, right, budget)?.arrows {
            return Ok(order);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no arrowing up to the coloring cap {}",
        budget.max_coloring_order
    )))
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub p: usize,
    pub bound: u64,
    pub observed_max: u64,
    #[serde(serialize_with = "as_graph6_opt")]
    pub violator: Option<Graph>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    /// Connected graphs without `t1:6` have at most `2p - 3` edges.
    pub connected_t1_6: Vec<BoundCheck>,
    /// Graphs without `t2:6` have at most `2p - r(5-r)/2` edges, `r = p mod 5`.
    pub t2_6: Vec<BoundCheck>,
}

impl LemmaReport {
    pub fn violators(&self) -> usize {
        self.connected_t1_6.iter().chain(&self.t2_6).filter(|c| c.violator.is_some()).count()
    }
}

fn bound_check(
    p: usize,
    tree: &Graph,
    connected: bool,
    bound: u64,
    budget: &OracleBudget,
) -> Result<BoundCheck> {
    let best = ex_oracle_with_hint(p, tree, connected, Some(bound), budget)?;
    let violator = (best.value > bound).then(|| best.witness.clone());
    Ok(BoundCheck { p, bound, observed_max: best.value, violator })
}

/// Exhaustively check the two order-6 spider edge bounds for every
/// `6 <= p <= max_p`.
pub fn verify_structural_lemmas(max_p: usize, budget: &OracleBudget) -> Result<LemmaReport> {
    budget.check_order(max_p)?;
    let t1 = make_tree(Family::T1, 6)?;
    let t2 = make_tree(Family::T2, 6)?;
    let mut report = LemmaReport { connected_t1_6: Vec::new(), t2_6: Vec::new() };
    for p in 6..=max_p {
        report.connected_t1_6.push(bound_check(p, &t1, true, 2 * p as u64 - 3, budget)?);
        let r = (p % 5) as u64;
        report.t2_6.push(bound_check(p, &t2, false, 2 * p as u64 - r * (5 - r) / 2, budget)?);
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnectedExtremalReport {
    pub family: Family,
    pub n: usize,
    pub p: usize,
    /// `floor((n-4)p/2)`.
    pub expected: u64,
    pub connected_max: u64,
    pub overall_max: u64,
    /// Some connected maximizer has maximum degree `n-4`.
    pub maximizer_degree_matches: bool,
    /// The connected maximum equals `floor((n-4)p/2)`.
    pub connected_max_matches: bool,
    /// Every connected graph attaining the overall maximum has
    /// `floor((n-4)p/2)` edges and maximum degree `n-4` (vacuous when none
    /// attains it).
    pub extremal_statement_holds: bool,
    #[serde(serialize_with = "as_graph6")]
    pub connected_witness: Graph,
}

/// Compare the best connected spider-free graphs on `p` vertices against
/// `floor((n-4)p/2)`.
pub fn verify_connected_extremal(
    n: usize,
    family: Family,
    p: usize,
    budget: &OracleBudget,
) -> Result<ConnectedExtremalReport> {
    if !family.is_spider() {
        return Err(Error::UnsupportedFamily(family));
    }
    if n < 7 || p < n {
        return Err(Error::HypothesisViolated(format!("need p >= n >= 7, got n = {n}, p = {p}")));
    }
    budget.check_order(p)?;
    let tree = make_tree(family, n)?;
    let expected = ((n - 4) * p / 2) as u64;
    let connected = ex_oracle_with_hint(p, &tree, true, Some(expected), budget)?;
    let overall = ex_oracle(p, &tree, false, budget)?;

    let degree = |g: &Graph| g.max_degree() == n - 4;
    let search = Search {
        p,
        tree: &tree,
        connected: true,
        extra: Some(&degree),
        deadline: budget.deadline(),
    };
    let maximizer_degree_matches =
        search.run(connected.value)?.is_some_and(|(v, _)| v == connected.value);

    let extremal_statement_holds = connected.value < overall.value
        || (connected.value == expected && maximizer_degree_matches && {
            // every connected maximizer must have the right degree
            let other = |g: &Graph| g.max_degree() != n - 4;
            let s = Search {
                p,
                tree: &tree,
                connected: true,
                extra: Some(&other),
                deadline: budget.deadline(),
            };
            s.run(connected.value)?.is_none()
        });
    Ok(ConnectedExtremalReport {
        family,
        n,
        p,
        expected,
        connected_max: connected.value,
        overall_max: overall.value,
        maximizer_degree_matches,
        connected_max_matches: connected.value == expected,
        extremal_statement_holds,
        connected_witness: connected.witness,
    })
}
