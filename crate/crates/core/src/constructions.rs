//! Witness graphs: extremal graphs for the Turán values, lower-bound graphs
//! for the Ramsey values, near-regular graphs and two-coin representations.
//!
//! Every witness is realized and checked before it is returned.

use serde::Serialize;

use crate::containment::contains;
use crate::error::{Error, Result};
use crate::graph::{Component, Graph, WitnessDescriptor};
use crate::ramsey::{ramsey_value, DegreeMode, RamseyAnswer, WitnessPlan};
use crate::trees::{make_tree, Family, TreeSpec};
use crate::turan::{ex_value, Branch};

/// `t = a x + b y` with `x, y >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrobeniusRep {
    pub x: u64,
    pub y: u64,
}

/// The representation of `t` with the smallest `x`, if any. `None` when
/// `a` or `b` is zero.
pub fn frobenius_rep(a: u64, b: u64, t: u64) -> Option<FrobeniusRep> {
    if a == 0 || b == 0 {
        return None;
    }
    (0..=t / a)
        .find(|x| (t - a * x).is_multiple_of(b))
        .map(|x| FrobeniusRep { x, y: (t - a * x) / b })
}

/// `order` copies of `degree`, the last lowered by one when the degree sum
/// would be odd.
pub fn near_regular_sequence(order: usize, degree: usize) -> Vec<usize> {
    let mut seq = vec![degree; order];
    if order * degree % 2 == 1 {
        seq[order - 1] -= 1;
    }
    seq
}

/// A graph on `p` vertices with maximum degree `d` and `floor(dp/2)` edges.
pub fn near_regular(p: usize, d: usize) -> Result<Graph> {
    if d >= p {
        return Err(Error::InvalidDegree(format!("degree {d} needs more than {p} vertices")));
    }
    Component::DegreeSeq(near_regular_sequence(p, d)).realize()
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalWitness {
    #[serde(skip)]
    pub graph: Graph,
    pub descriptor: WitnessDescriptor,
    pub edges: u64,
    pub branch: Branch,
}

/// Realize the witness for `ex(p; family_n)` and confirm both its edge count
/// and that it avoids the tree.
pub fn extremal_witness(family: Family, n: usize, p: u64) -> Result<ExtremalWitness> {
    if p + 1 < n as u64 {
        return Err(Error::OutsideDomain(format!("need p >= n - 1, got p = {p}, n = {n}")));
    }
    let ex = ex_value(family, n, p)?;
    let graph = ex.witness.realize()?;
    if graph.order() as u64 != p || graph.edge_count() != ex.value {
        return Err(Error::WitnessVerification(format!(
            "{} has {} vertices and {} edges, expected {p} and {}",
            ex.witness,
            graph.order(),
            graph.edge_count(),
            ex.value
        )));
    }
    if contains(&graph, &make_tree(family, n)?)? {
        return Err(Error::WitnessVerification(format!("{} contains {family}:{n}", ex.witness)));
    }
    Ok(ExtremalWitness { graph, descriptor: ex.witness, edges: ex.value, branch: ex.branch })
}

#[derive(Debug, Clone, Serialize)]
pub struct RamseyWitness {
    #[serde(skip)]
    pub graph: Graph,
    pub descriptor: WitnessDescriptor,
    /// The bound certified: `graph.order() + 1`.
    pub lower_bound: u64,
    /// The named construction of the firing rule verified; otherwise the
    /// witness came from the fallback search.
    pub from_plan: bool,
}

fn regular(order: usize, degree: usize) -> Option<Component> {
    (degree < order.max(1)).then(|| Component::DegreeSeq(near_regular_sequence(order, degree)))
}

fn cliques(parts: &[(u64, usize)]) -> WitnessDescriptor {
    let mut w = WitnessDescriptor::union(Vec::new());
    for &(copies, size) in parts {
        w.push_cliques(copies as usize, size);
    }
    w
}

fn two_sizes(big: usize, small: usize, order: usize) -> Option<WitnessDescriptor> {
    let rep = frobenius_rep(big as u64, small as u64, order as u64)?;
    Some(cliques(&[(rep.x, big), (rep.y, small)]))
}

/// Descriptor of a rule's named construction on `order` vertices.
pub fn plan_descriptor(
    plan: WitnessPlan,
    left: &TreeSpec,
    right: &TreeSpec,
    order: usize,
) -> Option<WitnessDescriptor> {
    let d1 = left.max_degree();
    let d2 = right.max_degree();
    let w = match plan {
        WitnessPlan::Cliques { copies, size } => cliques(&[(copies as u64, size)]),
        WitnessPlan::ComplementOfCliques { copies, size } => {
            WitnessDescriptor { complemented: true, ..cliques(&[(copies as u64, size)]) }
        }
        WitnessPlan::TwoCliqueSizes { m } => two_sizes(m - 1, m - 2, order)?,
        WitnessPlan::Degree { mode: DegreeMode::SmallerFirst } => cliques(&[(2, d2 - 1)]),
        WitnessPlan::Degree { mode: DegreeMode::Parity } => {
            WitnessDescriptor::union(vec![regular(order, d1.checked_sub(1)?)?])
        }
        WitnessPlan::Degree { mode: DegreeMode::LargerSecond } => {
            let delta = d1.checked_sub(1)?;
            if (delta * order).is_multiple_of(2) {
                WitnessDescriptor::union(vec![regular(order, delta)?])
            } else {
                let c = if (order - d1).is_multiple_of(2) { d1 } else { d1 + 1 };
                let rest = order.checked_sub(c)?;
                WitnessDescriptor::union(vec![Component::Clique(c), regular(rest, delta)?])
            }
        }
    };
    (w.order() == order).then_some(w)
}

/// Further candidates tried when the named construction is unavailable:
/// near-regular graphs, unions of small cliques, cliques beside a regular
/// part, and complements of clique unions.
fn fallback_candidates(left: &TreeSpec, right: &TreeSpec, order: usize) -> Vec<WitnessDescriptor> {
    let (m, n) = (left.n, right.n);
    let mut out = Vec::new();
    for delta in (0..order.min(m)).rev() {
        if let Some(c) = regular(order, delta) {
            out.push(WitnessDescriptor::union(vec![c]));
        }
    }
    for big in (1..m).rev() {
        for small in (big.saturating_sub(3).max(1)..big).rev() {
            out.extend(two_sizes(big, small, order));
        }
        if order.is_multiple_of(big) {
            out.push(cliques(&[((order / big) as u64, big)]));
        }
    }
    for big in [m - 1, m.saturating_sub(2)].into_iter().filter(|&b| b > 1) {
        for copies in 1..=order / big {
            let rest = order - copies * big;
            for delta in (0..rest.min(m)).rev().take(4) {
                if let Some(c) = regular(rest, delta) {
                    let mut w = cliques(&[(copies as u64, big)]);
                    w.components.push(c);
                    out.push(w);
                }
            }
        }
    }
    for big in (1..n).rev().take(6) {
        for small in (big.saturating_sub(2).max(1)..=big).rev() {
            if let Some(w) = two_sizes(big, small, order) {
                out.push(WitnessDescriptor { complemented: true, ..w });
            }
        }
    }
    out.dedup();
    out
}

fn verifies(w: &WitnessDescriptor, left: &Graph, right: &Graph) -> Result<Option<Graph>> {
    let g = match w.realize() {
        Ok(g) => g,
        Err(Error::InvalidArgument(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if contains(&g, left)? || contains(&g.complement(), right)? {
        return Ok(None);
    }
    Ok(Some(g))
}

/// A verified graph on `lower - 1` vertices for the lower end of the answer
/// to `r(left, right)`.
pub fn ramsey_witness(left: TreeSpec, right: TreeSpec) -> Result<RamseyWitness> {
    let answer = ramsey_value(left, right)?;
    witness_for(&answer)
}

pub fn witness_for(answer: &RamseyAnswer) -> Result<RamseyWitness> {
    let (left, right) = (&answer.left, &answer.right);
    let lower = answer.bound.lower().ok_or_else(|| {
        Error::HypothesisViolated(format!("no lower bound known for ({left}, {right})"))
    })?;
    let order = lower.checked_sub(1).ok_or(Error::Overflow("lower bound"))? as usize;
    if order > crate::graph::MAX_ORDER {
        return Err(Error::OrderCap { order, cap: crate::graph::MAX_ORDER });
    }
    let (lt, rt) = (left.build()?, right.build()?);

    let planned = answer.plan.and_then(|p| plan_descriptor(p, left, right, order));
    if let Some(w) = &planned {
        if let Some(graph) = verifies(w, &lt, &rt)? {
            return Ok(RamseyWitness {
                graph,
                descriptor: w.clone(),
                lower_bound: lower,
                from_plan: true,
            });
        }
    }
    for w in fallback_candidates(left, right, order) {
        if Some(&w) == planned.as_ref() {
            continue;
        }
        if let Some(graph) = verifies(&w, &lt, &rt)? {
            return Ok(RamseyWitness {
                graph,
                descriptor: w,
                lower_bound: lower,
                from_plan: false,
            });
        }
    }
    Err(Error::WitnessVerification(format!(
        "no verified graph on {order} vertices for ({left}, {right}) at {}",
        answer.bound
    )))
}
