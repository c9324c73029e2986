//! Isomorphism-free generation by canonical augmentation.
//!
//! A child `P + v` of a parent `P` is accepted when `v` lies in the orbit of
//! the vertex its canonical labeling puts last, and accepted children of one
//! parent are deduplicated by canonical form. Each class on `k + 1` vertices
//! then appears exactly once, provided each class on `k` vertices did. A
//! `keep` predicate that is closed under deleting vertices restricts the
//! generation to that hereditary family.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use super::canon::{canonical, same_orbit};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub(crate) fn check_deadline(deadline: Option<Instant>) -> Result<()> {
    match deadline {
        Some(d) if Instant::now() >= d => {
            Err(Error::BudgetExceeded("time limit reached during enumeration".into()))
        }
        _ => Ok(()),
    }
}

/// Accepted one-vertex extensions of `parent` satisfying `keep`.
pub fn children<F>(parent: &Graph, keep: &F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> Result<bool>,
{
    let k = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0..(1u128 << k) as VertexSet {
        let child = parent.with_new_vertex(s)?;
        if !keep(&child)? {
            continue;
        }
        let c = canonical(&child);
        if !same_orbit(&child, k, c.order[k]) {
            continue;
        }
        if seen.insert(c.form) {
            out.push(child);
        }
    }
    Ok(out)
}

/// Extend every parent by one vertex, in parallel; output order follows the
/// parent order.
pub fn next_level<F>(parents: &[Graph], keep: &F, deadline: Option<Instant>) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> Result<bool> + Sync,
{
    let nested = parents
        .par_iter()
        .map(|p| {
            check_deadline(deadline)?;
            children(p, keep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

/// One representative per class of graphs on `order` vertices satisfying the
/// hereditary predicate `keep`.
pub fn generate<F>(order: usize, keep: &F, deadline: Option<Instant>) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> Result<bool> + Sync,
{
    let mut level = vec![Graph::empty(0)?];
    for _ in 0..order {
        level = next_level(&level, keep, deadline)?;
    }
    Ok(level)
}

/// Number of unlabeled graphs on `order` vertices.
pub fn count_graphs(order: usize) -> Result<usize> {
    Ok(generate(order, &|_: &Graph| Ok(true), None)?.len())
}
