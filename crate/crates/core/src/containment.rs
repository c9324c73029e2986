//! Does a host graph contain a (not necessarily induced) copy of a tree?
//!
//! The search splits the pattern into its *core* (non-leaf vertices, which
//! form a subtree containing the maximum-degree root) and its leaves. Core
//! vertices are placed by backtracking, root first, children in decreasing
//! subtree size, host candidates in ascending label order and filtered by
//! degree. Once the core is placed, the leaves only need distinct unused
//! neighbors of their attachment points, which is a bipartite b-matching and
//! is solved exactly with augmenting paths instead of being enumerated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};

/// `map[t]` is the host vertex hosting tree vertex `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Injective and edge-preserving.
    pub fn is_valid(&self, host: &Graph, tree: &Graph) -> bool {
        if self.map.len() != tree.order() || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let image = self.map.iter().fold(0 as VertexSet, |acc, &h| acc | bit(h));
        image.count_ones() as usize == self.map.len()
            && tree.edges().all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Vertices reachable from `start`.
pub fn component_of(g: &Graph, start: usize) -> VertexSet {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let next = members(frontier).fold(0, |acc, v| acc | g.neighbors(v)) & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Vacuously true for order at most one.
pub fn is_connected(g: &Graph) -> bool {
    g.order() <= 1 || component_of(g, 0) == g.all_vertices()
}

fn check_tree(tree: &Graph) -> Result<()> {
    if tree.order() == 0 {
        return Err(Error::NotATree("pattern has no vertices".into()));
    }
    if tree.edge_count() != tree.order() as u64 - 1 {
        return Err(Error::NotATree(format!(
            "{} vertices but {} edges",
            tree.order(),
            tree.edge_count()
        )));
    }
    if !is_connected(tree) {
        return Err(Error::NotATree("pattern is disconnected".into()));
    }
    Ok(())
}

struct CoreVertex {
    tree_vertex: usize,
    /// Index into the core order; `usize::MAX` for the root.
    parent: usize,
    degree: usize,
    leaves: Vec<usize>,
    /// Core indices of the core children; always larger than this vertex's.
    children_core: Vec<usize>,
}

struct Plan {
    core: Vec<CoreVertex>,
}

impl Plan {
    fn new(tree: &Graph) -> Plan {
        let n = tree.order();
        let root = (0..n)
            .max_by(|&a, &b| tree.degree(a).cmp(&tree.degree(b)).then(b.cmp(&a)))
            .expect("tree is non-empty");

        // Subtree sizes with respect to the root.
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for u in members(tree.neighbors(v)) {
                if u != parent[v] {
                    parent[u] = v;
                    order.push(u);
                }
            }
            i += 1;
        }
        let mut size = vec![1usize; n];
        for &v in order.iter().rev() {
            if parent[v] != usize::MAX {
                size[parent[v]] += size[v];
            }
        }

        let is_core = |v: usize| tree.degree(v) >= 2;
        let mut core: Vec<CoreVertex> = Vec::new();
        let mut stack = vec![(root, usize::MAX)];
        while let Some((v, parent_idx)) = stack.pop() {
            let idx = core.len();
            let mut kids: Vec<usize> =
                members(tree.neighbors(v)).filter(|&u| u != parent[v]).collect();
            kids.sort_by(|&a, &b| size[b].cmp(&size[a]).then(a.cmp(&b)));
            let leaves = kids.iter().copied().filter(|&u| !is_core(u)).collect();
            core.push(CoreVertex {
                tree_vertex: v,
                parent: parent_idx,
                degree: tree.degree(v),
                leaves,
                children_core: Vec::new(),
            });
            if parent_idx != usize::MAX {
                core[parent_idx].children_core.push(idx);
            }
            // Depth-first, largest subtree first.
            for &u in kids.iter().rev().filter(|&&u| is_core(u)) {
                stack.push((u, idx));
            }
        }
        Plan { core }
    }
}

struct Search<'a> {
    host: &'a Graph,
    plan: Plan,
    degree_ok: Vec<VertexSet>,
    big_component: VertexSet,
    placed: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    /// Every placed core vertex must still have room for its unplaced tree
    /// neighbors among its unused host neighbors.
    fn has_slack(&self, placed_count: usize) -> bool {
        (0..placed_count).all(|i| {
            let cv = &self.plan.core[i];
            let pending =
                cv.leaves.len() + cv.children_core.iter().filter(|&&c| c >= placed_count).count();
            (self.host.neighbors(self.placed[i]) & !self.used).count_ones() as usize >= pending
        })
    }

    fn place(&mut self, depth: usize) -> Option<Vec<(usize, usize)>> {
        if depth == self.plan.core.len() {
            return self.match_leaves();
        }
        let cv = &self.plan.core[depth];
        let mut candidates = self.degree_ok[depth] & !self.used;
        if cv.parent == usize::MAX {
            candidates &= self.big_component;
        } else {
            candidates &= self.host.neighbors(self.placed[cv.parent]);
        }
        for h in members(candidates) {
            self.placed[depth] = h;
            self.used |= bit(h);
            if self.has_slack(depth + 1) {
                if let Some(leaves) = self.place(depth + 1) {
                    return Some(leaves);
                }
            }
            self.used &= !bit(h);
        }
        None
    }

    /// Assign every leaf a distinct unused host neighbor of its attachment
    /// point. Kuhn's augmenting paths over leaf slots in core order.
    fn match_leaves(&self) -> Option<Vec<(usize, usize)>> {
        let slots: Vec<(usize, usize)> = self
            .plan
            .core
            .iter()
            .enumerate()
            .flat_map(|(i, cv)| cv.leaves.iter().map(move |&leaf| (i, leaf)))
            .collect();
        let host_n = self.host.order();
        let mut owner = vec![usize::MAX; host_n];
        let mut slot_host = vec![usize::MAX; slots.len()];

        fn augment(
            s: usize,
            slots: &[(usize, usize)],
            allowed: &dyn Fn(usize) -> VertexSet,
            owner: &mut [usize],
            slot_host: &mut [usize],
            visited: &mut VertexSet,
        ) -> bool {
            for h in members(allowed(slots[s].0) & !*visited) {
                *visited |= bit(h);
                if owner[h] == usize::MAX
                    || augment(owner[h], slots, allowed, owner, slot_host, visited)
                {
                    owner[h] = s;
                    slot_host[s] = h;
                    return true;
                }
            }
            false
        }

        let allowed = |core_idx: usize| self.host.neighbors(self.placed[core_idx]) & !self.used;
        for s in 0..slots.len() {
            let mut visited = 0;
            if !augment(s, &slots, &allowed, &mut owner, &mut slot_host, &mut visited) {
                return None;
            }
        }
        Some(slots.iter().map(|&(_, leaf)| leaf).zip(slot_host).collect())
    }
}

/// First embedding of `tree` into `host` in the search order, or `None`.
/// Errors if `tree` is not a tree.
pub fn contains_subgraph(host: &Graph, tree: &Graph) -> Result<Option<Embedding>> {
    check_tree(tree)?;
    let n = tree.order();
    if n > host.order() {
        return Ok(None);
    }
    match n {
        1 => return Ok(Some(Embedding { map: vec![0] })),
        2 => {
            return Ok(host.edges().next().map(|(u, v)| Embedding { map: vec![u, v] }));
        }
        _ => {}
    }

    let plan = Plan::new(tree);
    let degree_ok = plan
        .core
        .iter()
        .map(|cv| {
            (0..host.order())
                .filter(|&h| host.degree(h) >= cv.degree)
                .fold(0, |acc, h| acc | bit(h))
        })
        .collect();

    let mut big_component = 0;
    let mut seen: VertexSet = 0;
    for v in 0..host.order() {
        if seen & bit(v) == 0 {
            let comp = component_of(host, v);
            seen |= comp;
            if comp.count_ones() as usize >= n {
                big_component |= comp;
            }
        }
    }

    let core_len = plan.core.len();
    let mut search = Search {
        host,
        plan,
        degree_ok,
        big_component,
        placed: vec![usize::MAX; core_len],
        used: 0,
    };
    let Some(leaves) = search.place(0) else {
        return Ok(None);
    };
    let mut map = vec![usize::MAX; n];
    for (cv, &h) in search.plan.core.iter().zip(&search.placed) {
        map[cv.tree_vertex] = h;
    }
    for (leaf, h) in leaves {
        map[leaf] = h;
    }
    let emb = Embedding { map };
    debug_assert!(emb.is_valid(host, tree));
    Ok(Some(emb))
}

/// Convenience wrapper: `true` iff `host` contains `tree`.
pub fn contains(host: &Graph, tree: &Graph) -> Result<bool> {
    Ok(contains_subgraph(host, tree)?.is_some())
}
