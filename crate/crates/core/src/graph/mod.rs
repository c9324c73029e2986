//! Immutable simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each vertex stores its neighborhood as a `u128` bitset, so adjacency tests,
//! degree counts and neighborhood intersections are single word operations.
//! Vertices are dense `0..order` labels.

mod graph6;
mod witness;

use std::fmt;

pub use graph6::{decode_graph6, encode_graph6};
pub use witness::{Component, WitnessDescriptor};

use crate::error::{Error, Result};

/// Largest supported order. Two machine words per adjacency row.
pub const MAX_ORDER: usize = 128;

pub type VertexSet = u128;

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u128 << v
}

#[inline]
pub(crate) fn low_bits(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterate the members of a vertex bitset in ascending order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// `C(p, 2)`.
pub const fn choose2(p: u64) -> u64 {
    p * p.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexSet>,
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::OrderCap { order, cap: MAX_ORDER })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Graph { order, adj: vec![0; order] })
    }

    pub fn complete(k: usize) -> Result<Self> {
        check_order(k)?;
        let all = low_bits(k);
        let adj = (0..k).map(|v| all & !bit(v)).collect();
        Ok(Graph { order: k, adj })
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        check_order(a + b)?;
        let left = low_bits(a);
        let right = low_bits(a + b) & !left;
        let adj = (0..a + b).map(|v| if v < a { right } else { left }).collect();
        Ok(Graph { order: a + b, adj })
    }

    /// Build from an edge list. Loops are rejected; repeated edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(order)?;
        let mut adj = vec![0; order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidArgument(format!(
                    "edge {u}-{v} out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { order, adj })
    }

    /// Build from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        check_order(rows.len())?;
        let g = Graph { order: rows.len(), adj: rows };
        let mask = low_bits(g.order);
        for v in 0..g.order {
            if g.adj[v] & bit(v) != 0 || g.adj[v] & !mask != 0 {
                return Err(Error::InvalidArgument(format!("bad adjacency row {v}")));
            }
            for u in members(g.adj[v]) {
                if g.adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(g)
    }

    /// Vertex-disjoint union; `other` is relabeled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        check_order(self.order + other.order)?;
        let shift = self.order;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << shift));
        Ok(Graph { order: self.order + other.order, adj })
    }

    pub fn complement(&self) -> Self {
        let all = low_bits(self.order);
        let adj = (0..self.order).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { order: self.order, adj }
    }

    /// New graph with one extra vertex (labeled `order`) joined to `neighbors`.
    pub fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Self> {
        check_order(self.order + 1)?;
        let neighbors = neighbors & low_bits(self.order);
        let v = self.order;
        let mut adj = self.adj.clone();
        for u in members(neighbors) {
            adj[u] |= bit(v);
        }
        adj.push(neighbors);
        Ok(Graph { order: v + 1, adj })
    }

    /// Relabel so that vertex `perm[i]` of `self` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.order);
        let mut pos = vec![0usize; self.order];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let adj = perm
            .iter()
            .map(|&v| members(self.adj[v]).fold(0, |row, u| row | bit(pos[u])))
            .collect();
        Graph { order: self.order, adj }
    }

    /// Subgraph induced by the vertices of `keep`, relabeled in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Self {
        let verts: Vec<usize> = members(keep & low_bits(self.order)).collect();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| members(self.adj[v] & keep).fold(0, |row, u| row | bit(pos[u])))
            .collect();
        Graph { order: verts.len(), adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn all_vertices(&self) -> VertexSet {
        low_bits(self.order)
    }

    pub fn edge_count(&self) -> u64 {
        let sum: u64 = self.adj.iter().map(|r| u64::from(r.count_ones())).sum();
        debug_assert!(sum.is_multiple_of(2));
        sum / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| members(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Symmetric and irreflexive adjacency, rows confined to the vertex range.
    pub fn is_well_formed(&self) -> bool {
        let mask = low_bits(self.order);
        self.adj.len() == self.order
            && (0..self.order).all(|v| {
                self.adj[v] & bit(v) == 0
                    && self.adj[v] & !mask == 0
                    && members(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        let mut list = f.debug_list();
        for e in self.edges() {
            list.entry(&e);
        }
        list.finish()?;
        write!(f, ")")
    }
}

/// Realize a degree sequence by Havel–Hakimi: repeatedly take the vertex with
/// the largest residual degree (lowest label on ties) and join it to the next
/// largest residual degrees (lowest labels on ties). Vertex `i` receives
/// degree `seq[i]`. Returns `None` if the sequence is not graphic.
pub fn realize_degree_sequence(seq: &[usize]) -> Result<Option<Graph>> {
    let p = seq.len();
    check_order(p)?;
    let mut residual = seq.to_vec();
    let mut adj = vec![0 as VertexSet; p];
    let mut done: VertexSet = 0;
    for _ in 0..p {
        let Some(v) = (0..p)
            .filter(|&v| done & bit(v) == 0)
            .max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a)))
        else {
            break;
        };
        done |= bit(v);
        let need = residual[v];
        residual[v] = 0;
        let mut others: Vec<usize> = (0..p).filter(|&u| done & bit(u) == 0).collect();
        others.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        if others.len() < need {
            return Ok(None);
        }
        for &u in &others[..need] {
            if residual[u] == 0 {
                return Ok(None);
            }
            residual[u] -= 1;
            adj[v] |= bit(u);
            adj[u] |= bit(v);
        }
    }
    Ok(Some(Graph { order: p, adj }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        let k0 = Graph::complete(0).unwrap();
        assert_eq!(k0.order(), 0);
        assert_eq!(k0.edge_count(), 0);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert_eq!(Graph::complete(9).unwrap().edge_count(), 36);
        assert!(Graph::complete(128).unwrap().is_well_formed());
        assert!(matches!(Graph::complete(129), Err(Error::OrderCap { .. })));
    }

    #[test]
    fn bipartite_and_unions() {
        let k55 = Graph::complete_bipartite(5, 5).unwrap();
        assert_eq!(k55.edge_count(), 25);
        assert!(k55.is_well_formed());
        let e = Graph::complete_bipartite(0, 7).unwrap();
        assert_eq!((e.order(), e.edge_count()), (7, 0));

        let k5 = Graph::complete(5).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k5.disjoint_union(&k2).unwrap().edge_count(), 11);
        let with_empty = k5.disjoint_union(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(with_empty, k5);

        let two_k5 = k5.disjoint_union(&k5).unwrap();
        assert_eq!((two_k5.order(), two_k5.edge_count()), (10, 20));
        assert_eq!(two_k5.complement(), k55);
        assert!(Graph::complete(100)
            .unwrap()
            .disjoint_union(&Graph::complete(29).unwrap())
            .is_err());
    }

    #[test]
    fn complement_basics() {
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(k6.complement(), Graph::empty(6).unwrap());
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.edge_count() + g.complement().edge_count(), choose2(6));
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn permute_and_induce() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let q = p3.permuted(&[1, 0, 2]);
        assert!(q.has_edge(0, 1) && q.has_edge(0, 2) && !q.has_edge(1, 2));
        let ind = Graph::complete(5).unwrap().induced(0b10110);
        assert_eq!(ind, Graph::complete(3).unwrap());
    }

    #[test]
    fn havel_hakimi_realizes_regular_sequences() {
        let g = realize_degree_sequence(&[4; 9]).unwrap().unwrap();
        assert_eq!(g.edge_count(), 18);
        assert!((0..9).all(|v| g.degree(v) == 4));
        let g = realize_degree_sequence(&[3, 3, 3, 3, 3, 3, 2]).unwrap().unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 3, 3, 2]);
        assert!(realize_degree_sequence(&[3, 3, 1, 1]).unwrap().is_none());
        assert!(realize_degree_sequence(&[1]).unwrap().is_none());
    }
}
