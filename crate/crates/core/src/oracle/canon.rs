//! Canonical labeling by equitable refinement and individualization.
//!
//! The canonical form is the lexicographically largest relabeled adjacency
//! (rows compared in position order) over all discrete partitions reachable
//! from the refined initial partition. Twins inside a target cell are
//! skipped: swapping two twins is an automorphism fixing every other vertex,
//! so both branches lead to the same forms.

use std::collections::BTreeMap;

use crate::graph::{bit, members, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    /// Row `i` holds the neighbours of position `i`, as positions.
    pub form: Vec<VertexSet>,
    /// `order[i]` is the vertex placed at position `i`.
    pub order: Vec<usize>,
}

pub fn canonical(g: &Graph) -> Canonical {
    let cells = if g.order() == 0 { Vec::new() } else { vec![g.all_vertices()] };
    canonical_with(g, cells)
}

/// Canonical form relative to an ordered initial partition; only
/// relabelings that respect the cell order are considered.
pub fn canonical_with(g: &Graph, cells: Vec<VertexSet>) -> Canonical {
    let mut best: Option<Canonical> = None;
    search(g, cells, &mut best);
    best.unwrap_or(Canonical { form: Vec::new(), order: Vec::new() })
}

/// Whether some automorphism maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let all = g.all_vertices();
    let fixed = |x: usize| canonical_with(g, vec![all & !bit(x), bit(x)]).form;
    fixed(u) == fixed(v)
}

fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    'again: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for i in 0..cells.len() {
                let cell = cells[i];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut groups: BTreeMap<u32, VertexSet> = BTreeMap::new();
                for v in members(cell) {
                    *groups.entry((g.neighbors(v) & splitter).count_ones()).or_default() |= bit(v);
                }
                if groups.len() > 1 {
                    cells.splice(i..=i, groups.into_values());
                    continue 'again;
                }
            }
        }
        return;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u)
}

fn search(g: &Graph, mut cells: Vec<VertexSet>, best: &mut Option<Canonical>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.count_ones() > 1)
        .min_by_key(|&(i, c)| (c.count_ones(), i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        leaf(g, &cells, best);
        return;
    };
    let cell = cells[t];
    let mut tried: Vec<usize> = Vec::new();
    for v in members(cell) {
        if tried.iter().any(|&w| twins(g, v, w)) {
            continue;
        }
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(bit(v));
        next.push(cell & !bit(v));
        next.extend_from_slice(&cells[t + 1..]);
        search(g, next, best);
        tried.push(v);
    }
}

fn leaf(g: &Graph, cells: &[VertexSet], best: &mut Option<Canonical>) {
    let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut pos = vec![0usize; g.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let form: Vec<VertexSet> = order
        .iter()
        .map(|&v| members(g.neighbors(v)).fold(0, |row, u| row | bit(pos[u])))
        .collect();
    if best.as_ref().is_none_or(|b| form > b.form) {
        *best = Some(Canonical { form, order });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel_all(g: &Graph) -> Vec<Graph> {
        // a handful of fixed permutations
        let n = g.order();
        let mut out = vec![g.clone()];
        let rev: Vec<usize> = (0..n).rev().collect();
        out.push(g.permuted(&rev));
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        out.push(g.permuted(&rot));
        let shuffle: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
        if !n.is_multiple_of(5) {
            out.push(g.permuted(&shuffle));
        }
        out
    }

    #[test]
    fn forms_are_invariant_under_relabeling() {
        let graphs = [
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)])
                .unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::complete(5).unwrap().disjoint_union(&Graph::empty(2).unwrap()).unwrap(),
        ];
        for g in graphs {
            let c = canonical(&g).form;
            for h in relabel_all(&g) {
                assert_eq!(canonical(&h).form, c);
            }
        }
    }

    #[test]
    fn non_isomorphic_graphs_get_different_forms() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let two_c3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical(&c6).form, canonical(&two_c3).form);
    }

    #[test]
    fn canonical_order_relabels_to_form() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let c = canonical(&g);
        let h = g.permuted(&c.order);
        assert_eq!(h.rows(), &c.form[..]);
    }

    #[test]
    fn orbits() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(same_orbit(&p4, 0, 3));
        assert!(same_orbit(&p4, 1, 2));
        assert!(!same_orbit(&p4, 0, 1));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(same_orbit(&star, 1, 3));
        assert!(!same_orbit(&star, 0, 3));
    }

    #[test]
    fn empty_graphs() {
        assert!(canonical(&Graph::empty(0).unwrap()).form.is_empty());
        assert_eq!(canonical(&Graph::empty(3).unwrap()).form, vec![0, 0, 0]);
    }
}
