use proptest::prelude::*;

use trt_core::constructions::{frobenius_rep, near_regular};
use trt_core::containment::{contains, contains_subgraph, is_connected};
use trt_core::graph::{decode_graph6, encode_graph6, Graph};
use trt_core::ramsey::{ramsey_value, Bound, Rule};
use trt_core::trees::make_tree;
use trt_core::turan::{decompose, ex_bounds, ex_value};
use trt_core::{Family, TreeSpec};

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn graph_on(order: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..order {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(order, &edges).unwrap()
}

fn graph_upto(max: usize) -> impl Strategy<Value = Graph> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_on(n, &bits))
    })
}

fn family() -> impl Strategy<Value = Family> {
    proptest::sample::select(Family::ALL.to_vec())
}

/// Plain graph6 writer working from a bit string, for comparison.
fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let x = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_matches_reference_and_round_trips(g in graph_upto(62)) {
        let s = encode_graph6(&g);
        prop_assert_eq!(&s, &reference_graph6(&g));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_large_orders(g in (63usize..=128).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_on(n, &b))
    })) {
        let s = encode_graph6(&g);
        prop_assert_eq!(&s, &reference_graph6(&g));
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn complement_splits_the_pairs(g in graph_upto(128)) {
        let c = g.complement();
        prop_assert!(g.is_well_formed() && c.is_well_formed());
        prop_assert_eq!(g.edge_count() + c.edge_count(), choose2(g.order() as u64));
    }

    #[test]
    fn two_cliques_lose_to_a_larger_split(n in 4u64..200, a in 1u64..200, b in 1u64..200) {
        prop_assume!(a < n - 1 && b < n - 1);
        if a + b < n {
            prop_assert!(choose2(a) + choose2(b) < choose2(a + b));
        } else {
            prop_assert!(choose2(a) + choose2(b) < choose2(n - 1) + choose2(a + b - n + 1));
        }
    }

    #[test]
    fn trees_are_trees(f in family(), n in 1usize..=60) {
        prop_assume!(n >= f.min_order());
        let t = make_tree(f, n).unwrap();
        prop_assert!(t.is_well_formed());
        prop_assert!(is_connected(&t));
        prop_assert_eq!(t.edge_count(), n as u64 - 1);
        prop_assert_eq!(t.max_degree(), f.max_degree(n));
    }

    #[test]
    fn star_containment_is_a_degree_test(g in graph_upto(10), d in 1usize..10) {
        let star = make_tree(Family::Star, d + 1).unwrap();
        prop_assert_eq!(contains(&g, &star).unwrap(), g.max_degree() >= d);
    }

    #[test]
    fn embeddings_are_valid(g in graph_upto(11), f in family(), n in 1usize..=11) {
        prop_assume!(n >= f.min_order());
        let tree = make_tree(f, n).unwrap();
        if let Some(e) = contains_subgraph(&g, &tree).unwrap() {
            prop_assert!(e.is_valid(&g, &tree));
        }
    }

    #[test]
    fn adding_an_edge_keeps_containment(
        g in graph_upto(10), f in family(), n in 1usize..=10, u in 0usize..10, v in 0usize..10
    ) {
        prop_assume!(n >= f.min_order() && u != v && u < g.order() && v < g.order());
        let tree = make_tree(f, n).unwrap();
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((u.min(v), u.max(v)));
        edges.sort_unstable();
        edges.dedup();
        let bigger = Graph::from_edges(g.order(), &edges).unwrap();
        if contains(&g, &tree).unwrap() {
            prop_assert!(contains(&bigger, &tree).unwrap());
        }
    }

    #[test]
    fn low_degree_hosts_avoid_spiders(
        n in 5usize..=12, order in 1usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)
    ) {
        let cap = n - 4;
        let mut degree = vec![0; order];
        let mut edges = Vec::new();
        let mut i = 0;
        for v in 1..order {
            for u in 0..v {
                if bits[i] && degree[u] < cap && degree[v] < cap {
                    degree[u] += 1;
                    degree[v] += 1;
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        let g = Graph::from_edges(order, &edges).unwrap();
        for f in [Family::T1, Family::T2] {
            prop_assert!(!contains(&g, &make_tree(f, n).unwrap()).unwrap());
        }
    }

    #[test]
    fn ex_value_shape(n in 5usize..=80, p in 4u64..3000) {
        prop_assume!(p + 1 >= n as u64);
        for f in [Family::T1, Family::T2, Family::Path, Family::Star, Family::Tprime] {
            let res = ex_value(f, n, p).unwrap();
            let (k, r) = decompose(n, p);
            prop_assert_eq!(k * (n as u64 - 1) + r, p);
            prop_assert!(r <= n as u64 - 2);
            prop_assert!(res.value <= choose2(p));
            if let Some(b) = res.branch_values {
                prop_assert_eq!(res.value, b.deficit.max(b.clique_union));
                prop_assert_eq!(res.tie, b.deficit == b.clique_union);
            }
        }
    }

    #[test]
    fn spiders_share_values_and_grow_with_p(n in 5usize..=80, p in 4u64..3000) {
        prop_assume!(p + 1 >= n as u64);
        let t1 = ex_value(Family::T1, n, p).unwrap().value;
        prop_assert_eq!(t1, ex_value(Family::T2, n, p).unwrap().value);
        for f in [Family::T1, Family::T2, Family::Path, Family::Star, Family::Tprime] {
            prop_assert!(ex_value(f, n, p + 1).unwrap().value >= ex_value(f, n, p).unwrap().value);
        }
        if p >= n as u64 {
            prop_assert!((n as u64 - 4) * p / 2 <= t1);
        }
    }

    #[test]
    fn bounds_bracket_the_value(n in 5usize..=80, p in 5u64..3000) {
        prop_assume!(p >= n as u64 && p % (n as u64 - 1) != 0);
        for f in [Family::T1, Family::T2] {
            let b = ex_bounds(f, n, p).unwrap();
            let v = ex_value(f, n, p).unwrap().value;
            prop_assert!(b.lo <= v && v <= b.hi, "{} <= {} <= {}", b.lo, v, b.hi);
        }
    }

    #[test]
    fn ramsey_answers_are_coherent(lf in family(), rf in family(), m in 1usize..=40, n in 1usize..=40) {
        prop_assume!(m >= lf.min_order() && n >= rf.min_order());
        let (l, r) = (TreeSpec::new(lf, m).unwrap(), TreeSpec::new(rf, n).unwrap());
        let a = ramsey_value(l, r).unwrap();
        match a.bound {
            Bound::Exact { value } => {
                prop_assert_eq!(a.bound.lower(), Some(value));
                prop_assert_eq!(a.bound.upper(), Some(value));
            }
            Bound::Range { lo, hi } => prop_assert!(lo <= hi),
            Bound::Unknown { .. } => prop_assert_eq!(a.bound.upper(), None),
        }
        if a.rule != Rule::MaxDegreeBound {
            prop_assert!(a.trace.iter().any(|c| c.rule == a.rule && c.holds));
        }
        let again = ramsey_value(l, r).unwrap();
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&again).unwrap());
    }

    #[test]
    fn near_regular_degrees(p in 2usize..=60, d in 1usize..60) {
        prop_assume!(d < p);
        let g = near_regular(p, d).unwrap();
        prop_assert_eq!(g.order(), p);
        prop_assert_eq!(g.edge_count(), (d * p / 2) as u64);
        prop_assert_eq!(g.max_degree(), d);
    }

    #[test]
    fn two_coin_representations(a in 1u64..=20, b in 1u64..=20, extra in 0u64..=200) {
        fn gcd(a: u64, b: u64) -> u64 { if b == 0 { a } else { gcd(b, a % b) } }
        prop_assume!(gcd(a, b) == 1);
        let t = (a - 1) * (b - 1) + extra;
        let rep = frobenius_rep(a, b, t).unwrap();
        prop_assert_eq!(a * rep.x + b * rep.y, t);
    }
}
